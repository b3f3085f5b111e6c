//! Structural operators on tilings.
//!
//! Every operator works on face lists and rebuilds the map, so the result
//! is re-checked for being edge-to-edge and orientable. Operators that
//! remove vertices renumber the survivors in their original order.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::algsolve::AngleAssignment;
use crate::error::{Error, Result};
use crate::tilemap::{Family, TilingMap};

/// Tolerance for the angle preconditions of the subdivisions.
pub const SUBDIVISION_TOL: f64 = 1e-9;

/// Drops unused vertex ids, keeping the relative order of the rest.
fn compact(faces: Vec<Vec<usize>>) -> Result<TilingMap> {
    let used: BTreeSet<usize> = faces.iter().flatten().copied().collect();
    let index: HashMap<usize, usize> = used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    TilingMap::build_from_faces(
        faces
            .into_iter()
            .map(|f| f.into_iter().map(|v| index[&v]).collect())
            .collect(),
    )
}

fn require_generic(t: &TilingMap, op: &str) -> Result<()> {
    if t.family() != Family::Generic {
        return Err(Error::PreconditionFailed(format!(
            "{op} does not apply to hosohedra or dihedra"
        )));
    }
    Ok(())
}

fn require_face(t: &TilingMap, face: usize) -> Result<()> {
    if face >= t.num_faces() {
        return Err(Error::PreconditionFailed(format!("no face {face}")));
    }
    Ok(())
}

fn angle_condition(assign: &AngleAssignment, m: u32, parts: &[u32], what: &str) -> Result<()> {
    let am = assign
        .get(m)
        .ok_or_else(|| Error::PreconditionFailed(format!("no angle for {m}-gons")))?;
    let sum: f64 = parts
        .iter()
        .map(|&p| {
            assign
                .get(p)
                .ok_or_else(|| Error::PreconditionFailed(format!("no angle for {p}-gons")))
        })
        .sum::<Result<f64>>()?;
    if (am - sum).abs() > SUBDIVISION_TOL {
        return Err(Error::PreconditionFailed(format!(
            "{what} needs α{m} = {sum}, found {am}"
        )));
    }
    Ok(())
}

fn other_faces(t: &TilingMap, skip: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    (0..t.num_faces())
        .filter(|f| !skip.contains(f))
        .map(|f| t.face(f).to_vec())
        .collect()
}

/// Replaces an `m`-gon with `α_m = 2α_3` by `m` triangles around a new vertex.
pub fn pyramid_subdivide(
    t: &TilingMap,
    assign: &AngleAssignment,
    face: usize,
) -> Result<TilingMap> {
    require_generic(t, "pyramid subdivision")?;
    require_face(t, face)?;
    let m = t.face_size(face);
    angle_condition(assign, m, &[3, 3], "pyramid subdivision")?;
    let apex = t.num_vertices();
    let cycle = t.face(face);
    let mut faces = other_faces(t, &BTreeSet::from([face]));
    for i in 0..cycle.len() {
        faces.push(vec![cycle[i], cycle[(i + 1) % cycle.len()], apex]);
    }
    TilingMap::build_from_faces(faces)
}

/// Adds a cupola inside an even `m`-gon with `α_m = α_3 + α_4`; triangles
/// go on edges `2j + parity` of the face cycle.
pub fn cupola_subdivide(
    t: &TilingMap,
    assign: &AngleAssignment,
    face: usize,
    parity: usize,
) -> Result<TilingMap> {
    require_generic(t, "cupola subdivision")?;
    require_face(t, face)?;
    let m = t.face_size(face);
    if m % 2 != 0 || m < 6 {
        return Err(Error::PreconditionFailed(format!(
            "cupola subdivision needs an even face of size at least 6, got {m}"
        )));
    }
    angle_condition(assign, m, &[3, 4], "cupola subdivision")?;
    let k = m as usize / 2;
    let base = t.num_vertices();
    let b: Vec<usize> = {
        let c = t.face(face);
        (0..c.len())
            .map(|i| c[(i + parity % 2) % c.len()])
            .collect()
    };
    let cap: Vec<usize> = (0..k).map(|j| base + j).collect();
    let mut faces = other_faces(t, &BTreeSet::from([face]));
    faces.push(cap.clone());
    for j in 0..k {
        let jn = (j + 1) % k;
        faces.push(vec![b[2 * j], b[2 * j + 1], cap[j]]);
        faces.push(vec![
            b[2 * j + 1],
            b[(2 * j + 2) % (2 * k)],
            cap[jn],
            cap[j],
        ]);
    }
    TilingMap::build_from_faces(faces)
}

/// Lines a concave `m`-gon with `α_m = 2α_4` with a ring of squares.
pub fn prism_subdivide(t: &TilingMap, assign: &AngleAssignment, face: usize) -> Result<TilingMap> {
    require_generic(t, "prism subdivision")?;
    require_face(t, face)?;
    let m = t.face_size(face);
    angle_condition(assign, m, &[4, 4], "prism subdivision")?;
    let base = t.num_vertices();
    let cycle = t.face(face).to_vec();
    let n = cycle.len();
    let inner: Vec<usize> = (0..n).map(|i| base + i).collect();
    let mut faces = other_faces(t, &BTreeSet::from([face]));
    faces.push(inner.clone());
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![cycle[i], cycle[j], inner[j], inner[i]]);
    }
    TilingMap::build_from_faces(faces)
}

/// Contracts each listed face to a single vertex. All their vertices must
/// have degree 3 and the faces must be pairwise vertex-disjoint.
pub fn shrink_all(t: &TilingMap, faces: &[usize]) -> Result<TilingMap> {
    require_generic(t, "shrinking")?;
    let degrees = t.degrees();
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (i, &f) in faces.iter().enumerate() {
        require_face(t, f)?;
        for &v in t.face(f) {
            if degrees[v] != 3 {
                return Err(Error::PreconditionFailed(format!(
                    "vertex {v} of face {f} has degree {}",
                    degrees[v]
                )));
            }
            if owner.insert(v, t.num_vertices() + i).is_some() {
                return Err(Error::PreconditionFailed(
                    "shrunk faces must be disjoint".into(),
                ));
            }
        }
    }
    let skip: BTreeSet<usize> = faces.iter().copied().collect();
    let mut out = Vec::new();
    for cycle in other_faces(t, &skip) {
        let mapped: Vec<usize> = cycle.iter().map(|v| *owner.get(v).unwrap_or(v)).collect();
        let n = mapped.len();
        let reduced: Vec<usize> = (0..n)
            .filter(|&i| mapped[i] != mapped[(i + n - 1) % n])
            .map(|i| mapped[i])
            .collect();
        if reduced.len() < 3 {
            return Err(Error::PreconditionFailed(format!(
                "shrinking collapses face {cycle:?}"
            )));
        }
        out.push(reduced);
    }
    compact(out)
}

pub fn shrink(t: &TilingMap, face: usize) -> Result<TilingMap> {
    shrink_all(t, &[face])
}

/// Replaces each listed vertex of degree `k` by a `k`-gon.
pub fn truncate_all(t: &TilingMap, vertices: &[usize]) -> Result<TilingMap> {
    require_generic(t, "truncation")?;
    let cut: BTreeSet<usize> = vertices.iter().copied().collect();
    if let Some(&v) = cut.iter().find(|&&v| v >= t.num_vertices()) {
        return Err(Error::PreconditionFailed(format!("no vertex {v}")));
    }
    // one new vertex per (truncated vertex, neighbour) pair
    let mut ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut fresh = t.num_vertices();
    let mut id = |v: usize, w: usize, ids: &mut BTreeMap<(usize, usize), usize>| {
        *ids.entry((v, w)).or_insert_with(|| {
            fresh += 1;
            fresh - 1
        })
    };
    let mut faces = Vec::new();
    for f in t.faces() {
        let n = f.len();
        let mut cycle = Vec::with_capacity(2 * n);
        for i in 0..n {
            let v = f[i];
            if cut.contains(&v) {
                cycle.push(id(v, f[(i + n - 1) % n], &mut ids));
                cycle.push(id(v, f[(i + 1) % n], &mut ids));
            } else {
                cycle.push(v);
            }
        }
        faces.push(cycle);
    }
    for &v in &cut {
        faces.push(
            t.darts_around(v)
                .into_iter()
                .map(|d| id(v, t.target(d), &mut ids))
                .collect(),
        );
    }
    compact(faces)
}

pub fn truncate(t: &TilingMap, vertex: usize) -> Result<TilingMap> {
    truncate_all(t, &[vertex])
}

/// Truncates every vertex.
pub fn truncation(t: &TilingMap) -> Result<TilingMap> {
    let all: Vec<usize> = (0..t.num_vertices()).collect();
    truncate_all(t, &all)
}

/// Removes a vertex whose incident faces are all triangles, merging them
/// into one face (the inverse of a pyramid subdivision).
pub fn delete_vertex(t: &TilingMap, v: usize) -> Result<TilingMap> {
    require_generic(t, "vertex deletion")?;
    if v >= t.num_vertices() {
        return Err(Error::PreconditionFailed(format!("no vertex {v}")));
    }
    let darts = t.darts_around(v);
    if darts.iter().any(|&d| t.face_size(t.dart_face(d)) != 3) {
        return Err(Error::PreconditionFailed(format!(
            "vertex {v} is not surrounded by triangles"
        )));
    }
    let skip: BTreeSet<usize> = darts.iter().map(|&d| t.dart_face(d)).collect();
    let mut faces = other_faces(t, &skip);
    faces.push(darts.iter().map(|&d| t.target(d)).collect());
    compact(faces)
}

/// Dual map: one vertex per face, one face per vertex.
pub fn dual(t: &TilingMap) -> Result<TilingMap> {
    TilingMap::build_from_faces(
        (0..t.num_vertices())
            .map(|v| {
                t.darts_around(v)
                    .into_iter()
                    .map(|d| t.dart_face(d))
                    .collect()
            })
            .collect(),
    )
}

/// Rectification: vertices at edge midpoints.
pub fn ambo(t: &TilingMap) -> Result<TilingMap> {
    let edge = t.edge_ids();
    let mut faces: Vec<Vec<usize>> = (0..t.num_faces())
        .map(|f| {
            let start = t.face_dart(f, 0);
            (start..start + t.face(f).len()).map(|d| edge[d]).collect()
        })
        .collect();
    for v in 0..t.num_vertices() {
        faces.push(t.darts_around(v).into_iter().map(|d| edge[d]).collect());
    }
    TilingMap::build_from_faces(faces)
}

/// Expansion: faces pulled apart, with a polygon per vertex and a square per edge.
fn expanded_faces(t: &TilingMap) -> (Vec<Vec<usize>>, Vec<[usize; 4]>) {
    let mut faces: Vec<Vec<usize>> = (0..t.num_faces())
        .map(|f| {
            let start = t.face_dart(f, 0);
            (start..start + t.face(f).len()).collect()
        })
        .collect();
    for v in 0..t.num_vertices() {
        faces.push(t.darts_around(v));
    }
    let quads = t
        .edge_darts()
        .into_iter()
        .map(|d| {
            let p = t.pair(d);
            [d, t.next(d), p, t.next(p)]
        })
        .collect();
    (faces, quads)
}

pub fn expand(t: &TilingMap) -> Result<TilingMap> {
    let (mut faces, quads) = expanded_faces(t);
    faces.extend(quads.iter().map(|q| q.to_vec()));
    TilingMap::build_from_faces(faces)
}

/// Snub: the expansion with every edge square split into two triangles
/// along the same-handed diagonal.
pub fn snub(t: &TilingMap) -> Result<TilingMap> {
    let (mut faces, quads) = expanded_faces(t);
    for [a, b, c, d] in quads {
        faces.push(vec![a, b, c]);
        faces.push(vec![a, c, d]);
    }
    TilingMap::build_from_faces(faces)
}

/// A cupola: a cap face ringed alternately by squares on its edges and
/// triangles at its corners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CupolaSite {
    /// Vertex cycle of the cap face.
    pub cap: Vec<usize>,
    /// Boundary cycle separating the cupola from the rest of the tiling.
    pub boundary: Vec<usize>,
    /// Faces of the cupola, cap first.
    pub faces: Vec<usize>,
}

impl CupolaSite {
    pub fn cap_face(&self) -> usize {
        self.faces[0]
    }
}

/// Checks that `cap` is the cap of a cupola and returns its site.
pub fn cupola_site(t: &TilingMap, cap: usize) -> Result<CupolaSite> {
    require_face(t, cap)?;
    let invalid = |why: String| Error::InvalidSite(format!("face {cap}: {why}"));
    let k = t.face(cap).len();
    if !(3..=5).contains(&k) {
        return Err(invalid(format!("cap has {k} sides")));
    }
    let start = t.face_dart(cap, 0);
    let mut faces = vec![cap];
    for d in start..start + k {
        let v = t.origin(d);
        let around = t.darts_around(v);
        if around.len() != 4 {
            return Err(invalid(format!(
                "cap vertex {v} has degree {}",
                around.len()
            )));
        }
        let i = around.iter().position(|&e| e == d).expect("dart leaves v");
        let sizes: Vec<u32> = (0..4)
            .map(|j| t.face_size(t.dart_face(around[(i + j) % 4])))
            .collect();
        if sizes[1] != 4 || sizes[2] != 3 || sizes[3] != 4 {
            return Err(invalid(format!(
                "faces around cap vertex {v} are {sizes:?}"
            )));
        }
        faces.push(t.dart_face(around[(i + 1) % 4]));
        faces.push(t.dart_face(around[(i + 2) % 4]));
    }
    let set: BTreeSet<usize> = faces.iter().copied().collect();
    if set.len() != 2 * k + 1 {
        return Err(invalid("cupola faces overlap".into()));
    }
    let cap_vertices: BTreeSet<usize> = t.face(cap).iter().copied().collect();
    // boundary darts: sides of cupola faces whose other side is outside
    let mut succ: HashMap<usize, usize> = HashMap::new();
    for &f in &faces {
        let s = t.face_dart(f, 0);
        for d in s..s + t.face(f).len() {
            if !set.contains(&t.dart_face(t.pair(d))) {
                if succ.insert(t.origin(d), t.target(d)).is_some() {
                    return Err(invalid("boundary is not a simple cycle".into()));
                }
            }
        }
    }
    if succ.len() != 2 * k || succ.keys().any(|v| cap_vertices.contains(v)) {
        return Err(invalid("boundary is not a simple cycle".into()));
    }
    let first = *succ.keys().min().expect("non-empty boundary");
    let mut boundary = vec![first];
    let mut v = succ[&first];
    while v != first {
        if boundary.len() > 2 * k {
            return Err(invalid("boundary is not a simple cycle".into()));
        }
        boundary.push(v);
        v = succ[&v];
    }
    if boundary.len() != 2 * k {
        return Err(invalid("boundary is not a simple cycle".into()));
    }
    Ok(CupolaSite {
        cap: t.face(cap).to_vec(),
        boundary,
        faces,
    })
}

/// Every valid cupola in the tiling, by cap face index.
pub fn cupola_sites(t: &TilingMap) -> Vec<CupolaSite> {
    (0..t.num_faces())
        .filter_map(|f| cupola_site(t, f).ok())
        .collect()
}

/// Locates the site whose cap has exactly these vertices.
pub fn site_with_cap(t: &TilingMap, cap: &[usize]) -> Result<CupolaSite> {
    let want: BTreeSet<usize> = cap.iter().copied().collect();
    let face = (0..t.num_faces())
        .find(|&f| t.face(f).iter().copied().collect::<BTreeSet<_>>() == want)
        .ok_or_else(|| Error::InvalidSite(format!("no face with vertices {cap:?}")))?;
    cupola_site(t, face)
}

fn revalidate(t: &TilingMap, site: &CupolaSite) -> Result<CupolaSite> {
    let found = site_with_cap(t, &site.cap)?;
    if found.faces.iter().collect::<BTreeSet<_>>() != site.faces.iter().collect::<BTreeSet<_>>() {
        return Err(Error::InvalidSite(
            "site does not belong to this tiling".into(),
        ));
    }
    Ok(found)
}

fn disjoint(sites: &[CupolaSite]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for s in sites {
        for &f in &s.faces {
            if !seen.insert(f) {
                return Err(Error::InvalidSite("cupolas overlap".into()));
            }
        }
    }
    Ok(())
}

/// Turns each cupola by one boundary step (`π/k` for a `k`-gonal cap).
pub fn rotate_cupolas(t: &TilingMap, sites: &[CupolaSite]) -> Result<TilingMap> {
    let sites: Vec<CupolaSite> = sites
        .iter()
        .map(|s| revalidate(t, s))
        .collect::<Result<_>>()?;
    disjoint(&sites)?;
    let mut shift: HashMap<usize, usize> = HashMap::new();
    let mut skip = BTreeSet::new();
    for s in &sites {
        let n = s.boundary.len();
        for i in 0..n {
            shift.insert(s.boundary[i], s.boundary[(i + 1) % n]);
        }
        skip.extend(s.faces.iter().copied());
    }
    let mut faces = other_faces(t, &skip);
    for s in &sites {
        for &f in &s.faces {
            faces.push(
                t.face(f)
                    .iter()
                    .map(|v| *shift.get(v).unwrap_or(v))
                    .collect(),
            );
        }
    }
    TilingMap::build_from_faces(faces)
}

pub fn rotate_cupola(t: &TilingMap, site: &CupolaSite) -> Result<TilingMap> {
    rotate_cupolas(t, std::slice::from_ref(site))
}

/// Removes each cupola, leaving its boundary as a single face.
pub fn diminish_cupolas(t: &TilingMap, sites: &[CupolaSite]) -> Result<TilingMap> {
    let sites: Vec<CupolaSite> = sites
        .iter()
        .map(|s| revalidate(t, s))
        .collect::<Result<_>>()?;
    disjoint(&sites)?;
    let skip: BTreeSet<usize> = sites.iter().flat_map(|s| s.faces.iter().copied()).collect();
    let mut faces = other_faces(t, &skip);
    faces.extend(sites.iter().map(|s| s.boundary.clone()));
    compact(faces)
}

pub fn diminish_cupola(t: &TilingMap, site: &CupolaSite) -> Result<TilingMap> {
    diminish_cupolas(t, std::slice::from_ref(site))
}

/// A closed walk that goes straight across every vertex it meets, each of
/// which must have even degree. Starts along `dart`.
pub fn straight_cycle(t: &TilingMap, dart: usize) -> Result<Vec<usize>> {
    let degrees = t.degrees();
    let mut cycle = Vec::new();
    let mut d = dart;
    loop {
        cycle.push(t.origin(d));
        if cycle.len() > t.num_vertices() {
            return Err(Error::PreconditionFailed(
                "straight walk does not close".into(),
            ));
        }
        let w = t.target(d);
        let k = degrees[w];
        if k % 2 != 0 {
            return Err(Error::PreconditionFailed(format!(
                "vertex {w} has odd degree"
            )));
        }
        // from the dart back to where we came from, turn half way round
        let mut e = t.pair(d);
        for _ in 0..k / 2 {
            e = t.rotate(e);
        }
        d = e;
        if d == dart {
            let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
            if distinct.len() != cycle.len() {
                return Err(Error::PreconditionFailed(
                    "straight walk is not simple".into(),
                ));
            }
            return Ok(cycle);
        }
    }
}

/// Splits the faces into the two sides of a simple vertex cycle.
fn sides_of(t: &TilingMap, cycle: &[usize]) -> Result<(BTreeSet<usize>, BTreeSet<usize>)> {
    let n = cycle.len();
    let on_cycle: BTreeSet<(usize, usize)> = (0..n)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % n]);
            (a.min(b), a.max(b))
        })
        .collect();
    let crosses = |d: usize| {
        let (a, b) = (t.origin(d), t.target(d));
        on_cycle.contains(&(a.min(b), a.max(b)))
    };
    let mut side = vec![None; t.num_faces()];
    let mut stack = vec![0usize];
    side[0] = Some(0u8);
    while let Some(f) = stack.pop() {
        let s = t.face_dart(f, 0);
        for d in s..s + t.face(f).len() {
            let g = t.dart_face(t.pair(d));
            let want = side[f].map(|x| if crosses(d) { 1 - x } else { x });
            match side[g] {
                None => {
                    side[g] = want;
                    stack.push(g);
                }
                Some(x) if Some(x) != want => {
                    return Err(Error::PreconditionFailed("cycle does not separate".into()))
                }
                _ => {}
            }
        }
    }
    let a = (0..t.num_faces()).filter(|&f| side[f] == Some(0)).collect();
    let b = (0..t.num_faces()).filter(|&f| side[f] == Some(1)).collect();
    Ok((a, b))
}

/// Rotates the side of `cycle` away from face 0 by `shift` steps along it.
pub fn rotate_hemisphere(t: &TilingMap, cycle: &[usize], shift: usize) -> Result<TilingMap> {
    let (keep, turn) = sides_of(t, cycle)?;
    let n = cycle.len();
    let map: HashMap<usize, usize> = (0..n).map(|i| (cycle[i], cycle[(i + shift) % n])).collect();
    let mut faces = other_faces(t, &turn);
    debug_assert_eq!(faces.len(), keep.len());
    for &f in &turn {
        faces.push(t.face(f).iter().map(|v| *map.get(v).unwrap_or(v)).collect());
    }
    TilingMap::build_from_faces(faces)
}

/// Replaces the side of `cycle` away from face 0 by a single face.
pub fn remove_hemisphere(t: &TilingMap, cycle: &[usize]) -> Result<TilingMap> {
    let (_, drop) = sides_of(t, cycle)?;
    let mut faces = other_faces(t, &drop);
    faces.push(cycle.to_vec());
    compact(faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;
    use crate::tilemap::{census, isomorphic};

    #[test]
    fn shrink_truncate_roundtrip() {
        let c = build::prism(4).unwrap();
        let t = truncate(&c, 0).unwrap();
        assert_eq!(t.num_faces(), 7);
        let tri = (0..t.num_faces()).find(|&f| t.face_size(f) == 3).unwrap();
        let back = shrink(&t, tri).unwrap();
        assert!(isomorphic(&back, &c));
    }

    #[test]
    fn shrink_rejects_high_degree() {
        let o = build::antiprism(3).unwrap();
        assert!(matches!(shrink(&o, 0), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn dual_of_cube_is_octahedron() {
        let c = build::prism(4).unwrap();
        let o = build::antiprism(3).unwrap();
        assert!(isomorphic(&dual(&c).unwrap(), &o));
        assert!(isomorphic(&dual(&dual(&c).unwrap()).unwrap(), &c));
    }

    #[test]
    fn ambo_expand_snub_counts() {
        let c = build::prism(4).unwrap();
        let a = ambo(&c).unwrap();
        assert_eq!((a.num_vertices(), a.num_faces()), (12, 14));
        let e = expand(&c).unwrap();
        assert_eq!((e.num_vertices(), e.num_faces()), (24, 26));
        let s = snub(&c).unwrap();
        assert_eq!((s.num_vertices(), s.num_faces()), (24, 38));
        assert_eq!(census(&s).vertex_types.len(), 1);
    }

    #[test]
    fn cupola_sites_of_cuboctahedron() {
        let a = ambo(&build::prism(4).unwrap()).unwrap();
        let sites = cupola_sites(&a);
        assert_eq!(sites.len(), 8);
        assert!(sites
            .iter()
            .all(|s| s.cap.len() == 3 && s.boundary.len() == 6));
        assert!(matches!(
            cupola_site(&a, sites[0].faces[1]),
            Err(Error::InvalidSite(_))
        ));
    }

    #[test]
    fn delete_requires_triangles() {
        let c = build::prism(4).unwrap();
        assert!(delete_vertex(&c, 0).is_err());
        let o = build::antiprism(3).unwrap();
        let j1 = delete_vertex(&o, 0).unwrap();
        assert!(isomorphic(&j1, &build::pyramid(4).unwrap()));
    }

    #[test]
    fn straight_cycle_needs_even_degree() {
        assert!(straight_cycle(&build::prism(4).unwrap(), 0).is_err());
        let o = build::antiprism(3).unwrap();
        assert_eq!(straight_cycle(&o, 0).unwrap().len(), 4);
    }
}
