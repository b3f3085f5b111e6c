//! Combinatorial maps of spherical tilings.
//!
//! A tiling is stored as a set of darts (directed edge sides). Each dart
//! belongs to one face, `next` walks around that face, and `pair` is the
//! dart on the other side of the same edge running the opposite way. The
//! faces are oriented consistently, so `next ∘ pair` rotates around a vertex.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::f64::consts::PI;
use std::fmt;

use crate::algsolve::AngleAssignment;
use crate::error::{Error, Result};
use crate::sphkernel::polygon_area;
use crate::vertexcomb::{Arrangement, VertexType};

const TAU: f64 = 2.0 * PI;

/// Families whose members are exempt from the degree and face-size bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Generic,
    /// Digons between two antipodal vertices.
    Hosohedron,
    /// Two hemispheres sharing one great circle of degree-2 vertices.
    Dihedron,
}

#[derive(Debug, Clone)]
pub struct TilingMap {
    faces: Vec<Vec<usize>>,
    num_vertices: usize,
    dart_face: Vec<usize>,
    origin: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    pair: Vec<usize>,
    family: Family,
    face_start: Vec<usize>,
    vertex_dart: Vec<usize>,
}

impl PartialEq for TilingMap {
    fn eq(&self, other: &Self) -> bool {
        self.faces == other.faces && self.pair == other.pair
    }
}

impl TilingMap {
    /// Builds a map from vertex cycles, reorienting faces as needed so that
    /// every edge is traversed once in each direction.
    ///
    /// A list made only of digons on one vertex pair is read as a hosohedron
    /// with its faces in cyclic order.
    pub fn build_from_faces(faces: Vec<Vec<usize>>) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::MalformedFace("no faces".into()));
        }
        if faces.iter().any(|f| f.len() == 2) {
            return Self::digon_fan(faces);
        }
        for f in &faces {
            if f.len() < 3 {
                return Err(Error::MalformedFace(format!(
                    "face {f:?} has fewer than 3 sides"
                )));
            }
            let mut s = f.clone();
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedFace(format!("face {f:?} repeats a vertex")));
            }
        }
        let num_vertices = faces.iter().flatten().max().map_or(0, |&v| v + 1);
        let mut used = vec![false; num_vertices];
        faces.iter().flatten().for_each(|&v| used[v] = true);
        if used.iter().any(|u| !u) {
            return Err(Error::Disconnected);
        }

        // each undirected edge with the (face, position) sides using it
        let mut sides: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        for (fi, f) in faces.iter().enumerate() {
            for i in 0..f.len() {
                let (u, v) = (f[i], f[(i + 1) % f.len()]);
                sides.entry((u.min(v), u.max(v))).or_default().push((fi, i));
            }
        }
        let mut bad: Vec<_> = sides.iter().filter(|(_, s)| s.len() != 2).collect();
        bad.sort();
        if let Some((&(u, v), s)) = bad.first() {
            return Err(Error::NotEdgeToEdge(u, v, s.len()));
        }

        let forward = |fi: usize, i: usize| {
            let f = &faces[fi];
            f[i] < f[(i + 1) % f.len()]
        };
        let mut adjacency: Vec<Vec<(usize, bool)>> = vec![Vec::new(); faces.len()];
        for s in sides.values() {
            let (f, i) = s[0];
            let (g, j) = s[1];
            // true when both sides run the same way, so exactly one must flip
            let same = forward(f, i) == forward(g, j);
            adjacency[f].push((g, same));
            adjacency[g].push((f, same));
        }
        let mut flip: Vec<Option<bool>> = vec![None; faces.len()];
        flip[0] = Some(false);
        let mut queue = VecDeque::from([0]);
        while let Some(f) = queue.pop_front() {
            let ff = flip[f].expect("queued faces are oriented");
            for &(g, same) in &adjacency[f] {
                let want = ff ^ same;
                match flip[g] {
                    None => {
                        flip[g] = Some(want);
                        queue.push_back(g);
                    }
                    Some(x) if x != want => return Err(Error::NonOrientable),
                    Some(_) => {}
                }
            }
        }
        if flip.iter().any(Option::is_none) {
            return Err(Error::Disconnected);
        }
        let oriented: Vec<Vec<usize>> = faces
            .into_iter()
            .zip(flip)
            .map(|(mut f, fl)| {
                if fl == Some(true) {
                    f.reverse();
                }
                f
            })
            .collect();
        Self::from_oriented(oriented, num_vertices)
    }

    /// Faces already oriented; pairs darts by their endpoints.
    fn from_oriented(faces: Vec<Vec<usize>>, num_vertices: usize) -> Result<Self> {
        let mut map = Self::darts_of(faces, num_vertices);
        let mut by_ends: HashMap<(usize, usize), usize> = HashMap::with_capacity(map.origin.len());
        for d in 0..map.origin.len() {
            by_ends.insert((map.origin[d], map.target(d)), d);
        }
        for d in 0..map.origin.len() {
            let key = (map.target(d), map.origin[d]);
            map.pair[d] = *by_ends.get(&key).ok_or(Error::NonOrientable)?;
        }
        map.finish()
    }

    fn darts_of(faces: Vec<Vec<usize>>, num_vertices: usize) -> Self {
        let total: usize = faces.iter().map(Vec::len).sum();
        let mut map = Self {
            faces: Vec::new(),
            num_vertices,
            dart_face: Vec::with_capacity(total),
            origin: Vec::with_capacity(total),
            next: Vec::with_capacity(total),
            prev: Vec::with_capacity(total),
            pair: vec![usize::MAX; total],
            family: Family::Generic,
            face_start: Vec::with_capacity(faces.len()),
            vertex_dart: vec![usize::MAX; num_vertices],
        };
        let mut start = 0;
        for (fi, f) in faces.iter().enumerate() {
            let k = f.len();
            map.face_start.push(start);
            for (i, &v) in f.iter().enumerate() {
                if map.vertex_dart[v] == usize::MAX {
                    map.vertex_dart[v] = start + i;
                }
                map.dart_face.push(fi);
                map.origin.push(v);
                map.next.push(start + (i + 1) % k);
                map.prev.push(start + (i + k - 1) % k);
            }
            start += k;
        }
        map.faces = faces;
        map
    }

    /// Checks that every vertex is a single disk and classifies the family.
    fn finish(mut self) -> Result<Self> {
        let degrees = self.degrees();
        for v in 0..self.num_vertices {
            let d0 = self.dart_at(v);
            let mut d = d0;
            let mut n = 0;
            loop {
                n += 1;
                d = self.rotate(d);
                if d == d0 || n > degrees[v] {
                    break;
                }
            }
            if n != degrees[v] {
                return Err(Error::NonManifold(v));
            }
        }
        if self.faces.len() == 2 && degrees.iter().all(|&k| k == 2) {
            self.family = Family::Dihedron;
        } else if let Some(v) = degrees.iter().position(|&k| k < 3) {
            return Err(Error::MalformedFace(format!(
                "vertex {v} has degree {}",
                degrees[v]
            )));
        }
        Ok(self)
    }

    /// Digon faces: only a fan of digons on one vertex pair is a tiling.
    fn digon_fan(faces: Vec<Vec<usize>>) -> Result<Self> {
        let poles = {
            let f = &faces[0];
            (f[0].min(f[1]), f[0].max(f[1]))
        };
        for f in &faces {
            if f.len() != 2 || (f[0].min(f[1]), f[0].max(f[1])) != poles || f[0] == f[1] {
                return Err(Error::MalformedFace(
                    "digons only tile as a fan between two antipodal vertices".into(),
                ));
            }
        }
        if poles != (0, 1) {
            return Err(Error::MalformedFace(
                "hosohedron vertices must be 0 and 1".into(),
            ));
        }
        Self::hosohedron(faces.len())
    }

    /// `n` digons between vertices 0 and 1, face `k` next to face `k + 1`.
    pub fn hosohedron(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!(
                "hosohedron needs at least 2 digons, got {n}"
            )));
        }
        let faces = vec![vec![0, 1]; n];
        let mut map = Self::darts_of(faces, 2);
        for k in 0..n {
            let fwd = 2 * k;
            let back = 2 * ((k + 1) % n) + 1;
            map.pair[fwd] = back;
            map.pair[back] = fwd;
        }
        map.family = Family::Hosohedron;
        Ok(map)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    pub fn face_size(&self, f: usize) -> u32 {
        self.faces[f].len() as u32
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn num_darts(&self) -> usize {
        self.origin.len()
    }

    pub fn origin(&self, d: usize) -> usize {
        self.origin[d]
    }

    pub fn target(&self, d: usize) -> usize {
        self.origin[self.next[d]]
    }

    pub fn next(&self, d: usize) -> usize {
        self.next[d]
    }

    pub fn prev(&self, d: usize) -> usize {
        self.prev[d]
    }

    pub fn pair(&self, d: usize) -> usize {
        self.pair[d]
    }

    pub fn dart_face(&self, d: usize) -> usize {
        self.dart_face[d]
    }

    /// Next dart out of the same vertex.
    pub fn rotate(&self, d: usize) -> usize {
        self.next[self.pair[d]]
    }

    /// Some dart leaving `v`.
    pub fn dart_at(&self, v: usize) -> usize {
        self.vertex_dart[v]
    }

    /// Darts leaving `v` in rotation order.
    pub fn darts_around(&self, v: usize) -> Vec<usize> {
        let d0 = self.dart_at(v);
        let mut out = vec![d0];
        let mut d = self.rotate(d0);
        while d != d0 {
            out.push(d);
            d = self.rotate(d);
        }
        out
    }

    /// Dart of face `f` starting at position `i` of its cycle.
    pub fn face_dart(&self, f: usize, i: usize) -> usize {
        self.face_start[f] + i
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        self.origin.iter().for_each(|&v| deg[v] += 1);
        deg
    }

    /// Index of the undirected edge of each dart; edges are numbered by
    /// their first dart.
    pub fn edge_ids(&self) -> Vec<usize> {
        let mut ids = vec![usize::MAX; self.origin.len()];
        let mut next_id = 0;
        for d in 0..self.origin.len() {
            if ids[d] == usize::MAX {
                ids[d] = next_id;
                ids[self.pair[d]] = next_id;
                next_id += 1;
            }
        }
        ids
    }

    /// One representative dart per undirected edge, in edge-id order.
    pub fn edge_darts(&self) -> Vec<usize> {
        (0..self.origin.len())
            .filter(|&d| d < self.pair[d])
            .collect()
    }

    /// Faces sharing an edge with `f`, one entry per shared edge.
    pub fn face_neighbors(&self, f: usize) -> Vec<usize> {
        let start = self.face_dart(f, 0);
        (start..start + self.faces[f].len())
            .map(|d| self.dart_face[self.pair[d]])
            .collect()
    }

    /// Face sizes around `v` in rotation order.
    pub fn vertex_cycle(&self, v: usize) -> Vec<u32> {
        self.darts_around(v)
            .into_iter()
            .map(|d| self.face_size(self.dart_face[d]))
            .collect()
    }

    pub fn arrangement(&self, v: usize) -> Arrangement {
        Arrangement::new(self.vertex_cycle(v))
    }

    pub fn vertex_type(&self, v: usize) -> VertexType {
        VertexType::new(self.vertex_cycle(v))
    }

    /// Vertices adjacent to `v`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.darts_around(v)
            .into_iter()
            .map(|d| self.target(d))
            .collect()
    }

    /// Breadth-first distances in the vertex graph.
    pub fn vertex_distances(&self, from: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.num_vertices];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Breadth-first distances in the dual graph.
    pub fn face_distances(&self, from: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.faces.len()];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(f) = queue.pop_front() {
            for g in self.face_neighbors(f) {
                if dist[g] == usize::MAX {
                    dist[g] = dist[f] + 1;
                    queue.push_back(g);
                }
            }
        }
        dist
    }

    /// True when removing any single vertex leaves the rest connected.
    pub fn is_two_connected(&self) -> bool {
        if self.family != Family::Generic {
            return true;
        }
        let adj: Vec<Vec<usize>> = (0..self.num_vertices).map(|v| self.neighbors(v)).collect();
        (0..self.num_vertices).all(|cut| {
            let start = usize::from(cut == 0);
            let mut seen = vec![false; self.num_vertices];
            seen[cut] = true;
            seen[start] = true;
            let mut stack = vec![start];
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            count == self.num_vertices - 1
        })
    }
}

/// Vertex and face statistics of a tiling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub vertex_types: BTreeMap<Arrangement, usize>,
    pub face_counts: BTreeMap<u32, usize>,
    pub v: usize,
    pub e: usize,
    pub f: usize,
}

impl Census {
    /// Counts per vertex type, merging arrangements.
    pub fn type_counts(&self) -> BTreeMap<VertexType, usize> {
        let mut out = BTreeMap::new();
        for (a, &n) in &self.vertex_types {
            *out.entry(a.vertex_type()).or_insert(0) += n;
        }
        out
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={} e={} f={}; faces", self.v, self.e, self.f)?;
        for (m, n) in &self.face_counts {
            write!(f, " f{m}={n}")?;
        }
        write!(f, "; vertices")?;
        for (a, n) in &self.vertex_types {
            write!(f, " {n}x{a}")?;
        }
        Ok(())
    }
}

pub fn census(t: &TilingMap) -> Census {
    let mut vertex_types = BTreeMap::new();
    for v in 0..t.num_vertices() {
        *vertex_types.entry(t.arrangement(v)).or_insert(0) += 1;
    }
    let mut face_counts = BTreeMap::new();
    for f in 0..t.num_faces() {
        *face_counts.entry(t.face_size(f)).or_insert(0) += 1;
    }
    Census {
        vertex_types,
        face_counts,
        v: t.num_vertices(),
        e: t.num_edges(),
        f: t.num_faces(),
    }
}

/// Tolerances for [`validate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub angle: f64,
    pub area: f64,
}

impl Tolerance {
    /// Angle tolerance `tol`, area tolerance `10·tol`.
    pub fn uniform(tol: f64) -> Self {
        Self {
            angle: tol,
            area: 10.0 * tol,
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::uniform(1e-9)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub residual: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

fn count_check(name: &'static str, residual: i64, detail: String) -> Check {
    Check {
        name,
        passed: residual == 0,
        residual: residual.unsigned_abs() as f64,
        detail,
    }
}

/// Runs every combinatorial and metric identity a tiling must satisfy.
pub fn validate(t: &TilingMap, assign: &AngleAssignment, tol: Tolerance) -> ValidationReport {
    let c = census(t);
    let (v, e, f) = (c.v as i64, c.e as i64, c.f as i64);
    let degrees = t.degrees();
    let exempt = t.family() != Family::Generic;
    let mut checks = Vec::new();

    checks.push(count_check(
        "euler",
        v - e + f - 2,
        format!("v - e + f = {}", v - e + f),
    ));
    let sum_k: i64 = degrees.iter().map(|&k| k as i64).sum();
    checks.push(count_check(
        "dehn_sommerville_vertices",
        2 * e - sum_k,
        format!("2e = {}, sum k*v_k = {sum_k}", 2 * e),
    ));
    let sum_m: i64 = c
        .face_counts
        .iter()
        .map(|(&m, &n)| m as i64 * n as i64)
        .sum();
    checks.push(count_check(
        "dehn_sommerville_faces",
        2 * e - sum_m,
        format!("2e = {}, sum m*f_m = {sum_m}", 2 * e),
    ));

    let missing: Vec<u32> = c
        .face_counts
        .keys()
        .copied()
        .filter(|&m| assign.get(m).is_none())
        .collect();
    checks.push(Check {
        name: "coverage",
        passed: missing.is_empty(),
        residual: missing.len() as f64,
        detail: if missing.is_empty() {
            "every face size has an angle".into()
        } else {
            format!("no angle for sizes {missing:?}")
        },
    });

    let used: Vec<u32> = c.face_counts.keys().copied().collect();
    let companion = assign.restrict(&used).consistency_residual();
    checks.push(Check {
        name: "companion",
        passed: companion <= tol.angle,
        residual: companion,
        detail: format!("edge x = {:.17e}", assign.edge()),
    });

    let mut worst = 0.0f64;
    let mut worst_vertex = 0;
    for vtx in 0..t.num_vertices() {
        let sum: f64 = t
            .vertex_cycle(vtx)
            .iter()
            .map(|&m| assign.get(m).unwrap_or(f64::NAN))
            .sum();
        let r = (sum - TAU).abs();
        if !(r <= worst) {
            worst = r;
            worst_vertex = vtx;
        }
    }
    checks.push(Check {
        name: "angle_sums",
        passed: worst <= tol.angle,
        residual: worst,
        detail: format!("worst at vertex {worst_vertex}"),
    });

    let area: f64 = (0..t.num_faces())
        .map(|fi| {
            let m = t.face_size(fi);
            polygon_area(m, assign.get(m).unwrap_or(f64::NAN))
        })
        .sum();
    let area_res = (area - 4.0 * PI).abs();
    checks.push(Check {
        name: "area",
        passed: area_res <= tol.area,
        residual: area_res,
        detail: format!("total area {area:.17e}"),
    });

    let bad_degrees = degrees.iter().filter(|&&k| !(3..=5).contains(&k)).count();
    checks.push(Check {
        name: "degrees",
        passed: exempt || bad_degrees == 0,
        residual: if exempt { 0.0 } else { bad_degrees as f64 },
        detail: format!(
            "degrees {:?}",
            degrees
                .iter()
                .copied()
                .collect::<std::collections::BTreeSet<_>>()
        ),
    });

    let inadmissible: Vec<String> = c
        .type_counts()
        .keys()
        .filter(|vt| !vt.is_admissible())
        .map(ToString::to_string)
        .collect();
    checks.push(Check {
        name: "vertex_types",
        passed: exempt || inadmissible.is_empty(),
        residual: if exempt {
            0.0
        } else {
            inadmissible.len() as f64
        },
        detail: if inadmissible.is_empty() {
            "all vertex types admissible".into()
        } else {
            format!("inadmissible: {}", inadmissible.join(", "))
        },
    });

    let has_small = c.face_counts.keys().any(|m| (3..=5).contains(m));
    let triangle_free_ok = c.face_counts.contains_key(&3) || degrees.contains(&3);
    checks.push(Check {
        name: "small_face",
        passed: exempt || (has_small && triangle_free_ok),
        residual: 0.0,
        detail: format!("face sizes {:?}", used),
    });

    let concave = (0..t.num_faces())
        .filter(|&fi| {
            assign
                .get(t.face_size(fi))
                .is_some_and(|a| a >= PI - tol.angle)
        })
        .count();
    checks.push(Check {
        name: "concave_faces",
        passed: exempt || concave <= 1,
        residual: concave as f64,
        detail: format!("{concave} faces with angle at least π"),
    });

    checks.push(Check {
        name: "two_connected",
        passed: t.is_two_connected(),
        residual: 0.0,
        detail: String::new(),
    });

    ValidationReport { checks }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// One angle arrangement at every vertex.
    Strong,
    /// One vertex type, several arrangements.
    WeakOnly,
    None,
}

pub fn homogeneity(t: &TilingMap) -> Homogeneity {
    let c = census(t);
    if c.vertex_types.len() == 1 {
        Homogeneity::Strong
    } else if c.type_counts().len() == 1 {
        Homogeneity::WeakOnly
    } else {
        Homogeneity::None
    }
}

/// Code of the map traversed breadth-first from `root`, using `succ` as the
/// face successor. Returns `None` as soon as the code exceeds `best`.
fn rooted_code(
    t: &TilingMap,
    succ: &[usize],
    root: usize,
    best: Option<&[u32]>,
) -> Option<Vec<u32>> {
    let n = t.num_darts();
    let mut label = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[root] = 0;
    order.push(root);
    let mut code = Vec::with_capacity(3 * n);
    let mut head = 0;
    let mut less = false;
    while head < order.len() {
        let d = order[head];
        head += 1;
        let mut entry = [0u32; 3];
        for (slot, e) in [succ[d], t.pair[d]].into_iter().enumerate() {
            if label[e] == u32::MAX {
                label[e] = order.len() as u32;
                order.push(e);
            }
            entry[slot] = label[e];
        }
        entry[2] = t.face_size(t.dart_face[d]);
        for x in entry {
            if let (false, Some(b)) = (less, best) {
                let pos = code.len();
                match x.cmp(&b[pos]) {
                    std::cmp::Ordering::Greater => return None,
                    std::cmp::Ordering::Less => less = true,
                    std::cmp::Ordering::Equal => {}
                }
            }
            code.push(x);
        }
    }
    Some(code)
}

/// Canonical form of a map up to relabeling and reflection: the least
/// rooted traversal code over every root dart and both orientations.
pub fn canonical_code(t: &TilingMap) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for succ in [&t.next, &t.prev] {
        for root in 0..t.num_darts() {
            if let Some(code) = rooted_code(t, succ, root, best.as_deref()) {
                best = Some(code);
            }
        }
    }
    best.unwrap_or_default()
}

/// Isomorphism of maps preserving face sizes, reflections allowed.
pub fn isomorphic(a: &TilingMap, b: &TilingMap) -> bool {
    a.num_darts() == b.num_darts()
        && a.num_vertices() == b.num_vertices()
        && a.num_faces() == b.num_faces()
        && census(a) == census(b)
        && canonical_code(a) == canonical_code(b)
}
