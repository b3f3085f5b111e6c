//! Named edge-to-edge tilings of the sphere by regular polygons and the
//! infinite families, each built from smaller ones by structural operators.

pub mod build;
pub mod golden;
pub mod ops;
pub mod recipes;

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

use crate::algsolve::{unique_assignment, AngleAssignment};
use crate::error::{Error, Result};
use crate::tilemap::{census, Census, TilingMap};
use crate::vertexcomb::{Arrangement, VertexType};

pub use golden::{closed_form, Golden, Kind, NAMED};
pub use recipes::{Recipe, Relation};

/// Family sizes listed by default.
pub const FAMILY_RANGE: std::ops::RangeInclusive<usize> = 3..=12;

/// A built tiling with its angles and the counts it is expected to have.
#[derive(Debug, Clone)]
pub struct CatalogTiling {
    pub name: String,
    pub kind: Kind,
    pub map: TilingMap,
    pub assignment: AngleAssignment,
    pub expected_vertices: BTreeMap<Arrangement, usize>,
    pub expected_faces: BTreeMap<u32, usize>,
}

impl CatalogTiling {
    pub fn census(&self) -> Census {
        census(&self.map)
    }

    pub fn census_matches(&self) -> bool {
        let c = self.census();
        c.vertex_types == self.expected_vertices && c.face_counts == self.expected_faces
    }
}

/// Names of all 43 named tilings in catalog order.
pub fn named_names() -> Vec<&'static str> {
    NAMED.iter().map(|g| g.name).collect()
}

/// Named tilings followed by the families over [`FAMILY_RANGE`], optionally
/// restricted to one kind.
pub fn list(kind: Option<Kind>) -> Vec<String> {
    let mut out: Vec<String> = NAMED
        .iter()
        .filter(|g| kind.map_or(true, |k| g.kind == k))
        .map(|g| g.name.to_string())
        .collect();
    for k in [
        Kind::Prism,
        Kind::Antiprism,
        Kind::Hosohedron,
        Kind::Dihedron,
    ] {
        if kind.map_or(true, |want| want == k) {
            out.extend(FAMILY_RANGE.map(|n| format!("{}({n})", k.as_str())));
        }
    }
    out
}

/// Splits `"prism(5)"` into its family and size.
pub fn parse_family(name: &str) -> Option<(Kind, usize)> {
    let (head, rest) = name.split_once('(')?;
    let n = rest.strip_suffix(')')?.trim().parse().ok()?;
    let kind = match head.trim() {
        "prism" => Kind::Prism,
        "antiprism" => Kind::Antiprism,
        "hosohedron" => Kind::Hosohedron,
        "dihedron" => Kind::Dihedron,
        _ => return None,
    };
    Some((kind, n))
}

fn counts<K: Ord>(items: impl IntoIterator<Item = (K, usize)>) -> BTreeMap<K, usize> {
    let mut out = BTreeMap::new();
    for (k, n) in items {
        *out.entry(k).or_insert(0) += n;
    }
    out
}

fn family(kind: Kind, n: usize) -> Result<CatalogTiling> {
    let m = n as u32;
    let arr = |c: Vec<u32>| Arrangement::new(c);
    let (map, assignment, vertices, faces) = match kind {
        Kind::Prism => (
            build::prism(n)?,
            unique_assignment(&VertexType::new(vec![4, 4, m]))?,
            counts([(arr(vec![4, 4, m]), 2 * n)]),
            counts([(4, n), (m, 2)]),
        ),
        Kind::Antiprism => (
            build::antiprism(n)?,
            unique_assignment(&VertexType::new(vec![3, 3, 3, m]))?,
            counts([(arr(vec![3, 3, 3, m]), 2 * n)]),
            counts([(3, 2 * n), (m, 2)]),
        ),
        Kind::Hosohedron => (
            build::hosohedron(n)?,
            AngleAssignment::new([(2, TAU / n as f64)], PI),
            counts([(arr(vec![2; n]), 2)]),
            counts([(2, n)]),
        ),
        Kind::Dihedron => (
            build::dihedron(n)?,
            AngleAssignment::new([(m, PI)], TAU / n as f64),
            counts([(arr(vec![m, m]), n)]),
            counts([(m, 2)]),
        ),
        _ => return Err(Error::UnknownName(format!("{kind:?}({n})"))),
    };
    Ok(CatalogTiling {
        name: format!("{}({n})", kind.as_str()),
        kind,
        map,
        assignment,
        expected_vertices: vertices,
        expected_faces: faces,
    })
}

fn face_of_size(t: &TilingMap, m: u32) -> Result<usize> {
    (0..t.num_faces())
        .find(|&f| t.face_size(f) == m)
        .ok_or_else(|| Error::PreconditionFailed(format!("no {m}-gon")))
}

fn assignment(name: &str) -> AngleAssignment {
    closed_form(name).expect("every named tiling has closed-form angles")
}

/// Deletes vertices, highest id first so the others keep their ids.
fn delete_vertices(t: &TilingMap, vs: &[usize]) -> Result<TilingMap> {
    let mut vs = vs.to_vec();
    vs.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = t.clone();
    for v in vs {
        out = ops::delete_vertex(&out, v)?;
    }
    Ok(out)
}

/// Up to three icosahedral vertices, pairwise at distance two.
fn spread_vertices(t: &TilingMap, k: usize) -> Vec<usize> {
    let mut chosen = vec![0];
    while chosen.len() < k {
        let dists: Vec<Vec<usize>> = chosen.iter().map(|&v| t.vertex_distances(v)).collect();
        let next = (0..t.num_vertices())
            .find(|&w| dists.iter().all(|d| d[w] == 2))
            .expect("icosahedron has room for three");
        chosen.push(next);
    }
    chosen
}

fn first_site(t: &TilingMap) -> Result<ops::CupolaSite> {
    ops::cupola_sites(t)
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidSite("no cupola".into()))
}

fn equator(t: &TilingMap) -> Result<Vec<usize>> {
    ops::straight_cycle(t, 0)
}

/// Builds the map of a named tiling from smaller ones.
pub fn construct(name: &str) -> Result<TilingMap> {
    match name {
        "T" => build::pyramid(3),
        "C" => build::prism(4),
        "O" => build::antiprism(3),
        "I" => {
            let a = assignment("J11");
            let ap = build::antiprism(5)?;
            let once = ops::pyramid_subdivide(&ap, &a, face_of_size(&ap, 5)?)?;
            ops::pyramid_subdivide(&once, &a, face_of_size(&once, 5)?)
        }
        "D" => ops::dual(&construct("I")?),
        "tT" | "tC" | "tO" | "tD" | "tI" => ops::truncation(&construct(&name[1..])?),
        "aC" | "aD" => ops::ambo(&construct(&name[1..])?),
        "eC" | "eD" => ops::expand(&construct(&name[1..])?),
        "sC" | "sD" => ops::snub(&construct(&name[1..])?),
        "bC" => ops::truncation(&construct("aC")?),
        "bD" => ops::truncation(&construct("aD")?),
        "J1" => ops::delete_vertex(&construct("O")?, 0),
        "J2" => build::pyramid(5),
        "J3" | "J27" => {
            let ac = construct("aC")?;
            let site = first_site(&ac)?;
            if name == "J3" {
                ops::diminish_cupola(&ac, &site)
            } else {
                ops::rotate_cupola(&ac, &site)
            }
        }
        "J4" => build::cupola(4),
        "J5" => build::cupola(5),
        "J6" | "J34" => {
            let ad = construct("aD")?;
            let cycle = equator(&ad)?;
            if name == "J6" {
                ops::remove_hemisphere(&ad, &cycle)
            } else {
                ops::rotate_hemisphere(&ad, &cycle, 1)
            }
        }
        "J11" | "J62" | "J63" => {
            let i = construct("I")?;
            let k = match name {
                "J11" => 1,
                "J62" => 2,
                _ => 3,
            };
            delete_vertices(&i, &spread_vertices(&i, k))
        }
        "J19" | "J37" => {
            let ec = construct("eC")?;
            let site = ops::cupola_sites(&ec)
                .into_iter()
                .find(|s| s.cap.len() == 4)
                .ok_or_else(|| Error::InvalidSite("no square cupola".into()))?;
            if name == "J19" {
                ops::diminish_cupola(&ec, &site)
            } else {
                ops::rotate_cupola(&ec, &site)
            }
        }
        _ => match Recipe::for_name(name) {
            Some(r) => recipes::apply(&construct("eD")?, &r),
            None => Err(Error::UnknownName(name.to_string())),
        },
    }
}

/// Builds any catalog tiling by name: one of the 43 named tilings or a
/// family member such as `prism(7)`.
pub fn make(name: &str) -> Result<CatalogTiling> {
    if let Some((kind, n)) = parse_family(name) {
        return family(kind, n);
    }
    let g = golden::named(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    Ok(CatalogTiling {
        name: g.name.to_string(),
        kind: g.kind,
        map: construct(name)?,
        assignment: assignment(name),
        expected_vertices: g.vertex_types(),
        expected_faces: g.face_counts(),
    })
}

/// Applies a cupola recipe to the expanded dodecahedral tiling.
pub fn derive_from_ed(recipe: &Recipe) -> Result<CatalogTiling> {
    let mut t = make(recipe.name())?;
    t.map = recipes::apply(&construct("eD")?, recipe)?;
    Ok(t)
}
