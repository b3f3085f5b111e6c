//! Places a tiling on the unit sphere face by face and measures the result.
//!
//! Each face is a regular polygon fixed by its centre and one edge, so the
//! whole embedding follows from the first face by a breadth-first walk over
//! the dual graph. Positions met twice give the closure error.

use std::collections::{BTreeMap, VecDeque};
use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algsolve::AngleAssignment;
use crate::error::{Error, Result};
use crate::sphkernel;
use crate::tilemap::{Family, TilingMap};

pub type Vec3 = [f64; 3];

fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn scale(a: Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

fn normalize(a: Vec3) -> Vec3 {
    scale(a, 1.0 / norm(a))
}

/// Great-circle distance between unit vectors.
pub fn arc(a: Vec3, b: Vec3) -> f64 {
    norm(cross(a, b)).atan2(dot(a, b))
}

/// Rotation of `v` about the unit axis `k` by `theta` (Rodrigues).
fn rotate(v: Vec3, k: Vec3, theta: f64) -> Vec3 {
    let (s, c) = theta.sin_cos();
    add(
        add(scale(v, c), scale(cross(k, v), s)),
        scale(k, dot(k, v) * (1.0 - c)),
    )
}

/// Unit tangent at `p` pointing along the great circle towards `q`.
fn tangent(p: Vec3, q: Vec3) -> Vec3 {
    normalize(sub(q, scale(p, dot(p, q))))
}

/// Spherical interpolation between unit vectors at most `π` apart.
fn slerp(a: Vec3, b: Vec3, t: f64) -> Vec3 {
    let omega = arc(a, b);
    if omega < 1e-15 {
        return a;
    }
    let s = omega.sin();
    add(
        scale(a, ((1.0 - t) * omega).sin() / s),
        scale(b, (t * omega).sin() / s),
    )
}

/// Vertex positions on the unit sphere and one midpoint per edge.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    pub positions: Vec<Vec3>,
    /// Indexed by edge id, as in [`TilingMap::edge_ids`].
    pub edge_midpoints: Vec<Vec3>,
    /// Largest distance between two placements of the same vertex.
    pub closure_error: f64,
}

/// Closure errors above this mean the angles do not fit the map.
pub const CLOSURE_TOL: f64 = 1e-7;

/// Embeds the map with the given angles, failing with
/// [`Error::ClosureFailure`] when the faces do not close up.
pub fn embed(t: &TilingMap, assign: &AngleAssignment) -> Result<Embedding> {
    let e = embed_unchecked(t, assign)?;
    if !(e.closure_error <= CLOSURE_TOL) {
        return Err(Error::ClosureFailure(e.closure_error));
    }
    Ok(e)
}

/// Embeds the map and reports the closure error without judging it.
pub fn embed_unchecked(t: &TilingMap, assign: &AngleAssignment) -> Result<Embedding> {
    if t.family() == Family::Hosohedron {
        return Ok(hosohedron(t));
    }
    let mut radius = BTreeMap::new();
    for f in 0..t.num_faces() {
        let m = t.face_size(f);
        if let std::collections::btree_map::Entry::Vacant(e) = radius.entry(m) {
            e.insert(sphkernel::circumradius(m, assign.angle(m)?)?);
        }
    }
    let x = assign.edge();
    let mut pos: Vec<Option<Vec3>> = vec![None; t.num_vertices()];
    let mut centre: Vec<Option<Vec3>> = vec![None; t.num_faces()];
    let mut worst: f64 = 0.0;

    let mut place =
        |f: usize, k: usize, start: Vec3, c: Vec3, step: f64, pos: &mut Vec<Option<Vec3>>| {
            let cycle = t.face(f);
            let n = cycle.len();
            let mut p = start;
            for i in 0..n {
                let v = cycle[(k + i) % n];
                match pos[v] {
                    Some(q) => worst = worst.max(norm(sub(p, q))),
                    None => pos[v] = Some(p),
                }
                p = rotate(p, c, step);
            }
        };

    let m0 = t.face_size(0);
    let r0 = radius[&m0];
    let north = [0.0, 0.0, 1.0];
    let first = [r0.sin(), 0.0, r0.cos()];
    place(0, 0, first, north, TAU / m0 as f64, &mut pos);
    centre[0] = Some(north);

    let mut queue = VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        let cf = centre[f].expect("queued faces are placed");
        let start = t.face_dart(f, 0);
        for d in start..start + t.face(f).len() {
            let p = t.pair(d);
            let g = t.dart_face(p);
            if centre[g].is_some() {
                continue;
            }
            let a = pos[t.origin(d)].expect("vertices of placed faces are placed");
            let b = pos[t.target(d)].expect("vertices of placed faces are placed");
            let mg = t.face_size(g);
            let rg = radius[&mg];
            let mid = normalize(add(a, b));
            let mut out = normalize(cross(mid, sub(a, b)));
            if dot(out, cf) > 0.0 {
                out = scale(out, -1.0);
            }
            let h = (rg.cos() / (x / 2.0).cos()).clamp(-1.0, 1.0).acos();
            let cg = add(scale(mid, h.cos()), scale(out, h.sin()));
            // g runs target(d) -> origin(d); pick the turn that maps one to the other
            let step = TAU / mg as f64;
            let step = if norm(sub(rotate(b, cg, step), a)) < norm(sub(rotate(b, cg, -step), a)) {
                step
            } else {
                -step
            };
            let k = p - t.face_dart(g, 0);
            place(g, k, b, cg, step, &mut pos);
            centre[g] = Some(cg);
            queue.push_back(g);
        }
    }
    // every face again, against the settled positions
    for f in 0..t.num_faces() {
        let c = centre[f].expect("connected map");
        let m = t.face_size(f);
        let cycle = t.face(f);
        let p0 = pos[cycle[0]].expect("placed");
        let p1 = pos[cycle[1]].expect("placed");
        let step = TAU / m as f64;
        let step = if norm(sub(rotate(p0, c, step), p1)) < norm(sub(rotate(p0, c, -step), p1)) {
            step
        } else {
            -step
        };
        place(f, 0, p0, c, step, &mut pos);
    }
    let positions: Vec<Vec3> = pos.into_iter().map(|p| p.expect("placed")).collect();
    let edge_midpoints = t
        .edge_darts()
        .into_iter()
        .map(|d| normalize(add(positions[t.origin(d)], positions[t.target(d)])))
        .collect();
    Ok(Embedding {
        positions,
        edge_midpoints,
        closure_error: worst,
    })
}

/// Poles at `±z`, edges along meridians.
fn hosohedron(t: &TilingMap) -> Embedding {
    let n = t.num_faces();
    let ids = t.edge_ids();
    let mut mids = vec![[0.0; 3]; t.num_edges()];
    // face k lies between the edges of darts 2k and 2k + 1
    for k in 0..n {
        let phi = -TAU * k as f64 / n as f64;
        mids[ids[2 * k]] = [phi.cos(), phi.sin(), 0.0];
    }
    let north = if t.origin(0) == 0 { 1.0 } else { -1.0 };
    Embedding {
        positions: vec![[0.0, 0.0, north], [0.0, 0.0, -north]],
        edge_midpoints: mids,
        closure_error: 0.0,
    }
}

/// Measured quantities of an embedding.
#[derive(Debug, Clone, PartialEq)]
pub struct Metrics {
    /// One per edge, by edge id.
    pub edge_lengths: Vec<f64>,
    /// One per dart: the angle of the face at the dart's origin.
    pub corner_angles: Vec<f64>,
    /// Spherical excess of each face from its measured angles.
    pub face_areas: Vec<f64>,
}

impl Metrics {
    pub fn total_area(&self) -> f64 {
        self.face_areas.iter().sum()
    }
}

pub fn metrics(t: &TilingMap, e: &Embedding) -> Metrics {
    let ids = t.edge_ids();
    let edge_lengths = t
        .edge_darts()
        .into_iter()
        .map(|d| {
            let mid = e.edge_midpoints[ids[d]];
            arc(e.positions[t.origin(d)], mid) + arc(mid, e.positions[t.target(d)])
        })
        .collect();
    let corner_angles: Vec<f64> = (0..t.num_darts())
        .map(|d| {
            let v = e.positions[t.origin(d)];
            let forward = tangent(v, e.edge_midpoints[ids[d]]);
            let back = tangent(v, e.edge_midpoints[ids[t.prev(d)]]);
            let a = dot(v, cross(forward, back)).atan2(dot(forward, back));
            a.rem_euclid(TAU)
        })
        .collect();
    let face_areas = (0..t.num_faces())
        .map(|f| {
            let s = t.face_dart(f, 0);
            let m = t.face(f).len();
            corner_angles[s..s + m].iter().sum::<f64>() - (m as f64 - 2.0) * PI
        })
        .collect();
    Metrics {
        edge_lengths,
        corner_angles,
        face_areas,
    }
}

/// Wavefront OBJ: vertices, then each edge as a polyline of `arc_steps`
/// great-circle segments, then optionally the faces.
pub fn export_obj(t: &TilingMap, e: &Embedding, arc_steps: usize, with_faces: bool) -> String {
    let steps = arc_steps.max(1);
    let mut out = String::new();
    let fmt_v = |out: &mut String, p: Vec3| {
        writeln!(out, "v {:.12} {:.12} {:.12}", p[0], p[1], p[2]).expect("string write");
    };
    for &p in &e.positions {
        fmt_v(&mut out, p);
    }
    let mut next = e.positions.len() + 1;
    let ids = t.edge_ids();
    for d in t.edge_darts() {
        let (a, b) = (e.positions[t.origin(d)], e.positions[t.target(d)]);
        let mid = e.edge_midpoints[ids[d]];
        let mut chain = vec![t.origin(d) + 1];
        for i in 1..steps {
            let s = i as f64 / steps as f64;
            let p = if s <= 0.5 {
                slerp(a, mid, 2.0 * s)
            } else {
                slerp(mid, b, 2.0 * s - 1.0)
            };
            fmt_v(&mut out, p);
            chain.push(next);
            next += 1;
        }
        chain.push(t.target(d) + 1);
        for w in chain.windows(2) {
            writeln!(out, "l {} {}", w[0], w[1]).expect("string write");
        }
    }
    if with_faces {
        for f in t.faces() {
            let idx: Vec<String> = f.iter().map(|v| (v + 1).to_string()).collect();
            writeln!(out, "f {}", idx.join(" ")).expect("string write");
        }
    }
    out
}

fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_float(s: &str) -> Result<f64> {
    s.parse()
        .map_err(|_| Error::Format(format!("bad number {s:?}")))
}

/// Serialized tiling: faces, angles and edge as exact decimal strings,
/// and optionally vertex positions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TilingFile {
    pub name: String,
    pub faces: Vec<Vec<usize>>,
    pub angles: BTreeMap<u32, String>,
    pub edge: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positions: Option<Vec<[String; 3]>>,
}

pub fn export_json(
    name: &str,
    t: &TilingMap,
    assign: &AngleAssignment,
    e: Option<&Embedding>,
) -> Result<String> {
    let file = TilingFile {
        name: name.to_string(),
        faces: t.faces().to_vec(),
        angles: assign.iter().map(|(m, a)| (m, float(a))).collect(),
        edge: float(assign.edge()),
        positions: e.map(|e| {
            e.positions
                .iter()
                .map(|p| [float(p[0]), float(p[1]), float(p[2])])
                .collect()
        }),
    };
    serde_json::to_string_pretty(&file).map_err(|err| Error::Format(err.to_string()))
}

/// Reads a file written by [`export_json`], rebuilding and rechecking the map.
pub fn import_json(text: &str) -> Result<(String, TilingMap, AngleAssignment)> {
    let file: TilingFile =
        serde_json::from_str(text).map_err(|err| Error::Format(err.to_string()))?;
    let map = TilingMap::build_from_faces(file.faces)?;
    let angles = file
        .angles
        .iter()
        .map(|(&m, s)| Ok((m, parse_float(s)?)))
        .collect::<Result<Vec<_>>>()?;
    let assign = AngleAssignment::new(angles, parse_float(&file.edge)?);
    Ok((file.name, map, assign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, closed_form};

    fn cube() -> (TilingMap, AngleAssignment) {
        (build::prism(4).unwrap(), closed_form("C").unwrap())
    }

    #[test]
    fn cube_embeds_with_right_edges() {
        let (t, a) = cube();
        let e = embed(&t, &a).unwrap();
        assert!(e.closure_error < 1e-12);
        let m = metrics(&t, &e);
        for l in &m.edge_lengths {
            assert!((l - a.edge()).abs() < 1e-12);
        }
        for c in &m.corner_angles {
            assert!((c - TAU / 3.0).abs() < 1e-12);
        }
        assert!((m.total_area() - 4.0 * PI).abs() < 1e-10);
    }

    #[test]
    fn wrong_angles_do_not_close() {
        let t = build::prism(5).unwrap();
        let a = closed_form("C").unwrap();
        let bad = AngleAssignment::new([(4, a.angle(4).unwrap()), (5, 0.7 * PI)], a.edge());
        assert!(matches!(embed(&t, &bad), Err(Error::ClosureFailure(_))));
    }

    #[test]
    fn hosohedron_lunes() {
        let t = build::hosohedron(5).unwrap();
        let a = AngleAssignment::new([(2, TAU / 5.0)], PI);
        let e = embed(&t, &a).unwrap();
        let m = metrics(&t, &e);
        for c in &m.corner_angles {
            assert!((c - TAU / 5.0).abs() < 1e-12, "{c}");
        }
        for l in &m.edge_lengths {
            assert!((l - PI).abs() < 1e-12);
        }
    }

    #[test]
    fn dihedron_hemispheres() {
        let t = build::dihedron(6).unwrap();
        let a = AngleAssignment::new([(6, PI)], TAU / 6.0);
        let e = embed(&t, &a).unwrap();
        let m = metrics(&t, &e);
        for area in &m.face_areas {
            assert!((area - TAU).abs() < 1e-10);
        }
    }

    #[test]
    fn json_roundtrip_is_exact() {
        let (t, a) = cube();
        let e = embed(&t, &a).unwrap();
        let text = export_json("C", &t, &a, Some(&e)).unwrap();
        let (name, t2, a2) = import_json(&text).unwrap();
        assert_eq!(name, "C");
        assert_eq!(t2, t);
        assert_eq!(a2, a);
        assert!(import_json("{}").is_err());
    }

    #[test]
    fn obj_has_arcs() {
        let (t, a) = cube();
        let e = embed(&t, &a).unwrap();
        let obj = export_obj(&t, &e, 4, true);
        assert_eq!(
            obj.lines().filter(|l| l.starts_with("v ")).count(),
            8 + 12 * 3
        );
        assert_eq!(obj.lines().filter(|l| l.starts_with("l ")).count(), 12 * 4);
        assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 6);
    }
}
