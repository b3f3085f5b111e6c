//! Reference data: closed-form angles and expected vertex and face counts
//! for every named tiling.

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

use crate::algsolve::{isolate_roots, snub_pentagon_sextic, AngleAssignment};
use crate::vertexcomb::Arrangement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Platonic,
    Archimedean,
    Johnson,
    Prism,
    Antiprism,
    Hosohedron,
    Dihedron,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Platonic => "platonic",
            Kind::Archimedean => "archimedean",
            Kind::Johnson => "johnson",
            Kind::Prism => "prism",
            Kind::Antiprism => "antiprism",
            Kind::Hosohedron => "hosohedron",
            Kind::Dihedron => "dihedron",
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "platonic" => Kind::Platonic,
            "archimedean" => Kind::Archimedean,
            "johnson" => Kind::Johnson,
            "prism" => Kind::Prism,
            "antiprism" => Kind::Antiprism,
            "hosohedron" => Kind::Hosohedron,
            "dihedron" => Kind::Dihedron,
            _ => return Err(crate::Error::UnknownName(s.to_string())),
        })
    }
}

/// Expected census of a named tiling.
#[derive(Debug, Clone, Copy)]
pub struct Golden {
    pub name: &'static str,
    pub kind: Kind,
    pub vertices: &'static [(&'static str, usize)],
    pub faces: &'static [(u32, usize)],
}

impl Golden {
    pub fn vertex_types(&self) -> BTreeMap<Arrangement, usize> {
        self.vertices
            .iter()
            .map(|&(a, n)| (a.parse().expect("golden arrangements parse"), n))
            .collect()
    }

    pub fn face_counts(&self) -> BTreeMap<u32, usize> {
        self.faces.iter().copied().collect()
    }
}

macro_rules! golden {
    ($name:literal, $kind:ident, [$(($a:literal, $n:expr)),*], [$(($m:expr, $c:expr)),*]) => {
        Golden {
            name: $name,
            kind: Kind::$kind,
            vertices: &[$(($a, $n)),*],
            faces: &[$(($m, $c)),*],
        }
    };
}

pub const NAMED: &[Golden] = &[
    golden!("T", Platonic, [("3.3.3", 4)], [(3, 4)]),
    golden!("C", Platonic, [("4.4.4", 8)], [(4, 6)]),
    golden!("O", Platonic, [("3.3.3.3", 6)], [(3, 8)]),
    golden!("D", Platonic, [("5.5.5", 20)], [(5, 12)]),
    golden!("I", Platonic, [("3.3.3.3.3", 12)], [(3, 20)]),
    golden!("tT", Archimedean, [("3.6.6", 12)], [(3, 4), (6, 4)]),
    golden!("tC", Archimedean, [("3.8.8", 24)], [(3, 8), (8, 6)]),
    golden!("tO", Archimedean, [("4.6.6", 24)], [(4, 6), (6, 8)]),
    golden!("tD", Archimedean, [("3.10.10", 60)], [(3, 20), (10, 12)]),
    golden!("tI", Archimedean, [("5.6.6", 60)], [(5, 12), (6, 20)]),
    golden!("aC", Archimedean, [("3.4.3.4", 12)], [(3, 8), (4, 6)]),
    golden!("aD", Archimedean, [("3.5.3.5", 30)], [(3, 20), (5, 12)]),
    golden!("sC", Archimedean, [("3.3.3.3.4", 24)], [(3, 32), (4, 6)]),
    golden!("sD", Archimedean, [("3.3.3.3.5", 60)], [(3, 80), (5, 12)]),
    golden!("eC", Archimedean, [("3.4.4.4", 24)], [(3, 8), (4, 18)]),
    golden!(
        "eD",
        Archimedean,
        [("3.4.5.4", 60)],
        [(3, 20), (4, 30), (5, 12)]
    ),
    golden!(
        "bC",
        Archimedean,
        [("4.6.8", 48)],
        [(4, 12), (6, 8), (8, 6)]
    ),
    golden!(
        "bD",
        Archimedean,
        [("4.6.10", 120)],
        [(4, 30), (6, 20), (10, 12)]
    ),
    golden!(
        "J1",
        Johnson,
        [("3.3.4", 4), ("3.3.3.3", 1)],
        [(3, 4), (4, 1)]
    ),
    golden!(
        "J2",
        Johnson,
        [("3.3.5", 5), ("3.3.3.3.3", 1)],
        [(3, 5), (5, 1)]
    ),
    golden!(
        "J3",
        Johnson,
        [("3.4.6", 6), ("3.4.3.4", 3)],
        [(3, 4), (4, 3), (6, 1)]
    ),
    golden!(
        "J4",
        Johnson,
        [("3.4.8", 8), ("3.4.4.4", 4)],
        [(3, 4), (4, 5), (8, 1)]
    ),
    golden!(
        "J5",
        Johnson,
        [("3.4.10", 10), ("3.4.5.4", 5)],
        [(3, 5), (4, 5), (5, 1), (10, 1)]
    ),
    golden!(
        "J6",
        Johnson,
        [("3.5.10", 10), ("3.5.3.5", 10)],
        [(3, 10), (5, 6), (10, 1)]
    ),
    golden!(
        "J11",
        Johnson,
        [("3.3.3.5", 5), ("3.3.3.3.3", 6)],
        [(3, 15), (5, 1)]
    ),
    golden!(
        "J19",
        Johnson,
        [("3.4.4.4", 12), ("4.4.8", 8)],
        [(3, 4), (4, 13), (8, 1)]
    ),
    golden!(
        "J27",
        Johnson,
        [("3.3.4.4", 6), ("3.4.3.4", 6)],
        [(3, 8), (4, 6)]
    ),
    golden!(
        "J34",
        Johnson,
        [("3.5.3.5", 20), ("3.3.5.5", 10)],
        [(3, 20), (5, 12)]
    ),
    golden!("J37", Johnson, [("3.4.4.4", 24)], [(3, 8), (4, 18)]),
    golden!(
        "J62",
        Johnson,
        [("3.5.5", 2), ("3.3.3.5", 6), ("3.3.3.3.3", 2)],
        [(3, 10), (5, 2)]
    ),
    golden!(
        "J63",
        Johnson,
        [("3.5.5", 6), ("3.3.3.5", 3)],
        [(3, 5), (5, 3)]
    ),
    golden!(
        "J72",
        Johnson,
        [("3.4.5.4", 50), ("3.4.4.5", 10)],
        [(3, 20), (4, 30), (5, 12)]
    ),
    golden!(
        "J73",
        Johnson,
        [("3.4.5.4", 40), ("3.4.4.5", 20)],
        [(3, 20), (4, 30), (5, 12)]
    ),
    golden!(
        "J74",
        Johnson,
        [("3.4.5.4", 40), ("3.4.4.5", 20)],
        [(3, 20), (4, 30), (5, 12)]
    ),
    golden!(
        "J75",
        Johnson,
        [("3.4.5.4", 30), ("3.4.4.5", 30)],
        [(3, 20), (4, 30), (5, 12)]
    ),
    golden!(
        "J76",
        Johnson,
        [("3.4.5.4", 45), ("4.5.10", 10)],
        [(3, 15), (4, 25), (5, 11), (10, 1)]
    ),
    golden!(
        "J77",
        Johnson,
        [("3.4.5.4", 35), ("3.4.4.5", 10), ("4.5.10", 10)],
        [(3, 15), (4, 25), (5, 11), (10, 1)]
    ),
    golden!(
        "J78",
        Johnson,
        [("3.4.5.4", 35), ("3.4.4.5", 10), ("4.5.10", 10)],
        [(3, 15), (4, 25), (5, 11), (10, 1)]
    ),
    golden!(
        "J79",
        Johnson,
        [("3.4.5.4", 25), ("3.4.4.5", 20), ("4.5.10", 10)],
        [(3, 15), (4, 25), (5, 11), (10, 1)]
    ),
    golden!(
        "J80",
        Johnson,
        [("3.4.5.4", 30), ("4.5.10", 20)],
        [(3, 10), (4, 20), (5, 10), (10, 2)]
    ),
    golden!(
        "J81",
        Johnson,
        [("3.4.5.4", 30), ("4.5.10", 20)],
        [(3, 10), (4, 20), (5, 10), (10, 2)]
    ),
    golden!(
        "J82",
        Johnson,
        [("3.4.5.4", 20), ("3.4.4.5", 10), ("4.5.10", 20)],
        [(3, 10), (4, 20), (5, 10), (10, 2)]
    ),
    golden!(
        "J83",
        Johnson,
        [("3.4.5.4", 15), ("4.5.10", 30)],
        [(3, 5), (4, 15), (5, 9), (10, 3)]
    ),
];

pub fn named(name: &str) -> Option<&'static Golden> {
    NAMED.iter().find(|g| g.name == name)
}

fn s2() -> f64 {
    2f64.sqrt()
}

fn s5() -> f64 {
    5f64.sqrt()
}

fn acot(x: f64) -> f64 {
    (1.0 / x).atan()
}

/// Cosine of the snub dodecahedral triangle angle: the sextic root in (0.4, 0.5).
pub fn snub_dodecahedral_xi() -> f64 {
    isolate_roots(&snub_pentagon_sextic(), 0.4, 0.5)[0]
}

fn truncated(small: u32, a: f64, big: u32, x: f64) -> AngleAssignment {
    AngleAssignment::new([(small, a), (big, PI - a / 2.0)], x)
}

fn ed_base() -> (f64, f64, f64, f64) {
    let s = s5();
    (
        ((5.0 + 2.0 * s) / 20.0).acos(),
        ((2.0 * s - 5.0) / 10.0).acos(),
        ((5.0 - 9.0 * s) / 40.0).acos(),
        ((19.0 + 8.0 * s) / 41.0).acos(),
    )
}

fn ec_base() -> (f64, f64, f64) {
    let a4 = 2.0 * (7.0 - 4.0 * s2()).sqrt().atan();
    (TAU - 3.0 * a4, a4, ((7.0 + 4.0 * s2()) / 17.0).acos())
}

fn ac_base() -> (f64, f64) {
    let a3 = (1.0f64 / 3.0).acos();
    (a3, PI - a3)
}

fn ad_base() -> (f64, f64) {
    let a3 = (1.0 / s5()).acos();
    (a3, PI - a3)
}

/// Closed-form angle assignment of a named tiling, independent of the solver.
pub fn closed_form(name: &str) -> Option<AngleAssignment> {
    let s5 = s5();
    let s2 = s2();
    let s33 = 33f64.sqrt();
    let a = match name {
        "T" => AngleAssignment::new([(3, TAU / 3.0)], (-1.0f64 / 3.0).acos()),
        "C" => AngleAssignment::new([(4, TAU / 3.0)], (1.0f64 / 3.0).acos()),
        "D" => AngleAssignment::new([(5, TAU / 3.0)], (s5 / 3.0).acos()),
        "O" => AngleAssignment::new([(3, PI / 2.0)], PI / 2.0),
        "J1" => AngleAssignment::new([(3, PI / 2.0), (4, PI)], PI / 2.0),
        "I" => AngleAssignment::new([(3, TAU / 5.0)], (1.0 / s5).acos()),
        "J11" | "J62" | "J63" => {
            AngleAssignment::new([(3, TAU / 5.0), (5, 2.0 * TAU / 5.0)], (1.0 / s5).acos())
        }
        "J2" => AngleAssignment::new([(3, TAU / 5.0), (5, 3.0 * TAU / 5.0)], (1.0 / s5).acos()),
        "tT" => truncated(3, 4.0 * acot(11f64.sqrt()), 6, (7.0f64 / 11.0).acos()),
        "tC" => truncated(
            3,
            4.0 * acot((7.0 + 4.0 * s2).sqrt()),
            8,
            ((3.0 + 8.0 * s2) / 17.0).acos(),
        ),
        "tO" => truncated(4, 4.0 * acot(5f64.sqrt()), 6, 0.8f64.acos()),
        "tD" => truncated(
            3,
            4.0 * acot((9.0 + 2.0 * s5).sqrt()),
            10,
            ((24.0 + 15.0 * s5) / 61.0).acos(),
        ),
        "tI" => truncated(
            5,
            4.0 * ((17.0 + 6.0 * s5) / 109.0).sqrt().atan(),
            6,
            ((80.0 + 9.0 * s5) / 109.0).acos(),
        ),
        "sC" => {
            let c = |v: f64| v.cbrt();
            let a3 = 2.0
                * acot(
                    (19.0 / 21.0
                        + c(4528.0 - 336.0 * s33) / 21.0
                        + 2.0 * c(566.0 + 42.0 * s33) / 21.0)
                        .sqrt(),
                );
            let x = ((-1.0 + c(566.0 - 42.0 * s33) + c(566.0 + 42.0 * s33)) / 21.0).acos();
            AngleAssignment::new([(3, a3), (4, TAU - 4.0 * a3)], x)
        }
        "sD" => {
            let xi = snub_dodecahedral_xi();
            let a3 = xi.acos();
            AngleAssignment::new([(3, a3), (5, TAU - 4.0 * a3)], (xi / (1.0 - xi)).acos())
        }
        "aC" | "J27" => {
            let (a3, a4) = ac_base();
            AngleAssignment::new([(3, a3), (4, a4)], PI / 3.0)
        }
        "J3" => {
            let (a3, a4) = ac_base();
            AngleAssignment::new([(3, a3), (4, a4), (6, PI)], PI / 3.0)
        }
        "aD" | "J34" => {
            let (a3, a5) = ad_base();
            AngleAssignment::new([(3, a3), (5, a5)], PI / 5.0)
        }
        "J6" => {
            let (a3, a5) = ad_base();
            AngleAssignment::new([(3, a3), (5, a5), (10, PI)], PI / 5.0)
        }
        "bC" => AngleAssignment::new(
            [
                (4, ((s2 - 2.0) / 12.0).acos()),
                (6, ((s2 - 6.0) / 8.0).acos()),
                (8, (-(6.0 * s2 + 1.0) / 12.0).acos()),
            ],
            ((71.0 + 12.0 * s2) / 97.0).acos(),
        ),
        "bD" => AngleAssignment::new(
            [
                (4, ((2.0 * s5 - 5.0) / 30.0).acos()),
                (6, ((2.0 * s5 - 15.0) / 20.0).acos()),
                (10, (-(9.0 + 5.0 * s5) / 24.0).acos()),
            ],
            ((179.0 + 24.0 * s5) / 241.0).acos(),
        ),
        "eC" | "J37" => {
            let (a3, a4, x) = ec_base();
            AngleAssignment::new([(3, a3), (4, a4)], x)
        }
        "J4" => {
            let (a3, a4, x) = ec_base();
            AngleAssignment::new([(3, a3), (4, a4), (8, 2.0 * a4)], x)
        }
        "J19" => {
            let (a3, a4, x) = ec_base();
            AngleAssignment::new([(3, a3), (4, a4), (8, TAU - 2.0 * a4)], x)
        }
        "eD" | "J72" | "J73" | "J74" | "J75" => {
            let (a3, a4, a5, x) = ed_base();
            AngleAssignment::new([(3, a3), (4, a4), (5, a5)], x)
        }
        "J5" => {
            let (a3, a4, a5, x) = ed_base();
            AngleAssignment::new([(3, a3), (4, a4), (5, a5), (10, TAU - a3 - a4)], x)
        }
        "J76" | "J77" | "J78" | "J79" | "J80" | "J81" | "J82" | "J83" => {
            let (a3, a4, a5, x) = ed_base();
            AngleAssignment::new([(3, a3), (4, a4), (5, a5), (10, TAU - a4 - a5)], x)
        }
        _ => return None,
    };
    Some(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_named_entry_has_angles() {
        assert_eq!(NAMED.len(), 43);
        for g in NAMED {
            let a = closed_form(g.name).unwrap();
            let sizes: Vec<u32> = a.sizes().collect();
            let faces: Vec<u32> = g.faces.iter().map(|f| f.0).collect();
            assert_eq!(sizes, faces, "{}", g.name);
            assert!(
                a.consistency_residual() < 1e-12,
                "{}: {}",
                g.name,
                a.consistency_residual()
            );
        }
    }

    #[test]
    fn golden_vertex_sums_close() {
        for g in NAMED {
            let a = closed_form(g.name).unwrap();
            for (arr, _) in g.vertex_types() {
                let s = a.angle_sum(arr.cycle()).unwrap();
                assert!((s - TAU).abs() < 1e-12, "{} {arr}: {s}", g.name);
            }
        }
    }

    #[test]
    fn golden_counts_are_euler() {
        for g in NAMED {
            let v: usize = g.vertices.iter().map(|x| x.1).sum();
            let f: usize = g.faces.iter().map(|x| x.1).sum();
            let darts: usize = g.faces.iter().map(|&(m, c)| m as usize * c).sum();
            assert_eq!(v + f, darts / 2 + 2, "{}", g.name);
        }
    }

    #[test]
    fn snub_xi_value() {
        assert!((snub_dodecahedral_xi() - 0.47157563).abs() < 1e-8);
    }
}
