//! The polynomial system of the vertex type `3·4²·5` and its reduced
//! Gröbner basis, kept as exact integer data.
//!
//! Variables are `x_i = cos α_i` and `y_i = sin α_i` for `i = 3, 4, 5`. The
//! basis is triangular in `y_4`: its first element is univariate, and the
//! rest recover `y_5`, `x_3`, `x_4`, `x_5` and `y_3` from each root.

use std::f64::consts::PI;

use super::poly::{isolate_roots, Polynomial};

const X3: usize = 0;
const X4: usize = 1;
const X5: usize = 2;
const Y3: usize = 3;
const Y4: usize = 4;
const Y5: usize = 5;

/// A monomial `c · x3^e0 x4^e1 x5^e2 y3^e3 y4^e4 y5^e5`.
pub type Term = (i64, [u8; 6]);

const fn t(c: i64, vars: &[(usize, u8)]) -> Term {
    let mut e = [0u8; 6];
    let mut i = 0;
    while i < vars.len() {
        e[vars[i].0] = vars[i].1;
        i += 1;
    }
    (c, e)
}

/// The trigonometric vertex equations written in cosines and sines, with
/// the unit-circle constraints.
pub const SYSTEM: &[&[Term]] = &[
    &[
        t(2, &[(X4, 2)]),
        t(1, &[(Y3, 1), (Y5, 1)]),
        t(-1, &[(X3, 1), (X5, 1)]),
        t(-1, &[]),
    ],
    &[
        t(2, &[(X4, 1), (Y4, 1)]),
        t(1, &[(X3, 1), (Y5, 1)]),
        t(1, &[(X5, 1), (Y3, 1)]),
    ],
    &[t(2, &[(X3, 1)]), t(-1, &[(X4, 1)]), t(-1, &[])],
    &[
        t(1, &[(X5, 2)]),
        t(1, &[(X3, 2)]),
        t(-3, &[(X3, 1), (X5, 1)]),
        t(1, &[(X5, 1)]),
        t(1, &[(X3, 1)]),
        t(-1, &[]),
    ],
    &[
        t(4, &[(X5, 2)]),
        t(1, &[(X4, 2)]),
        t(-6, &[(X4, 1), (X5, 1)]),
        t(-2, &[(X5, 1)]),
        t(4, &[(X4, 1)]),
        t(-1, &[]),
    ],
    &[t(1, &[(X3, 2)]), t(1, &[(Y3, 2)]), t(-1, &[])],
    &[t(1, &[(X4, 2)]), t(1, &[(Y4, 2)]), t(-1, &[])],
    &[t(1, &[(X5, 2)]), t(1, &[(Y5, 2)]), t(-1, &[])],
];

/// Reduced Gröbner basis of [`SYSTEM`].
pub const BASIS: &[&[Term]] = &[
    &[
        t(1600, &[(Y4, 11)]),
        t(-2960, &[(Y4, 9)]),
        t(1484, &[(Y4, 7)]),
        t(-123, &[(Y4, 5)]),
    ],
    &[
        t(2400, &[(Y4, 10)]),
        t(-3840, &[(Y4, 8)]),
        t(1326, &[(Y4, 6)]),
        t(-160, &[(Y4, 5), (Y5, 1)]),
        t(153, &[(Y4, 4)]),
        t(120, &[(Y4, 3), (Y5, 1)]),
    ],
    &[
        t(-24000, &[(Y4, 10)]),
        t(42000, &[(Y4, 8)]),
        t(-18020, &[(Y4, 6)]),
        t(-1, &[(Y4, 4)]),
        t(-4, &[(Y4, 2)]),
        t(-8, &[(X4, 1)]),
        t(8, &[]),
    ],
    &[
        t(-24000, &[(Y4, 10)]),
        t(42000, &[(Y4, 8)]),
        t(-18020, &[(Y4, 6)]),
        t(-1, &[(Y4, 4)]),
        t(-4, &[(Y4, 2)]),
        t(-16, &[(X3, 1)]),
        t(16, &[]),
    ],
    &[
        t(-4800, &[(Y4, 10)]),
        t(8880, &[(Y4, 8)]),
        t(-4452, &[(Y4, 6)]),
        t(-31, &[(Y4, 4)]),
        t(140, &[(Y4, 2)]),
        t(160, &[(Y4, 1), (Y5, 1)]),
        t(-80, &[(X5, 1)]),
        t(80, &[]),
    ],
    &[
        t(-800, &[(Y4, 9)]),
        t(1440, &[(Y4, 7)]),
        t(-642, &[(Y4, 5)]),
        t(-16, &[(Y4, 4), (Y5, 1)]),
        t(5, &[(Y4, 3)]),
        t(4, &[(Y4, 2), (Y5, 1)]),
        t(2, &[(Y5, 1)]),
        t(4, &[(Y4, 1)]),
        t(2, &[(Y3, 1)]),
    ],
    &[
        t(-4800, &[(Y4, 10)]),
        t(8880, &[(Y4, 8)]),
        t(-3652, &[(Y4, 6)]),
        t(-631, &[(Y4, 4)]),
        t(-480, &[(Y4, 3), (Y5, 1)]),
        t(80, &[(Y5, 2)]),
        t(280, &[(Y4, 2)]),
        t(320, &[(Y4, 1), (Y5, 1)]),
    ],
];

/// Evaluates a polynomial at `[x3, x4, x5, y3, y4, y5]`.
pub fn eval(poly: &[Term], point: &[f64; 6]) -> f64 {
    poly.iter()
        .map(|(c, e)| {
            e.iter()
                .zip(point)
                .fold(*c as f64, |acc, (&k, &v)| acc * v.powi(k as i32))
        })
        .sum()
}

/// Largest absolute value of the given polynomials at `point`.
pub fn max_residual(polys: &[&[Term]], point: &[f64; 6]) -> f64 {
    polys.iter().fold(0.0, |m, p| m.max(eval(p, point).abs()))
}

/// The univariate first basis element as a polynomial in `y_4`.
pub fn univariate() -> Polynomial {
    let terms: Vec<(i64, usize)> = BASIS[0].iter().map(|(c, e)| (*c, e[Y4] as usize)).collect();
    Polynomial::from_terms(&terms)
}

/// A real point of the basis variety, recovered from one root `y_4`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerCandidate {
    pub y4: f64,
    /// `[x3, x4, x5]`
    pub cosines: [f64; 3],
    /// `[y3, y4, y5]`
    pub sines: [f64; 3],
    /// `[α3, α4, α5]` in `[0, 2π)`.
    pub angles: [f64; 3],
    /// `α3 < α4 < α5`
    pub ordered: bool,
    /// `α3 + 2α4 + α5 = 2π`
    pub closes: bool,
    pub basis_residual: f64,
    pub system_residual: f64,
}

impl GroebnerCandidate {
    fn point(&self) -> [f64; 6] {
        let [x3, x4, x5] = self.cosines;
        let [y3, y4, y5] = self.sines;
        [x3, x4, x5, y3, y4, y5]
    }

    pub fn survives(&self) -> bool {
        self.ordered && self.closes
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerReport {
    /// Roots of the univariate basis element in `(0, 1]`.
    pub y4_roots: Vec<f64>,
    pub candidates: Vec<GroebnerCandidate>,
    /// Indices into `candidates` passing both filters.
    pub survivors: Vec<usize>,
}

const CLOSE_TOL: f64 = 1e-9;

fn powers(y: f64) -> impl Fn(i32) -> f64 {
    move |k| y.powi(k)
}

/// Back-substitutes through the basis for one `y_4` value.
fn candidates_for(y: f64) -> Vec<GroebnerCandidate> {
    let p = powers(y);
    // second element: (−160y⁵ + 120y³)·y5 + (2400y¹⁰ − 3840y⁸ + 1326y⁶ + 153y⁴)
    let lin = -160.0 * p(5) + 120.0 * p(3);
    let cst = 2400.0 * p(10) - 3840.0 * p(8) + 1326.0 * p(6) + 153.0 * p(4);
    let y5s: Vec<f64> = if lin.abs() > 1e-9 {
        vec![-cst / lin]
    } else {
        // last element is quadratic in y5
        let a = 80.0;
        let b = -480.0 * p(3) + 320.0 * y;
        let c = -4800.0 * p(10) + 8880.0 * p(8) - 3652.0 * p(6) - 631.0 * p(4) + 280.0 * p(2);
        let disc = b * b - 4.0 * a * c;
        if disc < -1e-9 {
            return Vec::new();
        }
        let s = disc.max(0.0).sqrt();
        vec![(-b - s) / (2.0 * a), (-b + s) / (2.0 * a)]
    };
    let shared = -24000.0 * p(10) + 42000.0 * p(8) - 18020.0 * p(6) - p(4) - 4.0 * p(2);
    let x4 = (shared + 8.0) / 8.0;
    let x3 = (shared + 16.0) / 16.0;
    y5s.into_iter()
        .map(|y5| {
            let x5 = (80.0 - 4800.0 * p(10) + 8880.0 * p(8) - 4452.0 * p(6) - 31.0 * p(4)
                + 140.0 * p(2)
                + 160.0 * y * y5)
                / 80.0;
            let y3 = -(-800.0 * p(9) + 1440.0 * p(7) - 642.0 * p(5) - 16.0 * p(4) * y5
                + 5.0 * p(3)
                + 4.0 * p(2) * y5
                + 2.0 * y5
                + 4.0 * y)
                / 2.0;
            let angle = |c: f64, s: f64| s.atan2(c).rem_euclid(2.0 * PI);
            let angles = [angle(x3, y3), angle(x4, y), angle(x5, y5)];
            let sum = angles[0] + 2.0 * angles[1] + angles[2];
            let mut cand = GroebnerCandidate {
                y4: y,
                cosines: [x3, x4, x5],
                sines: [y3, y, y5],
                angles,
                ordered: angles[0] < angles[1] && angles[1] < angles[2],
                closes: (sum - 2.0 * PI).abs() < CLOSE_TOL,
                basis_residual: 0.0,
                system_residual: 0.0,
            };
            let pt = cand.point();
            cand.basis_residual = max_residual(BASIS, &pt);
            cand.system_residual = max_residual(SYSTEM, &pt);
            cand
        })
        .collect()
}

/// Recovers every real solution of the system with `0 < y_4 ≤ 1` from the
/// Gröbner basis and marks the ones a tiling can use.
pub fn verify_groebner_candidates() -> GroebnerReport {
    let y4_roots: Vec<f64> = isolate_roots(&univariate(), 0.0, 1.0)
        .into_iter()
        .filter(|&y| y > 0.0)
        .collect();
    let candidates: Vec<GroebnerCandidate> =
        y4_roots.iter().flat_map(|&y| candidates_for(y)).collect();
    let survivors = candidates
        .iter()
        .enumerate()
        .filter(|(_, c)| c.survives())
        .map(|(i, _)| i)
        .collect();
    GroebnerReport {
        y4_roots,
        candidates,
        survivors,
    }
}
