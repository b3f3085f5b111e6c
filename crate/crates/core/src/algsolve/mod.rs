//! Angle systems attached to vertex types.
//!
//! A vertex type fixes one linear relation (its angles sum to `2π`) and the
//! shared edge length adds one companion relation per extra face size. The
//! resulting square system is solved by damped Newton iteration from a fixed
//! grid of starting points; exact polynomial tools in [`poly`] back up the
//! special cases that have closed forms.

pub mod groebner;
pub mod poly;

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::sphkernel::{self, companion_residual, Angle};
use crate::vertexcomb::VertexType;

pub use groebner::{verify_groebner_candidates, GroebnerCandidate, GroebnerReport};
pub use poly::{isolate_roots, Polynomial};

const TAU: f64 = 2.0 * PI;

/// Interior angle for each face size of a tiling, plus the common edge length.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleAssignment {
    angles: BTreeMap<u32, Angle>,
    edge: f64,
}

impl AngleAssignment {
    pub fn new(angles: impl IntoIterator<Item = (u32, Angle)>, edge: f64) -> Self {
        Self {
            angles: angles.into_iter().collect(),
            edge,
        }
    }

    /// Assignment whose edge length is derived from the smallest face size.
    pub fn from_angles(angles: impl IntoIterator<Item = (u32, Angle)>) -> Result<Self> {
        let angles: BTreeMap<u32, Angle> = angles.into_iter().collect();
        let (&m, &alpha) = angles
            .iter()
            .find(|(&m, _)| m >= 3)
            .ok_or_else(|| Error::Domain("assignment needs a face size of at least 3".into()))?;
        let edge = sphkernel::edge_from_angle(m, alpha)?;
        Ok(Self { angles, edge })
    }

    pub fn edge(&self) -> f64 {
        self.edge
    }

    pub fn get(&self, m: u32) -> Option<Angle> {
        self.angles.get(&m).copied()
    }

    pub fn angle(&self, m: u32) -> Result<Angle> {
        self.get(m).ok_or(Error::MissingAngle(m))
    }

    pub fn sizes(&self) -> impl Iterator<Item = u32> + '_ {
        self.angles.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, Angle)> + '_ {
        self.angles.iter().map(|(&m, &a)| (m, a))
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// Keeps only the listed face sizes.
    pub fn restrict(&self, sizes: &[u32]) -> Self {
        Self {
            angles: self
                .angles
                .iter()
                .filter(|(m, _)| sizes.contains(m))
                .map(|(&m, &a)| (m, a))
                .collect(),
            edge: self.edge,
        }
    }

    /// Largest companion residual over all pairs of sizes, together with the
    /// largest deviation between the stored edge and the edge implied by
    /// each angle. Digons are skipped: their edges are always half circles.
    pub fn consistency_residual(&self) -> f64 {
        let polys: Vec<(u32, Angle)> = self.iter().filter(|&(m, _)| m >= 3).collect();
        let mut worst: f64 = 0.0;
        for (i, &(m, a)) in polys.iter().enumerate() {
            match sphkernel::edge_from_angle(m, a) {
                Ok(x) => worst = worst.max((x - self.edge).abs()),
                Err(_) => return f64::INFINITY,
            }
            for &(n, b) in &polys[i + 1..] {
                worst = worst.max(companion_residual(m, a, n, b).abs());
            }
        }
        if self.angles.contains_key(&2) {
            worst = worst.max((self.edge - PI).abs());
        }
        worst
    }

    /// Angle sum of a vertex type under this assignment.
    pub fn angle_sum(&self, sizes: &[u32]) -> Result<f64> {
        sizes.iter().map(|&m| self.angle(m)).sum()
    }
}

impl fmt::Display for AngleAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, a) in self.iter() {
            write!(f, "α{m} = {:.15}π, ", a / PI)?;
        }
        write!(f, "x = {:.15}", self.edge)
    }
}

/// One real solution of the angle system of a vertex type.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexSolution {
    pub angles: BTreeMap<u32, Angle>,
    /// Cosine of the shared edge length; outside `[-1, 1]` means the angles
    /// solve the equations but no spherical polygon realizes them.
    pub cos_edge: f64,
    /// False when two strictly convex angles are out of order with their
    /// face sizes, which no tiling allows.
    pub monotone: bool,
    pub residual: f64,
}

impl VertexSolution {
    pub fn is_geometric(&self) -> bool {
        (-1.0..=1.0).contains(&self.cos_edge)
    }

    pub fn is_admissible(&self) -> bool {
        self.is_geometric() && self.monotone
    }

    pub fn assignment(&self) -> Option<AngleAssignment> {
        self.is_geometric().then(|| {
            AngleAssignment::new(
                self.angles.iter().map(|(&m, &a)| (m, a)),
                self.cos_edge.acos(),
            )
        })
    }
}

/// Grid points per unknown angle.
const GRID: usize = 16;
/// Cap on the number of starting points for types with many distinct sizes.
const MAX_STARTS: usize = 1 << 16;
const MAX_ITER: usize = 200;
const POLISH_TOL: f64 = 1e-12;
const DEDUP_TOL: f64 = 1e-9;
/// Solutions this close to `0` or `2π` are limits of the cos-degenerate
/// equations, not genuine polygon angles.
const EDGE_GUARD: f64 = 1e-6;

struct System {
    sizes: Vec<u32>,
    counts: Vec<f64>,
}

impl System {
    fn new(t: &VertexType) -> Self {
        let mut sizes: Vec<u32> = t.entries().to_vec();
        sizes.dedup();
        let counts = sizes
            .iter()
            .map(|&m| t.entries().iter().filter(|&&e| e == m).count() as f64)
            .collect();
        Self { sizes, counts }
    }

    fn residual(&self, a: &[f64]) -> Vec<f64> {
        let mut f = Vec::with_capacity(a.len());
        f.push(self.counts.iter().zip(a).map(|(c, x)| c * x).sum::<f64>() - TAU);
        for j in 1..a.len() {
            f.push(companion_residual(self.sizes[0], a[0], self.sizes[j], a[j]));
        }
        f
    }

    fn jacobian(&self, a: &[f64]) -> Vec<Vec<f64>> {
        let k = a.len();
        let kc = |m: u32| 2.0 + 2.0 * (TAU / m as f64).cos();
        let mut j = vec![vec![0.0; k]; k];
        j[0].copy_from_slice(&self.counts);
        for r in 1..k {
            j[r][0] = -a[0].sin() * kc(self.sizes[r]);
            j[r][r] = a[r].sin() * kc(self.sizes[0]);
        }
        j
    }

    fn newton(&self, start: Vec<f64>) -> Option<(Vec<f64>, f64)> {
        let mut a = start;
        let mut f = self.residual(&a);
        let mut norm = max_abs(&f);
        for _ in 0..MAX_ITER {
            if norm < 1e-15 {
                break;
            }
            let step = solve_linear(self.jacobian(&a), f.iter().map(|v| -v).collect())?;
            let mut lambda = 1.0;
            let mut accepted = false;
            for _ in 0..40 {
                let trial: Vec<f64> = a.iter().zip(&step).map(|(x, s)| x + lambda * s).collect();
                let ft = self.residual(&trial);
                let nt = max_abs(&ft);
                if nt < norm {
                    a = trial;
                    f = ft;
                    norm = nt;
                    accepted = true;
                    break;
                }
                lambda *= 0.5;
            }
            if !accepted {
                break;
            }
        }
        (norm < POLISH_TOL).then_some((a, norm))
    }
}

fn grid_points(unknowns: usize) -> usize {
    let mut n = GRID;
    while n > 2 && n.pow(unknowns as u32) > MAX_STARTS {
        n -= 1;
    }
    n
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Gaussian elimination with partial pivoting; `None` for singular systems.
fn solve_linear(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Some(x)
}

fn cos_edge(m: u32, alpha: Angle) -> f64 {
    let s2 = (alpha / 2.0).sin().powi(2);
    (alpha / 2.0).cos().powi(2) / s2 + (TAU / m as f64).cos() / s2
}

fn is_monotone(angles: &BTreeMap<u32, Angle>) -> bool {
    let convex: Vec<Angle> = angles.values().copied().filter(|&a| a < PI).collect();
    convex.windows(2).all(|w| w[0] < w[1])
}

/// All real solutions of the angle system of `t` with every angle in
/// `(0, 2π)`, sorted by their angle tuples.
///
/// Solutions are returned whether or not they are realizable; use
/// [`VertexSolution::is_admissible`] or [`admissible_assignments`] to keep
/// the ones that can occur in a tiling.
pub fn solve_vertex_system(t: &VertexType) -> Vec<VertexSolution> {
    let sys = System::new(t);
    let k = sys.sizes.len();
    let per_axis = grid_points(k);
    let grids: Vec<Vec<f64>> = sys
        .sizes
        .iter()
        .map(|&m| {
            let lo = sphkernel::planar_angle(m);
            (0..per_axis)
                .map(|i| lo + (i as f64 + 0.5) * (TAU - lo) / per_axis as f64)
                .collect()
        })
        .collect();
    let mut found: Vec<(Vec<f64>, f64)> = Vec::new();
    let total = per_axis.pow(k as u32);
    for idx in 0..total {
        let mut rest = idx;
        let start: Vec<f64> = grids
            .iter()
            .map(|g| {
                let v = g[rest % per_axis];
                rest /= per_axis;
                v
            })
            .collect();
        let Some((a, norm)) = sys.newton(start) else {
            continue;
        };
        if a.iter().any(|&x| x < EDGE_GUARD || x > TAU - EDGE_GUARD) {
            continue;
        }
        found.push((a, norm));
    }
    found.sort_by(|x, y| {
        x.0.iter()
            .zip(&y.0)
            .map(|(a, b)| a.total_cmp(b))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut unique: Vec<(Vec<f64>, f64)> = Vec::new();
    for (a, norm) in found {
        match unique.last_mut() {
            Some(last)
                if a.iter()
                    .zip(&last.0)
                    .all(|(x, y)| (x - y).abs() < DEDUP_TOL) =>
            {
                if norm < last.1 {
                    *last = (a, norm);
                }
            }
            _ => unique.push((a, norm)),
        }
    }
    unique
        .into_iter()
        .map(|(a, residual)| {
            let angles: BTreeMap<u32, Angle> = sys.sizes.iter().copied().zip(a).collect();
            let cos_edge = cos_edge(sys.sizes[0], angles[&sys.sizes[0]]);
            VertexSolution {
                monotone: is_monotone(&angles),
                angles,
                cos_edge,
                residual,
            }
        })
        .collect()
}

/// Realizable, order-respecting solutions of the angle system of `t`.
pub fn admissible_assignments(t: &VertexType) -> Vec<AngleAssignment> {
    solve_vertex_system(t)
        .iter()
        .filter(|s| s.is_admissible())
        .filter_map(VertexSolution::assignment)
        .collect()
}

/// The unique admissible assignment of `t`, as used for infinite families.
pub fn unique_assignment(t: &VertexType) -> Result<AngleAssignment> {
    let mut all = admissible_assignments(t);
    match all.len() {
        1 => Ok(all.pop().expect("one element")),
        0 => Err(Error::NoSolution(format!(
            "vertex type {t} has no admissible angles"
        ))),
        n => Err(Error::NoSolution(format!(
            "vertex type {t} has {n} admissible angle assignments"
        ))),
    }
}

/// `64ξ⁶ + 128ξ⁵ + 64ξ⁴ − 24ξ³ − 24ξ² + 1`, whose root in `(0, 1)` compatible
/// with a pentagon is the cosine of the triangle angle of the snub
/// dodecahedral tiling.
pub fn snub_pentagon_sextic() -> Polynomial {
    Polynomial::from_integers(&[1, 0, -24, -24, 64, 128, 64])
}

/// Angles of the snub tiling with vertex type `3⁴·m`.
///
/// For `m = 5` the triangle angle comes from the exact roots of
/// [`snub_pentagon_sextic`], keeping the root whose pentagon closes the
/// vertex with the same edge length; for `m = 4` the vertex system is solved
/// directly.
pub fn solve_snub(m: u32) -> Result<AngleAssignment> {
    match m {
        4 => unique_assignment(&VertexType::new(vec![3, 3, 3, 3, 4])),
        5 => {
            let roots = isolate_roots(&snub_pentagon_sextic(), 0.0, 1.0);
            roots
                .into_iter()
                .filter_map(|xi| {
                    let a3 = xi.acos();
                    let a5 = TAU - 4.0 * a3;
                    if a5 <= sphkernel::planar_angle(5) {
                        return None;
                    }
                    (companion_residual(3, a3, 5, a5).abs() < 1e-12)
                        .then(|| AngleAssignment::new([(3, a3), (5, a5)], (xi / (1.0 - xi)).acos()))
                })
                .next()
                .ok_or_else(|| Error::NoSolution("sextic has no compatible root".into()))
        }
        _ => Err(Error::Domain(format!(
            "snub tilings exist for m = 4, 5, not {m}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vt(e: &[u32]) -> VertexType {
        VertexType::new(e.to_vec())
    }

    fn over_pi(a: &AngleAssignment, m: u32) -> f64 {
        a.angle(m).unwrap() / PI
    }

    #[test]
    fn elongated_dodecahedral_vertex() {
        let all = admissible_assignments(&vt(&[3, 4, 4, 5]));
        assert_eq!(all.len(), 1);
        let a = &all[0];
        let s5 = 5f64.sqrt();
        assert!((a.angle(3).unwrap() - ((5.0 + 2.0 * s5) / 20.0).acos()).abs() < 1e-12);
        assert!((a.angle(4).unwrap() - ((2.0 * s5 - 5.0) / 10.0).acos()).abs() < 1e-12);
        assert!((a.angle(5).unwrap() - ((5.0 - 9.0 * s5) / 40.0).acos()).abs() < 1e-12);
        assert!((over_pi(a, 3) - 0.342951).abs() < 1e-6);
    }

    #[test]
    fn two_triangles_pentagon_heptagon() {
        let all = admissible_assignments(&vt(&[3, 3, 5, 7]));
        assert_eq!(all.len(), 1);
        let a = &all[0];
        // 40-digit reference solve; the published digits are only good to ~1e-8
        assert!((over_pi(a, 3) - 0.33570234565054576469).abs() < 1e-12);
        assert!((over_pi(a, 5) - 0.60567646633125763213).abs() < 1e-12);
        assert!((over_pi(a, 7) - 0.72291884236765083849).abs() < 1e-12);
        assert!((over_pi(a, 3) - 0.3357023573924277).abs() < 1e-7);
    }

    #[test]
    fn triangular_prism() {
        let a = unique_assignment(&vt(&[3, 4, 4])).unwrap();
        let t = (1.0 / 7f64.sqrt()).atan();
        assert!((a.angle(3).unwrap() - 4.0 * t).abs() < 1e-12);
        assert!((a.angle(4).unwrap() - (PI - 2.0 * t)).abs() < 1e-12);
        assert!(a.consistency_residual() < 1e-12);
    }

    #[test]
    fn single_size_types() {
        let a = unique_assignment(&vt(&[3, 3, 3])).unwrap();
        assert!((a.angle(3).unwrap() - TAU / 3.0).abs() < 1e-12);
        let a = unique_assignment(&vt(&[3, 3, 3, 3, 3])).unwrap();
        assert!((a.angle(3).unwrap() - 0.4 * PI).abs() < 1e-12);
    }

    #[test]
    fn solutions_satisfy_the_system() {
        for t in [
            vec![3, 4, 4, 5],
            vec![3, 3, 5, 7],
            vec![4, 6, 8],
            vec![3, 4, 10],
        ] {
            let t = vt(&t);
            for s in solve_vertex_system(&t) {
                let sum: f64 = t.entries().iter().map(|m| s.angles[m]).sum();
                assert!((sum - TAU).abs() < 1e-9);
                for (&m, &a) in &s.angles {
                    for (&n, &b) in &s.angles {
                        assert!(companion_residual(m, a, n, b).abs() < 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn deterministic() {
        let t = vt(&[3, 3, 5, 6]);
        assert_eq!(solve_vertex_system(&t), solve_vertex_system(&t));
    }

    #[test]
    fn snub_cube() {
        let a = solve_snub(4).unwrap();
        assert!((a.angle(4).unwrap() + 4.0 * a.angle(3).unwrap() - TAU).abs() < 1e-12);
        assert!(a.consistency_residual() < 1e-12);
        assert!((over_pi(&a, 3) - 0.3621551417894).abs() < 1e-12);
    }

    #[test]
    fn snub_dodecahedron() {
        let a = solve_snub(5).unwrap();
        assert!((a.angle(3).unwrap().cos() - 0.471575629621941).abs() < 1e-14);
        assert!(a.consistency_residual() < 1e-12);
        let b = unique_assignment(&vt(&[3, 3, 3, 3, 5])).unwrap();
        assert!((a.angle(3).unwrap() - b.angle(3).unwrap()).abs() < 1e-12);
        assert!(solve_snub(6).is_err());
    }

    #[test]
    fn monotone_flag() {
        let mut angles = BTreeMap::new();
        angles.insert(5, 0.7 * PI);
        angles.insert(6, 0.6 * PI);
        assert!(!is_monotone(&angles));
        angles.insert(6, 1.2 * PI);
        assert!(is_monotone(&angles));
    }

    #[test]
    fn assignment_accessors() {
        let a = AngleAssignment::from_angles([(3, TAU / 3.0)]).unwrap();
        assert!((a.edge() - (-1.0f64 / 3.0).acos()).abs() < 1e-12);
        assert_eq!(a.angle(4), Err(Error::MissingAngle(4)));
        assert!((a.angle_sum(&[3, 3, 3]).unwrap() - TAU).abs() < 1e-12);
        assert_eq!(a.restrict(&[4]).len(), 0);
        assert!(AngleAssignment::from_angles([(2, 1.0)]).is_err());
    }
}
