//! Trigonometry of regular spherical polygons on the unit sphere.
//!
//! A regular spherical `m`-gon is fixed by its interior angle `alpha`; its
//! edge length `x` and circumradius `r` follow from
//!
//! ```text
//! ½(1 + cos x)(1 + cos α) = cos x − cos(2π/m)
//! cot(α/2) = tan(π/m) · cos r
//! ```
//!
//! Two regular polygons can share an edge exactly when their angles satisfy
//! the companion relation computed by [`companion_residual`].

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Interior angle of a polygon, in radians.
pub type Angle = f64;

/// Slack used when an input sits on the boundary of its admissible range.
const BOUNDARY_SLACK: f64 = 1e-12;

const TAU: f64 = 2.0 * PI;

/// A regular spherical polygon with all derived measurements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolygonSpec {
    pub m: u32,
    pub alpha: Angle,
    pub edge: f64,
    pub circumradius: f64,
}

impl PolygonSpec {
    /// Regular `m`-gon (`m >= 3`) with interior angle `alpha`.
    pub fn new(m: u32, alpha: Angle) -> Result<Self> {
        Ok(Self {
            m,
            alpha,
            edge: edge_from_angle(m, alpha)?,
            circumradius: circumradius(m, alpha)?,
        })
    }

    /// A digon between two antipodal points; its two edges are half great circles.
    pub fn digon(alpha: Angle) -> Result<Self> {
        if !(alpha > 0.0 && alpha < TAU) {
            return Err(Error::Domain(format!(
                "digon angle {alpha} outside (0, 2π)"
            )));
        }
        Ok(Self {
            m: 2,
            alpha,
            edge: PI,
            circumradius: PI / 2.0,
        })
    }

    /// Residual of the angle/edge relation; zero for a consistent polygon.
    pub fn residual(&self) -> f64 {
        if self.m == 2 {
            return self.edge - PI;
        }
        let cx = self.edge.cos();
        0.5 * (1.0 + cx) * (1.0 + self.alpha.cos()) - (cx - central_cos(self.m))
    }

    pub fn area(&self) -> f64 {
        polygon_area(self.m, self.alpha)
    }

    pub fn is_convex(&self) -> bool {
        self.alpha <= PI
    }
}

fn central_cos(m: u32) -> f64 {
    (TAU / m as f64).cos()
}

fn require_polygon(m: u32) -> Result<()> {
    if m < 3 {
        return Err(Error::Domain(format!(
            "face size {m} needs the digon constructors"
        )));
    }
    Ok(())
}

/// Planar lower bound `(1 − 2/m)π` for the angle of a spherical `m`-gon.
pub fn planar_angle(m: u32) -> Angle {
    (1.0 - 2.0 / m as f64) * PI
}

/// Convex interior angle of the regular `m`-gon with edge length `x`.
///
/// The relation is linear in `cos α`, so the angle is unique in `(0, π]`;
/// the concave polygon with the same edge has angle `2π − α`.
pub fn angle_from_edge(m: u32, x: f64) -> Result<Angle> {
    require_polygon(m)?;
    if !(x > 0.0 && x < PI) {
        return Err(Error::Domain(format!("edge length {x} outside (0, π)")));
    }
    let cx = x.cos();
    let cm = central_cos(m);
    if cx < cm - BOUNDARY_SLACK {
        return Err(Error::Domain(format!(
            "no regular {m}-gon has edge length {x} (longest is {})",
            TAU / m as f64
        )));
    }
    let c = 2.0 * (cx - cm) / (1.0 + cx) - 1.0;
    Ok(c.clamp(-1.0, 1.0).acos())
}

fn cos_edge(m: u32, alpha: Angle) -> Result<f64> {
    require_polygon(m)?;
    if !(alpha > 0.0 && alpha < TAU) {
        return Err(Error::Domain(format!("angle {alpha} outside (0, 2π)")));
    }
    let s2 = (alpha / 2.0).sin().powi(2);
    let cot2 = (alpha / 2.0).cos().powi(2) / s2;
    let cx = cot2 + central_cos(m) / s2;
    if !(-1.0 - BOUNDARY_SLACK..=1.0 + BOUNDARY_SLACK).contains(&cx) {
        return Err(Error::Domain(format!(
            "angle {alpha} gives cos x = {cx} for a {m}-gon"
        )));
    }
    Ok(cx.clamp(-1.0, 1.0))
}

/// Edge length of the regular `m`-gon with interior angle `alpha`.
pub fn edge_from_angle(m: u32, alpha: Angle) -> Result<f64> {
    Ok(cos_edge(m, alpha)?.acos())
}

/// Angular distance from the centre of the polygon to its vertices.
pub fn circumradius(m: u32, alpha: Angle) -> Result<f64> {
    cos_edge(m, alpha)?;
    let half = alpha / 2.0;
    let cr = half.cos() / half.sin() / (PI / m as f64).tan();
    if !(-1.0 - BOUNDARY_SLACK..=1.0 + BOUNDARY_SLACK).contains(&cr) {
        return Err(Error::Domain(format!(
            "angle {alpha} gives cos r = {cr} for a {m}-gon"
        )));
    }
    Ok(cr.clamp(-1.0, 1.0).acos())
}

/// Spherical excess `mα − (m − 2)π` of a polygon with `m` equal angles.
pub fn polygon_area(m: u32, alpha: Angle) -> f64 {
    m as f64 * alpha - (m as f64 - 2.0) * PI
}

/// Zero exactly when a regular `m`-gon with angle `alpha_m` and a regular
/// `n`-gon with angle `alpha_n` have the same edge length.
pub fn companion_residual(m: u32, alpha_m: Angle, n: u32, alpha_n: Angle) -> f64 {
    companion_residual_real(m as f64, alpha_m, n as f64, alpha_n)
}

fn companion_residual_real(m: f64, alpha_m: Angle, n: f64, alpha_n: Angle) -> f64 {
    let (cm, cn) = (alpha_m.cos(), alpha_n.cos());
    (1.0 - cn) * (1.0 + cm + 2.0 * (TAU / m).cos())
        - (1.0 - cm) * (1.0 + cn + 2.0 * (TAU / n).cos())
}

/// All angles of regular `n`-gons sharing the edge of the `m`-gon with
/// angle `alpha_m`: a convex value and its concave complement, `{π}` for a
/// hemisphere, or nothing when no such `n`-gon exists.
pub fn solve_companion_angle(m: u32, alpha_m: Angle, n: u32) -> Vec<Angle> {
    let cm = alpha_m.cos();
    let a = 1.0 + cm + 2.0 * central_cos(m);
    let b = 1.0 - cm;
    let c = (a - b * (1.0 + 2.0 * central_cos(n))) / (a + b);
    if !(-1.0 - BOUNDARY_SLACK..1.0).contains(&c) {
        return Vec::new();
    }
    if c <= -1.0 + BOUNDARY_SLACK {
        return vec![PI];
    }
    let alpha = c.acos();
    vec![alpha, TAU - alpha]
}

/// Real face size `n` at which a regular `n`-gon with angle `target` shares
/// the edge of the `m`-gon with angle `alpha_m`.
///
/// Scans `n ∈ [3, 64]` in steps of 0.25 for the first sign change of the
/// companion residual and bisects it.
pub fn solve_companion_size(m: u32, alpha_m: Angle, target: Angle) -> Result<f64> {
    let f = |n: f64| companion_residual_real(m as f64, alpha_m, n, target);
    let (mut lo, mut f_lo) = (3.0, f(3.0));
    if f_lo == 0.0 {
        return Ok(lo);
    }
    let mut bracket = None;
    for step in 1..=244 {
        let hi = 3.0 + 0.25 * step as f64;
        let f_hi = f(hi);
        if f_hi == 0.0 {
            return Ok(hi);
        }
        if f_lo.signum() != f_hi.signum() {
            bracket = Some((lo, hi, f_lo));
            break;
        }
        lo = hi;
        f_lo = f_hi;
    }
    let (mut lo, mut hi, f_lo) = bracket.ok_or_else(|| {
        Error::NoSolution(format!(
            "no face size in [3, 64] carries angle {target} next to a {m}-gon with angle {alpha_m}"
        ))
    })?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn angle_from_edge_examples() {
        let a = angle_from_edge(3, (-1.0f64 / 3.0).acos()).unwrap();
        assert!(close(a, TAU / 3.0, 1e-12), "{a}");
        let a = angle_from_edge(4, PI / 2.0).unwrap();
        assert!(close(a, PI, 1e-7), "{a}");
        for m in 3..12 {
            let a = angle_from_edge(m, 1e-4).unwrap();
            assert!(a > planar_angle(m) && a - planar_angle(m) < 1e-7);
        }
    }

    #[test]
    fn angle_from_edge_rejects_long_edges() {
        assert!(matches!(angle_from_edge(4, 2.0), Err(Error::Domain(_))));
        assert!(angle_from_edge(3, 0.0).is_err());
        assert!(angle_from_edge(3, PI).is_err());
        assert!(angle_from_edge(2, 1.0).is_err());
    }

    #[test]
    fn edge_from_angle_examples() {
        let x = edge_from_angle(3, TAU / 3.0).unwrap();
        assert!(close(x, (-1.0f64 / 3.0).acos(), 1e-12));
        let x = edge_from_angle(5, 0.8 * PI).unwrap();
        assert!(close(x, (1.0 / 5f64.sqrt()).acos(), 1e-12));
        let x = edge_from_angle(4, PI).unwrap();
        assert!(close(x, PI / 2.0, 1e-12));
        assert!(edge_from_angle(4, 0.4 * PI).is_err());
    }

    #[test]
    fn circumradius_examples() {
        assert!(close(circumradius(4, PI).unwrap(), PI / 2.0, 1e-12));
        // cot(π/3)² = 1/3 evaluated independently
        let r = circumradius(3, TAU / 3.0).unwrap();
        assert!(close(r.cos(), 1.0 / 3.0, 1e-12));
        assert!(circumradius(5, 1.2 * PI).unwrap() > PI / 2.0);
    }

    #[test]
    fn polygon_area_examples() {
        assert!(close(polygon_area(2, 0.7), 1.4, 1e-15));
        assert!(close(polygon_area(3, TAU / 3.0), PI, 1e-12));
        assert!(close(polygon_area(4, PI), TAU, 1e-12));
    }

    #[test]
    fn companion_residual_examples() {
        let a3 = (1.0f64 / 3.0).acos();
        assert!(companion_residual(3, a3, 4, PI - a3).abs() < 1e-12);
        assert_eq!(companion_residual(5, 1.9, 5, 1.9), 0.0);
        assert!(companion_residual(3, TAU / 3.0, 4, TAU / 3.0).abs() > 0.1);
    }

    #[test]
    fn solve_companion_angle_examples() {
        let s = solve_companion_angle(3, PI / 2.0, 4);
        assert_eq!(s.len(), 1);
        assert!(close(s[0], PI, 1e-9));
        let s = solve_companion_angle(3, 0.4 * PI, 5);
        assert_eq!(s.len(), 2);
        assert!(close(s[0], 0.8 * PI, 1e-12));
        assert!(close(s[1], 1.2 * PI, 1e-12));
        assert!(solve_companion_angle(3, PI / 2.0, 5).is_empty());
    }

    fn ed_angles() -> (f64, f64, f64) {
        let s5 = 5f64.sqrt();
        (
            ((5.0 + 2.0 * s5) / 20.0).acos(),
            ((2.0 * s5 - 5.0) / 10.0).acos(),
            ((5.0 - 9.0 * s5) / 40.0).acos(),
        )
    }

    #[test]
    fn companion_size_examples() {
        let a4 = 2.0 * (7.0 - 4.0 * 2f64.sqrt()).sqrt().atan();
        let n = solve_companion_size(4, a4, TAU - 2.0 * a4).unwrap();
        assert!(close(n, 8.0, 1e-9), "{n}");
        let (a3, a4, a5) = ed_angles();
        let n = solve_companion_size(3, a3, a4 + a5 - a3).unwrap();
        assert!(close(n, 8.093977, 1e-5), "{n}");
        let n = solve_companion_size(3, a3, 2.0 * a4).unwrap();
        assert!(close(n, 13.551639, 1e-5), "{n}");
        let n = solve_companion_size(3, a3, a4 + a5).unwrap();
        assert!(close(n, 10.0, 1e-9), "{n}");
        let n = solve_companion_size(3, a3, a3 + a4).unwrap();
        assert!(close(n, 10.0, 1e-9), "{n}");
    }

    #[test]
    fn companion_size_without_bracket() {
        assert!(matches!(
            solve_companion_size(3, TAU / 3.0, 0.01),
            Err(Error::NoSolution(_))
        ));
    }

    #[test]
    fn polygon_spec_consistency() {
        let p = PolygonSpec::new(5, 1.2 * PI).unwrap();
        assert!(p.residual().abs() < 1e-12);
        assert!(!p.is_convex());
        let d = PolygonSpec::digon(PI / 3.0).unwrap();
        assert_eq!(d.edge, PI);
        assert!(close(d.area(), TAU / 3.0, 1e-15));
    }

    proptest! {
        #[test]
        fn round_trip(m in 3u32..20, t in 0.001f64..0.999) {
            let x = t * TAU / m as f64;
            let a = angle_from_edge(m, x).unwrap();
            prop_assert!(a > planar_angle(m));
            let back = edge_from_angle(m, a).unwrap();
            prop_assert!((back - x).abs() < 1e-12, "{} vs {}", back, x);
            let concave = edge_from_angle(m, TAU - a).unwrap();
            prop_assert!((concave - x).abs() < 1e-12);
        }

        #[test]
        fn monotone_in_face_size(m in 3u32..15, dn in 1u32..10, t in 0.001f64..0.999) {
            let n = m + dn;
            let x = t * TAU / n as f64;
            let am = angle_from_edge(m, x).unwrap();
            let an = angle_from_edge(n, x).unwrap();
            prop_assume!(an < PI - 1e-9);
            prop_assert!(am < an);
        }

        #[test]
        fn companion_symmetry_and_mirror(m in 3u32..15, n in 3u32..15, t in 0.01f64..0.99) {
            let x = t * TAU / m.max(n) as f64;
            let am = angle_from_edge(m, x).unwrap();
            let an = angle_from_edge(n, x).unwrap();
            prop_assert!(companion_residual(m, am, n, an).abs() < 1e-12);
            prop_assert!(companion_residual(n, an, m, am).abs() < 1e-12);
            prop_assert!(companion_residual(m, TAU - am, n, TAU - an).abs() < 1e-12);
            let sols = solve_companion_angle(m, am, n);
            prop_assert!(sols.iter().any(|s| (s - an).abs() < 1e-6));
        }

        #[test]
        fn hemisphere_triple(m in 3u32..20) {
            let x = TAU / m as f64;
            prop_assert!((angle_from_edge(m, x).unwrap() - PI).abs() < 1e-6);
            prop_assert!((edge_from_angle(m, PI).unwrap() - x).abs() < 1e-12);
            prop_assert!((circumradius(m, PI).unwrap() - PI / 2.0).abs() < 1e-12);
        }
    }
}
