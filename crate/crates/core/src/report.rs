//! Per-tiling verification: combinatorial identities, angle identities,
//! expected counts and a numerical embedding, gathered into one report.

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, CatalogTiling};
use crate::embedder;
use crate::tilemap::{self, Tolerance};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportCheck {
    pub name: String,
    pub passed: bool,
    #[serde(serialize_with = "exact")]
    pub residual: f64,
    pub detail: String,
}

fn exact<S: serde::Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{x:.16e}"))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub kind: String,
    pub passed: bool,
    pub census: String,
    pub checks: Vec<ReportCheck>,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&ReportCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn failed(name: &str, why: String) -> Self {
        Self {
            name: name.to_string(),
            kind: String::new(),
            passed: false,
            census: String::new(),
            checks: vec![ReportCheck {
                name: "construct".into(),
                passed: false,
                residual: f64::INFINITY,
                detail: why,
            }],
        }
    }
}

fn check(name: &str, passed: bool, residual: f64, detail: String) -> ReportCheck {
    ReportCheck {
        name: name.to_string(),
        passed,
        residual,
        detail,
    }
}

/// Runs every check on a built tiling.
pub fn verify_tiling(t: &CatalogTiling, tol: f64) -> VerificationReport {
    let tolerance = Tolerance::uniform(tol);
    let mut checks: Vec<ReportCheck> = tilemap::validate(&t.map, &t.assignment, tolerance)
        .checks
        .into_iter()
        .map(|c| check(c.name, c.passed, c.residual, c.detail))
        .collect();

    let census = t.census();
    let vertex_ok = census.vertex_types == t.expected_vertices;
    let face_ok = census.face_counts == t.expected_faces;
    checks.push(check(
        "census",
        vertex_ok && face_ok,
        if vertex_ok && face_ok { 0.0 } else { 1.0 },
        census.to_string(),
    ));

    match embedder::embed_unchecked(&t.map, &t.assignment) {
        Ok(e) => {
            checks.push(check(
                "embedding_closure",
                e.closure_error <= embedder::CLOSURE_TOL,
                e.closure_error,
                format!("limit {:e}", embedder::CLOSURE_TOL),
            ));
            let m = embedder::metrics(&t.map, &e);
            let edge_res = m
                .edge_lengths
                .iter()
                .map(|l| (l - t.assignment.edge()).abs())
                .fold(0.0, f64::max);
            checks.push(check(
                "embedded_edges",
                edge_res <= embedder::CLOSURE_TOL,
                edge_res,
                format!("{} edges", m.edge_lengths.len()),
            ));
            let angle_res = (0..t.map.num_darts())
                .map(|d| {
                    let size = t.map.face_size(t.map.dart_face(d));
                    let want = t.assignment.get(size).unwrap_or(f64::NAN);
                    (m.corner_angles[d] - want).abs()
                })
                .fold(
                    0.0,
                    |a: f64, b| if b.is_nan() { f64::INFINITY } else { a.max(b) },
                );
            checks.push(check(
                "embedded_angles",
                angle_res <= embedder::CLOSURE_TOL,
                angle_res,
                format!("{} corners", m.corner_angles.len()),
            ));
        }
        Err(err) => checks.push(check(
            "embedding_closure",
            false,
            f64::INFINITY,
            err.to_string(),
        )),
    }

    VerificationReport {
        name: t.name.clone(),
        kind: t.kind.as_str().to_string(),
        passed: checks.iter().all(|c| c.passed),
        census: census.to_string(),
        checks,
    }
}

/// Builds and verifies one catalog tiling; construction errors become a
/// failed report.
pub fn verify(name: &str, tol: f64) -> VerificationReport {
    match catalog::make(name) {
        Ok(t) => verify_tiling(&t, tol),
        Err(e) => VerificationReport::failed(name, e.to_string()),
    }
}

/// Verifies many tilings in parallel, keeping the input order.
pub fn verify_all(names: &[String], tol: f64) -> Vec<VerificationReport> {
    names.par_iter().map(|n| verify(n, tol)).collect()
}

/// Pretty JSON with sorted keys and residuals at 17 significant digits.
pub fn to_json(reports: &[VerificationReport]) -> String {
    // going through Value sorts object keys
    let value = serde_json::to_value(reports).expect("reports serialize");
    serde_json::to_string_pretty(&value).expect("values serialize")
}
