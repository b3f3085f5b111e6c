//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Tolerances are fixed constants below.

use std::collections::BTreeSet;
use std::f64::consts::{PI, TAU};
use std::process::ExitCode;

use num::rational::Ratio;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use spherical_tilings::algsolve::{
    admissible_assignments, solve_snub, unique_assignment, verify_groebner_candidates,
    AngleAssignment,
};
use spherical_tilings::catalog::{self, golden, ops, CatalogTiling, Kind};
use spherical_tilings::embedder;
use spherical_tilings::sphkernel::{
    angle_from_edge, companion_residual, solve_companion_angle, solve_companion_size,
};
use spherical_tilings::tilemap::{
    canonical_code, census, homogeneity, isomorphic, validate, Homogeneity, Tolerance,
};
use spherical_tilings::vertexcomb::{enumerate_candidate_types, VertexType};
use spherical_tilings::TilingMap;

const VALIDATE_TOL: f64 = 1e-9;
const GROEBNER_TOL: f64 = 1e-6;
const INTEGER_SIZE_TOL: f64 = 1e-9;
const REAL_SIZE_REL_TOL: f64 = 1e-5;
const CLOSED_FORM_TOL: f64 = 1e-12;
const CLOSURE_TOL: f64 = 1e-7;
const EDGE_TOL: f64 = 1e-9;
const AREA_TOL: f64 = 1e-6;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn make(name: &str) -> Result<CatalogTiling, String> {
    catalog::make(name).map_err(|e| format!("{name}: {e}"))
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn face_of_size(t: &TilingMap, m: u32) -> Result<usize, String> {
    (0..t.num_faces())
        .find(|&f| t.face_size(f) == m)
        .ok_or_else(|| format!("no {m}-gon"))
}

fn catalog_validation() -> Outcome {
    let names = catalog::list(None);
    for name in &names {
        let t = make(name)?;
        let report = validate(&t.map, &t.assignment, Tolerance::uniform(VALIDATE_TOL));
        ensure(report.passed(), || {
            let f: Vec<String> = report
                .failures()
                .iter()
                .map(|c| c.name.to_string())
                .collect();
            format!("{name} fails {}", f.join(", "))
        })?;
        ensure(t.census_matches(), || {
            format!("{name} census {}", t.census())
        })?;
    }
    let j19 = make("J19")?;
    let c = census(&j19.map);
    let handshake: usize = c.face_counts.iter().map(|(&m, &n)| m as usize * n).sum();
    ensure(
        handshake == 2 * c.e && c.face_counts.get(&8) == Some(&1),
        || format!("J19 handshake {handshake} vs 2e = {}", 2 * c.e),
    )?;
    ensure(c.face_counts.get(&10).is_none(), || {
        "J19 has a decagon".into()
    })?;
    Ok(format!(
        "{} entries; J19 2e = Σ m·f_m = {handshake} with f8 = 1",
        names.len()
    ))
}

fn groebner_reproduction() -> Outcome {
    let all = admissible_assignments(&VertexType::new(vec![3, 4, 4, 5]));
    ensure(all.len() == 1, || {
        format!("{} admissible assignments", all.len())
    })?;
    let a = &all[0];
    let want = [(3, 0.342951), (4, 0.516810), (5, 0.623427)];
    for (m, v) in want {
        let got = a.angle(m).map_err(|e| e.to_string())? / PI;
        ensure((got - v).abs() < GROEBNER_TOL, || format!("α{m}/π = {got}"))?;
    }
    let s5 = 5f64.sqrt();
    let rows = [
        [
            (5.0 - 2.0 * s5) / 20.0,
            -(5.0 + 2.0 * s5) / 10.0,
            (5.0 + 9.0 * s5) / 40.0,
        ],
        [
            (5.0 + 2.0 * s5) / 20.0,
            (2.0 * s5 - 5.0) / 10.0,
            (5.0 - 9.0 * s5) / 40.0,
        ],
        [0.25, -0.5, -(3.0 * s5 + 1.0) / 8.0],
        [0.25, -0.5, (3.0 * s5 - 1.0) / 8.0],
    ];
    let rep = verify_groebner_candidates();
    ensure(rep.candidates.len() == 4, || {
        format!("{} candidates", rep.candidates.len())
    })?;
    for row in rows {
        ensure(
            rep.candidates.iter().any(|c| {
                c.cosines
                    .iter()
                    .zip(row)
                    .all(|(x, y)| (x - y).abs() < 1e-12)
            }),
            || format!("candidate {row:?} missing"),
        )?;
    }
    ensure(rep.survivors.len() == 1, || {
        format!("survivors {:?}", rep.survivors)
    })?;
    let s = &rep.candidates[rep.survivors[0]];
    ensure(
        s.cosines
            .iter()
            .zip(rows[1])
            .all(|(x, y)| (x - y).abs() < 1e-12),
        || format!("survivor {:?} is not the second triple", s.cosines),
    )?;
    for (i, m) in [3, 4, 5].into_iter().enumerate() {
        let solved = a.angle(m).map_err(|e| e.to_string())?;
        ensure((s.angles[i] - solved).abs() < GROEBNER_TOL, || {
            format!("survivor α{m} differs from solver")
        })?;
    }
    Ok(format!(
        "(α3, α4, α5)/π = ({:.9}, {:.9}, {:.9}); 4 candidates, survivor = second",
        s.angles[0] / PI,
        s.angles[1] / PI,
        s.angles[2] / PI
    ))
}

fn derived_sizes() -> Outcome {
    let ed = golden::closed_form("eD").ok_or("no eD angles")?;
    let (a3, a4, a5) = (
        ed.angle(3).map_err(|e| e.to_string())?,
        ed.angle(4).map_err(|e| e.to_string())?,
        ed.angle(5).map_err(|e| e.to_string())?,
    );
    let size = |t: f64| solve_companion_size(3, a3, t).map_err(|e| e.to_string());
    for target in [a4 + a5, a3 + a4] {
        let n = size(target)?;
        ensure((n - 10.0).abs() < INTEGER_SIZE_TOL, || {
            format!("n = {n}, want 10")
        })?;
    }
    for (target, want) in [(a4 + a5 - a3, 8.093977), (2.0 * a4, 13.551639)] {
        let n = size(target)?;
        ensure(rel(n, want) < REAL_SIZE_REL_TOL, || {
            format!("n = {n}, want {want}")
        })?;
    }
    let sys = unique_assignment(&VertexType::new(vec![3, 3, 5, 7])).map_err(|e| e.to_string())?;
    let b3 = sys.angle(3).map_err(|e| e.to_string())?;
    let b4 = solve_companion_angle(3, b3, 4)
        .into_iter()
        .find(|&a| a <= PI)
        .ok_or("no convex square")?;
    let bn = TAU - 2.0 * b3 - b4;
    let n = solve_companion_size(3, b3, bn).map_err(|e| e.to_string())?;
    ensure(rel(b4 / PI, 0.5041121622358487) < REAL_SIZE_REL_TOL, || {
        format!("α4/π = {}", b4 / PI)
    })?;
    ensure(rel(bn / PI, 0.8244831229792959) < REAL_SIZE_REL_TOL, || {
        format!("αn/π = {}", bn / PI)
    })?;
    ensure(rel(n, 10.56076889342715) < REAL_SIZE_REL_TOL, || {
        format!("n = {n}")
    })?;
    Ok(format!(
        "eD → 10, 10, 8.0940, 13.5516; 3²·5·7 → α4/π {:.10}, αn/π {:.10}, n {n:.10}",
        b4 / PI,
        bn / PI
    ))
}

fn compare(name: &str, solved: &AngleAssignment, exact: &AngleAssignment) -> Result<f64, String> {
    let mut worst = (solved.edge() - exact.edge()).abs();
    for (m, a) in exact.iter() {
        let s = solved.angle(m).map_err(|e| format!("{name}: {e}"))?;
        worst = worst.max((s - a).abs());
    }
    ensure(worst < CLOSED_FORM_TOL, || {
        format!("{name}: deviation {worst:e}")
    })?;
    Ok(worst)
}

fn closed_forms() -> Outcome {
    let rows: [(&str, &[u32]); 9] = [
        ("tT", &[3, 6, 6]),
        ("tC", &[3, 8, 8]),
        ("tO", &[4, 6, 6]),
        ("tD", &[3, 10, 10]),
        ("tI", &[5, 6, 6]),
        ("bC", &[4, 6, 8]),
        ("bD", &[4, 6, 10]),
        ("sC", &[3, 3, 3, 3, 4]),
        ("sD", &[3, 3, 3, 3, 5]),
    ];
    let mut worst: f64 = 0.0;
    for (name, vt) in rows {
        let exact = golden::closed_form(name).ok_or("missing closed form")?;
        let solved =
            unique_assignment(&VertexType::new(vt.to_vec())).map_err(|e| format!("{name}: {e}"))?;
        worst = worst.max(compare(name, &solved, &exact)?);
    }
    let t = 4.0 * (1.0 / 11f64.sqrt()).atan();
    let tt = golden::closed_form("tT").ok_or("missing tT")?;
    ensure(
        (tt.angle(3).unwrap_or(0.0) - t).abs() < CLOSED_FORM_TOL
            && (tt.edge() - (7.0f64 / 11.0).acos()).abs() < CLOSED_FORM_TOL,
        || "tT row".into(),
    )?;
    let xi = golden::snub_dodecahedral_xi();
    ensure((xi - 0.471575629621941).abs() < CLOSED_FORM_TOL, || {
        format!("ξ = {xi}")
    })?;
    let snub = solve_snub(5).map_err(|e| e.to_string())?;
    worst = worst.max(compare(
        "sD sextic",
        &snub,
        &golden::closed_form("sD").ok_or("sD")?,
    )?);
    Ok(format!("9 rows, worst deviation {worst:.1e}; ξ = {xi:.15}"))
}

fn operator_identities() -> Outcome {
    let eval = |r: spherical_tilings::Result<TilingMap>| r.map_err(|e| e.to_string());
    let j19 = make("J19")?;
    let oct = face_of_size(&j19.map, 8)?;
    let ec = make("eC")?.map;
    let j37 = make("J37")?.map;
    let sub: Vec<TilingMap> = (0..2)
        .map(|p| eval(ops::cupola_subdivide(&j19.map, &j19.assignment, oct, p)))
        .collect::<Result<_, _>>()?;
    ensure(sub.iter().any(|t| isomorphic(t, &ec)), || {
        "J19 + cupola ≇ eC".into()
    })?;
    ensure(sub.iter().any(|t| isomorphic(t, &j37)), || {
        "J19 + gyro cupola ≇ J37".into()
    })?;

    let j4 = make("J4")?;
    let p = eval(ops::prism_subdivide(
        &j4.map,
        &j4.assignment,
        face_of_size(&j4.map, 8)?,
    ))?;
    ensure(isomorphic(&p, &j19.map), || "J4 + prism ≇ J19".into())?;

    let j11 = make("J11")?;
    let i = eval(ops::pyramid_subdivide(
        &j11.map,
        &j11.assignment,
        face_of_size(&j11.map, 5)?,
    ))?;
    ensure(isomorphic(&i, &make("I")?.map), || {
        "J11 + pyramid ≇ I".into()
    })?;

    let tt = make("tT")?.map;
    let tris: Vec<usize> = (0..tt.num_faces())
        .filter(|&f| tt.face_size(f) == 3)
        .collect();
    let shrunk = eval(ops::shrink_all(&tt, &tris))?;
    ensure(isomorphic(&shrunk, &make("T")?.map), || {
        "shrunk tT ≇ T".into()
    })?;

    // J72..J83 from eD recipes, pairwise distinct
    let mut codes = BTreeSet::new();
    for r in catalog::Recipe::all() {
        let t = catalog::derive_from_ed(&r).map_err(|e| e.to_string())?;
        ensure(t.census_matches(), || {
            format!("{} census {}", t.name, t.census())
        })?;
        codes.insert(canonical_code(&t.map));
    }
    ensure(codes.len() == 12, || {
        format!("{} distinct of 12", codes.len())
    })?;

    // a decagon left by one removed cupola takes it back in either orientation
    let j76 = make("J76")?;
    let dec = face_of_size(&j76.map, 10)?;
    let ed = make("eD")?.map;
    let j72 = make("J72")?.map;
    let back: Vec<TilingMap> = (0..2)
        .map(|p| eval(ops::cupola_subdivide(&j76.map, &j76.assignment, dec, p)))
        .collect::<Result<_, _>>()?;
    ensure(
        back.iter().any(|t| isomorphic(t, &ed)) && back.iter().any(|t| isomorphic(t, &j72)),
        || "J76 + cupola does not give eD and J72".into(),
    )?;
    Ok("J19→eC/J37, J4→J19, J11→I, tT→T, 12 distinct J72–J83, J76→eD/J72".into())
}

/// Independent brute force over the inequality Σ(1 − 2/m) < 2.
fn brute_force_types(max: u32) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    let planar = |m: u32| Ratio::new(m as i64 - 2, m as i64);
    let two = Ratio::from_integer(2i64);
    for k in 3..=5usize {
        let mut idx = vec![3u32; k];
        loop {
            let sorted = idx.windows(2).all(|w| w[0] <= w[1]);
            if sorted && idx.iter().map(|&m| planar(m)).sum::<Ratio<i64>>() < two {
                out.insert(idx.clone());
            }
            // odometer over {3..max}^k
            let mut pos = 0;
            while pos < k && idx[pos] == max {
                idx[pos] = 3;
                pos += 1;
            }
            if pos == k {
                break;
            }
            idx[pos] += 1;
        }
    }
    out
}

fn enumeration_oracle() -> Outcome {
    let got: BTreeSet<Vec<u32>> = enumerate_candidate_types(19)
        .into_iter()
        .map(|t| t.entries().to_vec())
        .collect();
    let want = brute_force_types(19);
    ensure(got == want, || {
        format!(
            "{} extra, {} missing",
            got.difference(&want).count(),
            want.difference(&got).count()
        )
    })?;
    let deg5: BTreeSet<Vec<u32>> = got
        .iter()
        .filter(|t| t.len() == 5 && t[0] == 3)
        .cloned()
        .collect();
    let expect: BTreeSet<Vec<u32>> = [
        vec![3, 3, 3, 3, 3],
        vec![3, 3, 3, 3, 4],
        vec![3, 3, 3, 3, 5],
    ]
    .into_iter()
    .collect();
    ensure(deg5 == expect, || {
        format!("degree-5 triangle list {deg5:?}")
    })?;
    Ok(format!(
        "{} types; degree 5 with a triangle: 3^5, 3^4.4, 3^4.5",
        got.len()
    ))
}

fn embedding() -> Outcome {
    let names = catalog::list(None);
    let mut worst_closure: f64 = 0.0;
    let mut worst_area: f64 = 0.0;
    for name in &names {
        let t = make(name)?;
        let e = embedder::embed(&t.map, &t.assignment).map_err(|e| format!("{name}: {e}"))?;
        ensure(e.closure_error < CLOSURE_TOL, || {
            format!("{name}: closure {:e}", e.closure_error)
        })?;
        let m = embedder::metrics(&t.map, &e);
        let edge = m
            .edge_lengths
            .iter()
            .map(|l| (l - t.assignment.edge()).abs())
            .fold(0.0, f64::max);
        ensure(edge < EDGE_TOL, || {
            format!("{name}: edge deviation {edge:e}")
        })?;
        let area = (m.total_area() - 4.0 * PI).abs();
        ensure(area < AREA_TOL, || {
            format!("{name}: area deviation {area:e}")
        })?;
        worst_closure = worst_closure.max(e.closure_error);
        worst_area = worst_area.max(area);
    }
    Ok(format!(
        "{} entries; worst closure {worst_closure:.1e}, worst area {worst_area:.1e}",
        names.len()
    ))
}

fn run_prop<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: 512,
        failure_persistence: None,
        rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn property_suites() -> Outcome {
    // angle_from_edge increases with m at fixed edge
    // edges stay below the hemisphere edge 2π/(m + 1) of the larger polygon
    let fraction = 0.001f64..0.999;
    run_prop((3u32..18, fraction.clone()), |(m, f)| {
        let x = f * TAU / (m + 1) as f64;
        let a = angle_from_edge(m, x).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let b = angle_from_edge(m + 1, x).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(b > a);
        Ok(())
    })?;
    // companion symmetry and concave mirror
    run_prop((3u32..12, 3u32..12, fraction), |(m, n, f)| {
        let x = f * TAU / m.max(n) as f64;
        let am = angle_from_edge(m, x).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let an = angle_from_edge(n, x).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(companion_residual(m, am, n, an).abs() < 1e-12);
        prop_assert!(companion_residual(n, an, m, am).abs() < 1e-12);
        prop_assert!(companion_residual(m, TAU - am, n, TAU - an).abs() < 1e-12);
        Ok(())
    })?;

    let err = |e: spherical_tilings::Error| e.to_string();
    // truncate one degree-3 vertex, shrink the new triangle back
    for name in ["T", "C", "D", "tO", "bC", "prism(7)"] {
        let t = make(name)?.map;
        let v = (0..t.num_vertices())
            .find(|&v| t.degrees()[v] == 3)
            .ok_or("no cubic vertex")?;
        let cut = ops::truncate(&t, v).map_err(err)?;
        let new_face = cut.num_faces() - 1;
        let back = ops::shrink(&cut, new_face).map_err(err)?;
        ensure(isomorphic(&back, &t), || format!("{name}: shrink∘truncate"))?;
    }
    // pyramid subdivide then delete the apex; diminish a cupola then put it back
    let j11 = make("J11")?;
    let i = ops::pyramid_subdivide(&j11.map, &j11.assignment, face_of_size(&j11.map, 5)?)
        .map_err(err)?;
    let again = ops::delete_vertex(&i, i.num_vertices() - 1).map_err(err)?;
    ensure(isomorphic(&again, &j11.map), || "delete∘pyramid".into())?;
    for (whole, part) in [("aC", "J3"), ("eC", "J19"), ("eD", "J76")] {
        let p = make(part)?;
        let big = *p
            .map
            .faces()
            .iter()
            .map(|f| f.len())
            .collect::<BTreeSet<_>>()
            .last()
            .unwrap_or(&0);
        let face = face_of_size(&p.map, big as u32)?;
        let w = make(whole)?.map;
        let ok = (0..2).any(|par| {
            ops::cupola_subdivide(&p.map, &p.assignment, face, par)
                .map(|t| isomorphic(&t, &w))
                .unwrap_or(false)
        });
        ensure(ok, || format!("{part} + cupola ≇ {whole}"))?;
    }

    // homogeneity classes
    let weak = ["J27", "J34", "J72", "J73", "J74", "J75"];
    for name in catalog::list(None) {
        let t = make(&name)?;
        let strong = matches!(
            t.kind,
            Kind::Platonic | Kind::Archimedean | Kind::Prism | Kind::Antiprism
        ) || matches!(t.kind, Kind::Hosohedron | Kind::Dihedron)
            || name == "J37";
        let want = if strong {
            Homogeneity::Strong
        } else if weak.contains(&name.as_str()) {
            Homogeneity::WeakOnly
        } else {
            Homogeneity::None
        };
        let got = homogeneity(&t.map);
        ensure(got == want, || format!("{name}: {got:?}, want {want:?}"))?;
    }
    Ok("monotonicity, companion symmetry/mirror, inverse pairs, homogeneity classes".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("catalog validation", catalog_validation),
        ("groebner reproduction", groebner_reproduction),
        ("derived sizes", derived_sizes),
        ("closed forms", closed_forms),
        ("operator identities", operator_identities),
        ("enumeration oracle", enumeration_oracle),
        ("embedding", embedding),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
