//! Vertex types, remainders and angle arrangements.
//!
//! A vertex of degree `d` meeting faces of sizes `m_1, …, m_d` is admissible
//! only if `Σ (1 − 2/m_i) < 2`, because every spherical `m`-gon has angles
//! above the planar value `(1 − 2/m)π`. The comparison is done over the
//! rationals so that planar boundary cases such as `6·6·6` are excluded
//! exactly.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num::rational::Ratio;

use crate::algsolve::AngleAssignment;
use crate::error::{Error, Result};

/// Default bound on face sizes when enumerating candidate types.
pub const DEFAULT_MAX_SIZE: u32 = 19;

const TAU: f64 = 2.0 * PI;

/// Multiset of face sizes at a vertex, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexType(Vec<u32>);

impl VertexType {
    pub fn new(mut entries: Vec<u32>) -> Self {
        entries.sort_unstable();
        Self(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, m: u32) -> bool {
        self.0.contains(&m)
    }

    /// Degree in `{3, 4, 5}` and the strict planar bound holds.
    pub fn is_admissible(&self) -> bool {
        (3..=5).contains(&self.degree())
            && self.0.iter().all(|&m| m >= 3)
            && planar_sum(&self.0) < Ratio::from_integer(2)
    }

    pub fn angle_sum(&self, assign: &AngleAssignment) -> Result<f64> {
        assign.angle_sum(&self.0)
    }
}

/// `Σ (1 − 2/m)` over the entries, exactly.
fn planar_sum(entries: &[u32]) -> Ratio<i64> {
    entries
        .iter()
        .map(|&m| Ratio::new(m as i64 - 2, m as i64))
        .sum()
}

fn write_powers(f: &mut fmt::Formatter<'_>, entries: &[u32]) -> fmt::Result {
    let mut i = 0;
    let mut first = true;
    while i < entries.len() {
        let m = entries[i];
        let k = entries[i..].iter().take_while(|&&e| e == m).count();
        if !first {
            write!(f, ".")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{m}")?;
        } else {
            write!(f, "{m}^{k}")?;
        }
        i += k;
    }
    Ok(())
}

impl fmt::Display for VertexType {
    /// Exponent notation, e.g. `3.4^2.5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_powers(f, &self.0)
    }
}

fn parse_sizes(s: &str) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for part in s.split([',', '.', ' ']).filter(|p| !p.is_empty()) {
        let (base, exp) = match part.split_once('^') {
            Some((b, e)) => (b, e),
            None => (part, "1"),
        };
        let m: u32 = base
            .trim()
            .parse()
            .map_err(|_| Error::Format(format!("bad face size `{base}`")))?;
        let k: usize = exp
            .trim()
            .parse()
            .map_err(|_| Error::Format(format!("bad exponent `{exp}`")))?;
        out.extend(std::iter::repeat(m).take(k));
    }
    if out.is_empty() {
        return Err(Error::Format("empty vertex type".into()));
    }
    Ok(out)
}

impl FromStr for VertexType {
    type Err = Error;

    /// Accepts `3,4,4,5`, `3.4.4.5` or `3.4^2.5`.
    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::new(parse_sizes(s)?))
    }
}

/// Cyclic order of face sizes around a vertex, stored in its canonical form:
/// the lexicographically smallest rotation of the sequence or its reverse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrangement(Vec<u32>);

impl Arrangement {
    pub fn new(cycle: Vec<u32>) -> Self {
        Self(canonical_cycle(&cycle))
    }

    pub fn cycle(&self) -> &[u32] {
        &self.0
    }

    pub fn vertex_type(&self) -> VertexType {
        VertexType::new(self.0.clone())
    }
}

/// Lexicographically least rotation of `c` or of its reversal.
pub fn canonical_cycle(c: &[u32]) -> Vec<u32> {
    let n = c.len();
    let mut best: Option<Vec<u32>> = None;
    let rev: Vec<u32> = c.iter().rev().copied().collect();
    for seq in [c, &rev[..]] {
        for s in 0..n {
            let cand: Vec<u32> = (0..n).map(|i| seq[(s + i) % n]).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

impl fmt::Display for Arrangement {
    /// Cyclic sequence, e.g. `3.4.5.4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl FromStr for Arrangement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::new(parse_sizes(s)?))
    }
}

/// Incident faces known so far at a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PartialType(Vec<u32>);

impl PartialType {
    pub fn new(mut entries: Vec<u32>) -> Self {
        entries.sort_unstable();
        Self(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn remainder(&self, assign: &AngleAssignment) -> Result<f64> {
        remainder(self, assign)
    }
}

/// Angle left at a vertex after the faces of `partial`; zero or negative
/// means nothing more fits.
pub fn remainder(partial: &PartialType, assign: &AngleAssignment) -> Result<f64> {
    Ok(TAU - assign.angle_sum(&partial.0)?)
}

/// Every admissible vertex type with face sizes in `3..=max_size`, as sorted
/// multisets in ascending lexicographic order.
pub fn enumerate_candidate_types(max_size: u32) -> Vec<VertexType> {
    fn extend(prefix: &mut Vec<u32>, sum: Ratio<i64>, max_size: u32, out: &mut Vec<VertexType>) {
        if prefix.len() >= 3 {
            out.push(VertexType(prefix.clone()));
        }
        if prefix.len() == 5 {
            return;
        }
        let from = prefix.last().copied().unwrap_or(3);
        for m in from..=max_size {
            let next = sum + Ratio::new(m as i64 - 2, m as i64);
            if next >= Ratio::from_integer(2) {
                // larger m only increases the sum
                break;
            }
            prefix.push(m);
            extend(prefix, next, max_size, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), Ratio::from_integer(0), max_size, &mut out);
    out.sort();
    out
}

/// Candidate types over the sizes of `assign` whose angles close up to `2π`
/// within `tol`.
///
/// An angle only determines its polygon's edge up to the concave
/// complement, so one size in the type may instead contribute `2π − α_m`,
/// provided it occurs once (two non-convex corners cannot share a vertex).
pub fn feasible_types(assign: &AngleAssignment, tol: f64) -> Vec<VertexType> {
    let sizes: BTreeSet<u32> = assign.sizes().filter(|&m| m >= 3).collect();
    let Some(&max_size) = sizes.iter().next_back() else {
        return Vec::new();
    };
    enumerate_candidate_types(max_size.max(3))
        .into_iter()
        .filter(|t| t.entries().iter().all(|m| sizes.contains(m)))
        .filter(|t| {
            let Ok(sum) = t.angle_sum(assign) else {
                return false;
            };
            if (sum - TAU).abs() <= tol {
                return true;
            }
            let mut distinct = t.entries().to_vec();
            distinct.dedup();
            distinct.iter().any(|&m| {
                let once = t.entries().iter().filter(|&&e| e == m).count() == 1;
                let a = assign.get(m).unwrap_or(f64::NAN);
                once && (sum - a + (TAU - a) - TAU).abs() <= tol
            })
        })
        .collect()
}

/// All distinct arrangements of a vertex type, in canonical order.
pub fn arrangements(t: &VertexType) -> Vec<Arrangement> {
    fn permute(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
        if rest.is_empty() {
            out.insert(canonical_cycle(cur));
            return;
        }
        let mut tried = BTreeSet::new();
        for i in 0..rest.len() {
            if !tried.insert(rest[i]) {
                continue;
            }
            let v = rest.remove(i);
            cur.push(v);
            permute(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = BTreeSet::new();
    permute(&mut t.entries().to_vec(), &mut Vec::new(), &mut out);
    out.into_iter().map(Arrangement).collect()
}
