//! Univariate polynomials with exact rational coefficients and real root
//! isolation by Sturm sequences.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

/// Polynomial with rational coefficients, stored in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Integer coefficients in ascending degree.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Integer coefficients given as `(coefficient, exponent)` terms.
    pub fn from_terms(terms: &[(i64, usize)]) -> Self {
        let degree = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        for &(c, e) in terms {
            coeffs[e] += BigRational::from_integer(BigInt::from(c));
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> &BigRational {
        self.coeffs
            .last()
            .expect("zero polynomial has no leading term")
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    /// Euclidean division `self = q·d + r`.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Polynomial::new(Vec::new()), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        let lead = d.leading().recip();
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Polynomial::new(q), Polynomial::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Same roots, each with multiplicity one.
    pub fn square_free(&self) -> Polynomial {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        self.div_rem(&g).0.monic()
    }

    /// Sturm sequence of the polynomial.
    pub fn sturm_sequence(&self) -> Vec<Polynomial> {
        let mut seq = vec![self.clone()];
        let d = self.derivative();
        if d.is_zero() {
            return seq;
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                return seq;
            }
            seq.push(r.scale(&-BigRational::one()));
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "{a}*x")?,
                _ if a.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}

fn sign_changes(seq: &[Polynomial], x: &BigRational) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for p in seq {
        let s = p.eval(x);
        let s = if s.is_positive() {
            1
        } else if s.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite interval endpoint")
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// Width below which an isolating interval is reported as its midpoint.
const ROOT_WIDTH: f64 = 1e-17;

/// All distinct real roots of `p` in the closed interval `[lo, hi]`, in
/// ascending order, each accurate to well below `1e-14`.
pub fn isolate_roots(p: &Polynomial, lo: f64, hi: f64) -> Vec<f64> {
    assert!(!p.is_zero(), "the zero polynomial has no isolated roots");
    if p.degree() == Some(0) || !(lo <= hi) {
        return Vec::new();
    }
    let mut sf = p.square_free();
    let (lo, hi) = (rational(lo), rational(hi));
    let mut roots = Vec::new();
    // endpoint roots are exact; divide them out so the open search never sees them
    for end in [&lo, &hi] {
        if sf.eval(end).is_zero() && !roots.contains(end) {
            roots.push(end.clone());
            let linear = Polynomial::new(vec![-end.clone(), BigRational::one()]);
            sf = sf.div_rem(&linear).0;
        }
    }
    if hi != lo && sf.degree().is_some_and(|d| d > 0) {
        let seq = sf.sturm_sequence();
        isolate_open(&sf, &seq, lo, hi, &mut roots);
    }
    roots.sort();
    roots
        .iter()
        .map(|r| r.to_f64().unwrap_or(f64::NAN))
        .collect()
}

/// Roots strictly inside `(a, b)`, where neither endpoint is a root.
fn isolate_open(
    p: &Polynomial,
    seq: &[Polynomial],
    a: BigRational,
    b: BigRational,
    out: &mut Vec<BigRational>,
) {
    let mut stack = vec![(a, b)];
    while let Some((a, b)) = stack.pop() {
        let va = sign_changes(seq, &a);
        let vb = sign_changes(seq, &b);
        let vb = if p.eval(&b).is_zero() { vb + 1 } else { vb };
        let count = va.saturating_sub(vb);
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(refine(p, a, b));
            continue;
        }
        let mid = half(&a, &b);
        if p.eval(&mid).is_zero() {
            out.push(mid.clone());
        }
        stack.push((mid.clone(), b));
        stack.push((a, mid));
    }
}

/// Bisection on the sign of a square-free polynomial with one simple root in `(a, b)`.
fn refine(p: &Polynomial, mut a: BigRational, mut b: BigRational) -> BigRational {
    // relative width means nothing near zero, and dyadic midpoints may never hit it
    let zero = BigRational::zero();
    if a < zero && zero < b && p.eval(&zero).is_zero() {
        return zero;
    }
    let sa = p.eval(&a).signum();
    for _ in 0..256 {
        let width = (&b - &a).to_f64().unwrap_or(0.0);
        let scale = a.abs().to_f64().unwrap_or(1.0).max(1.0);
        if width <= ROOT_WIDTH * scale {
            break;
        }
        let mid = half(&a, &b);
        let sm = p.eval(&mid).signum();
        if sm.is_zero() {
            return mid;
        }
        if sm == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    half(&a, &b)
}
