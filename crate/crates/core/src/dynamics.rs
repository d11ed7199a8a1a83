//! Exact circle rotations.
//!
//! The first-return map of a linear foliation of the torus on a transverse
//! circle is the rotation `x -> x + alpha (mod 1)`. Rational angles give
//! closed leaves; irrational angles give dense leaves. An irrational angle
//! is held as a truncated continued fraction and density is certified by the
//! decay of the largest orbit gap along convergent denominators.
//!
//! Dubois-Violette's foliation of the four-times punctured sphere is the
//! Kronecker foliation modulo the elliptic involution `x -> -x`; on the
//! transverse circle this folds `[0, 1)` onto `[0, 1/2]`, with the fixed
//! points `0` and `1/2` marking separatrices.
//!
//! No floating point is used anywhere in this module.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::classifier::{Provenance, Verdict};
use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Always `p/q`, including `0/1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Fractional part in `[0, 1)`.
pub fn frac(r: &Rational) -> Rational {
    r - r.floor()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RotationKind {
    Rational,
    TruncatedIrrational,
}

/// Rotation angle as a continued fraction `[0; a1, a2, ...]`, reduced mod 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationNumber {
    terms: Vec<u64>,
    kind: RotationKind,
}

impl RotationNumber {
    /// The leading term is dropped to 0 (reduction mod 1). Rational
    /// expansions are made canonical: a trailing 1 is absorbed into the
    /// previous term.
    pub fn new(terms: Vec<u64>, kind: RotationKind) -> Result<Self> {
        let Some((_, tail)) = terms.split_first() else {
            return Err(Error::InvalidArgument("empty continued fraction".into()));
        };
        if let Some(pos) = tail.iter().position(|&a| a == 0) {
            return Err(Error::InvalidArgument(format!("partial quotient {} is zero", pos + 1)));
        }
        let mut terms = terms;
        terms[0] = 0;
        if kind == RotationKind::Rational && terms.len() >= 2 && terms[terms.len() - 1] == 1 {
            terms.pop();
            if terms.len() == 1 {
                // value was an integer
                terms[0] = 0;
            } else {
                *terms.last_mut().unwrap() += 1;
            }
        }
        Ok(RotationNumber { terms, kind })
    }

    /// Continued fraction of the fractional part of `r`.
    pub fn from_rational(r: Rational) -> Self {
        let r = frac(&r);
        let mut terms = vec![0];
        let (mut num, mut den) = (*r.denom(), *r.numer());
        while den != 0 {
            terms.push((num / den) as u64);
            (num, den) = (den, num % den);
        }
        RotationNumber { terms, kind: RotationKind::Rational }
    }

    /// `[0; 1, 1, ..., 1]` with `depth` ones.
    pub fn golden(depth: usize) -> Self {
        let mut terms = vec![1; depth + 1];
        terms[0] = 0;
        RotationNumber { terms, kind: RotationKind::TruncatedIrrational }
    }

    /// Parses `a0;a1,a2,...`.
    pub fn parse(text: &str, kind: RotationKind) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("malformed continued fraction `{text}`"));
        let (head, tail) = match text.trim().split_once(';') {
            Some((h, t)) => (h, t),
            None => (text.trim(), ""),
        };
        let mut terms = vec![head.trim().parse::<u64>().map_err(|_| bad())?];
        if !tail.trim().is_empty() {
            for t in tail.split(',') {
                terms.push(t.trim().parse::<u64>().map_err(|_| bad())?);
            }
        }
        RotationNumber::new(terms, kind)
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn kind(&self) -> RotationKind {
        self.kind
    }

    /// Exact value of the full (truncated) expansion.
    pub fn value(&self) -> Result<Rational> {
        convergent(self, self.terms.len() - 1)
    }

    /// Denominators `q_0, q_1, ...` of all convergents.
    pub fn convergent_denominators(&self) -> Result<Vec<i64>> {
        (0..self.terms.len()).map(|k| convergent(self, k).map(|c| *c.denom())).collect()
    }
}

impl fmt::Display for RotationNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.terms[0])?;
        for (i, a) in self.terms[1..].iter().enumerate() {
            f.write_str(if i == 0 { ";" } else { "," })?;
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for RotationNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RotationNumber::parse(s, RotationKind::TruncatedIrrational)
    }
}

/// The `depth`-th convergent `p_depth / q_depth`, using
/// `p_k = a_k p_{k-1} + p_{k-2}` and likewise for `q`.
pub fn convergent(rot: &RotationNumber, depth: usize) -> Result<Rational> {
    if depth >= rot.terms.len() {
        return Err(Error::InvalidArgument(format!(
            "depth {depth} beyond expansion of length {}",
            rot.terms.len()
        )));
    }
    let overflow = || Error::InvalidArgument("convergent overflows 64-bit integers".into());
    let (mut p_prev, mut p) = (0i64, 1i64);
    let (mut q_prev, mut q) = (1i64, 0i64);
    for &a in &rot.terms[..=depth] {
        let a = i64::try_from(a).map_err(|_| overflow())?;
        let p_next = a.checked_mul(p).and_then(|x| x.checked_add(p_prev)).ok_or_else(overflow)?;
        let q_next = a.checked_mul(q).and_then(|x| x.checked_add(q_prev)).ok_or_else(overflow)?;
        (p_prev, p) = (p, p_next);
        (q_prev, q) = (q, q_next);
    }
    Ok(Ratio::new(p, q))
}

/// Points of an orbit over a common denominator.
struct Lattice {
    denom: i64,
    /// Numerators in orbit order, each in `[0, denom)`.
    orbit: Vec<i64>,
}

fn lattice_orbit(alpha: &Rational, n: usize, seed: &Rational) -> Lattice {
    let (alpha, seed) = (frac(alpha), frac(seed));
    let denom = alpha.denom().lcm(seed.denom());
    let step = i128::from(*alpha.numer()) * i128::from(denom / alpha.denom());
    let start = i128::from(*seed.numer()) * i128::from(denom / seed.denom());
    let orbit = (0..n as i128).map(|i| ((start + i * step) % i128::from(denom)) as i64).collect();
    Lattice { denom, orbit }
}

/// Orbit points `frac(seed + i alpha)` for `0 <= i < n`, in orbit order.
pub fn orbit_points(alpha: &Rational, n: usize, seed: &Rational) -> Vec<Rational> {
    let lat = lattice_orbit(alpha, n, seed);
    lat.orbit.iter().map(|&x| Ratio::new(x, lat.denom)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitStats {
    /// Distinct points, sorted.
    #[serde(serialize_with = "ser_rationals")]
    pub points: Vec<Rational>,
    #[serde(serialize_with = "ser_rational")]
    pub max_gap: Rational,
    pub distinct_gaps: usize,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

fn ser_rationals<S: serde::Serializer>(rs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(format_rational))
}

/// Sorted distinct points of the orbit of 0 and their circular gaps.
pub fn orbit_stats(alpha: &Rational, n: usize) -> Result<OrbitStats> {
    if n == 0 {
        return Err(Error::InvalidArgument("orbit length must be at least 1".into()));
    }
    let lat = lattice_orbit(alpha, n, &Rational::zero());
    let sorted: Vec<i64> = lat.orbit.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let mut gaps: Vec<i64> = sorted.windows(2).map(|w| w[1] - w[0]).collect();
    gaps.push(lat.denom - sorted[sorted.len() - 1] + sorted[0]);
    let max_gap = *gaps.iter().max().expect("at least one gap");
    let distinct_gaps = gaps.iter().collect::<BTreeSet<_>>().len();
    Ok(OrbitStats {
        points: sorted.iter().map(|&x| Ratio::new(x, lat.denom)).collect(),
        max_gap: Ratio::new(max_gap, lat.denom),
        distinct_gaps,
    })
}

/// Three-distance theorem: the first `n` orbit points cut the circle into
/// gaps of at most three lengths.
pub fn three_distance_check(alpha: &Rational, n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidArgument("three-distance check needs at least 2 points".into()));
    }
    Ok(orbit_stats(alpha, n)?.distinct_gaps <= 3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GapStep {
    pub n: i64,
    #[serde(serialize_with = "ser_rational")]
    pub max_gap: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KroneckerReport {
    pub verdict: Verdict,
    /// Reduced denominator of a rational angle: every leaf closes after this many returns.
    pub period: Option<i64>,
    /// Largest orbit gap at each distinct convergent denominator.
    pub certificate: Vec<GapStep>,
    pub certificate_decreasing: bool,
}

/// Rational angle: closed leaves. Truncated irrational: dense leaves,
/// certified by strictly decreasing largest gaps at `N = q_k`.
pub fn kronecker_verdict(rot: &RotationNumber) -> Result<KroneckerReport> {
    let alpha = rot.value()?;
    match rot.kind() {
        RotationKind::Rational => Ok(KroneckerReport {
            verdict: Verdict::no(Provenance::PeriodicLeaves),
            period: Some(*alpha.denom()),
            certificate: Vec::new(),
            certificate_decreasing: false,
        }),
        RotationKind::TruncatedIrrational => {
            let mut denominators = rot.convergent_denominators()?;
            denominators.dedup();
            let certificate = denominators
                .into_iter()
                .map(|q| Ok(GapStep { n: q, max_gap: orbit_stats(&alpha, q as usize)?.max_gap }))
                .collect::<Result<Vec<_>>>()?;
            let decreasing = certificate.windows(2).all(|w| w[1].max_gap < w[0].max_gap);
            let verdict = if decreasing {
                Verdict::yes(Provenance::Kronecker)
            } else {
                Verdict::unknown("gap decay certificate failed")
            };
            Ok(KroneckerReport { verdict, period: None, certificate, certificate_decreasing: decreasing })
        }
    }
}

/// Involution fold `x -> min(x, 1 - x)`.
pub fn fold(x: &Rational) -> Rational {
    let x = frac(x);
    let mirrored = Rational::one() - x;
    if mirrored < x {
        mirrored
    } else {
        x
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoldedOrbit {
    /// Distinct folded points in `[0, 1/2]`, sorted.
    #[serde(serialize_with = "ser_rationals")]
    pub points: Vec<Rational>,
    /// Largest gap on `[0, 1/2]`, counting the gaps at both ends.
    #[serde(serialize_with = "ser_rational")]
    pub max_gap: Rational,
    /// Orbit indices landing on a fixed point of the involution.
    pub separatrix_hits: Vec<usize>,
}

/// Orbit of `seed` under rotation by `alpha`, folded by the involution.
pub fn dubois_violette_orbit(alpha: &Rational, n: usize, seed: &Rational) -> Result<FoldedOrbit> {
    if n == 0 {
        return Err(Error::InvalidArgument("orbit length must be at least 1".into()));
    }
    let half = Ratio::new(1, 2);
    let raw = orbit_points(alpha, n, seed);
    let separatrix_hits =
        raw.iter().enumerate().filter(|(_, x)| x.is_zero() || **x == half).map(|(i, _)| i).collect();
    let points: Vec<Rational> = raw.iter().map(fold).collect::<BTreeSet<_>>().into_iter().collect();
    let mut max_gap = points[0];
    for w in points.windows(2) {
        max_gap = max_gap.max(w[1] - w[0]);
    }
    max_gap = max_gap.max(half - points[points.len() - 1]);
    Ok(FoldedOrbit { points, max_gap, separatrix_hits })
}
