//! Exact tails of `S = Σ εᵢaᵢ` by exhaustive enumeration, and binomial tails.
//!
//! The `2ⁿ` sign vectors are split into two halves of sizes `⌊n/2⌋` and
//! `⌈n/2⌉`; the right half sums are sorted once and each left sum counts its
//! partners by binary search. Counts are integers, so probabilities are exact
//! multiples of `2⁻ⁿ` in both modes.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{comparison_bound, BoundKind};
use crate::coeffs::Coefficients;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`exact_tail`].
pub const MAX_N: usize = 24;
/// Float-mode tie band: sums within this distance of `x` count as `≥ x`.
pub const TIE_TOL: f64 = 1e-12;
/// Largest `n_max` accepted by [`equal_weight_sup`].
pub const MAX_EQUAL_N: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TailResult {
    /// `#{s : Σ sᵢaᵢ ≥ x}`
    pub count_ge: u64,
    /// `#{s : Σ sᵢaᵢ = x}` (within the tie band in float mode)
    pub count_atom: u64,
    pub n: u32,
}

impl TailResult {
    pub fn n_outcomes(&self) -> u64 {
        1u64 << self.n
    }

    pub fn probability(&self) -> f64 {
        self.count_ge as f64 / self.n_outcomes() as f64
    }

    pub fn atom_mass(&self) -> f64 {
        self.count_atom as f64 / self.n_outcomes() as f64
    }

    /// `P(S > x)`.
    pub fn strict_probability(&self) -> f64 {
        (self.count_ge - self.count_atom) as f64 / self.n_outcomes() as f64
    }

    pub fn probability_exact(&self) -> BigRational {
        BigRational::new(self.count_ge.into(), BigUint::from(self.n_outcomes()).into())
    }
}

fn half_sums<T: Clone + Send>(vals: &[T], zero: T, add: impl Fn(&T, &T) -> T, sub: impl Fn(&T, &T) -> T) -> Vec<T> {
    let mut sums = vec![zero];
    for v in vals {
        let mut next = Vec::with_capacity(sums.len() * 2);
        for s in &sums {
            next.push(add(s, v));
            next.push(sub(s, v));
        }
        sums = next;
    }
    sums
}

fn cap(c: &Coefficients) -> Result<()> {
    if c.len() > MAX_N {
        return Err(Error::Capacity(format!("exact enumeration is capped at n = {MAX_N}, got {}", c.len())));
    }
    Ok(())
}

/// Precomputed half sums for repeated float-mode queries.
pub struct FloatTable {
    left: Vec<f64>,
    right: Vec<f64>,
    n: u32,
}

impl FloatTable {
    pub fn new(c: &Coefficients) -> Result<Self> {
        cap(c)?;
        let v = c.values();
        let mid = v.len() / 2;
        let left = half_sums(&v[..mid], 0.0, |a, b| a + b, |a, b| a - b);
        let mut right = half_sums(&v[mid..], 0.0, |a, b| a + b, |a, b| a - b);
        right.sort_by(f64::total_cmp);
        Ok(FloatTable { left, right, n: v.len() as u32 })
    }

    pub fn tail(&self, x: f64) -> TailResult {
        let r = &self.right;
        let count = |l: &f64| -> (u64, u64) {
            let lo = r.partition_point(|v| *v < x - TIE_TOL - l);
            let hi = r.partition_point(|v| *v <= x + TIE_TOL - l);
            ((r.len() - lo) as u64, (hi - lo) as u64)
        };
        let (ge, atom) = if self.left.len() >= 1024 {
            self.left.par_iter().map(count).reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
        } else {
            self.left.iter().map(count).fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
        };
        TailResult { count_ge: ge, count_atom: atom, n: self.n }
    }
}

fn exact_tail_rational_unchecked(c: &[BigRational], x: &BigRational) -> TailResult {
    let mid = c.len() / 2;
    let add = |a: &BigRational, b: &BigRational| a + b;
    let sub = |a: &BigRational, b: &BigRational| a - b;
    let left = half_sums(&c[..mid], BigRational::zero(), add, sub);
    let mut right = half_sums(&c[mid..], BigRational::zero(), add, sub);
    right.sort();
    let (ge, atom) = left
        .par_iter()
        .map(|l| {
            let need = x - l;
            let lo = right.partition_point(|v| *v < need);
            let hi = right.partition_point(|v| *v <= need);
            ((right.len() - lo) as u64, (hi - lo) as u64)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    TailResult { count_ge: ge, count_atom: atom, n: c.len() as u32 }
}

/// `P(S ≥ x)` with ties at `x` included.
///
/// Exact-mode coefficients compare against the exact value of the float `x`.
pub fn exact_tail(c: &Coefficients, x: f64) -> Result<TailResult> {
    cap(c)?;
    if !x.is_finite() {
        return Err(Error::domain(format!("threshold must be finite, got {x}")));
    }
    match c.exact_values() {
        Some(ex) => {
            let xr = BigRational::from_f64(x).expect("finite");
            Ok(exact_tail_rational_unchecked(ex, &xr))
        }
        None => Ok(FloatTable::new(c)?.tail(x)),
    }
}

/// `P(S ≥ x)` for a rational threshold; requires exact-mode coefficients.
pub fn exact_tail_rational(c: &Coefficients, x: &BigRational) -> Result<TailResult> {
    cap(c)?;
    let ex = c
        .exact_values()
        .ok_or_else(|| Error::domain("rational thresholds need exact-mode coefficients"))?;
    Ok(exact_tail_rational_unchecked(ex, x))
}

/// Smallest number of `+1` signs with `(2k − n)/√n ≥ x` (same tie band as float mode).
fn binomial_threshold(n: u64, x: f64) -> i64 {
    let nf = n as f64;
    ((nf + (x - TIE_TOL) * nf.sqrt()) / 2.0).ceil().max(0.0) as i64
}

/// `P(ε₁ + … + εₙ ≥ x√n)`, exact.
pub fn binomial_tail(n: u64, x: f64) -> Result<BigRational> {
    if n == 0 || !x.is_finite() {
        return Err(Error::domain(format!("binomial tail needs n >= 1 and finite x, got n = {n}, x = {x}")));
    }
    let k0 = binomial_threshold(n, x);
    let mut total = BigUint::zero();
    if (k0 as u64) <= n {
        // C(n, k) from k = n downwards
        let mut c = BigUint::one();
        let mut k = n;
        loop {
            total += &c;
            if k as i64 <= k0 {
                break;
            }
            c = c * BigUint::from(k) / BigUint::from(n - k + 1);
            k -= 1;
        }
    }
    Ok(BigRational::new(total.into(), (BigUint::one() << n).into()))
}

/// Floating evaluation of [`binomial_tail`] in log space.
pub fn binomial_tail_f64(n: u64, x: f64) -> f64 {
    let k0 = binomial_threshold(n, x);
    if k0 as u64 > n {
        return 0.0;
    }
    let ln2 = std::f64::consts::LN_2;
    let nf = n as f64;
    let k0 = k0 as u64;
    let m = k0.min(n - k0);
    let mut ln_c = (1..=m).map(|i| ((nf - i as f64 + 1.0) / i as f64).ln()).sum::<f64>();
    let mut sum = 0.0;
    for k in k0..=n {
        sum += (ln_c - nf * ln2).exp();
        if k < n {
            ln_c += ((nf - k as f64) / (k as f64 + 1.0)).ln();
        }
    }
    sum.min(1.0)
}

/// `max_{1 ≤ n ≤ n_max} P(ε₁ + … + εₙ ≥ x√n)` and the smallest maximizer.
pub fn equal_weight_sup(x: f64, n_max: u64) -> Result<(f64, u64)> {
    if n_max == 0 || n_max > MAX_EQUAL_N {
        return Err(Error::Capacity(format!("n_max must be in 1..={MAX_EQUAL_N}, got {n_max}")));
    }
    let vals: Vec<f64> = (1..=n_max).into_par_iter().map(|n| binomial_tail_f64(n, x)).collect();
    let mut best = (vals[0], 1);
    for (i, &v) in vals.iter().enumerate().skip(1) {
        if v > best.0 * (1.0 + 1e-12) && v > 0.0 {
            best = (v, i as u64 + 1);
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub coeffs: Vec<f64>,
    pub x: f64,
    pub exact: f64,
    pub bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ViolationReport {
    pub kind: BoundKind,
    pub pairs_checked: u64,
    pub violations: Vec<Violation>,
    /// Smallest `bound − exact` over checked pairs.
    pub min_margin: f64,
}

impl ViolationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compare exact tails with a catalog bound wherever it is valid.
pub fn verify_bound(kind: BoundKind, set: &[Coefficients], xs: &[f64]) -> Result<ViolationReport> {
    let per: Vec<(u64, Vec<Violation>, f64)> = set
        .par_iter()
        .map(|c| -> Result<(u64, Vec<Violation>, f64)> {
            let table = FloatTable::new(c)?;
            let mut checked = 0;
            let mut viol = Vec::new();
            let mut margin = f64::INFINITY;
            for &x in xs.iter().filter(|&&x| kind.valid_at(x)) {
                let exact = match c.exact_values() {
                    Some(_) => exact_tail(c, x)?.probability(),
                    None => table.tail(x).probability(),
                };
                let b = comparison_bound(kind, x)?.value;
                checked += 1;
                margin = margin.min(b - exact);
                if exact > b + TIE_TOL {
                    viol.push(Violation { coeffs: c.values().to_vec(), x, exact, bound: b });
                }
            }
            Ok((checked, viol, margin))
        })
        .collect::<Result<_>>()?;
    let mut report = ViolationReport { kind, pairs_checked: 0, violations: Vec::new(), min_margin: f64::INFINITY };
    for (n, v, m) in per {
        report.pairs_checked += n;
        report.violations.extend(v);
        report.min_margin = report.min_margin.min(m);
    }
    Ok(report)
}

/// Theorem check: `exact_tail ≤ Q(x)` (unclamped) on every pair.
pub fn verify_q_bound(set: &[Coefficients], xs: &[f64]) -> Result<ViolationReport> {
    verify_bound(BoundKind::QBound, set, xs)
}
