//! Box rules for the two-point comparison inequalities.
//!
//! Gaussian case, `D(x, a) = Γ(x) − ½Γ(U) − ½Γ(V) ≥ 0` with
//! `U, V = (x ∓ a)/√(1 − a²)`. `D` is even in `a` and
//!
//! ```text
//! D(x, a) = φ(x) · x(x² − 3)/12 · a⁴ + O(a⁶),
//! ```
//!
//! so `D` vanishes on the edge `a = 0` and its leading term vanishes at
//! `x = √3`. Boxes are parametrized by `t = x² − 3 ≥ 0`; near `a = 0` the
//! expansion `D = a⁴ S = a⁴ (d₄ + a² R)` with an interval Lagrange remainder
//! decides the sign, elsewhere a mean-value enclosure of `D` does.
//!
//! `h` case: `(½h(U) + ½h(V))/h(x) − 1 < 0` in `(x, u)` with `a = u/x`.

use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::forms;
use super::interval::Interval;
use super::jet::Jet;
use super::prover::Leaf;
use super::real::{k, Real};
use super::taylor::{mean_value_2d, Jet2};

/// Largest `a` for which the series rule is attempted.
pub const SERIES_A_MAX: f64 = 0.3;
/// Truncation order of the series in `a`.
const SERIES_ORDER: usize = 18;

pub fn x_of_t<T: Real>(t: &T) -> T {
    (t.clone() + k(3.0)).sqrt()
}

fn gap_in_t<T: Real>(t: &T, a: &T) -> T {
    forms::bgh_gaussian_gap(&x_of_t(t), a)
}

/// Mean-value enclosure of `D` over the box `t × a`.
pub fn gaussian_gap_enclosure(t: Interval, a: Interval) -> Interval {
    mean_value_2d(
        &|t: &Interval, a: &Interval| gap_in_t(t, a),
        &|t: &Jet2, a: &Jet2| gap_in_t(t, a),
        t,
        a,
    )
}

/// `Q_j(x) = x · P_j(x² − 3)`; returns `P_j` in ascending powers of `t`.
fn t_polynomials() -> &'static Vec<Vec<Interval>> {
    static P: OnceLock<Vec<Vec<Interval>>> = OnceLock::new();
    P.get_or_init(|| {
        gaussian_gap_polynomials(SERIES_ORDER)
            .iter()
            .map(|qx| {
                // qx has only odd powers of x; substitute x² = t + 3 in qx/x
                let mut pt: Vec<BigRational> = Vec::new();
                for (i, c) in qx.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    assert!(i % 2 == 1, "even power of x in the expansion");
                    let m = (i - 1) / 2;
                    // (t + 3)^m
                    let mut binom = BigRational::one();
                    for r in 0..=m {
                        let term = c * &binom * pow3(m - r);
                        if pt.len() <= r {
                            pt.resize(r + 1, BigRational::zero());
                        }
                        pt[r] += term;
                        binom = binom * BigRational::from_integer((m - r).into()) / BigRational::from_integer((r + 1).into());
                    }
                }
                pt.iter().map(Interval::from_rational).collect()
            })
            .collect()
    })
}

fn pow3(e: usize) -> BigRational {
    BigRational::from_integer(num_bigint::BigInt::from(3).pow(e as u32))
}

/// Polynomial with interval coefficients over `t`, mean-value form.
fn poly_enclosure(p: &[Interval], t: Interval) -> Interval {
    let horner = |x: Interval, c: &[Interval]| c.iter().rev().fold(Interval::point(0.0), |acc, v| acc * x + *v);
    let naive = horner(t, p);
    if p.len() < 2 || t.width() == 0.0 {
        return naive;
    }
    let dp: Vec<Interval> = p.iter().enumerate().skip(1).map(|(i, c)| *c * Interval::point(i as f64)).collect();
    let m = Interval::point(t.mid());
    naive.intersect(&(horner(m, p) + horner(t, &dp) * (t - m)))
}

/// Enclosures of `S = D/(a⁴ x φ(x))` and `R = (S − P₄(t))/a²` over the box.
pub fn gaussian_series(t: Interval, a: Interval) -> (Interval, Interval) {
    let n = SERIES_ORDER;
    let p = t_polynomials();
    let xi = x_of_t(&t);
    let seg = Interval { lo: 0.0, hi: a.hi };
    let rem = forms::bgh_gaussian_gap(&Jet::lift(xi), &Jet::variable(seg, n)).coeff(n) / (forms::pdf(&xi) * xi);
    let mut r = rem * a.powi((n - 6) as u32);
    for j in (6..n).rev() {
        if !p[j].is_empty() {
            r = r + poly_enclosure(&p[j], t) * a.powi((j - 6) as u32);
        }
    }
    let s = poly_enclosure(&p[4], t) + a.sqr() * r;
    (s, r)
}

/// Decide `D ≥ 0` on `t × a` (`t ≥ 0`, `0 ≤ a < 1`). `Open` carries `−D`.
pub fn gaussian_decide(t: Interval, a: Interval) -> Leaf {
    let e = gaussian_gap_enclosure(t, a);
    if e.lo > 0.0 {
        return Leaf::Holds;
    }
    if a.hi <= SERIES_A_MAX {
        let (s, r) = gaussian_series(t, a);
        if s.lo > 0.0 || (t.lo >= 0.0 && r.lo > 0.0) {
            return Leaf::Holds;
        }
    }
    Leaf::Open(-e)
}

pub fn gaussian_point(t: f64, a: f64) -> f64 {
    gap_in_t(&t, &a)
}

/// `(½h(U) + ½h(V))/h(x) − 1` over `x × u`; `None` if no point of the box
/// satisfies `u ≤ frac · x`.
pub fn h_ratio_enclosure(x: Interval, u: Interval, frac: f64) -> Option<Interval> {
    if u.lo > frac * x.hi {
        return None;
    }
    Some(mean_value_2d(
        &|x: &Interval, u: &Interval| forms::bgh_h_ratio_minus_one(x, u),
        &|x: &Jet2, u: &Jet2| forms::bgh_h_ratio_minus_one(x, u),
        x,
        u,
    ))
}

pub fn h_decide(x: Interval, u: Interval, frac: f64) -> Leaf {
    match h_ratio_enclosure(x, u, frac) {
        None => Leaf::Skip,
        Some(e) if e.hi < 0.0 => Leaf::Holds,
        Some(e) => Leaf::Open(e),
    }
}

pub fn h_point(x: f64, u: f64, frac: f64) -> Option<f64> {
    (u <= frac * x).then(|| forms::bgh_h_ratio_minus_one(&x, &u))
}

/// Exact expansion `D(x, a)/φ(x) = Σ_j Q_j(x) a^j`, `j < order`, with
/// `Q_j ∈ ℚ[x]` given by coefficient vectors in ascending powers of `x`.
///
/// Uses `Γ(x + δ) − Γ(x) = φ(x) Σ_{m≥1} (−1)^m He_{m−1}(x) δ^m / m!`.
pub fn gaussian_gap_polynomials(order: usize) -> Vec<Vec<BigRational>> {
    use num_bigint::BigInt;

    type Poly = Vec<BigRational>;
    // bivariate series: index [power of a][power of x]
    type Ser = Vec<Poly>;

    fn padd(p: &Poly, q: &Poly) -> Poly {
        let mut r = vec![BigRational::zero(); p.len().max(q.len())];
        for (i, c) in p.iter().enumerate() {
            r[i] += c;
        }
        for (i, c) in q.iter().enumerate() {
            r[i] += c;
        }
        r
    }
    fn pmul(p: &Poly, q: &Poly) -> Poly {
        if p.is_empty() || q.is_empty() {
            return Vec::new();
        }
        let mut r = vec![BigRational::zero(); p.len() + q.len() - 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                r[i + j] += a * b;
            }
        }
        r
    }
    fn pscale(p: &Poly, s: &BigRational) -> Poly {
        p.iter().map(|c| c * s).collect()
    }
    let smul = |p: &Ser, q: &Ser| -> Ser {
        let mut r: Ser = vec![Vec::new(); order];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                if i + j < order {
                    r[i + j] = padd(&r[i + j], &pmul(a, b));
                }
            }
        }
        r
    };
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));

    // (1 − a²)^{−1/2} = Σ C(2k, k)/4^k a^{2k}
    let mut inv_sqrt: Ser = vec![Vec::new(); order];
    let mut c = BigRational::one();
    for kk in 0..order.div_ceil(2) {
        if 2 * kk < order {
            inv_sqrt[2 * kk] = vec![c.clone()];
        }
        c = c * int((2 * kk + 1) as i64) / int((2 * kk + 2) as i64);
    }
    // He_{m−1}(x), m = 1..order
    let mut he: Vec<Poly> = vec![vec![int(1)], vec![int(0), int(1)]];
    while he.len() < order {
        let n = he.len();
        let xp = pmul(&he[n - 1], &vec![int(0), int(1)]);
        he.push(padd(&xp, &pscale(&he[n - 2], &int(-(n as i64 - 1)))));
    }
    let mut total: Ser = vec![Vec::new(); order];
    for sgn in [-1i64, 1] {
        // δ = (x + sgn·a)(1 − a²)^{−1/2} − x
        let mut lin: Ser = vec![Vec::new(); order];
        lin[0] = vec![int(0), int(1)];
        if order > 1 {
            lin[1] = vec![int(sgn)];
        }
        let mut delta = smul(&lin, &inv_sqrt);
        delta[0] = Vec::new();
        let mut pow = delta.clone();
        let mut fact = BigRational::one();
        for m in 1..order {
            fact = fact * int(m as i64);
            let coef = pscale(&he[m - 1], &(int(if m % 2 == 0 { 1 } else { -1 }) / fact.clone()));
            for (j, p) in pow.iter().enumerate() {
                total[j] = padd(&total[j], &pmul(&coef, p));
            }
            pow = smul(&pow, &delta);
        }
    }
    let minus_half = int(-1) / int(2);
    total
        .into_iter()
        .map(|p| {
            let mut q = pscale(&p, &minus_half);
            while q.last().is_some_and(|c| c.is_zero()) {
                q.pop();
            }
            q
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn low_order_terms_vanish_and_quartic_is_exact() {
        let c = gaussian_gap_polynomials(10);
        for j in [0, 1, 2, 3, 5, 7, 9] {
            assert!(c[j].iter().all(|v| v.is_zero()), "a^{j}: {:?}", c[j]);
        }
        assert_eq!(c[4], vec![q(0, 1), q(-1, 4), q(0, 1), q(1, 12)]);
    }

    #[test]
    fn interval_series_matches_exact_polynomials() {
        let c = gaussian_gap_polynomials(10);
        let t = Interval::point(1.0);
        let x = 2.0f64;
        let a = 0.05f64;
        let (s, _) = gaussian_series(t, Interval::point(a));
        let val = |p: &Vec<BigRational>| -> f64 {
            p.iter().enumerate().map(|(i, v)| num_traits::ToPrimitive::to_f64(v).unwrap() * x.powi(i as i32)).sum()
        };
        let series: f64 = (4..10).map(|j| val(&c[j]) * a.powi(j as i32 - 4)).sum();
        assert!((s.mid() * x - series).abs() < 1e-9, "{s:?} {series}");
        let phi = (-x * x / 2.0).exp() / (2.0 * std::f64::consts::PI).sqrt();
        let direct = gaussian_point(1.0, a) / (phi * a.powi(4));
        assert!((s.mid() * x - direct).abs() < 1e-6, "{s:?} {direct}");
    }

    #[test]
    fn series_rule_handles_the_corner() {
        let t = Interval::new(0.0, 1e-3);
        let a = Interval::new(0.0, 1e-3);
        assert!(gaussian_gap_enclosure(t, a).lo <= 0.0);
        assert!(matches!(gaussian_decide(t, a), Leaf::Holds));
    }

    #[test]
    fn h_ratio_is_negative_at_a_sample() {
        let v = h_point(3.0, 1.0, 0.95).unwrap();
        assert!(v < 0.0);
        assert!(h_point(3.0, 2.9, 0.95).is_none());
    }
}
