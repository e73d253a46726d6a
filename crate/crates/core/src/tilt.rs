//! Esscher-tilt quantities and the Berry–Esseen composite bound `N + 2·c_BE·B`.
//!
//! Under the tilt each coordinate becomes a two-point law on `±aᵢ` with
//! `P(+aᵢ) = e^{uᵢ}/(2 cosh uᵢ)`, `uᵢ = x·aᵢ`, independently across `i`.

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds;
use crate::coeffs::Coefficients;
use crate::constants::C_BE;
use crate::error::{Error, Result};
use crate::gauss;

/// Largest `n` accepted by [`tilt_identity_residual`].
pub const MAX_IDENTITY_N: usize = 16;

/// `ln cosh u` without overflow.
pub fn ln_cosh(u: f64) -> f64 {
    let a = u.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TiltSummary {
    pub x: f64,
    pub u: Vec<f64>,
    pub m_x: f64,
    pub s_x: f64,
    pub l_x: f64,
    /// `Σ ln cosh uᵢ`
    pub log_mgf: f64,
    pub ln_n: f64,
    pub ln_b: f64,
    pub n_term: f64,
    pub b_term: f64,
    pub c_be: f64,
    /// `N + 2·c_BE·B`
    pub composite: f64,
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!("tilt needs finite x > 0, got {x}")));
    }
    Ok(())
}

pub fn tilt_summary(c: &Coefficients, x: f64) -> Result<TiltSummary> {
    tilt_summary_with(c, x, C_BE)
}

/// As [`tilt_summary`] with a custom Berry–Esseen constant.
pub fn tilt_summary_with(c: &Coefficients, x: f64, c_be: f64) -> Result<TiltSummary> {
    check_x(x)?;
    if !(c_be > 0.0 && c_be.is_finite()) {
        return Err(Error::domain(format!("c_BE must be positive, got {c_be}")));
    }
    let u: Vec<f64> = c.values().iter().map(|a| x * a).collect();
    let m_x = u.iter().map(|u| u * u.tanh()).sum::<f64>() / x;
    let var = u.iter().map(|u| (u / u.cosh()).powi(2)).sum::<f64>();
    let s_x = var.sqrt() / x;
    // 1 − tanh⁴u = (1 + tanh²u)·sech²u, without cancellation for large u
    let l_x = u.iter().map(|u| u.powi(3) * (1.0 + u.tanh().powi(2)) / u.cosh().powi(2)).sum::<f64>() / (x * s_x).powi(3);
    let log_mgf: f64 = u.iter().map(|&u| ln_cosh(u)).sum();
    let ln_n = log_mgf + 0.5 * (x * s_x).powi(2) - x * m_x + gauss::ln_tail((x - m_x) / s_x + x * s_x);
    let ln_b = l_x.ln() - x * x + log_mgf;
    let n_term = ln_n.exp();
    let b_term = ln_b.exp();
    Ok(TiltSummary {
        x,
        u,
        m_x,
        s_x,
        l_x,
        log_mgf,
        ln_n,
        ln_b,
        n_term,
        b_term,
        c_be,
        composite: n_term + 2.0 * c_be * b_term,
    })
}

/// `(L_x, x⁻³ Σ uᵢ³(1 + tanh² uᵢ) cosh uᵢ)`.
pub fn lyapunov_upper(c: &Coefficients, x: f64) -> Result<(f64, f64)> {
    let t = tilt_summary(c, x)?;
    let bound = t.u.iter().map(|u| u.powi(3) * (1.0 + u.tanh().powi(2)) * u.cosh()).sum::<f64>() / x.powi(3);
    Ok((t.l_x, bound))
}

/// `N(x) + 2·c_BE·B(x)`; `1` at `x = 0`.
pub fn nb_bound(c: &Coefficients, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(1.0);
    }
    Ok(tilt_summary(c, x)?.composite)
}

/// `Γ(x) + h(x)`, the common target for `N` and `2c_BE·B`.
pub fn nb_target(x: f64) -> f64 {
    gauss::tail(x) + bounds::h(x)
}

/// Events on sign vectors for the tilt identity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Event {
    Always,
    /// `Σ sᵢaᵢ ≥ t`
    SumAtLeast(f64),
    /// `s_k = +1`
    Positive(usize),
}

impl Event {
    pub fn holds(&self, signs: &[i8], a: &[f64]) -> bool {
        match *self {
            Event::Always => true,
            Event::SumAtLeast(t) => signs.iter().zip(a).map(|(s, a)| *s as f64 * a).sum::<f64>() >= t,
            Event::Positive(k) => signs.get(k).is_some_and(|s| *s > 0),
        }
    }
}

fn signs_of(bits: u64, n: usize) -> Vec<i8> {
    (0..n).map(|i| if bits >> i & 1 == 1 { 1 } else { -1 }).collect()
}

/// `|E g(X̃) − E[e^{xS} g(X)] / E e^{xS}|` by enumerating all `2ⁿ` outcomes.
pub fn tilt_identity_residual<F>(c: &Coefficients, x: f64, event: F) -> Result<f64>
where
    F: Fn(&[i8]) -> bool + Sync,
{
    let n = c.len();
    if n > MAX_IDENTITY_N {
        return Err(Error::Capacity(format!("tilt identity enumeration is capped at n = {MAX_IDENTITY_N}, got {n}")));
    }
    if !x.is_finite() {
        return Err(Error::domain(format!("x must be finite, got {x}")));
    }
    let a = c.values();
    let total = 1u64 << n;
    let chunk = 256u64.min(total);
    // per chunk: (Σ product-law mass on event, Σ e^{x(S − Σa)} on event, Σ e^{x(S − Σa)})
    let shift: f64 = a.iter().sum::<f64>() * x;
    let parts: Vec<(f64, f64, f64)> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|j| {
            let mut acc = (0.0, 0.0, 0.0);
            for bits in j * chunk..((j + 1) * chunk).min(total) {
                let s = signs_of(bits, n);
                let w = (x * s.iter().zip(a).map(|(s, a)| *s as f64 * a).sum::<f64>() - shift).exp();
                acc.2 += w;
                if event(&s) {
                    let p: f64 = s
                        .iter()
                        .zip(a)
                        .map(|(s, a)| {
                            let u = x * a;
                            (*s as f64 * u).exp() / (2.0 * u.cosh())
                        })
                        .product();
                    acc.0 += p;
                    acc.1 += w;
                }
            }
            acc
        })
        .collect();
    let (lhs, num, den) = parts.iter().fold((0.0, 0.0, 0.0), |t, p| (t.0 + p.0, t.1 + p.1, t.2 + p.2));
    Ok((lhs - num / den).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_coefficient() {
        let c = Coefficients::new(vec![1.0]).unwrap();
        let t = tilt_summary(&c, 1.0).unwrap();
        assert_eq!(t.u, vec![1.0]);
        assert!((t.m_x - 0.761594155955765).abs() < 1e-14);
        assert!((t.s_x - 0.648054273663885).abs() < 1e-14);
        let l = (1.0 - 1f64.tanh().powi(4)) * 1f64.cosh().powi(3);
        assert!((t.l_x - l).abs() < 1e-13 && (t.l_x - 2.438107).abs() < 1e-6);
        assert!(tilt_summary(&c, 0.0).is_err());
    }

    #[test]
    fn equal_weights_collapse() {
        let c = Coefficients::equal(4).unwrap();
        let t = tilt_summary(&c, 2.0).unwrap();
        assert!((t.s_x - 1.0 / 1f64.cosh()).abs() < 1e-14);
        assert!((t.m_x - 2.0 * 1f64.tanh()).abs() < 1e-14);
    }

    #[test]
    fn lyapunov_examples() {
        let one = Coefficients::new(vec![1.0]).unwrap();
        for x in [0.1, 1.0, 3.0] {
            let (l, b) = lyapunov_upper(&one, x).unwrap();
            assert!((l - b).abs() <= 1e-12 * b);
        }
        // equal weights give equality; unequal ones are strict
        let (l, b) = lyapunov_upper(&Coefficients::equal(4).unwrap(), 1.3).unwrap();
        assert!((l - b).abs() <= 1e-12 * b);
        let (l, b) = lyapunov_upper(&Coefficients::new(vec![0.6, 0.8]).unwrap(), 1.3).unwrap();
        assert!(l < b - 1e-6);
    }

    #[test]
    fn nb_examples() {
        let one = Coefficients::new(vec![1.0]).unwrap();
        assert_eq!(nb_bound(&one, 0.0).unwrap(), 1.0);
        let c = Coefficients::equal(16).unwrap();
        assert!(nb_bound(&c, 1.3).unwrap() <= nb_target(1.3));
    }

    #[test]
    fn identity_examples() {
        let c = Coefficients::new(vec![0.6, 0.8]).unwrap();
        assert!(tilt_identity_residual(&c, 1.0, |_| true).unwrap() < 1e-15);
        let a = c.values().to_vec();
        let r = tilt_identity_residual(&c, 1.0, |s| Event::SumAtLeast(1.0).holds(s, &a)).unwrap();
        assert!(r < 1e-12);
        let e = Coefficients::equal(8).unwrap();
        assert!(tilt_identity_residual(&e, 2.0, |s| s[0] > 0).unwrap() < 1e-12);
        assert!(tilt_identity_residual(&Coefficients::equal(17).unwrap(), 1.0, |_| true).is_err());
    }
}
