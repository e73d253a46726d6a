//! Fixed numerical constants of the bound and its proof.

use std::sync::OnceLock;

use serde::Serialize;

use crate::certify::forms;
use crate::gauss;

/// Berry–Esseen constant.
pub const C_BE: f64 = 0.56;
/// Largest admissible tilt parameter `u* = 51/125`.
pub const U_STAR_NUM: i64 = 51;
pub const U_STAR_DEN: i64 = 125;
pub const U_STAR: f64 = 51.0 / 125.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Constants {
    /// `C = 5√(2πe)·P(|Z| < 1)`
    pub big_c: f64,
    /// `c* = (1/4)/Γ(√2)`
    pub c_star: f64,
    pub c_be: f64,
    pub u_star: f64,
    /// `K = ln(C/(2√(2π) c_BE))`
    pub big_k: f64,
    /// root of `r(x) = 3/2`
    pub x_three_halves: f64,
    /// `x* = √γ(u*)`
    pub x_star: f64,
}

/// Bisection for a decreasing function crossing `target`, to absolute width `tol`.
pub(crate) fn bisect_decreasing(f: impl Fn(f64) -> f64, target: f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if f(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn compute() -> Constants {
    let big_c = 5.0 * (2.0 * std::f64::consts::PI * std::f64::consts::E).sqrt() * gauss::prob_abs_lt_one();
    let c_star = 0.25 / gauss::tail(std::f64::consts::SQRT_2);
    let big_k = (big_c / (2.0 * gauss::sqrt_2pi() * C_BE)).ln();
    let x_three_halves = bisect_decreasing(gauss::r_unchecked, 1.5, 0.5, 2.0, 1e-12);
    let x_star = forms::gamma_fn(&U_STAR).sqrt();
    Constants { big_c, c_star, c_be: C_BE, u_star: U_STAR, big_k, x_three_halves, x_star }
}

/// The constants, computed once.
pub fn constants() -> &'static Constants {
    static C: OnceLock<Constants> = OnceLock::new();
    C.get_or_init(compute)
}
