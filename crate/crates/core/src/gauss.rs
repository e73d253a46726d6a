//! Standard normal density and tail with relative (not absolute) accuracy.
//!
//! The tail `Γ(x) = P(Z ≥ x)` is evaluated by two regimes:
//!
//! * `|x| ≤ SERIES_LIMIT`: the everywhere-convergent series
//!   `Γ(x) = 1/2 − φ(x) Σ x^{2n+1} / (2n+1)!!`;
//! * `x > SERIES_LIMIT`: `Γ(x) = φ(x) R(x)` with the Mills ratio `R` from its
//!   Laplace continued fraction, evaluated by the modified Lentz method.
//!
//! Negative arguments use `Γ(x) = 1 − Γ(−x)`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// 1/√(2π)
pub const FRAC_1_SQRT_2PI: f64 = 0.398_942_280_401_432_7;
/// ln √(2π)
pub const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Switch point between the power series and the continued fraction.
pub const SERIES_LIMIT: f64 = 3.0;

const CF_EPS: f64 = 1e-17;
const CF_MAX_ITER: usize = 5000;

/// `exp(-x²/2)` with the square split into an exact head and tail, so the
/// result keeps full relative accuracy even when `x²/2` is several hundred.
fn exp_neg_half_square(x: f64) -> f64 {
    let hi = x * x;
    let lo = x.mul_add(x, -hi);
    (-0.5 * hi).exp() * (-0.5 * lo).exp()
}

/// Standard normal density φ(x).
pub fn pdf(x: f64) -> f64 {
    FRAC_1_SQRT_2PI * exp_neg_half_square(x)
}

/// Mills ratio `Γ(x)/φ(x)` for `x > 0`, from the continued fraction
/// `1/(x + 1/(x + 2/(x + 3/(x + …))))`.
pub fn mills_ratio(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x <= SERIES_LIMIT {
        return tail_series(x) / pdf(x);
    }
    // Modified Lentz for F = x + 1/(x + 2/(x + 3/(x + ...))); R = 1/F.
    let tiny = 1e-300;
    let mut f = x;
    let mut c = x;
    let mut d = 0.0;
    for j in 1..CF_MAX_ITER {
        let a = j as f64;
        d = x + a * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = x + a / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < CF_EPS {
            break;
        }
    }
    1.0 / f
}

fn tail_series(x: f64) -> f64 {
    // Σ x^{2n+1}/(2n+1)!!, all terms of one sign.
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut n = 0u32;
    while term.abs() > 1e-18 * sum.abs() {
        n += 1;
        term *= x2 / f64::from(2 * n + 1);
        sum += term;
        if n > 500 {
            break;
        }
    }
    0.5 - pdf(x) * sum
}

/// Γ(x) for finite `x`; callers that cannot guarantee finiteness should use
/// [`std_normal_tail`].
pub fn tail(x: f64) -> f64 {
    if x < 0.0 {
        return 1.0 - tail(-x);
    }
    if x <= SERIES_LIMIT {
        tail_series(x)
    } else {
        pdf(x) * mills_ratio(x)
    }
}

/// The standard normal tail `Γ(x) = P(Z ≥ x)`.
pub fn std_normal_tail(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!("normal tail needs a finite argument, got {x}")));
    }
    Ok(tail(x))
}

/// `ln Γ(x)`, finite for every finite `x` (no underflow for large `x`).
pub fn ln_tail(x: f64) -> f64 {
    if x > SERIES_LIMIT {
        let hi = x * x;
        let lo = x.mul_add(x, -hi);
        -0.5 * hi - 0.5 * lo - LN_SQRT_2PI + mills_ratio(x).ln()
    } else if x < -SERIES_LIMIT {
        (-tail(-x)).ln_1p()
    } else {
        tail(x).ln()
    }
}

/// `ln φ(x)`.
pub fn ln_pdf(x: f64) -> f64 {
    let hi = x * x;
    let lo = x.mul_add(x, -hi);
    -0.5 * hi - 0.5 * lo - LN_SQRT_2PI
}

/// The ratio `r(x) = φ(x) / (x Γ(x))`, strictly decreasing from ∞ to 1 on
/// `(0, ∞)`.
pub fn inverse_mills_ratio_r(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("r(x) needs finite x > 0, got {x}")));
    }
    Ok(r_unchecked(x))
}

pub(crate) fn r_unchecked(x: f64) -> f64 {
    1.0 / (x * mills_ratio(x))
}

/// P(|Z| < 1)
pub fn prob_abs_lt_one() -> f64 {
    1.0 - 2.0 * tail(1.0)
}

/// √(2π)
pub fn sqrt_2pi() -> f64 {
    (2.0 * PI).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetry_and_center() {
        assert_eq!(tail(0.0), 0.5);
        for &x in &[0.1, 0.7, 1.3, 2.4, 2.6, 3.9, 7.0] {
            assert!((tail(x) + tail(-x) - 1.0).abs() <= 1e-14, "x={x}");
        }
    }

    #[test]
    fn non_finite_is_rejected() {
        assert!(std_normal_tail(f64::NAN).is_err());
        assert!(std_normal_tail(f64::INFINITY).is_err());
    }

    #[test]
    fn r_rejects_nonpositive() {
        assert!(inverse_mills_ratio_r(0.0).is_err());
        assert!(inverse_mills_ratio_r(-1.0).is_err());
    }

    #[test]
    fn regimes_agree_at_switch() {
        let a = tail_series(SERIES_LIMIT);
        let b = pdf(SERIES_LIMIT) * {
            // force the continued fraction at the switch point
            let x = SERIES_LIMIT + 1e-15;
            mills_ratio(x)
        };
        assert!(((a - b) / a).abs() < 1e-13, "{a} vs {b}");
    }

    #[test]
    fn ln_tail_matches_direct_log_in_overlap() {
        for &x in &[3.0, 5.0, 10.0, 20.0, 30.0] {
            let d = tail(x).ln();
            assert!((ln_tail(x) - d).abs() < 1e-12 * d.abs(), "x={x}");
        }
        // no underflow far out
        assert!(ln_tail(50.0).is_finite());
    }
}
