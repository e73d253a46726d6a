//! The scalar abstraction every closed form is written against.
//!
//! One generic formula serves four evaluators: plain `f64`, outward-rounded
//! [`Interval`](super::interval::Interval), Taylor [`Jet`](super::jet::Jet)s
//! over either of those, and exact [`Rat`](super::rat::Rat) coefficients for
//! series expansions at the origin.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub trait Real:
    Clone
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// The exactly representable constant `v`.
    fn constant(v: f64) -> Self;
    /// `p/q`, enclosed if not representable.
    fn ratio(p: i64, q: i64) -> Self;
    fn pi() -> Self;

    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn sinh(&self) -> Self;
    fn cosh(&self) -> Self;
    fn tanh(&self) -> Self;
    /// Standard normal tail `P(Z ≥ self)`.
    fn normal_tail(&self) -> Self;

    fn ln_1p(&self) -> Self {
        (Self::constant(1.0) + self.clone()).ln()
    }

    fn sqr(&self) -> Self {
        self.clone() * self.clone()
    }

    fn powi(&self, n: u32) -> Self {
        match n {
            0 => Self::constant(1.0),
            1 => self.clone(),
            _ => {
                let half = self.powi(n / 2).sqr();
                if n % 2 == 1 {
                    half * self.clone()
                } else {
                    half
                }
            }
        }
    }

    fn recip(&self) -> Self {
        Self::constant(1.0) / self.clone()
    }

    fn sech(&self) -> Self {
        self.cosh().recip()
    }

    /// `ln cosh`, written as `ln1p(2 sinh²(u/2))` so small arguments keep
    /// relative accuracy.
    fn ln_cosh(&self) -> Self {
        let s = (self.clone() * Self::constant(0.5)).sinh();
        (s.sqr() * Self::constant(2.0)).ln_1p()
    }

    fn scale(&self, p: i64, q: i64) -> Self {
        self.clone() * Self::ratio(p, q)
    }
}

/// Shorthand for an exact small constant.
#[inline]
pub fn k<T: Real>(v: f64) -> T {
    T::constant(v)
}

impl Real for f64 {
    fn constant(v: f64) -> Self {
        v
    }
    fn ratio(p: i64, q: i64) -> Self {
        p as f64 / q as f64
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn sinh(&self) -> Self {
        f64::sinh(*self)
    }
    fn cosh(&self) -> Self {
        f64::cosh(*self)
    }
    fn tanh(&self) -> Self {
        f64::tanh(*self)
    }
    fn normal_tail(&self) -> Self {
        crate::gauss::tail(*self)
    }
    fn ln_1p(&self) -> Self {
        f64::ln_1p(*self)
    }
    fn ln_cosh(&self) -> Self {
        let a = self.abs();
        if a < 1.0 {
            let s = (0.5 * a).sinh();
            (2.0 * s * s).ln_1p()
        } else {
            a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
        }
    }
}
