//! Closed intervals with outward rounding.
//!
//! Arithmetic is rounded in the correct direction without touching the FPU
//! rounding mode: each result is computed round-to-nearest together with its
//! exact error term (TwoSum, FMA residual), and the endpoint is moved one ulp
//! outward only when that error points the wrong way. Transcendentals come
//! from the platform libm and are widened by a fixed number of ulps, which
//! covers its documented accuracy.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::real::Real;
use crate::gauss;

/// ulps added on each side of libm exp/ln/log1p results.
const ULPS_EXP_LN: u32 = 2;
/// ulps added on each side of libm sinh/cosh/tanh results.
const ULPS_HYP: u32 = 4;
/// Relative slack applied to the normal tail (its accuracy is ~1e-14).
const TAIL_REL_SLACK: f64 = 1e-12;
/// Absolute slack for the normal tail, covering the subnormal range.
const TAIL_ABS_SLACK: f64 = 1e-310;

#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo, self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

fn down(v: f64, n: u32) -> f64 {
    (0..n).fold(v, |a, _| a.next_down())
}

fn up(v: f64, n: u32) -> f64 {
    (0..n).fold(v, |a, _| a.next_up())
}

/// Below this magnitude products and quotients may have lost the exactness
/// of their error term to gradual underflow; widen unconditionally.
const TINY: f64 = 1e-290;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

fn add_down(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    if s.is_nan() {
        return f64::NEG_INFINITY;
    }
    if s == f64::INFINITY && a.is_finite() && b.is_finite() {
        return f64::MAX;
    }
    if !s.is_finite() {
        return s;
    }
    if e < 0.0 {
        s.next_down()
    } else {
        s
    }
}

fn add_up(a: f64, b: f64) -> f64 {
    -add_down(-a, -b)
}

fn mul_down(a: f64, b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        // 0 * inf only arises from unbounded operands; treat as unbounded.
        if a.is_infinite() || b.is_infinite() {
            return f64::NEG_INFINITY;
        }
        return 0.0;
    }
    let p = a * b;
    if p.is_nan() {
        return f64::NEG_INFINITY;
    }
    if p.is_infinite() {
        if p > 0.0 && a.is_finite() && b.is_finite() {
            return f64::MAX;
        }
        return p;
    }
    if p.abs() < TINY {
        return p.next_down();
    }
    let e = a.mul_add(b, -p);
    if e < 0.0 {
        p.next_down()
    } else {
        p
    }
}

fn mul_up(a: f64, b: f64) -> f64 {
    -mul_down(-a, b)
}

fn div_down(a: f64, b: f64) -> f64 {
    let q = a / b;
    if q.is_nan() {
        return f64::NEG_INFINITY;
    }
    if q.is_infinite() {
        if q > 0.0 && a.is_finite() {
            return f64::MAX;
        }
        return q;
    }
    if q == 0.0 {
        if a == 0.0 || b.is_infinite() {
            return 0.0;
        }
        return if (a > 0.0) == (b > 0.0) { 0.0 } else { -f64::MIN_POSITIVE * f64::EPSILON };
    }
    if q.abs() < TINY || a.is_infinite() || b.is_infinite() {
        return q.next_down();
    }
    // residual r = a - q*b is exact; sign(a/b - q) = sign(r) * sign(b)
    let r = (-q).mul_add(b, a);
    let err_sign = r * b.signum();
    if err_sign < 0.0 {
        q.next_down()
    } else {
        q
    }
}

fn div_up(a: f64, b: f64) -> f64 {
    -div_down(-a, b)
}

fn sqrt_down(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let s = x.sqrt();
    if !s.is_finite() {
        return f64::MAX;
    }
    let r = (-s).mul_add(s, x);
    if r < 0.0 {
        s.next_down()
    } else {
        s
    }
}

fn sqrt_up(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let s = x.sqrt();
    if !s.is_finite() {
        return s;
    }
    let r = (-s).mul_add(s, x);
    if r > 0.0 {
        s.next_up()
    } else {
        s
    }
}

impl Interval {
    pub const ENTIRE: Interval = Interval { lo: f64::NEG_INFINITY, hi: f64::INFINITY };

    /// `[lo, hi]`; panics if the endpoints are out of order or NaN.
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "invalid interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(v: f64) -> Self {
        Interval { lo: v, hi: v }
    }

    /// The smallest floating interval containing the rational `q`.
    pub fn from_rational(q: &BigRational) -> Self {
        if q.is_zero() {
            return Interval::point(0.0);
        }
        let approx = q.to_f64().unwrap_or(f64::NAN);
        if !approx.is_finite() {
            return if q.is_positive() {
                Interval { lo: f64::MAX, hi: f64::INFINITY }
            } else {
                Interval { lo: f64::NEG_INFINITY, hi: -f64::MAX }
            };
        }
        let exact = BigRational::from_float(approx).expect("finite");
        if &exact == q {
            Interval::point(approx)
        } else if &exact < q {
            Interval { lo: approx, hi: approx.next_up() }
        } else {
            Interval { lo: approx.next_down(), hi: approx }
        }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        if self.lo.is_infinite() || self.hi.is_infinite() {
            if self.lo.is_infinite() && self.hi.is_infinite() {
                return 0.0;
            }
            return if self.lo.is_infinite() { self.hi } else { self.lo };
        }
        let m = 0.5 * self.lo + 0.5 * self.hi;
        m.clamp(self.lo, self.hi)
    }

    pub fn split(&self) -> (Interval, Interval) {
        let m = self.mid();
        (Interval { lo: self.lo, hi: m }, Interval { lo: m, hi: self.hi })
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn contains_interval(&self, o: &Interval) -> bool {
        self.lo <= o.lo && o.hi <= self.hi
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn is_entire(&self) -> bool {
        self.lo == f64::NEG_INFINITY && self.hi == f64::INFINITY
    }

    pub fn hull(&self, o: &Interval) -> Interval {
        Interval { lo: self.lo.min(o.lo), hi: self.hi.max(o.hi) }
    }

    /// Intersection; if empty (only possible through misuse) returns `self`.
    pub fn intersect(&self, o: &Interval) -> Interval {
        let lo = self.lo.max(o.lo);
        let hi = self.hi.min(o.hi);
        if lo <= hi {
            Interval { lo, hi }
        } else {
            *self
        }
    }

    pub fn strictly_positive(&self) -> bool {
        self.lo > 0.0
    }

    pub fn strictly_negative(&self) -> bool {
        self.hi < 0.0
    }

    pub fn abs(&self) -> Interval {
        if self.lo >= 0.0 {
            *self
        } else if self.hi <= 0.0 {
            -*self
        } else {
            Interval { lo: 0.0, hi: (-self.lo).max(self.hi) }
        }
    }

    pub fn max(&self, o: &Interval) -> Interval {
        Interval { lo: self.lo.max(o.lo), hi: self.hi.max(o.hi) }
    }

    pub fn min(&self, o: &Interval) -> Interval {
        Interval { lo: self.lo.min(o.lo), hi: self.hi.min(o.hi) }
    }

    fn checked(lo: f64, hi: f64) -> Interval {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            Interval::ENTIRE
        } else {
            Interval { lo, hi }
        }
    }

    /// Apply a monotone increasing libm function, widening by `ulps`.
    fn increasing(&self, f: fn(f64) -> f64, ulps: u32) -> Interval {
        let lo = if self.lo == f64::NEG_INFINITY { f(self.lo) } else { down(f(self.lo), ulps) };
        let hi = if self.hi == f64::INFINITY { f(self.hi) } else { up(f(self.hi), ulps) };
        Interval::checked(lo, hi)
    }

    pub fn ln_1p_interval(&self) -> Interval {
        if self.lo <= -1.0 {
            return Interval::ENTIRE;
        }
        if *self == Interval::point(0.0) {
            return *self;
        }
        self.increasing(f64::ln_1p, ULPS_EXP_LN).pin_zero(self)
    }

    /// Keep exact zeros of odd increasing functions (`f(0) = 0`).
    fn pin_zero(mut self, arg: &Interval) -> Interval {
        if arg.lo == 0.0 {
            self.lo = 0.0;
        }
        if arg.hi == 0.0 {
            self.hi = 0.0;
        }
        self
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval::checked(add_down(self.lo, o.lo), add_up(self.hi, o.hi))
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        self + (-o)
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        let (a, b, c, d) = (self.lo, self.hi, o.lo, o.hi);
        if a >= 0.0 && c >= 0.0 {
            return Interval::checked(mul_down(a, c), mul_up(b, d));
        }
        let lo = mul_down(a, c).min(mul_down(a, d)).min(mul_down(b, c)).min(mul_down(b, d));
        let hi = mul_up(a, c).max(mul_up(a, d)).max(mul_up(b, c)).max(mul_up(b, d));
        Interval::checked(lo, hi)
    }
}

impl Div for Interval {
    type Output = Interval;
    fn div(self, o: Interval) -> Interval {
        if o.lo <= 0.0 && o.hi >= 0.0 {
            return Interval::ENTIRE;
        }
        let (a, b, c, d) = (self.lo, self.hi, o.lo, o.hi);
        let lo = div_down(a, c).min(div_down(a, d)).min(div_down(b, c)).min(div_down(b, d));
        let hi = div_up(a, c).max(div_up(a, d)).max(div_up(b, c)).max(div_up(b, d));
        Interval::checked(lo, hi)
    }
}

impl Real for Interval {
    fn constant(v: f64) -> Self {
        Interval::point(v)
    }

    fn ratio(p: i64, q: i64) -> Self {
        Interval::point(p as f64) / Interval::point(q as f64)
    }

    fn pi() -> Self {
        // the f64 nearest π lies below π
        let p = std::f64::consts::PI;
        Interval { lo: p, hi: p.next_up() }
    }

    fn exp(&self) -> Self {
        if *self == Interval::point(0.0) {
            return Interval::point(1.0);
        }
        let r = self.increasing(f64::exp, ULPS_EXP_LN);
        Interval { lo: r.lo.max(0.0), hi: r.hi }
    }

    fn ln(&self) -> Self {
        if self.lo < 0.0 {
            return Interval::ENTIRE;
        }
        if *self == Interval::point(1.0) {
            return Interval::point(0.0);
        }
        self.increasing(f64::ln, ULPS_EXP_LN)
    }

    fn ln_1p(&self) -> Self {
        self.ln_1p_interval()
    }

    fn sqrt(&self) -> Self {
        if self.lo < 0.0 {
            return Interval::ENTIRE;
        }
        Interval { lo: sqrt_down(self.lo), hi: sqrt_up(self.hi) }
    }

    fn sinh(&self) -> Self {
        if *self == Interval::point(0.0) {
            return *self;
        }
        self.increasing(f64::sinh, ULPS_HYP).pin_zero(self)
    }

    fn cosh(&self) -> Self {
        if *self == Interval::point(0.0) {
            return Interval::point(1.0);
        }
        let a = self.abs();
        let lo = if a.lo == 0.0 { 1.0 } else { down(a.lo.cosh(), ULPS_HYP).max(1.0) };
        let hi = if a.hi.is_infinite() { f64::INFINITY } else { up(a.hi.cosh(), ULPS_HYP) };
        Interval::checked(lo, hi)
    }

    fn tanh(&self) -> Self {
        if *self == Interval::point(0.0) {
            return *self;
        }
        let r = self.increasing(f64::tanh, ULPS_HYP).pin_zero(self);
        Interval { lo: r.lo.max(-1.0), hi: r.hi.min(1.0) }
    }

    fn normal_tail(&self) -> Self {
        // Γ is decreasing
        let widen = |v: f64, dir: f64| {
            let s = v + dir * (TAIL_REL_SLACK * v + TAIL_ABS_SLACK);
            s.clamp(0.0, 1.0)
        };
        let hi = if self.lo == f64::NEG_INFINITY { 1.0 } else { widen(gauss::tail(self.lo), 1.0) };
        let lo = if self.hi == f64::INFINITY { 0.0 } else { widen(gauss::tail(self.hi), -1.0) };
        Interval::checked(lo, hi)
    }

    fn sqr(&self) -> Self {
        let a = self.abs();
        Interval::checked(mul_down(a.lo, a.lo), mul_up(a.hi, a.hi))
    }

    fn powi(&self, n: u32) -> Self {
        if n == 0 {
            return Interval::point(1.0);
        }
        if n % 2 == 0 {
            let a = self.abs();
            let lo = if a.lo == 0.0 { Interval::point(0.0) } else { Interval::point(a.lo).powi_odd(n) };
            let hi = Interval::point(a.hi).powi_odd(n);
            Interval::checked(lo.lo, hi.hi)
        } else {
            // odd powers are increasing
            let lo = Interval::point(self.lo).powi_odd(n);
            let hi = Interval::point(self.hi).powi_odd(n);
            Interval::checked(lo.lo, hi.hi)
        }
    }
}

impl Interval {
    // repeated squaring on a degenerate interval, no sign tricks
    fn powi_odd(&self, n: u32) -> Interval {
        let mut result = Interval::point(1.0);
        let mut base = *self;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base;
            }
            base = base * base;
            e >>= 1;
        }
        result
    }
}
