//! Exact rationals as a [`Real`], for Taylor coefficients at the origin.
//!
//! Transcendentals are only defined at the handful of points where their
//! value is rational (`exp 0`, `ln 1`, `cosh 0`, …). Jets of the registry's
//! closed forms are expanded at `u = 0`, so every transcendental call lands
//! on one of those points; anything else is a programming error and panics.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::real::Real;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn unsupported(op: &str, v: &Rat) -> ! {
        panic!("{op} has no exact rational value at {}", v.0)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr for Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat {
                Rat(self.0 $op o.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Real for Rat {
    fn constant(v: f64) -> Self {
        Rat(BigRational::from_float(v).expect("finite constant"))
    }
    fn ratio(p: i64, q: i64) -> Self {
        Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }
    fn pi() -> Self {
        panic!("π is not rational")
    }
    fn exp(&self) -> Self {
        if self.is_zero() {
            Rat(BigRational::one())
        } else {
            Rat::unsupported("exp", self)
        }
    }
    fn ln(&self) -> Self {
        if self.is_one() {
            Rat::zero()
        } else {
            Rat::unsupported("ln", self)
        }
    }
    fn ln_1p(&self) -> Self {
        if self.is_zero() {
            Rat::zero()
        } else {
            Rat::unsupported("ln_1p", self)
        }
    }
    fn sqrt(&self) -> Self {
        let (n, d) = (self.0.numer(), self.0.denom());
        if !n.is_negative() {
            let (rn, rd) = (n.sqrt(), d.sqrt());
            if &(&rn * &rn) == n && &(&rd * &rd) == d {
                return Rat(BigRational::new(rn, rd));
            }
        }
        Rat::unsupported("sqrt", self)
    }
    fn sinh(&self) -> Self {
        if self.is_zero() {
            Rat::zero()
        } else {
            Rat::unsupported("sinh", self)
        }
    }
    fn cosh(&self) -> Self {
        if self.is_zero() {
            Rat(BigRational::one())
        } else {
            Rat::unsupported("cosh", self)
        }
    }
    fn tanh(&self) -> Self {
        if self.is_zero() {
            Rat::zero()
        } else {
            Rat::unsupported("tanh", self)
        }
    }
    fn normal_tail(&self) -> Self {
        Rat::unsupported("normal_tail", self)
    }
}
