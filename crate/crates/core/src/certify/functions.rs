//! Registry of named functions with paired point and interval evaluators.
//!
//! Functions with a removable singularity at the origin are assembled from
//! [`Atom`] quotients, which switch to exact-coefficient series near 0. All
//! other functions use their closed form with a centered (Taylor or
//! mean-value) enclosure.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::forms::{self, u_star};
use super::interval::Interval;
use super::jet::Jet;
use super::real::{k, Real};
use super::series::{quotient_enclosure, quotient_point, Atom};
use super::taylor::{mean_value_2d, taylor_form_1d, Jet2};
use crate::error::{Error, Result};

macro_rules! registry {
    ($( $id:ident => $name:literal ),* $(,)?) => {
        /// A named closed form from the analysis.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
        pub enum FunctionId { $( $id ),* }

        impl FunctionId {
            pub const ALL: &'static [FunctionId] = &[ $( FunctionId::$id ),* ];

            pub fn name(self) -> &'static str {
                match self { $( FunctionId::$id => $name ),* }
            }
        }
    };
}

registry! {
    CoshOf => "cosh_of",
    SinhOf => "sinh_of",
    TanhOf => "tanh_of",
    ExpOf => "exp_of",
    LnCosh => "lncosh",
    Ell => "ell",
    EFn => "e_fn",
    FFn => "f_fn",
    Hcheck => "hcheck",
    Alpha => "alpha",
    GammaFn => "gamma_fn",
    GammaMinusSixOverU2 => "gamma_minus_six_over_u2",
    Rho => "rho",
    T1 => "T1",
    T2 => "T2",
    T2MinusK => "T2_minus_K",
    T3 => "T3",
    T4 => "T4",
    F41 => "F41",
    F42 => "F42",
    F42OverU6 => "F42_over_u6",
    F42GapOverU8 => "F42_gap_over_u8",
    F41Sixth => "F41_sixth_derivative",
    F41d6GapOverU2 => "F41d6_gap_over_u2",
    G4 => "g4",
    F4 => "f4",
    T3OverG4 => "T3_over_g4",
    AbsT3OverG4 => "abs_T3_over_g4",
    TildeLambda => "TildeLambda",
    TildeLambdaMinusK => "TildeLambda_minus_K",
    P0 => "P0",
    P1 => "P1",
    R23 => "r23",
    R42 => "r42",
    LnCoshMinusR23 => "lncosh_minus_r23",
    R42MinusLnCosh => "r42_minus_lncosh",
    LnCoshMinusR23OverU6 => "lncosh_minus_r23_over_u6",
    R42MinusLnCoshOverU8 => "r42_minus_lncosh_over_u8",
    W23 => "W23",
    W42 => "W42",
    W23OverU5 => "W23_over_u5",
    W42OverU5 => "W42_over_u5",
    WTilde => "W_tilde",
    W02Form => "W02_form",
    W02OverU7 => "W02_over_u7",
    GR1 => "g_r1",
    GR32 => "g_r32",
    NegGR1OverU2 => "neg_g_r1_over_u2",
    NegGR32OverU4 => "neg_g_r32_over_u4",
    HaSecond0 => "h_a_second_0",
    HaSecond1 => "h_a_second_1",
    Psi0 => "psi_0",
    Psi1 => "psi_1",
    Psi1OverS2 => "psi_1_over_s2",
    Lambda => "Lambda",
    LambdaSlice => "LambdaSlice",
    P1Poly => "p1",
    P2Poly => "p2",
    P3Poly => "p3",
    P2s => "p2s",
    P3s => "p3s",
    P4s => "p4s",
    Delta => "Delta",
    DeltaStar => "DeltaStar",
    DeltaStar1 => "DeltaStar1",
    BghGaussianGap => "bgh_gaussian_gap",
    BghHRatioMinusOne => "bgh_h_ratio_minus_one",
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FunctionId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        FunctionId::ALL
            .iter()
            .copied()
            .find(|f| f.name() == norm)
            .or_else(|| FunctionId::ALL.iter().copied().find(|f| f.name().eq_ignore_ascii_case(&norm)))
            .ok_or_else(|| {
                let names: Vec<_> = FunctionId::ALL.iter().map(|f| f.name()).collect();
                Error::domain(format!("unknown function '{s}'; known: {}", names.join(", ")))
            })
    }
}

/// Natural-domain restriction on one coordinate.
#[derive(Clone, Copy, Debug, PartialEq)]
enum Dom {
    Any,
    /// `[0, ∞)`
    NonNeg,
    /// `(0, ∞)`
    Pos,
    /// `(0, 1]`
    Unit,
    /// `(u*, ∞)`
    AboveUStar,
    /// `[0, 1)`
    UnitOpenRight,
}

impl Dom {
    fn admits(self, x: &Interval) -> bool {
        let finite = x.lo.is_finite() && x.hi.is_finite();
        finite
            && match self {
                Dom::Any => true,
                Dom::NonNeg => x.lo >= 0.0,
                Dom::Pos => x.lo > 0.0,
                Dom::Unit => x.lo > 0.0 && x.hi <= 1.0,
                Dom::AboveUStar => x.lo > 0.408,
                Dom::UnitOpenRight => x.lo >= 0.0 && x.hi < 1.0,
            }
    }

    fn describe(self) -> &'static str {
        match self {
            Dom::Any => "any finite interval",
            Dom::NonNeg => "[0, ∞)",
            Dom::Pos => "(0, ∞)",
            Dom::Unit => "(0, 1]",
            Dom::AboveUStar => "(u*, ∞)",
            Dom::UnitOpenRight => "[0, 1)",
        }
    }
}

impl FunctionId {
    pub fn arity(self) -> usize {
        use FunctionId::*;
        match self {
            Lambda | P1Poly | P2Poly | P3Poly | Delta | BghGaussianGap | BghHRatioMinusOne => 2,
            _ => 1,
        }
    }

    fn natural(self) -> Vec<Dom> {
        use FunctionId::*;
        match self {
            CoshOf | SinhOf | TanhOf | ExpOf | LnCosh | Hcheck | Alpha | T2 | T2MinusK
            | F41Sixth | R23 | R42 | P0 | P1 | F42 | P2s | P3s | P4s => vec![Dom::Any],
            GammaFn | Rho | LambdaSlice => vec![Dom::Pos],
            HaSecond0 | HaSecond1 => vec![Dom::Unit],
            DeltaStar | DeltaStar1 => vec![Dom::AboveUStar],
            P1Poly | P2Poly | P3Poly => vec![Dom::Any, Dom::Any],
            Lambda => vec![Dom::Pos, Dom::NonNeg],
            Delta | BghHRatioMinusOne => vec![Dom::Pos, Dom::NonNeg],
            BghGaussianGap => vec![Dom::Any, Dom::UnitOpenRight],
            _ => vec![Dom::NonNeg],
        }
    }

    /// A compact box inside the natural domain, used for sampling.
    pub fn sample_domain(self) -> Vec<Interval> {
        use FunctionId::*;
        let iv = Interval::new;
        match self {
            ExpOf | CoshOf | SinhOf => vec![iv(-20.0, 20.0)],
            TanhOf | LnCosh | Hcheck | Alpha | T2 | T2MinusK | F41Sixth | R23 | R42 | F42 => vec![iv(-3.0, 3.0)],
            P0 | P1 => vec![iv(-2.0, 2.0)],
            GammaFn | Rho => vec![iv(0.01, 3.0)],
            HaSecond0 | HaSecond1 => vec![iv(0.01, 0.99)],
            Psi0 | Psi1 | Psi1OverS2 => vec![iv(0.0, 20.0)],
            LambdaSlice => vec![iv(1.0, 10.0)],
            P2s | P3s | P4s => vec![iv(1.5, 10.0)],
            DeltaStar | DeltaStar1 => vec![iv(1.5, 10.0)],
            P1Poly | P2Poly | P3Poly => vec![iv(1.5, 10.0), iv(0.4, 5.0)],
            Lambda => vec![iv(1.3, 8.0), iv(0.0, 0.408)],
            Delta | BghHRatioMinusOne => vec![iv(2.0, 8.0), iv(0.4, 1.9)],
            BghGaussianGap => vec![iv(1.7, 8.0), iv(0.0, 0.95)],
            GR1 | GR32 | NegGR1OverU2 | NegGR32OverU4 | LnCoshMinusR23 | R42MinusLnCosh
            | LnCoshMinusR23OverU6 | R42MinusLnCoshOverU8 | W02Form | W02OverU7 => vec![iv(0.0, 10.0)],
            _ => vec![iv(0.0, 0.408)],
        }
    }

    /// Sign-preserving desingularization: on `(0, b]`, `self = u^m · other`.
    pub fn desingularized(self) -> Option<(FunctionId, u32)> {
        use FunctionId::*;
        match self {
            LnCoshMinusR23 => Some((LnCoshMinusR23OverU6, 6)),
            R42MinusLnCosh => Some((R42MinusLnCoshOverU8, 8)),
            W23 => Some((W23OverU5, 5)),
            W42 => Some((W42OverU5, 5)),
            W02Form => Some((W02OverU7, 7)),
            Psi1 => Some((Psi1OverS2, 2)),
            F41 => None,
            _ => None,
        }
    }

    fn check(self, args: &[Interval]) -> Result<()> {
        let doms = self.natural();
        if args.len() != doms.len() {
            return Err(Error::domain(format!(
                "{} takes {} argument(s), got {}",
                self.name(),
                doms.len(),
                args.len()
            )));
        }
        for (i, (x, d)) in args.iter().zip(&doms).enumerate() {
            if !d.admits(x) {
                return Err(Error::domain(format!(
                    "{}: argument {} = {} outside natural domain {}",
                    self.name(),
                    i + 1,
                    x,
                    d.describe()
                )));
            }
        }
        Ok(())
    }

    fn is_composite(self) -> bool {
        use FunctionId::*;
        matches!(
            self,
            Ell | EFn
                | FFn
                | GammaFn
                | GammaMinusSixOverU2
                | Rho
                | T1
                | T3
                | T4
                | F41
                | F42OverU6
                | F42GapOverU8
                | F41d6GapOverU2
                | G4
                | F4
                | T3OverG4
                | AbsT3OverG4
                | TildeLambda
                | TildeLambdaMinusK
                | LnCoshMinusR23
                | R42MinusLnCosh
                | LnCoshMinusR23OverU6
                | R42MinusLnCoshOverU8
                | W23
                | W42
                | W23OverU5
                | W42OverU5
                | WTilde
                | W02Form
                | W02OverU7
                | GR1
                | GR32
                | NegGR1OverU2
                | NegGR32OverU4
                | Psi1
                | Psi1OverS2
        )
    }

    /// Composite forms in terms of atom quotients `q(A) = g_A(u)/u^{k_A}`.
    fn composite<T: Real>(self, u: &T, q: &dyn Fn(Atom) -> T) -> T {
        use FunctionId::*;
        let ell_star = || forms::ell::<T>(&u_star());
        let f4 = || -q(Atom::F4) * k(0.5);
        let t1 = || q(Atom::T1Num);
        let t3 = || ell_star() - q(Atom::LnCosh);
        let t4 = || f4() / q(Atom::G4Num);
        match self {
            Ell => q(Atom::LnCosh),
            EFn => q(Atom::ENum),
            FFn => q(Atom::FNum),
            GammaFn => forms::gamma_numerator(u) / (u.sqr() * q(Atom::GammaDen)),
            GammaMinusSixOverU2 => -t4(),
            Rho => -forms::alpha_prime(u) / (u.clone() * q(Atom::G4Num)),
            T1 => t1(),
            T3 => t3(),
            T4 => t4(),
            F41 => u.powi(6) * q(Atom::F41),
            F42OverU6 => q(Atom::F42),
            F42GapOverU8 => q(Atom::F42Gap),
            F41d6GapOverU2 => q(Atom::F41d6Gap),
            G4 => q(Atom::G4Num),
            F4 => f4(),
            T3OverG4 | AbsT3OverG4 => t3() / q(Atom::G4Num),
            TildeLambda => t1() + forms::t2(u) + t3() * t4(),
            TildeLambdaMinusK => t1() + forms::t2(u) + t3() * t4() - forms::big_k::<T>(),
            LnCoshMinusR23 => u.powi(6) * q(Atom::PadeLo),
            R42MinusLnCosh => u.powi(8) * q(Atom::PadeHi),
            LnCoshMinusR23OverU6 => q(Atom::PadeLo),
            R42MinusLnCoshOverU8 => q(Atom::PadeHi),
            W23 => u.powi(5) * q(Atom::W23),
            W42 => u.powi(5) * q(Atom::W42),
            W23OverU5 => q(Atom::W23),
            W42OverU5 => q(Atom::W42),
            WTilde => u.powi(6) * q(Atom::WTilde),
            W02Form => u.powi(7) * q(Atom::W02),
            W02OverU7 => q(Atom::W02),
            GR1 => -(u.sqr() * q(Atom::NegGR1)),
            GR32 => -(u.powi(4) * q(Atom::NegGR32)),
            NegGR1OverU2 => q(Atom::NegGR1),
            NegGR32OverU4 => q(Atom::NegGR32),
            Psi1 => u.sqr() * q(Atom::Psi1),
            Psi1OverS2 => q(Atom::Psi1),
            _ => unreachable!("{self:?} is not composite"),
        }
    }

    /// Closed forms of the regular functions.
    fn regular<T: Real>(self, a: &[T]) -> T {
        use FunctionId::*;
        let x = &a[0];
        match self {
            CoshOf => x.cosh(),
            SinhOf => x.sinh(),
            TanhOf => x.tanh(),
            ExpOf => x.exp(),
            LnCosh => x.ln_cosh(),
            Hcheck => forms::hcheck(x),
            Alpha => forms::alpha(x),
            T2 => forms::t2(x),
            T2MinusK => forms::t2(x) - forms::big_k::<T>(),
            F41Sixth => forms::f41_d6(x),
            R23 => forms::r23(x),
            R42 => forms::r42(x),
            P0 => forms::p0(x),
            P1 => forms::p1(x),
            F42 => forms::f42(x),
            HaSecond0 => forms::h_a_second(x, &k(0.0)),
            HaSecond1 => forms::h_a_second(x, &k(1.0)),
            Psi0 => forms::psi(x, &k(0.0)),
            LambdaSlice => forms::lambda_slice(x),
            P2s => forms::p2s(x),
            P3s => forms::p3s(x),
            P4s => forms::p4s(x),
            DeltaStar => forms::delta_star(x),
            DeltaStar1 => forms::delta_star_1(x),
            Lambda => forms::lambda(x, &a[1]),
            P1Poly => forms::p1_poly(x, &a[1]),
            P2Poly => forms::p2_poly(x, &a[1]),
            P3Poly => forms::p3_poly(x, &a[1]),
            Delta => forms::delta(x, &a[1]),
            BghGaussianGap => forms::bgh_gaussian_gap(x, &a[1]),
            BghHRatioMinusOne => forms::bgh_h_ratio_minus_one(x, &a[1]),
            _ => unreachable!("{self:?} is composite"),
        }
    }

    /// Plain floating-point evaluation.
    pub fn point(self, p: &[f64]) -> Result<f64> {
        let boxed: Vec<Interval> = p.iter().map(|&v| Interval::point(v)).collect();
        self.check(&boxed)?;
        Ok(self.point_unchecked(p))
    }

    pub(crate) fn point_unchecked(self, p: &[f64]) -> f64 {
        if self.is_composite() {
            let u = p[0];
            let v = self.composite(&u, &|a| quotient_point(a, u));
            if self == FunctionId::AbsT3OverG4 {
                v.abs()
            } else {
                v
            }
        } else {
            self.regular(p)
        }
    }

    /// Interval enclosure of the image of `args` (a box of `arity()` intervals).
    pub fn enclose(self, args: &[Interval]) -> Result<Interval> {
        self.check(args)?;
        Ok(self.enclose_unchecked(args))
    }

    pub(crate) fn enclose_unchecked(self, args: &[Interval]) -> Interval {
        if self.is_composite() {
            let x = args[0];
            let v = self.composite(&x, &|a| quotient_enclosure(a, x));
            if self == FunctionId::AbsT3OverG4 {
                v.abs()
            } else {
                v
            }
        } else if self.arity() == 1 {
            taylor_form_1d(
                |t: &Interval| self.regular(std::slice::from_ref(t)),
                |t: &Jet<Interval>| self.regular(std::slice::from_ref(t)),
                args[0],
            )
        } else {
            mean_value_2d(
                &|x: &Interval, y: &Interval| self.regular(&[*x, *y]),
                &|x: &Jet2, y: &Jet2| self.regular(&[x.clone(), y.clone()]),
                args[0],
                args[1],
            )
        }
    }
}

/// `interval_eval`: enclosure of `f` over a one-dimensional domain.
pub fn interval_eval(f: FunctionId, domain: Interval) -> Result<Interval> {
    f.enclose(&[domain])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    #[test]
    fn names_round_trip() {
        for &f in FunctionId::ALL {
            assert_eq!(FunctionId::from_str(f.name()).unwrap(), f);
        }
        assert_eq!(FunctionId::from_str("cosh-of").unwrap(), FunctionId::CoshOf);
        assert!(FunctionId::from_str("nope").is_err());
    }

    #[test]
    fn ell_at_zero_is_one_half() {
        let e = interval_eval(FunctionId::Ell, Interval::point(0.0)).unwrap();
        assert!(e.contains(0.5), "{e:?}");
        assert_eq!(FunctionId::Ell.point(&[0.0]).unwrap(), 0.5);
    }

    #[test]
    fn domain_violations_are_errors() {
        assert!(interval_eval(FunctionId::Ell, Interval::new(-1.0, 1.0)).is_err());
        assert!(interval_eval(FunctionId::GammaFn, Interval::new(0.0, 1.0)).is_err());
        assert!(FunctionId::Delta.enclose(&[Interval::point(2.0)]).is_err());
    }

    #[test]
    fn every_function_point_lies_in_its_degenerate_enclosure() {
        for &f in FunctionId::ALL {
            let dom = f.sample_domain();
            let p: Vec<f64> = dom.iter().map(|d| d.lo + 0.37 * d.width()).collect();
            let v = f.point(&p).unwrap();
            let b: Vec<Interval> = p.iter().map(|&t| Interval::point(t)).collect();
            let e = f.enclose(&b).unwrap();
            let tol = 1e-12 * (1.0 + v.abs());
            assert!(e.lo - tol <= v && v <= e.hi + tol, "{f}: {v} not in {e:?}");
        }
    }
}
