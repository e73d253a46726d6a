//! Enclosures of `g(u)/u^k` near `u = 0` for regular numerators `g`.
//!
//! The coefficients `g_0 … g_{N-1}` of `g` at the origin are computed once in
//! exact rational arithmetic; the first `k` must vanish exactly. On
//! `X ⊆ [0, R]`,
//!
//! ```text
//! g(u)/u^k ∈ Σ_{i=k}^{N-1} g_i X^{i-k} + g_N([0, X.hi]) X^{N-k}
//! ```
//!
//! where `g_N([0, X.hi])` encloses the normalized `N`-th derivative over the
//! whole segment (Lagrange remainder), obtained from interval jets.

use std::sync::OnceLock;

use super::forms;
use super::interval::Interval;
use super::jet::Jet;
use super::rat::Rat;
use super::real::{k, Real};

/// Regular numerators `g` with a known vanishing order at 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    /// `ln cosh u`, `k = 2` (gives `ℓ`).
    LnCosh,
    /// numerator of `e`, `k = 2`.
    ENum,
    /// numerator of `f`, `k = 1`.
    FNum,
    /// `3(2 ln cosh u − u²)`, `k = 4` (gives `T₁`).
    T1Num,
    /// `2 ln cosh u − u tanh u`, `k = 4` (gives `g₄`).
    G4Num,
    /// `F₄₁ + F₄₂`, `k = 6`.
    F4,
    /// `F₄₁`, `k = 6`.
    F41,
    /// `F₄₂`, `k = 6`.
    F42,
    /// `6u⁶ − F₄₂`, `k = 8`.
    F42Gap,
    /// `768 − F₄₁⁽⁶⁾`, `k = 2`.
    F41d6Gap,
    /// `4 cosh u ln cosh u − 2u sinh u`, `k = 4`.
    GammaDen,
    /// `ln cosh − r₂,₃`, `k = 6`.
    PadeLo,
    /// `r₄,₂ − ln cosh`, `k = 8`.
    PadeHi,
    /// closed form of the second Wronskian, `k = 7`.
    W02,
    /// `W₂,₃`, `k = 5`.
    W23,
    /// `W₄,₂`, `k = 5`.
    W42,
    /// `P₀ + P₁ ln cosh`, `k = 6`.
    WTilde,
    /// `−u² g₁(u)`, `k = 4`.
    NegGR1,
    /// `−u² g_{3/2}(u)`, `k = 6`.
    NegGR32,
    /// `Ψ₁(s)`, `k = 2`.
    Psi1,
}

impl Atom {
    pub const ALL: [Atom; 20] = [
        Atom::LnCosh,
        Atom::ENum,
        Atom::FNum,
        Atom::T1Num,
        Atom::G4Num,
        Atom::F4,
        Atom::F41,
        Atom::F42,
        Atom::F42Gap,
        Atom::F41d6Gap,
        Atom::GammaDen,
        Atom::PadeLo,
        Atom::PadeHi,
        Atom::W02,
        Atom::W23,
        Atom::W42,
        Atom::WTilde,
        Atom::NegGR1,
        Atom::NegGR32,
        Atom::Psi1,
    ];

    fn index(self) -> usize {
        Atom::ALL.iter().position(|&a| a == self).expect("listed")
    }

    /// Vanishing order `k`.
    pub fn order(self) -> usize {
        use Atom::*;
        match self {
            FNum => 1,
            LnCosh | ENum | F41d6Gap | Psi1 => 2,
            T1Num | G4Num | GammaDen | NegGR1 => 4,
            W23 | W42 => 5,
            F4 | F41 | F42 | PadeLo | WTilde | NegGR32 => 6,
            W02 => 7,
            F42Gap | PadeHi => 8,
        }
    }

    /// Largest `X.hi` for which the series is used.
    pub fn radius(self) -> f64 {
        match self {
            Atom::W23 | Atom::W42 => 0.45,
            Atom::F4 | Atom::F41 | Atom::F42 | Atom::F42Gap => 0.1,
            Atom::Psi1 => 0.15,
            Atom::WTilde => 0.2,
            _ => 0.25,
        }
    }

    /// Truncation order `N`.
    fn degree(self) -> usize {
        match self {
            Atom::W23 | Atom::W42 => 36,
            Atom::Psi1 => 22,
            _ => 26,
        }
    }

    pub fn numerator<T: Real>(self, u: &T) -> T {
        use Atom::*;
        match self {
            LnCosh => u.ln_cosh(),
            ENum => forms::e_numerator(u),
            FNum => forms::f_numerator(u),
            T1Num => forms::t1_numerator(u),
            G4Num => forms::g4_numerator(u),
            F4 => forms::f41(u) + forms::f42(u),
            F41 => forms::f41(u),
            F42 => forms::f42(u),
            F42Gap => k::<T>(6.0) * u.powi(6) - forms::f42(u),
            F41d6Gap => k::<T>(768.0) - forms::f41_d6(u),
            GammaDen => forms::gamma_denominator(u),
            PadeLo => u.ln_cosh() - forms::r23(u),
            PadeHi => forms::r42(u) - u.ln_cosh(),
            W02 => forms::w02_form(u),
            W23 => forms::w23(u),
            W42 => forms::w42(u),
            WTilde => forms::w_tilde(u),
            NegGR1 => forms::neg_u2_g_r(u, &k(1.0)),
            NegGR32 => forms::neg_u2_g_r(u, &T::ratio(3, 2)),
            Psi1 => forms::psi(u, &k(1.0)),
        }
    }

    /// Plain quotient `g(u)/u^k` for `u > 0`.
    pub fn quotient<T: Real>(self, u: &T) -> T {
        self.numerator(u) / u.powi(self.order() as u32)
    }
}

pub struct SeriesData {
    pub atom: Atom,
    /// exact coefficients `g_k … g_{N-1}`
    pub exact: Vec<Rat>,
    coeffs: Vec<Interval>,
    coeffs_f64: Vec<f64>,
}

fn build(atom: Atom) -> SeriesData {
    let n = atom.degree();
    let kk = atom.order();
    let jet = atom.numerator(&Jet::variable(Rat::zero(), n - 1));
    for i in 0..kk {
        assert!(
            jet.coeff(i).is_zero(),
            "{atom:?}: coefficient {i} does not vanish ({:?})",
            jet.coeff(i)
        );
    }
    let exact: Vec<Rat> = (kk..n).map(|i| jet.coeff(i)).collect();
    let coeffs = exact.iter().map(|q| Interval::from_rational(&q.0)).collect();
    let coeffs_f64 = exact.iter().map(|q| Interval::from_rational(&q.0).mid()).collect();
    SeriesData { atom, exact, coeffs, coeffs_f64 }
}

static CACHE: OnceLock<Vec<OnceLock<SeriesData>>> = OnceLock::new();

pub fn series(atom: Atom) -> &'static SeriesData {
    let cache = CACHE.get_or_init(|| Atom::ALL.iter().map(|_| OnceLock::new()).collect());
    cache[atom.index()].get_or_init(|| build(atom))
}

impl SeriesData {
    /// Leading coefficient `g_k`, i.e. the value of the quotient at 0.
    pub fn leading(&self) -> &Rat {
        &self.exact[0]
    }

    /// Enclosure of `g(u)/u^k` over `X ⊆ [0, radius]`.
    pub fn enclose(&self, x: Interval) -> Interval {
        debug_assert!(x.lo >= 0.0 && x.hi <= self.atom.radius());
        let n = self.atom.degree();
        let kk = self.atom.order();
        let mut acc = Interval::point(0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + *c;
        }
        let seg = Interval { lo: 0.0, hi: x.hi };
        let rem = self.atom.numerator(&Jet::variable(seg, n)).coeff(n);
        acc + rem * x.powi((n - kk) as u32)
    }

    /// Plain evaluation of the truncated series (no remainder).
    pub fn point(&self, u: f64) -> f64 {
        self.coeffs_f64.iter().rev().fold(0.0, |acc, c| acc * u + c)
    }
}

/// Interval enclosure of `g(u)/u^k` over any `X ⊆ [0, ∞)`.
pub fn quotient_enclosure(atom: Atom, x: Interval) -> Interval {
    let r = atom.radius();
    if x.hi <= r {
        series(atom).enclose(x)
    } else if x.lo < r {
        let a = series(atom).enclose(Interval { lo: x.lo, hi: r });
        let b = quotient_enclosure(atom, Interval { lo: r, hi: x.hi });
        a.hull(&b)
    } else {
        super::taylor::taylor_form_1d(|t: &Interval| atom.quotient(t), |t: &Jet<Interval>| atom.quotient(t), x)
    }
}

pub fn quotient_point(atom: Atom, u: f64) -> f64 {
    if u.abs() <= atom.radius() {
        series(atom).point(u)
    } else {
        atom.quotient(&u)
    }
}
