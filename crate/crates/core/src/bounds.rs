//! The bound `Q(x) = Γ(x) + h(x)`, the comparison catalog, and the i.i.d. and
//! Student-t corollaries.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constants::constants;
use crate::error::{Error, Result};
use crate::gauss;

/// `h(x) = Cφ(x)/(9 + x²)`. Underflows to 0 beyond `|x| ≈ 38`; see [`ln_h`].
pub fn h(x: f64) -> f64 {
    constants().big_c * gauss::pdf(x) / (9.0 + x * x)
}

pub fn ln_h(x: f64) -> f64 {
    constants().big_c.ln() + gauss::ln_pdf(x) - (9.0 + x * x).ln()
}

/// `Q(x)/Γ(x) = 1 + C/((9 + x²)·M(x))` with `M` the Mills ratio.
pub fn q_ratio(x: f64) -> f64 {
    1.0 + constants().big_c / ((9.0 + x * x) * gauss::mills_ratio(x))
}

/// `ln Q(x)`, finite for all `x > 0`.
pub fn ln_q(x: f64) -> f64 {
    gauss::ln_tail(x) + (constants().big_c / ((9.0 + x * x) * gauss::mills_ratio(x))).ln_1p()
}

/// `Γ(x) + h(x)` for any real `x` (the theorem only covers `x > 0`).
pub fn q_extended(x: f64) -> f64 {
    gauss::tail(x) + h(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundKind {
    QBound,
    Hoeffding,
    CStar,
    BentkusDzindzalieta,
    ChebyshevSym,
    SmallXComposite,
}

impl BoundKind {
    pub const ALL: [BoundKind; 6] = [
        BoundKind::QBound,
        BoundKind::Hoeffding,
        BoundKind::CStar,
        BoundKind::BentkusDzindzalieta,
        BoundKind::ChebyshevSym,
        BoundKind::SmallXComposite,
    ];

    /// Whether `x` lies in the validity domain.
    pub fn valid_at(self, x: f64) -> bool {
        x.is_finite()
            && match self {
                BoundKind::QBound => x > 0.0,
                BoundKind::Hoeffding => x >= 0.0,
                BoundKind::CStar => true,
                BoundKind::BentkusDzindzalieta => x > 1.0 && x <= std::f64::consts::SQRT_2,
                BoundKind::ChebyshevSym => x > 1.0,
                BoundKind::SmallXComposite => x > 0.0 && x <= 3f64.sqrt(),
            }
    }

    pub fn domain_text(self) -> &'static str {
        match self {
            BoundKind::QBound => "(0, inf)",
            BoundKind::Hoeffding => "[0, inf)",
            BoundKind::CStar => "(-inf, inf)",
            BoundKind::BentkusDzindzalieta => "(1, sqrt 2]",
            BoundKind::ChebyshevSym => "(1, inf)",
            BoundKind::SmallXComposite => "(0, sqrt 3]",
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            BoundKind::QBound => "q",
            BoundKind::Hoeffding => "hoeffding",
            BoundKind::CStar => "cstar",
            BoundKind::BentkusDzindzalieta => "bd",
            BoundKind::ChebyshevSym => "cheb",
            BoundKind::SmallXComposite => "composite",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for BoundKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.short_name() == s)
            .ok_or_else(|| Error::domain(format!("unknown bound kind '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundValue {
    pub kind: BoundKind,
    pub x: f64,
    pub value: f64,
    pub clamped: bool,
}

impl BoundValue {
    fn new(kind: BoundKind, x: f64, raw: f64, clamp: bool) -> Self {
        let clamped = clamp && raw > 1.0;
        BoundValue { kind, x, value: if clamped { 1.0 } else { raw }, clamped }
    }
}

/// `Q(x) = Γ(x) + h(x)` for `x > 0`.
pub fn q_bound(x: f64, clamp: bool) -> Result<BoundValue> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::domain(format!("Q(x) requires x > 0, got {x}")));
    }
    Ok(BoundValue::new(BoundKind::QBound, x, q_extended(x), clamp))
}

/// Value of one catalog bound at `x`.
pub fn comparison_bound(kind: BoundKind, x: f64) -> Result<BoundValue> {
    if !kind.valid_at(x) {
        return Err(Error::domain(format!("{kind} bound is valid on {}, got x = {x}", kind.domain_text())));
    }
    let v = match kind {
        BoundKind::QBound => q_extended(x),
        BoundKind::Hoeffding => (-0.5 * x * x).exp(),
        BoundKind::CStar => constants().c_star * gauss::tail(x),
        BoundKind::BentkusDzindzalieta => 0.25 + 0.125 * (1.0 - (2.0 - 2.0 / (x * x)).sqrt()),
        BoundKind::ChebyshevSym => 0.5 / (x * x),
        BoundKind::SmallXComposite => {
            if x <= 1.0 {
                0.5
            } else if x <= 1.3 {
                0.5 / (x * x)
            } else {
                3.22 * gauss::tail(x)
            }
        }
    };
    Ok(BoundValue::new(kind, x, v, false))
}

/// Smallest valid catalog bound at `x` (including `Q`).
pub fn best_envelope(x: f64) -> Result<BoundValue> {
    BoundKind::ALL
        .into_iter()
        .filter(|k| k.valid_at(x))
        .map(|k| comparison_bound(k, x))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min_by(|a, b| a.value.total_cmp(&b.value))
        .ok_or_else(|| Error::domain(format!("no catalog bound is valid at x = {x}")))
}

/// Nodes of the lattice `(2/√n)(n/2 − ⌊n/2⌋ + ℤ)` bracketing `x`, and the
/// interpolation weight of the upper node.
pub fn lattice_bracket(n: u64, x: f64) -> (f64, f64, f64) {
    let step = 2.0 / (n as f64).sqrt();
    let frac = if n % 2 == 0 { 0.0 } else { 0.5 };
    let y = x / step - frac;
    let k = y.floor();
    let w = y - k;
    (step * (frac + k), step * (frac + k + 1.0), w)
}

/// `2·Q̂_n(x)` where `Q̂_n` interpolates `Q` linearly between lattice nodes.
pub fn qhat_iid_bound(n: u64, x: f64, clamp: bool) -> Result<BoundValue> {
    if n == 0 || !x.is_finite() {
        return Err(Error::domain(format!("qhat needs n >= 1 and finite x, got n = {n}, x = {x}")));
    }
    let (z0, z1, w) = lattice_bracket(n, x);
    let v = if w == 0.0 {
        q_extended(z0)
    } else {
        (1.0 - w) * q_extended(z0) + w * q_extended(z1)
    };
    Ok(BoundValue::new(BoundKind::QBound, x, 2.0 * v, clamp))
}

/// Self-normalized threshold `x = √n t/√(n − 1 + t²)` matching Student's `t`.
pub fn student_t_to_x(t: f64, n: u64) -> f64 {
    let nf = n as f64;
    nf.sqrt() * t / (nf - 1.0 + t * t).sqrt()
}

/// Bound on `P(T_n ≥ t)`: `Q` at the matching self-normalized threshold; 1 for `t ≤ 0`.
pub fn student_t_bound(t: f64, n: u64, clamp: bool) -> Result<BoundValue> {
    if n < 2 || !t.is_finite() {
        return Err(Error::domain(format!("student bound needs n >= 2 and finite t, got n = {n}, t = {t}")));
    }
    if t <= 0.0 {
        return Ok(BoundValue { kind: BoundKind::QBound, x: 0.0, value: 1.0, clamped: false });
    }
    q_bound(student_t_to_x(t, n), clamp)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    pub x: f64,
    pub q_ratio: f64,
    pub hoeffding_ratio: f64,
    pub c_star: f64,
}

/// Rows `(x, Q/Γ, e^{−x²/2}/Γ, c*)` on an increasing positive grid.
pub fn ratio_table(xs: &[f64]) -> Result<Vec<RatioRow>> {
    if xs.iter().any(|&x| !(x.is_finite() && x > 0.0)) {
        return Err(Error::domain("ratio grid must be positive and finite"));
    }
    if xs.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("ratio grid must be strictly increasing"));
    }
    let c_star = constants().c_star;
    Ok(xs
        .iter()
        .map(|&x| RatioRow {
            x,
            q_ratio: q_ratio(x),
            hoeffding_ratio: gauss::sqrt_2pi() / gauss::mills_ratio(x),
            c_star,
        })
        .collect())
}

/// Location and value of the maximum of `Q/Γ` (golden-section search on `[lo, hi]`).
pub fn ratio_argmax(lo: f64, hi: f64) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    while b - a > 1e-12 {
        if q_ratio(c) > q_ratio(d) {
            b = d;
        } else {
            a = c;
        }
        c = b - g * (b - a);
        d = a + g * (b - a);
    }
    let x = 0.5 * (a + b);
    (x, q_ratio(x))
}

/// `start:step:end` inclusive grid, built by index to avoid drift.
pub fn grid(start: f64, step: f64, end: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && start.is_finite() && end.is_finite() && end >= start) {
        return Err(Error::domain(format!("bad grid {start}:{step}:{end}")));
    }
    let n = ((end - start) / step + 1e-9).floor() as usize;
    // snap to 12 decimals so decimal grids print cleanly
    let snap = |v: f64| if v.abs() < 1e3 { (v * 1e12).round() / 1e12 } else { v };
    Ok((0..=n).map(|i| snap(start + i as f64 * step)).collect())
}
