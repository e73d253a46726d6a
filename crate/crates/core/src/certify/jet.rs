//! Truncated Taylor series (jets) in one variable, generic over the scalar.
//!
//! A jet stores normalized coefficients `c[k] = f^{(k)}(t0)/k!`. A jet of
//! length one is a constant and broadcasts against longer jets, so formulas
//! can mix literals with variables without knowing the order.
//!
//! Evaluating a formula on `Jet<Interval>` seeded over a whole interval `X`
//! yields enclosures of every normalized derivative over `X`, which is what
//! Lagrange remainders and Taylor forms need. Nesting (`Jet<Jet<T>>`) gives
//! mixed partials for two-variable forms.

use std::ops::{Add, Div, Mul, Neg, Sub};

use super::real::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct Jet<T> {
    c: Vec<T>,
}

impl<T: Real> Jet<T> {
    /// The identity `t0 + t`, carrying `order + 1` coefficients.
    pub fn variable(t0: T, order: usize) -> Self {
        let mut c = vec![T::constant(0.0); order + 1];
        c[0] = t0;
        if order >= 1 {
            c[1] = T::constant(1.0);
        }
        Jet { c }
    }

    pub fn lift(v: T) -> Self {
        Jet { c: vec![v] }
    }

    pub fn from_coeffs(c: Vec<T>) -> Self {
        assert!(!c.is_empty());
        Jet { c }
    }

    pub fn value(&self) -> &T {
        &self.c[0]
    }

    /// Normalized coefficient `f^{(k)}/k!`; zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> T {
        self.c.get(k).cloned().unwrap_or_else(|| T::constant(0.0))
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn zero(n: usize) -> Vec<T> {
        vec![T::constant(0.0); n]
    }

    fn get(&self, k: usize) -> T {
        self.coeff(k)
    }

    /// Compose with `f` given the jet `[f(a), f'(a), …]` already normalized,
    /// i.e. `f(a + δ)` with `δ = self - a`. Used for functions whose
    /// derivatives are cheap at the base point only.
    fn scaled(&self, s: &T) -> Jet<T> {
        Jet { c: self.c.iter().map(|v| v.clone() * s.clone()).collect() }
    }

    /// Exponential, via `E' = A' E`.
    fn exp_impl(&self) -> Jet<T> {
        let n = self.len();
        let mut e = Self::zero(n);
        e[0] = self.c[0].exp();
        for k in 1..n {
            let mut s = T::constant(0.0);
            for j in 1..=k {
                s = s + self.c[j].clone() * e[k - j].clone() * T::constant(j as f64);
            }
            e[k] = s / T::constant(k as f64);
        }
        Jet { c: e }
    }

    /// `L' = A'/A` where `base` is the jet whose logarithm is taken.
    fn ln_of(base: &Jet<T>, l0: T) -> Jet<T> {
        let n = base.len();
        let mut l = Self::zero(n);
        l[0] = l0;
        for k in 1..n {
            let mut s = base.c[k].clone() * T::constant(k as f64);
            for j in 1..k {
                s = s - base.c[k - j].clone() * l[j].clone() * T::constant(j as f64);
            }
            l[k] = s / (base.c[0].clone() * T::constant(k as f64));
        }
        Jet { c: l }
    }

    /// Simultaneous sinh/cosh via `S' = A' C`, `C' = A' S`.
    fn sinh_cosh(&self) -> (Jet<T>, Jet<T>) {
        let n = self.len();
        let mut s = Self::zero(n);
        let mut c = Self::zero(n);
        s[0] = self.c[0].sinh();
        c[0] = self.c[0].cosh();
        for k in 1..n {
            let mut ss = T::constant(0.0);
            let mut cc = T::constant(0.0);
            for j in 1..=k {
                let w = self.c[j].clone() * T::constant(j as f64);
                ss = ss + w.clone() * c[k - j].clone();
                cc = cc + w * s[k - j].clone();
            }
            s[k] = ss / T::constant(k as f64);
            c[k] = cc / T::constant(k as f64);
        }
        (Jet { c: s }, Jet { c })
    }

    /// Derivative of the underlying series (shifts and scales).
    pub fn derivative(&self) -> Jet<T> {
        if self.len() == 1 {
            return Jet::lift(T::constant(0.0));
        }
        Jet { c: (1..self.len()).map(|k| self.c[k].clone() * T::constant(k as f64)).collect() }
    }
}

fn broadcast<T: Real>(a: &Jet<T>, b: &Jet<T>) -> usize {
    let (la, lb) = (a.len(), b.len());
    if la == 1 || lb == 1 {
        la.max(lb)
    } else {
        assert_eq!(la, lb, "jet order mismatch");
        la
    }
}

impl<T: Real> Add for Jet<T> {
    type Output = Jet<T>;
    fn add(self, o: Jet<T>) -> Jet<T> {
        let n = broadcast(&self, &o);
        Jet { c: (0..n).map(|k| self.get(k) + o.get(k)).collect() }
    }
}

impl<T: Real> Sub for Jet<T> {
    type Output = Jet<T>;
    fn sub(self, o: Jet<T>) -> Jet<T> {
        let n = broadcast(&self, &o);
        Jet { c: (0..n).map(|k| self.get(k) - o.get(k)).collect() }
    }
}

impl<T: Real> Neg for Jet<T> {
    type Output = Jet<T>;
    fn neg(self) -> Jet<T> {
        Jet { c: self.c.into_iter().map(|v| -v).collect() }
    }
}

impl<T: Real> Mul for Jet<T> {
    type Output = Jet<T>;
    fn mul(self, o: Jet<T>) -> Jet<T> {
        if o.len() == 1 {
            return self.scaled(&o.c[0]);
        }
        if self.len() == 1 {
            return o.scaled(&self.c[0]);
        }
        let n = broadcast(&self, &o);
        let mut c = Jet::<T>::zero(n);
        for (k, ck) in c.iter_mut().enumerate() {
            let mut s = self.c[0].clone() * o.c[k].clone();
            for j in 1..=k {
                s = s + self.c[j].clone() * o.c[k - j].clone();
            }
            *ck = s;
        }
        Jet { c }
    }
}

impl<T: Real> Div for Jet<T> {
    type Output = Jet<T>;
    fn div(self, o: Jet<T>) -> Jet<T> {
        if o.len() == 1 {
            let d = o.c[0].clone();
            return Jet { c: self.c.into_iter().map(|v| v / d.clone()).collect() };
        }
        let n = broadcast(&self, &o);
        let mut q = Jet::<T>::zero(n);
        for k in 0..n {
            let mut s = self.get(k);
            for j in 1..=k {
                s = s - o.c[j].clone() * q[k - j].clone();
            }
            q[k] = s / o.c[0].clone();
        }
        Jet { c: q }
    }
}

impl<T: Real> Real for Jet<T> {
    fn constant(v: f64) -> Self {
        Jet::lift(T::constant(v))
    }

    fn ratio(p: i64, q: i64) -> Self {
        Jet::lift(T::ratio(p, q))
    }

    fn pi() -> Self {
        Jet::lift(T::pi())
    }

    fn exp(&self) -> Self {
        self.exp_impl()
    }

    fn ln(&self) -> Self {
        Jet::ln_of(self, self.c[0].ln())
    }

    fn ln_1p(&self) -> Self {
        let mut base = self.clone();
        base.c[0] = T::constant(1.0) + base.c[0].clone();
        Jet::ln_of(&base, self.c[0].ln_1p())
    }

    fn sqrt(&self) -> Self {
        // R^2 = A
        let n = self.len();
        let mut r = Jet::<T>::zero(n);
        r[0] = self.c[0].sqrt();
        for k in 1..n {
            let mut s = self.c[k].clone();
            for j in 1..k {
                s = s - r[j].clone() * r[k - j].clone();
            }
            r[k] = s / (r[0].clone() * T::constant(2.0));
        }
        Jet { c: r }
    }

    fn sinh(&self) -> Self {
        self.sinh_cosh().0
    }

    fn cosh(&self) -> Self {
        self.sinh_cosh().1
    }

    fn tanh(&self) -> Self {
        let (s, c) = self.sinh_cosh();
        let mut t = s / c;
        t.c[0] = self.c[0].tanh();
        t
    }

    fn normal_tail(&self) -> Self {
        // Γ' = -φ, with φ = exp(-A²/2)/√(2π)
        let n = self.len();
        let phi = (-(self.sqr()) * Jet::constant(0.5)).exp()
            / Jet::lift((T::pi() * T::constant(2.0)).sqrt());
        let dphi_weight = self.derivative();
        let mut g = Jet::<T>::zero(n);
        g[0] = self.c[0].normal_tail();
        for k in 1..n {
            let mut s = T::constant(0.0);
            for j in 0..k {
                // (Γ∘A)' = -φ(A) A'
                s = s + phi.get(j) * dphi_weight.get(k - 1 - j);
            }
            g[k] = -s / T::constant(k as f64);
        }
        Jet { c: g }
    }

    fn sqr(&self) -> Self {
        self.clone() * self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn exp_coefficients_are_reciprocal_factorials() {
        let j = Jet::variable(0.0f64, 6).exp();
        let mut f = 1.0;
        for k in 0..=6 {
            if k > 0 {
                f *= k as f64;
            }
            assert!(close(j.coeff(k), 1.0 / f, 1e-15));
        }
    }

    #[test]
    fn sin_free_identities() {
        let x = Jet::variable(0.7f64, 8);
        let ch = x.cosh();
        let sh = x.sinh();
        let one = ch.sqr() - sh.sqr();
        assert!(close(one.coeff(0), 1.0, 1e-14));
        for k in 1..=8 {
            assert!(one.coeff(k).abs() < 1e-13);
        }
        let l = x.exp().ln();
        assert!(close(l.coeff(0), 0.7, 1e-15) && close(l.coeff(1), 1.0, 1e-14));
        for k in 2..=8 {
            assert!(l.coeff(k).abs() < 1e-13);
        }
        let r = x.sqrt().sqr();
        assert!(close(r.coeff(1), 1.0, 1e-14) && r.coeff(2).abs() < 1e-14);
    }

    #[test]
    fn tanh_derivative_is_sech_squared() {
        let x = Jet::variable(0.3f64, 2);
        let t = x.tanh();
        let s = 1.0 / 0.3f64.cosh().powi(2);
        assert!(close(t.coeff(1), s, 1e-14));
    }

    #[test]
    fn normal_tail_derivatives() {
        let x = Jet::variable(1.2f64, 3);
        let g = x.normal_tail();
        let phi = crate::gauss::pdf(1.2);
        assert!(close(g.coeff(1), -phi, 1e-14));
        // Γ'' = x φ(x), normalized by 2
        assert!(close(g.coeff(2), 1.2 * phi / 2.0, 1e-14));
        // Γ''' = (1 - x²) φ, normalized by 6
        assert!(close(g.coeff(3), (1.0 - 1.44) * phi / 6.0, 1e-13));
    }

    #[test]
    fn nested_jets_give_mixed_partials() {
        // f(x, y) = x² y³ at (2, 3)
        let x: Jet<Jet<f64>> = Jet::variable(Jet::lift(2.0), 1);
        let y: Jet<Jet<f64>> = Jet::lift(Jet::variable(3.0, 1));
        let f = x.sqr() * y.powi(3);
        assert!(close(f.coeff(0).coeff(0), 108.0, 1e-15));
        assert!(close(f.coeff(1).coeff(0), 108.0, 1e-15)); // f_x = 2xy³
        assert!(close(f.coeff(0).coeff(1), 108.0, 1e-15)); // f_y = 3x²y²
        assert!(close(f.coeff(1).coeff(1), 108.0, 1e-15)); // f_xy = 6xy²
    }
}
