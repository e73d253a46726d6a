//! Closed forms of the named functions, generic over [`Real`].
//!
//! Functions with a removable singularity at `u = 0` are written here in
//! their raw quotient form; [`super::series`] supplies the regular
//! numerators used near the origin.

use super::jet::Jet;
use super::real::{k, Real};

// ---------------------------------------------------------------- constants

pub fn u_star<T: Real>() -> T {
    T::ratio(51, 125)
}

pub fn c_be<T: Real>() -> T {
    T::ratio(56, 100)
}

/// `C = 5 √(2πe) P(|Z| < 1)`.
pub fn big_c<T: Real>() -> T {
    let two_pi_e = T::pi() * k(2.0) * k::<T>(1.0).exp();
    k::<T>(5.0) * two_pi_e.sqrt() * (k::<T>(1.0) - k::<T>(2.0) * k::<T>(1.0).normal_tail())
}

/// `K = ln(C / (2√(2π) c_BE))`.
pub fn big_k<T: Real>() -> T {
    let s = (T::pi() * k(2.0)).sqrt();
    (big_c::<T>() / (k::<T>(2.0) * s * c_be())).ln()
}

pub fn pdf<T: Real>(x: &T) -> T {
    (-(x.sqr()) * k(0.5)).exp() / (T::pi() * k(2.0)).sqrt()
}

/// `h(x) = C φ(x) / (9 + x²)`.
pub fn h<T: Real>(x: &T) -> T {
    big_c::<T>() * pdf(x) / (k::<T>(9.0) + x.sqr())
}

// ------------------------------------------------------- one-variable forms

pub fn ell<T: Real>(u: &T) -> T {
    u.ln_cosh() / u.sqr()
}

pub fn e_fn<T: Real>(u: &T) -> T {
    ell(u) + u.sech().sqr() * k(0.5) - u.tanh() / u.clone()
}

pub fn f_fn<T: Real>(u: &T) -> T {
    k::<T>(1.0) - u.tanh() / u.clone() + u.sech().sqr()
}

/// `ȟ(u) = sech² u`.
pub fn hcheck<T: Real>(u: &T) -> T {
    u.sech().sqr()
}

pub fn alpha<T: Real>(u: &T) -> T {
    u.clone() * (k::<T>(1.0) + u.tanh().sqr()) * u.cosh()
}

/// Numerator of `γ` after clearing `u²`: `sech 2u [cosh u + cosh 3u + u(3 sinh u + sinh 3u)]`.
pub fn gamma_numerator<T: Real>(u: &T) -> T {
    let u3 = u.clone() * k(3.0);
    (u.clone() * k(2.0)).sech()
        * (u.cosh() + u3.cosh() + u.clone() * (u.sinh() * k(3.0) + u3.sinh()))
}

/// `4 cosh u ln cosh u − 2u sinh u`, vanishing like `u⁴/3`.
pub fn gamma_denominator<T: Real>(u: &T) -> T {
    k::<T>(4.0) * u.cosh() * u.ln_cosh() - k::<T>(2.0) * u.clone() * u.sinh()
}

pub fn gamma_fn<T: Real>(u: &T) -> T {
    u.sqr() * gamma_numerator(u) / gamma_denominator(u)
}

/// `α'(u)`.
pub fn alpha_prime<T: Real>(u: &T) -> T {
    let j = alpha(&Jet::variable(u.clone(), 1));
    j.coeff(1)
}

/// `ℓ'(u) = (u tanh u − 2 ln cosh u)/u³`.
pub fn ell_prime<T: Real>(u: &T) -> T {
    (u.clone() * u.tanh() - k::<T>(2.0) * u.ln_cosh()) / u.powi(3)
}

/// `ρ = α'/ℓ'`.
pub fn rho<T: Real>(u: &T) -> T {
    alpha_prime(u) / ell_prime(u)
}

pub fn t1_numerator<T: Real>(u: &T) -> T {
    k::<T>(3.0) * (k::<T>(2.0) * u.ln_cosh() - u.sqr())
}

pub fn t1<T: Real>(u: &T) -> T {
    t1_numerator(u) / u.powi(4)
}

pub fn t2<T: Real>(u: &T) -> T {
    let s = T::ratio(3, 2).sqrt();
    (s * (k::<T>(2.0) + k::<T>(3.0) * u.sqr()) * (u.clone() * k(2.0)).cosh() * u.sech()).ln()
}

pub fn t3<T: Real>(u: &T) -> T {
    ell::<T>(&u_star()) - ell(u)
}

pub fn t4<T: Real>(u: &T) -> T {
    k::<T>(6.0) / u.sqr() - gamma_fn(u)
}

pub fn f41<T: Real>(u: &T) -> T {
    let u2 = u.clone() * k(2.0);
    let u3 = u.clone() * k(3.0);
    -(k::<T>(24.0) * u.ln_cosh())
        + k::<T>(6.0) * u.clone() * u.sech() * u2.sech() * (u3.sinh() - u.sinh())
        + u.powi(4) * u2.sech() * (k::<T>(1.0) + u.sech() * u3.cosh())
}

pub fn f42<T: Real>(u: &T) -> T {
    let u3 = u.clone() * k(3.0);
    u.powi(5) * u.sech() * (u.clone() * k(2.0)).sech() * (k::<T>(3.0) * u.sinh() + u3.sinh())
}

/// The printed sixth derivative of `F41`.
pub fn f41_d6<T: Real>(u: &T) -> T {
    let (u3, u5) = (u.clone() * k(3.0), u.clone() * k(5.0));
    k::<T>(24.0)
        * u.sech().powi(7)
        * (k::<T>(80.0) * u.cosh() - k::<T>(50.0) * u3.cosh() + k::<T>(2.0) * u5.cosh()
            - u.clone() * (k::<T>(302.0) * u.sinh() - k::<T>(57.0) * u3.sinh() + u5.sinh()))
}

pub fn g4_numerator<T: Real>(u: &T) -> T {
    k::<T>(2.0) * u.ln_cosh() - u.clone() * u.tanh()
}

pub fn g4<T: Real>(u: &T) -> T {
    g4_numerator(u) / u.powi(4)
}

pub fn f4<T: Real>(u: &T) -> T {
    -(f41(u) + f42(u)) / (k::<T>(2.0) * u.powi(6))
}

pub fn tilde_lambda<T: Real>(u: &T) -> T {
    t1(u) + t2(u) + t3(u) * t4(u)
}

/// Lower Padé bracket `r₂,₃` of `ln cosh`.
pub fn r23<T: Real>(u: &T) -> T {
    let u2 = u.sqr();
    k::<T>(3.0) * u2.clone() / (k::<T>(6.0) + u2)
}

/// Upper Padé bracket `r₄,₂` of `ln cosh`.
pub fn r42<T: Real>(u: &T) -> T {
    let u2 = u.sqr();
    k::<T>(3.0) * u2.clone() * (k::<T>(10.0) + u2.clone())
        / (k::<T>(4.0) * (k::<T>(15.0) + k::<T>(4.0) * u2))
}

/// `P₀(u)/u`; `P₀` carries an explicit factor `u`.
pub fn p0_over_u<T: Real>(u: &T) -> T {
    let u2 = u.sqr();
    let sh = |m: f64| (u.clone() * k(m)).sinh();
    let ch = |m: f64| (u.clone() * k(m)).cosh();
    let c = |v: f64| k::<T>(v);
    c(167.0) * u.clone() - c(5.0) * u.powi(3)
        - c(4.0) * (c(97.0) * u2.clone() + c(63.0)) * sh(2.0)
        + c(2.0) * (c(41.0) * u2.clone() - c(72.0)) * sh(4.0)
        + c(12.0) * (c(5.0) * u2.clone() + c(3.0)) * sh(6.0)
        - (c(13.0) * u2.clone() - c(36.0)) * sh(8.0)
        + c(2.0) * (c(9.0) * u2.clone() + c(17.0)) * u.clone() * ch(2.0)
        - c(24.0) * (u2.clone() + c(4.0)) * u.clone() * ch(4.0)
        + c(2.0) * (c(7.0) * u2.clone() + c(31.0)) * u.clone() * ch(6.0)
        - (c(3.0) * u2 - c(25.0)) * u.clone() * ch(8.0)
}

pub fn p0<T: Real>(u: &T) -> T {
    u.clone() * p0_over_u(u)
}

pub fn p1<T: Real>(u: &T) -> T {
    let u2 = u.sqr();
    let u3 = u.powi(3);
    let sh = |m: f64| (u.clone() * k(m)).sinh();
    let ch = |m: f64| (u.clone() * k(m)).cosh();
    let c = |v: f64| k::<T>(v);
    c(2.0)
        * u.cosh()
        * (-(c(250.0) * u3.clone() * sh(1.0)) - c(98.0) * u3.clone() * sh(3.0)
            - c(34.0) * u3.clone() * sh(5.0)
            + c(6.0) * u3 * sh(7.0)
            - c(161.0) * u2.clone() * ch(5.0)
            + c(23.0) * u2.clone() * ch(7.0)
            + (c(321.0) * u2.clone() + c(432.0)) * ch(1.0)
            + (c(96.0) - c(471.0) * u2) * ch(3.0)
            + c(15.0) * u.clone() * sh(1.0)
            - c(147.0) * u.clone() * sh(3.0)
            - c(195.0) * u.clone() * sh(5.0)
            - c(33.0) * u.clone() * sh(7.0)
            - c(96.0) * ch(5.0)
            - c(48.0) * ch(7.0))
}

/// `W₂,₃ = (6+u²)/u · (P₀ + P₁ r₂,₃)`, expanded so no division by `u` remains.
pub fn w23<T: Real>(u: &T) -> T {
    (k::<T>(6.0) + u.sqr()) * p0_over_u(u) + k::<T>(3.0) * u.clone() * p1(u)
}

/// `W₄,₂ = 4(15+4u²)/u · (P₀ + P₁ r₄,₂)`, expanded.
pub fn w42<T: Real>(u: &T) -> T {
    let u2 = u.sqr();
    k::<T>(4.0) * (k::<T>(15.0) + k::<T>(4.0) * u2.clone()) * p0_over_u(u)
        + k::<T>(3.0) * u.clone() * (k::<T>(10.0) + u2) * p1(u)
}

/// `P₀ + P₁ ln cosh`.
pub fn w_tilde<T: Real>(u: &T) -> T {
    p0(u) + p1(u) * u.ln_cosh()
}

/// The closed form of `W₀² u⁴ cosh⁵u / 4`.
pub fn w02_form<T: Real>(u: &T) -> T {
    let (ch, sh) = (u.cosh(), u.sinh());
    k::<T>(2.0) * u.clone() * ch.clone() * sh.sqr() - u.sqr() * sh.powi(3)
        - (u.clone() + k::<T>(3.0) * ch.clone() * sh.clone() - k::<T>(2.0) * u.clone() * sh.sqr())
            * ch
            * u.ln_cosh()
}

/// Numerator of `e`: `e = E/u²`.
pub fn e_numerator<T: Real>(u: &T) -> T {
    u.ln_cosh() + u.sqr() * u.sech().sqr() * k(0.5) - u.clone() * u.tanh()
}

/// Numerator of `f`: `f = F/u`.
pub fn f_numerator<T: Real>(u: &T) -> T {
    u.clone() - u.tanh() + u.clone() * u.sech().sqr()
}

/// `g_r(u) = e(u) + r (1 − f(u) cosh u)`.
pub fn g_r<T: Real>(u: &T, r: &T) -> T {
    e_fn(u) + r.clone() * (k::<T>(1.0) - f_fn(u) * u.cosh())
}

/// `−u² g_r(u)`, regular at 0.
pub fn neg_u2_g_r<T: Real>(u: &T, r: &T) -> T {
    r.clone() * u.clone() * f_numerator(u) * u.cosh() - e_numerator(u) - r.clone() * u.sqr()
}

// ------------------------------------------------- two-variable quantities

/// `Λ(x, u) = x² ℓ(u) + ln α(u) − x²/2 − ln x + ln(9+x²) − K`.
pub fn lambda<T: Real>(x: &T, u: &T) -> T {
    let x2 = x.sqr();
    x2.clone() * ell(u) + alpha(u).ln() - x2.clone() * k(0.5) - x.ln() + (k::<T>(9.0) + x2).ln()
        - big_k::<T>()
}

/// `Λ(x, u*)` with the `u`-constants folded in.
pub fn lambda_slice<T: Real>(x: &T) -> T {
    lambda(x, &u_star::<T>())
}

pub fn p1_poly<T: Real>(x: &T, u: &T) -> T {
    let x2 = x.sqr();
    x2.clone() * (k::<T>(11.0) + x2.clone()) - (k::<T>(10.0) * u.sqr() + k::<T>(2.0) * u.clone() * x2)
}

pub fn p2_poly<T: Real>(x: &T, u: &T) -> T {
    let x2 = x.sqr();
    x2.clone() * (k::<T>(9.0) + x2.clone()) - (k::<T>(8.0) * u.sqr() + k::<T>(2.0) * u.clone() * x2)
}

pub fn p3_poly<T: Real>(x: &T, u: &T) -> T {
    let x2 = x.sqr();
    x2.clone() * (k::<T>(9.0) + x2.clone()) - (k::<T>(8.0) * u.sqr() - k::<T>(2.0) * u.clone() * x2)
}

pub fn p2s<T: Real>(x: &T) -> T {
    p2_poly(x, &u_star::<T>())
}

pub fn p3s<T: Real>(x: &T) -> T {
    p3_poly(x, &u_star::<T>())
}

pub fn p4s<T: Real>(x: &T) -> T {
    let x2 = x.sqr();
    let c = |v: f64| k::<T>(v);
    c(-184_559_856_669.0)
        + x2.clone() * (c(1_289_843_642_871.0) + x2.clone() * (c(244_896_587_625.0) + x2 * c(85_828_328_125.0)))
}

/// `U, V = (x ∓ a)/√(1 − a²)`.
pub fn u_v<T: Real>(x: &T, a: &T) -> (T, T) {
    let s = (k::<T>(1.0) - a.sqr()).sqrt();
    ((x.clone() - a.clone()) / s.clone(), (x.clone() + a.clone()) / s)
}

/// `Γ(x) − ½Γ(U) − ½Γ(V)`, nonnegative by the Gaussian two-point inequality.
pub fn bgh_gaussian_gap<T: Real>(x: &T, a: &T) -> T {
    let (uu, vv) = u_v(x, a);
    x.normal_tail() - (uu.normal_tail() + vv.normal_tail()) * k(0.5)
}

/// `(½h(U) + ½h(V))/h(x) − 1` with `a = u/x`, written without `C` or `φ(x)`.
pub fn bgh_h_ratio_minus_one<T: Real>(x: &T, u: &T) -> T {
    let a = u.clone() / x.clone();
    let one_m_a2 = k::<T>(1.0) - a.sqr();
    let (uu, vv) = u_v(x, &a);
    let nine_x2 = k::<T>(9.0) + x.sqr();
    let common = -(u.sqr() + a.sqr()) / (one_m_a2.clone() * k(2.0));
    let s = u.clone() / one_m_a2;
    let tu = (common.clone() + s.clone()).exp() * nine_x2.clone() / (k::<T>(9.0) + uu.sqr());
    let tv = (common - s).exp() * nine_x2 / (k::<T>(9.0) + vv.sqr());
    (tu + tv) * k(0.5) - k(1.0)
}

/// `Δ(x, u) = √(2π)/C [½h(U) + ½h(V) − h(x)]`, `a = u/x`.
pub fn delta<T: Real>(x: &T, u: &T) -> T {
    let a = u.clone() / x.clone();
    let (uu, vv) = u_v(x, &a);
    let scale = (T::pi() * k(2.0)).sqrt() / big_c::<T>();
    scale * ((h(&uu) + h(&vv)) * k(0.5) - h(x))
}

pub fn delta_star<T: Real>(x: &T) -> T {
    delta(x, &u_star::<T>())
}

/// `Δ*₁(x)`: the derivative of `Δ*/h`, rescaled by the printed positive factor.
pub fn delta_star_1<T: Real>(x: &T) -> T {
    let xj = Jet::variable(x.clone(), 1);
    let ratio = delta_star(&xj) / h(&xj);
    let d = ratio.coeff(1);
    let us2 = u_star::<T>().sqr();
    let x2 = x.sqr();
    let expo = k::<T>(51.0) * (k::<T>(301.0) * x2.clone() + k(51.0))
        / (k::<T>(31250.0) * x2.clone() - k(5202.0));
    big_c::<T>() / (T::pi() * k(2.0)).sqrt()
        * d
        * (k::<T>(3_814_697_265_625.0) / k(51.0))
        * expo.exp()
        * (x2 - us2)
        * p3s(x).sqr()
        / (x.clone() * p4s(x))
}

// ------------------------------------------------------ concavity of h_a

/// `arccosh(1/√v) = ln((1 + √(1−v))/√v)`.
pub fn arccosh_inv_sqrt<T: Real>(v: &T) -> T {
    ((k::<T>(1.0) + (k::<T>(1.0) - v.clone()).sqrt()) / v.sqrt()).ln()
}

/// `h_a(v) = arccosh(1/√v)(2 − v)(v − a/√v)`.
pub fn h_a<T: Real>(v: &T, a: &T) -> T {
    arccosh_inv_sqrt(v) * (k::<T>(2.0) - v.clone()) * (v.clone() - a.clone() / v.sqrt())
}

/// `h_a''(v)`.
pub fn h_a_second<T: Real>(v: &T, a: &T) -> T {
    let j = h_a(&Jet::variable(v.clone(), 2), &Jet::lift(a.clone()));
    j.coeff(2) * k(2.0)
}

/// `h_a` along `v = sech² s`: `H(s) = s(2 − sech²s)(sech²s − a cosh s)`.
pub fn h_a_of_s<T: Real>(s: &T, a: &T) -> T {
    let v = s.sech().sqr();
    s.clone() * (k::<T>(2.0) - v.clone()) * (v - a.clone() * s.cosh())
}

/// `Ψ_a(s) = H''v' − H'v'' = h_a''(v(s)) · v'(s)³` with `v = sech² s`.
/// Since `v' < 0` for `s > 0`, `h_a'' < 0` iff `Ψ_a > 0`.
pub fn psi<T: Real>(s: &T, a: &T) -> T {
    let sj = Jet::variable(s.clone(), 2);
    let hh = h_a_of_s(&sj, &Jet::lift(a.clone()));
    let vv = sj.sech().sqr();
    let (h1, h2) = (hh.coeff(1), hh.coeff(2) * k(2.0));
    let (v1, v2) = (vv.coeff(1), vv.coeff(2) * k(2.0));
    h2 * v1 - h1 * v2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn constants_from_forms() {
        assert!(rel(big_c::<f64>(), 14.106_861_346_424_48) < 1e-14);
        assert!(rel(big_k::<f64>(), 1.614_394_080_824_971) < 1e-14);
        assert!(rel(gamma_fn(&0.408f64).sqrt(), 7.392_976_515_745_285) < 1e-13);
    }

    #[test]
    fn decomposition_of_tilde_lambda() {
        // Λ̃(u) = Ĵ₀(√6/u, u) − 3/u² − ln(√6/u) + ln(9 + 6/u²)
        for &u in &[0.05f64, 0.2, 0.35, 0.408] {
            let x = 6f64.sqrt() / u;
            let j0 = x * x * ell(&u) + alpha(&u).ln();
            let jhat = j0 + (x * x - gamma_fn(&u)) * (ell(&u_star::<f64>()) - ell(&u));
            let direct = jhat - 3.0 / (u * u) - x.ln() + (9.0 + 6.0 / (u * u)).ln();
            assert!((direct - tilde_lambda(&u)).abs() < 1e-9, "u={u}");
        }
    }

    #[test]
    fn t4_is_f4_over_g4() {
        for &u in &[0.1f64, 0.3, 0.408] {
            assert!(rel(t4(&u), f4(&u) / g4(&u)) < 1e-8, "u={u}");
        }
    }

    #[test]
    fn gamma_matches_its_definition() {
        // γ = −α'/(α ℓ')
        for &u in &[0.1f64, 0.25, 0.408] {
            let g = -alpha_prime(&u) / (alpha(&u) * ell_prime(&u));
            assert!(rel(g, gamma_fn(&u)) < 1e-10, "u={u}");
        }
    }

    #[test]
    fn printed_sixth_derivative_matches_jets() {
        for &u in &[0.1f64, 0.3, 0.408] {
            let j = f41(&Jet::variable(u, 6));
            let d6 = j.coeff(6) * 720.0;
            assert!(rel(d6, f41_d6(&u)) < 1e-6, "u={u}: {d6} vs {}", f41_d6(&u));
        }
    }

    #[test]
    fn neg_u2_g_matches_quotient() {
        for &u in &[0.5f64, 1.0, 3.0] {
            for &r in &[1.0f64, 1.5] {
                assert!(rel(neg_u2_g_r(&u, &r), -u * u * g_r(&u, &r)) < 1e-12);
            }
        }
    }

    #[test]
    fn w23_w42_expand_the_pade_substitution() {
        for &u in &[0.2f64, 0.4] {
            let w23_direct = (6.0 + u * u) / u * (p0(&u) + p1(&u) * r23(&u));
            let w42_direct = 4.0 * (15.0 + 4.0 * u * u) / u * (p0(&u) + p1(&u) * r42(&u));
            assert!(rel(w23(&u), w23_direct) < 1e-9);
            assert!(rel(w42(&u), w42_direct) < 1e-9);
        }
    }

    #[test]
    fn bgh_h_ratio_agrees_with_delta() {
        for &(x, u) in &[(2.0f64, 0.5f64), (3.9, 0.408), (6.0, 3.0)] {
            let r = bgh_h_ratio_minus_one(&x, &u);
            let d = delta(&x, &u) * big_c::<f64>() / (2.0 * std::f64::consts::PI).sqrt() / h(&x);
            assert!((r - d).abs() < 1e-12 * (1.0 + d.abs()), "({x},{u}): {r} vs {d}");
        }
    }

    #[test]
    fn h0_second_derivative_transformation() {
        // d/dt[h₀''(t⁻²)] · 4(t² − 1)^{5/2} = (3 − 2t²)(4t⁴ − 1)
        for &t in &[1.2f64, 1.5, 2.0, 3.0] {
            let tj = Jet::variable(t, 1);
            let v = tj.sqr().recip();
            let d = h_a_second(&v, &Jet::lift(0.0)).coeff(1);
            let lhs = d * 4.0 * (t * t - 1.0).powf(2.5);
            let rhs = (3.0 - 2.0 * t * t) * (4.0 * t.powi(4) - 1.0);
            assert!(rel(lhs, rhs) < 1e-9, "t={t}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn psi_matches_h_second_times_v_prime_cubed() {
        for &s in &[0.3f64, 1.0, 2.5] {
            for &a in &[0.0f64, 1.0] {
                let v = 1.0 / s.cosh().powi(2);
                let vp = -2.0 * v * s.tanh();
                let want = h_a_second(&v, &a) * vp.powi(3);
                assert!(rel(psi(&s, &a), want) < 1e-8, "s={s} a={a}");
            }
        }
    }
}
