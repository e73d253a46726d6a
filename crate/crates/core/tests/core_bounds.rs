use proptest::prelude::*;
use rademacher_tails::bounds::{
    best_envelope, comparison_bound, grid, h, lattice_bracket, q_bound, q_extended, qhat_iid_bound, ratio_argmax,
    ratio_table, student_t_bound, student_t_to_x, BoundKind,
};
use rademacher_tails::constants::{constants, C_BE, U_STAR, U_STAR_DEN, U_STAR_NUM};
use rademacher_tails::error::Error;
use rademacher_tails::gauss::{self, inverse_mills_ratio_r, ln_tail, std_normal_tail};

fn log_grid(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64)).collect()
}

#[test]
fn normal_tail_examples() {
    assert_eq!(std_normal_tail(0.0).unwrap(), 0.5);
    assert!((std_normal_tail(2f64.sqrt()).unwrap() - 0.078_649_603_525_142_1).abs() < 1e-15);
    let v = std_normal_tail(10.0).unwrap();
    assert!((0.9890..=0.9910).contains(&(v * 10.0 / gauss::pdf(10.0))));
    assert!(matches!(std_normal_tail(f64::NAN), Err(Error::Domain(_))));
    assert!(std_normal_tail(f64::INFINITY).is_err());
}

#[test]
fn normal_tail_reflection() {
    for x in grid(-8.0, 0.01, 8.0).unwrap() {
        assert!((gauss::tail(x) + gauss::tail(-x) - 1.0).abs() <= 1e-14, "x = {x}");
    }
}

#[test]
fn inverse_mills_examples() {
    let c = constants();
    assert!((inverse_mills_ratio_r(c.x_three_halves).unwrap() - 1.5).abs() < 1e-10);
    assert!((inverse_mills_ratio_r(10.0).unwrap() - 1.00985).abs() < 1e-4);
    assert!(inverse_mills_ratio_r(0.001).unwrap() > 100.0);
    assert!(inverse_mills_ratio_r(0.0).is_err());
    assert!(inverse_mills_ratio_r(-1.0).is_err());
}

#[test]
fn constants_examples() {
    let c = constants();
    assert!((14.10..14.11).contains(&c.big_c));
    let direct = 5.0 * (2.0 * std::f64::consts::PI * std::f64::consts::E).sqrt() * gauss::prob_abs_lt_one();
    assert!((c.big_c - direct).abs() < 1e-13);
    assert!((3.1786..3.1787).contains(&c.c_star));
    assert!((c.c_star * gauss::tail(2f64.sqrt()) - 0.25).abs() < 1e-15);
    assert_eq!(C_BE, 56.0 / 100.0);
    assert_eq!(U_STAR, 0.408);
    assert_eq!((U_STAR_NUM, U_STAR_DEN), (51, 125));
    let k = (c.big_c / (2.0 * gauss::sqrt_2pi() * 0.56)).ln();
    assert!((c.big_k - k).abs() < 1e-14 && (c.big_k - 1.614).abs() < 1e-3);
    assert!((1.03..1.04).contains(&c.x_three_halves));
    assert!((7.39..7.40).contains(&c.x_star));
}

#[test]
fn h_examples() {
    assert!((h(1.0) - (0.5 - gauss::tail(1.0))).abs() < 1e-15);
    assert!((h(1.0) - 0.341_344_746_068_542_9).abs() < 1e-12);
    assert!((h(0.0) - constants().big_c / (9.0 * gauss::sqrt_2pi())).abs() < 1e-15);
    assert!((h(0.0) - 0.625_31).abs() < 1e-5);
    assert!(rademacher_tails::bounds::ln_h(50.0) < -500.0 * std::f64::consts::LN_10);
}

#[test]
fn q_bound_examples() {
    assert!((q_bound(1.0, false).unwrap().value - 0.5).abs() <= 1e-12);
    let b = q_bound(1e-4, true).unwrap();
    assert_eq!(b.value, 1.0);
    assert!(b.clamped);
    let raw = q_bound(1e-4, false).unwrap();
    assert!((raw.value - 1.125).abs() < 1e-3 && !raw.clamped);
    let v = q_bound(2.46, false).unwrap().value;
    assert!((v / gauss::tail(2.46) - 3.61).abs() < 0.01);
    assert!(q_bound(0.0, false).is_err());
    assert!(q_bound(-1.0, true).is_err());
}

#[test]
fn comparison_examples() {
    let s2 = std::f64::consts::SQRT_2;
    assert_eq!(comparison_bound(BoundKind::Hoeffding, 0.0).unwrap().value, 1.0);
    assert!((comparison_bound(BoundKind::BentkusDzindzalieta, s2).unwrap().value - 0.25).abs() < 1e-15);
    assert!((comparison_bound(BoundKind::CStar, s2).unwrap().value - 0.25).abs() < 1e-12);
    assert_eq!(comparison_bound(BoundKind::ChebyshevSym, 2.0).unwrap().value, 0.125);
    assert_eq!(comparison_bound(BoundKind::SmallXComposite, 0.5).unwrap().value, 0.5);
    assert_eq!(comparison_bound(BoundKind::SmallXComposite, 1.2).unwrap().value, 0.5 / 1.44);
    assert!((comparison_bound(BoundKind::SmallXComposite, 1.5).unwrap().value - 3.22 * gauss::tail(1.5)).abs() < 1e-16);
    for (k, x) in [
        (BoundKind::BentkusDzindzalieta, 1.0),
        (BoundKind::BentkusDzindzalieta, 1.5),
        (BoundKind::ChebyshevSym, 1.0),
        (BoundKind::Hoeffding, -0.1),
        (BoundKind::SmallXComposite, 1.8),
    ] {
        match comparison_bound(k, x) {
            Err(Error::Domain(msg)) => assert!(msg.contains(k.domain_text()), "{msg}"),
            other => panic!("{k} at {x}: {other:?}"),
        }
    }
    assert!(best_envelope(1.2).unwrap().value <= q_bound(1.2, false).unwrap().value);
}

#[test]
fn qhat_examples() {
    assert!((qhat_iid_bound(4, 2.0, false).unwrap().value - 2.0 * q_extended(2.0)).abs() < 1e-15);
    assert!((qhat_iid_bound(4, 1.5, false).unwrap().value - (q_extended(1.0) + q_extended(2.0))).abs() < 1e-15);
    let b = qhat_iid_bound(1, 1.0, true).unwrap();
    assert!((b.value - 1.0).abs() < 1e-12);
    assert!(qhat_iid_bound(0, 1.0, false).is_err());
}

#[test]
fn student_examples() {
    assert!((student_t_bound(1.0, 2, false).unwrap().value - 0.5).abs() < 1e-12);
    assert_eq!(student_t_bound(0.0, 5, true).unwrap().value, 1.0);
    let x = student_t_to_x(10.0, 2);
    assert!((x - 1.4072).abs() < 1e-4);
    // plug x back into T = √((n−1)/n)·V/√(1 − V²/n)
    let t = (0.5f64).sqrt() * x / (1.0 - x * x / 2.0).sqrt();
    assert!((t - 10.0).abs() < 1e-12);
    assert_eq!(student_t_bound(10.0, 2, false).unwrap().value, q_bound(x, false).unwrap().value);
}

#[test]
fn ratio_examples() {
    let r = ratio_table(&[0.001]).unwrap();
    assert!((r[0].q_ratio - 2.2516).abs() < 1e-4);
    let zero = 1.0 + 2.0 * constants().big_c / (9.0 * gauss::sqrt_2pi());
    assert!((zero - 2.2506).abs() < 1e-4);
    assert!((ratio_table(&[2.46]).unwrap()[0].q_ratio - 3.61).abs() < 0.01);
    let v = ratio_table(&[50.0]).unwrap()[0].q_ratio;
    assert!(v > 1.0 && v < 1.29);
    assert!(ratio_table(&[0.0]).is_err());
    assert!(ratio_table(&[2.0, 1.0]).is_err());
    let (xm, vm) = ratio_argmax(0.01, 5.0);
    assert!((2.44..=2.48).contains(&xm) && (3.60..=3.62).contains(&vm));
}

#[test]
fn ratio_is_unimodal_on_figure_grid() {
    let rows = ratio_table(&grid(0.01, 0.01, 5.0).unwrap()).unwrap();
    let peak = rows.iter().enumerate().max_by(|a, b| a.1.q_ratio.total_cmp(&b.1.q_ratio)).unwrap().0;
    assert!(rows[..=peak].windows(2).all(|w| w[0].q_ratio <= w[1].q_ratio));
    assert!(rows[peak..].windows(2).all(|w| w[0].q_ratio >= w[1].q_ratio));
}

#[test]
fn sandwich_on_log_grid() {
    let c = constants().big_c;
    let xs = log_grid(10_000, 1e-3, 40.0);
    let mut prev_scaled = 0.0;
    let mut prev_q = f64::INFINITY;
    for &x in &xs {
        // log space keeps the comparison meaningful where Γ underflows
        let lg = ln_tail(x);
        let lq = rademacher_tails::bounds::ln_q(x);
        assert!(lg < lq && lq < lg + (c / x).ln_1p(), "x = {x}");
        let lh = rademacher_tails::bounds::ln_h(x);
        assert!(lh < c.ln() + lg - x.ln(), "x = {x}");
        let scaled = x * (lh - lg).exp();
        assert!(scaled > prev_scaled && scaled < c, "x = {x}");
        prev_scaled = scaled;
        let q = q_extended(x);
        if q > 0.0 {
            assert!(q < prev_q, "Γ + h not decreasing at {x}");
            prev_q = q;
        }
    }
}

#[test]
fn r_decreasing_to_one() {
    let xs = log_grid(10_000, 1e-3, 40.0);
    let r: Vec<f64> = xs.iter().map(|&x| inverse_mills_ratio_r(x).unwrap()).collect();
    assert!(r.windows(2).all(|w| w[1] < w[0]));
    assert!(r.last().unwrap() < &1.001);
}

#[test]
fn gaussian_tail_is_log_concave() {
    let d = 1e-3;
    for x in log_grid(2_000, 0.01, 40.0) {
        assert!(ln_tail(x) >= 0.5 * (ln_tail(x - d) + ln_tail(x + d)) - 1e-9, "x = {x}");
    }
}

#[test]
fn qhat_matches_q_at_nodes_and_is_linear() {
    for n in 1..=12u64 {
        let step = 2.0 / (n as f64).sqrt();
        let (z0, _, _) = lattice_bracket(n, 0.3);
        for k in -3..6 {
            let z = z0 + k as f64 * step;
            let v = qhat_iid_bound(n, z, false).unwrap().value;
            assert!((v - 2.0 * q_extended(z)).abs() <= 1e-14, "n = {n}, node {z}");
            // second differences vanish inside the cell
            let (a, b, c) = (z + 0.2 * step, z + 0.5 * step, z + 0.8 * step);
            let f = |t: f64| qhat_iid_bound(n, t, false).unwrap().value;
            assert!((f(a) - 2.0 * f(b) + f(c)).abs() < 1e-13);
        }
    }
}

proptest! {
    #[test]
    fn student_nonincreasing_in_t(n in 2u64..200, t in -5.0f64..50.0, dt in 0.0f64..5.0) {
        // unclamped Q(0+) ≈ 1.125 exceeds the vacuous value 1 used for t ≤ 0
        let a = student_t_bound(t, n, true).unwrap().value;
        let b = student_t_bound(t + dt, n, true).unwrap().value;
        prop_assert!(b <= a + 1e-15);
    }

    #[test]
    fn clamped_values_never_exceed_one(x in 1e-6f64..30.0) {
        let b = q_bound(x, true).unwrap();
        prop_assert!(b.value <= 1.0 && b.value > 0.0);
        prop_assert_eq!(b.clamped, q_bound(x, false).unwrap().value > 1.0);
    }

    #[test]
    fn q_strictly_between_gamma_and_upper(x in 1e-3f64..35.0) {
        let c = constants().big_c;
        let g = gauss::tail(x);
        let q = q_bound(x, false).unwrap().value;
        prop_assert!(g < q && q < g * (1.0 + c / x));
    }

    #[test]
    fn catalog_domains_are_respected(x in -3.0f64..5.0) {
        for k in BoundKind::ALL {
            let r = comparison_bound(k, x);
            prop_assert_eq!(r.is_ok(), k.valid_at(x));
            if let Ok(b) = r {
                prop_assert!(b.value >= 0.0);
            }
        }
    }
}
