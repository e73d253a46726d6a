use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;
use rademacher_tails::bounds::{comparison_bound, q_bound, BoundKind};
use rademacher_tails::coeffs::{seeded_vectors, Coefficients};
use rademacher_tails::error::Error;
use rademacher_tails::oracle::{
    binomial_tail, binomial_tail_f64, equal_weight_sup, exact_tail, exact_tail_rational, verify_bound, verify_q_bound,
    FloatTable,
};
use rademacher_tails::parallel::with_threads;

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

#[test]
fn exact_tail_examples() {
    let one = Coefficients::new(vec![1.0]).unwrap();
    assert_eq!(exact_tail(&one, 0.5).unwrap().probability_exact(), q(1, 2));
    let h = Coefficients::equal(2).unwrap();
    assert_eq!(exact_tail(&h, 2f64.sqrt()).unwrap().probability_exact(), q(1, 4));
    let c = Coefficients::parse_exact("3/5,4/5").unwrap();
    assert_eq!(exact_tail_rational(&c, &q(1, 5)).unwrap().probability_exact(), q(1, 2));
    let f = Coefficients::new(vec![0.6, 0.8]).unwrap();
    let r = exact_tail(&f, 0.2).unwrap();
    assert_eq!(r.probability(), 0.5);
    assert_eq!(r.atom_mass(), 0.25);
    assert_eq!(r.n_outcomes(), 4);
}

#[test]
fn exact_tail_errors() {
    let big = Coefficients::equal(25).unwrap();
    assert!(matches!(exact_tail(&big, 1.0), Err(Error::Capacity(_))));
    let float = Coefficients::new(vec![0.6, 0.8]).unwrap();
    assert!(matches!(exact_tail_rational(&float, &q(1, 5)), Err(Error::Domain(_))));
    assert!(exact_tail(&float, f64::NAN).is_err());
}

#[test]
fn binomial_examples() {
    assert_eq!(binomial_tail(2, 2f64.sqrt()).unwrap(), q(1, 4));
    assert_eq!(binomial_tail(4, 1.0).unwrap(), q(5, 16));
    assert_eq!(binomial_tail(1, 0.5).unwrap(), q(1, 2));
    assert!(binomial_tail(0, 1.0).is_err());
}

#[test]
fn equal_weight_sup_examples() {
    assert_eq!(equal_weight_sup(1.0, 64).unwrap(), (0.5, 1));
    let (v, n) = equal_weight_sup(2f64.sqrt(), 64).unwrap();
    assert!((v - 0.25).abs() < 1e-14);
    assert_eq!(n, 2);
    assert_eq!(equal_weight_sup(10.0, 64).unwrap(), (0.0, 1));
    assert!(matches!(equal_weight_sup(1.0, 10_001), Err(Error::Capacity(_))));
}

#[test]
fn verify_examples() {
    let one = vec![Coefficients::new(vec![1.0]).unwrap()];
    assert!(verify_q_bound(&one, &[0.5, 1.0]).unwrap().is_clean());
    let h = vec![Coefficients::equal(2).unwrap()];
    let r = verify_q_bound(&h, &[2f64.sqrt()]).unwrap();
    assert!(r.is_clean());
    let margin = q_bound(2f64.sqrt(), false).unwrap().value - 0.25;
    assert!(r.min_margin > 0.0 && (r.min_margin - margin).abs() < 1e-15);
    let cheb = verify_bound(BoundKind::ChebyshevSym, &h, &[0.5, 1.2]).unwrap();
    assert_eq!(cheb.pairs_checked, 1);
    assert!(cheb.is_clean());
}

#[test]
fn binomial_agrees_with_enumeration() {
    for n in 1..=20u64 {
        let c = Coefficients::equal(n as usize).unwrap();
        let table = FloatTable::new(&c).unwrap();
        let kmax = ((n as f64).sqrt() / 0.1).ceil() as i64;
        for k in 1..=kmax {
            let x = 0.1 * k as f64;
            assert_eq!(binomial_tail(n, x).unwrap(), table.tail(x).probability_exact(), "n = {n}, x = {x}");
            let f = binomial_tail_f64(n, x);
            assert!((f - table.tail(x).probability()).abs() < 1e-13);
        }
    }
}

#[test]
fn exact_mode_denominators_divide_two_to_n() {
    let c = Coefficients::parse_exact("3/13,4/13,12/13").unwrap();
    for x in [-2.0, -0.5, 0.0, 0.1, 0.5, 1.0, 1.5] {
        let p = exact_tail(&c, x).unwrap().probability_exact();
        let d: BigInt = p.denom().clone();
        assert_eq!(BigInt::from(8) % d, BigInt::from(0));
    }
    // atoms: 12/13 + 4/13 − 3/13 = 1 exactly
    let r = exact_tail_rational(&c, &BigRational::one()).unwrap();
    assert_eq!(r.count_atom, 1);
    assert_eq!(r.count_ge, 2);
}

#[test]
fn catalog_bounds_dominate_truth() {
    let set = seeded_vectors(300, 10, 11);
    let xs: Vec<f64> = (1..=50).map(|k| 0.1 * k as f64).collect();
    for kind in [BoundKind::QBound, BoundKind::Hoeffding, BoundKind::CStar, BoundKind::BentkusDzindzalieta] {
        let r = verify_bound(kind, &set, &xs).unwrap();
        assert!(r.is_clean(), "{kind}: {:?}", r.violations.first());
        assert!(r.pairs_checked > 0);
    }
}

#[test]
fn five_sixteenths_at_one_on_samples() {
    let mut set = seeded_vectors(500, 12, 5);
    set.extend((1..=16).map(|n| Coefficients::equal(n).unwrap()));
    for c in &set {
        let r = exact_tail(c, 1.0).unwrap();
        assert!(r.strict_probability() <= 5.0 / 16.0 + 1e-12, "{:?}", c.values());
    }
}

#[test]
fn results_do_not_depend_on_worker_count() {
    let set = seeded_vectors(50, 20, 3);
    let xs = [0.3, 1.0, 2.2];
    let run = || {
        set.iter()
            .flat_map(|c| xs.iter().map(move |&x| exact_tail(c, x).unwrap()))
            .collect::<Vec<_>>()
    };
    let one = with_threads(1, run);
    let four = with_threads(4, run);
    assert_eq!(one, four);
    let v1 = with_threads(1, || verify_q_bound(&set, &xs).unwrap());
    let v3 = with_threads(3, || verify_q_bound(&set, &xs).unwrap());
    assert_eq!(v1, v3);
}

fn unit_vector() -> impl Strategy<Value = Coefficients> {
    prop::collection::vec(0.0f64..1.0, 1..=10).prop_filter_map("nonzero", |v| Coefficients::normalized(v).ok())
}

proptest! {
    #[test]
    fn tail_is_nonincreasing(c in unit_vector(), x in -3.0f64..3.0, dx in 0.0f64..1.0) {
        let a = exact_tail(&c, x).unwrap();
        let b = exact_tail(&c, x + dx).unwrap();
        prop_assert!(b.count_ge <= a.count_ge);
    }

    #[test]
    fn tail_symmetry(c in unit_vector(), x in -3.0f64..3.0) {
        // P(S ≥ x) + P(S ≥ −x) − P(S = x) = 1
        let p = exact_tail(&c, x).unwrap();
        let m = exact_tail(&c, -x).unwrap();
        prop_assert_eq!(p.count_ge + m.count_ge - p.count_atom, p.n_outcomes());
        prop_assert!(p.count_atom <= p.count_ge);
    }

    #[test]
    fn probabilities_in_unit_range(c in unit_vector(), x in -4.0f64..4.0) {
        let r = exact_tail(&c, x).unwrap();
        prop_assert!((0.0..=1.0).contains(&r.probability()));
        prop_assert_eq!(r.probability_exact().to_f64().unwrap(), r.probability());
    }

    #[test]
    fn q_bound_dominates_random_instances(c in unit_vector(), x in 0.05f64..5.0) {
        let r = exact_tail(&c, x).unwrap();
        prop_assert!(r.probability() <= q_bound(x, false).unwrap().value + 1e-12);
        prop_assert!(r.probability() <= comparison_bound(BoundKind::Hoeffding, x).unwrap().value + 1e-12);
    }
}
