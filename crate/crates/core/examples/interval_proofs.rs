//! Direct use of the prover: enclosures, sign proofs, extrema, and a 2-D box.
use rademacher_tails::certify::checks::u_star_interval;
use rademacher_tails::certify::prover::DEFAULT_MAX_DEPTH;
use rademacher_tails::certify::{bound_extrema, box_certify_2d, interval_eval, prove_sign, FunctionId, Interval, Sign};

fn main() -> rademacher_tails::error::Result<()> {
    println!("cosh([0, 1]) ⊆ {:?}", interval_eval(FunctionId::CoshOf, Interval::new(0.0, 1.0))?);

    let c = prove_sign(FunctionId::LnCoshMinusR23, Interval::new(0.0, 10.0), Sign::Positive, DEFAULT_MAX_DEPTH)?;
    println!("ln cosh − r23 > 0 on (0, 10]: {:?} after {} boxes", c.verdict, c.subintervals);

    // a false claim comes back with a witness
    let u = Interval::new(0.0, u_star_interval().hi);
    let c = prove_sign(FunctionId::T1, u, Sign::Positive, DEFAULT_MAX_DEPTH)?;
    println!("T1 > 0: {:?}, witness {:?}", c.verdict, c.witness);

    let (lo, hi) = bound_extrema(FunctionId::T1, u, 30)?;
    println!("inf T1 ∈ {lo:?}, sup T1 ∈ {hi:?}");

    let b = [Interval::new(3f64.sqrt(), 8.0), Interval::new(0.0, 0.95)];
    let c = box_certify_2d("bgh_gaussian", b, DEFAULT_MAX_DEPTH)?;
    println!("bgh_gaussian on {b:?}: {:?} (compact box only: {})", c.verdict, c.compact_box_only);
    Ok(())
}
