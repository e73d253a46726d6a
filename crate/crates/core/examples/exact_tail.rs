//! Exact tail probabilities by full enumeration, in float and rational mode.
use num_rational::BigRational;
use rademacher_tails::coeffs::Coefficients;
use rademacher_tails::oracle::{exact_tail, exact_tail_rational};

fn main() -> rademacher_tails::error::Result<()> {
    let c = Coefficients::normalized(vec![1.0, 2.0, 3.0, 4.0, 5.0])?;
    for x in [0.0, 0.5, 1.0, 1.5] {
        let r = exact_tail(&c, x)?;
        println!("P(S >= {x}) = {} = {}  (atom {})", r.probability(), r.probability_exact(), r.atom_mass());
    }
    // 3/5 + 4/5·(−1) hits −1/5 exactly; rational mode keeps the atom
    let e = Coefficients::parse_exact("3/5,4/5")?;
    let r = exact_tail_rational(&e, &BigRational::new(1.into(), 5.into()))?;
    println!("exact P(S >= 1/5) = {}", r.probability_exact());
    Ok(())
}
