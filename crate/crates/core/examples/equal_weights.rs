//! Exact binomial tails and the supremum over equal-weight sums.
use rademacher_tails::oracle::{binomial_tail, equal_weight_sup};

fn main() -> rademacher_tails::error::Result<()> {
    println!("P(S_4 >= 1) = {}", binomial_tail(4, 1.0)?);
    println!("P(S_100 >= 2) = {}", binomial_tail(100, 2.0)?);
    for x in [1.0, 1.5, 2.0, 3.0] {
        let (p, n) = equal_weight_sup(x, 400)?;
        println!("sup over n <= 400 of P(S_n >= {x}) = {p:.6e} at n = {n}");
    }
    Ok(())
}
