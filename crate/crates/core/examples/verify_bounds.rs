//! Exhaustive check of every bound against seeded random and equal-weight vectors.
use rademacher_tails::bounds::{grid, BoundKind};
use rademacher_tails::coeffs::{seeded_vectors, Coefficients};
use rademacher_tails::oracle::verify_bound;

fn main() -> rademacher_tails::error::Result<()> {
    let mut set = seeded_vectors(2_000, 8, 7);
    set.extend((1..=16).map(|n| Coefficients::equal(n).unwrap()));
    let xs = grid(0.1, 0.1, 5.0)?;
    for kind in BoundKind::ALL {
        let r = verify_bound(kind, &set, &xs)?;
        println!(
            "{:>10}: {:>7} pairs, {} violations, min margin {:.3e}",
            kind.short_name(),
            r.pairs_checked,
            r.violations.len(),
            r.min_margin
        );
    }
    Ok(())
}
