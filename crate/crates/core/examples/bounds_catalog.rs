//! Q(x) next to every comparison bound, plus the best envelope.
use rademacher_tails::bounds::{best_envelope, comparison_bound, q_bound, BoundKind};

fn main() -> rademacher_tails::error::Result<()> {
    println!("{:>5} {:>12} {:>12} {:>12} {:>12} {:>12}", "x", "q", "hoeffding", "cstar", "bd", "best");
    for x in [0.5, 1.0, 1.2, 1.4, 2.0, 3.0, 4.0] {
        let cell = |k: BoundKind| {
            comparison_bound(k, x).map(|b| format!("{:12.6e}", b.value)).unwrap_or_else(|_| format!("{:>12}", "-"))
        };
        println!(
            "{x:5.2} {:12.6e} {} {} {} {:12.6e}",
            q_bound(x, false)?.value,
            cell(BoundKind::Hoeffding),
            cell(BoundKind::CStar),
            cell(BoundKind::BentkusDzindzalieta),
            best_envelope(x)?.value
        );
    }
    Ok(())
}
