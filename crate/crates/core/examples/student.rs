//! Conservative p-values for the self-normalized sum and the iid lattice bound.
use rademacher_tails::bounds::{qhat_iid_bound, student_t_bound, student_t_to_x};

fn main() -> rademacher_tails::error::Result<()> {
    for (t, n) in [(1.0, 2), (2.0, 10), (3.0, 30), (4.0, 100)] {
        let p = student_t_bound(t, n, true)?;
        println!("t = {t}, n = {n}: x = {:.4}, P(T >= t) <= {:.4e}", student_t_to_x(t, n), p.value);
    }
    for n in [4, 16, 64] {
        println!("iid n = {n}, x = 1.9: {:.4e}", qhat_iid_bound(n, 1.9, true)?.value);
    }
    Ok(())
}
