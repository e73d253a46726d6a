//! Tilted moments, the Lyapunov ratio, and the composite tilt bound.
use rademacher_tails::bounds::q_bound;
use rademacher_tails::coeffs::Coefficients;
use rademacher_tails::oracle::exact_tail;
use rademacher_tails::tilt::{lyapunov_upper, tilt_identity_residual, tilt_summary, Event};

fn main() -> rademacher_tails::error::Result<()> {
    let c = Coefficients::normalized(vec![1.0, 1.0, 2.0, 3.0, 3.0, 4.0])?;
    for x in [0.5, 1.5, 2.5] {
        let t = tilt_summary(&c, x)?;
        let (l, jensen) = lyapunov_upper(&c, x)?;
        println!(
            "x = {x}: m = {:.4}, s = {:.4}, L = {l:.4} <= {jensen:.4}, composite {:.4e} vs exact {:.4e} vs Q {:.4e}",
            t.m_x,
            t.s_x,
            t.composite,
            exact_tail(&c, x)?.probability(),
            q_bound(x, false)?.value
        );
    }
    let a = c.values().to_vec();
    let r = tilt_identity_residual(&c, 1.0, |s| Event::SumAtLeast(0.5).holds(s, &a))?;
    println!("change-of-measure residual {r:.1e}");
    Ok(())
}
