//! Q/Γ over (0, 5]: its maximum and the figure CSV.
//!
//! `cargo run --example ratio_curve -- fig.csv` also writes the file.
use rademacher_tails::bounds::{q_ratio, ratio_argmax};
use rademacher_tails::cli::emit_figure1;

fn main() -> rademacher_tails::error::Result<()> {
    let (x, r) = ratio_argmax(0.01, 5.0);
    println!("Q/Γ(0) = {:.6}", q_ratio(0.0));
    println!("max Q/Γ = {r:.6} at x = {x:.4}");
    println!("Q/Γ(50) = {:.6}", q_ratio(50.0));
    if let Some(path) = std::env::args().nth(1) {
        let rows = emit_figure1(path.as_ref())?;
        println!("wrote {} rows to {path}", rows.len());
    }
    Ok(())
}
