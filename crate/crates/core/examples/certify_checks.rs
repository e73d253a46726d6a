//! Run the registered interval checks (all by default, or those named on the command line).
use rademacher_tails::certify::{run_named_checks, CHECK_IDS};

fn main() -> rademacher_tails::error::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<&str> = if args.is_empty() { vec!["all"] } else { args.iter().map(String::as_str).collect() };
    let certs = run_named_checks(&names)?;
    for c in &certs {
        println!("{:<22} {:?} in {:.3} s, {} boxes: {}", c.check_id, c.verdict, c.wall_time_s, c.subintervals, c.claim);
    }
    println!("{} of {} registered checks run", certs.len(), CHECK_IDS.len());
    Ok(())
}
