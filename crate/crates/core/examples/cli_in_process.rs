//! Drive the command-line interface from code, capturing its output.
use rademacher_tails::cli::execute;

fn main() {
    for argv in [
        &["rademacher-tails", "bounds", "--x", "1"][..],
        &["rademacher-tails", "--format", "json", "oracle", "binomial", "--n", "4", "--x", "1"],
        &["rademacher-tails", "bounds", "--x", "0"],
    ] {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = execute(argv.iter().copied(), &mut out, &mut err);
        print!("{} -> exit {code}: {}{}", argv[1..].join(" "), String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
    }
}
