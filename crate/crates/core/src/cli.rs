//! Command-line front end. [`execute`] returns the process exit code.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bounds::{self, BoundKind, BoundValue, RatioRow};
use crate::certify::{self, Certificate};
use crate::coeffs::{self, Coefficients};
use crate::constants::{constants, C_BE};
use crate::error::{Error, Result};
use crate::oracle;
use crate::parallel;
use crate::tilt;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_NOT_PROVED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "rademacher-tails", version, about = "Tail bounds for normalized Rademacher sums")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a tail bound at x.
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        /// q, hoeffding, cstar, bd, cheb, composite or best
        #[arg(long, default_value = "q")]
        kind: String,
        #[arg(long)]
        clamp: bool,
        /// Bounded i.i.d. sums of n terms: 2·Q̂_n(x) (kind q only).
        #[arg(long)]
        n: Option<u64>,
    },
    /// Ratio curves Q/Γ, e^{-x²/2}/Γ and c* on a grid.
    Curve {
        #[arg(long, default_value_t = 0.01)]
        from: f64,
        #[arg(long, default_value_t = 5.0)]
        to: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        /// Write the figure data (with the level-one column) to a CSV file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact tail oracles.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
    /// Esscher-tilt diagnostics and the composite bound N + 2 c_BE B.
    Tilt {
        #[command(flatten)]
        coeffs: CoeffArgs,
        #[arg(long)]
        x: f64,
        #[arg(long, default_value_t = C_BE)]
        c_be: f64,
    },
    /// Interval-arithmetic certification.
    Certify {
        #[command(subcommand)]
        action: CertifyAction,
    },
    /// Bound on P(T_n >= t) for Student's statistic under symmetry.
    Student {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        clamp: bool,
    },
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    /// Comma-separated floats with unit Euclidean norm.
    #[arg(long, conflicts_with = "coeffs_exact", required_unless_present = "coeffs_exact")]
    pub coeffs: Option<String>,
    /// Comma-separated rationals p/q with squares summing to exactly 1.
    #[arg(long)]
    pub coeffs_exact: Option<String>,
    /// Rescale float coefficients to unit norm.
    #[arg(long)]
    pub normalize: bool,
}

impl CoeffArgs {
    fn parse(&self) -> Result<Coefficients> {
        match (&self.coeffs, &self.coeffs_exact) {
            (_, Some(e)) => Coefficients::parse_exact(e),
            (Some(f), None) => Coefficients::parse_float(f, self.normalize),
            (None, None) => Err(Error::Coefficients("no coefficients given".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum OracleAction {
    /// Exhaustive check of a bound against seeded random vectors and equal weights.
    Verify {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 1000)]
        vectors: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value = "0.1:0.1:5")]
        x_grid: String,
        /// Also include equal weights for n up to this value.
        #[arg(long, default_value_t = 0)]
        equal_max: usize,
        /// Bound to check: a kind name or `all`.
        #[arg(long, default_value = "q")]
        kind: String,
    },
    /// P(S >= x) for one coefficient vector.
    Tail {
        #[command(flatten)]
        coeffs: CoeffArgs,
        /// Threshold; read as an exact decimal or p/q when coefficients are exact.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// P(ε₁ + … + εₙ >= x√n), exact.
    Binomial {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// sup over n <= n_max of the equal-weight tail at x.
    Sup {
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, default_value_t = 64)]
        n_max: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CertifyAction {
    /// Run registry checks.
    Run {
        /// Check names (repeatable) or `all`.
        #[arg(long)]
        check: Vec<String>,
        #[arg(long)]
        all: bool,
        /// Exit with status 2 unless every verdict is Proved.
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = certify::prover::DEFAULT_MAX_DEPTH)]
        max_depth: u32,
    },
    /// List registry checks.
    List,
}

/// Parse `from:step:to`.
pub fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || Error::domain(format!("grid must be from:step:to, got '{s}'"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let v: Vec<f64> = parts.iter().map(|p| p.trim().parse::<f64>().map_err(|_| bad())).collect::<Result<_>>()?;
    bounds::grid(v[0], v[1], v[2])
}

/// Round to 12 significant digits for human output.
fn human(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    format!("{}", format!("{v:.11e}").parse::<f64>().unwrap_or(v))
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn bound_out(out: &mut dyn Write, f: Format, b: &BoundValue) -> Result<()> {
    match f {
        Format::Human => writeln!(out, "{}", human(b.value))?,
        Format::Json => writeln!(out, "{}", json(b))?,
        Format::Csv => {
            writeln!(out, "kind,x,value,clamped")?;
            writeln!(out, "{},{},{},{}", b.kind, b.x, b.value, b.clamped)?;
        }
    }
    Ok(())
}

/// Write ratio rows as CSV; `level_one` adds the constant column at 1.
pub fn write_curve_csv(out: &mut dyn Write, rows: &[RatioRow], level_one: bool) -> Result<()> {
    if level_one {
        writeln!(out, "x,q_ratio,hoeffding_ratio,level_one,c_star")?;
    } else {
        writeln!(out, "x,q_ratio,hoeffding_ratio,c_star")?;
    }
    for r in rows {
        if level_one {
            writeln!(out, "{},{},{},1,{}", r.x, r.q_ratio, r.hoeffding_ratio, r.c_star)?;
        } else {
            writeln!(out, "{},{},{},{}", r.x, r.q_ratio, r.hoeffding_ratio, r.c_star)?;
        }
    }
    Ok(())
}

/// Figure data on the default grid `0.01:0.01:5`.
pub fn emit_figure1(path: &std::path::Path) -> Result<Vec<RatioRow>> {
    let rows = bounds::ratio_table(&bounds::grid(0.01, 0.01, 5.0)?)?;
    let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
    write_curve_csv(&mut file, &rows, true)?;
    file.flush()?;
    Ok(rows)
}

fn run_bounds(out: &mut dyn Write, f: Format, x: f64, kind: &str, clamp: bool, n: Option<u64>) -> Result<()> {
    let b = match (kind, n) {
        ("q", Some(n)) => bounds::qhat_iid_bound(n, x, clamp)?,
        (_, Some(_)) => return Err(Error::domain("--n applies to --kind q only")),
        ("q", None) => bounds::q_bound(x, clamp)?,
        ("best", None) => bounds::best_envelope(x)?,
        (k, None) => {
            let mut b = bounds::comparison_bound(k.parse::<BoundKind>()?, x)?;
            if clamp && b.value > 1.0 {
                b.value = 1.0;
                b.clamped = true;
            }
            b
        }
    };
    bound_out(out, f, &b)
}

fn run_curve(out: &mut dyn Write, f: Format, from: f64, to: f64, step: f64, path: Option<PathBuf>) -> Result<()> {
    if let Some(p) = path {
        let rows = emit_figure1(&p)?;
        let (xm, vm) = bounds::ratio_argmax(0.01, 5.0);
        writeln!(out, "wrote {} rows to {}; max Q/Γ = {} at x = {}", rows.len(), p.display(), human(vm), human(xm))?;
        return Ok(());
    }
    let rows = bounds::ratio_table(&bounds::grid(from, step, to)?)?;
    match f {
        Format::Csv => write_curve_csv(out, &rows, false)?,
        Format::Json => writeln!(out, "{}", json(&rows))?,
        Format::Human => {
            writeln!(out, "{:>8} {:>14} {:>16} {:>10}", "x", "Q/Γ", "e^(-x²/2)/Γ", "c*")?;
            for r in &rows {
                writeln!(out, "{:>8} {:>14.9} {:>16.9} {:>10.7}", r.x, r.q_ratio, r.hoeffding_ratio, r.c_star)?;
            }
            let (xm, vm) = bounds::ratio_argmax(from.max(1e-9), to);
            writeln!(out, "max Q/Γ = {} at x = {}", human(vm), human(xm))?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifySummary {
    vectors: usize,
    reports: Vec<oracle::ViolationReport>,
}

fn run_verify(out: &mut dyn Write, f: Format, a: &OracleAction) -> Result<()> {
    let OracleAction::Verify { n_max, vectors, seed, x_grid, equal_max, kind } = a else {
        unreachable!()
    };
    if *n_max == 0 || *n_max > oracle::MAX_N {
        return Err(Error::Capacity(format!("--n-max must be in 1..={}", oracle::MAX_N)));
    }
    let xs = parse_grid(x_grid)?;
    let mut set = coeffs::seeded_vectors(*vectors, *n_max, *seed);
    for n in 1..=*equal_max {
        set.push(Coefficients::equal(n)?);
    }
    let kinds: Vec<BoundKind> = if kind == "all" {
        BoundKind::ALL.to_vec()
    } else {
        vec![kind.parse()?]
    };
    let reports = kinds.into_iter().map(|k| oracle::verify_bound(k, &set, &xs)).collect::<Result<Vec<_>>>()?;
    let total: usize = reports.iter().map(|r| r.violations.len()).sum();
    match f {
        Format::Json => writeln!(out, "{}", json(&VerifySummary { vectors: set.len(), reports }))?,
        Format::Csv => {
            writeln!(out, "kind,pairs_checked,violations,min_margin")?;
            for r in &reports {
                writeln!(out, "{},{},{},{}", r.kind, r.pairs_checked, r.violations.len(), r.min_margin)?;
            }
        }
        Format::Human => {
            for r in &reports {
                writeln!(
                    out,
                    "{}: {} pairs over {} vectors, {} violations, min margin {}",
                    r.kind,
                    r.pairs_checked,
                    set.len(),
                    r.violations.len(),
                    human(r.min_margin)
                )?;
                for v in r.violations.iter().take(5) {
                    writeln!(out, "  x = {} exact {} > bound {} for {:?}", v.x, v.exact, v.bound, v.coeffs)?;
                }
            }
            writeln!(out, "{total} violations")?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct TailOut {
    x: f64,
    probability: f64,
    probability_exact: String,
    atom_mass: f64,
    count_ge: u64,
    n: u32,
}

fn run_oracle(out: &mut dyn Write, f: Format, a: &OracleAction) -> Result<()> {
    match a {
        OracleAction::Verify { .. } => run_verify(out, f, a),
        OracleAction::Tail { coeffs, x } => {
            let c = coeffs.parse()?;
            let (r, x) = if c.exact_values().is_some() {
                let q = coeffs::parse_rational(x)?;
                let xf = q.to_f64().unwrap_or(f64::NAN);
                (oracle::exact_tail_rational(&c, &q)?, xf)
            } else {
                let xf: f64 = x.trim().parse().map_err(|_| Error::Domain(format!("bad threshold '{x}'")))?;
                (oracle::exact_tail(&c, xf)?, xf)
            };
            let t = TailOut {
                x,
                probability: r.probability(),
                probability_exact: r.probability_exact().to_string(),
                atom_mass: r.atom_mass(),
                count_ge: r.count_ge,
                n: r.n,
            };
            match f {
                Format::Human => writeln!(out, "{} ({})", human(t.probability), t.probability_exact)?,
                Format::Json => writeln!(out, "{}", json(&t))?,
                Format::Csv => {
                    writeln!(out, "x,probability,probability_exact,atom_mass,count_ge,n")?;
                    writeln!(out, "{},{},{},{},{},{}", t.x, t.probability, t.probability_exact, t.atom_mass, t.count_ge, t.n)?;
                }
            }
            Ok(())
        }
        OracleAction::Binomial { n, x } => {
            let p = oracle::binomial_tail(*n, *x)?;
            let pf = oracle::binomial_tail_f64(*n, *x);
            match f {
                Format::Human => writeln!(out, "{} ({})", human(pf), p)?,
                Format::Json => writeln!(out, "{}", json(&serde_json::json!({"n": n, "x": x, "probability": pf, "probability_exact": p.to_string()})))?,
                Format::Csv => writeln!(out, "n,x,probability,probability_exact\n{n},{x},{pf},{p}")?,
            }
            Ok(())
        }
        OracleAction::Sup { x, n_max } => {
            let (v, n) = oracle::equal_weight_sup(*x, *n_max)?;
            match f {
                Format::Human => writeln!(out, "{} at n = {}", human(v), n)?,
                Format::Json => writeln!(out, "{}", json(&serde_json::json!({"x": x, "n_max": n_max, "sup": v, "argmax": n})))?,
                Format::Csv => writeln!(out, "x,n_max,sup,argmax\n{x},{n_max},{v},{n}")?,
            }
            Ok(())
        }
    }
}

fn run_tilt(out: &mut dyn Write, f: Format, c: &CoeffArgs, x: f64, c_be: f64) -> Result<()> {
    let c = c.parse()?;
    let t = tilt::tilt_summary_with(&c, x, c_be)?;
    let (_, jensen) = tilt::lyapunov_upper(&c, x)?;
    match f {
        Format::Json => writeln!(out, "{}", json(&t))?,
        Format::Csv => {
            writeln!(out, "x,m_x,s_x,l_x,lyapunov_bound,log_mgf,n_term,b_term,composite")?;
            writeln!(out, "{},{},{},{},{},{},{},{},{}", t.x, t.m_x, t.s_x, t.l_x, jensen, t.log_mgf, t.n_term, t.b_term, t.composite)?;
        }
        Format::Human => {
            writeln!(out, "x          {}", t.x)?;
            writeln!(out, "m_x        {}", human(t.m_x))?;
            writeln!(out, "s_x        {}", human(t.s_x))?;
            writeln!(out, "L_x        {} (Jensen bound {})", human(t.l_x), human(jensen))?;
            writeln!(out, "ln E e^xS  {}", human(t.log_mgf))?;
            writeln!(out, "N          {}", human(t.n_term))?;
            writeln!(out, "B          {}", human(t.b_term))?;
            writeln!(out, "N + 2cB    {}", human(t.composite))?;
            writeln!(out, "Γ + h      {}", human(tilt::nb_target(x)))?;
        }
    }
    Ok(())
}

fn run_certify(out: &mut dyn Write, f: Format, a: &CertifyAction) -> Result<i32> {
    let CertifyAction::Run { check, all, strict, max_depth } = a else {
        for id in certify::CHECK_IDS {
            writeln!(out, "{id}")?;
        }
        return Ok(EXIT_OK);
    };
    let names: Vec<&str> = if *all || check.iter().any(|c| c == "all") {
        certify::CHECK_IDS.to_vec()
    } else if check.is_empty() {
        return Err(Error::domain("give --check NAME or --all"));
    } else {
        check.iter().map(String::as_str).collect()
    };
    if let Some(bad) = names.iter().find(|n| !certify::CHECK_IDS.contains(n)) {
        return Err(Error::domain(format!("unknown check '{bad}'; registry: {}", certify::CHECK_IDS.join(", "))));
    }
    let mut certs: Vec<Certificate> = Vec::new();
    for id in names {
        let c = certify::run_check(id, *max_depth)?;
        if f == Format::Human {
            writeln!(
                out,
                "{:<18} {:<10} {:>9} boxes  depth {:>2}  {:.2}s{}",
                c.check_id,
                format!("{:?}", c.verdict),
                c.subintervals,
                c.max_depth,
                c.wall_time_s,
                if c.compact_box_only { "  [compact box]" } else { "" }
            )?;
        }
        certs.push(c);
    }
    match f {
        Format::Json => writeln!(out, "{}", json(&certs))?,
        Format::Csv => {
            writeln!(out, "check_id,verdict,subintervals,max_depth,wall_time_s,compact_box_only")?;
            for c in &certs {
                writeln!(out, "{},{:?},{},{},{},{}", c.check_id, c.verdict, c.subintervals, c.max_depth, c.wall_time_s, c.compact_box_only)?;
            }
        }
        Format::Human => {
            let proved = certs.iter().filter(|c| c.is_proved()).count();
            writeln!(out, "{proved}/{} proved", certs.len())?;
        }
    }
    Ok(if *strict && !certify::checks::all_proved(&certs) { EXIT_NOT_PROVED } else { EXIT_OK })
}

fn dispatch(cli: &Cli, out: &mut (dyn Write + Send)) -> Result<i32> {
    let f = cli.format;
    match &cli.command {
        Command::Bounds { x, kind, clamp, n } => run_bounds(out, f, *x, kind, *clamp, *n)?,
        Command::Curve { from, to, step, out: path } => run_curve(out, f, *from, *to, *step, path.clone())?,
        Command::Oracle { action } => run_oracle(out, f, action)?,
        Command::Tilt { coeffs, x, c_be } => run_tilt(out, f, coeffs, *x, *c_be)?,
        Command::Certify { action } => return run_certify(out, f, action),
        Command::Student { t, n, clamp } => bound_out(out, f, &bounds::student_t_bound(*t, *n, *clamp)?)?,
    }
    Ok(EXIT_OK)
}

/// Parse `argv` (including the program name), run, and return the exit code.
pub fn execute<I, T>(argv: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let _ = constants();
    match parallel::pool().install(|| dispatch(&cli, out)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}
