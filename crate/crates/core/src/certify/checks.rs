//! Registry of named inequality checks.

use std::time::Instant;

use super::bgh;
use super::certificate::{Certificate, Verdict};
use super::functions::FunctionId;
use super::interval::Interval;
use super::prover::{self, by_enclosure, prove_sign, prove_threshold, search, Sign, DEFAULT_MAX_DEPTH};
use super::real::Real;
use crate::error::{Error, Result};

/// Right end of the compact stand-in for unbounded domains.
pub const X_MAX: f64 = 100.0;
/// Right end used for the Padé bracket.
pub const PADE_MAX: f64 = 10.0;
/// Right end of the `s = arccosh(1/√v)` range for the concavity check.
pub const S_MAX: f64 = 60.0;
/// Largest `a = u/x` admitted by the `h` two-point check.
pub const BGH_A_MAX: f64 = 0.95;

/// Check identifiers in registry order.
pub const CHECK_IDS: &[&str] = &[
    "pade_lower",
    "pade_upper",
    "gamma_gt",
    "W02_positive",
    "W23_positive",
    "W42_positive",
    "g_r1_nonneg",
    "g_r32_nonneg",
    "T1_lt",
    "T2_minus_K_neg",
    "T3g4_bound",
    "F42_bound",
    "F41d6_bound",
    "tildelambda_le_K",
    "lambda_le_zero",
    "bgh_gaussian",
    "bgh_h",
    "h0_h1_concavity",
];

/// Outward enclosure of `u* = 51/125`; its upper end bounds the `u` ranges.
pub fn u_star_interval() -> Interval {
    <Interval as Real>::ratio(51, 125)
}

fn u_range() -> Interval {
    Interval::new(0.0, u_star_interval().hi)
}

fn renamed(mut c: Certificate, id: &str) -> Certificate {
    c.check_id = id.to_string();
    c
}

fn one(id: &str, f: FunctionId, dom: Interval, sign: Sign, c: f64, depth: u32, compact: bool) -> Result<Certificate> {
    let mut cert = renamed(prove_threshold(f, dom, sign, c, depth)?, id);
    cert.compact_box_only = compact;
    Ok(cert)
}

fn parts(id: &str, claim: &str, domain: Interval, list: Vec<Certificate>) -> Certificate {
    Certificate::combine(id, claim, vec![domain], list)
}

/// `T₁ + T₂ + T₃T₄ < K` from component envelopes, plus a direct certificate.
fn tildelambda(depth: u32) -> Result<Certificate> {
    let d = u_range();
    let t1 = prove_threshold(FunctionId::T1, d, Sign::Negative, -0.47, depth)?;
    let t2 = prove_sign(FunctionId::T2MinusK, d, Sign::Negative, depth)?;
    let t3g4 = prove_threshold(FunctionId::AbsT3OverG4, d, Sign::Negative, 0.08, depth)?;
    let f4_hi = prove_threshold(FunctionId::F4, d, Sign::Negative, 4.0, depth)?;
    let f4_lo = prove_threshold(FunctionId::F4, d, Sign::Positive, -4.0, depth)?;
    let direct = prove_sign(FunctionId::TildeLambdaMinusK, d, Sign::Negative, depth)?;
    let mut c = parts(
        "tildelambda_le_K",
        "T1 + T2 + T3*T4 < K on (0, u*]",
        d,
        vec![t1, t2, t3g4, f4_hi, f4_lo, direct],
    );
    c.notes.push("assembly: sup T1 + sup|T3/g4| * sup|f4| + sup(T2 - K) < -0.47 + 0.08*4 + 0 < 0".into());
    Ok(c)
}

fn concavity(depth: u32) -> Result<Certificate> {
    let s = Interval::new(0.0, S_MAX);
    let a0 = prove_sign(FunctionId::Psi0, s, Sign::Positive, depth)?;
    let a1 = prove_sign(FunctionId::Psi1, s, Sign::Positive, depth)?;
    let mut c = Certificate::combine(
        "h0_h1_concavity",
        "h_a''(v) < 0 on (0, 1] for a in {0, 1}",
        vec![Interval::new(0.0, 1.0)],
        vec![a0, a1],
    );
    let v_min = FunctionId::Hcheck.enclose_unchecked(&[Interval::point(S_MAX)]);
    c.uncovered_sliver = Some(Interval::new(0.0, v_min.hi));
    c.compact_box_only = true;
    c.notes.push(format!(
        "proved as Psi_a(s) = h_a''(v) v'(s)^3 > 0 with v = sech^2 s on s in [0, {S_MAX}], i.e. v in [{:e}, 1]",
        v_min.lo
    ));
    Ok(c)
}

fn lambda_slice(x: Interval, depth: u32) -> Result<Certificate> {
    let mut c = renamed(prove_sign(FunctionId::LambdaSlice, x, Sign::Negative, depth)?, "lambda_le_zero");
    c.claim = format!("Lambda(x, u*) < 0 for x in {x}");
    c.compact_box_only = true;
    Ok(c)
}

fn run_one(id: &str, depth: u32) -> Result<Certificate> {
    use FunctionId as F;
    let u = u_range();
    let pade = Interval::new(0.0, PADE_MAX);
    let big = Interval::new(0.0, X_MAX);
    let cert = match id {
        "pade_lower" => one(id, F::LnCoshMinusR23, pade, Sign::Positive, 0.0, depth, true)?,
        "pade_upper" => one(id, F::R42MinusLnCosh, pade, Sign::Positive, 0.0, depth, true)?,
        "gamma_gt" => one(id, F::GammaMinusSixOverU2, u, Sign::Positive, 0.0, depth, false)?,
        "W02_positive" => one(id, F::W02Form, big, Sign::Positive, 0.0, depth, true)?,
        "W23_positive" => one(id, F::W23, u, Sign::Positive, 0.0, depth, false)?,
        "W42_positive" => one(id, F::W42, u, Sign::Positive, 0.0, depth, false)?,
        "g_r1_nonneg" | "g_r32_nonneg" => {
            let f = if id == "g_r1_nonneg" { F::NegGR1OverU2 } else { F::NegGR32OverU4 };
            let mut c = one(id, f, big, Sign::Positive, 0.0, depth, true)?;
            c.notes.push(
                "certified orientation: e(u) + r(1 - f(u) cosh u) <= 0, i.e. -g_r(u)/u^2 > 0; the literal '>= 0' is refuted".into(),
            );
            c
        }
        "T1_lt" => one(id, F::T1, u, Sign::Negative, -0.47, depth, false)?,
        "T2_minus_K_neg" => one(id, F::T2MinusK, u, Sign::Negative, 0.0, depth, false)?,
        "T3g4_bound" => one(id, F::AbsT3OverG4, u, Sign::Negative, 0.08, depth, false)?,
        "F42_bound" => {
            let mut c = one(id, F::F42GapOverU8, u, Sign::Positive, 0.0, depth, false)?;
            c.claim = format!("F42(u)/u^6 < 6 on (0, {}], via (6u^6 - F42)/u^8 > 0", u.hi);
            c
        }
        "F41d6_bound" => {
            let upper = prove_sign(F::F41d6GapOverU2, u, Sign::Positive, depth)?;
            let lower = prove_threshold(F::F41Sixth, u, Sign::Positive, -203.0, depth)?;
            parts(id, "-203 < F41^(6)(u) < 768 on (0, u*]", u, vec![upper, lower])
        }
        "tildelambda_le_K" => tildelambda(depth)?,
        "lambda_le_zero" => lambda_slice(Interval::new(1.3, 7.4), depth)?,
        "bgh_gaussian" => box_certify_2d(id, [Interval::new(3f64.sqrt(), 8.0), Interval::new(0.0, 0.95)], depth)?,
        "bgh_h" => box_certify_2d(id, [Interval::new(1.5, 8.0), Interval::new(u.hi, BGH_A_MAX * 8.0)], depth)?,
        "h0_h1_concavity" => concavity(depth)?,
        _ => {
            return Err(Error::domain(format!(
                "unknown check '{id}'; registry: {}",
                CHECK_IDS.join(", ")
            )))
        }
    };
    Ok(cert)
}

/// Run a single named check with an explicit depth limit.
pub fn run_check(id: &str, max_depth: u32) -> Result<Certificate> {
    let started = Instant::now();
    let mut c = run_one(id, max_depth)?;
    c.wall_time_s = started.elapsed().as_secs_f64();
    Ok(c)
}

/// Run checks in registry order; `["all"]` selects every check.
pub fn run_named_checks(names: &[&str]) -> Result<Vec<Certificate>> {
    let selected: Vec<&str> = if names.iter().any(|n| *n == "all") {
        CHECK_IDS.to_vec()
    } else {
        for n in names {
            if !CHECK_IDS.contains(n) {
                return Err(Error::domain(format!(
                    "unknown check '{n}'; registry: {}",
                    CHECK_IDS.join(", ")
                )));
            }
        }
        CHECK_IDS.iter().copied().filter(|id| names.contains(id)).collect()
    };
    selected.into_iter().map(|id| run_check(id, DEFAULT_MAX_DEPTH)).collect()
}

/// Certify a two-variable check on a compact box.
///
/// * `bgh_gaussian`: box `x × a`, claim `½Γ(U) + ½Γ(V) ≤ Γ(x)`, needs `x ≥ √3`, `a < 1`.
/// * `bgh_h`: box `x × u`, claim `½h(U) + ½h(V) < h(x)` where `u ≤ 0.95x`.
/// * `lambda_le_zero`: box `x × u`, claim `Λ(x, u) < 0`.
pub fn box_certify_2d(check: &str, b: [Interval; 2], max_depth: u32) -> Result<Certificate> {
    let started = Instant::now();
    let [x, y] = b;
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::domain("box must be finite"));
    }
    let mut cert = match check {
        "bgh_gaussian" => {
            if x.lo * x.lo < 3.0 * (1.0 - 1e-15) || y.lo < 0.0 || y.hi >= 1.0 {
                return Err(Error::domain(format!("bgh_gaussian needs x >= sqrt 3 and 0 <= a < 1, got {x} x {y}")));
            }
            // t = x² − 3, widened outward and clamped at 0 (covers x from exactly √3)
            let xi = Interval::new(x.lo, x.hi);
            let t = xi.sqr() - Interval::point(3.0);
            let t = Interval::new(t.lo.max(0.0), t.hi);
            let decide = |bx: &[Interval]| bgh::gaussian_decide(bx[0], bx[1]);
            let point = |p: &[f64]| Some(-bgh::gaussian_point(p[0], p[1]));
            let out = search(vec![t, y], max_depth, &decide, &point);
            let mut c = prover::certificate(
                check,
                format!("Gamma(x) - (Gamma(U) + Gamma(V))/2 >= 0 on x in {x}, a in {y}"),
                vec![x, y],
                out,
                started,
            );
            if let Some(w) = &mut c.witness {
                w[0] = (w[0] + 3.0).sqrt();
            }
            if let Some(sb) = &mut c.stuck_box {
                sb[0] = bgh::x_of_t(&sb[0]);
            }
            c.notes.push("boxes in (t, a) with t = x^2 - 3; equality holds on the edge a = 0".into());
            c
        }
        "bgh_h" => {
            if x.lo <= 0.0 || y.lo < 0.0 {
                return Err(Error::domain(format!("bgh_h needs x > 0 and u >= 0, got {x} x {y}")));
            }
            let decide = |bx: &[Interval]| bgh::h_decide(bx[0], bx[1], BGH_A_MAX);
            let point = |p: &[f64]| bgh::h_point(p[0], p[1], BGH_A_MAX);
            let out = search(vec![x, y], max_depth, &decide, &point);
            let mut c = prover::certificate(
                check,
                format!("(h(U) + h(V))/2 < h(x) on x in {x}, u in {y}, u <= {BGH_A_MAX} x"),
                vec![x, y],
                out,
                started,
            );
            c.notes.push("a = u/x; boxes with u > 0.95 x throughout are skipped".into());
            c
        }
        "lambda_le_zero" => {
            if x.lo <= 0.0 || y.lo < 0.0 {
                return Err(Error::domain(format!("lambda_le_zero needs x > 0 and u >= 0, got {x} x {y}")));
            }
            let us = u_star_interval();
            if y.lo >= us.lo && y.hi <= us.hi {
                let mut c = lambda_slice(x, max_depth)?;
                c.domain = vec![x, y];
                c
            } else {
                let decide = |bx: &[Interval]| by_enclosure(FunctionId::Lambda.enclose_unchecked(bx));
                let point = |p: &[f64]| Some(FunctionId::Lambda.point_unchecked(p));
                let out = search(vec![x, y], max_depth, &decide, &point);
                prover::certificate(check, format!("Lambda(x, u) < 0 on {x} x {y}"), vec![x, y], out, started)
            }
        }
        _ => {
            return Err(Error::domain(format!(
                "unknown two-dimensional check '{check}'; expected bgh_gaussian, bgh_h or lambda_le_zero"
            )))
        }
    };
    cert.compact_box_only = true;
    cert.wall_time_s = started.elapsed().as_secs_f64();
    Ok(cert)
}

/// Numerical (non-certified) diagnostic: is `ρ` increasing on a grid over `[0, u*]`?
pub fn rho_increasing_on_grid(points: usize) -> bool {
    let us = 0.408;
    let vals: Vec<f64> = (1..=points)
        .map(|i| FunctionId::Rho.point_unchecked(&[us * i as f64 / points as f64]))
        .collect();
    vals.windows(2).all(|w| w[1] > w[0])
}

/// Whether a verdict counts as success for strict runs.
pub fn all_proved(certs: &[Certificate]) -> bool {
    certs.iter().all(|c| c.verdict == Verdict::Proved)
}
