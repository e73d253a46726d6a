//! Adaptive bisection and branch-and-bound over interval enclosures.

use std::collections::BinaryHeap;
use std::cmp::Ordering;
use std::time::Instant;

use rayon::prelude::*;

use super::certificate::{Certificate, Verdict};
use super::functions::FunctionId;
use super::interval::Interval;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_DEPTH: u32 = 60;
pub const MAX_DEPTH_LIMIT: u32 = 80;
/// Margin a plain-arithmetic witness must exceed.
pub const WITNESS_MARGIN: f64 = 1e-12;
/// Width of the excluded sliver at a zero of `f` at the left endpoint.
pub const ETA: f64 = 1e-6;
/// Total-box budget for one search.
pub const BOX_CAP: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

impl std::str::FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Sign> {
        match s {
            "positive" | "pos" | "+" => Ok(Sign::Positive),
            "negative" | "neg" | "-" => Ok(Sign::Negative),
            _ => Err(Error::domain(format!("sign must be positive or negative, got '{s}'"))),
        }
    }
}

/// Decision for one box in a search for `g < 0`.
#[derive(Clone, Copy, Debug)]
pub enum Leaf {
    /// The claim holds on the whole box.
    Holds,
    /// The box lies outside the constraint set.
    Skip,
    /// Undecided; carries the enclosure of `g`.
    Open(Interval),
}

/// Result of [`search`], before it is wrapped into a certificate.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub verdict: Verdict,
    pub witness: Option<Vec<f64>>,
    pub stuck_box: Option<Vec<Interval>>,
    pub subintervals: u64,
    pub max_depth: u32,
}

fn split_widest(b: &[Interval]) -> [Vec<Interval>; 2] {
    let (i, _) = b
        .iter()
        .enumerate()
        .fold((0, -1.0), |(bi, bw), (i, x)| if x.width() > bw { (i, x.width()) } else { (bi, bw) });
    let (l, r) = b[i].split();
    let mut a = b.to_vec();
    let mut c = b.to_vec();
    a[i] = l;
    c[i] = r;
    [a, c]
}

fn in_pool<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    if rayon::current_thread_index().is_some() {
        f()
    } else {
        crate::parallel::pool().install(f)
    }
}

/// Prove `g < 0` on `root` by level-synchronous bisection.
///
/// `decide` classifies a box; `point` evaluates `g` in plain arithmetic
/// (`None` outside the constraint set). Boxes of one level are decided in
/// parallel and merged in order, so the outcome does not depend on the number
/// of workers.
pub fn search(
    root: Vec<Interval>,
    max_depth: u32,
    decide: &(dyn Fn(&[Interval]) -> Leaf + Sync),
    point: &(dyn Fn(&[f64]) -> Option<f64> + Sync),
) -> Outcome {
    let max_depth = max_depth.min(MAX_DEPTH_LIMIT);
    let mut level = vec![root];
    let mut processed = 0u64;
    let mut depth = 0u32;
    loop {
        let decided: Vec<(Leaf, Option<Vec<f64>>)> = in_pool(|| {
            level
                .par_iter()
                .map(|b| {
                    let leaf = decide(b);
                    let witness = match leaf {
                        Leaf::Open(_) => {
                            let m: Vec<f64> = b.iter().map(|x| x.mid()).collect();
                            match point(&m) {
                                Some(v) if v > WITNESS_MARGIN => Some(m),
                                _ => None,
                            }
                        }
                        _ => None,
                    };
                    (leaf, witness)
                })
                .collect()
        });
        processed += level.len() as u64;
        if let Some(w) = decided.iter().find_map(|(_, w)| w.clone()) {
            return Outcome {
                verdict: Verdict::Disproved,
                witness: Some(w),
                stuck_box: None,
                subintervals: processed,
                max_depth: depth,
            };
        }
        let open: Vec<(usize, Interval)> = decided
            .iter()
            .enumerate()
            .filter_map(|(i, (l, _))| match l {
                Leaf::Open(e) => Some((i, *e)),
                _ => None,
            })
            .collect();
        if open.is_empty() {
            return Outcome { verdict: Verdict::Proved, witness: None, stuck_box: None, subintervals: processed, max_depth: depth };
        }
        if depth >= max_depth || processed + 2 * open.len() as u64 > BOX_CAP {
            // worst box: largest upper bound of g, first in order on ties
            let (wi, _) = open
                .iter()
                .fold(open[0], |best, &(i, e)| if e.hi > best.1.hi { (i, e) } else { best });
            return Outcome {
                verdict: Verdict::Undecided,
                witness: None,
                stuck_box: Some(level[wi].clone()),
                subintervals: processed,
                max_depth: depth,
            };
        }
        level = open.iter().flat_map(|&(i, _)| split_widest(&level[i])).collect();
        depth += 1;
    }
}

/// Plain decision rule: the enclosure of `g` lies strictly below 0.
pub fn by_enclosure(e: Interval) -> Leaf {
    if e.hi < 0.0 {
        Leaf::Holds
    } else {
        Leaf::Open(e)
    }
}

pub(crate) fn certificate(
    check_id: &str,
    claim: String,
    domain: Vec<Interval>,
    out: Outcome,
    started: Instant,
) -> Certificate {
    Certificate {
        check_id: check_id.to_string(),
        claim,
        domain,
        verdict: out.verdict,
        witness: out.witness,
        stuck_box: out.stuck_box,
        subintervals: out.subintervals,
        max_depth: out.max_depth,
        wall_time_s: started.elapsed().as_secs_f64(),
        compact_box_only: false,
        uncovered_sliver: None,
        notes: Vec::new(),
    }
}

/// Prove `s · (f − c) > 0` on a one-dimensional domain, where `s = +1` for
/// [`Sign::Positive`].
///
/// With `c = 0` and `domain.lo ≥ 0`, a registered factorization
/// `f = u^m · g` is used so that a zero of `f` at the origin does not block
/// the proof. Otherwise, if `f` vanishes at a left endpoint `0`, the sliver
/// `[0, η]` is excluded and reported.
pub fn prove_threshold(f: FunctionId, domain: Interval, sign: Sign, c: f64, max_depth: u32) -> Result<Certificate> {
    let started = Instant::now();
    if f.arity() != 1 {
        return Err(Error::domain(format!("{f} takes {} arguments", f.arity())));
    }
    if max_depth > MAX_DEPTH_LIMIT {
        return Err(Error::domain(format!("max_depth {max_depth} exceeds {MAX_DEPTH_LIMIT}")));
    }
    f.enclose(&[domain])?;
    let cmp = match sign {
        Sign::Positive => ">",
        Sign::Negative => "<",
    };
    let claim = format!("{f}(u) {cmp} {c} on {domain}");
    let mut notes = Vec::new();
    let mut g_id = f;
    if c == 0.0 && domain.lo >= 0.0 {
        if let Some((g, m)) = f.desingularized() {
            g_id = g;
            notes.push(format!("sign of {f} = u^{m} * {g} decided through {g}"));
        }
    }
    let mut dom = domain;
    let mut sliver = None;
    if g_id == f && domain.lo == 0.0 && domain.hi > ETA && f.point_unchecked(&[0.0]) - c == 0.0 {
        dom = Interval::new(ETA, domain.hi);
        sliver = Some(Interval::new(0.0, ETA));
        notes.push(format!("{f} - {c} vanishes at 0; sliver [0, {ETA:e}] not covered"));
    }
    let s = match sign {
        Sign::Positive => -1.0,
        Sign::Negative => 1.0,
    };
    let sc = Interval::point(s);
    let ci = Interval::point(c);
    let decide = |b: &[Interval]| by_enclosure(sc * (g_id.enclose_unchecked(b) - ci));
    let point = |p: &[f64]| {
        let v = s * (g_id.point_unchecked(p) - c);
        v.is_finite().then_some(v)
    };
    let out = search(vec![dom], max_depth, &decide, &point);
    let mut cert = certificate(f.name(), claim, vec![domain], out, started);
    if cert.verdict == Verdict::Disproved {
        // report the witness against the original function
        if let Some(w) = &cert.witness {
            let v = f.point_unchecked(w);
            cert.notes.push(format!("{f}({}) = {v:e}", w[0]));
        }
    }
    cert.uncovered_sliver = sliver;
    cert.notes.splice(0..0, notes);
    Ok(cert)
}

/// Prove that `f` is strictly positive or negative on `domain`.
pub fn prove_sign(f: FunctionId, domain: Interval, sign: Sign, max_depth: u32) -> Result<Certificate> {
    prove_threshold(f, domain, sign, 0.0, max_depth)
}

#[derive(Clone, Debug)]
struct Node {
    upper: f64,
    b: Interval,
    depth: u32,
}

impl PartialEq for Node {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Node {}
impl PartialOrd for Node {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Node {
    fn cmp(&self, o: &Self) -> Ordering {
        self.upper
            .total_cmp(&o.upper)
            .then_with(|| o.b.lo.total_cmp(&self.b.lo))
    }
}

/// Branch-and-bound enclosure of `sup f` on `domain`.
fn sup_enclosure(enc: &dyn Fn(Interval) -> Interval, domain: Interval, max_depth: u32) -> Interval {
    const STEPS: usize = 20_000;
    const TOL: f64 = 1e-10;
    let point_lo = |t: f64| enc(Interval::point(t)).lo;
    let mut best = point_lo(domain.mid()).max(point_lo(domain.lo)).max(point_lo(domain.hi));
    let mut heap = BinaryHeap::new();
    let mut done_upper = f64::NEG_INFINITY;
    heap.push(Node { upper: enc(domain).hi, b: domain, depth: 0 });
    for _ in 0..STEPS {
        let Some(top) = heap.peek() else { break };
        if top.upper - best <= TOL * (1.0 + best.abs()) {
            break;
        }
        let n = heap.pop().expect("peeked");
        if n.depth >= max_depth || n.b.width() == 0.0 {
            done_upper = done_upper.max(n.upper);
            continue;
        }
        let (l, r) = n.b.split();
        for c in [l, r] {
            best = best.max(point_lo(c.mid()));
            let up = enc(c).hi.min(n.upper);
            if up > best {
                heap.push(Node { upper: up, b: c, depth: n.depth + 1 });
            }
        }
    }
    let hi = heap.peek().map_or(f64::NEG_INFINITY, |n| n.upper).max(done_upper).max(best);
    Interval::new(best, hi)
}

/// Enclosures `(inf, sup)` of the extrema of `f` on `domain`.
pub fn bound_extrema(f: FunctionId, domain: Interval, max_depth: u32) -> Result<(Interval, Interval)> {
    if f.arity() != 1 {
        return Err(Error::domain(format!("{f} takes {} arguments", f.arity())));
    }
    if max_depth > MAX_DEPTH_LIMIT {
        return Err(Error::domain(format!("max_depth {max_depth} exceeds {MAX_DEPTH_LIMIT}")));
    }
    f.enclose(&[domain])?;
    let sup = sup_enclosure(&|b| f.enclose_unchecked(&[b]), domain, max_depth);
    let neg_inf = sup_enclosure(&|b| -f.enclose_unchecked(&[b]), domain, max_depth);
    Ok((-neg_inf, sup))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosh_is_positive() {
        let c = prove_sign(FunctionId::CoshOf, Interval::new(-3.0, 3.0), Sign::Positive, 20).unwrap();
        assert!(c.is_proved());
        assert_eq!(c.subintervals, 1);
    }

    #[test]
    fn sinh_sign_is_disproved_with_witness() {
        let c = prove_sign(FunctionId::SinhOf, Interval::new(-1.0, 2.0), Sign::Positive, 20).unwrap();
        assert_eq!(c.verdict, Verdict::Disproved);
        let w = c.witness.unwrap()[0];
        assert!(w.sinh() < -WITNESS_MARGIN);
    }

    #[test]
    fn zero_at_origin_leaves_sliver() {
        let c = prove_sign(FunctionId::SinhOf, Interval::new(0.0, 1.0), Sign::Positive, 30).unwrap();
        assert!(c.is_proved());
        assert_eq!(c.uncovered_sliver, Some(Interval::new(0.0, ETA)));
    }

    #[test]
    fn tangency_is_undecided() {
        // cosh u − 1 touches 0 at the origin without crossing
        let c = prove_threshold(FunctionId::CoshOf, Interval::new(-1.0, 1.0), Sign::Positive, 1.0, 12).unwrap();
        assert_eq!(c.verdict, Verdict::Undecided);
        assert!(c.stuck_box.unwrap()[0].contains(0.0));
    }

    #[test]
    fn extrema_of_tanh() {
        let (lo, hi) = bound_extrema(FunctionId::TanhOf, Interval::new(-1.0, 2.0), 40).unwrap();
        assert!(lo.contains((-1.0f64).tanh()) && lo.width() < 1e-9);
        assert!(hi.contains(2.0f64.tanh()) && hi.width() < 1e-9);
    }
}
