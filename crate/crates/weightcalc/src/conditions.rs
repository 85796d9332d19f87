//! Growth conditions on sequences, weight functions and weight matrices, and the
//! moderate-growth index.
//!
//! Each check computes the ratio profile of its defining inequality over the truncation
//! and classifies it with the window ladder. Sequences that carry a closed-form family
//! (or are geometric) get certified verdicts from the analytic ratio instead.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::matrix::matrix_of;
use crate::seqcore::{Family, LogSequence};
use crate::verdict::{Classification, ConditionVerdict, Ladder};
use crate::weightfun::LogPL;

/// Analytic shape of a sequence, up to a geometric factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shape {
    Gevrey(f64),
    QGevrey(f64),
    Geometric,
}

pub fn shape(m: &LogSequence) -> Option<Shape> {
    if let Some(p) = m.provenance() {
        return Some(match p.family {
            Family::Gevrey { s } => Shape::Gevrey(s),
            Family::QGevrey { q } => Shape::QGevrey(q),
        });
    }
    m.is_geometric().then_some(Shape::Geometric)
}

fn coords(n: usize) -> Vec<f64> {
    (1..=n).map(|p| p as f64).collect()
}

/// Ladder verdict for a profile indexed by `p = 1..=n`, witness `name = exp(sup)`.
fn profile_verdict(id: &str, values: &[f64], witness: &str, ladder: &Ladder) -> ConditionVerdict {
    let wp = ladder.profile(values);
    let mut v = ConditionVerdict::new(id).from_ladder(ladder, &wp, &coords(values.len()));
    v.witnesses.insert(witness.into(), wp.max.exp());
    if let Some(i) = wp.argmax {
        v.argmax = vec![(i + 1) as f64];
    }
    v
}

fn certify(v: ConditionVerdict, holds: bool, note: &str) -> ConditionVerdict {
    let v = v.with_note(note);
    if holds {
        v.exact_pass()
    } else {
        v.exact_fail()
    }
}

/// `M_{p+q} <= C^{p+q+1} M_p M_q`.
pub fn has_mg(m: &LogSequence, cfg: &RunConfig) -> ConditionVerdict {
    let lm = m.log_m();
    let n_max = m.truncation();
    let mut values = Vec::with_capacity(n_max);
    let mut arg = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let (mut best, mut bp) = (f64::NEG_INFINITY, 0);
        for p in 0..=n / 2 {
            let v = lm[n] - lm[p] - lm[n - p];
            if v > best {
                best = v;
                bp = p;
            }
        }
        values.push(best / (n + 1) as f64);
        arg.push(bp);
    }
    let mut v = profile_verdict("mg", &values, "C", &cfg.ladder);
    if let Some(&n) = v.argmax.first() {
        let n = n as usize;
        v.argmax = vec![arg[n - 1] as f64, (n - arg[n - 1]) as f64];
    }
    match shape(m) {
        Some(Shape::Gevrey(s)) => {
            let c = v.witness("C").unwrap_or(1.0).max(1.0).min(2f64.powf(s));
            certify(v, true, "binomial bound (p+q)! <= 2^(p+q) p! q!").with_witness("C", c)
        }
        Some(Shape::QGevrey(_)) => certify(v, false, "ratio q^(2pq) is unbounded"),
        Some(Shape::Geometric) => certify(v, true, "geometric sequence").with_witness("C", 1.0),
        None => v,
    }
}

/// `mu_p <= A (M_p)^(1/p)`.
pub fn mg_root_quotient(m: &LogSequence, cfg: &RunConfig) -> ConditionVerdict {
    let n = m.truncation();
    let values: Vec<f64> = (1..=n).map(|p| m.log_mu()[p] - m.log_root(p)).collect();
    let v = profile_verdict("mgstrange", &values, "A", &cfg.ladder);
    match shape(m) {
        Some(Shape::Gevrey(_)) => certify(v, true, "p/(p!)^(1/p) <= e"),
        Some(Shape::QGevrey(_)) => certify(v, false, "ratio q^(p-1) is unbounded"),
        Some(Shape::Geometric) => certify(v, true, "geometric sequence"),
        None => v,
    }
}

/// `lambda_p <= A (M_{ap})^(1/(ap))` for `p <= min(P_L, P_M / a)`.
pub fn mixed_quotient_root(l: &LogSequence, m: &LogSequence, a: usize, cfg: &RunConfig) -> Result<ConditionVerdict> {
    if a == 0 {
        return Err(Error::Parameter("index must be a positive integer".into()));
    }
    if a > m.truncation() {
        return Err(Error::Truncation(format!(
            "index {a} exceeds truncation {}",
            m.truncation()
        )));
    }
    let n = l.truncation().min(m.truncation() / a);
    let values: Vec<f64> = (1..=n)
        .map(|p| l.log_mu()[p] - m.log_root(a * p))
        .collect();
    let v = profile_verdict("quotient-root", &values, "A", &cfg.ladder).with_witness("a", a as f64);
    let verdict = match (shape(l), shape(m)) {
        (Some(Shape::Gevrey(sl)), Some(Shape::Gevrey(sm))) => {
            certify(v, sl <= sm, "p^s_L against (ap)^s_M up to constants")
        }
        (Some(Shape::QGevrey(ql)), Some(Shape::QGevrey(qm))) => certify(
            v,
            2.0 * ql.ln() <= a as f64 * qm.ln() * (1.0 + 1e-12),
            "log ratio p(2 log q_L - a log q_M) - log q_L",
        ),
        (Some(Shape::Gevrey(_) | Shape::Geometric), Some(Shape::QGevrey(_))) => {
            certify(v, true, "polynomial quotients against q-Gevrey roots")
        }
        (Some(Shape::QGevrey(_)), Some(Shape::Gevrey(_) | Shape::Geometric)) => {
            certify(v, false, "q-Gevrey quotients against polynomial roots")
        }
        (Some(Shape::Geometric), Some(Shape::Gevrey(_) | Shape::Geometric)) => {
            certify(v, true, "bounded quotients")
        }
        (Some(Shape::Gevrey(_)), Some(Shape::Geometric)) => {
            certify(v, false, "unbounded quotients against bounded roots")
        }
        _ => v,
    };
    Ok(verdict)
}

/// `mu_p <= A (M_{dp})^(1/(dp))`.
pub fn genmg(m: &LogSequence, d: usize, cfg: &RunConfig) -> Result<ConditionVerdict> {
    let mut v = mixed_quotient_root(m, m, d, cfg)?;
    v.condition = "genmg".into();
    v.witnesses.remove("a");
    v.witnesses.insert("d".into(), d as f64);
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthIndexResult {
    /// Minimal passing `d`; `None` when no `d <= d_max` passes.
    pub g: Option<usize>,
    pub exceeds_d_max: bool,
    pub d_max: usize,
    pub classification: Option<Classification>,
    pub verdicts: Vec<ConditionVerdict>,
}

/// `g(M)`: the minimal `d` for which `genmg(M, d)` passes, scanning `d = 1..=d_max`.
pub fn growth_index(m: &LogSequence, d_max: usize, cfg: &RunConfig) -> GrowthIndexResult {
    let d_top = d_max.min(m.truncation());
    let verdicts: Vec<ConditionVerdict> = (1..=d_top)
        .into_par_iter()
        .map(|d| genmg(m, d, cfg).expect("d within truncation"))
        .collect();
    let g = verdicts.iter().position(|v| v.holds).map(|i| i + 1);
    GrowthIndexResult {
        g,
        exceeds_d_max: g.is_none(),
        d_max,
        classification: g.map(|d| verdicts[d - 1].classification),
        verdicts,
    }
}

/// `L_{p+q} <= A^p L_p M_q` over all `p >= 1`, `q >= 0` in the truncation.
pub fn weak_separativity(l: &LogSequence, m: &LogSequence, cfg: &RunConfig) -> ConditionVerdict {
    let (ll, lm) = (l.log_m(), m.log_m());
    let n_max = l.truncation();
    let mut values = Vec::with_capacity(n_max);
    let mut arg = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let (mut best, mut bp) = (f64::NEG_INFINITY, 1);
        for p in n.saturating_sub(m.truncation()).max(1)..=n {
            let v = (ll[n] - ll[p] - lm[n - p]) / p as f64;
            if v > best {
                best = v;
                bp = p;
            }
        }
        values.push(best);
        arg.push(bp);
    }
    let mut v = profile_verdict("weaksep", &values, "A", &cfg.ladder);
    if let Some(&n) = v.argmax.first() {
        let n = n as usize;
        v.argmax = vec![arg[n - 1] as f64, (n - arg[n - 1]) as f64];
    }
    v
}

/// Verdicts on a weight function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OmegaConditions {
    pub omega0: ConditionVerdict,
    pub omega1: ConditionVerdict,
    pub omega3: ConditionVerdict,
    pub omega4: ConditionVerdict,
    pub omega6: ConditionVerdict,
    pub strong_nq: ConditionVerdict,
    /// `a omega(t) <= omega(Ht) + H` searched for `a = 3/2, 2, 4`.
    pub omega6_variants: Vec<ConditionVerdict>,
    /// The three variants agree, as they must.
    pub omega6_variants_consistent: bool,
    /// Base-grid points dropped because a dilated argument left the validity domain.
    pub excluded_points: usize,
}

/// Grid on `[0, u_max]` used for function-side checks.
pub fn omega_grid(omega: &LogPL, cfg: &RunConfig) -> Vec<f64> {
    let hi = omega.u_max().max(0.0);
    cfg.grid.u_grid(0.0, hi)
}

fn structural(id: &str, ok: bool, note: &str) -> ConditionVerdict {
    certify(ConditionVerdict::new(id), ok, note)
}

/// Search `H = 2^k` (k >= 1) for `factor * omega(t) <= omega(H t) + C` with a plateauing
/// excess; the usable range must cover at least half of the base grid.
pub fn dilation_search(omega: &LogPL, factor: f64, id: &str, cfg: &RunConfig) -> (ConditionVerdict, usize) {
    let base = omega_grid(omega, cfg);
    let mut last = ConditionVerdict::new(id);
    let mut excluded = 0;
    for k in 1..=cfg.constant_ladder_max.max(1) {
        let h = 2f64.powi(k as i32);
        let lim = omega.u_max() - h.ln();
        let pts: Vec<f64> = base.iter().copied().filter(|u| *u <= lim).collect();
        if pts.len() * 2 < base.len() {
            break;
        }
        excluded = base.len() - pts.len();
        let values: Vec<f64> = pts
            .iter()
            .map(|&u| factor * omega.eval_u_unchecked(u) - omega.eval_u_unchecked(u + h.ln()))
            .collect();
        let wp = cfg.ladder.profile(&values);
        let mut v = ConditionVerdict::new(id).from_ladder(&cfg.ladder, &wp, &pts);
        v.witnesses.insert("a".into(), factor);
        v.witnesses.insert("H".into(), h);
        v.witnesses.insert("C".into(), wp.max.max(0.0));
        v.witnesses.insert("H_combined".into(), h.max(wp.max));
        v.argmax = wp.argmax.map(|i| vec![pts[i]]).unwrap_or_default();
        let found = v.holds;
        last = v;
        if found {
            break;
        }
    }
    (last, excluded)
}

/// Adaptive trapezoid rule on `[a, b]`.
fn adaptive_trapezoid(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn rec(f: &dyn Fn(f64) -> f64, (a, fa): (f64, f64), (b, fb): (f64, f64), whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let fm = f(m);
        let left = 0.5 * (m - a) * (fa + fm);
        let right = 0.5 * (b - m) * (fm + fb);
        if depth == 0 || (left + right - whole).abs() <= 3.0 * tol {
            left + right
        } else {
            rec(f, (a, fa), (m, fm), left, 0.5 * tol, depth - 1) + rec(f, (m, fm), (b, fb), right, 0.5 * tol, depth - 1)
        }
    }
    let (fa, fb) = (f(a), f(b));
    // Seed with a few panels so kinks inside the first bisection are not missed.
    let panels = 16;
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    let mut x0 = a;
    let mut f0 = fa;
    for i in 1..=panels {
        let x1 = if i == panels { b } else { a + h * i as f64 };
        let f1 = if i == panels { fb } else { f(x1) };
        let whole = 0.5 * (x1 - x0) * (f0 + f1);
        total += rec(f, (x0, f0), (x1, f1), whole, tol / panels as f64, 30);
        x0 = x1;
        f0 = f1;
    }
    total
}

/// `int_1^inf omega(yt)/t^2 dt <= C omega(y) + C`, with the integral truncated at the
/// validity edge and the tail bounded by continuing with the final slope.
pub fn strong_nonquasianalyticity(omega: &LogPL, cfg: &RunConfig) -> ConditionVerdict {
    let hi = omega.u_max() - 1.0;
    let ys = if hi > 0.0 {
        let mut g = cfg.grid.clone();
        g.max_points = g.max_points.min(400);
        g.u_grid(0.0, hi)
    } else {
        vec![]
    };
    let s_last = omega.x_max();
    let mut values = Vec::with_capacity(ys.len());
    let mut max_tail: f64 = 0.0;
    for &uy in &ys {
        let vt = omega.u_max() - uy;
        let f = |v: f64| omega.eval_u_unchecked(uy + v) * (-v).exp();
        let body = adaptive_trapezoid(&f, 0.0, vt, 1e-8 * (1.0 + omega.eval_u_unchecked(omega.u_max())));
        let tail = (omega.eval_u_unchecked(omega.u_max()) + s_last) * (-vt).exp();
        max_tail = max_tail.max(tail);
        values.push((body + tail) / (omega.eval_u_unchecked(uy) + 1.0));
    }
    let wp = cfg.ladder.profile(&values);
    let mut v = ConditionVerdict::new("strong-nq").from_ladder(&cfg.ladder, &wp, &ys);
    v.witnesses.insert("C".into(), wp.max.max(1.0));
    v.witnesses.insert("max_tail_bound".into(), max_tail);
    v.argmax = wp.argmax.map(|i| vec![ys[i]]).unwrap_or_default();
    v.with_note("integral truncated at the validity edge; tail continued with the final slope")
}

/// Window ends over `pts` placed at the breakpoints with index fractions of the ladder, so
/// an omega built from a sequence is windowed like the sequence itself. Falls back to
/// fractions of the grid when there are too few breakpoints.
fn breakpoint_windows(omega: &LogPL, pts: &[f64], cfg: &RunConfig) -> Vec<usize> {
    let bp = omega.breakpoints();
    let n = bp.len();
    if n < 8 || pts.is_empty() {
        return cfg.ladder.window_ends(pts.len());
    }
    let mut ends: Vec<usize> = cfg
        .ladder
        .fractions
        .iter()
        .map(|f| {
            let k = ((f * n as f64).ceil() as usize).clamp(1, n);
            pts.partition_point(|u| *u <= bp[k - 1]).max(1)
        })
        .collect();
    if let Some(last) = ends.last_mut() {
        *last = pts.len();
    }
    ends.dedup();
    ends
}

/// `omega(2t) <= L omega(t) + L`, via the ratio `omega(2t)/(omega(t) + 1)`. Also returns the
/// number of base-grid points dropped at the validity edge.
pub fn omega1_check(omega: &LogPL, cfg: &RunConfig) -> (ConditionVerdict, usize) {
    let base = omega_grid(omega, cfg);
    let lim = omega.u_max() - std::f64::consts::LN_2;
    let pts: Vec<f64> = base.iter().copied().filter(|u| *u <= lim).collect();
    let excluded = base.len() - pts.len();
    let values: Vec<f64> = pts
        .iter()
        .map(|&u| omega.eval_u_unchecked(u + std::f64::consts::LN_2) / (omega.eval_u_unchecked(u) + 1.0))
        .collect();
    let wp = cfg.ladder.profile_at(&values, breakpoint_windows(omega, &pts, cfg));
    let mut omega1 = ConditionVerdict::new("omega1").from_ladder(&cfg.ladder, &wp, &pts);
    omega1.witnesses.insert("L".into(), wp.max.max(1.0));
    omega1.argmax = wp.argmax.map(|i| vec![pts[i]]).unwrap_or_default();
    (omega1, excluded)
}

pub fn omega_conditions(omega: &LogPL, cfg: &RunConfig) -> OmegaConditions {
    let slopes = omega.slopes();
    let convex = slopes.windows(2).all(|w| w[1] >= w[0]) && omega.breakpoints().windows(2).all(|w| w[1] >= w[0]);
    let omega0 = structural(
        "omega0",
        omega.has_zero_left_tail() && omega.u_min() >= 0.0 && omega.x_max() > 0.0,
        "vanishes on [0,1], nondecreasing, unbounded slope",
    );
    let omega4 = structural("omega4", convex, "slopes nondecreasing in u = log t");

    let base = omega_grid(omega, cfg);
    let mut excluded = 0;

    let (omega1, ex) = omega1_check(omega, cfg);
    excluded += ex;

    let pts: Vec<f64> = base.iter().copied().filter(|u| *u >= 1.0).collect();
    let values: Vec<f64> = pts.iter().map(|&u| omega.eval_u_unchecked(u) / u).collect();
    let wp = cfg.ladder.profile(&values);
    let mut omega3 = ConditionVerdict::new("omega3").from_ladder(&cfg.ladder, &wp, &pts);
    omega3.holds = omega3.classification == Classification::Growing;
    omega3.note = Some("omega(t)/log t must grow without bound".into());

    let (omega6, ex) = dilation_search(omega, 2.0, "omega6", cfg);
    excluded += ex;
    let omega6_variants: Vec<ConditionVerdict> = [1.5, 2.0, 4.0]
        .iter()
        .map(|&a| dilation_search(omega, a, "omega6-variant", cfg).0)
        .collect();
    let omega6_variants_consistent = omega6_variants.iter().all(|v| v.holds == omega6_variants[0].holds);

    OmegaConditions {
        omega0,
        omega1,
        omega3,
        omega4,
        omega6,
        strong_nq: strong_nonquasianalyticity(omega, cfg),
        omega6_variants,
        omega6_variants_consistent,
        excluded_points: excluded,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixQuotientRoot {
    pub verdict: ConditionVerdict,
    pub growth: GrowthIndexResult,
}

/// Quotient-root comparison for the matrix of `omega`, via the growth index of `W^(1)`.
pub fn matrix_quotient_root(omega: &LogPL, cfg: &RunConfig) -> Result<MatrixQuotientRoot> {
    let view = matrix_of(omega);
    let w1 = view.row(1.0)?;
    let growth = growth_index(&w1, cfg.d_max, cfg);
    let mut verdict = ConditionVerdict::new("matrix-quotient-root");
    verdict.holds = growth.g.is_some();
    verdict.classification = growth.classification.unwrap_or(Classification::Growing);
    verdict.certified = growth.classification == Some(Classification::Exact);
    if let Some(g) = growth.g {
        verdict.witnesses.insert("d".into(), g as f64);
        if let Some(a) = growth.verdicts[g - 1].witness("A") {
            verdict.witnesses.insert("A".into(), a);
        }
    }
    Ok(MatrixQuotientRoot { verdict, growth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weightfun::omega_of;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    #[test]
    fn mg_examples() {
        let c = cfg();
        let f = LogSequence::gevrey(1.0, 512).unwrap();
        let v = has_mg(&f, &c);
        assert!(v.holds && v.classification == Classification::Exact);
        assert!(v.witness("C").unwrap() <= 2.0);
        let q = has_mg(&LogSequence::qgevrey(2.0, 512).unwrap(), &c);
        assert!(!q.holds && q.classification == Classification::Growing && q.certified);
        let ones = has_mg(&LogSequence::ones(64).unwrap(), &c);
        assert!(ones.holds && ones.classification == Classification::Exact);
        assert_eq!(ones.witness("C"), Some(1.0));
    }

    #[test]
    fn mg_numeric_without_provenance() {
        let c = cfg();
        let f = LogSequence::gevrey(1.0, 4096).unwrap().without_provenance();
        let v = has_mg(&f, &c);
        assert_eq!(v.classification, Classification::Plateau);
        let q = LogSequence::qgevrey(2.0, 1024).unwrap().without_provenance();
        assert_eq!(has_mg(&q, &c).classification, Classification::Growing);
    }

    #[test]
    fn root_quotient_examples() {
        let c = cfg();
        let f = LogSequence::gevrey(1.0, 4096).unwrap();
        let v = mg_root_quotient(&f, &c);
        assert!(v.holds);
        let a = v.witness("A").unwrap();
        assert!(a < std::f64::consts::E && a > 0.99 * std::f64::consts::E);
        let numeric = mg_root_quotient(&f.clone().without_provenance(), &c);
        assert_eq!(numeric.classification, Classification::Plateau);
        let q = mg_root_quotient(&LogSequence::qgevrey(2.0, 4096).unwrap().without_provenance(), &c);
        assert_eq!(q.classification, Classification::Growing);
        let g2 = mg_root_quotient(&LogSequence::gevrey(2.0, 4096).unwrap().without_provenance(), &c);
        assert_eq!(g2.classification, Classification::Plateau);
    }

    #[test]
    fn growth_index_examples() {
        let c = cfg();
        let q = growth_index(&LogSequence::qgevrey(2.0, 4096).unwrap(), 16, &c);
        assert_eq!(q.g, Some(2));
        assert_eq!(q.classification, Some(Classification::Exact));
        assert_eq!(q.verdicts.len(), 16);
        let f = growth_index(&LogSequence::gevrey(1.0, 4096).unwrap(), 16, &c);
        assert_eq!(f.g, Some(1));
        let qn = growth_index(&LogSequence::qgevrey(2.0, 4096).unwrap().without_provenance(), 16, &c);
        assert_eq!(qn.g, Some(2));
        assert_eq!(qn.classification, Some(Classification::Plateau));
        // The d = 2 profile is the constant -log 2.
        assert!((qn.verdicts[1].witness("A").unwrap() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn mixed_quotient_root_examples() {
        let c = cfg();
        let f = LogSequence::gevrey(1.0, 1024).unwrap();
        assert!(mixed_quotient_root(&f, &f, 1, &c).unwrap().holds);
        let q2 = LogSequence::qgevrey(2.0, 1024).unwrap();
        let q4 = LogSequence::qgevrey(4.0, 1024).unwrap();
        assert!(mixed_quotient_root(&q2, &q2, 2, &c).unwrap().holds);
        let v = mixed_quotient_root(&q4, &q2, 2, &c).unwrap();
        assert!(!v.holds && v.classification == Classification::Growing);
        let numeric = mixed_quotient_root(&q4.clone().without_provenance(), &q2.clone().without_provenance(), 2, &c).unwrap();
        assert_eq!(numeric.classification, Classification::Growing);
        assert!(mixed_quotient_root(&f, &f, 2000, &c).is_err());
    }

    #[test]
    fn weak_separativity_examples() {
        let c = cfg();
        let q = LogSequence::qgevrey(2.0, 512).unwrap();
        assert_eq!(weak_separativity(&q, &q, &c).classification, Classification::Growing);
        // For factorials the p = 1 row reads (1 + q) <= A, which no constant satisfies.
        let f = LogSequence::gevrey(1.0, 512).unwrap();
        let v = weak_separativity(&f, &f, &c);
        assert_eq!(v.classification, Classification::Growing);
        assert_eq!(v.argmax[0], 1.0);
    }

    #[test]
    fn omega_condition_examples() {
        let c = cfg();
        let f = omega_of(&LogSequence::gevrey(1.0, 4096).unwrap()).unwrap();
        let r = omega_conditions(&f, &c);
        assert!(r.omega0.holds && r.omega4.holds);
        assert_eq!(r.omega0.classification, Classification::Exact);
        assert!(r.omega6.holds, "{:?}", r.omega6);
        assert!(r.omega6_variants_consistent);
        assert!(r.omega3.holds);

        let q = omega_of(&LogSequence::qgevrey(2.0, 1024).unwrap()).unwrap();
        let r = omega_conditions(&q, &c);
        assert_eq!(r.omega6.classification, Classification::Growing);
        assert!(!r.omega6.holds);
        assert_eq!(r.omega1.classification, Classification::Plateau);
        assert!(r.omega6_variants_consistent);
        assert!(r.omega3.holds);
    }

    #[test]
    fn matrix_quotient_root_examples() {
        let c = cfg();
        let q = omega_of(&LogSequence::qgevrey(2.0, 1024).unwrap()).unwrap();
        let r = matrix_quotient_root(&q, &c).unwrap();
        assert!(r.verdict.holds);
        assert_eq!(r.growth.g, Some(2));
        let f = omega_of(&LogSequence::gevrey(1.0, 4096).unwrap()).unwrap();
        assert_eq!(matrix_quotient_root(&f, &c).unwrap().growth.g, Some(1));
    }

    #[test]
    fn trapezoid_integrates_exponential() {
        let v = adaptive_trapezoid(&|x: f64| (-x).exp(), 0.0, 10.0, 1e-10);
        assert!((v - (1.0 - (-10f64).exp())).abs() < 1e-8);
    }
}
