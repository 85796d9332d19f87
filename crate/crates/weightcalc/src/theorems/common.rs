//! Building blocks shared by the theorem checks.
//!
//! Premises are established either by a closed form or by a constant search. A search
//! walks the constant ladder and reports the first constant whose excess profile
//! plateaus. The sup of that excess becomes the additive constant. Conclusions are then
//! checked with explicitly derived constants, exhaustively over the truncation or at
//! every grid point and kink of the valid range. Such checks are certified.

use crate::config::RunConfig;
use crate::error::Result;
use crate::num::le_tol;
use crate::report::{Assertion, Method};
use crate::seqcore::{is_log_convex, product, worse, LogSequence, SequenceRelationResult};
use crate::verdict::{Classification, ConditionVerdict, Ladder};
use crate::weightfun::LogPL;

/// Relative tolerance for comparisons of weight-function values.
pub const GRID_TOL: f64 = 1e-6;

#[inline]
/// `(M_{kp})^(1/(kp))`, written without the factor when `k = 1`.
pub(crate) fn root_term(seq: &str, k: usize) -> String {
    if k == 1 {
        format!("({seq}_p)^(1/p)")
    } else {
        format!("({seq}_{{{k}p}})^(1/({k}p))")
    }
}

pub(crate) fn ev(f: &LogPL, u: f64) -> f64 {
    f.eval_u_unchecked(u)
}

/// Result of a constant search on the function side.
#[derive(Debug, Clone)]
pub(crate) struct Found {
    pub verdict: ConditionVerdict,
    /// Ladder constant that worked, if any.
    pub value: Option<f64>,
    /// `max(0, sup excess)` over the evaluated range.
    pub additive: f64,
    /// Right end of the evaluated range in `u`.
    pub u_hi: f64,
}

impl Found {
    pub fn log_value(&self) -> f64 {
        self.value.map_or(0.0, f64::ln)
    }

    pub fn holds(&self) -> bool {
        self.value.is_some()
    }
}

/// A one-parameter family of inequalities `lhs(c, u) <= rhs(c, u) [+ C]` searched over
/// the constant ladder `c = 1, 2, 4, ...`.
pub(crate) struct Search<'a> {
    pub id: &'a str,
    /// Witness name for the ladder constant.
    pub constant: &'a str,
    pub base: &'a [f64],
    /// Whether an additive constant is allowed.
    pub additive: bool,
    /// Right end of the valid range for a given constant.
    pub u_hi: &'a dyn Fn(f64) -> f64,
    /// Points where either side may have a kink, for a given constant.
    pub kinks: &'a dyn Fn(f64) -> Vec<f64>,
    pub sides: &'a dyn Fn(f64, f64) -> (f64, f64),
}

impl Search<'_> {
    pub fn run(&self, cfg: &RunConfig) -> Found {
        let mut last: Option<Found> = None;
        for value in cfg.constant_ladder() {
            let hi = (self.u_hi)(value);
            let pts: Vec<f64> = self.base.iter().copied().filter(|u| *u <= hi).collect();
            if pts.len() < 2 || pts.len() * 2 < self.base.len() {
                break;
            }
            let mut ok = true;
            let mut excess = Vec::with_capacity(pts.len());
            for &u in &pts {
                let (l, r) = (self.sides)(value, u);
                ok &= le_tol(l, r, GRID_TOL);
                excess.push(l - r);
            }
            let wp = cfg.ladder.profile(&excess);
            let mut sup = wp.max;
            let mut arg = wp.argmax.map(|i| pts[i]);
            let lo = pts[0];
            for k in (self.kinks)(value) {
                if k > lo && k < hi {
                    let (l, r) = (self.sides)(value, k);
                    ok &= le_tol(l, r, GRID_TOL);
                    if l - r > sup {
                        sup = l - r;
                        arg = Some(k);
                    }
                }
            }
            let mut v = ConditionVerdict::new(self.id).from_ladder(&cfg.ladder, &wp, &pts);
            if !self.additive {
                v.holds = ok;
                v.classification = if ok {
                    Classification::Plateau
                } else {
                    Classification::Growing
                };
            }
            v.witnesses.insert(self.constant.into(), value);
            v.witnesses.insert("max_excess".into(), sup);
            if self.additive {
                v.witnesses.insert("C".into(), sup.max(0.0));
            }
            v.argmax = arg.into_iter().collect();
            let found = Found {
                value: v.holds.then_some(value),
                verdict: v,
                additive: sup.max(0.0),
                u_hi: hi,
            };
            if found.holds() {
                return found;
            }
            last = Some(found);
        }
        last.unwrap_or_else(|| Found {
            verdict: ConditionVerdict::new(self.id).with_note("valid range too short for the constant ladder"),
            value: None,
            additive: 0.0,
            u_hi: f64::NEG_INFINITY,
        })
    }
}

/// Base grid restricted to `[base[0], hi]`, plus `hi` and every kink in range, sorted.
pub(crate) fn points(base: &[f64], hi: f64, kinks: impl IntoIterator<Item = f64>) -> Vec<f64> {
    let lo = base.first().copied().unwrap_or(0.0);
    if hi < lo {
        return Vec::new();
    }
    let mut pts: Vec<f64> = base
        .iter()
        .copied()
        .filter(|u| *u <= hi)
        .chain(kinks.into_iter().filter(|k| *k >= lo && *k <= hi))
        .chain(std::iter::once(hi))
        .collect();
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

/// Exact sup of a piecewise-linear `f` on `[lo, hi]`, given all its kinks.
pub(crate) fn pl_sup(lo: f64, hi: f64, kinks: impl IntoIterator<Item = f64>, f: impl Fn(f64) -> f64) -> f64 {
    if hi < lo {
        return f64::NEG_INFINITY;
    }
    kinks
        .into_iter()
        .filter(|k| *k > lo && *k < hi)
        .chain([lo, hi])
        .map(f)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Breakpoints of `f`, optionally shifted and scaled: `(b - shift) / scale`.
pub(crate) fn kinks_of(f: &LogPL, shift: f64, scale: f64) -> impl Iterator<Item = f64> + '_ {
    f.breakpoints().iter().map(move |b| (b - shift) / scale)
}

/// Certified check of `lhs <= rhs` over a finite set of items; coordinates are
/// reported for the worst item (NaN coordinates are dropped).
pub(crate) fn explicit(id: &str, items: impl IntoIterator<Item = (f64, f64, [f64; 2])>, tol: f64) -> ConditionVerdict {
    let mut worst = f64::NEG_INFINITY;
    let mut arg = [f64::NAN; 2];
    let mut ok = true;
    let mut n = 0usize;
    for (l, r, at) in items {
        n += 1;
        if l - r > worst || worst.is_nan() {
            worst = l - r;
            arg = at;
        }
        ok &= le_tol(l, r, tol);
    }
    let mut v = ConditionVerdict::new(id);
    if n == 0 {
        v.holds = true;
        v.classification = Classification::Plateau;
        return v.with_note("no admissible index in range");
    }
    v.witnesses.insert("max_excess".into(), worst);
    v.witnesses.insert("checked".into(), n as f64);
    v.argmax = arg.into_iter().filter(|x| !x.is_nan()).collect();
    if ok {
        v.exact_pass()
    } else {
        v.exact_fail()
    }
}

pub(crate) fn grid_check(id: &str, pts: &[f64], sides: impl Fn(f64) -> (f64, f64)) -> ConditionVerdict {
    explicit(
        id,
        pts.iter().map(|&u| {
            let (l, r) = sides(u);
            (l, r, [u, f64::NAN])
        }),
        GRID_TOL,
    )
}

/// Profile over `p = 1..=values.len()` with witness `exp(max(sup, 0))`; also returns
/// `max(sup, 0)` so callers avoid the round trip through `exp`.
pub(crate) fn seq_profile(id: &str, constant: &str, values: &[f64], ladder: &Ladder) -> (ConditionVerdict, f64) {
    if values.is_empty() {
        return (ConditionVerdict::new(id).with_note("empty index range"), 0.0);
    }
    let coords: Vec<f64> = (1..=values.len()).map(|p| p as f64).collect();
    let wp = ladder.profile(values);
    let mut v = ConditionVerdict::new(id).from_ladder(ladder, &wp, &coords);
    let log_c = wp.max.max(0.0);
    v.witnesses.insert(constant.into(), log_c.exp());
    v.argmax = wp.argmax.map(|i| vec![(i + 1) as f64]).unwrap_or_default();
    (v, log_c)
}

/// Replace a heuristic verdict by a closed-form one when available.
pub(crate) fn settle(v: ConditionVerdict, closed: Option<bool>) -> ConditionVerdict {
    match closed {
        Some(true) => v.exact_pass().with_note("closed form"),
        Some(false) => v.exact_fail().with_note("closed form"),
        None => v,
    }
}

/// Logarithm of a witness constant, clamped to `>= 0`.
pub(crate) fn log_witness(v: &ConditionVerdict, name: &str) -> f64 {
    v.witness(name).map_or(0.0, |x| x.max(1.0).ln())
}

/// Conjunction of two verdicts.
pub(crate) fn both(id: &str, a: &ConditionVerdict, b: &ConditionVerdict) -> ConditionVerdict {
    let mut v = ConditionVerdict::new(id);
    v.holds = a.holds && b.holds;
    v.certified = a.certified && b.certified;
    v.classification = worse(a.classification, b.classification);
    for (src, tag) in [(a, &a.condition), (b, &b.condition)] {
        for (k, x) in &src.witnesses {
            v.witnesses.insert(format!("{tag}.{k}"), *x);
        }
    }
    v
}

pub(crate) fn skipped(id: &str) -> ConditionVerdict {
    ConditionVerdict::new(id).with_note("premise not established; conclusion not evaluated")
}

pub(crate) fn relation_verdict(id: &str, r: &SequenceRelationResult) -> ConditionVerdict {
    let mut v = ConditionVerdict::new(id);
    v.holds = r.holds;
    v.certified = r.certified;
    v.classification = r.classification;
    v.profile = r.profile.clone();
    v.windows = r.windows.iter().map(|&w| w as f64).collect();
    v.witnesses.insert("C".into(), r.sup_log.max(0.0).exp());
    v
}

/// Short input description for reports.
pub(crate) fn describe(m: &LogSequence) -> String {
    let base = m.provenance().map_or_else(|| "custom".to_string(), |p| p.describe());
    format!("{base} (P = {})", m.truncation())
}

/// Membership premise: normalized and log-convex, checked on the stored quotients.
pub(crate) fn lc_premise(m: &LogSequence, name: &str) -> Assertion {
    let ok = m.is_normalized() && is_log_convex(m).convex;
    let v = ConditionVerdict::new("LC");
    Assertion::new(
        format!("{name} normalized and log-convex"),
        Method::Structural,
        if ok { v.exact_pass() } else { v.exact_fail() },
    )
}

/// Product on the common truncation.
pub(crate) fn product_common(a: &LogSequence, b: &LogSequence) -> Result<LogSequence> {
    let n = a.truncation().min(b.truncation());
    product(&a.truncate(n)?, &b.truncate(n)?)
}

/// Count of `log_mu[1..=P]` entries `<= x`, with a small slack for ties.
pub(crate) fn count_le(log_mu: &[f64], x: f64) -> usize {
    let slack = 1e-12 * x.abs().max(1.0);
    log_mu[1..].partition_point(|v| *v <= x + slack)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pl_sup_uses_kinks_and_ends() {
        let f = |u: f64| -(u - 1.0).abs();
        assert_eq!(pl_sup(0.0, 3.0, [1.0], f), 0.0);
        assert_eq!(pl_sup(0.0, 3.0, [], f), -1.0);
    }

    #[test]
    fn explicit_reports_worst_item() {
        let v = explicit("x", [(1.0, 2.0, [1.0, f64::NAN]), (3.0, 2.0, [2.0, f64::NAN])], 1e-9);
        assert!(!v.holds && v.certified);
        assert_eq!(v.argmax, vec![2.0]);
        assert!(explicit("x", [], 1e-9).holds);
    }

    #[test]
    fn counting_with_ties() {
        let mu = [0.0, 0.0, 1.0, 1.0, 2.0];
        assert_eq!(count_le(&mu, 1.0), 3);
        assert_eq!(count_le(&mu, -0.5), 0);
        assert_eq!(count_le(&mu, 5.0), 4);
    }
}
