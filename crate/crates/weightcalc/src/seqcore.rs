//! Weight sequences in log space.
//!
//! A [`LogSequence`] stores `log M_p` for `p = 0..=P` together with the log-quotients
//! `log mu_p = log M_p - log M_{p-1}`. Sequences built from quotients keep the quotients
//! bit-exact and derive the logs by sequential prefix sums; sequences built from logs
//! derive the quotients by differences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{approx_eq, REL_TOL};
use crate::verdict::{Classification, ConditionVerdict, Ladder};

pub const DEFAULT_TRUNCATION: usize = 4096;
pub const MAX_TRUNCATION: usize = 1 << 20;

/// Closed-form families with known analytic behaviour.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum Family {
    /// `M_p = (p!)^s`.
    Gevrey { s: f64 },
    /// `M_p = q^(p^2)`.
    QGevrey { q: f64 },
}

/// Family descriptor carried by sequences whose values follow a closed form:
/// `M_p = exp(log_scale * p) * family_p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub family: Family,
    pub log_scale: f64,
}

impl Provenance {
    pub fn plain(family: Family) -> Self {
        Provenance {
            family,
            log_scale: 0.0,
        }
    }

    pub fn describe(&self) -> String {
        let base = match self.family {
            Family::Gevrey { s } => format!("gevrey:{s}"),
            Family::QGevrey { q } => format!("qgevrey:{q}"),
        };
        if self.log_scale == 0.0 {
            base
        } else {
            format!("{base}*exp({}p)", self.log_scale)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LogSequence {
    log_m: Vec<f64>,
    log_mu: Vec<f64>,
    provenance: Option<Provenance>,
}

/// Log-quotients `log mu_p`, indexed `0..=P` with `log_mu[0] = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientView {
    pub log_mu: Vec<f64>,
}

impl QuotientView {
    /// The quotients `p = 1..=P` as accepted by [`LogSequence::from_quotients`].
    pub fn tail(&self) -> &[f64] {
        &self.log_mu[1..]
    }
}

fn check_truncation(p: usize) -> Result<()> {
    if p == 0 {
        return Err(Error::Construction("truncation must be at least 1".into()));
    }
    if p > MAX_TRUNCATION {
        return Err(Error::Construction(format!(
            "truncation {p} exceeds the maximum {MAX_TRUNCATION}"
        )));
    }
    Ok(())
}

impl LogSequence {
    /// Build from log-quotients `log mu_1, ..., log mu_P`.
    pub fn from_quotients(log_mu: &[f64]) -> Result<Self> {
        check_truncation(log_mu.len())?;
        if let Some(i) = log_mu.iter().position(|v| !v.is_finite()) {
            return Err(Error::Construction(format!(
                "non-finite quotient at p = {}",
                i + 1
            )));
        }
        let mut mu = Vec::with_capacity(log_mu.len() + 1);
        mu.push(0.0);
        mu.extend_from_slice(log_mu);
        Ok(Self::from_quotients_unchecked(mu))
    }

    /// `mu[0]` must be 0 and all entries finite.
    fn from_quotients_unchecked(log_mu: Vec<f64>) -> Self {
        let mut log_m = Vec::with_capacity(log_mu.len());
        let mut acc = 0.0;
        log_m.push(0.0);
        for &m in &log_mu[1..] {
            acc += m;
            log_m.push(acc);
        }
        LogSequence {
            log_m,
            log_mu,
            provenance: None,
        }
    }

    /// Build from logs `log M_0, ..., log M_P`; `log M_0` must be 0.
    pub fn from_logs(log_m: Vec<f64>) -> Result<Self> {
        if log_m.is_empty() {
            return Err(Error::Construction("empty sequence".into()));
        }
        check_truncation(log_m.len() - 1)?;
        if let Some(i) = log_m.iter().position(|v| !v.is_finite()) {
            return Err(Error::Construction(format!("non-finite log at p = {i}")));
        }
        if log_m[0] != 0.0 {
            return Err(Error::Construction(format!(
                "log M_0 must be 0, got {}",
                log_m[0]
            )));
        }
        let mut log_mu = Vec::with_capacity(log_m.len());
        log_mu.push(0.0);
        for w in log_m.windows(2) {
            log_mu.push(w[1] - w[0]);
        }
        Ok(LogSequence {
            log_m,
            log_mu,
            provenance: None,
        })
    }

    /// `M_p = (p!)^s`.
    pub fn gevrey(s: f64, p: usize) -> Result<Self> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(Error::Parameter(format!("gevrey exponent must be > 0, got {s}")));
        }
        check_truncation(p)?;
        let mu: Vec<f64> = (0..=p)
            .map(|k| if k == 0 { 0.0 } else { s * (k as f64).ln() })
            .collect();
        Ok(Self::from_quotients_unchecked(mu).with_provenance(Provenance::plain(Family::Gevrey { s })))
    }

    /// `M_p = q^(p^2)`.
    pub fn qgevrey(q: f64, p: usize) -> Result<Self> {
        if !(q > 1.0 && q.is_finite()) {
            return Err(Error::Parameter(format!("q-Gevrey base must be > 1, got {q}")));
        }
        check_truncation(p)?;
        let lq = q.ln();
        let mu: Vec<f64> = (0..=p)
            .map(|k| if k == 0 { 0.0 } else { (2 * k - 1) as f64 * lq })
            .collect();
        Ok(Self::from_quotients_unchecked(mu).with_provenance(Provenance::plain(Family::QGevrey { q })))
    }

    pub fn family(family: Family, p: usize) -> Result<Self> {
        match family {
            Family::Gevrey { s } => Self::gevrey(s, p),
            Family::QGevrey { q } => Self::qgevrey(q, p),
        }
    }

    /// The constant sequence `M_p = 1`.
    pub fn ones(p: usize) -> Result<Self> {
        Self::from_quotients(&vec![0.0; p])
    }

    pub fn with_provenance(mut self, prov: Provenance) -> Self {
        self.provenance = Some(prov);
        self
    }

    pub fn without_provenance(mut self) -> Self {
        self.provenance = None;
        self
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    /// Truncation order `P`.
    pub fn truncation(&self) -> usize {
        self.log_m.len() - 1
    }

    pub fn log_m(&self) -> &[f64] {
        &self.log_m
    }

    /// Log-quotients indexed `0..=P`, entry 0 is 0.
    pub fn log_mu(&self) -> &[f64] {
        &self.log_mu
    }

    pub fn quotients(&self) -> QuotientView {
        QuotientView {
            log_mu: self.log_mu.clone(),
        }
    }

    /// `log (M_p)^(1/p)` for `p >= 1`.
    pub fn log_root(&self, p: usize) -> f64 {
        self.log_m[p] / p as f64
    }

    /// First `p + 1` terms.
    pub fn truncate(&self, p: usize) -> Result<Self> {
        if p == 0 || p > self.truncation() {
            return Err(Error::Truncation(format!(
                "cannot truncate P = {} to {p}",
                self.truncation()
            )));
        }
        Ok(LogSequence {
            log_m: self.log_m[..=p].to_vec(),
            log_mu: self.log_mu[..=p].to_vec(),
            provenance: self.provenance,
        })
    }

    /// `h^p M_p` with `log_h` given.
    pub fn scale_geometric(&self, log_h: f64) -> Result<Self> {
        if !log_h.is_finite() {
            return Err(Error::Parameter("non-finite geometric factor".into()));
        }
        let mu: Vec<f64> = self
            .log_mu
            .iter()
            .enumerate()
            .map(|(k, m)| if k == 0 { 0.0 } else { m + log_h })
            .collect();
        let mut out = Self::from_quotients_unchecked(mu);
        out.provenance = self.provenance.map(|p| Provenance {
            family: p.family,
            log_scale: p.log_scale + log_h,
        });
        Ok(out)
    }

    /// True when all quotients coincide (geometric sequence, `M_p = h^p`).
    pub fn is_geometric(&self) -> bool {
        let m = &self.log_mu[1..];
        m.iter().all(|v| *v == m[0])
    }

    /// `M_1 >= 1` in addition to `M_0 = 1`.
    pub fn is_normalized(&self) -> bool {
        self.log_m[0] == 0.0 && self.log_mu[1] >= 0.0
    }
}

/// Log-convexity of a sequence and the first index where it fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogConvexity {
    pub convex: bool,
    pub first_violation: Option<usize>,
}

/// Exact check that the stored quotients are nondecreasing.
pub fn is_log_convex(m: &LogSequence) -> LogConvexity {
    let mu = m.log_mu();
    let first = (2..mu.len()).find(|&p| mu[p] < mu[p - 1]);
    LogConvexity {
        convex: first.is_none(),
        first_violation: first,
    }
}

/// Membership in LC: normalized, log-convex, and `(M_p)^(1/p)` unbounded.
///
/// The last clause is judged from the ladder profile of the roots: a `growing`
/// classification is the evidence of divergence.
pub fn check_lc(m: &LogSequence, ladder: &Ladder) -> ConditionVerdict {
    let normalized = m.is_normalized();
    let lc = is_log_convex(m);
    let n = m.truncation();
    let roots: Vec<f64> = (1..=n).map(|p| m.log_root(p)).collect();
    let coords: Vec<f64> = (1..=n).map(|p| p as f64).collect();
    let wp = ladder.profile(&roots);
    let mut v = ConditionVerdict::new("LC").from_ladder(ladder, &wp, &coords);
    v.witnesses.insert("normalized".into(), normalized as u8 as f64);
    v.witnesses.insert("log_convex".into(), lc.convex as u8 as f64);
    if let Some(p) = lc.first_violation {
        v.argmax = vec![p as f64];
    }
    let divergent = match m.provenance() {
        Some(_) => {
            v.classification = Classification::Exact;
            v.certified = true;
            true
        }
        None => v.classification == Classification::Growing,
    };
    v.holds = normalized && lc.convex && divergent;
    if !(normalized && lc.convex) {
        v.certified = true;
    }
    v.note = Some(if divergent {
        "roots diverge".into()
    } else {
        "roots do not diverge across the ladder".into()
    });
    v
}

/// `M_p N_p`. Both sequences must have the same truncation.
pub fn product(m: &LogSequence, n: &LogSequence) -> Result<LogSequence> {
    if m.truncation() != n.truncation() {
        return Err(Error::Shape(format!(
            "product of truncations {} and {}",
            m.truncation(),
            n.truncation()
        )));
    }
    let mu: Vec<f64> = m.log_mu().iter().zip(n.log_mu()).map(|(a, b)| a + b).collect();
    let mut out = LogSequence::from_quotients_unchecked(mu);
    out.provenance = match (m.provenance, n.provenance) {
        (Some(a), Some(b)) => match (a.family, b.family) {
            (Family::Gevrey { s: s1 }, Family::Gevrey { s: s2 }) => Some(Provenance {
                family: Family::Gevrey { s: s1 + s2 },
                log_scale: a.log_scale + b.log_scale,
            }),
            (Family::QGevrey { q: q1 }, Family::QGevrey { q: q2 }) => Some(Provenance {
                family: Family::QGevrey { q: q1 * q2 },
                log_scale: a.log_scale + b.log_scale,
            }),
            _ => None,
        },
        _ => None,
    };
    Ok(out)
}

/// `M_p^l` for a positive real `l`.
pub fn power(m: &LogSequence, ell: f64) -> Result<LogSequence> {
    if !(ell > 0.0 && ell.is_finite()) {
        return Err(Error::Parameter(format!("power must be > 0, got {ell}")));
    }
    if ell == 1.0 {
        return Ok(m.clone());
    }
    let mu: Vec<f64> = m.log_mu().iter().map(|v| v * ell).collect();
    let mut out = LogSequence::from_quotients_unchecked(mu);
    out.provenance = m.provenance.map(|p| Provenance {
        family: match p.family {
            Family::Gevrey { s } => Family::Gevrey { s: s * ell },
            Family::QGevrey { q } => Family::QGevrey { q: q.powf(ell) },
        },
        log_scale: p.log_scale * ell,
    });
    Ok(out)
}

/// `(M_{ap})^(1/a)` for `p <= P/a`.
///
/// The quotient at `p` is the mean of `log mu_{ap-a+1}, ..., log mu_{ap}`, clamped to the
/// range of those quotients so the sandwich by neighbouring quotients holds exactly.
pub fn tilde(m: &LogSequence, a: usize) -> Result<LogSequence> {
    if a == 0 {
        return Err(Error::Parameter("tilde index must be a positive integer".into()));
    }
    if a > m.truncation() {
        return Err(Error::Truncation(format!(
            "tilde index {a} exceeds truncation {}",
            m.truncation()
        )));
    }
    if a == 1 {
        return Ok(m.clone());
    }
    let n = m.truncation() / a;
    let src = m.log_mu();
    let mut mu = Vec::with_capacity(n + 1);
    mu.push(0.0);
    for p in 1..=n {
        let block = &src[a * p - a + 1..=a * p];
        let mean = block.iter().sum::<f64>() / a as f64;
        let lo = block.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = block.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        mu.push(mean.clamp(lo, hi));
    }
    let mut out = LogSequence::from_quotients_unchecked(mu);
    out.provenance = m.provenance.and_then(|p| match p.family {
        Family::QGevrey { q } => Some(Provenance {
            family: Family::QGevrey { q: q.powi(a as i32) },
            log_scale: p.log_scale,
        }),
        Family::Gevrey { .. } => None,
    });
    Ok(out)
}

/// Convolution `min_q M_q N_{p-q}` by direct minimization, truncated to the shorter operand.
pub fn convolve_direct(m: &LogSequence, n: &LogSequence) -> LogSequence {
    let p_max = m.truncation().min(n.truncation());
    let (lm, ln) = (m.log_m(), n.log_m());
    let mut out = Vec::with_capacity(p_max + 1);
    for p in 0..=p_max {
        let best = (0..=p)
            .map(|q| lm[q] + ln[p - q])
            .fold(f64::INFINITY, f64::min);
        out.push(best);
    }
    out[0] = 0.0;
    LogSequence::from_logs(out).expect("finite inputs give finite minima")
}

/// Convolution of two log-convex sequences via the sorted merge of their quotients.
/// Ties take the first operand's quotient first.
pub fn convolve_merge(m: &LogSequence, n: &LogSequence) -> Result<LogSequence> {
    for (name, s) in [("first", m), ("second", n)] {
        if let Some(p) = is_log_convex(s).first_violation {
            return Err(Error::Precondition(format!(
                "{name} operand is not log-convex at p = {p}"
            )));
        }
    }
    let p_max = m.truncation().min(n.truncation());
    let (a, b) = (&m.log_mu()[1..], &n.log_mu()[1..]);
    let mut mu = Vec::with_capacity(p_max + 1);
    mu.push(0.0);
    let (mut i, mut j) = (0, 0);
    while mu.len() <= p_max {
        if j >= b.len() || (i < a.len() && a[i] <= b[j]) {
            mu.push(a[i]);
            i += 1;
        } else {
            mu.push(b[j]);
            j += 1;
        }
    }
    Ok(LogSequence::from_quotients_unchecked(mu))
}

/// Convolution: quotient merge when both inputs are log-convex, direct minimization otherwise.
pub fn convolve(m: &LogSequence, n: &LogSequence) -> LogSequence {
    convolve_merge(m, n).unwrap_or_else(|_| convolve_direct(m, n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationKind {
    /// `M_p <= N_p` for all p.
    #[serde(rename = "le")]
    Le,
    /// `sup (M_p/N_p)^(1/p) < inf`.
    #[serde(rename = "preceq")]
    Preceq,
    /// Both directions of `Preceq`.
    #[serde(rename = "approx")]
    Approx,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceRelationResult {
    pub kind: RelationKind,
    pub holds: bool,
    pub certified: bool,
    pub classification: Classification,
    /// `sup_p (log M_p - log N_p)/p`; for `Approx` the larger of both directions.
    pub sup_log: f64,
    pub windows: Vec<usize>,
    /// Window sups of the forward profile.
    pub profile: Vec<f64>,
    /// Window sups of the reverse profile (only for `Approx`).
    pub reverse_profile: Option<Vec<f64>>,
}

/// Closed-form answer to `M ≼ N` for family sequences.
fn family_preceq(m: &LogSequence, n: &LogSequence) -> Option<bool> {
    let (a, b) = (m.provenance?, n.provenance?);
    Some(match (a.family, b.family) {
        (Family::Gevrey { s: s1 }, Family::Gevrey { s: s2 }) => s1 <= s2,
        (Family::QGevrey { q: q1 }, Family::QGevrey { q: q2 }) => q1 <= q2,
        (Family::Gevrey { .. }, Family::QGevrey { .. }) => true,
        (Family::QGevrey { .. }, Family::Gevrey { .. }) => false,
    })
}

fn preceq_profile(m: &LogSequence, n: &LogSequence) -> Vec<f64> {
    let p_max = m.truncation().min(n.truncation());
    (1..=p_max)
        .map(|p| (m.log_m()[p] - n.log_m()[p]) / p as f64)
        .collect()
}

fn relate_preceq(m: &LogSequence, n: &LogSequence, ladder: &Ladder) -> SequenceRelationResult {
    let prof = preceq_profile(m, n);
    let wp = ladder.profile(&prof);
    let p_max = prof.len();
    let identical = m.log_m()[..=p_max] == n.log_m()[..=p_max];
    let (holds, certified, classification) = if identical {
        (true, true, Classification::Exact)
    } else if let Some(h) = family_preceq(m, n) {
        let c = if h {
            Classification::Exact
        } else {
            Classification::Growing
        };
        (h, true, c)
    } else {
        let c = ladder.classify(&wp.sups);
        (c != Classification::Growing, false, c)
    };
    SequenceRelationResult {
        kind: RelationKind::Preceq,
        holds,
        certified,
        classification,
        sup_log: wp.max,
        windows: wp.ends.clone(),
        profile: wp.sups,
        reverse_profile: None,
    }
}

/// Compare `M` with `N` on the common truncation.
pub fn relate(m: &LogSequence, n: &LogSequence, kind: RelationKind, ladder: &Ladder) -> SequenceRelationResult {
    match kind {
        RelationKind::Le => {
            let prof = preceq_profile(m, n);
            let wp = ladder.profile(&prof);
            let holds = prof.iter().all(|v| *v <= 0.0);
            SequenceRelationResult {
                kind,
                holds,
                certified: true,
                classification: if holds {
                    Classification::Exact
                } else {
                    Classification::Growing
                },
                sup_log: wp.max,
                windows: wp.ends.clone(),
                profile: wp.sups,
                reverse_profile: None,
            }
        }
        RelationKind::Preceq => relate_preceq(m, n, ladder),
        RelationKind::Approx => {
            let fwd = relate_preceq(m, n, ladder);
            let rev = relate_preceq(n, m, ladder);
            let classification = worse(fwd.classification, rev.classification);
            SequenceRelationResult {
                kind,
                holds: fwd.holds && rev.holds,
                certified: fwd.certified && rev.certified,
                classification,
                sup_log: fwd.sup_log.max(rev.sup_log),
                windows: fwd.windows,
                profile: fwd.profile,
                reverse_profile: Some(rev.profile),
            }
        }
    }
}

/// Order `exact < plateau < growing`; returns the larger.
pub fn worse(a: Classification, b: Classification) -> Classification {
    let rank = |c: Classification| match c {
        Classification::Exact => 0,
        Classification::Plateau => 1,
        Classification::Growing => 2,
    };
    if rank(a) >= rank(b) {
        a
    } else {
        b
    }
}

/// Two sequences agree term by term within the relative tolerance.
pub fn logs_close(a: &LogSequence, b: &LogSequence, rel: f64) -> bool {
    a.truncation() == b.truncation()
        && a
            .log_m()
            .iter()
            .zip(b.log_m())
            .all(|(x, y)| approx_eq(*x, *y, rel))
}

/// Shorthand for [`logs_close`] at the default tolerance.
pub fn logs_match(a: &LogSequence, b: &LogSequence) -> bool {
    logs_close(a, b, REL_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ln(x: f64) -> f64 {
        x.ln()
    }

    #[test]
    fn factorial_from_quotients() {
        let m = LogSequence::from_quotients(&[ln(1.0), ln(2.0), ln(3.0), ln(4.0)]).unwrap();
        assert_eq!(m.truncation(), 4);
        assert!(approx_eq(m.log_m()[4], ln(24.0), 1e-15));
        assert_eq!(m.log_m()[0], 0.0);
    }

    #[test]
    fn zero_quotients_give_ones() {
        let m = LogSequence::from_quotients(&[0.0; 5]).unwrap();
        assert!(m.log_m().iter().all(|v| *v == 0.0));
    }

    #[test]
    fn non_finite_quotient_is_rejected() {
        assert!(matches!(
            LogSequence::from_quotients(&[0.0, f64::NAN]),
            Err(Error::Construction(_))
        ));
        assert!(LogSequence::from_quotients(&[]).is_err());
        assert!(LogSequence::from_logs(vec![0.1, 1.0]).is_err());
    }

    #[test]
    fn qgevrey_prefix_sums_match_brute_force() {
        let m = LogSequence::qgevrey(2.0, 40).unwrap();
        for p in 0..=40usize {
            let mut acc = 0.0;
            for k in 1..=p {
                acc += (2 * k - 1) as f64 * ln(2.0);
            }
            assert!(approx_eq(m.log_m()[p], acc, 1e-15));
            assert!(approx_eq(m.log_m()[p], (p * p) as f64 * ln(2.0), 1e-12));
        }
    }

    #[test]
    fn family_examples() {
        assert!(approx_eq(LogSequence::gevrey(1.0, 4).unwrap().log_m()[4], 3.17805383, 1e-8));
        assert!(approx_eq(LogSequence::qgevrey(2.0, 3).unwrap().log_m()[3], 6.23832463, 1e-8));
        assert!(approx_eq(LogSequence::gevrey(2.0, 2).unwrap().log_m()[2], 1.38629436, 1e-8));
        assert!(matches!(LogSequence::qgevrey(1.0, 3), Err(Error::Parameter(_))));
        assert!(matches!(LogSequence::gevrey(0.0, 3), Err(Error::Parameter(_))));
    }

    #[test]
    fn log_convexity_examples() {
        assert!(is_log_convex(&LogSequence::gevrey(1.0, 50).unwrap()).convex);
        assert!(is_log_convex(&LogSequence::qgevrey(2.0, 50).unwrap()).convex);
        let bad = LogSequence::from_logs(vec![0.0, ln(3.0), ln(4.0)]).unwrap();
        let r = is_log_convex(&bad);
        assert!(!r.convex);
        assert_eq!(r.first_violation, Some(2));
    }

    #[test]
    fn lc_check_examples() {
        let l = Ladder::default();
        let v = check_lc(&LogSequence::gevrey(1.0, 4096).unwrap().without_provenance(), &l);
        assert!(v.holds);
        assert_eq!(v.classification, Classification::Growing);
        let ones = check_lc(&LogSequence::ones(4096).unwrap(), &l);
        assert!(!ones.holds);
        let geo = LogSequence::from_quotients(&vec![ln(2.0); 4096]).unwrap();
        let v = check_lc(&geo, &l);
        assert!(!v.holds);
        assert_eq!(v.witness("normalized"), Some(1.0));
        assert_eq!(v.witness("log_convex"), Some(1.0));
    }

    #[test]
    fn power_and_product() {
        let f = LogSequence::gevrey(1.0, 10).unwrap();
        assert!(approx_eq(power(&f, 2.0).unwrap().log_m()[3], 2.0 * ln(6.0), 1e-15));
        assert!(approx_eq(product(&f, &f).unwrap().log_m()[3], 2.0 * ln(6.0), 1e-15));
        assert_eq!(power(&f, 1.0).unwrap(), f);
        let g = LogSequence::gevrey(1.0, 9).unwrap();
        assert!(matches!(product(&f, &g), Err(Error::Shape(_))));
        assert!(matches!(power(&f, -1.0), Err(Error::Parameter(_))));
    }

    #[test]
    fn tilde_examples() {
        let f = LogSequence::gevrey(1.0, 20).unwrap();
        assert_eq!(tilde(&f, 1).unwrap(), f);
        let t = tilde(&f, 2).unwrap();
        assert_eq!(t.truncation(), 10);
        assert!(approx_eq(t.log_m()[1], 0.5 * ln(2.0), 1e-15));
        assert!(approx_eq(t.log_mu()[2], 0.5 * ln(12.0), 1e-15));
        let mu = f.log_mu();
        assert!(mu[2] <= mu[3] && mu[3] <= t.log_mu()[2] && t.log_mu()[2] <= mu[4]);
        assert!(matches!(tilde(&f, 21), Err(Error::Truncation(_))));
    }

    #[test]
    fn tilde_of_tilde_composes() {
        let f = LogSequence::gevrey(1.5, 240).unwrap();
        let a = tilde(&tilde(&f, 2).unwrap(), 3).unwrap();
        let b = tilde(&f, 6).unwrap();
        assert!(logs_match(&a, &b));
    }

    #[test]
    fn convolution_examples() {
        let f = LogSequence::gevrey(1.0, 12).unwrap();
        let d = convolve_direct(&f, &f);
        let m = convolve_merge(&f, &f).unwrap();
        assert!(approx_eq(d.log_m()[4], ln(4.0), 1e-15));
        assert!(logs_match(&d, &m));
        let expect = [1.0, 1.0, 2.0, 2.0, 3.0, 3.0];
        for (got, want) in m.log_mu()[1..=6].iter().zip(expect) {
            assert!(approx_eq(*got, ln(want), 1e-15));
        }
        let ones = LogSequence::ones(12).unwrap();
        assert_eq!(convolve_direct(&f, &ones).log_m(), ones.log_m());
        let bad = LogSequence::from_logs(vec![0.0, ln(3.0), ln(4.0)]).unwrap();
        assert!(matches!(convolve_merge(&bad, &f), Err(Error::Precondition(_))));
    }

    #[test]
    fn relation_examples() {
        let l = Ladder::default();
        let f = LogSequence::gevrey(1.0, 4096).unwrap();
        let f2 = power(&f, 2.0).unwrap();
        let same = relate(&f, &f, RelationKind::Approx, &l);
        assert!(same.holds);
        assert_eq!(same.classification, Classification::Exact);
        assert_eq!(same.sup_log, 0.0);

        let fwd = relate(&f.clone().without_provenance(), &f2.clone().without_provenance(), RelationKind::Preceq, &l);
        assert!(fwd.holds);
        assert_eq!(fwd.classification, Classification::Plateau);
        let rev = relate(&f2.clone().without_provenance(), &f.clone().without_provenance(), RelationKind::Preceq, &l);
        assert!(!rev.holds);
        assert_eq!(rev.classification, Classification::Growing);
        assert!(relate(&f, &f2, RelationKind::Le, &l).holds);
    }
}
