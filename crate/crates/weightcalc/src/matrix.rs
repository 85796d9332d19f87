//! Weight matrices `W^(l)_p = exp(phi*(l p) / l)` generated lazily from a weight function.
//!
//! Rows are built from quotients: the quotient of `W^(l)` at `p` is the mean slope of the
//! conjugate over `[l(p-1), lp]`, clamped to the slopes met on that window. This keeps
//! every row exactly log-convex and makes `W^(1)` reproduce the generating sequence's
//! quotients bit for bit when the weight function came from a sequence.

use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::num::{approx_eq, le_tol, REL_TOL};
use crate::report::{given, Assertion, DirectionReport, Method, TheoremReport};
use crate::seqcore::{relate, LogSequence, RelationKind};
use crate::verdict::{Classification, ConditionVerdict};
use crate::weightfun::{omega_of, young_conjugate, ConjugatePL, LogPL};

pub struct WeightMatrixView {
    omega: LogPL,
    conj: ConjugatePL,
    cache: RwLock<HashMap<u64, Arc<LogSequence>>>,
}

impl std::fmt::Debug for WeightMatrixView {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WeightMatrixView")
            .field("x_max", &self.conj.x_max())
            .field("cached_rows", &self.cached_rows())
            .finish()
    }
}

/// Matrix view of a weight function.
pub fn matrix_of(omega: &LogPL) -> WeightMatrixView {
    WeightMatrixView {
        omega: omega.clone(),
        conj: young_conjugate(omega),
        cache: RwLock::new(HashMap::new()),
    }
}

impl WeightMatrixView {
    pub fn omega(&self) -> &LogPL {
        &self.omega
    }

    pub fn conjugate(&self) -> &ConjugatePL {
        &self.conj
    }

    pub fn x_max(&self) -> f64 {
        self.conj.x_max()
    }

    /// `P(l) = floor(x_max / l)`.
    pub fn truncation_for(&self, ell: f64) -> usize {
        let r = self.conj.x_max() / ell;
        (r * (1.0 + 1e-12)).floor() as usize
    }

    pub fn cached_rows(&self) -> usize {
        self.cache.read().len()
    }

    /// Row `W^(l)`, generated on first use.
    pub fn row(&self, ell: f64) -> Result<Arc<LogSequence>> {
        if !(ell > 0.0 && ell.is_finite()) {
            return Err(Error::Parameter(format!("matrix index must be > 0, got {ell}")));
        }
        let key = ell.to_bits();
        if let Some(r) = self.cache.read().get(&key) {
            return Ok(r.clone());
        }
        let row = Arc::new(self.generate(ell)?);
        let mut w = self.cache.write();
        Ok(w.entry(key).or_insert(row).clone())
    }

    fn generate(&self, ell: f64) -> Result<LogSequence> {
        let n = self.truncation_for(ell);
        if n < 2 {
            return Err(Error::Truncation(format!(
                "W^({ell}) has truncation {n} < 2 (x_max = {})",
                self.conj.x_max()
            )));
        }
        let xs = self.conj.xs();
        let seg = self.conj.segment_slopes();
        let x_end = self.conj.x_max();
        let mut mu = Vec::with_capacity(n);
        let mut i = 0usize;
        for p in 1..=n {
            let x0 = (ell * (p - 1) as f64).min(x_end);
            let x1 = (ell * p as f64).min(x_end);
            while i + 1 < seg.len() && xs[i + 1] <= x0 {
                i += 1;
            }
            let (mut acc, mut lo, mut hi) = (0.0, f64::INFINITY, f64::NEG_INFINITY);
            let mut j = i;
            loop {
                let a = x0.max(xs[j]);
                let b = x1.min(xs[j + 1]);
                if b > a || (lo == f64::INFINITY && j + 1 == seg.len()) {
                    acc += seg[j] * (b - a).max(0.0);
                    lo = lo.min(seg[j]);
                    hi = hi.max(seg[j]);
                }
                if xs[j + 1] >= x1 || j + 1 == seg.len() {
                    break;
                }
                j += 1;
            }
            mu.push((acc / ell).clamp(lo, hi));
        }
        LogSequence::from_quotients(&mu)
    }
}

/// Both index identities `W^(lx)_p = (W^(x)_{lp})^(1/l)` and `W^(x/l)_{lp} = (W^(x)_p)^l`
/// checked on every valid index.
pub fn transform_check(view: &WeightMatrixView, x: f64, ell: usize) -> Result<TheoremReport> {
    if ell == 0 {
        return Err(Error::Parameter("transform index must be a positive integer".into()));
    }
    let l = ell as f64;
    let base = view.row(x)?;
    let up = view.row(l * x)?;
    let down = view.row(x / l)?;
    let mut rep = TheoremReport::new(
        "transform",
        vec![format!("x = {x}"), format!("l = {ell}")],
    );

    let mut worst = (0.0f64, 0usize);
    for p in 0..=up.truncation().min(base.truncation() / ell) {
        let d = (up.log_m()[p] - base.log_m()[ell * p] / l).abs();
        if d > worst.0 {
            worst = (d, p);
        }
    }
    let ok = (0..=up.truncation().min(base.truncation() / ell))
        .all(|p| approx_eq(up.log_m()[p], base.log_m()[ell * p] / l, REL_TOL));
    rep.push(identity_direction("W^(lx)_p = (W^(x)_{lp})^(1/l)", ok, worst));

    let mut worst = (0.0f64, 0usize);
    let range = 0..=base.truncation().min(down.truncation() / ell);
    let mut ok = true;
    for p in range {
        let (a, b) = (down.log_m()[ell * p], l * base.log_m()[p]);
        let d = (a - b).abs();
        if d > worst.0 {
            worst = (d, p);
        }
        ok &= approx_eq(a, b, REL_TOL);
    }
    rep.push(identity_direction("W^(x/l)_{lp} = (W^(x)_p)^l", ok, worst));
    Ok(rep)
}

fn identity_direction(statement: &str, ok: bool, worst: (f64, usize)) -> DirectionReport {
    let mut v = ConditionVerdict::new(statement).with_witness("max_abs_diff", worst.0);
    v.argmax = vec![worst.1 as f64];
    let v = if ok { v.exact_pass() } else { v.exact_fail() };
    DirectionReport::new(
        statement,
        given("omega in W0"),
        Assertion::new(statement, Method::Exhaustive, v),
        vec![],
    )
}

/// `W^(l)_{p+q} <= W^(2l)_p W^(2l)_q` for all `p + q <= n_max`.
pub fn mixed_mg_check(view: &WeightMatrixView, ell: f64, n_max: usize) -> Result<ConditionVerdict> {
    let w1 = view.row(ell)?;
    let w2 = view.row(2.0 * ell)?;
    let n_max = n_max.min(w1.truncation()).min(2 * w2.truncation());
    let (a, b) = (w1.log_m(), w2.log_m());
    let mut worst = (f64::NEG_INFINITY, 0usize, 0usize);
    let mut ok = true;
    for n in 0..=n_max {
        let p_lo = n.saturating_sub(w2.truncation());
        for p in p_lo..=n.min(w2.truncation()) {
            let rhs = b[p] + b[n - p];
            let d = a[n] - rhs;
            if d > worst.0 {
                worst = (d, p, n - p);
            }
            ok &= le_tol(a[n], rhs, REL_TOL);
        }
    }
    let mut v = ConditionVerdict::new("mixed-mg")
        .with_witness("C", 1.0)
        .with_witness("l", ell)
        .with_witness("max_log_excess", worst.0);
    v.argmax = vec![worst.1 as f64, worst.2 as f64];
    v.windows = vec![n_max as f64];
    Ok(if ok { v.exact_pass() } else { v.exact_fail() })
}

/// `l omega_{W^(l)} <= omega <= 2l omega_{W^(l)} + D_l` on a log grid, with the empirical
/// `D_l` and its window profile.
pub fn sandwich_check(view: &WeightMatrixView, ell: f64, cfg: &RunConfig) -> Result<ConditionVerdict> {
    let row = view.row(ell)?;
    let w_row = omega_of(&row)?;
    let u_hi = view.omega().u_max().min(w_row.u_max());
    let u_lo = 0.0f64.min(u_hi);
    let grid = cfg.grid.u_grid(u_lo, u_hi);
    let mut left_ok = true;
    let mut left_worst = f64::NEG_INFINITY;
    let mut d = Vec::with_capacity(grid.len());
    for &u in &grid {
        let om = view.omega().eval_u(u)?;
        let ow = w_row.eval_u(u)?;
        left_worst = left_worst.max(ell * ow - om);
        left_ok &= le_tol(ell * ow, om, REL_TOL);
        d.push(om - 2.0 * ell * ow);
    }
    let wp = cfg.ladder.profile(&d);
    let mut v = ConditionVerdict::new("sandwich").from_ladder(&cfg.ladder, &wp, &grid);
    v.witnesses.insert("l".into(), ell);
    v.witnesses.insert("D".into(), wp.max.max(0.0));
    v.witnesses.insert("left_max_excess".into(), left_worst);
    v.argmax = wp.argmax.map(|i| vec![grid[i]]).unwrap_or_default();
    if !left_ok {
        v = v.exact_fail().with_note("left inequality violated");
    }
    Ok(v)
}

/// Pointwise and quotient order of rows `l_1 < l_2 < ...`, checked on common indices.
pub fn order_check(view: &WeightMatrixView, ells: &[f64]) -> Result<ConditionVerdict> {
    let mut sorted = ells.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut ok = true;
    let mut first_fail = None;
    for w in sorted.windows(2) {
        let (r1, r2) = (view.row(w[0])?, view.row(w[1])?);
        let n = r1.truncation().min(r2.truncation());
        for p in 1..=n {
            let pointwise = le_tol(r1.log_m()[p], r2.log_m()[p], REL_TOL);
            let quotient = le_tol(r1.log_mu()[p], r2.log_mu()[p], REL_TOL);
            if !(pointwise && quotient) && first_fail.is_none() {
                first_fail = Some(vec![w[0], w[1], p as f64]);
            }
            ok &= pointwise && quotient;
        }
    }
    let mut v = ConditionVerdict::new("row-order");
    v.argmax = first_fail.unwrap_or_default();
    Ok(if ok { v.exact_pass() } else { v.exact_fail() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixRelationKind {
    /// For every x some y with `A^(x) ≼ B^(y)`.
    Roumieu,
    /// For every x some y with `A^(y) ≼ B^(x)`.
    Beurling,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeWitness {
    pub probe: f64,
    pub witness: Option<f64>,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixRelation {
    pub kind: MatrixRelationKind,
    pub holds: bool,
    pub entries: Vec<ProbeWitness>,
}

pub const DEFAULT_PROBES: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];

/// Probe-wise search for the matrix relation; the partner index runs over a doubling
/// ladder (upwards for Roumieu, downwards for Beurling) of at most six steps.
pub fn matrix_relate(
    a: &WeightMatrixView,
    b: &WeightMatrixView,
    kind: MatrixRelationKind,
    probes: &[f64],
    cfg: &RunConfig,
) -> Result<MatrixRelation> {
    let mut entries = Vec::with_capacity(probes.len());
    for &x in probes {
        let mut found = None;
        let mut last = Classification::Growing;
        for k in 0..=5 {
            let y = match kind {
                MatrixRelationKind::Roumieu => x * 2f64.powi(k),
                MatrixRelationKind::Beurling => x * 2f64.powi(-k),
            };
            let (lhs, rhs) = match kind {
                MatrixRelationKind::Roumieu => (a.row(x), b.row(y)),
                MatrixRelationKind::Beurling => (a.row(y), b.row(x)),
            };
            let (lhs, rhs) = match (lhs, rhs) {
                (Ok(l), Ok(r)) => (l, r),
                _ => continue,
            };
            let r = relate(&lhs, &rhs, RelationKind::Preceq, &cfg.ladder);
            last = r.classification;
            if r.holds {
                found = Some(y);
                break;
            }
        }
        entries.push(ProbeWitness {
            probe: x,
            witness: found,
            classification: last,
        });
    }
    Ok(MatrixRelation {
        kind,
        holds: entries.iter().all(|e| e.witness.is_some()),
        entries,
    })
}
