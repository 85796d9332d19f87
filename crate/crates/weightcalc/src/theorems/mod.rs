//! Verification harness: each check evaluates every implication direction of one result
//! on concrete inputs, using the constants the proof prescribes, and reports whether the
//! data are consistent with it.
//!
//! A direction can only report a violation when its premise and its failed conclusion
//! are both certified. Ladder-searched verdicts are evidence, not proof, so a failure
//! that rests on them makes the direction indeterminate.

mod closed;
mod common;
mod functions;
mod matrices;
mod sequences;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conditions::growth_index;
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::random;
use crate::report::{Status, TheoremReport};
use crate::seqcore::{power, LogSequence};
use crate::weightfun::omega_of;

pub use common::GRID_TOL;
pub use functions::{
    verify_genmg_omega, verify_product_transform, verify_product_transform_bounds, verify_self_convolution,
    verify_tilde_omega_bounds,
};
pub use matrices::{verify_matrix_dilation, verify_row_growth_index, verify_sequence_order_transfer};
pub use sequences::{
    verify_convolution_dilation, verify_counting_chain, verify_doubling_power_transfer, verify_doubling_quotient,
    verify_equivalence_invariance, verify_root_chain,
};

/// Report identifiers.
pub mod ids {
    pub const TILDE_OMEGA_BOUNDS: &str = "tilde-omega-bounds";
    pub const CONVOLUTION_DILATION: &str = "convolution-dilation";
    pub const DOUBLING_QUOTIENT: &str = "doubling-quotient";
    pub const COUNTING_CHAIN: &str = "counting-chain";
    pub const EQUIVALENCE_INVARIANCE: &str = "equivalence-invariance";
    pub const ROW_GROWTH_INDEX: &str = "row-growth-index";
    pub const SEQUENCE_ORDER_TRANSFER: &str = "sequence-order-transfer";
    pub const DOUBLING_POWER_TRANSFER: &str = "doubling-power-transfer";
    pub const PRODUCT_TRANSFORM: &str = "product-transform";
    pub const GENMG_OMEGA: &str = "genmg-omega";
    pub const PRODUCT_TRANSFORM_BOUNDS: &str = "product-transform-bounds";
    pub const SELF_CONVOLUTION: &str = "self-convolution";
    pub const ROOT_CHAIN: &str = "root-chain";
    pub const MATRIX_DILATION: &str = "matrix-dilation";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    TildeOmegaBounds,
    ConvolutionDilation,
    DoublingQuotient,
    CountingChain,
    EquivalenceInvariance,
    RowGrowthIndex,
    SequenceOrderTransfer,
    DoublingPowerTransfer,
    ProductTransform,
    GenmgOmega,
    ProductTransformBounds,
    SelfConvolution,
    RootChain,
    MatrixDilation,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::TildeOmegaBounds,
        TheoremId::ConvolutionDilation,
        TheoremId::DoublingQuotient,
        TheoremId::CountingChain,
        TheoremId::EquivalenceInvariance,
        TheoremId::RowGrowthIndex,
        TheoremId::SequenceOrderTransfer,
        TheoremId::DoublingPowerTransfer,
        TheoremId::ProductTransform,
        TheoremId::GenmgOmega,
        TheoremId::ProductTransformBounds,
        TheoremId::SelfConvolution,
        TheoremId::RootChain,
        TheoremId::MatrixDilation,
    ];

    pub fn as_str(self) -> &'static str {
        use TheoremId::*;
        match self {
            TildeOmegaBounds => ids::TILDE_OMEGA_BOUNDS,
            ConvolutionDilation => ids::CONVOLUTION_DILATION,
            DoublingQuotient => ids::DOUBLING_QUOTIENT,
            CountingChain => ids::COUNTING_CHAIN,
            EquivalenceInvariance => ids::EQUIVALENCE_INVARIANCE,
            RowGrowthIndex => ids::ROW_GROWTH_INDEX,
            SequenceOrderTransfer => ids::SEQUENCE_ORDER_TRANSFER,
            DoublingPowerTransfer => ids::DOUBLING_POWER_TRANSFER,
            ProductTransform => ids::PRODUCT_TRANSFORM,
            GenmgOmega => ids::GENMG_OMEGA,
            ProductTransformBounds => ids::PRODUCT_TRANSFORM_BOUNDS,
            SelfConvolution => ids::SELF_CONVOLUTION,
            RootChain => ids::ROOT_CHAIN,
            MatrixDilation => ids::MATRIX_DILATION,
        }
    }

    /// Number of sequence inputs the check consumes; missing ones default to the first.
    pub fn arity(self) -> usize {
        use TheoremId::*;
        match self {
            ProductTransform | ProductTransformBounds => 3,
            ConvolutionDilation | DoublingQuotient | CountingChain | EquivalenceInvariance | SequenceOrderTransfer
            | DoublingPowerTransfer => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = TheoremId::ALL.iter().map(|i| i.as_str()).collect();
                Error::Parameter(format!("unknown theorem id '{s}'; known: {}", known.join(", ")))
            })
    }
}

/// Scalar parameters of a check. Each check reads only the ones it needs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremParams {
    pub a: usize,
    pub d: usize,
    pub ell: f64,
    pub x: f64,
    pub c: usize,
    pub ells: Vec<usize>,
    pub probes: Vec<(f64, f64)>,
}

impl Default for TheoremParams {
    fn default() -> Self {
        TheoremParams {
            a: 2,
            d: 2,
            ell: 1.0,
            x: 1.0,
            c: 2,
            ells: vec![2, 3, 5],
            probes: vec![(1.0, 1.0), (1.0, 2.0), (2.0, 1.0), (1.0, 4.0)],
        }
    }
}

/// Run one check. Sequence inputs beyond those given default to the first; checks on a
/// weight function use the function associated with the first input.
pub fn run(id: TheoremId, inputs: &[LogSequence], params: &TheoremParams, cfg: &RunConfig) -> Result<TheoremReport> {
    use TheoremId::*;
    let first = inputs
        .first()
        .ok_or_else(|| Error::Parameter("at least one input sequence is required".into()))?;
    let get = |i: usize| inputs.get(i).unwrap_or(first);
    let (m, n, l) = (first, get(1), get(2));
    match id {
        TildeOmegaBounds => verify_tilde_omega_bounds(m, params.a, cfg),
        ConvolutionDilation => verify_convolution_dilation(m, n, params.a, cfg),
        DoublingQuotient => verify_doubling_quotient(m, n, params.a, cfg),
        CountingChain => verify_counting_chain(m, n, params.a, cfg),
        EquivalenceInvariance => verify_equivalence_invariance(m, n, cfg),
        RowGrowthIndex => verify_row_growth_index(&omega_of(m)?, params.x, params.c, cfg),
        SequenceOrderTransfer => verify_sequence_order_transfer(m, n, cfg),
        DoublingPowerTransfer => verify_doubling_power_transfer(m, n, params.ell, cfg),
        ProductTransform => verify_product_transform(m, n, l, params.a, cfg),
        GenmgOmega => verify_genmg_omega(m, params.d, cfg),
        ProductTransformBounds => verify_product_transform_bounds(m, n, l, params.a, cfg),
        SelfConvolution => verify_self_convolution(&omega_of(m)?, cfg),
        RootChain => verify_root_chain(m, &params.ells, cfg),
        MatrixDilation => verify_matrix_dilation(&omega_of(m)?, &params.probes, cfg),
    }
}

/// Root-chain bounds over a seeded batch of random log-convex sequences.
pub fn verify_root_chain_random(seed: u64, count: usize, p: usize, ells: &[usize]) -> TheoremReport {
    let mut rep = TheoremReport::new(ids::ROOT_CHAIN, vec![format!("{count} random sequences (P = {p})"), format!("l in {ells:?}")]);
    rep.seed = Some(seed);
    if ells.iter().any(|&l| l < 2) {
        rep.note("l < 2 skipped: the bounds are stated for l >= 2");
    }
    sequences::root_chain_batch(&mut rep, &random::batch(seed, count, p), ells);
    rep
}

type Job = Box<dyn Fn(&RunConfig) -> Result<TheoremReport> + Send + Sync>;

fn failed(id: TheoremId, inputs: Vec<String>, e: &Error) -> TheoremReport {
    let mut r = TheoremReport::new(id.as_str(), inputs);
    r.status = Status::Indeterminate;
    r.note(format!("check could not run: {e}"));
    r
}

/// The full suite on one family representative `M`, with companion inputs derived from
/// it (geometric rescalings and powers). Reports come back sorted by theorem id, with
/// the inputs as a tiebreak.
pub fn verify_all(m: &LogSequence, cfg: &RunConfig) -> Vec<TheoremReport> {
    use TheoremId::*;
    let scaled = |h: f64| m.scale_geometric(h.ln());
    let d = growth_index(m, cfg.d_max, cfg).g.unwrap_or(2);
    let mut jobs: Vec<(TheoremId, Vec<String>, Job)> = Vec::new();
    let mut add = |id: TheoremId, label: String, job: Job| jobs.push((id, vec![label], job));

    for a in [1usize, 2, 3] {
        let m = m.clone();
        add(TildeOmegaBounds, format!("a = {a}"), Box::new(move |c| verify_tilde_omega_bounds(&m, a, c)));
    }
    {
        let m = m.clone();
        add(ConvolutionDilation, "L = M, a = 1".into(), Box::new(move |c| verify_convolution_dilation(&m, &m, 1, c)));
    }
    for a in [1usize, 2] {
        let m = m.clone();
        add(DoublingQuotient, format!("L = M, a = {a}"), Box::new(move |c| verify_doubling_quotient(&m, &m, a, c)));
    }
    {
        let m = m.clone();
        add(CountingChain, "L = M, a = 1".into(), Box::new(move |c| verify_counting_chain(&m, &m, 1, c)));
    }
    if let Ok(n) = scaled(3.0) {
        let m = m.clone();
        add(EquivalenceInvariance, "N_p = 3^p M_p".into(), Box::new(move |c| verify_equivalence_invariance(&m, &n, c)));
    }
    {
        let m = m.clone();
        add(RowGrowthIndex, "x = 1, c = 2".into(), Box::new(move |c| verify_row_growth_index(&omega_of(&m)?, 1.0, 2, c)));
    }
    if let Ok(n) = scaled(2.0) {
        let m = m.clone();
        add(SequenceOrderTransfer, "N_p = 2^p M_p".into(), Box::new(move |c| verify_sequence_order_transfer(&m, &n, c)));
    }
    {
        let m = m.clone();
        add(DoublingPowerTransfer, "N = M, l = 1".into(), Box::new(move |c| verify_doubling_power_transfer(&m, &m, 1.0, c)));
    }
    if let Ok(sq) = power(m, 2.0) {
        let m = m.clone();
        add(DoublingPowerTransfer, "M^2 against M, l = 2".into(), Box::new(move |c| verify_doubling_power_transfer(&sq, &m, 2.0, c)));
    }
    for a in [1usize, 2 * d] {
        let m = m.clone();
        add(ProductTransform, format!("N = L = M, a = {a}"), Box::new(move |c| verify_product_transform(&m, &m, &m, a, c)));
    }
    let ds: &[usize] = if d == 1 { &[1] } else { &[1, d] };
    for &dd in ds {
        let m = m.clone();
        add(GenmgOmega, format!("d = {dd}"), Box::new(move |c| verify_genmg_omega(&m, dd, c)));
    }
    {
        let m = m.clone();
        add(ProductTransformBounds, format!("N = L = M, a = {d}"), Box::new(move |c| verify_product_transform_bounds(&m, &m, &m, d, c)));
    }
    {
        let m = m.clone();
        add(SelfConvolution, "omega_M".into(), Box::new(move |c| verify_self_convolution(&omega_of(&m)?, c)));
    }
    {
        let m = m.clone();
        add(RootChain, "l in [2, 3, 5]".into(), Box::new(move |c| verify_root_chain(&m, &[2, 3, 5], c)));
    }
    {
        let p = m.truncation().min(512);
        add(RootChain, "random batch".into(), Box::new(move |c| Ok(verify_root_chain_random(c.seed, 10, p, &[2, 3, 5]))));
    }
    {
        let m = m.clone();
        let probes = TheoremParams::default().probes;
        add(MatrixDilation, "omega_M".into(), Box::new(move |c| verify_matrix_dilation(&omega_of(&m)?, &probes, c)));
    }

    let mut out: Vec<(TheoremId, Vec<String>, TheoremReport)> = jobs
        .into_par_iter()
        .map(|(id, label, job)| {
            let rep = job(cfg).unwrap_or_else(|e| failed(id, label.clone(), &e));
            (id, label, rep)
        })
        .collect();
    out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    out.into_iter().map(|(_, _, r)| r).collect()
}

/// Combined status of a suite run.
pub fn suite_status(reports: &[TheoremReport]) -> Status {
    reports.iter().fold(Status::Consistent, |s, r| s.combine(r.status))
}
