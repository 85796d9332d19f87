//! Statements about the rows of an associated weight matrix.

use crate::conditions::{dilation_search, growth_index, GrowthIndexResult};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::matrix::{matrix_of, WeightMatrixView};
use crate::num::REL_TOL;
use crate::report::{given, Assertion, DirectionReport, Method, TheoremReport};
use crate::seqcore::{relate, LogSequence, RelationKind};
use crate::verdict::{Classification, ConditionVerdict};
use crate::weightfun::{omega_of, LogPL};

use super::common::*;
use super::ids;

fn index_text(g: Option<usize>) -> String {
    g.map_or_else(|| "none".to_string(), |d| d.to_string())
}

fn heuristic(id: &str, holds: bool) -> ConditionVerdict {
    let mut v = ConditionVerdict::new(id);
    v.holds = holds;
    v.classification = if holds { Classification::Plateau } else { Classification::Growing };
    v
}

fn index_premise(gi: &GrowthIndexResult, row: &str) -> Option<(usize, ConditionVerdict)> {
    let d = gi.g?;
    let v = gi.verdicts[d - 1].clone().with_note(format!("growth index of {row}"));
    Some((d, v))
}

/// The quotient-root bound passes from `W^(y)` to the coarser `W^(cy)` with the same
/// `A` and `d`.
fn coarsen(rep: &mut TheoremReport, view: &WeightMatrixView, y: f64, c: usize, cfg: &RunConfig) -> Result<()> {
    let cy = y * c as f64;
    let (fine, coarse) = (view.row(y)?, view.row(cy)?);
    let gi = growth_index(&fine, cfg.d_max, cfg);
    let label = format!("g(W^({y})) = d => genmg(W^({cy}), d)");
    let Some((d, prem)) = index_premise(&gi, &format!("W^({y})")) else {
        rep.note(format!("W^({y}) has no growth index up to d_max = {}", cfg.d_max));
        return Ok(());
    };
    let la = log_witness(&prem, "A");
    let top = (coarse.truncation() / d).min(fine.truncation() / (d * c));
    let lmu = coarse.log_mu();
    let concl = explicit(
        "genmg",
        (1..=top).map(|p| (lmu[p], la + coarse.log_root(d * p), [p as f64, f64::NAN])),
        REL_TOL,
    );
    rep.push(DirectionReport::new(
        label,
        Assertion::new(format!("mu_p <= A {}", root_term(&format!("W^({y})"), d)), Method::LadderSearch, prem),
        Assertion::new(format!("mu_p <= A {}", root_term(&format!("W^({cy})"), d)), Method::Exhaustive, concl),
        vec![format!("same d = {d}"), format!("same A = {}", la.exp())],
    ));
    Ok(())
}

/// The quotient-root bound passes from `W^(cy)` back to `W^(y)` at `4d`, with
/// `A_1 = A (W^(y)_{2dc})^(1/(2dc))`.
fn refine(rep: &mut TheoremReport, view: &WeightMatrixView, y: f64, c: usize, cfg: &RunConfig) -> Result<()> {
    let cy = y * c as f64;
    let (fine, coarse) = (view.row(y)?, view.row(cy)?);
    let gi = growth_index(&coarse, cfg.d_max, cfg);
    let label = format!("g(W^({cy})) = d => genmg(W^({y}), 4d)");
    let Some((d, prem)) = index_premise(&gi, &format!("W^({cy})")) else {
        rep.note(format!("W^({cy}) has no growth index up to d_max = {}", cfg.d_max));
        return Ok(());
    };
    let la = log_witness(&prem, "A");
    if 2 * d * c > fine.truncation() {
        rep.note(format!("{label}: index 2dc = {} exceeds the truncation of W^({y})", 2 * d * c));
        return Ok(());
    }
    let la1 = la + fine.log_root(2 * d * c);
    let lmu = fine.log_mu();
    let concl = explicit(
        "genmg",
        (1..=fine.truncation() / (4 * d))
            .filter(|&p| (p.div_ceil(c) + 1) * d <= coarse.truncation())
            .map(|p| (lmu[p], la1 + fine.log_root(4 * d * p), [p as f64, f64::NAN])),
        REL_TOL,
    );
    rep.push(DirectionReport::new(
        label,
        Assertion::new(format!("mu_p <= A {}", root_term(&format!("W^({cy})"), d)), Method::LadderSearch, prem),
        Assertion::new(format!("mu_p <= A_1 {}", root_term(&format!("W^({y})"), 4 * d)), Method::Exhaustive, concl),
        vec![
            format!("d' := 4d = {}", 4 * d),
            format!("A_1 := A (W^({y})_{{2dc}})^(1/(2dc)) = {}", la1.exp()),
        ],
    ));
    Ok(())
}

/// Growth index along a weight matrix: `g(W^(cx)) <= g(W^(x)) <= 4 g(W^(cx))` and
/// `g(W^(x)) <= g(W^(x/c)) <= 4 g(W^(x))` for integer `c >= 1`.
pub fn verify_row_growth_index(omega: &LogPL, x: f64, c: usize, cfg: &RunConfig) -> Result<TheoremReport> {
    if !(x > 0.0 && x.is_finite()) || c == 0 {
        return Err(Error::Parameter(format!("need x > 0 and integer c >= 1, got x = {x}, c = {c}")));
    }
    let mut rep = TheoremReport::new(ids::ROW_GROWTH_INDEX, vec![format!("weight function (u_max = {})", omega.u_max()), format!("x = {x}"), format!("c = {c}")]);
    let view = matrix_of(omega);
    let cf = c as f64;
    coarsen(&mut rep, &view, x, c, cfg)?;
    refine(&mut rep, &view, x, c, cfg)?;
    coarsen(&mut rep, &view, x / cf, c, cfg)?;
    refine(&mut rep, &view, x / cf, c, cfg)?;

    let gi = |ell: f64| -> Result<Option<usize>> { Ok(growth_index(&*view.row(ell)?, cfg.d_max, cfg).g) };
    let (g_x, g_cx, g_xc) = (gi(x)?, gi(x * cf)?, gi(x / cf)?);
    // A missing index means it exceeds d_max.
    let le = |a: Option<usize>, b: Option<usize>, k: usize| match (a, b) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(a), Some(b)) => a <= k * b,
    };
    let chain_cx = le(g_cx, g_x, 1) && le(g_x, g_cx, 4);
    let chain_xc = le(g_x, g_xc, 1) && le(g_xc, g_x, 4);
    let values = format!("g(W^({})) = {}, g(W^({x})) = {}, g(W^({})) = {}", x * cf, index_text(g_cx), index_text(g_x), x / cf, index_text(g_xc));
    rep.push(DirectionReport::new(
        "index chain for the coarser row",
        given("rows of one associated weight matrix"),
        Assertion::new("g(W^(cx)) <= g(W^(x)) <= 4 g(W^(cx))", Method::LadderSearch, heuristic("index-chain", chain_cx).with_note(values.clone())),
        vec![],
    ));
    rep.push(DirectionReport::new(
        "index chain for the finer row",
        given("rows of one associated weight matrix"),
        Assertion::new("g(W^(x)) <= g(W^(x/c)) <= 4 g(W^(x))", Method::LadderSearch, heuristic("index-chain", chain_xc).with_note(values)),
        vec![],
    ));
    if c == 1 {
        rep.note("c = 1: all three rows coincide");
    }
    Ok(rep)
}

/// `M <= C^p N` transfers to the associated matrices: `M^(x) <= C^p N^(x)` and
/// `M^(1/(2x)) <= C_x^p N^(1/x)` with `C_x = C M^(1/x)_{2x}`.
pub fn verify_sequence_order_transfer(m: &LogSequence, n: &LogSequence, cfg: &RunConfig) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new(ids::SEQUENCE_ORDER_TRANSFER, vec![describe(m), describe(n)]);
    let rel = relate(m, n, RelationKind::Preceq, &cfg.ladder);
    let prem = relation_verdict("preceq", &rel);
    let pc = m.truncation().min(n.truncation());
    let (lm, ln) = (m.log_m(), n.log_m());
    let log_c = (1..=pc).map(|p| (lm[p] - ln[p]) / p as f64).fold(0.0, f64::max);
    let (vm, vn) = (matrix_of(&omega_of(m)?), matrix_of(&omega_of(n)?));
    let stmt = "M_p <= C^p N_p";

    for x in [1usize, 2, 4] {
        let xf = x as f64;
        let (mx, nx) = (vm.row(xf)?, vn.row(xf)?);
        let top = mx.truncation().min(nx.truncation()).min(pc / x);
        let (a, b) = (mx.log_m(), nx.log_m());
        let concl = if prem.holds {
            explicit(
                "row-order",
                (1..=top).map(|p| (a[p], p as f64 * log_c + b[p], [p as f64, f64::NAN])),
                REL_TOL,
            )
        } else {
            skipped("row-order")
        };
        rep.push(DirectionReport::new(
            format!("same row x = {x}"),
            Assertion::new(stmt, Method::LadderSearch, prem.clone()),
            Assertion::new(format!("M^({x})_p <= C^p N^({x})_p"), Method::Exhaustive, concl),
            vec![format!("same C = {}", log_c.exp())],
        ));

        let (m_half, n_inv) = (vm.row(1.0 / (2.0 * xf))?, vn.row(1.0 / xf)?);
        let m_inv = vm.row(1.0 / xf)?;
        if 2 * x > m_inv.truncation() {
            continue;
        }
        let log_cx = log_c + m_inv.log_m()[2 * x];
        let top = m_half.truncation().min(n_inv.truncation()).min(x * pc);
        let (a, b) = (m_half.log_m(), n_inv.log_m());
        let concl = if prem.holds {
            explicit(
                "row-order-shifted",
                (1..=top).map(|p| (a[p], p as f64 * log_cx + b[p], [p as f64, f64::NAN])),
                REL_TOL,
            )
        } else {
            skipped("row-order-shifted")
        };
        rep.push(DirectionReport::new(
            format!("shifted rows x = {x}"),
            Assertion::new(stmt, Method::LadderSearch, prem.clone()),
            Assertion::new(format!("M^(1/{})_p <= C_x^p N^(1/{x})_p", 2 * x), Method::Exhaustive, concl),
            vec![format!("C_x := C M^(1/{x})_{{{}}} = {}", 2 * x, log_cx.exp())],
        ));
    }
    Ok(rep)
}

/// `sup (omega - 2l omega_{W^(l)})` on `[0, hi]`, clamped at 0.
fn row_gap(omega: &LogPL, row: &LogPL, ell: f64, hi: f64) -> f64 {
    pl_sup(0.0, hi, kinks_of(omega, 0.0, 1.0).chain(kinks_of(row, 0.0, 1.0)), |u| {
        ev(omega, u) - 2.0 * ell * ev(row, u)
    })
    .max(0.0)
}

/// Dilation differences between rows of the matrix and their relation to (omega_6).
pub fn verify_matrix_dilation(omega: &LogPL, probes: &[(f64, f64)], cfg: &RunConfig) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new(ids::MATRIX_DILATION, vec![format!("weight function (u_max = {})", omega.u_max()), format!("probes {probes:?}")]);
    let view = matrix_of(omega);
    let (om3, _) = dilation_search(omega, 3.0, "omega6", cfg);
    let stmt_om = "3 omega(t) <= omega(Ht) + C";
    let stmt_ii = "omega_{W^(l)}(t) <= a (omega_{W^(l1)}(Ht) - omega_{W^(l1)}(t)) + C";

    for &(ell, ell1) in probes {
        if !(ell > 0.0 && ell1 > 0.0) {
            return Err(Error::Parameter(format!("matrix indices must be > 0, got ({ell}, {ell1})")));
        }
        let (wl, wl1) = (omega_of(&*view.row(ell)?)?, omega_of(&*view.row(ell1)?)?);
        let concl = if om3.holds {
            let lh = om3.witness("H").unwrap_or(1.0).ln();
            let c_add = om3.witness("C").unwrap_or(0.0);
            let hi = (omega.u_max() - lh).min(wl.u_max()).min(wl1.u_max() - lh);
            let d1 = row_gap(omega, &wl1, ell1, hi + lh);
            let a = 2.0 * ell1 / ell;
            let add = (d1 + c_add) / ell;
            let base = cfg.grid.u_grid(0.0, hi.max(0.0));
            let pts = points(&base, hi, kinks_of(&wl, 0.0, 1.0).chain(kinks_of(&wl1, 0.0, 1.0)).chain(kinks_of(&wl1, lh, 1.0)));
            grid_check("row-dilation", &pts, |u| (ev(&wl, u), a * (ev(&wl1, u + lh) - ev(&wl1, u)) + add))
                .with_witness("D_l1", d1)
        } else {
            skipped("row-dilation")
        };
        rep.push(DirectionReport::new(
            format!("(omega_6) => row dilation at l = {ell}, l1 = {ell1}"),
            Assertion::new(stmt_om, Method::LadderSearch, om3.clone()),
            Assertion::new(stmt_ii, Method::Grid, concl),
            vec![format!("a := 2 l1 / l = {}", 2.0 * ell1 / ell), "same H".into(), "C := (D_l1 + C)/l".into()],
        ));
    }

    // (ii) with l = 1, a = 1, l1 = 4 (so l1 > l a) gives (5/2) omega(t) <= omega(Ht) + B.
    let (w1, w4) = (omega_of(&*view.row(1.0)?)?, omega_of(&*view.row(4.0)?)?);
    let base = cfg.grid.u_grid(0.0, w1.u_max().min(w4.u_max()).max(0.0));
    let s = Search {
        id: "row-dilation",
        constant: "H",
        base: &base,
        additive: true,
        u_hi: &|h| w1.u_max().min(w4.u_max() - h.ln()),
        kinks: &|h| kinks_of(&w1, 0.0, 1.0).chain(kinks_of(&w4, 0.0, 1.0)).chain(kinks_of(&w4, h.ln(), 1.0)).collect(),
        sides: &|h, u| (ev(&w1, u), ev(&w4, u + h.ln()) - ev(&w4, u)),
    }
    .run(cfg);
    let concl = if s.holds() {
        let lh = s.log_value();
        let hi = s.u_hi.min(omega.u_max() - lh);
        let d1 = row_gap(omega, &w1, 1.0, hi);
        let d4 = row_gap(omega, &w4, 4.0, hi);
        let b = 4.0 * s.additive + 2.0 * d1 + 0.5 * d4;
        let pts = points(&base, hi, kinks_of(omega, 0.0, 1.0).chain(kinks_of(omega, lh, 1.0)));
        grid_check("omega6", &pts, |u| (2.5 * ev(omega, u), ev(omega, u + lh) + b)).with_witness("B", b)
    } else {
        skipped("omega6")
    };
    rep.push(DirectionReport::new(
        "row dilation with l1 > l a => (omega_6)",
        Assertion::new("omega_{W^(1)}(t) <= omega_{W^(4)}(Ht) - omega_{W^(4)}(t) + C", Method::LadderSearch, s.verdict.clone()),
        Assertion::new("(5/2) omega(t) <= omega(Ht) + B", Method::Grid, concl),
        vec!["l = 1, a = 1, l1 = 4".into(), "same H".into(), "B := 4C + 2 D_1 + D_4 / 2".into()],
    ));

    let w1s = view.row(1.0)?;
    let w4s = view.row(4.0)?;
    let rel = relate(&w4s, &w1s.truncate(w4s.truncation().min(w1s.truncation()))?, RelationKind::Preceq, &cfg.ladder);
    let (om6, _) = dilation_search(omega, 2.0, "omega6", cfg);
    rep.push(DirectionReport::new(
        "W^(4) <= C^p W^(1) => (omega_6)",
        Assertion::new("W^(4)_p <= C^p W^(1)_p", Method::LadderSearch, relation_verdict("preceq", &rel)),
        Assertion::new("2 omega(t) <= omega(Ht) + H", Method::LadderSearch, om6),
        vec!["l1 = 4 > 2 l = 2".into()],
    ));

    // With l = l1 the difference on the right is nonnegative for every dilation.
    let hi = w1.u_max() - 1.0;
    let pts = points(&cfg.grid.u_grid(0.0, hi.max(0.0)), hi, kinks_of(&w1, 0.0, 1.0));
    let mono = grid_check("monotone-difference", &pts, |u| (0.0, ev(&w1, u + 1.0) - ev(&w1, u)));
    rep.push(DirectionReport::new(
        "equal indices",
        given("l = l1"),
        Assertion::new("omega_{W^(l)}(et) - omega_{W^(l)}(t) >= 0", Method::Structural, mono),
        vec![],
    ));
    Ok(rep)
}
