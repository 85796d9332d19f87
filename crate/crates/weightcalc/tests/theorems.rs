use weightcalc::config::RunConfig;
use weightcalc::report::{Status, TheoremReport};
use weightcalc::seqcore::{power, LogSequence};
use weightcalc::theorems::*;
use weightcalc::verdict::Classification;
use weightcalc::weightfun::omega_of;

fn cfg() -> RunConfig {
    RunConfig::default()
}

fn gevrey(p: usize) -> LogSequence {
    LogSequence::gevrey(1.0, p).unwrap()
}

fn qgevrey(p: usize) -> LogSequence {
    LogSequence::qgevrey(2.0, p).unwrap()
}

fn dir<'a>(r: &'a TheoremReport, label: &str) -> &'a weightcalc::report::DirectionReport {
    r.direction(label)
        .unwrap_or_else(|| panic!("no direction '{label}' in {}: {:?}", r.theorem, r.directions.iter().map(|d| &d.label).collect::<Vec<_>>()))
}

/// Premise and conclusion both evaluated and both hold.
fn both_hold(r: &TheoremReport, label: &str) {
    let d = dir(r, label);
    assert!(d.premise.verdict.holds, "{label}: premise {:?}", d.premise.verdict);
    assert!(d.conclusion.verdict.holds, "{label}: conclusion {:?}", d.conclusion.verdict);
}

fn no_violation(r: &TheoremReport) {
    for d in &r.directions {
        assert_ne!(d.status, Status::ViolationFound, "{}: {} {:?}", r.theorem, d.label, d.conclusion.verdict);
    }
}

#[test]
fn tilde_bounds_examples() {
    let c = cfg();
    let r = verify_tilde_omega_bounds(&gevrey(1024), 2, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    let up = dir(&r, "upper bound");
    assert!(up.conclusion.verdict.holds && up.conclusion.verdict.certified);
    let lo = dir(&r, "lower bound");
    assert!(lo.conclusion.verdict.holds);
    assert_eq!(lo.conclusion.verdict.classification, Classification::Plateau);
    assert!(lo.conclusion.verdict.witness("D").unwrap().is_finite());

    let r = verify_tilde_omega_bounds(&gevrey(256), 1, &c).unwrap();
    let lo = dir(&r, "lower bound");
    assert_eq!(lo.conclusion.verdict.witness("D"), Some(0.0));
    assert_eq!(lo.conclusion.verdict.classification, Classification::Exact);

    let r = verify_tilde_omega_bounds(&qgevrey(1024), 3, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
}

#[test]
fn convolution_dilation_examples() {
    let c = cfg();
    let m = gevrey(512);
    let r = verify_convolution_dilation(&m, &m, 1, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    for label in ["(i) => (ii)", "(ii) => (i)", "(i) => (iii)", "(iii) => (i)"] {
        both_hold(&r, label);
    }
    let q = qgevrey(512);
    let r = verify_convolution_dilation(&q, &q, 1, &c).unwrap();
    let third = &dir(&r, "(iii) => (i)").premise.verdict;
    assert!(!third.holds && third.certified);
    assert_eq!(third.classification, Classification::Growing);
    assert_eq!(third.note.as_deref(), Some("closed form"));
    no_violation(&r);

    let q4 = LogSequence::qgevrey(4.0, 512).unwrap();
    no_violation(&verify_convolution_dilation(&q4, &q, 1, &c).unwrap());
}

#[test]
fn doubling_quotient_examples() {
    let c = cfg();
    let q = qgevrey(512);
    let r = verify_doubling_quotient(&q, &q, 2, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    both_hold(&r, "(iii) => (i) at 2a");
    let m = gevrey(512);
    let r = verify_doubling_quotient(&m, &m, 1, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    for label in ["(i) => (ii)", "(ii) => (i)", "(i) => (iii)", "(iii) => (i) at 2a"] {
        both_hold(&r, label);
    }
    // At a = 3 the doubling bound holds for q = 2, so the quotient-root form holds at a = 3.
    let r = verify_doubling_quotient(&q, &q, 3, &c).unwrap();
    both_hold(&r, "(i) => (iii)");
}

#[test]
fn counting_chain_examples() {
    let c = cfg();
    for m in [qgevrey(512), gevrey(512)] {
        let r = verify_counting_chain(&m, &m, 1, &c).unwrap();
        assert_eq!(r.status, Status::Consistent, "{r:?}");
        for label in ["(ii) => (iii)", "(iii) => (ii)", "(iii) => (iv)", "(iv) => (v)", "(v) => (vi)"] {
            both_hold(&r, label);
        }
    }
    // g(L) = 2 and the doubling square at b = 2 give the quotient-root form at a = 4.
    let q = qgevrey(1024);
    let r = verify_counting_chain(&q, &q, 1, &c).unwrap();
    let pc = dir(&r, "partial converse");
    assert!(pc.correspondence.iter().any(|s| s.contains("a' := d b = 4")), "{:?}", pc.correspondence);
    both_hold(&r, "partial converse");
    assert!(pc.conclusion.verdict.certified);
}

#[test]
fn equivalence_invariance_examples() {
    let c = cfg();
    let q = qgevrey(1024);
    let n = q.scale_geometric(3f64.ln()).unwrap();
    let r = verify_equivalence_invariance(&q, &n, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    both_hold(&r, "quotient-root preserved at 2a");
    both_hold(&r, "growth index bound");

    let r = verify_equivalence_invariance(&q, &q, &c).unwrap();
    both_hold(&r, "quotient-root preserved at 2a");

    let m = gevrey(1024);
    let n = m.scale_geometric(2f64.ln()).unwrap();
    let r = verify_equivalence_invariance(&m, &n, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    let g = dir(&r, "growth index bound");
    assert!(g.correspondence.iter().any(|s| s == "g(N) = 1"), "{:?}", g.correspondence);
}

#[test]
fn row_growth_index_examples() {
    let c = cfg();
    let w = omega_of(&qgevrey(1024)).unwrap();
    let r = verify_row_growth_index(&w, 1.0, 2, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    assert!(dir(&r, "index chain for the coarser row").conclusion.verdict.holds);
    assert!(dir(&r, "index chain for the finer row").conclusion.verdict.holds);

    let r = verify_row_growth_index(&w, 1.0, 1, &c).unwrap();
    let note = dir(&r, "index chain for the coarser row").conclusion.verdict.note.clone().unwrap();
    assert!(note.contains("g(W^(1)) = 2, g(W^(1)) = 2, g(W^(1)) = 2"), "{note}");

    let w = omega_of(&gevrey(2048)).unwrap();
    let r = verify_row_growth_index(&w, 1.0, 3, &c).unwrap();
    let note = dir(&r, "index chain for the coarser row").conclusion.verdict.note.clone().unwrap();
    assert_eq!(note, "g(W^(3)) = 1, g(W^(1)) = 1, g(W^(0.3333333333333333)) = 1");
    assert_eq!(r.status, Status::Consistent);
}

#[test]
fn sequence_order_transfer_examples() {
    let c = cfg();
    let m = gevrey(512);
    let n = m.scale_geometric(2f64.ln()).unwrap();
    let r = verify_sequence_order_transfer(&m, &n, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    for x in [1, 2, 4] {
        both_hold(&r, &format!("same row x = {x}"));
        both_hold(&r, &format!("shifted rows x = {x}"));
    }
    let r = verify_sequence_order_transfer(&m, &m, &c).unwrap();
    assert_eq!(dir(&r, "same row x = 1").correspondence, vec!["same C = 1".to_string()]);
    both_hold(&r, "same row x = 2");

    let q = qgevrey(512);
    let n = q.scale_geometric(3f64.ln()).unwrap();
    let r = verify_sequence_order_transfer(&q, &n, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    both_hold(&r, "shifted rows x = 4");
}

#[test]
fn doubling_power_transfer_examples() {
    let c = cfg();
    let m = gevrey(512);
    let sq = power(&m, 2.0).unwrap();
    let r = verify_doubling_power_transfer(&sq, &m, 2.0, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    both_hold(&r, "(i) => (ii)");
    both_hold(&r, "(ii) => (i)");
    assert!(dir(&r, "(ii) => (i)").premise.verdict.certified);

    let r = verify_doubling_power_transfer(&m, &m, 1.0, &c).unwrap();
    both_hold(&r, "(ii) => (i)");
    // With the squared sequence on the left and l = 1 the sequence bound cannot hold.
    let r = verify_doubling_power_transfer(&sq, &m, 1.0, &c).unwrap();
    let p = &dir(&r, "(ii) => (i)").premise.verdict;
    assert!(!p.holds && p.certified);
    assert!(verify_doubling_power_transfer(&m, &m, 0.0, &c).is_err());
}

#[test]
fn product_transform_examples() {
    let c = cfg();
    let q = qgevrey(1024);
    let r = verify_product_transform(&q, &q, &q, 4, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    both_hold(&r, "(i) => (ii)");
    both_hold(&r, "(ii) => (i)");
    both_hold(&r, "(ii) at a => (ii) at 2a");
    let m = gevrey(1024);
    let r = verify_product_transform(&m, &m, &m, 2, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    both_hold(&r, "product weight identity");
}

#[test]
fn genmg_omega_examples() {
    let c = cfg();
    let q = qgevrey(1024);
    let r = verify_genmg_omega(&q, 2, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    both_hold(&r, "quotient-root => square transform");
    both_hold(&r, "square transform at a = 4 => quotient-root");
    let a1 = &dir(&r, "square transform at a = 1 => (omega_6)").premise.verdict;
    assert!(!a1.holds);
    assert_eq!(a1.classification, Classification::Growing);
    both_hold(&r, "product weight identity");

    let m = gevrey(1024);
    let r = verify_genmg_omega(&m, 1, &c).unwrap();
    let a1 = &dir(&r, "square transform at a = 1 => (omega_6)").premise.verdict;
    assert!(a1.holds);
    assert_eq!(a1.classification, Classification::Plateau);
}

#[test]
fn product_transform_bounds_examples() {
    let c = cfg();
    let (m, q) = (gevrey(512), qgevrey(512));
    for (x, y, z) in [(&m, &m, &m), (&q, &q, &q), (&m, &q, &q)] {
        no_violation(&verify_product_transform_bounds(x, y, z, 2, &c).unwrap());
    }
    let r = verify_product_transform_bounds(&m, &m, &m, 1, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    assert!(!r.notes.is_empty());
}

#[test]
fn self_convolution_examples() {
    let c = cfg();
    let r = verify_self_convolution(&omega_of(&gevrey(4096)).unwrap(), &c).unwrap();
    assert_eq!(r.status, Status::Consistent, "{r:?}");
    for label in ["self-convolution => (omega_6)", "self-convolution doubling => (omega_1)"] {
        both_hold(&r, label);
    }
    both_hold(&r, "normalization");

    let r = verify_self_convolution(&omega_of(&qgevrey(1024)).unwrap(), &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    let d = dir(&r, "self-convolution => (omega_6)");
    assert!(!d.premise.verdict.holds && !d.conclusion.verdict.holds);
    both_hold(&r, "self-convolution doubling => (omega_1)");
    both_hold(&r, "(omega_1) => self-convolution doubling");
}

#[test]
fn root_chain_examples() {
    let c = cfg();
    let r = verify_root_chain(&gevrey(512), &[2], &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    let d = dir(&r, "root chain at l = 2");
    assert!(d.conclusion.verdict.holds && d.conclusion.verdict.certified);
    assert_eq!(d.conclusion.verdict.classification, Classification::Exact);

    let r = verify_root_chain_random(11, 50, 512, &[2, 3, 5]);
    assert_eq!(r.seed, Some(11));
    assert_eq!(r.status, Status::Consistent);
    for l in [2, 3, 5] {
        for label in [format!("root chain at l = {l}"), format!("power root chain at l = {l}")] {
            both_hold(&r, &label);
        }
    }
    let r = verify_root_chain(&gevrey(64), &[1], &c).unwrap();
    assert!(r.direction("root chain at l = 1").is_none());
}

#[test]
fn matrix_dilation_examples() {
    let c = cfg();
    let probes = [(1.0, 1.0), (1.0, 2.0), (2.0, 1.0)];
    let r = verify_matrix_dilation(&omega_of(&gevrey(4096)).unwrap(), &probes, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    for (l, l1) in probes {
        both_hold(&r, &format!("(omega_6) => row dilation at l = {l}, l1 = {l1}"));
    }
    both_hold(&r, "row dilation with l1 > l a => (omega_6)");
    both_hold(&r, "equal indices");

    let r = verify_matrix_dilation(&omega_of(&qgevrey(1024)).unwrap(), &probes, &c).unwrap();
    assert_eq!(r.status, Status::Consistent);
    assert!(!dir(&r, "(omega_6) => row dilation at l = 1, l1 = 1").premise.verdict.holds);
    assert!(!dir(&r, "row dilation with l1 > l a => (omega_6)").premise.verdict.holds);
}

#[test]
fn theorem_ids_round_trip() {
    for id in TheoremId::ALL {
        assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
    }
    assert!("nope".parse::<TheoremId>().is_err());
    let r = run(TheoremId::RootChain, &[gevrey(64)], &TheoremParams::default(), &cfg()).unwrap();
    assert_eq!(r.theorem, "root-chain");
    assert!(run(TheoremId::RootChain, &[], &TheoremParams::default(), &cfg()).is_err());
}

#[test]
fn suite_never_reports_a_violation_on_family_members() {
    let c = cfg();
    let members = [
        LogSequence::gevrey(1.0, 512).unwrap(),
        LogSequence::gevrey(2.0, 512).unwrap(),
        LogSequence::gevrey(3.0, 512).unwrap(),
        LogSequence::qgevrey(1.5, 512).unwrap(),
        LogSequence::qgevrey(2.0, 512).unwrap(),
        LogSequence::qgevrey(4.0, 512).unwrap(),
    ];
    for m in &members {
        let reps = verify_all(m, &c);
        assert_ne!(suite_status(&reps), Status::ViolationFound);
        for r in &reps {
            no_violation(r);
            assert!(!r.notes.iter().any(|n| n.starts_with("check could not run")), "{}: {:?}", r.theorem, r.notes);
        }
    }
}

#[test]
fn suite_is_deterministic() {
    let c = cfg();
    let a = serde_json::to_string(&verify_all(&qgevrey(256), &c)).unwrap();
    let b = serde_json::to_string(&verify_all(&qgevrey(256), &c)).unwrap();
    assert_eq!(a, b);
}
