use proptest::prelude::*;

use weightcalc::io::{parse_json, sequence_csv};
use weightcalc::matrix::matrix_of;
use weightcalc::random::{generate, rng, Generator};
use weightcalc::seqcore::{convolve_direct, convolve_merge, is_log_convex, power, tilde, LogSequence};
use weightcalc::weightfun::{omega_of, reconstruct, young_conjugate};

fn random_lc(seed: u64, p: usize, gap: bool) -> LogSequence {
    let gen = if gap { Generator::GapSplice } else { Generator::HeavyTail };
    generate(&mut rng(seed), p, gen)
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * 1f64.max(a.abs()).max(b.abs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quotient_round_trip_is_bitwise(seed in any::<u64>(), p in 1usize..300, gap in any::<bool>()) {
        let m = random_lc(seed, p, gap);
        let back = LogSequence::from_quotients(&m.log_mu()[1..]).unwrap();
        prop_assert_eq!(back.log_m(), m.log_m());
    }

    #[test]
    fn generated_sequences_are_normalized_and_log_convex(seed in any::<u64>(), p in 1usize..300, gap in any::<bool>()) {
        let m = random_lc(seed, p, gap);
        prop_assert!(is_log_convex(&m).convex);
        prop_assert!(m.is_normalized());
    }

    #[test]
    fn tilde_stays_log_convex(seed in any::<u64>(), p in 8usize..300, a in 1usize..=8, gap in any::<bool>()) {
        let m = random_lc(seed, p, gap);
        let t = tilde(&m, a).unwrap();
        prop_assert_eq!(t.truncation(), p / a);
        prop_assert!(is_log_convex(&t).convex);
        prop_assert!(t.is_normalized());
    }

    #[test]
    fn convolution_constructions_agree(s1 in any::<u64>(), s2 in any::<u64>(), p in 1usize..200) {
        let (m, n) = (random_lc(s1, p, false), random_lc(s2, p, true));
        let (d, q) = (convolve_direct(&m, &n), convolve_merge(&m, &n).unwrap());
        for (a, b) in d.log_m().iter().zip(q.log_m()) {
            prop_assert!(close(*a, *b), "{} vs {}", a, b);
        }
        let swapped = convolve_merge(&n, &m).unwrap();
        prop_assert_eq!(swapped.log_m(), q.log_m());
    }

    #[test]
    fn reconstruction_inverts_omega(seed in any::<u64>(), p in 1usize..300, gap in any::<bool>()) {
        let m = random_lc(seed, p, gap);
        let w = omega_of(&m).unwrap();
        for k in 0..=p {
            prop_assert!(close(reconstruct(&w, k).unwrap(), m.log_m()[k]));
        }
    }

    #[test]
    fn power_identity_holds(seed in any::<u64>(), p in 2usize..200, ell in 0.25f64..4.0) {
        let m = random_lc(seed, p, false);
        let wp = omega_of(&power(&m, ell).unwrap()).unwrap();
        let w = omega_of(&m).unwrap();
        for i in 0..50 {
            let u = wp.u_max() * i as f64 / 49.0;
            prop_assert!(close(wp.eval_u(u).unwrap(), ell * w.eval_u(u / ell).unwrap()));
        }
    }

    #[test]
    fn first_matrix_row_is_the_sequence(seed in any::<u64>(), p in 2usize..200, gap in any::<bool>()) {
        let m = random_lc(seed, p, gap);
        let view = matrix_of(&omega_of(&m).unwrap());
        let row = view.row(1.0).unwrap();
        prop_assert_eq!(row.truncation(), p);
        for k in 0..=p {
            prop_assert!(close(row.log_m()[k], m.log_m()[k]));
        }
        let conj = young_conjugate(view.omega());
        prop_assert_eq!(conj.eval(0.0).unwrap(), 0.0);
    }

    #[test]
    fn logs_spec_reproduces_the_sequence(seed in any::<u64>(), p in 1usize..100) {
        let m = random_lc(seed, p, true);
        let doc = serde_json::json!({ "kind": "logs", "params": { "log_m": m.log_m() } });
        let back = parse_json(&doc.to_string(), 4096).unwrap();
        prop_assert_eq!(back.log_m(), m.log_m());
        // Quotients are re-derived as differences of logs, so they agree up to rounding.
        for (a, b) in back.log_mu().iter().zip(m.log_mu()) {
            prop_assert!(close(*a, *b));
        }
        prop_assert_eq!(sequence_csv(&back).lines().count(), p + 2);
    }
}
