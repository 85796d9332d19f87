//! Seeded generators of random normalized log-convex sequences.
//!
//! Two shapes are produced. Heavy-tailed increments give irregular, occasionally
//! explosive quotient growth. Spliced gaps give long runs of equal quotients broken by
//! large jumps, which is how q-Gevrey-like sequences defeat moderate growth.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, Pareto};

use crate::seqcore::LogSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    HeavyTail,
    GapSplice,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Log-quotient increments `scale * (Pareto(1, 1.5) - 1)`, scale drawn from `[0.01, 0.5]`.
pub fn heavy_tail<R: Rng + ?Sized>(rng: &mut R, p: usize) -> LogSequence {
    let scale = rng.gen_range(0.01..=0.5);
    let pareto = Pareto::new(1.0, 1.5).expect("valid Pareto parameters");
    let mut cur = rng.gen_range(0.0..2.0);
    let mu: Vec<f64> = (0..p)
        .map(|_| {
            let v = cur;
            cur += scale * (pareto.sample(rng) - 1.0);
            v
        })
        .collect();
    LogSequence::from_quotients(&mu).expect("nondecreasing nonnegative quotients")
}

/// Nearly flat runs of quotients separated by exponential jumps.
pub fn gap_splice<R: Rng + ?Sized>(rng: &mut R, p: usize) -> LogSequence {
    let jump_rate = rng.gen_range(0.02..0.3);
    let jump_size = rng.gen_range(0.2..3.0);
    let mut cur = rng.gen_range(0.0..1.0);
    let mu: Vec<f64> = (0..p)
        .map(|_| {
            let v = cur;
            cur += if rng.gen_bool(jump_rate) {
                let e: f64 = Exp1.sample(rng);
                jump_size * e
            } else {
                rng.gen_range(0.0..1e-3)
            };
            v
        })
        .collect();
    LogSequence::from_quotients(&mu).expect("nondecreasing nonnegative quotients")
}

pub fn generate<R: Rng + ?Sized>(rng: &mut R, p: usize, gen: Generator) -> LogSequence {
    match gen {
        Generator::HeavyTail => heavy_tail(rng, p),
        Generator::GapSplice => gap_splice(rng, p),
    }
}

/// `count` sequences of truncation `p`, alternating the two generators.
pub fn batch(seed: u64, count: usize, p: usize) -> Vec<LogSequence> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let g = if i % 2 == 0 {
                Generator::HeavyTail
            } else {
                Generator::GapSplice
            };
            generate(&mut r, p, g)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqcore::is_log_convex;

    #[test]
    fn batches_are_log_convex_normalized_and_reproducible() {
        let a = batch(7, 10, 256);
        for m in &a {
            assert!(is_log_convex(m).convex);
            assert!(m.is_normalized());
            assert_eq!(m.truncation(), 256);
        }
        let b = batch(7, 10, 256);
        assert!(a.iter().zip(&b).all(|(x, y)| x.log_m() == y.log_m()));
        assert_ne!(batch(8, 1, 256)[0].log_m(), a[0].log_m());
    }
}
