//! Run configuration shared by the checkers and the command line.

use serde::{Deserialize, Serialize};

use crate::seqcore::DEFAULT_TRUNCATION;
use crate::verdict::Ladder;

/// Log-spaced evaluation grid for weight-function checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub points_per_decade: usize,
    pub min_points: usize,
    pub max_points: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            points_per_decade: 40,
            min_points: 200,
            max_points: 20_000,
        }
    }
}

impl GridSpec {
    /// Grid in `u = log t` on `[u_lo, u_hi]`.
    pub fn u_grid(&self, u_lo: f64, u_hi: f64) -> Vec<f64> {
        if !(u_hi > u_lo) {
            return vec![u_lo];
        }
        let decades = (u_hi - u_lo) / std::f64::consts::LN_10;
        let n = ((decades * self.points_per_decade as f64).ceil() as usize + 1)
            .clamp(self.min_points, self.max_points);
        crate::num::linspace(u_lo, u_hi, n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub truncation: usize,
    pub grid: GridSpec,
    pub ladder: Ladder,
    pub d_max: usize,
    /// Constants are searched over `2^k`, `k = 0..=constant_ladder_max`.
    pub constant_ladder_max: u32,
    pub seed: u64,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            truncation: DEFAULT_TRUNCATION,
            grid: GridSpec::default(),
            ladder: Ladder::default(),
            d_max: 16,
            constant_ladder_max: 12,
            seed: 0,
            format: OutputFormat::Json,
        }
    }
}

impl RunConfig {
    pub fn with_truncation(mut self, p: usize) -> Self {
        self.truncation = p;
        self
    }

    /// The constant ladder `1, 2, 4, ..., 2^k`.
    pub fn constant_ladder(&self) -> impl Iterator<Item = f64> {
        (0..=self.constant_ladder_max).map(|k| 2f64.powi(k as i32))
    }
}
