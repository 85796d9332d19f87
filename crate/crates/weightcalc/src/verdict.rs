//! Verdicts for asymptotic conditions checked on finite truncations.
//!
//! A truncation cannot decide a statement of the form "there is A such that for
//! all p". Profiles are summarized by their running supremum at a ladder of
//! window ends and classified as `plateau` (bounded evidence) or `growing`.
//! `exact` is reserved for verdicts certified by a closed form or by an explicit
//! constant checked over the whole truncation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Exact,
    Plateau,
    Growing,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Exact => "exact",
            Classification::Plateau => "plateau",
            Classification::Growing => "growing",
        }
    }
}

/// Window ladder and plateau thresholds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ladder {
    /// Window ends as fractions of the profile length, increasing, last = 1.
    pub fractions: Vec<f64>,
    /// Allowed relative change between consecutive window sups.
    pub eps_rel: f64,
    /// Allowed relative change between the last two window sups.
    pub eps_last: f64,
}

impl Default for Ladder {
    fn default() -> Self {
        Ladder {
            fractions: vec![0.125, 0.25, 0.5, 1.0],
            eps_rel: 0.05,
            eps_last: 0.01,
        }
    }
}

/// Running suprema of a profile at the ladder's window ends.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowProfile {
    /// Exclusive window ends (number of profile entries covered).
    pub ends: Vec<usize>,
    pub sups: Vec<f64>,
    /// Index of the overall maximum, `None` if no finite entry exists.
    pub argmax: Option<usize>,
    pub max: f64,
}

impl Ladder {
    pub fn window_ends(&self, n: usize) -> Vec<usize> {
        let mut ends: Vec<usize> = self
            .fractions
            .iter()
            .map(|f| ((f * n as f64).ceil() as usize).clamp(1.min(n), n))
            .collect();
        ends.dedup();
        ends
    }

    /// Running suprema of `values` at the window ends. Non-finite entries are skipped,
    /// except `+inf`, which counts.
    pub fn profile(&self, values: &[f64]) -> WindowProfile {
        self.profile_at(values, self.window_ends(values.len()))
    }

    /// Like [`Ladder::profile`] with caller-chosen window ends (increasing, each at most
    /// `values.len()`).
    pub fn profile_at(&self, values: &[f64], ends: Vec<usize>) -> WindowProfile {
        let mut sups = Vec::with_capacity(ends.len());
        let mut best = f64::NEG_INFINITY;
        let mut argmax = None;
        let mut i = 0;
        for &end in &ends {
            while i < end {
                let v = values[i];
                if !v.is_nan() && v > best {
                    best = v;
                    argmax = Some(i);
                }
                i += 1;
            }
            sups.push(best);
        }
        WindowProfile {
            ends,
            sups,
            argmax,
            max: best,
        }
    }

    /// Plateau when consecutive sups change by at most `eps_rel` and the last two
    /// by at most `eps_last`, both relative to `max(|s|, 1)`.
    pub fn classify(&self, sups: &[f64]) -> Classification {
        if sups.contains(&f64::INFINITY) {
            return Classification::Growing;
        }
        let finite: Vec<f64> = sups.iter().copied().filter(|s| s.is_finite()).collect();
        if finite.len() < 2 {
            return Classification::Plateau;
        }
        let last = finite.len() - 2;
        for (k, w) in finite.windows(2).enumerate() {
            let denom = w[0].abs().max(1.0);
            let change = (w[1] - w[0]).abs() / denom;
            let eps = if k == last {
                self.eps_last.min(self.eps_rel)
            } else {
                self.eps_rel
            };
            if change > eps {
                return Classification::Growing;
            }
        }
        Classification::Plateau
    }
}

/// Outcome of one condition check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionVerdict {
    pub condition: String,
    pub holds: bool,
    /// True when the verdict does not rest on the ladder heuristic.
    pub certified: bool,
    pub classification: Classification,
    /// Witness constants by name (A, B, C, H, L, a, d, ...).
    pub witnesses: BTreeMap<String, f64>,
    /// Running sup of the profile at each window end.
    pub profile: Vec<f64>,
    /// Window ends, in the profile's own index (p, p+q, or u = log t).
    pub windows: Vec<f64>,
    /// Argument(s) where the maximal ratio was attained.
    pub argmax: Vec<f64>,
    pub note: Option<String>,
}

impl ConditionVerdict {
    pub fn new(condition: impl Into<String>) -> Self {
        ConditionVerdict {
            condition: condition.into(),
            holds: false,
            certified: false,
            classification: Classification::Growing,
            witnesses: BTreeMap::new(),
            profile: Vec::new(),
            windows: Vec::new(),
            argmax: Vec::new(),
            note: None,
        }
    }

    pub fn with_witness(mut self, name: &str, value: f64) -> Self {
        self.witnesses.insert(name.to_string(), value);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Certified pass.
    pub fn exact_pass(mut self) -> Self {
        self.holds = true;
        self.certified = true;
        self.classification = Classification::Exact;
        self
    }

    /// Certified failure.
    pub fn exact_fail(mut self) -> Self {
        self.holds = false;
        self.certified = true;
        self.classification = Classification::Growing;
        self
    }

    /// Fill profile data and a heuristic classification from a window profile.
    pub fn from_ladder(mut self, ladder: &Ladder, wp: &WindowProfile, window_coord: &[f64]) -> Self {
        self.classification = ladder.classify(&wp.sups);
        self.holds = self.classification != Classification::Growing;
        self.certified = false;
        self.profile = wp.sups.clone();
        self.windows = wp.ends.iter().map(|&e| window_coord[e - 1]).collect();
        self
    }

    pub fn witness(&self, name: &str) -> Option<f64> {
        self.witnesses.get(name).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_ends_follow_fractions() {
        let l = Ladder::default();
        assert_eq!(l.window_ends(4096), vec![512, 1024, 2048, 4096]);
        assert_eq!(l.window_ends(3), vec![1, 2, 3]);
    }

    #[test]
    fn constant_profile_is_plateau() {
        let l = Ladder::default();
        let wp = l.profile(&vec![-0.5; 100]);
        assert_eq!(l.classify(&wp.sups), Classification::Plateau);
        assert_eq!(wp.argmax, Some(0));
    }

    #[test]
    fn linear_profile_is_growing() {
        let l = Ladder::default();
        let v: Vec<f64> = (0..4096).map(|p| p as f64 * 0.01).collect();
        let wp = l.profile(&v);
        assert_eq!(l.classify(&wp.sups), Classification::Growing);
        assert_eq!(wp.argmax, Some(4095));
    }

    #[test]
    fn slow_convergence_to_limit_is_plateau() {
        // 1 - 1/p approaches its limit quickly enough at the last windows.
        let l = Ladder::default();
        let v: Vec<f64> = (1..=4096).map(|p| 1.0 - 1.0 / p as f64).collect();
        assert_eq!(l.classify(&l.profile(&v).sups), Classification::Plateau);
    }

    #[test]
    fn log_growth_is_growing() {
        let l = Ladder::default();
        let v: Vec<f64> = (1..=4096).map(|p| (p as f64).ln()).collect();
        assert_eq!(l.classify(&l.profile(&v).sups), Classification::Growing);
    }
}
