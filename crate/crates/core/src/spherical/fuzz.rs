//! Empirical search for spherical tangles whose determinant is not a square.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::{serialize_tangle, TangleDiagram};
use crate::generate::{random_tangle, rng};
use crate::invariant::{compute_invariant, determinant};
use crate::scalar::is_perfect_square;

#[derive(Debug, Clone)]
pub struct FuzzSample {
    pub diagram: TangleDiagram,
    pub det: i64,
    pub is_square: bool,
}

#[derive(Debug, Clone, Default)]
pub struct FuzzReport {
    pub trials: usize,
    pub seed: u64,
    pub samples: Vec<FuzzSample>,
    /// Diagrams whose invariant could not be computed, with the error.
    pub failures: Vec<(TangleDiagram, String)>,
}

impl FuzzReport {
    pub fn squares(&self) -> usize {
        self.samples.iter().filter(|s| s.is_square).count()
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &FuzzSample> {
        self.samples.iter().filter(|s| !s.is_square)
    }

    /// `|det|` histogram of the samples.
    pub fn distribution(&self) -> BTreeMap<i64, usize> {
        let mut h = BTreeMap::new();
        for s in &self.samples {
            *h.entry(s.det).or_default() += 1;
        }
        h
    }
}

/// Evaluates `trials` random one-hole diagrams and records whether each
/// determinant is a perfect square. Nothing is asserted.
pub fn fuzz_det_square(trials: usize, max_crossings: usize, seed: u64) -> FuzzReport {
    let mut r = rng(seed);
    let mut report = FuzzReport {
        trials,
        seed,
        ..Default::default()
    };
    for _ in 0..trials {
        let d = random_tangle(&mut r, 1, max_crossings);
        match compute_invariant(&d)
            .map_err(|e| e.to_string())
            .and_then(|m| determinant(&m).map_err(|e| e.to_string()))
        {
            Ok(det) => report.samples.push(FuzzSample {
                is_square: is_perfect_square(det as i128),
                det,
                diagram: d,
            }),
            Err(e) => report.failures.push((d, e)),
        }
    }
    report
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "trials {} seed {}", self.trials, self.seed)?;
        writeln!(f, "perfect squares {}/{}", self.squares(), self.samples.len())?;
        if !self.failures.is_empty() {
            writeln!(f, "evaluation failures {}", self.failures.len())?;
        }
        write!(f, "det distribution")?;
        for (det, n) in self.distribution() {
            write!(f, " {det}:{n}")?;
        }
        writeln!(f)?;
        for s in self.counterexamples() {
            writeln!(f, "non-square det {}:", s.det)?;
            write!(f, "{}", serialize_tangle(&s.diagram))?;
        }
        Ok(())
    }
}
