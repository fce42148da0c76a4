use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{verify, Check, Outcome, VerificationReport, VerifyOptions};
use crate::error::{Error, Result};
use crate::geometry::{format, Alignment, CellCollection};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusOptions {
    pub alignment: Alignment,
    /// Record failures and continue instead of stopping at the first one.
    pub keep_going: bool,
    /// Also evaluate the other alignment mode and record disagreements.
    pub audit_alignment: bool,
    /// Shapes handed to the worker pool at a time. Results are folded in input order.
    pub chunk: usize,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions { alignment: Alignment::Run, keep_going: false, audit_alignment: false, chunk: 4096 }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub total: usize,
    pub domino_stable: usize,
    pub palindromic: usize,
    /// Shapes with a nonempty residue that is not a full grid.
    pub non_grid: usize,
    pub checks: BTreeMap<Check, Tally>,
    pub failures: Vec<VerificationReport>,
    /// Grids of shapes whose stability depends on the alignment mode.
    pub alignment_disagreements: Vec<String>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, r: &VerificationReport) {
        self.total += 1;
        self.domino_stable += r.stable as usize;
        self.palindromic += r.palindromic as usize;
        self.non_grid += r.non_grid_residue as usize;
        for (check, outcome) in &r.checks {
            let t = self.checks.entry(*check).or_default();
            match outcome {
                Outcome::Pass => t.pass += 1,
                Outcome::Fail(_) => t.fail += 1,
                Outcome::Skipped(_) => t.skipped += 1,
            }
        }
        if !r.passed() {
            self.failures.push(r.clone());
        }
    }
}

pub fn verify_corpus<I>(shapes: I, opts: &CorpusOptions) -> Result<CorpusReport>
where
    I: IntoIterator<Item = CellCollection>,
{
    verify_corpus_with(shapes, opts, |_| {})
}

/// Like [`verify_corpus`], calling `on_report` for every shape in input order.
pub fn verify_corpus_with<I, F>(shapes: I, opts: &CorpusOptions, mut on_report: F) -> Result<CorpusReport>
where
    I: IntoIterator<Item = CellCollection>,
    F: FnMut(&VerificationReport),
{
    let vopts = VerifyOptions { alignment: opts.alignment };
    let other = match opts.alignment {
        Alignment::Run => Alignment::Coordinate,
        Alignment::Coordinate => Alignment::Run,
    };
    let mut report = CorpusReport::default();
    let mut shapes = shapes.into_iter();
    let chunk = opts.chunk.max(1);
    loop {
        let batch: Vec<CellCollection> = shapes.by_ref().take(chunk).collect();
        if batch.is_empty() {
            break;
        }
        let results: Vec<(VerificationReport, bool)> = batch
            .par_iter()
            .map(|p| {
                let r = verify(p, &vopts);
                let disagrees = opts.audit_alignment && p.domino_stability(other).stable != r.stable;
                (r, disagrees)
            })
            .collect();
        for ((r, disagrees), p) in results.into_iter().zip(&batch) {
            on_report(&r);
            report.absorb(&r);
            if disagrees {
                report.alignment_disagreements.push(format::to_grid(p));
            }
            if !r.passed() && !opts.keep_going {
                return Err(Error::CounterexampleFound { shape: format::to_grid(p), report: Box::new(r) });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_polyominoes;

    #[test]
    fn small_corpus_is_deterministic() {
        let run = |chunk| {
            let opts = CorpusOptions { chunk, keep_going: true, ..Default::default() };
            let mut ids = Vec::new();
            let r = verify_corpus_with(enumerate_polyominoes(5).unwrap(), &opts, |r| ids.push(r.id.clone())).unwrap();
            (r, ids)
        };
        let (a, ids_a) = run(3);
        let (b, ids_b) = run(4096);
        assert_eq!(a, b);
        assert_eq!(ids_a, ids_b);
        assert_eq!(a.total, 12);
        assert!(a.passed());
        assert_eq!(a.checks[&Check::Theorem].pass, 12);
    }
}
