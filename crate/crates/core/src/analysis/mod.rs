//! Palindromicity and the verification harness.
//!
//! [`verify`] computes the switching rook polynomial and the domino-stability
//! of one collection and checks every structural consequence that applies to
//! it. [`verify_corpus`] runs it over a stream of shapes on a worker pool.

mod corpus;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::enumerate::canonical_form;
use crate::geometry::{format, Alignment, Cell, CellCollection, Decomposition, RunKind, Witness};
use crate::rook::{canonicalize, configs, switch_classes, switching_polynomial, RookConfig, SwitchingPolynomial};

pub use corpus::{verify_corpus, verify_corpus_with, CorpusOptions, CorpusReport, Tally};

pub fn is_palindromic(p: &SwitchingPolynomial) -> bool {
    p.is_palindromic()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Palindromic exactly when domino-stable.
    Theorem,
    /// Domino-stable: a single class of maximum configurations.
    TopClassUnique,
    /// Domino-stable: the rook number is the sum of the stable square sides.
    RookNumberFormula,
    /// Single top class but not domino-stable: `r~_1 < r~_{d-1}`.
    StrictInequality,
    /// Single top class: every row and column run carries a top rook.
    CoverageLemma,
    /// Single top class: each free cell is attacked by exactly two top rooks.
    AttackPair,
    /// Some maximal rectangle has a nonempty residue.
    ResidueExistence,
    /// Domino-stable: cells of a rectangle outside its nonempty residue see
    /// exactly one residue along their row and one, different, along their column.
    ResidueAlignment,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Theorem,
        Check::TopClassUnique,
        Check::RookNumberFormula,
        Check::StrictInequality,
        Check::CoverageLemma,
        Check::AttackPair,
        Check::ResidueExistence,
        Check::ResidueAlignment,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem => "theorem",
            Check::TopClassUnique => "top_class_unique",
            Check::RookNumberFormula => "rook_number_formula",
            Check::StrictInequality => "strict_inequality",
            Check::CoverageLemma => "coverage_lemma",
            Check::AttackPair => "attack_pair",
            Check::ResidueExistence => "residue_existence",
            Check::ResidueAlignment => "residue_alignment",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Outcome {
    fn from_bool(ok: bool, reason: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(reason())
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub alignment: Alignment,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    /// Hash of the canonical form, 16 hex digits.
    pub id: String,
    pub rank: usize,
    pub poly: SwitchingPolynomial,
    pub stable: bool,
    pub palindromic: bool,
    pub checks: BTreeMap<Check, Outcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Some nonempty residue is not a full grid of rows and columns.
    pub non_grid_residue: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        !self.checks.values().any(Outcome::is_fail)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = Check> + '_ {
        self.checks.iter().filter(|(_, o)| o.is_fail()).map(|(c, _)| *c)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Stable identifier of a shape's symmetry class.
pub fn shape_id(p: &CellCollection) -> String {
    let mut hasher = Sha256::new();
    for c in canonical_form(p).cells() {
        hasher.update(c.x.to_le_bytes());
        hasher.update(c.y.to_le_bytes());
    }
    hasher.finalize()[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Rooks on the cells glued to the diagonal of each square residue.
fn diagonal_rooks(d: &Decomposition) -> Option<RookConfig> {
    let mut cells = Vec::new();
    for sq in d.stable_squares() {
        let g = sq.gluing.filter(|g| g.is_square())?;
        cells.extend((1..=g.width()).filter_map(|t| g.from_glued(t, t)));
    }
    Some(RookConfig::new(cells))
}

fn attackers(p: &CellCollection, top: &RookConfig, c: Cell) -> usize {
    let idx = p.index_of(c).expect("cell in collection");
    top.cells()
        .iter()
        .filter(|&&t| {
            let ti = p.index_of(t).expect("rook in collection");
            ti != idx && (p.h_run_of(ti) == p.h_run_of(idx) || p.v_run_of(ti) == p.v_run_of(idx))
        })
        .count()
}

fn residue_alignment(p: &CellCollection, d: &Decomposition, mode: Alignment) -> Outcome {
    for (rect, res) in d.rects.iter().zip(&d.residues) {
        if res.is_empty() {
            continue;
        }
        for c in rect.cells() {
            if res.cells.binary_search(&c).is_ok() {
                continue;
            }
            let h = d.aligned_residues(p, c, RunKind::Horizontal, mode);
            let v = d.aligned_residues(p, c, RunKind::Vertical, mode);
            if h.len() != 1 || v.len() != 1 || h == v {
                return Outcome::Fail(format!("cell {c} sees residues {h:?} / {v:?}"));
            }
        }
    }
    Outcome::Pass
}

/// Runs every applicable check on `p`. Failures are reported, never raised.
pub fn verify(p: &CellCollection, opts: &VerifyOptions) -> VerificationReport {
    let decomposition = p.decomposition();
    let stability = decomposition.domino_stability(p, opts.alignment);
    let stable = stability.stable;
    let poly = switching_polynomial(p);
    let palindromic = poly.is_palindromic();
    let d = poly.degree();
    let single_top = poly.leading() == 1;
    let mut checks = BTreeMap::new();

    checks.insert(
        Check::Theorem,
        Outcome::from_bool(palindromic == stable, || {
            format!("polynomial {poly} palindromic={palindromic} but domino_stable={stable}")
        }),
    );

    let nonempty = decomposition.residues.iter().filter(|r| !r.is_empty()).count();
    checks.insert(
        Check::ResidueExistence,
        Outcome::from_bool(nonempty > 0, || "every residue is empty".into()),
    );

    if stable {
        checks.insert(
            Check::TopClassUnique,
            Outcome::from_bool(single_top, || format!("{} classes of {d}-configurations", poly.leading())),
        );
        let formula = match diagonal_rooks(&decomposition) {
            Some(top) if top.len() == d && crate::rook::is_valid(p, &top) => Outcome::Pass,
            Some(top) => Outcome::Fail(format!("stable squares give {} rooks, rook number is {d}", top.len())),
            None => Outcome::Fail("a nonempty residue does not glue to a square".into()),
        };
        checks.insert(Check::RookNumberFormula, formula);
        checks.insert(Check::ResidueAlignment, residue_alignment(p, &decomposition, opts.alignment));
    } else {
        for c in [Check::TopClassUnique, Check::RookNumberFormula, Check::ResidueAlignment] {
            checks.insert(c, Outcome::Skipped("not domino-stable".into()));
        }
    }

    let strict = if stable {
        Outcome::Skipped("domino-stable".into())
    } else if !single_top {
        Outcome::Skipped(format!("{} top classes", poly.leading()))
    } else {
        let (r1, rd1) = (poly.coeff(1), poly.coeff(d - 1));
        Outcome::from_bool(r1 < rd1, || format!("r~_1 = {r1} is not below r~_(d-1) = {rd1}"))
    };
    checks.insert(Check::StrictInequality, strict);

    if single_top {
        let (coverage, attack) = top_class_checks(p, d);
        checks.insert(Check::CoverageLemma, coverage);
        checks.insert(Check::AttackPair, attack);
    } else {
        for c in [Check::CoverageLemma, Check::AttackPair] {
            checks.insert(c, Outcome::Skipped(format!("{} top classes", poly.leading())));
        }
    }

    let non_grid_residue = decomposition.residues.iter().any(|r| !r.is_empty() && !r.is_grid);
    let mut report = VerificationReport {
        id: shape_id(p),
        rank: p.rank(),
        poly,
        stable,
        palindromic,
        checks,
        witness: stability.witness,
        non_grid_residue,
        counterexample: None,
    };
    if !report.passed() {
        report.counterexample = Some(format::to_grid(p));
    }
    report
}

fn top_class_checks(p: &CellCollection, d: usize) -> (Outcome, Outcome) {
    let first = configs(p, d).expect("d is the rook number").next().expect("some maximum configuration");
    let top = canonicalize(p, &first).expect("valid configuration");

    let (h_runs, v_runs) = p.runs();
    let covered = |cfg: &RookConfig, kind: RunKind, run: usize| {
        cfg.cells().iter().any(|&c| {
            let i = p.index_of(c).expect("rook in collection");
            match kind {
                RunKind::Horizontal => p.h_run_of(i) == run,
                RunKind::Vertical => p.v_run_of(i) == run,
            }
        })
    };
    let missing: Vec<(RunKind, usize)> = (0..h_runs.len())
        .map(|r| (RunKind::Horizontal, r))
        .chain((0..v_runs.len()).map(|r| (RunKind::Vertical, r)))
        .filter(|&(kind, r)| !covered(&top, kind, r))
        .collect();
    let coverage = if missing.is_empty() {
        Outcome::Pass
    } else {
        // Fall back to the whole top class before declaring a run uncovered.
        let class = switch_classes(p, d).expect("d is the rook number");
        let members = class.members(p, class.class_of(p, &top).expect("top is a member"));
        match missing.iter().find(|&&(kind, r)| !members.iter().any(|m| covered(m, kind, r))) {
            None => Outcome::Pass,
            Some((kind, r)) => Outcome::Fail(format!("{kind:?} run {r} carries no rook of {top}")),
        }
    };

    let bad = p.cells().iter().copied().filter(|&c| !top.contains(c)).find_map(|c| {
        let n = attackers(p, &top, c);
        (n != 2).then_some((c, n))
    });
    let attack = match bad {
        None => Outcome::Pass,
        Some((c, n)) => Outcome::Fail(format!("cell {c} is attacked by {n} rooks of {top}")),
    };
    (coverage, attack)
}
