//! Non-attacking rook configurations, switches and the switching rook polynomial.
//!
//! Two rooks attack each other when they share a row run or a column run of
//! the collection; cells in the same coordinate row separated by a gap do
//! not attack. A switch replaces two rooks on the diagonal corners of an
//! inner rectangle by rooks on its anti-diagonal corners, or vice versa.

mod classes;
mod matching;
mod polynomial;
mod square;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Alignment, Cell, CellCollection, CellRect};

pub use classes::{class_count, switch_classes, SwitchClasses};
pub use polynomial::{switching_polynomial, SwitchingPolynomial};
pub use square::square_complement;

/// A set of cells carrying unlabeled rooks, sorted by `(x, y)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RookConfig {
    cells: Vec<Cell>,
}

impl RookConfig {
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        cells.sort_unstable();
        cells.dedup();
        RookConfig { cells }
    }

    pub fn empty() -> Self {
        RookConfig::default()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }
}

impl FromIterator<Cell> for RookConfig {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        RookConfig::new(iter)
    }
}

impl fmt::Display for RookConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// Whether rooks on the distinct cells `a` and `b` attack each other.
pub fn attacking(p: &CellCollection, a: Cell, b: Cell) -> Result<bool> {
    let ia = p.require_index(a)?;
    let ib = p.require_index(b)?;
    Ok(ia != ib && (p.h_run_of(ia) == p.h_run_of(ib) || p.v_run_of(ia) == p.v_run_of(ib)))
}

/// Cell indices of `f`, checking that it is a non-attacking placement in `p`.
pub(crate) fn config_indices(p: &CellCollection, f: &RookConfig) -> Result<Vec<usize>> {
    let mut h_used = vec![false; p.horizontal_runs().len()];
    let mut v_used = vec![false; p.vertical_runs().len()];
    let mut out = Vec::with_capacity(f.len());
    for &c in f.cells() {
        let idx = p
            .index_of(c)
            .ok_or_else(|| Error::InvalidConfig(format!("rook on {c} outside the collection")))?;
        let (h, v) = (p.h_run_of(idx), p.v_run_of(idx));
        if std::mem::replace(&mut h_used[h], true) || std::mem::replace(&mut v_used[v], true) {
            return Err(Error::InvalidConfig(format!("rook on {c} is attacked")));
        }
        out.push(idx);
    }
    Ok(out)
}

pub fn is_valid(p: &CellCollection, f: &RookConfig) -> bool {
    config_indices(p, f).is_ok()
}

/// Maximum number of non-attacking rooks: a maximum matching between row
/// runs and column runs, with one edge per cell.
pub fn rook_number(p: &CellCollection) -> usize {
    max_placement(p).len()
}

/// A maximum non-attacking placement found by the matching.
pub fn max_placement(p: &CellCollection) -> RookConfig {
    let (h, v) = p.runs();
    let mut adj = vec![Vec::new(); h.len()];
    let mut cell_of = std::collections::HashMap::new();
    for (idx, &c) in p.cells().iter().enumerate() {
        let (hr, vr) = (p.h_run_of(idx), p.v_run_of(idx));
        adj[hr].push(vr);
        cell_of.insert((hr, vr), c);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let pairs = matching::HopcroftKarp::new(&adj, v.len()).solve();
    pairs
        .iter()
        .enumerate()
        .filter_map(|(hr, vr)| vr.map(|vr| cell_of[&(hr, vr)]))
        .collect()
}

/// All `k`-rook configurations of `p`, in lexicographic order of their sorted
/// cell lists.
pub fn configs(p: &CellCollection, k: usize) -> Result<Configs<'_>> {
    let rook_number = rook_number(p);
    if k > rook_number {
        return Err(Error::KOutOfRange { k, rook_number });
    }
    Ok(Configs::new(p, k))
}

/// Backtracking enumerator over non-attacking placements.
pub struct Configs<'a> {
    p: &'a CellCollection,
    k: usize,
    chosen: Vec<u16>,
    cursor: usize,
    h_used: Vec<bool>,
    v_used: Vec<bool>,
    done: bool,
}

impl<'a> Configs<'a> {
    pub(crate) fn new(p: &'a CellCollection, k: usize) -> Self {
        Configs {
            p,
            k,
            chosen: Vec::with_capacity(k),
            cursor: 0,
            h_used: vec![false; p.horizontal_runs().len()],
            v_used: vec![false; p.vertical_runs().len()],
            done: false,
        }
    }

    fn set(&mut self, idx: usize, used: bool) {
        self.h_used[self.p.h_run_of(idx)] = used;
        self.v_used[self.p.v_run_of(idx)] = used;
    }

    fn pop(&mut self) -> bool {
        match self.chosen.pop() {
            Some(last) => {
                self.set(last as usize, false);
                self.cursor = last as usize + 1;
                true
            }
            None => false,
        }
    }

    /// The next configuration as sorted cell indices.
    pub(crate) fn next_indices(&mut self) -> Option<&[u16]> {
        if self.done {
            return None;
        }
        if self.k == 0 {
            self.done = true;
            return Some(&[]);
        }
        if self.chosen.len() == self.k && !self.pop() {
            unreachable!();
        }
        let n = self.p.rank();
        loop {
            let need = self.k - self.chosen.len();
            let found = (self.cursor..=n.saturating_sub(need)).find(|&i| {
                i < n && !self.h_used[self.p.h_run_of(i)] && !self.v_used[self.p.v_run_of(i)]
            });
            match found {
                Some(i) => {
                    self.chosen.push(i as u16);
                    self.set(i, true);
                    self.cursor = i + 1;
                    if self.chosen.len() == self.k {
                        return Some(&self.chosen);
                    }
                }
                None => {
                    if !self.pop() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

impl Iterator for Configs<'_> {
    type Item = RookConfig;

    fn next(&mut self) -> Option<RookConfig> {
        let p = self.p;
        let idx = self.next_indices()?;
        Some(RookConfig { cells: idx.iter().map(|&i| p.cells()[i as usize]).collect() })
    }
}

/// If rooks on `a` and `b` are in switching position, the cells they move to.
pub(crate) fn switch_partner(p: &CellCollection, a: Cell, b: Cell) -> Option<(Cell, Cell)> {
    if a.x == b.x || a.y == b.y {
        return None;
    }
    p.inner_interval(&CellRect::spanned(a, b))
        .then(|| (Cell::new(a.x, b.y), Cell::new(b.x, a.y)))
}

/// Every configuration one switch away from `f`.
pub fn switch_neighbors(p: &CellCollection, f: &RookConfig) -> Result<Vec<RookConfig>> {
    config_indices(p, f)?;
    let cells = f.cells();
    let mut out = Vec::new();
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            if let Some((a, b)) = switch_partner(p, cells[i], cells[j]) {
                let moved = cells
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i && t != j)
                    .map(|(_, &c)| c)
                    .chain([a, b])
                    .collect();
                out.push(moved);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The canonical configuration in a rectangle: occupied columns and rows are
/// sorted and paired in order, so the rooks climb from south-west to
/// north-east.
pub fn canonical_in_rectangle(r: &CellRect, f: &RookConfig) -> RookConfig {
    debug_assert!(f.cells().iter().all(|&c| r.contains(c)));
    canonical_pairing(f.cells())
}

fn canonical_pairing(cells: &[Cell]) -> RookConfig {
    let mut xs: Vec<i32> = cells.iter().map(|c| c.x).collect();
    let mut ys: Vec<i32> = cells.iter().map(|c| c.y).collect();
    xs.sort_unstable();
    ys.sort_unstable();
    xs.into_iter().zip(ys).map(|(x, y)| Cell::new(x, y)).collect()
}

/// Canonical representative of the class of `f`: each maximal rectangle in
/// turn has its rooks replaced by their canonical form in that rectangle.
pub fn canonicalize(p: &CellCollection, f: &RookConfig) -> Result<RookConfig> {
    config_indices(p, f)?;
    let mut current = f.cells().to_vec();
    for rect in p.maximal_rectangles() {
        let (inside, outside): (Vec<Cell>, Vec<Cell>) = current.iter().partition(|&&c| rect.contains(c));
        if inside.len() < 2 {
            continue;
        }
        current = outside;
        current.extend(canonical_pairing(&inside).cells());
    }
    Ok(RookConfig::new(current))
}

/// The maximum configuration of a domino-stable collection that occupies the
/// cells corresponding to the diagonal of each stable square.
pub fn top_config(p: &CellCollection) -> Result<RookConfig> {
    let d = p.decomposition();
    let stability = d.domino_stability(p, Alignment::Run);
    if let Some(w) = stability.witness {
        return Err(Error::NotDominoStable(w.to_string()));
    }
    let mut cells = Vec::new();
    for sq in d.stable_squares() {
        let g = sq.gluing.expect("domino-stable residues glue to squares");
        cells.extend((1..=g.width()).map(|t| g.from_glued(t, t).expect("diagonal cell")));
    }
    Ok(RookConfig::new(cells))
}
