//! Free polyominoes and free weakly connected collections of a given rank.
//!
//! Fixed animals come from Redelmeier's algorithm with the edge (polyomino) or
//! king (weakly connected) neighbourhood. A fixed animal is emitted only when
//! it already equals its own [`CanonicalForm`], which selects exactly one
//! member of each symmetry class without any shared state, so subtrees of the
//! search can run on separate workers.

mod redelmeier;

use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Cell, CellCollection};
use redelmeier::Redelmeier;

const EDGE: [(i32, i32); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
const KING: [(i32, i32); 8] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)];

/// Depth at which the search tree is cut into parallel tasks.
const SPLIT_DEPTH: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Universe {
    /// Edge-connected collections.
    Polyomino,
    /// Collections connected through shared vertices.
    Collection,
}

impl Universe {
    pub fn max_rank(self) -> usize {
        match self {
            Universe::Polyomino => 14,
            Universe::Collection => 10,
        }
    }

    fn neighbours(self) -> &'static [(i32, i32)] {
        match self {
            Universe::Polyomino => &EDGE,
            Universe::Collection => &KING,
        }
    }

    fn check_rank(self, n: usize) -> Result<()> {
        if n == 0 || n > self.max_rank() {
            return Err(Error::RankOutOfRange { rank: n, min: 1, max: self.max_rank() });
        }
        Ok(())
    }
}

impl FromStr for Universe {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "poly" | "polyomino" | "polyominoes" => Ok(Universe::Polyomino),
            "collection" | "collections" | "weak" => Ok(Universe::Collection),
            other => Err(format!("unknown universe `{other}` (expected poly|collection)")),
        }
    }
}

/// Lexicographically least normalized, sorted cell list over the eight
/// images of a shape under the symmetries of the square.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CanonicalForm(Vec<Cell>);

impl CanonicalForm {
    pub fn cells(&self) -> &[Cell] {
        &self.0
    }

    pub fn to_collection(&self) -> CellCollection {
        CellCollection::new(self.0.iter().copied()).expect("canonical forms are nonempty")
    }
}

fn image(t: usize, (x, y): (i32, i32)) -> (i32, i32) {
    match t {
        0 => (x, y),
        1 => (-x, y),
        2 => (x, -y),
        3 => (-x, -y),
        4 => (y, x),
        5 => (-y, x),
        6 => (y, -x),
        _ => (-y, -x),
    }
}

/// Writes the normalized, sorted image of `cells` under symmetry `t` into `out`.
fn normalized_image(t: usize, cells: &[(i32, i32)], out: &mut Vec<(i32, i32)>) {
    out.clear();
    out.extend(cells.iter().map(|&c| image(t, c)));
    let min_x = out.iter().map(|c| c.0).min().unwrap_or(0);
    let min_y = out.iter().map(|c| c.1).min().unwrap_or(0);
    for c in out.iter_mut() {
        *c = (c.0 - min_x + 1, c.1 - min_y + 1);
    }
    out.sort_unstable();
}

pub fn canonical_form(p: &CellCollection) -> CanonicalForm {
    let cells: Vec<(i32, i32)> = p.cells().iter().map(|c| (c.x, c.y)).collect();
    let mut best: Option<Vec<(i32, i32)>> = None;
    let mut buf = Vec::with_capacity(cells.len());
    for t in 0..8 {
        normalized_image(t, &cells, &mut buf);
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    CanonicalForm(best.unwrap_or_default().into_iter().map(|(x, y)| Cell::new(x, y)).collect())
}

/// Reusable buffers for the "is this image minimal" test.
#[derive(Default)]
struct CanonicalTest {
    base: Vec<(i32, i32)>,
    raw: Vec<(i32, i32)>,
    buf: Vec<(i32, i32)>,
}

impl CanonicalTest {
    /// Returns the normalized cells if they form the canonical image.
    fn check(&mut self, cells: impl Iterator<Item = (i32, i32)>) -> Option<&[(i32, i32)]> {
        self.raw.clear();
        self.raw.extend(cells);
        normalized_image(0, &self.raw, &mut self.base);
        for t in 1..8 {
            normalized_image(t, &self.raw, &mut self.buf);
            if self.buf < self.base {
                return None;
            }
        }
        Some(&self.base)
    }
}

/// A stream of shapes of one rank, each symmetry class exactly once.
pub struct ShapeStream {
    search: Option<Redelmeier>,
    test: CanonicalTest,
}

impl ShapeStream {
    fn new(search: Redelmeier) -> Self {
        ShapeStream { search: Some(search), test: CanonicalTest::default() }
    }

    /// A stream that yields nothing.
    pub fn empty() -> Self {
        ShapeStream { search: None, test: CanonicalTest::default() }
    }
}

impl Iterator for ShapeStream {
    type Item = CellCollection;

    fn next(&mut self) -> Option<CellCollection> {
        let search = self.search.as_mut()?;
        let decode = search.decoder();
        loop {
            let Some(path) = search.next_animal() else {
                self.search = None;
                return None;
            };
            let coords = path.iter().map(|&u| decode(u));
            if let Some(cells) = self.test.check(coords) {
                let cells = cells.iter().map(|&(x, y)| Cell::new(x, y));
                return Some(CellCollection::new(cells).expect("animals are nonempty"));
            }
        }
    }
}

pub fn enumerate(universe: Universe, n: usize) -> Result<ShapeStream> {
    universe.check_rank(n)?;
    Ok(ShapeStream::new(Redelmeier::new(n, universe.neighbours())))
}

/// Every free polyomino with `n` cells.
pub fn enumerate_polyominoes(n: usize) -> Result<ShapeStream> {
    enumerate(Universe::Polyomino, n)
}

/// Every free weakly connected collection with `n` cells.
pub fn enumerate_collections(n: usize) -> Result<ShapeStream> {
    enumerate(Universe::Collection, n)
}

/// Independent sub-streams that together yield exactly the shapes of
/// [`enumerate`], in no particular order.
pub fn partitioned(universe: Universe, n: usize) -> Result<Vec<ShapeStream>> {
    universe.check_rank(n)?;
    let root = Redelmeier::new(n, universe.neighbours());
    if n <= SPLIT_DEPTH {
        return Ok(vec![ShapeStream::new(root)]);
    }
    Ok(root.split(SPLIT_DEPTH).into_iter().map(ShapeStream::new).collect())
}

/// Calls `f` on every shape, spreading subtrees over the current rayon pool.
pub fn par_for_each_shape<F>(universe: Universe, n: usize, f: F) -> Result<()>
where
    F: Fn(CellCollection) + Sync + Send,
{
    partitioned(universe, n)?.into_par_iter().for_each(|stream| stream.for_each(&f));
    Ok(())
}

pub fn count_shapes(universe: Universe, n: usize) -> Result<usize> {
    Ok(partitioned(universe, n)?.into_par_iter().map(Iterator::count).sum())
}
