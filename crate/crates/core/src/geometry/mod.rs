//! Collections of unit cells and their static structure.
//!
//! A cell is identified by the lower-left corner of its unit square; `x` grows
//! east and `y` grows north. Collections are always stored normalized, with
//! the minimal bounding rectangle anchored at `(1, 1)`.

mod collection;
pub mod format;
mod rectangles;
mod residue;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use collection::{normalize, CellCollection, Run, RunKind, MAX_SIDE};
pub use rectangles::maximal_rectangles;
pub use residue::{Alignment, Decomposition, DominoStability, Gluing, Residue, StableSquare, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }
}

impl From<(i32, i32)> for Cell {
    fn from((x, y): (i32, i32)) -> Self {
        Cell { x, y }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The cell interval `[lo, hi]`: every cell whose lower-left corner lies
/// componentwise between those of `lo` and `hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellRect {
    pub lo: Cell,
    pub hi: Cell,
}

impl CellRect {
    /// Panics if `lo` is not componentwise below `hi`.
    pub fn new(lo: Cell, hi: Cell) -> Self {
        assert!(lo.x <= hi.x && lo.y <= hi.y, "degenerate rectangle {lo} {hi}");
        CellRect { lo, hi }
    }

    /// Smallest rectangle containing both cells.
    pub fn spanned(a: Cell, b: Cell) -> Self {
        CellRect {
            lo: Cell::new(a.x.min(b.x), a.y.min(b.y)),
            hi: Cell::new(a.x.max(b.x), a.y.max(b.y)),
        }
    }

    pub fn width(&self) -> u32 {
        (self.hi.x - self.lo.x + 1) as u32
    }

    pub fn height(&self) -> u32 {
        (self.hi.y - self.lo.y + 1) as u32
    }

    pub fn size(&self) -> u32 {
        self.width() * self.height()
    }

    pub fn is_square(&self) -> bool {
        self.width() == self.height()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.lo.x <= c.x && c.x <= self.hi.x && self.lo.y <= c.y && c.y <= self.hi.y
    }

    pub fn contains_rect(&self, other: &CellRect) -> bool {
        self.contains(other.lo) && self.contains(other.hi)
    }

    /// Cells in row-major order from the bottom row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.lo.y..=self.hi.y).flat_map(move |y| (self.lo.x..=self.hi.x).map(move |x| Cell::new(x, y)))
    }

    /// Sort key used for the canonical ordering of maximal rectangles.
    pub(crate) fn order_key(&self) -> (i32, i32, i32, i32) {
        (self.lo.y, self.lo.x, self.hi.y, self.hi.x)
    }
}

impl fmt::Display for CellRect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}] {}x{}", self.lo, self.hi, self.width(), self.height())
    }
}
