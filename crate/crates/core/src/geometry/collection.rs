use std::collections::BTreeSet;
use std::fmt;

use super::{Cell, CellRect};
use crate::error::{Error, Result};

/// Largest supported side of the bounding rectangle; occupancy is one `u64` per row.
pub const MAX_SIDE: u32 = 64;

const NO_CELL: u16 = u16::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RunKind {
    Horizontal,
    Vertical,
}

/// A row (horizontal run) or column (vertical run) of a collection: a maximal
/// segment of consecutive cells along one axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Run {
    pub kind: RunKind,
    /// Left-most cell for horizontal runs, bottom-most for vertical ones.
    pub anchor: Cell,
    pub length: u32,
    pub id: usize,
}

impl Run {
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.length as i32).map(move |t| match self.kind {
            RunKind::Horizontal => Cell::new(self.anchor.x + t, self.anchor.y),
            RunKind::Vertical => Cell::new(self.anchor.x, self.anchor.y + t),
        })
    }

    pub fn contains(&self, c: Cell) -> bool {
        let len = self.length as i32;
        match self.kind {
            RunKind::Horizontal => c.y == self.anchor.y && (self.anchor.x..self.anchor.x + len).contains(&c.x),
            RunKind::Vertical => c.x == self.anchor.x && (self.anchor.y..self.anchor.y + len).contains(&c.y),
        }
    }
}

/// A nonempty, normalized collection of cells.
///
/// Cells are kept sorted by `(x, y)`; the position of a cell in that order is
/// its *index*, used throughout the crate as a compact handle.
#[derive(Clone)]
pub struct CellCollection {
    cells: Vec<Cell>,
    width: u32,
    height: u32,
    rows: Vec<u64>,
    /// Inclusive 2-D prefix counts, `(width + 1) * (height + 1)` entries.
    prefix: Vec<u32>,
    /// Grid position to cell index.
    index: Vec<u16>,
    h_runs: Vec<Run>,
    v_runs: Vec<Run>,
    h_run_of: Vec<u32>,
    v_run_of: Vec<u32>,
}

/// Translate `cells` so that the bounding rectangle starts at `(1, 1)`.
pub fn normalize<I>(cells: I) -> Result<CellCollection>
where
    I: IntoIterator<Item = Cell>,
{
    CellCollection::new(cells)
}

impl CellCollection {
    /// Builds a normalized collection. Duplicate cells collapse.
    pub fn new<I>(cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = Cell>,
    {
        let set: BTreeSet<Cell> = cells.into_iter().collect();
        let (min_x, max_x, min_y, max_y) = set.iter().fold(
            (i32::MAX, i32::MIN, i32::MAX, i32::MIN),
            |(a, b, c, d), cell| (a.min(cell.x), b.max(cell.x), c.min(cell.y), d.max(cell.y)),
        );
        if set.is_empty() {
            return Err(Error::EmptyCollection);
        }
        let width = i64::from(max_x) - i64::from(min_x) + 1;
        let height = i64::from(max_y) - i64::from(min_y) + 1;
        if width > i64::from(MAX_SIDE) || height > i64::from(MAX_SIDE) {
            return Err(Error::BoardTooLarge { width, height });
        }
        let cells: Vec<Cell> = set
            .into_iter()
            .map(|c| Cell::new(c.x - min_x + 1, c.y - min_y + 1))
            .collect();
        Ok(Self::from_normalized(cells, width as u32, height as u32))
    }

    fn from_normalized(cells: Vec<Cell>, width: u32, height: u32) -> Self {
        let (w, h) = (width as usize, height as usize);
        let mut rows = vec![0u64; h];
        let mut index = vec![NO_CELL; w * h];
        for (i, c) in cells.iter().enumerate() {
            rows[(c.y - 1) as usize] |= 1u64 << (c.x - 1);
            index[(c.y - 1) as usize * w + (c.x - 1) as usize] = i as u16;
        }

        let mut prefix = vec![0u32; (w + 1) * (h + 1)];
        for y in 1..=h {
            let mut row_sum = 0;
            for x in 1..=w {
                row_sum += u32::from(index[(y - 1) * w + (x - 1)] != NO_CELL);
                prefix[y * (w + 1) + x] = prefix[(y - 1) * (w + 1) + x] + row_sum;
            }
        }

        let mut this = CellCollection {
            cells,
            width,
            height,
            rows,
            prefix,
            index,
            h_runs: Vec::new(),
            v_runs: Vec::new(),
            h_run_of: Vec::new(),
            v_run_of: Vec::new(),
        };
        this.build_runs();
        this
    }

    fn build_runs(&mut self) {
        let n = self.cells.len();
        let mut h_run_of = vec![0u32; n];
        let mut v_run_of = vec![0u32; n];
        let mut h_runs = Vec::new();
        let mut v_runs = Vec::new();

        for y in 1..=self.height as i32 {
            let mut x = 1;
            while x <= self.width as i32 {
                if !self.contains(Cell::new(x, y)) {
                    x += 1;
                    continue;
                }
                let anchor = Cell::new(x, y);
                let id = h_runs.len();
                while self.contains(Cell::new(x, y)) {
                    h_run_of[self.index_of(Cell::new(x, y)).unwrap()] = id as u32;
                    x += 1;
                }
                let length = (x - anchor.x) as u32;
                h_runs.push(Run { kind: RunKind::Horizontal, anchor, length, id });
            }
        }
        for x in 1..=self.width as i32 {
            let mut y = 1;
            while y <= self.height as i32 {
                if !self.contains(Cell::new(x, y)) {
                    y += 1;
                    continue;
                }
                let anchor = Cell::new(x, y);
                let id = v_runs.len();
                while self.contains(Cell::new(x, y)) {
                    v_run_of[self.index_of(Cell::new(x, y)).unwrap()] = id as u32;
                    y += 1;
                }
                let length = (y - anchor.y) as u32;
                v_runs.push(Run { kind: RunKind::Vertical, anchor, length, id });
            }
        }
        self.h_runs = h_runs;
        self.v_runs = v_runs;
        self.h_run_of = h_run_of;
        self.v_run_of = v_run_of;
    }

    /// Cells sorted by `(x, y)`.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn rank(&self) -> usize {
        self.cells.len()
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn bounding_rect(&self) -> CellRect {
        CellRect::new(Cell::new(1, 1), Cell::new(self.width as i32, self.height as i32))
    }

    /// Occupancy of row `y` (1-based); bit `x - 1` is set for each cell.
    pub fn row_bits(&self, y: i32) -> u64 {
        if y < 1 || y > self.height as i32 {
            0
        } else {
            self.rows[(y - 1) as usize]
        }
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.x >= 1 && c.x <= self.width as i32 && self.row_bits(c.y) >> (c.x - 1) & 1 == 1
    }

    pub fn index_of(&self, c: Cell) -> Option<usize> {
        if c.x < 1 || c.y < 1 || c.x > self.width as i32 || c.y > self.height as i32 {
            return None;
        }
        let i = self.index[(c.y - 1) as usize * self.width as usize + (c.x - 1) as usize];
        (i != NO_CELL).then_some(i as usize)
    }

    pub(crate) fn require_index(&self, c: Cell) -> Result<usize> {
        self.index_of(c).ok_or(Error::CellNotInCollection(c))
    }

    /// Horizontal runs (rows of the collection), ordered bottom-up then left to right.
    pub fn horizontal_runs(&self) -> &[Run] {
        &self.h_runs
    }

    /// Vertical runs (columns of the collection), ordered left to right then bottom-up.
    pub fn vertical_runs(&self) -> &[Run] {
        &self.v_runs
    }

    pub fn runs(&self) -> (&[Run], &[Run]) {
        (&self.h_runs, &self.v_runs)
    }

    /// Id of the horizontal run through the cell with the given index.
    pub fn h_run_of(&self, idx: usize) -> usize {
        self.h_run_of[idx] as usize
    }

    pub fn v_run_of(&self, idx: usize) -> usize {
        self.v_run_of[idx] as usize
    }

    /// Number of cells of the collection inside `r`, in O(1).
    pub fn count_in(&self, r: &CellRect) -> u32 {
        let w1 = self.width as usize + 1;
        let x0 = r.lo.x.max(1) - 1;
        let y0 = r.lo.y.max(1) - 1;
        let x1 = r.hi.x.min(self.width as i32);
        let y1 = r.hi.y.min(self.height as i32);
        if x1 <= x0 || y1 <= y0 {
            return 0;
        }
        let at = |x: i32, y: i32| self.prefix[y as usize * w1 + x as usize];
        at(x1, y1) + at(x0, y0) - at(x0, y1) - at(x1, y0)
    }

    /// Whether every cell of `r` belongs to the collection.
    pub fn inner_interval(&self, r: &CellRect) -> bool {
        self.bounding_rect().contains_rect(r) && self.count_in(r) == r.size()
    }

    /// Components under shared-vertex (king) adjacency.
    pub fn weak_components(&self) -> Vec<Vec<Cell>> {
        self.components(true)
    }

    /// Components under shared-edge adjacency; each one is a polyomino.
    pub fn strong_components(&self) -> Vec<Vec<Cell>> {
        self.components(false)
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.weak_components().len() == 1
    }

    pub fn is_polyomino(&self) -> bool {
        self.strong_components().len() == 1
    }

    fn components(&self, diagonal: bool) -> Vec<Vec<Cell>> {
        let mut seen = vec![false; self.cells.len()];
        let mut out = Vec::new();
        for start in 0..self.cells.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(i) = stack.pop() {
                let c = self.cells[i];
                comp.push(c);
                for dx in -1..=1 {
                    for dy in -1..=1 {
                        if (dx == 0 && dy == 0) || (!diagonal && dx != 0 && dy != 0) {
                            continue;
                        }
                        if let Some(j) = self.index_of(Cell::new(c.x + dx, c.y + dy)) {
                            if !seen[j] {
                                seen[j] = true;
                                stack.push(j);
                            }
                        }
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }
}

impl PartialEq for CellCollection {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for CellCollection {}

impl std::hash::Hash for CellCollection {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cells.hash(state);
    }
}

impl fmt::Debug for CellCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CellCollection")
            .field("width", &self.width)
            .field("height", &self.height)
            .field("cells", &self.cells)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coll(cells: &[(i32, i32)]) -> CellCollection {
        CellCollection::new(cells.iter().map(|&c| Cell::from(c))).unwrap()
    }

    #[test]
    fn normalize_translates() {
        let p = coll(&[(5, 7)]);
        assert_eq!(p.cells(), &[Cell::new(1, 1)]);
        assert_eq!((p.width(), p.height()), (1, 1));

        let p = coll(&[(2, 3), (3, 3)]);
        assert_eq!(p.cells(), &[Cell::new(1, 1), Cell::new(2, 1)]);

        let p = coll(&[(1, 1), (3, 3)]);
        assert_eq!(p.cells(), &[Cell::new(1, 1), Cell::new(3, 3)]);
        assert_eq!((p.width(), p.height(), p.rank()), (3, 3, 2));
    }

    #[test]
    fn empty_and_oversized_rejected() {
        assert!(matches!(CellCollection::new(Vec::new()), Err(Error::EmptyCollection)));
        assert!(matches!(
            CellCollection::new([Cell::new(0, 0), Cell::new(64, 0)]),
            Err(Error::BoardTooLarge { width: 65, .. })
        ));
        assert!(CellCollection::new([Cell::new(0, 0), Cell::new(63, 63)]).is_ok());
    }

    #[test]
    fn runs_of_bar_and_square() {
        let bar = coll(&[(1, 1), (2, 1), (3, 1)]);
        let (h, v) = bar.runs();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].length, 3);
        assert_eq!(v.len(), 3);
        assert!(v.iter().all(|r| r.length == 1));

        let sq = coll(&[(1, 1), (2, 1), (1, 2), (2, 2)]);
        let (h, v) = sq.runs();
        assert_eq!((h.len(), v.len()), (2, 2));
        assert!(h.iter().chain(v).all(|r| r.length == 2));
    }

    #[test]
    fn runs_of_l_tromino() {
        let l = coll(&[(1, 1), (2, 1), (1, 2)]);
        let (h, v) = l.runs();
        let h_sets: Vec<Vec<Cell>> = h.iter().map(|r| r.cells().collect()).collect();
        let v_sets: Vec<Vec<Cell>> = v.iter().map(|r| r.cells().collect()).collect();
        assert_eq!(h_sets, vec![vec![Cell::new(1, 1), Cell::new(2, 1)], vec![Cell::new(1, 2)]]);
        assert_eq!(v_sets, vec![vec![Cell::new(1, 1), Cell::new(1, 2)], vec![Cell::new(2, 1)]]);
    }

    #[test]
    fn runs_split_at_gaps() {
        let p = coll(&[(1, 1), (3, 1)]);
        assert_eq!(p.horizontal_runs().len(), 2);
        assert_ne!(p.h_run_of(0), p.h_run_of(1));
    }

    #[test]
    fn inner_interval_examples() {
        let sq = coll(&[(1, 1), (2, 1), (1, 2), (2, 2)]);
        assert!(sq.inner_interval(&sq.bounding_rect()));

        let l = coll(&[(1, 1), (2, 1), (1, 2)]);
        assert!(!l.inner_interval(&l.bounding_rect()));

        let plus = coll(&[(2, 1), (1, 2), (2, 2), (3, 2), (2, 3)]);
        assert!(plus.inner_interval(&CellRect::new(Cell::new(2, 1), Cell::new(2, 3))));
        assert!(!plus.inner_interval(&CellRect::new(Cell::new(1, 1), Cell::new(2, 2))));
        assert!(!plus.inner_interval(&CellRect::new(Cell::new(2, 2), Cell::new(2, 4))));
    }

    #[test]
    fn components() {
        let p = coll(&[(1, 1), (2, 2)]);
        assert_eq!(p.weak_components().len(), 1);
        assert_eq!(p.strong_components().len(), 2);

        let p = coll(&[(1, 1), (3, 3)]);
        assert_eq!(p.weak_components().len(), 2);

        let sq = coll(&[(1, 1), (2, 1), (1, 2), (2, 2)]);
        assert_eq!(sq.weak_components().len(), 1);
        assert_eq!(sq.strong_components().len(), 1);
    }
}
