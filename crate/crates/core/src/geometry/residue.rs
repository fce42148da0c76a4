use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{maximal_rectangles, Cell, CellCollection, CellRect, RunKind};
use crate::error::{Error, Result};

/// Cells of a maximal rectangle that lie in no other maximal rectangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residue {
    pub rect_index: usize,
    pub cells: Vec<Cell>,
    /// Distinct x values of `cells`, ascending.
    pub cols: Vec<i32>,
    /// Distinct y values of `cells`, ascending.
    pub rows: Vec<i32>,
    /// `cells == cols x rows`.
    pub is_grid: bool,
}

impl Residue {
    fn new(rect_index: usize, cells: Vec<Cell>) -> Self {
        let cols: Vec<i32> = cells.iter().map(|c| c.x).collect::<BTreeSet<_>>().into_iter().collect();
        let rows: Vec<i32> = cells.iter().map(|c| c.y).collect::<BTreeSet<_>>().into_iter().collect();
        let is_grid = cells.len() == cols.len() * rows.len();
        Residue { rect_index, cells, cols, rows, is_grid }
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Compacts the occupied columns and rows into a rectangle, preserving order.
    pub fn gluing(&self) -> Result<Gluing> {
        if self.cells.is_empty() {
            return Err(Error::EmptyResidue { rect_index: self.rect_index });
        }
        if !self.is_grid {
            return Err(Error::NotGrid { rect_index: self.rect_index });
        }
        Ok(Gluing { cols: self.cols.clone(), rows: self.rows.clone() })
    }
}

/// The rectangle obtained by gluing the blocks of a grid-shaped residue, with
/// the cell correspondence in both directions. Glued coordinates are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gluing {
    cols: Vec<i32>,
    rows: Vec<i32>,
}

impl Gluing {
    pub fn width(&self) -> usize {
        self.cols.len()
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn is_square(&self) -> bool {
        self.width() == self.height()
    }

    pub fn to_glued(&self, c: Cell) -> Option<(usize, usize)> {
        let u = self.cols.binary_search(&c.x).ok()?;
        let v = self.rows.binary_search(&c.y).ok()?;
        Some((u + 1, v + 1))
    }

    pub fn from_glued(&self, u: usize, v: usize) -> Option<Cell> {
        let x = *self.cols.get(u.checked_sub(1)?)?;
        let y = *self.rows.get(v.checked_sub(1)?)?;
        Some(Cell::new(x, y))
    }
}

/// Gluing of one nonempty residue. `gluing` is `None` when the residue is not
/// a grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableSquare {
    pub rect_index: usize,
    pub gluing: Option<Gluing>,
}

/// How "horizontal position" is read in the second domino-stability condition.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Alignment {
    /// The two cells lie in the same row (resp. column) run of the collection.
    #[default]
    Run,
    /// The two cells merely share a y (resp. x) coordinate.
    Coordinate,
}

impl std::str::FromStr for Alignment {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "run" => Ok(Alignment::Run),
            "coordinate" => Ok(Alignment::Coordinate),
            other => Err(format!("unknown alignment mode `{other}` (expected run|coordinate)")),
        }
    }
}

/// Why a collection fails domino-stability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Witness {
    NotGrid { rect_index: usize, rect: CellRect },
    NotSquare { rect_index: usize, rect: CellRect, width: usize, height: usize },
    Alignment {
        rect_index: usize,
        rect: CellRect,
        cell: Cell,
        horizontal: Vec<usize>,
        vertical: Vec<usize>,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NotGrid { rect_index, rect } => {
                write!(f, "residue of rectangle {rect_index} {rect} does not glue to a rectangle")
            }
            Witness::NotSquare { rect_index, rect, width, height } => write!(
                f,
                "residue of rectangle {rect_index} {rect} glues to {width}x{height}, not a square"
            ),
            Witness::Alignment { rect_index, rect, cell, horizontal, vertical } => write!(
                f,
                "rectangle {rect_index} {rect} has empty residue and cell {cell} sees residues \
                 {horizontal:?} horizontally and {vertical:?} vertically"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominoStability {
    pub stable: bool,
    pub witness: Option<Witness>,
}

/// Maximal rectangles together with their residues and a per-cell owner table.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub rects: Vec<CellRect>,
    pub residues: Vec<Residue>,
    owner: Vec<Option<usize>>,
}

impl Decomposition {
    pub fn new(p: &CellCollection) -> Self {
        Self::with_rects(p, maximal_rectangles(p))
    }

    pub fn with_rects(p: &CellCollection, rects: Vec<CellRect>) -> Self {
        let mut cover = vec![0u32; p.rank()];
        let mut last = vec![usize::MAX; p.rank()];
        for (i, r) in rects.iter().enumerate() {
            for c in r.cells() {
                let idx = p.index_of(c).expect("maximal rectangle outside collection");
                cover[idx] += 1;
                last[idx] = i;
            }
        }
        let owner: Vec<Option<usize>> =
            cover.iter().zip(&last).map(|(&n, &i)| (n == 1).then_some(i)).collect();

        let mut buckets: Vec<Vec<Cell>> = vec![Vec::new(); rects.len()];
        for (idx, o) in owner.iter().enumerate() {
            if let Some(i) = o {
                buckets[*i].push(p.cells()[idx]);
            }
        }
        let residues = buckets.into_iter().enumerate().map(|(i, cells)| Residue::new(i, cells)).collect();
        Decomposition { rects, residues, owner }
    }

    /// Index of the residue containing the cell with index `idx`, if any.
    pub fn owner(&self, idx: usize) -> Option<usize> {
        self.owner[idx]
    }

    pub fn stable_squares(&self) -> Vec<StableSquare> {
        self.residues
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| StableSquare { rect_index: r.rect_index, gluing: r.gluing().ok() })
            .collect()
    }

    /// Indices `j` whose residue contains a cell aligned with `cell` along `kind`.
    pub fn aligned_residues(
        &self,
        p: &CellCollection,
        cell: Cell,
        kind: RunKind,
        mode: Alignment,
    ) -> BTreeSet<usize> {
        let owner_of = |c: Cell| p.index_of(c).and_then(|i| self.owner[i]);
        match mode {
            Alignment::Run => {
                let Some(idx) = p.index_of(cell) else { return BTreeSet::new() };
                let run = match kind {
                    RunKind::Horizontal => p.horizontal_runs()[p.h_run_of(idx)],
                    RunKind::Vertical => p.vertical_runs()[p.v_run_of(idx)],
                };
                run.cells().filter_map(owner_of).collect()
            }
            Alignment::Coordinate => match kind {
                RunKind::Horizontal => {
                    (1..=p.width() as i32).filter_map(|x| owner_of(Cell::new(x, cell.y))).collect()
                }
                RunKind::Vertical => {
                    (1..=p.height() as i32).filter_map(|y| owner_of(Cell::new(cell.x, y))).collect()
                }
            },
        }
    }

    pub fn domino_stability(&self, p: &CellCollection, mode: Alignment) -> DominoStability {
        for (i, (rect, res)) in self.rects.iter().zip(&self.residues).enumerate() {
            let witness = if !res.is_empty() {
                match res.gluing() {
                    Err(_) => Some(Witness::NotGrid { rect_index: i, rect: *rect }),
                    Ok(g) if !g.is_square() => Some(Witness::NotSquare {
                        rect_index: i,
                        rect: *rect,
                        width: g.width(),
                        height: g.height(),
                    }),
                    Ok(_) => None,
                }
            } else {
                rect.cells().find_map(|cell| {
                    let mut horizontal = self.aligned_residues(p, cell, RunKind::Horizontal, mode);
                    let mut vertical = self.aligned_residues(p, cell, RunKind::Vertical, mode);
                    horizontal.remove(&i);
                    vertical.remove(&i);
                    let ok = horizontal.len() == 1 && vertical.len() == 1 && horizontal != vertical;
                    (!ok).then(|| Witness::Alignment {
                        rect_index: i,
                        rect: *rect,
                        cell,
                        horizontal: horizontal.into_iter().collect(),
                        vertical: vertical.into_iter().collect(),
                    })
                })
            };
            if witness.is_some() {
                return DominoStability { stable: false, witness };
            }
        }
        DominoStability { stable: true, witness: None }
    }
}

impl CellCollection {
    pub fn maximal_rectangles(&self) -> Vec<CellRect> {
        maximal_rectangles(self)
    }

    pub fn decomposition(&self) -> Decomposition {
        Decomposition::new(self)
    }

    /// One residue per maximal rectangle, in rectangle order.
    pub fn residues(&self) -> Vec<Residue> {
        self.decomposition().residues
    }

    pub fn stable_squares(&self) -> Vec<StableSquare> {
        self.decomposition().stable_squares()
    }

    pub fn domino_stability(&self, mode: Alignment) -> DominoStability {
        self.decomposition().domino_stability(self, mode)
    }

    /// Domino-stability with run-based alignment.
    pub fn is_domino_stable(&self) -> bool {
        self.domino_stability(Alignment::Run).stable
    }
}
