use thiserror::Error;

use crate::geometry::Cell;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a collection of cells must contain at least one cell")]
    EmptyCollection,

    #[error("bounding rectangle {width}x{height} exceeds the 64x64 limit")]
    BoardTooLarge { width: i64, height: i64 },

    #[error("cell {0} is not in the collection")]
    CellNotInCollection(Cell),

    #[error("residue of rectangle {rect_index} is not a full grid of rows and columns")]
    NotGrid { rect_index: usize },

    #[error("residue of rectangle {rect_index} is empty")]
    EmptyResidue { rect_index: usize },

    #[error("invalid rook configuration: {0}")]
    InvalidConfig(String),

    #[error("k = {k} is out of range (rook number is {rook_number})")]
    KOutOfRange { k: usize, rook_number: usize },

    #[error("configuration is not canonical in its rectangle")]
    NotCanonical,

    #[error("configuration does not lie on an n x n board with n = {0}")]
    NotSquareBoard(usize),

    #[error("collection is not domino-stable: {0}")]
    NotDominoStable(String),

    #[error("rank {rank} is out of range {min}..={max}")]
    RankOutOfRange { rank: usize, min: usize, max: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("counterexample found:\n{shape}")]
    CounterexampleFound {
        shape: String,
        report: Box<crate::analysis::VerificationReport>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
