//! Switching rook polynomials and domino-stability of collections of cells.
//!
//! The crate is organised in four layers:
//!
//! * [`geometry`]: normalized collections, runs, maximal rectangles,
//!   residues, gluings and the domino-stability predicate;
//! * [`rook`]: rook configurations, switches, class counting and the
//!   switching rook polynomial;
//! * [`analysis`]: palindromicity and the per-shape / corpus verification
//!   harness relating the two;
//! * [`enumerate`]: free polyominoes and weakly connected collections of a
//!   given rank, up to the symmetries of the square.

pub mod analysis;
mod dsu;
pub mod enumerate;
mod error;
pub mod geometry;
pub mod rook;

pub use error::{Error, Result};
pub use geometry::{Cell, CellCollection, CellRect};
pub use rook::{RookConfig, SwitchingPolynomial};
