use super::RookConfig;
use crate::error::{Error, Result};
use crate::geometry::Cell;

/// The complement map on classes of the `n x n` square.
///
/// `f` must be canonical: its columns and rows increase together. The rooks
/// of the result sit on the unused columns and unused rows of `f`, paired in
/// increasing order; the empty configuration maps to the main diagonal.
pub fn square_complement(n: usize, f: &RookConfig) -> Result<RookConfig> {
    let side = n as i32;
    if n == 0 || f.cells().iter().any(|c| c.x < 1 || c.y < 1 || c.x > side || c.y > side) {
        return Err(Error::NotSquareBoard(n));
    }
    let cells = f.cells();
    // Sorted by x already; canonical means y strictly increases with it.
    if cells.windows(2).any(|w| w[0].x >= w[1].x || w[0].y >= w[1].y) {
        return Err(Error::NotCanonical);
    }
    let free_cols = (1..=side).filter(|&x| !cells.iter().any(|c| c.x == x));
    let free_rows = (1..=side).filter(|&y| !cells.iter().any(|c| c.y == y));
    Ok(free_cols.zip(free_rows).map(|(x, y)| Cell::new(x, y)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rc(cells: &[(i32, i32)]) -> RookConfig {
        cells.iter().map(|&c| Cell::from(c)).collect()
    }

    #[test]
    fn eight_by_eight_example() {
        let f = rc(&[(1, 2), (6, 4), (7, 6)]);
        assert_eq!(
            square_complement(8, &f).unwrap(),
            rc(&[(2, 1), (3, 3), (4, 5), (5, 7), (8, 8)])
        );
    }

    #[test]
    fn empty_and_full() {
        assert_eq!(square_complement(2, &RookConfig::empty()).unwrap(), rc(&[(1, 1), (2, 2)]));
        assert_eq!(square_complement(2, &rc(&[(1, 1), (2, 2)])).unwrap(), RookConfig::empty());
    }

    #[test]
    fn errors() {
        assert!(matches!(square_complement(2, &rc(&[(1, 2), (2, 1)])), Err(Error::NotCanonical)));
        assert!(matches!(square_complement(2, &rc(&[(3, 3)])), Err(Error::NotSquareBoard(2))));
        assert!(matches!(square_complement(0, &RookConfig::empty()), Err(Error::NotSquareBoard(0))));
    }
}
