use std::fmt;

use serde::{Deserialize, Serialize};

use super::{class_count, rook_number};
use crate::geometry::CellCollection;

/// Coefficients `[r~_0, ..., r~_d]` of a switching rook polynomial, ascending
/// degree; `d` is the rook number. Serializes as a bare JSON array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SwitchingPolynomial {
    coeffs: Vec<u64>,
}

impl SwitchingPolynomial {
    pub fn new(coeffs: Vec<u64>) -> Self {
        SwitchingPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Leading coefficient, the number of classes of maximum configurations.
    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn eval(&self, t: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }
}

/// Renders as `1 + 8t + 19t^2`.
impl fmt::Display for SwitchingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, c) => write!(f, "{c}t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn switching_polynomial(p: &CellCollection) -> SwitchingPolynomial {
    let d = rook_number(p);
    let coeffs = (0..=d)
        .map(|k| class_count(p, k).expect("k within rook number") as u64)
        .collect();
    SwitchingPolynomial { coeffs }
}
