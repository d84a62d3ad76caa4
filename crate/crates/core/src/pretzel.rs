//! The pretzel family P(−p, p−1, r) with p even, whose determinant is
//! p² − p + r: every odd n ≥ 3 is realized, with r = n + p − p².

use thiserror::Error;

use crate::branched_cover::{self, is_square_free};
use crate::diagram::{self, PlanarDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PretzelError {
    #[error("target determinant {0} must be odd and at least 3")]
    BadTarget(u64),
}

/// det P(−p, q, r) = |−pq − pr + qr|.
pub fn pretzel_determinant(p: i64, q: i64, r: i64) -> u64 {
    (-p * q - p * r + q * r).unsigned_abs()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PretzelHit {
    pub p: u64,
    pub q: u64,
    pub r: u64,
    pub det: u64,
    pub square_free_det: bool,
}

impl PretzelHit {
    /// A diagram of P(−p, q, r).
    pub fn diagram(&self) -> Result<PlanarDiagram, diagram::DiagramError> {
        diagram::pretzel_diagram(-(self.p as i64), self.q as i64, self.r as i64)
    }

    /// Determinant of the generated diagram via its Goeritz matrix.
    pub fn diagram_determinant(&self) -> Result<u64, Box<dyn std::error::Error + Send + Sync>> {
        let g = diagram::default_goeritz(&self.diagram()?)?;
        Ok(branched_cover::knot_determinant(&g)?)
    }
}

/// All even p ≥ 2 with r = n + p − p² ≥ 1, in increasing p.
pub fn pretzel_search(n: u64) -> Result<Vec<PretzelHit>, PretzelError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(PretzelError::BadTarget(n));
    }
    let square_free_det = is_square_free(n);
    Ok((2u64..)
        .step_by(2)
        .take_while(|p| p * p - p < n)
        .map(|p| PretzelHit { p, q: p - 1, r: n + p - p * p, det: n, square_free_det })
        .collect())
}
