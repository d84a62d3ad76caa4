//! First homology of the branched double cover from a Goeritz matrix, and the
//! square-free-summand test.

use std::fmt;

use thiserror::Error;

use crate::diagram::GoeritzMatrix;
use crate::intlinalg::{self, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BranchedCoverError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error("Goeritz determinant {0} is even: input is not a knot")]
    NotAKnot(u64),
}

/// A finite abelian group Z/d₁ ⊕ ⋯ ⊕ Z/d_n in invariant-factor form:
/// every d_i ≥ 2 and d_i | d_{i+1}. The empty list is the trivial group.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invariant factor {0} is less than 2")]
    FactorTooSmall(u64),
    #[error("invariant factors {0} and {1} violate the divisibility chain")]
    NotAChain(u64, u64),
    #[error("cannot parse invariant factor list {0:?}")]
    Parse(String),
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Validated constructor.
    pub fn new(factors: Vec<u64>) -> Result<Self, GroupError> {
        if let Some(&f) = factors.iter().find(|&&f| f < 2) {
            return Err(GroupError::FactorTooSmall(f));
        }
        if let Some(w) = factors.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(GroupError::NotAChain(w[0], w[1]));
        }
        Ok(Self { factors })
    }

    /// Caller guarantees the invariant-factor form (used on SNF output).
    pub(crate) fn from_chain(factors: Vec<u64>) -> Self {
        debug_assert!(Self::new(factors.clone()).is_ok(), "{factors:?}");
        Self { factors }
    }

    /// Parses the pipe-separated form used in knot tables: `3|9`, or an
    /// empty string for the trivial group.
    pub fn parse_pipe(text: &str) -> Result<Self, GroupError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::trivial());
        }
        let factors = text
            .split('|')
            .map(|s| s.trim().parse::<u64>().map_err(|_| GroupError::Parse(text.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(factors)
    }

    pub fn to_pipe(&self) -> String {
        self.factors.iter().map(u64::to_string).collect::<Vec<_>>().join("|")
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Where the square-free test failed: 1-based summand index, the factor, and
/// a prime whose square divides it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareFreeWitness {
    pub index: usize,
    pub factor: u64,
    pub prime: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareFreeReport {
    pub all_square_free: bool,
    pub witness: Option<SquareFreeWitness>,
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Smallest prime whose square divides `n`, if any.
pub fn square_divisor(n: u64) -> Option<u64> {
    factorize(n).into_iter().find(|&(_, e)| e >= 2).map(|(p, _)| p)
}

pub fn is_square_free(n: u64) -> bool {
    square_divisor(n).is_none()
}

pub fn square_free_summands(h: &AbelianGroup) -> SquareFreeReport {
    let witness = h
        .factors
        .iter()
        .enumerate()
        .find_map(|(i, &d)| square_divisor(d).map(|prime| SquareFreeWitness { index: i + 1, factor: d, prime }));
    SquareFreeReport { all_square_free: witness.is_none(), witness }
}

/// H₁(Σ(K)) as the group presented by the Goeritz matrix.
pub fn branched_homology(g: &GoeritzMatrix) -> Result<AbelianGroup, BranchedCoverError> {
    Ok(intlinalg::invariant_factors(&g.matrix)?)
}

/// |det G|, which must be odd for a knot.
pub fn knot_determinant(g: &GoeritzMatrix) -> Result<u64, BranchedCoverError> {
    let det = intlinalg::determinant(&g.matrix)?.unsigned_abs();
    let det = u64::try_from(det).map_err(|_| LinalgError::Overflow)?;
    if det % 2 == 0 {
        return Err(BranchedCoverError::NotAKnot(det));
    }
    Ok(det)
}
