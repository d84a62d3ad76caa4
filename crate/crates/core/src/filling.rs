//! Homology of Dehn fillings of a manifold with torus boundary, expressed
//! through its rational longitude.
//!
//! Slopes are written `a·μ + b·λ` in a basis where `λ = (0, 1)` is the
//! rational longitude and `μ = (1, 0)` meets it once. The torsion part of
//! H₁(M) is presented by `diag(r₁, …, r_k)`; `i*(μ) = (ℓ, u)` and
//! `i*(λ) = (0, h)`. Filling along `(a, b)` is presented by
//!
//! ```text
//! [ a·ℓ        0   ]
//! [ a·u + b·h  diag(r) ]
//! ```
//!
//! whose determinant is `a · ℓ · r₁⋯r_k`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::branched_cover::{square_free_summands, AbelianGroup};
use crate::intlinalg::{self, gcd, Int, IntMatrix, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FillingError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error("({0}, {1}) is not a slope: coordinates must be coprime")]
    NotPrimitive(i64, i64),

    #[error("cannot parse slope {0:?}: expected `a/b`")]
    SlopeSyntax(String),

    #[error("invalid filling data: {0}")]
    InvalidData(String),

    #[error("filling along the rational longitude has infinite first homology")]
    InfiniteHomology,

    #[error("presentation determinant {det} disagrees with c_M * distance = {expected}")]
    Inconsistent { det: u128, expected: u128 },

    #[error("slopes are at distance {0}, expected 2")]
    NotDistanceTwo(u64),
}

pub type FillingResult<T> = Result<T, FillingError>;

/// A slope up to sign, normalized so `a >= 0` and `(0, 1)` when `a == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    a: i64,
    b: i64,
}

impl Slope {
    pub const MERIDIAN: Slope = Slope { a: 1, b: 0 };
    pub const LONGITUDE: Slope = Slope { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> FillingResult<Self> {
        if gcd(a as Int, b as Int) != 1 {
            return Err(FillingError::NotPrimitive(a, b));
        }
        Ok(if a < 0 || (a == 0 && b < 0) { Slope { a: -a, b: -b } } else { Slope { a, b } })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

impl FromStr for Slope {
    type Err = FillingError;

    fn from_str(s: &str) -> FillingResult<Self> {
        let bad = || FillingError::SlopeSyntax(s.to_string());
        let (a, b) = s.split_once('/').ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        Slope::new(a, b)
    }
}

/// Minimal geometric intersection number |a_x·b_y − b_x·a_y|.
pub fn slope_distance(x: Slope, y: Slope) -> u64 {
    let det = x.a as i128 * y.b as i128 - x.b as i128 * y.a as i128;
    det.unsigned_abs() as u64
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.signum() * a, a.signum(), 0)
    } else {
        let (g, s, t) = ext_gcd(b, a.rem_euclid(b));
        (g, t, s - a.div_euclid(b) * t)
    }
}

/// The slopes at distance one from both `alpha` and `beta`, which must be
/// at distance two. There are always exactly two.
pub fn common_distance_one_slopes(alpha: Slope, beta: Slope) -> FillingResult<[Slope; 2]> {
    let dist = slope_distance(alpha, beta);
    if dist != 2 {
        return Err(FillingError::NotDistanceTwo(dist));
    }
    let det = |x: (i64, i64), y: (i64, i64)| x.0 * y.1 - x.1 * y.0;
    let al = (alpha.a, alpha.b);
    let be = (beta.a, beta.b);
    // Complete alpha to a positive basis (alpha, lam).
    let (_, s, t) = ext_gcd(al.0, al.1);
    let mut lam = (-t, s);
    debug_assert_eq!(det(al, lam), 1);
    // beta = s·alpha + t·lam with t = ±2 and s odd; shift lam so s = 1.
    let t = det(al, be);
    let s = det(be, lam);
    let k = (1 - s) / t;
    lam = (lam.0 - k * al.0, lam.1 - k * al.1);
    let eps = t / 2;
    let second = (eps * al.0 + lam.0, eps * al.1 + lam.1);
    let mut out = [Slope::new(lam.0, lam.1)?, Slope::new(second.0, second.1)?];
    out.sort();
    Ok(out)
}

/// Homological data of the exterior M in the frame where the filling slope
/// α is the meridian μ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MData {
    pub ell: u64,
    pub r: Vec<u64>,
    pub u: Vec<u64>,
    pub h: Vec<u64>,
}

/// ord_H(h) = lcm over i of r_i / gcd(h_i, r_i).
pub fn element_order(h: &[u64], r: &[u64]) -> u64 {
    h.iter().zip(r).fold(1u64, |acc, (&hi, &ri)| {
        let o = ri / gcd(hi as Int, ri as Int) as u64;
        acc / gcd(acc as Int, o as Int) as u64 * o
    })
}

impl MData {
    pub fn new(ell: u64, r: Vec<u64>, u: Vec<u64>, h: Vec<u64>) -> FillingResult<Self> {
        let m = MData { ell, r, u, h };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> FillingResult<()> {
        let bad = |msg: String| Err(FillingError::InvalidData(msg));
        if self.ell < 1 {
            return bad("ell must be at least 1".into());
        }
        if self.u.len() != self.r.len() || self.h.len() != self.r.len() {
            return bad(format!(
                "u and h must have {} entries (got {} and {})",
                self.r.len(),
                self.u.len(),
                self.h.len()
            ));
        }
        if let Some(&ri) = self.r.iter().find(|&&ri| ri < 2) {
            return bad(format!("invariant factor {ri} is less than 2"));
        }
        if let Some(w) = self.r.windows(2).find(|w| w[1] % w[0] != 0) {
            return bad(format!("{} does not divide {}", w[0], w[1]));
        }
        for i in 0..self.r.len() {
            if self.u[i] >= self.r[i] || self.h[i] >= self.r[i] {
                return bad(format!("u_{} and h_{} must be reduced mod {}", i + 1, i + 1, self.r[i]));
            }
        }
        let ord = element_order(&self.h, &self.r);
        if ord != self.ell {
            return bad(format!("ord(h) = {ord} but ell = {}", self.ell));
        }
        Ok(())
    }

    pub fn torsion_order(&self) -> u64 {
        self.r.iter().product()
    }

    pub fn h_is_zero(&self) -> bool {
        self.h.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for MData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ell={} r={:?} u={:?} h={:?}", self.ell, self.r, self.u, self.h)
    }
}

/// c_M = ℓ · r₁⋯r_k.
pub fn rational_longitude_constant(m: &MData) -> u64 {
    m.ell * m.torsion_order()
}

pub fn filling_presentation(m: &MData, eta: Slope) -> FillingResult<IntMatrix> {
    let k = m.r.len();
    let (a, b) = (eta.a as Int, eta.b as Int);
    let mut p = IntMatrix::zeros(k + 1, k + 1);
    p[(0, 0)] = intlinalg::mul(a, m.ell as Int)?;
    for i in 0..k {
        let au = intlinalg::mul(a, m.u[i] as Int)?;
        let bh = intlinalg::mul(b, m.h[i] as Int)?;
        p[(i + 1, 0)] = intlinalg::add(au, bh)?;
        p[(i + 1, i + 1)] = m.r[i] as Int;
    }
    Ok(p)
}

/// |H₁(M(η))| = c_M · Δ(η, λ), checked against the presentation matrix.
pub fn filling_order(m: &MData, eta: Slope) -> FillingResult<u64> {
    if eta == Slope::LONGITUDE {
        return Err(FillingError::InfiniteHomology);
    }
    let dist = slope_distance(eta, Slope::LONGITUDE);
    let expected = dist as u128 * rational_longitude_constant(m) as u128;
    let det = intlinalg::determinant(&filling_presentation(m, eta)?)?.unsigned_abs();
    if det != expected {
        return Err(FillingError::Inconsistent { det, expected });
    }
    u64::try_from(expected).map_err(|_| LinalgError::Overflow.into())
}

/// Presentation matrices (A, B) of the fillings along μ and μ ± 2λ.
pub fn cosmetic_pair(m: &MData, sign: i8) -> FillingResult<(IntMatrix, IntMatrix)> {
    let beta = Slope::new(1, if sign < 0 { -2 } else { 2 })?;
    Ok((filling_presentation(m, Slope::MERIDIAN)?, filling_presentation(m, beta)?))
}

/// The divisibility facts of the square-free argument at one summand of H.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub index: usize,
    pub gcd_ell_r: u64,
    /// gcd(ℓ, r_i) | u_i
    pub divides_u: bool,
    /// gcd(ℓ, r_i) | u_i ± 2h_i, for the sign used
    pub divides_u_shifted: bool,
    /// gcd(ℓ, r_i) | h_i
    pub divides_h: bool,
    /// r_i | h_i
    pub r_divides_h: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub order: u64,
    pub odd_order: bool,
    pub snf_a: AbelianGroup,
    pub snf_a_square_free: bool,
    /// Signs s ∈ {+1, −1} with SNF(A) = SNF(B_s).
    pub matching_signs: Vec<i8>,
    pub hypotheses_hold: bool,
    pub chain_steps: Vec<ChainStep>,
    pub h_trivial: bool,
    /// h lies in the integer column span of diag(r).
    pub span_check: bool,
}

impl TheoremCheck {
    /// Hypotheses force h = 0, and both routes to "h = 0" agree.
    pub fn is_consistent(&self) -> bool {
        self.h_trivial == self.span_check && (!self.hypotheses_hold || self.h_trivial)
    }

    /// Every divisibility step of the argument holds (meaningful when the
    /// hypotheses hold).
    pub fn chain_holds(&self) -> bool {
        self.chain_steps.iter().all(|s| s.divides_u && s.divides_u_shifted && s.divides_h && s.r_divides_h)
    }
}

pub fn verify_squarefree_theorem(m: &MData) -> FillingResult<TheoremCheck> {
    let (a, _) = cosmetic_pair(m, 1)?;
    let order = rational_longitude_constant(m);
    let snf_a = intlinalg::invariant_factors(&a)?;
    let snf_a_square_free = square_free_summands(&snf_a).all_square_free;
    let mut matching_signs = Vec::new();
    for sign in [1i8, -1] {
        let (_, b) = cosmetic_pair(m, sign)?;
        if intlinalg::invariant_factors(&b)? == snf_a {
            matching_signs.push(sign);
        }
    }
    let odd_order = order % 2 == 1;
    let hypotheses_hold = odd_order && snf_a_square_free && !matching_signs.is_empty();

    let sign = matching_signs.first().copied().unwrap_or(1) as i64;
    let chain_steps = (0..m.r.len())
        .map(|i| {
            let g = gcd(m.ell as Int, m.r[i] as Int);
            let shifted = m.u[i] as Int + 2 * sign as Int * m.h[i] as Int;
            ChainStep {
                index: i + 1,
                gcd_ell_r: g as u64,
                divides_u: m.u[i] as Int % g == 0,
                divides_u_shifted: shifted % g == 0,
                divides_h: m.h[i] as Int % g == 0,
                r_divides_h: m.h[i].is_multiple_of(m.r[i]),
            }
        })
        .collect();

    let h_trivial = m.h.iter().zip(&m.r).all(|(&h, &r)| h % r == 0);
    let presentation = IntMatrix::diagonal(m.r.len(), m.r.len(), &m.r.iter().map(|&x| x as Int).collect::<Vec<_>>());
    let rhs: Vec<Int> = m.h.iter().map(|&x| x as Int).collect();
    let span_check = intlinalg::solve_integer_system(&presentation, &rhs)?.is_some();

    Ok(TheoremCheck {
        order,
        odd_order,
        snf_a,
        snf_a_square_free,
        matching_signs,
        hypotheses_hold,
        chain_steps,
        h_trivial,
        span_check,
    })
}

/// Invariant-factor chains r₁ | ⋯ | r_k of odd entries ≥ 3 with product at
/// most `bound`, in lexicographic order.
fn odd_chains(bound: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, product: u64, bound: u64, out: &mut Vec<Vec<u64>>) {
        out.push(prefix.clone());
        let last = prefix.last().copied();
        let mut next = last.unwrap_or(3);
        while product * next <= bound {
            if last.is_none_or(|l| next % l == 0) {
                prefix.push(next);
                extend(prefix, product * next, bound, out);
                prefix.pop();
            }
            next += last.unwrap_or(2);
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, bound, &mut out);
    out
}

fn vectors_mod(r: &[u64]) -> impl Iterator<Item = Vec<u64>> + '_ {
    let total: u64 = r.iter().product();
    (0..total).map(move |mut idx| {
        let mut v = vec![0; r.len()];
        for i in (0..r.len()).rev() {
            v[i] = idx % r[i];
            idx /= r[i];
        }
        v
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub max_order: u64,
    pub require_square_free: bool,
    /// Number of (ℓ, r, u, h) instances enumerated.
    pub enumerated: u64,
    /// Instances whose hypotheses hold (under the square-free requirement if set).
    pub hypotheses_met: u64,
    pub counterexamples: Vec<MData>,
}

/// Per-instance reference check: (hypotheses met, counterexample).
pub fn check_instance(m: &MData, require_square_free: bool) -> FillingResult<(bool, bool)> {
    let check = verify_squarefree_theorem(m)?;
    let met = check.odd_order && !check.matching_signs.is_empty() && (!require_square_free || check.snf_a_square_free);
    Ok((met, met && !m.h_is_zero()))
}

/// Mixed-radix index of `v` mod `r`, matching the order of `vectors_mod`.
fn radix_index(v: &[u64], r: &[u64]) -> usize {
    v.iter().zip(r).fold(0, |acc, (&x, &ri)| acc * ri as usize + x as usize)
}

/// The invariant factors of A depend only on (ℓ, r, u), and B for h is A
/// with u replaced by u ± 2h. So one SNF per u suffices for a whole shape.
fn search_shape(ell: u64, r: &[u64], require_square_free: bool) -> FillingResult<(u64, u64, Vec<MData>)> {
    let vectors: Vec<Vec<u64>> = vectors_mod(r).collect();
    let mut groups = Vec::with_capacity(vectors.len());
    for u in &vectors {
        let m = MData { ell, r: r.to_vec(), u: u.clone(), h: vec![0; r.len()] };
        let (a, _) = cosmetic_pair(&m, 1)?;
        let g = intlinalg::invariant_factors(&a)?;
        let sf = square_free_summands(&g).all_square_free;
        groups.push((g, sf));
    }

    let odd = (ell * r.iter().product::<u64>()) % 2 == 1;
    let mut enumerated = 0;
    let mut met = 0;
    let mut found = Vec::new();
    for h in vectors.iter().filter(|h| element_order(h, r) == ell) {
        let h_zero = h.iter().all(|&x| x == 0);
        for (iu, u) in vectors.iter().enumerate() {
            enumerated += 1;
            let (ga, sf) = &groups[iu];
            let matches = [1i64, -1].iter().any(|&s| {
                let shifted: Vec<u64> = u
                    .iter()
                    .zip(h)
                    .zip(r)
                    .map(|((&ui, &hi), &ri)| (ui as i64 + 2 * s * hi as i64).rem_euclid(ri as i64) as u64)
                    .collect();
                &groups[radix_index(&shifted, r)].0 == ga
            });
            if odd && matches && (!require_square_free || *sf) {
                met += 1;
                if !h_zero {
                    found.push(MData { ell, r: r.to_vec(), u: u.clone(), h: h.clone() });
                }
            }
        }
    }
    Ok((enumerated, met, found))
}

/// Exhaustive search over all odd-order data with ℓ·r₁⋯r_k ≤ `max_order`,
/// ord(h) = ℓ, and u, h reduced mod r. Output order is lexicographic in
/// (order, k, r, ℓ, h, u) whether or not the work is split across threads.
pub fn search_counterexamples(max_order: u64, require_square_free: bool) -> FillingResult<SearchReport> {
    let mut shapes: Vec<(u64, usize, Vec<u64>, u64)> = Vec::new();
    for r in odd_chains(max_order) {
        let torsion: u64 = r.iter().product();
        let exponent = r.last().copied().unwrap_or(1);
        // ord(h) divides the exponent of H.
        for ell in (1..=exponent).filter(|e| exponent % e == 0) {
            if ell * torsion <= max_order {
                shapes.push((ell * torsion, r.len(), r.clone(), ell));
            }
        }
    }
    shapes.sort();

    let results = shapes
        .par_iter()
        .map(|(_, _, r, ell)| search_shape(*ell, r, require_square_free))
        .collect::<FillingResult<Vec<_>>>()?;

    let mut report =
        SearchReport { max_order, require_square_free, enumerated: 0, hypotheses_met: 0, counterexamples: Vec::new() };
    for (n, met, found) in results {
        report.enumerated += n;
        report.hypotheses_met += met;
        report.counterexamples.extend(found);
    }
    Ok(report)
}
