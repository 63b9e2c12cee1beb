//! Indices summed pair by pair straight from their definitions, without going
//! through the Hosoya polynomial. Unreachable pairs are skipped.

use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;
use crate::polynomial::Rational;

fn finite_distances(matrix: &DistanceMatrix) -> impl Iterator<Item = i128> + '_ {
    matrix.pairs().filter_map(|(_, _, d)| d.map(|d| d as i128))
}

fn power_sum(matrix: &DistanceMatrix, exp: u32) -> Result<Rational> {
    finite_distances(matrix)
        .try_fold(0i128, |acc, d| acc.checked_add(d.checked_pow(exp)?))
        .map(Rational::from_integer)
        .ok_or(Error::Overflow("distance power sum"))
}

fn frac(p: i128, q: i128) -> Rational {
    Rational::new(p, q).expect("nonzero constant denominator")
}

/// `Σ d(i, j)`.
pub fn wiener(matrix: &DistanceMatrix) -> Result<i128> {
    Ok(power_sum(matrix, 1)?.numer())
}

/// `(1/2) Σ [d² + d]`.
pub fn hyper_wiener(matrix: &DistanceMatrix) -> Result<Rational> {
    power_sum(matrix, 2)?
        .checked_add(power_sum(matrix, 1)?)?
        .checked_mul(frac(1, 2))
}

/// `(1/6) Σ d³ + (1/2) Σ d² + (1/3) Σ d`.
pub fn tsz(matrix: &DistanceMatrix) -> Result<Rational> {
    Rational::checked_sum([
        frac(1, 6).checked_mul(power_sum(matrix, 3)?)?,
        frac(1, 2).checked_mul(power_sum(matrix, 2)?)?,
        frac(1, 3).checked_mul(power_sum(matrix, 1)?)?,
    ])
}

/// `Σ 1/d(i, j)`.
pub fn harary(matrix: &DistanceMatrix) -> Result<Rational> {
    let mut total = Rational::ZERO;
    for d in finite_distances(matrix) {
        total = total.checked_add(frac(1, d))?;
    }
    Ok(total)
}

/// `Σ_i Σ_{j ≠ i} 2^{-d(i, j)}` over ordered pairs.
pub fn closeness(matrix: &DistanceMatrix) -> Result<Rational> {
    let mut total = Rational::ZERO;
    for d in finite_distances(matrix) {
        let d = u32::try_from(d).map_err(|_| Error::Overflow("closeness"))?;
        total = total.checked_add(frac(1, 2).checked_pow(d)?)?;
    }
    total.checked_mul(Rational::from_integer(2))
}
