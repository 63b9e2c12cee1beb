//! Dense integer polynomials and exact rationals.
//!
//! [`IntPolynomial`] is the zero-constant-term form that Hosoya polynomials
//! take; [`Polynomial`] is the general form that derivatives produce.

mod rational;

use std::fmt;

use crate::error::{Error, Result};

pub use rational::Rational;

/// Dense polynomial `c_0 + c_1 x + ... + c_D x^D` over `i128`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    /// `coeffs[k]` is the coefficient of `x^k`; no trailing zeros.
    coeffs: Vec<i128>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    /// Coefficients from the constant term upwards.
    pub fn from_coefficients(mut coeffs: Vec<i128>) -> Self {
        trim(&mut coeffs);
        Polynomial { coeffs }
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval_rational(&self, at: Rational) -> Result<Rational> {
        horner(&self.coeffs, at)
    }

    /// The `order`-th formal derivative.
    pub fn derivative(&self, order: usize) -> Result<Polynomial> {
        if order == 0 {
            return Ok(self.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(order)
            .map(|(k, &c)| {
                falling_factorial(k as i128, order)
                    .and_then(|f| f.checked_mul(c))
                    .ok_or(Error::Overflow("polynomial derivative"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_coefficients(coeffs))
    }

    pub fn checked_add(&self, rhs: &Polynomial) -> Result<Polynomial> {
        Ok(Polynomial::from_coefficients(add_dense(
            &self.coeffs,
            &rhs.coeffs,
        )?))
    }
}

/// Integer polynomial with zero constant term: `c_1 x + ... + c_D x^D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    /// `coeffs[k - 1]` is the coefficient of `x^k`; no trailing zeros.
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    /// Coefficients `c_1, c_2, ..., c_D`.
    pub fn from_coefficients(mut coeffs: Vec<i128>) -> Self {
        trim(&mut coeffs);
        IntPolynomial { coeffs }
    }

    /// `c_1, ..., c_D`.
    pub fn coefficients(&self) -> &[i128] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero for `k = 0` and beyond the degree.
    pub fn coefficient(&self, k: usize) -> i128 {
        match k {
            0 => 0,
            _ => self.coeffs.get(k - 1).copied().unwrap_or(0),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `D`, or 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        if !self.coeffs.is_empty() {
            coeffs.push(0);
            coeffs.extend_from_slice(&self.coeffs);
        }
        Polynomial { coeffs }
    }

    pub fn eval_rational(&self, at: Rational) -> Result<Rational> {
        horner(&self.coeffs, at)?.checked_mul(at)
    }

    pub fn derivative(&self, order: usize) -> Result<Polynomial> {
        self.to_polynomial().derivative(order)
    }

    /// `x^power * p(x)`.
    pub fn shift_multiply(&self, power: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0; power];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    pub fn checked_add(&self, rhs: &IntPolynomial) -> Result<IntPolynomial> {
        Ok(IntPolynomial::from_coefficients(add_dense(
            &self.coeffs,
            &rhs.coeffs,
        )?))
    }

    /// Sum of all coefficients, i.e. the value at `x = 1`.
    pub fn coefficient_sum(&self) -> Result<i128> {
        self.coeffs
            .iter()
            .try_fold(0i128, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow("coefficient sum"))
    }
}

fn trim(coeffs: &mut Vec<i128>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

fn add_dense(a: &[i128], b: &[i128]) -> Result<Vec<i128>> {
    (0..a.len().max(b.len()))
        .map(|k| {
            let x = a.get(k).copied().unwrap_or(0);
            let y = b.get(k).copied().unwrap_or(0);
            x.checked_add(y)
                .ok_or(Error::Overflow("polynomial addition"))
        })
        .collect()
}

fn horner(coeffs: &[i128], at: Rational) -> Result<Rational> {
    coeffs.iter().rev().try_fold(Rational::ZERO, |acc, &c| {
        acc.checked_mul(at)?.checked_add(Rational::from_integer(c))
    })
}

/// `k (k - 1) ... (k - order + 1)`.
pub(crate) fn falling_factorial(k: i128, order: usize) -> Option<i128> {
    (0..order as i128).try_fold(1i128, |acc, j| acc.checked_mul(k - j))
}

fn write_terms<'a>(
    f: &mut impl fmt::Write,
    terms: impl Iterator<Item = (usize, &'a i128)>,
) -> fmt::Result {
    let mut first = true;
    for (k, &c) in terms.filter(|(_, c)| **c != 0) {
        let magnitude = c.unsigned_abs();
        if first {
            if c < 0 {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c < 0 { " - " } else { " + " })?;
        }
        first = false;
        match (k, magnitude) {
            (0, m) => write!(f, "{m}")?,
            (1, 1) => f.write_str("x")?,
            (1, m) => write!(f, "{m}*x")?,
            (k, 1) => write!(f, "x^{k}")?,
            (k, m) => write!(f, "{m}*x^{k}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Renders as `c1*x + c2*x^2 + ...`, omitting zero terms and unit
/// coefficients; the zero polynomial renders as `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_terms(
            &mut s,
            self.coeffs.iter().enumerate().map(|(i, c)| (i + 1, c)),
        )?;
        f.pad(&s)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_terms(&mut s, self.coeffs.iter().enumerate())?;
        f.pad(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ip(c: &[i128]) -> IntPolynomial {
        IntPolynomial::from_coefficients(c.to_vec())
    }

    fn half() -> Rational {
        Rational::new(1, 2).unwrap()
    }

    #[test]
    fn evaluation() {
        assert_eq!(
            ip(&[2, 1]).eval_rational(half()).unwrap(),
            Rational::new(5, 4).unwrap()
        );
        assert_eq!(
            ip(&[7, 3, 9]).eval_rational(Rational::ZERO).unwrap(),
            Rational::ZERO
        );
        assert_eq!(
            ip(&[5, 5]).eval_rational(Rational::ONE).unwrap(),
            Rational::from_integer(10)
        );
        assert!(matches!(
            ip(&[1; 130]).eval_rational(half()),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn derivatives() {
        let p = ip(&[2, 1]);
        assert_eq!(
            p.derivative(1).unwrap(),
            Polynomial::from_coefficients(vec![2, 2])
        );
        assert_eq!(p.derivative(0).unwrap(), p.to_polynomial());
        assert!(ip(&[9, 12]).derivative(3).unwrap().is_zero());
        assert!(matches!(
            ip(&[i128::MAX]).shift_multiply(1).derivative(1),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn shifts() {
        assert_eq!(ip(&[2, 1]).shift_multiply(1), ip(&[0, 2, 1]));
        assert_eq!(
            IntPolynomial::zero().shift_multiply(2),
            IntPolynomial::zero()
        );
        assert_eq!(ip(&[5, 5]).shift_multiply(2), ip(&[0, 0, 5, 5]));
    }

    #[test]
    fn rendering() {
        assert_eq!(ip(&[2, 1]).to_string(), "2*x + x^2");
        assert_eq!(ip(&[9, 12]).to_string(), "9*x + 12*x^2");
        assert_eq!(ip(&[13, 20, 3]).to_string(), "13*x + 20*x^2 + 3*x^3");
        assert_eq!(ip(&[1]).to_string(), "x");
        assert_eq!(ip(&[0, 0, 5]).to_string(), "5*x^3");
        assert_eq!(ip(&[-1, 0, -4]).to_string(), "-x - 4*x^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(
            Polynomial::from_coefficients(vec![2, 2]).to_string(),
            "2 + 2*x"
        );
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = ip(&[9, 12, 0, 0]);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.coefficient(0), 0);
        assert_eq!(p.coefficient(4), 0);
        assert_eq!(IntPolynomial::zero().degree(), 0);
    }

    fn coeffs() -> impl Strategy<Value = Vec<i128>> {
        prop::collection::vec(-1000i128..1000, 0..8)
    }

    proptest! {
        #[test]
        fn first_derivative_at_one_is_weighted_sum(c in coeffs()) {
            let p = IntPolynomial::from_coefficients(c.clone());
            let expected: i128 = c.iter().enumerate().map(|(i, &v)| (i as i128 + 1) * v).sum();
            let value = p.derivative(1).unwrap().eval_rational(Rational::ONE).unwrap();
            prop_assert_eq!(value, Rational::from_integer(expected));
        }

        #[test]
        fn derivative_is_additive(a in coeffs(), b in coeffs(), order in 0usize..5) {
            let (p, q) = (IntPolynomial::from_coefficients(a), IntPolynomial::from_coefficients(b));
            let lhs = p.checked_add(&q).unwrap().derivative(order).unwrap();
            let rhs = p.derivative(order).unwrap().checked_add(&q.derivative(order).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn evaluation_matches_power_sum(c in coeffs(), num in -20i128..20, den in 1i128..20) {
            let at = Rational::new(num, den).unwrap();
            let p = IntPolynomial::from_coefficients(c.clone());
            let direct = Rational::checked_sum(c.iter().enumerate().map(|(i, &v)| {
                at.checked_pow(i as u32 + 1).unwrap().checked_mul(Rational::from_integer(v)).unwrap()
            })).unwrap();
            prop_assert_eq!(p.eval_rational(at).unwrap(), direct);
        }
    }
}
