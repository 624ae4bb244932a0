//! Dense univariate polynomials with exact integer coefficients.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisors, mobius, totient};

/// Constant term first. Trailing zero coefficients are never stored, so the
/// zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `t^k - 1`
    pub fn binomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] = -BigInt::one();
        c[k] += BigInt::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// `t^deg · p(1/t) == p(t)`
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// `p(t^k)`
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i * k] = a.clone();
        }
        Self::new(c)
    }

    /// Division with remainder by a divisor whose leading coefficient is ±1.
    /// Returns `None` if the divisor is zero or its leading coefficient is not a unit.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?;
        if !lead.abs().is_one() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(c)
    }
}

impl Mul for IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: IntegerPolynomial) -> IntegerPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Multiply a truncated power series in place by `t^e - 1`.
pub(crate) fn mul_binomial_series(c: &mut [BigInt], e: usize) {
    for i in (0..c.len()).rev() {
        if i >= e {
            let prev = c[i - e].clone();
            c[i] = prev - &c[i];
        } else {
            c[i] = -std::mem::take(&mut c[i]);
        }
    }
}

/// Divide a truncated power series in place by `t^e - 1` (invertible, constant term -1).
pub(crate) fn div_binomial_series(c: &mut [BigInt], e: usize) {
    for i in 0..c.len() {
        let prev = if i >= e {
            c[i - e].clone()
        } else {
            BigInt::zero()
        };
        c[i] = prev - &c[i];
    }
}

/// The `d`-th cyclotomic polynomial, from `Φ_d = ∏_{e | d} (t^e - 1)^{μ(d/e)}`
/// evaluated as a power series truncated past degree `φ(d)`.
pub fn cyclotomic(d: u64) -> IntegerPolynomial {
    assert!(d >= 1, "cyclotomic index must be positive");
    let len = totient(d) as usize + 1;
    let mut c = vec![BigInt::zero(); len];
    c[0] = BigInt::one();
    let divs = divisors(d);
    for &e in &divs {
        if mobius(d / e) == 1 {
            mul_binomial_series(&mut c, e as usize);
        }
    }
    for &e in &divs {
        if mobius(d / e) == -1 {
            div_binomial_series(&mut c, e as usize);
        }
    }
    IntegerPolynomial::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(p(&[-1, 1]).to_string(), "t - 1");
        assert_eq!(p(&[0, -3, 0, 2]).to_string(), "2t^3 - 3t");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-5]).to_string(), "-5");
    }

    #[test]
    fn exact_division() {
        let a = &p(&[1, 1]) * &p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[-1, 0, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])), None);
        let (q, r) = p(&[3, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert_eq!(r, p(&[4]));
        assert!(p(&[1, 2]).div_rem(&p(&[1, 2])).is_none());
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
        assert_eq!(cyclotomic(105).coeffs()[7], BigInt::from(-2));
    }

    #[test]
    fn product_of_cyclotomics_over_divisors_is_binomial() {
        for n in 1..60u64 {
            let prod = divisors(n)
                .into_iter()
                .fold(IntegerPolynomial::one(), |acc, d| &acc * &cyclotomic(d));
            assert_eq!(prod, IntegerPolynomial::binomial(n as usize), "n = {n}");
        }
    }

    #[test]
    fn substitute_power() {
        assert_eq!(p(&[1, -1, 1]).substitute_power(2), p(&[1, 0, -1, 0, 1]));
    }
}
