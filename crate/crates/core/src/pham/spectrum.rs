use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use super::enumerate::SumDistribution;
use crate::arith::{divisors, gcd, mobius, totient};
use crate::error::{Error, Result};
use crate::poly::{cyclotomic, div_binomial_series, mul_binomial_series, IntegerPolynomial};

/// Reduced rotation number `c/d` with `0 ≤ c < d`, standing for the eigenvalue
/// `exp(2πi c/d)`. The eigenvalue 1 is `0/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rotation {
    num: u64,
    den: u64,
}

impl Rotation {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let num = num % den;
        let g = gcd(num, den);
        if num == 0 {
            Self { num: 0, den: 1 }
        } else {
            Self {
                num: num / g,
                den: den / g,
            }
        }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    /// Multiplicative order of the eigenvalue.
    pub fn denom(&self) -> u64 {
        self.den
    }

    /// The rotation of the complex-conjugate eigenvalue.
    pub fn conjugate(&self) -> Self {
        Self::new(self.den - self.num, self.den)
    }
}

impl Ord for Rotation {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rotation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Eigenvalues of the monodromy on the middle homology of the Milnor fiber,
/// with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromySpectrum {
    entries: BTreeMap<Rotation, u64>,
    total: u64,
}

impl MonodromySpectrum {
    pub(crate) fn from_distribution(dist: &SumDistribution) -> Self {
        let mut entries = BTreeMap::new();
        for (&r, &count) in &dist.counts {
            *entries.entry(Rotation::new(r, dist.lcm)).or_insert(0) += count;
        }
        let total = entries.values().sum();
        Self { entries, total }
    }

    pub fn entries(&self) -> &BTreeMap<Rotation, u64> {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn multiplicity(&self, r: Rotation) -> u64 {
        self.entries.get(&r).copied().unwrap_or(0)
    }

    /// Groups the eigenvalues into Galois orbits, giving `Δ = ∏ Φ_d^{m_d}`.
    ///
    /// `m_d` comes from counting eigenvalues whose order divides `e` for every
    /// `e`, Möbius-inverting to counts of exact order `d`, and dividing by
    /// `φ(d)`. Fails with an internal error if the counts are not those of a
    /// product of cyclotomic polynomials.
    pub fn cyclotomic_factorization(&self) -> Result<CyclotomicFactorization> {
        let lcm = self
            .entries
            .keys()
            .fold(1u64, |acc, r| acc / gcd(acc, r.den) * r.den);
        let divs = divisors(lcm);
        let dividing: BTreeMap<u64, i128> = divs
            .iter()
            .map(|&e| {
                let count = self
                    .entries
                    .iter()
                    .filter(|(r, _)| e % r.den == 0)
                    .map(|(_, &m)| m as i128)
                    .sum();
                (e, count)
            })
            .collect();

        let mut factors = BTreeMap::new();
        for &d in &divs {
            let exact: i128 = divisors(d)
                .into_iter()
                .map(|e| mobius(d / e) as i128 * dividing[&e])
                .sum();
            let phi = totient(d) as i128;
            if exact < 0 || exact % phi != 0 {
                return Err(Error::Internal(format!(
                    "{exact} eigenvalues of order {d} is not a multiple of φ({d}) = {phi}"
                )));
            }
            let m = (exact / phi) as u64;
            if m == 0 {
                continue;
            }
            let uniform = (0..d)
                .filter(|&c| gcd(c, d) == 1)
                .all(|c| self.multiplicity(Rotation::new(c, d)) == m);
            if !uniform {
                return Err(Error::Internal(format!(
                    "primitive {d}-th roots of unity occur with unequal multiplicities"
                )));
            }
            factors.insert(d, m);
        }
        let fact = CyclotomicFactorization { factors };
        if fact.degree() != self.total {
            return Err(Error::Internal(format!(
                "cyclotomic degree {} differs from spectrum size {}",
                fact.degree(),
                self.total
            )));
        }
        Ok(fact)
    }
}

/// `∏ Φ_d(t)^{m_d}`, keyed by `d`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CyclotomicFactorization {
    factors: BTreeMap<u64, u64>,
}

impl CyclotomicFactorization {
    pub fn factors(&self) -> &BTreeMap<u64, u64> {
        &self.factors
    }

    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|(&d, &m)| totient(d) * m).sum()
    }

    /// Exact value at an integer point, without expanding the product.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.factors
            .iter()
            .map(|(&d, &m)| Pow::pow(cyclotomic(d).eval(x), m))
            .fold(BigInt::one(), |acc, v| acc * v)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Expands the product using `Φ_d = ∏_{e|d} (t^e − 1)^{μ(d/e)}`: every
    /// factor becomes a binomial `t^e − 1` raised to an integer power, applied
    /// as a power series truncated past the final degree.
    pub fn expand(&self) -> IntegerPolynomial {
        let mut powers: BTreeMap<u64, i64> = BTreeMap::new();
        for (&d, &m) in &self.factors {
            for e in divisors(d) {
                *powers.entry(e).or_insert(0) += mobius(d / e) * m as i64;
            }
        }
        let len = self.degree() as usize + 1;
        let mut c = vec![BigInt::default(); len];
        c[0] = BigInt::one();
        for (&e, &b) in &powers {
            for _ in 0..b.max(0) {
                mul_binomial_series(&mut c, e as usize);
            }
        }
        for (&e, &b) in &powers {
            for _ in 0..(-b).max(0) {
                div_binomial_series(&mut c, e as usize);
            }
        }
        IntegerPolynomial::new(c)
    }
}

impl fmt::Display for CyclotomicFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(d, m)| {
                if *m == 1 {
                    format!("Phi_{d}")
                } else {
                    format!("Phi_{d}^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}
