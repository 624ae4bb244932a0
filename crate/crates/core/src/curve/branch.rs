use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

use crate::arith::{gcd, lcm_all};
use crate::error::{Error, Result};

/// One term `c·x^e` of a fractional power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxTerm {
    pub exponent: Ratio<u64>,
    pub coefficient: BigRational,
}

impl PuiseuxTerm {
    pub fn new(exponent: Ratio<u64>, coefficient: BigRational) -> Self {
        Self {
            exponent,
            coefficient,
        }
    }

    /// `(en/ed) : (cn/cd)` from four integers.
    pub fn from_parts(en: u64, ed: u64, cn: i64, cd: i64) -> Result<Self> {
        if ed == 0 || cd == 0 {
            return Err(Error::InvalidInput(
                "zero denominator in branch term".into(),
            ));
        }
        Ok(Self {
            exponent: Ratio::new(en, ed),
            coefficient: BigRational::new(BigInt::from(cn), BigInt::from(cd)),
        })
    }
}

/// A branch `y = Σ cᵢ x^{eᵢ}` of a plane curve through the origin, given by
/// finitely many terms. Parametrically `x = t^m`, `y = Σ cᵢ t^{eᵢ m}` where
/// `m` is the multiplicity.
///
/// The empty series is the smooth branch `y = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxBranch {
    terms: Vec<PuiseuxTerm>,
    multiplicity: u64,
}

impl PuiseuxBranch {
    /// Multiplicity taken as the lcm of the exponent denominators.
    pub fn new(terms: Vec<PuiseuxTerm>) -> Result<Self> {
        Self::validate(&terms)?;
        let dens: Vec<u64> = terms.iter().map(|t| *t.exponent.denom()).collect();
        let multiplicity = lcm_all(&dens)
            .ok_or_else(|| Error::InvalidInput("exponent denominators overflow".into()))?;
        Ok(Self {
            terms,
            multiplicity,
        })
    }

    /// Branch with a declared parametrization `x = t^m`. The declared `m` must
    /// be a multiple of every exponent denominator; if it is a proper
    /// multiple, the given terms do not determine the branch and
    /// [`characteristic_pairs`] reports a truncation error.
    pub fn with_multiplicity(multiplicity: u64, terms: Vec<PuiseuxTerm>) -> Result<Self> {
        Self::validate(&terms)?;
        if multiplicity == 0 {
            return Err(Error::InvalidInput("multiplicity must be positive".into()));
        }
        if let Some(t) = terms
            .iter()
            .find(|t| multiplicity % t.exponent.denom() != 0)
        {
            return Err(Error::InvalidInput(format!(
                "exponent {} is not a multiple of 1/{multiplicity}",
                t.exponent
            )));
        }
        Ok(Self {
            terms,
            multiplicity,
        })
    }

    fn validate(terms: &[PuiseuxTerm]) -> Result<()> {
        for t in terms {
            if t.coefficient.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "zero coefficient at x^{}",
                    t.exponent
                )));
            }
            if t.exponent < Ratio::one() {
                return Err(Error::InvalidInput(format!(
                    "exponent {} < 1: the branch is tangent to the y-axis, exchange x and y",
                    t.exponent
                )));
            }
        }
        if let Some(w) = terms.windows(2).find(|w| w[0].exponent >= w[1].exponent) {
            return Err(Error::InvalidInput(format!(
                "exponents must increase strictly ({} then {})",
                w[0].exponent, w[1].exponent
            )));
        }
        Ok(())
    }

    pub fn terms(&self) -> &[PuiseuxTerm] {
        &self.terms
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// `y(t)` as `(power of t, coefficient)` pairs under `x = t^m`.
    pub fn parametric_terms(&self) -> Vec<(u64, BigRational)> {
        self.terms
            .iter()
            .map(|t| {
                let k = t.exponent * self.multiplicity;
                debug_assert!(k.is_integer());
                (k.to_integer(), t.coefficient.clone())
            })
            .collect()
    }
}

impl fmt::Display for PuiseuxBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "y = 0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("({})x^{}", t.coefficient, t.exponent))
            .collect();
        write!(f, "y = {}", parts.join(" + "))
    }
}

/// Characteristic pairs `(pₖ, qₖ)`: the k-th characteristic exponent is
/// `qₖ / (p₁⋯pₖ)` in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CharacteristicPairs {
    pairs: Vec<(u64, u64)>,
}

impl CharacteristicPairs {
    pub fn new(pairs: Vec<(u64, u64)>) -> Result<Self> {
        let mut prev: Option<(u64, u64)> = None;
        for &(p, q) in &pairs {
            if p < 2 || gcd(p, q) != 1 {
                return Err(Error::InvalidInput(format!(
                    "pair ({p},{q}) needs p ≥ 2 and gcd(p,q) = 1"
                )));
            }
            let increasing = match prev {
                None => q > p,
                Some((_, q0)) => q as u128 > p as u128 * q0 as u128,
            };
            if !increasing {
                return Err(Error::InvalidInput(format!(
                    "pair ({p},{q}) does not give a larger characteristic exponent"
                )));
            }
            prev = Some((p, q));
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Multiplicity `β₀ = p₁⋯p_g` of the branch.
    pub fn multiplicity(&self) -> u64 {
        self.pairs.iter().map(|&(p, _)| p).product()
    }

    /// Milnor number of the branch, computed as the conductor
    /// `Σₖ (eₖ₋₁ − eₖ)·βₖ − β₀ + 1` of its characteristic exponents
    /// `βₖ = qₖ·eₖ` with `eₖ = β₀ / (p₁⋯pₖ)`.
    pub fn milnor_number(&self) -> u64 {
        let beta0 = self.multiplicity();
        let mut e_prev = beta0;
        let mut total: u64 = 0;
        for &(p, q) in &self.pairs {
            let e = e_prev / p;
            total += (e_prev - e) * q * e;
            e_prev = e;
        }
        total + 1 - beta0
    }
}

impl fmt::Display for CharacteristicPairs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(p, q)| format!("({p},{q})"))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Records the exponents where the running gcd of `m` and the exponent
/// numerators (over `m`) drops.
pub fn characteristic_pairs(b: &PuiseuxBranch) -> Result<CharacteristicPairs> {
    let mut e = b.multiplicity();
    let mut pairs = Vec::new();
    for (j, _) in b.parametric_terms() {
        if j % e != 0 {
            let g = e.gcd(&j);
            pairs.push((e / g, j / g));
            e = g;
        }
    }
    if e != 1 {
        return Err(Error::Truncation(format!(
            "denominators stop at {e} before reaching 1; the branch needs further terms \
             to be determined"
        )));
    }
    CharacteristicPairs::new(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(en: u64, ed: u64, c: i64) -> PuiseuxTerm {
        PuiseuxTerm::from_parts(en, ed, c, 1).unwrap()
    }

    #[test]
    fn cusp() {
        let b = PuiseuxBranch::new(vec![term(3, 2, 1)]).unwrap();
        assert_eq!(characteristic_pairs(&b).unwrap().pairs(), &[(2, 3)]);
    }

    #[test]
    fn smooth_branch_has_no_pairs() {
        let b = PuiseuxBranch::new(vec![term(1, 1, 1)]).unwrap();
        assert!(characteristic_pairs(&b).unwrap().is_empty());
        let b = PuiseuxBranch::new(vec![]).unwrap();
        assert!(characteristic_pairs(&b).unwrap().is_empty());
    }

    #[test]
    fn two_pairs() {
        let b = PuiseuxBranch::new(vec![term(3, 2, 1), term(7, 4, 1)]).unwrap();
        assert_eq!(b.multiplicity(), 4);
        let cp = characteristic_pairs(&b).unwrap();
        assert_eq!(cp.pairs(), &[(2, 3), (2, 7)]);
    }

    #[test]
    fn non_characteristic_terms_are_skipped() {
        let b = PuiseuxBranch::new(vec![
            term(1, 1, 2),
            term(3, 2, 1),
            term(2, 1, 5),
            term(5, 2, 1),
        ])
        .unwrap();
        assert_eq!(characteristic_pairs(&b).unwrap().pairs(), &[(2, 3)]);
    }

    #[test]
    fn truncated_branch() {
        let b = PuiseuxBranch::with_multiplicity(4, vec![term(3, 2, 1)]).unwrap();
        assert!(matches!(
            characteristic_pairs(&b),
            Err(Error::Truncation(_))
        ));
        assert!(PuiseuxBranch::with_multiplicity(3, vec![term(3, 2, 1)]).is_err());
    }

    #[test]
    fn invalid_branches() {
        assert!(PuiseuxBranch::new(vec![term(3, 2, 1), term(3, 2, 1)]).is_err());
        assert!(PuiseuxBranch::new(vec![term(7, 4, 1), term(3, 2, 1)]).is_err());
        assert!(PuiseuxBranch::new(vec![term(1, 2, 1)]).is_err());
        assert!(PuiseuxBranch::new(vec![term(3, 2, 0)]).is_err());
    }

    #[test]
    fn pair_validation() {
        assert!(CharacteristicPairs::new(vec![(2, 3), (2, 7)]).is_ok());
        assert!(CharacteristicPairs::new(vec![(2, 4)]).is_err());
        assert!(CharacteristicPairs::new(vec![(3, 2)]).is_err());
        assert!(CharacteristicPairs::new(vec![(2, 3), (2, 5)]).is_err());
    }

    #[test]
    fn milnor_number_from_conductor() {
        let mu = |v: Vec<(u64, u64)>| CharacteristicPairs::new(v).unwrap().milnor_number();
        assert_eq!(mu(vec![]), 0);
        assert_eq!(mu(vec![(2, 3)]), 2);
        assert_eq!(mu(vec![(3, 7)]), 12);
        // characteristic exponents (4; 6, 7)
        assert_eq!(mu(vec![(2, 3), (2, 7)]), 16);
    }
}
