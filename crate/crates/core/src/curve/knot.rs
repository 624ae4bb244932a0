use std::fmt;

use super::branch::CharacteristicPairs;
use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::poly::IntegerPolynomial;

/// Iterated torus knot: stage 1 is `T(p₁, s₁)`, stage `k` the `(pₖ, sₖ)`
/// cable of stage `k − 1`. No stages is the unknot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CablePresentation {
    stages: Vec<(u64, u64)>,
}

impl CablePresentation {
    pub fn new(stages: Vec<(u64, u64)>) -> Result<Self> {
        if let Some(&(p, s)) = stages
            .iter()
            .find(|&&(p, s)| p < 2 || s < 1 || gcd(p, s) != 1)
        {
            return Err(Error::InvalidInput(format!(
                "invalid cable stage ({p},{s})"
            )));
        }
        Ok(Self { stages })
    }

    pub fn unknot() -> Self {
        Self::default()
    }

    pub fn is_unknot(&self) -> bool {
        self.stages.is_empty()
    }

    pub fn stages(&self) -> &[(u64, u64)] {
        &self.stages
    }
}

impl fmt::Display for CablePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unknot() {
            return write!(f, "unknot");
        }
        let parts: Vec<String> = self
            .stages
            .iter()
            .map(|(p, s)| format!("({p},{s})"))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Cabling parameters from characteristic pairs.
///
/// With `qₖ` the numerator of the k-th characteristic exponent over
/// `p₁⋯pₖ`, the Newton pair numerators are `n₁ = q₁`,
/// `nₖ = qₖ − pₖ·qₖ₋₁`, and the cable parameters are
/// `s₁ = n₁`, `sₖ = nₖ + pₖ·pₖ₋₁·sₖ₋₁`.
pub fn cable_presentation(cp: &CharacteristicPairs) -> CablePresentation {
    let mut stages: Vec<(u64, u64)> = Vec::with_capacity(cp.pairs().len());
    let mut prev: Option<(u64, u64, u64)> = None; // (p, q, s) of the previous stage
    for &(p, q) in cp.pairs() {
        let s = match prev {
            None => q,
            Some((p0, q0, s0)) => (q - p * q0) + p * p0 * s0,
        };
        stages.push((p, s));
        prev = Some((p, q, s));
    }
    CablePresentation { stages }
}

/// `Δ(t) = (t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1))` by exact division.
pub fn alexander_torus_knot(p: u64, q: u64) -> Result<IntegerPolynomial> {
    if p < 1 || q < 1 || gcd(p, q) != 1 {
        return Err(Error::Precondition(format!(
            "torus knot T({p},{q}) needs coprime positive parameters"
        )));
    }
    let (p, q) = (p as usize, q as usize);
    let pq = p
        .checked_mul(q)
        .ok_or_else(|| Error::Unsupported("torus knot degree overflows".into()))?;
    let num = &IntegerPolynomial::binomial(pq) * &IntegerPolynomial::binomial(1);
    let den = &IntegerPolynomial::binomial(p) * &IntegerPolynomial::binomial(q);
    num.div_exact(&den)
        .ok_or_else(|| Error::Internal(format!("T({p},{q}) quotient is not exact")))
}

/// `Δₖ(t) = Δₖ₋₁(t^{pₖ}) · Δ_{T(pₖ,sₖ)}(t)`, starting from `Δ₀ = 1`.
pub fn alexander_iterated(c: &CablePresentation) -> Result<IntegerPolynomial> {
    c.stages
        .iter()
        .try_fold(IntegerPolynomial::one(), |acc, &(p, s)| {
            Ok(&acc.substitute_power(p as usize) * &alexander_torus_knot(p, s)?)
        })
}
