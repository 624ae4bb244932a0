//! Invariants of the Brieskorn–Pham link `K(a₀,…,aₙ)`, the intersection of
//! `x₀^{a₀} + … + xₙ^{aₙ} = 0` with a small sphere in `C^{n+1}`.
//!
//! The link has real dimension `2n − 1`. Its Milnor fiber is a bouquet of
//! `∏(aᵢ − 1)` spheres of dimension `n`, with one basis cycle per tuple
//! `0 < kⱼ < aⱼ`; the monodromy acts on the cycle `k` by the root of unity
//! `exp(2πi Σ kⱼ/aⱼ)`, and the intersection form is diagonalized over the same
//! basis. Everything here is therefore computed from the distribution of
//! `Σ kⱼ/aⱼ mod 2` (see [`enumerate`]).

pub mod enumerate;
pub mod spectrum;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

pub use enumerate::{Enumeration, Strategy, SumDistribution, DEFAULT_BUDGET};
pub use spectrum::{CyclotomicFactorization, MonodromySpectrum, Rotation};

use crate::arith::{gcd, lcm_all};
use crate::error::{Error, Result};
use crate::poly::IntegerPolynomial;

/// Exponent tuple `(a₀,…,aₙ)`, each at least 2, at least two entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponents(Vec<u64>);

impl Exponents {
    pub fn new(a: Vec<u64>) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "need at least two exponents, got {}",
                a.len()
            )));
        }
        if let Some(bad) = a.iter().find(|&&x| x < 2) {
            return Err(Error::InvalidInput(format!(
                "exponent {bad} is smaller than 2"
            )));
        }
        Ok(Self(a))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &u64> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept alongside `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Complex dimension of the hypersurface; the link has real dimension `2n − 1`.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn lcm(&self) -> Result<u64> {
        lcm_all(&self.0)
            .ok_or_else(|| Error::Unsupported("lcm of the exponents overflows 64 bits".into()))
    }

    pub fn milnor_number(&self) -> BigUint {
        self.0.iter().map(|&a| BigUint::from(a - 1)).product()
    }

    #[cfg(test)]
    pub(crate) fn milnor_number_u64(&self) -> Option<u64> {
        self.milnor_number().to_u64()
    }
}

impl TryFrom<&[u64]> for Exponents {
    type Error = Error;

    fn try_from(a: &[u64]) -> Result<Self> {
        Self::new(a.to_vec())
    }
}

impl fmt::Display for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `∏(aᵢ − 1)`
pub fn milnor_number(a: &Exponents) -> BigUint {
    a.milnor_number()
}

/// The link is `(n − 2)`-connected.
pub fn connectivity_statement(a: &Exponents) -> i64 {
    a.n() as i64 - 2
}

/// Graph on the exponent indices with an edge wherever `gcd(aᵢ, aⱼ) > 1`,
/// as connected components.
fn gcd_graph_components(a: &[u64]) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for w in 0..n {
                if !seen[w] && gcd(a[v], a[w]) > 1 {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comps.push(comp);
    }
    comps
}

/// Brieskorn's graph criterion for the link to be a topological sphere, `n ≥ 3`.
///
/// With `Γ` the gcd graph above, the link is a homotopy sphere iff `Γ` has at
/// least two isolated points, or exactly one isolated point together with a
/// further component of odd size whose members pairwise have gcd exactly 2.
pub fn is_homotopy_sphere(a: &Exponents) -> Result<bool> {
    if a.n() < 3 {
        return Err(Error::Precondition(format!(
            "homotopy-sphere criterion needs n ≥ 3, got n = {}",
            a.n()
        )));
    }
    let a = a.as_slice();
    let comps = gcd_graph_components(a);
    let isolated = comps.iter().filter(|c| c.len() == 1).count();
    Ok(match isolated {
        0 => false,
        1 => comps.iter().any(|c| {
            c.len() >= 3
                && c.len() % 2 == 1
                && c.iter()
                    .enumerate()
                    .all(|(i, &u)| c[i + 1..].iter().all(|&v| gcd(a[u], a[v]) == 2))
        }),
        _ => true,
    })
}

/// Self-intersection of a vanishing cycle in a fiber of complex dimension `n`.
pub fn picard_lefschetz_self_intersection(n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::Precondition(format!(
            "dimension must be at least 1, got {n}"
        )));
    }
    Ok(match n.rem_euclid(4) {
        0 => 2,
        2 => -2,
        _ => 0,
    })
}

/// Signature of the Milnor fiber split into its counting parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    /// tuples with `Σ kⱼ/aⱼ mod 2` in `(0, 1)`
    pub plus: u64,
    /// tuples with `Σ kⱼ/aⱼ mod 2` in `(1, 2)`
    pub minus: u64,
    /// tuples with integral sum
    pub zero: u64,
}

impl Signature {
    fn from_distribution(dist: &SumDistribution) -> Self {
        let l = dist.lcm;
        let mut s = Signature {
            plus: 0,
            minus: 0,
            zero: 0,
        };
        for (&r, &c) in &dist.counts {
            if r == 0 || r == l {
                s.zero += c;
            } else if r < l {
                s.plus += c;
            } else {
                s.minus += c;
            }
        }
        s
    }

    pub fn value(&self) -> i64 {
        self.plus as i64 - self.minus as i64
    }

    /// Rank of the radical of the intersection form.
    pub fn nullity(&self) -> u64 {
        self.zero
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SphereKind {
    NotHomotopySphere,
    StandardSphere,
    KervaireSphere,
    /// `multiple` copies of the Milnor generator of bP₂ₙ; reduced mod 28 when n = 4.
    BpClass {
        multiple: i64,
        mod_28: Option<u8>,
    },
}

/// The invariant that decided a [`SphereClass`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassEvidence {
    GraphCriterion,
    Signature(i64),
    /// `Δ(−1)` and its residue mod 8.
    AlexanderAtMinusOne {
        value: BigInt,
        residue: u8,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereClass {
    pub kind: SphereKind,
    pub evidence: ClassEvidence,
}

impl fmt::Display for SphereClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SphereKind::NotHomotopySphere => write!(f, "not a homotopy sphere"),
            SphereKind::StandardSphere => write!(f, "standard"),
            SphereKind::KervaireSphere => write!(f, "Kervaire"),
            SphereKind::BpClass {
                multiple,
                mod_28: Some(r),
            } => {
                write!(f, "bP class {multiple} = {r} mod 28")
            }
            SphereKind::BpClass {
                multiple,
                mod_28: None,
            } => {
                write!(f, "bP class {multiple} x Milnor generator")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Geometry {
    Spherical,
    Nilpotent,
    SlTwoTilde,
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Geometry::Spherical => "spherical",
            Geometry::Nilpotent => "nilpotent",
            Geometry::SlTwoTilde => "sl2-tilde",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometryType {
    pub kind: Geometry,
    pub reciprocal_sum: BigRational,
}

fn require_triple(a: &Exponents) -> Result<[u64; 3]> {
    <[u64; 3]>::try_from(a.as_slice())
        .map_err(|_| Error::Precondition(format!("needs exactly three exponents, got {}", a.len())))
}

pub fn is_homology_3_sphere(a: &Exponents) -> Result<bool> {
    let [x, y, z] = require_triple(a)?;
    Ok(gcd(x, y) == 1 && gcd(y, z) == 1 && gcd(x, z) == 1)
}

/// Compares `1/a₀ + 1/a₁ + 1/a₂` with 1.
pub fn geometry_type(a: &Exponents) -> Result<GeometryType> {
    let t = require_triple(a)?;
    let reciprocal_sum: BigRational = t
        .iter()
        .map(|&x| BigRational::new(BigInt::one(), BigInt::from(x)))
        .sum();
    let kind = match reciprocal_sum.cmp(&BigRational::one()) {
        std::cmp::Ordering::Greater => Geometry::Spherical,
        std::cmp::Ordering::Equal => Geometry::Nilpotent,
        std::cmp::Ordering::Less => Geometry::SlTwoTilde,
    };
    Ok(GeometryType {
        kind,
        reciprocal_sum,
    })
}

impl Enumeration {
    pub fn spectrum(&self, a: &Exponents) -> Result<MonodromySpectrum> {
        Ok(MonodromySpectrum::from_distribution(&self.distribution(a)?))
    }

    pub fn cyclotomic_factorization(&self, a: &Exponents) -> Result<CyclotomicFactorization> {
        self.spectrum(a)?.cyclotomic_factorization()
    }

    pub fn characteristic_polynomial(&self, a: &Exponents) -> Result<IntegerPolynomial> {
        let poly = self.cyclotomic_factorization(a)?.expand();
        if !poly.is_monic() {
            return Err(Error::Internal(
                "characteristic polynomial is not monic".into(),
            ));
        }
        Ok(poly)
    }

    /// Signature of the Milnor fiber for even `n`.
    pub fn signature(&self, a: &Exponents) -> Result<Signature> {
        if a.n() % 2 != 0 {
            return Err(Error::Precondition(format!(
                "signature needs even n, got n = {}",
                a.n()
            )));
        }
        Ok(Signature::from_distribution(&self.distribution(a)?))
    }

    /// Classification of a homotopy-sphere link, `n ≥ 3`.
    ///
    /// Even `n`: the link bounds the parallelizable Milnor fiber, so it is
    /// `σ/8` times the Milnor generator of bP₂ₙ. Odd `n`: standard when
    /// `Δ(−1) ≡ ±1 (mod 8)`, Kervaire when `Δ(−1) ≡ ±3 (mod 8)`.
    pub fn sphere_class(&self, a: &Exponents) -> Result<SphereClass> {
        if !is_homotopy_sphere(a)? {
            return Ok(SphereClass {
                kind: SphereKind::NotHomotopySphere,
                evidence: ClassEvidence::GraphCriterion,
            });
        }
        let n = a.n();
        if n % 2 == 0 {
            let sigma = self.signature(a)?.value();
            if sigma % 8 != 0 {
                return Err(Error::Internal(format!(
                    "signature {sigma} of a homotopy-sphere link is not divisible by 8"
                )));
            }
            let multiple = sigma / 8;
            let mod_28 = (n == 4).then(|| multiple.rem_euclid(28) as u8);
            Ok(SphereClass {
                kind: SphereKind::BpClass { multiple, mod_28 },
                evidence: ClassEvidence::Signature(sigma),
            })
        } else {
            let value = self.cyclotomic_factorization(a)?.eval_i64(-1);
            let residue = value
                .mod_floor(&BigInt::from(8))
                .to_u8()
                .expect("residue below 8");
            let kind = match residue {
                1 | 7 => SphereKind::StandardSphere,
                3 | 5 => SphereKind::KervaireSphere,
                _ => {
                    return Err(Error::Internal(format!(
                        "Δ(−1) = {value} is even for a homotopy-sphere link"
                    )))
                }
            };
            Ok(SphereClass {
                kind,
                evidence: ClassEvidence::AlexanderAtMinusOne { value, residue },
            })
        }
    }

    /// `σ/8` for a Brieskorn homology 3-sphere.
    pub fn casson_invariant(&self, a: &Exponents) -> Result<i64> {
        if !is_homology_3_sphere(a)? {
            return Err(Error::Precondition(format!(
                "{a} is not a homology sphere (exponents not pairwise coprime)"
            )));
        }
        let sigma = self.signature(a)?.value();
        if sigma % 8 != 0 {
            return Err(Error::Internal(format!(
                "signature {sigma} of a homology sphere is not divisible by 8"
            )));
        }
        Ok(sigma / 8)
    }
}

pub fn monodromy_spectrum(a: &Exponents) -> Result<MonodromySpectrum> {
    Enumeration::default().spectrum(a)
}

pub fn characteristic_polynomial(a: &Exponents) -> Result<IntegerPolynomial> {
    Enumeration::default().characteristic_polynomial(a)
}

pub fn signature(a: &Exponents) -> Result<i64> {
    Ok(Enumeration::default().signature(a)?.value())
}

pub fn sphere_class(a: &Exponents) -> Result<SphereClass> {
    Enumeration::default().sphere_class(a)
}

pub fn casson_invariant(a: &Exponents) -> Result<i64> {
    Enumeration::default().casson_invariant(a)
}

/// `|Δ(1)|` from the cyclotomic factorization; 1 exactly for homotopy spheres (n ≥ 3).
pub fn alexander_at_one(a: &Exponents, cfg: &Enumeration) -> Result<BigInt> {
    Ok(cfg.cyclotomic_factorization(a)?.eval_i64(1).abs())
}
