//! Intersection multiplicity of plane-curve germs at the origin, which equals
//! the linking number of their knots in the 3-sphere.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, Zero};

use super::branch::PuiseuxBranch;
use crate::error::{Error, Result};

/// Bivariate polynomial with integer coefficients, keyed by `(deg_x, deg_y)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    /// From `(coefficient, deg_x, deg_y)` triples; like terms are summed.
    pub fn from_terms(terms: &[(i64, u32, u32)]) -> Self {
        let mut out = Self::default();
        for &(c, a, b) in terms {
            out.add_term(BigInt::from(c), a, b);
        }
        out
    }

    fn add_term(&mut self, c: BigInt, a: u32, b: u32) {
        let entry = self.terms.entry((a, b)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms.get(&(0, 0)).cloned().unwrap_or_default()
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in self.terms.iter().rev() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mut factors = Vec::new();
            let mag = c.abs();
            if mag != BigInt::from(1) || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            for (v, e) in [("x", a), ("y", b)] {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for BivariatePolynomial {
    type Err = Error;

    /// Sums of terms like `3*x^2*y`, `-y^3`, `x y`, `7`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidInput(format!("polynomial `{s}`: {msg}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = Self::default();
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(i > 0 && current.ends_with('^')) {
                if !current.is_empty() {
                    chunks.push((negative, std::mem::take(&mut current)));
                } else if i > 0 {
                    return Err(bad("dangling sign"));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(bad("trailing sign"));
        }
        chunks.push((negative, current));

        for (negative, chunk) in chunks {
            let mut coeff = BigInt::from(1);
            let (mut a, mut b) = (0u32, 0u32);
            let digits: String = chunk.chars().take_while(char::is_ascii_digit).collect();
            let mut rest = &chunk[digits.len()..];
            if !digits.is_empty() {
                coeff = digits.parse().map_err(|_| bad("bad coefficient"))?;
            }
            while !rest.is_empty() {
                rest = rest.strip_prefix('*').unwrap_or(rest);
                let mut chars = rest.chars();
                let var = chars.next().ok_or_else(|| bad("dangling `*`"))?;
                rest = chars.as_str();
                let mut exp = 1u32;
                if let Some(r) = rest.strip_prefix('^') {
                    let e: String = r.chars().take_while(char::is_ascii_digit).collect();
                    exp = e.parse().map_err(|_| bad("bad exponent"))?;
                    rest = &r[e.len()..];
                }
                match var {
                    'x' => a += exp,
                    'y' => b += exp,
                    _ => return Err(bad(&format!("unknown symbol `{var}`"))),
                }
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(coeff, a, b);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeetOptions {
    /// Initial truncation degree of the power series in `t`.
    pub initial_bound: usize,
    /// The bound doubles on demand up to this cap.
    pub hard_cap: usize,
}

impl Default for MeetOptions {
    fn default() -> Self {
        Self {
            initial_bound: 256,
            hard_cap: 1 << 16,
        }
    }
}

/// `ord_t f(t^m, y(t))` where `x = t^m, y = y(t)` parametrizes `branch`.
pub fn intersection_multiplicity(branch: &PuiseuxBranch, f: &BivariatePolynomial) -> Result<u64> {
    intersection_multiplicity_with(branch, f, MeetOptions::default())
}

pub fn intersection_multiplicity_with(
    branch: &PuiseuxBranch,
    f: &BivariatePolynomial,
    opts: MeetOptions,
) -> Result<u64> {
    if !f.constant_term().is_zero() {
        return Err(Error::InvalidInput(format!(
            "curve {f} does not pass through the origin"
        )));
    }
    if f.is_zero() {
        return Err(Error::SameBranch);
    }
    let m = branch.multiplicity();
    let y = branch.parametric_terms();
    let y_top = y.last().map(|(k, _)| *k);
    // exact degree of f(x(t), y(t)) is at most this
    let exact_bound = f
        .terms()
        .keys()
        .filter_map(|&(a, b)| match (b, y_top) {
            (0, _) => Some(a as u128 * m as u128),
            (_, None) => None,
            (_, Some(top)) => Some(a as u128 * m as u128 + b as u128 * top as u128),
        })
        .max()
        .unwrap_or(0);

    let mut bound = opts.initial_bound.max(1);
    loop {
        if let Some(order) = composed_order(f, m, &y, bound) {
            return Ok(order as u64);
        }
        if bound as u128 > exact_bound {
            return Err(Error::SameBranch);
        }
        if bound >= opts.hard_cap {
            return Err(Error::Truncation(format!(
                "intersection order exceeds the truncation cap {}",
                opts.hard_cap
            )));
        }
        bound = (bound * 2).min(opts.hard_cap);
    }
}

/// Order of `f(t^m, y(t)) mod t^bound`, or `None` if it vanishes to that order.
fn composed_order(
    f: &BivariatePolynomial,
    m: u64,
    y: &[(u64, BigRational)],
    bound: usize,
) -> Option<usize> {
    let max_b = f.terms().keys().map(|&(_, b)| b).max().unwrap_or(0);
    // y(t)^b truncated, b = 0..=max_b
    let mut powers: Vec<Vec<BigRational>> = Vec::with_capacity(max_b as usize + 1);
    let mut one = vec![BigRational::zero(); bound];
    one[0] = BigRational::from_integer(1.into());
    powers.push(one);
    for _ in 0..max_b {
        let last = powers.last().expect("nonempty");
        let mut next = vec![BigRational::zero(); bound];
        for (i, c) in last.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, yc) in y {
                let idx = i + *k as usize;
                if idx >= bound {
                    break;
                }
                next[idx] += c * yc;
            }
        }
        powers.push(next);
    }
    let mut acc = vec![BigRational::zero(); bound];
    for (&(a, b), c) in f.terms() {
        let shift = a as u128 * m as u128;
        if shift >= bound as u128 {
            continue;
        }
        let shift = shift as usize;
        let c = BigRational::from_integer(c.clone());
        for (i, v) in powers[b as usize].iter().enumerate() {
            if i + shift >= bound {
                break;
            }
            if !v.is_zero() {
                acc[i + shift] += &c * v;
            }
        }
    }
    acc.iter().position(|c| !c.is_zero())
}

/// Intersection multiplicity of two branches, symmetric in its arguments.
///
/// `f₂` vanishes exactly on the `m₂` conjugates `y₂(ζʲ x^{1/m₂})`, so
/// `I = m₁ · Σⱼ ord_x (y₁ − y₂⁽ʲ⁾)`. Each order is the first exponent where
/// the two series differ; a conjugate coefficient `ζ^r c` is rational only for
/// `r ∈ {0, 1/2}`, which makes the comparison exact.
pub fn linking_number(b1: &PuiseuxBranch, b2: &PuiseuxBranch) -> Result<u64> {
    let m1 = b1.multiplicity();
    let m2 = b2.multiplicity();
    let mut sum = Ratio::<u64>::from_integer(0);
    for j in 0..m2 {
        sum += conjugate_contact(b1, b2, j).ok_or(Error::SameBranch)?;
    }
    let total = sum * m1;
    if !total.is_integer() {
        return Err(Error::Internal(format!(
            "non-integral intersection number {total}"
        )));
    }
    Ok(total.to_integer())
}

/// First exponent at which `y₁` and the `j`-th conjugate of `y₂` differ.
fn conjugate_contact(b1: &PuiseuxBranch, b2: &PuiseuxBranch, j: u64) -> Option<Ratio<u64>> {
    let m2 = b2.multiplicity();
    let mut exps: Vec<Ratio<u64>> = b1
        .terms()
        .iter()
        .chain(b2.terms())
        .map(|t| t.exponent)
        .collect();
    exps.sort();
    exps.dedup();
    for e in exps {
        let c1 = b1
            .terms()
            .iter()
            .find(|t| t.exponent == e)
            .map(|t| &t.coefficient);
        let c2 = b2.terms().iter().find(|t| t.exponent == e).map(|t| {
            // ζ^{j·e·m₂} with ζ = exp(2πi/m₂): rotation j·k/m₂ mod 1
            let k = (e * m2).to_integer();
            let twice = (2 * j * k) % (2 * m2);
            (&t.coefficient, twice)
        });
        let equal = match (c1, c2) {
            (Some(a), Some((b, twice))) => {
                (twice == 0 && a == b) || (twice == m2 && *a == -b.clone())
            }
            _ => false,
        };
        if !equal {
            return Some(e);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::branch::PuiseuxTerm;

    fn branch(terms: &[(u64, u64, i64)]) -> PuiseuxBranch {
        PuiseuxBranch::new(
            terms
                .iter()
                .map(|&(n, d, c)| PuiseuxTerm::from_parts(n, d, c, 1).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn poly(s: &str) -> BivariatePolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let p = poly("y^2 - x^3");
        assert_eq!(p, BivariatePolynomial::from_terms(&[(1, 0, 2), (-1, 3, 0)]));
        assert_eq!(poly("2*x*y - 3y^2 + x^4").terms().len(), 3);
        assert_eq!(poly("x y").terms().keys().next(), Some(&(1, 1)));
        assert_eq!(poly("y - y"), BivariatePolynomial::default());
        assert_eq!(poly("-x^3 + y^2").to_string(), poly("y^2-x^3").to_string());
        assert!("y +".parse::<BivariatePolynomial>().is_err());
        assert!("z".parse::<BivariatePolynomial>().is_err());
        assert!("".parse::<BivariatePolynomial>().is_err());
    }

    #[test]
    fn cusp_against_axes() {
        let cusp = branch(&[(3, 2, 1)]);
        assert_eq!(intersection_multiplicity(&cusp, &poly("y")).unwrap(), 3);
        assert_eq!(intersection_multiplicity(&cusp, &poly("x")).unwrap(), 2);
        assert!(matches!(
            intersection_multiplicity(&cusp, &poly("y^2 - x^3")),
            Err(Error::SameBranch)
        ));
        assert!(matches!(
            intersection_multiplicity(&cusp, &poly("y + 1")),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn truncation_cap() {
        let cusp = branch(&[(3, 2, 1)]);
        // f = y^2 - x^3 + x^200 meets the cusp with order 400
        let f = BivariatePolynomial::from_terms(&[(1, 0, 2), (-1, 3, 0), (1, 200, 0)]);
        let tight = MeetOptions {
            initial_bound: 16,
            hard_cap: 128,
        };
        assert!(matches!(
            intersection_multiplicity_with(&cusp, &f, tight),
            Err(Error::Truncation(_))
        ));
        assert_eq!(intersection_multiplicity(&cusp, &f).unwrap(), 400);
    }

    #[test]
    fn conjugate_formula_matches_substitution() {
        let corpus: Vec<(PuiseuxBranch, BivariatePolynomial)> = vec![
            (branch(&[(3, 2, 1)]), poly("y^2 - x^3")),
            (branch(&[(3, 2, 2)]), poly("y^2 - 4x^3")),
            (branch(&[(5, 3, 1)]), poly("y^3 - x^5")),
            (branch(&[(5, 2, 1)]), poly("y^2 - x^5")),
            (branch(&[(1, 1, 1)]), poly("y - x")),
            (branch(&[(2, 1, 1)]), poly("y - x^2")),
            (
                branch(&[(1, 1, 1), (3, 2, 1)]),
                poly("y^2 - 2x*y + x^2 - x^3"),
            ),
            (branch(&[]), poly("y")),
        ];
        for (b1, _) in &corpus {
            for (b2, f2) in &corpus {
                if b1 == b2 {
                    continue;
                }
                let by_sub = intersection_multiplicity(b1, f2).unwrap();
                let by_conj = linking_number(b1, b2).unwrap();
                let reverse = linking_number(b2, b1).unwrap();
                assert_eq!(by_sub, by_conj, "{b1} vs {f2}");
                assert_eq!(by_conj, reverse, "{b1} vs {b2}");
            }
        }
    }

    #[test]
    fn conjugate_branch_is_the_same_curve() {
        let a = branch(&[(3, 2, 1)]);
        let b = branch(&[(3, 2, -1)]);
        assert!(matches!(linking_number(&a, &b), Err(Error::SameBranch)));
        assert!(matches!(linking_number(&a, &a), Err(Error::SameBranch)));
    }
}
