//! Text formats for branches accepted on the command line.

use milnor::curve::{PuiseuxBranch, PuiseuxTerm};
use milnor::{Error, Result};
use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};

fn parse_u64_ratio(s: &str) -> Result<Ratio<u64>> {
    let bad = || Error::InvalidInput(format!("bad exponent `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse().map_err(|_| bad())?,
            d.trim().parse().map_err(|_| bad())?,
        ),
        None => (s.trim().parse().map_err(|_| bad())?, 1u64),
    };
    if d == 0 {
        return Err(Error::InvalidInput(format!("zero denominator in `{s}`")));
    }
    Ok(Ratio::new(n, d))
}

fn parse_big_ratio(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidInput(format!("bad coefficient `{s}`"));
    let (n, d): (BigInt, BigInt) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse().map_err(|_| bad())?,
            d.trim().parse().map_err(|_| bad())?,
        ),
        None => (s.trim().parse().map_err(|_| bad())?, BigInt::from(1)),
    };
    if d == BigInt::from(0) {
        return Err(Error::InvalidInput(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

/// Inline terms `e:c,e:c,…` where each exponent and coefficient is an
/// integer or a fraction, e.g. `3/2:1,7/4:-1/2`. A bare exponent means
/// coefficient 1. The empty string is the branch `y = 0`.
pub fn parse_inline_terms(s: &str) -> Result<Vec<PuiseuxTerm>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (e, c) = t.split_once(':').unwrap_or((t, "1"));
            Ok(PuiseuxTerm::new(parse_u64_ratio(e)?, parse_big_ratio(c)?))
        })
        .collect()
}

/// One term per line as four integers `en ed cn cd`, meaning
/// `(cn/cd)·x^(en/ed)`. Blank lines and `#` comments are skipped.
pub fn parse_quadruples(s: &str) -> Result<Vec<PuiseuxTerm>> {
    let mut out = Vec::new();
    for (lineno, raw) in s.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| Error::InvalidInput(format!("line {}: {msg}", lineno + 1));
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(bad("expected four integers `en ed cn cd`"));
        }
        let en: u64 = fields[0]
            .parse()
            .map_err(|_| bad("bad exponent numerator"))?;
        let ed: u64 = fields[1]
            .parse()
            .map_err(|_| bad("bad exponent denominator"))?;
        let cn: i64 = fields[2]
            .parse()
            .map_err(|_| bad("bad coefficient numerator"))?;
        let cd: i64 = fields[3]
            .parse()
            .map_err(|_| bad("bad coefficient denominator"))?;
        out.push(PuiseuxTerm::from_parts(en, ed, cn, cd).map_err(|e| bad(&e.to_string()))?);
    }
    Ok(out)
}

pub fn branch(terms: Vec<PuiseuxTerm>, multiplicity: Option<u64>) -> Result<PuiseuxBranch> {
    match multiplicity {
        Some(m) => PuiseuxBranch::with_multiplicity(m, terms),
        None => PuiseuxBranch::new(terms),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_and_file_forms_agree() {
        let a = parse_inline_terms("3/2:1, 7/4:-1/2").unwrap();
        let b = parse_quadruples("# cusp plus a tail\n3 2 1 1\n\n7 4 -1 2\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(
            parse_inline_terms("5/2").unwrap(),
            parse_inline_terms("5/2:1").unwrap()
        );
        assert!(parse_inline_terms("").unwrap().is_empty());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["x:1", "3/0:1", "3/2:1/0", "3/2:y"] {
            assert!(parse_inline_terms(s).is_err(), "{s}");
        }
        for s in ["3 2 1", "3 2 1 0", "a b c d"] {
            assert!(parse_quadruples(s).is_err(), "{s}");
        }
    }
}
