//! Counting the sums `k₀/a₀ + … + kₙ/aₙ (mod 2)` over all tuples `0 < kⱼ < aⱼ`.
//!
//! Every invariant computed from an exponent tuple (spectrum, signature,
//! characteristic polynomial) is a function of this distribution. Two routes
//! produce it and must agree bit for bit: direct enumeration of the tuples,
//! optionally partitioned across threads, and iterated cyclic convolution of
//! the per-factor indicator vectors.

use std::collections::{BTreeMap, HashMap};

use super::Exponents;
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Largest residue ring `Z/2L` for which dense count vectors are used.
const DENSE_LIMIT: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Convolution when the residue ring is small relative to the tuple count.
    #[default]
    Auto,
    Direct,
    Convolution,
}

/// Resource limits and work partitioning for the counting routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Maximum Milnor number (tuple count) accepted.
    pub budget: u64,
    /// Thread count for direct enumeration; `0` and `1` both run inline.
    pub workers: usize,
    pub strategy: Strategy,
}

impl Default for Enumeration {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            workers: 1,
            strategy: Strategy::Auto,
        }
    }
}

/// Multiplicities of `Σ kⱼ/aⱼ mod 2`, keyed by the numerator `r` of `r / L`
/// with `L = lcm(aⱼ)` and `0 ≤ r < 2L`. Zero counts are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumDistribution {
    pub lcm: u64,
    pub counts: BTreeMap<u64, u64>,
}

impl SumDistribution {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

impl Enumeration {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    /// Tuple count after checking it against the budget.
    fn admitted_count(&self, a: &Exponents) -> Result<u64> {
        let mu = a.milnor_number();
        let cap = self.budget.min(i64::MAX as u64);
        match u64::try_from(&mu) {
            Ok(m) if m <= cap => Ok(m),
            _ => Err(Error::BudgetExceeded {
                required: mu,
                budget: self.budget,
            }),
        }
    }

    pub fn distribution(&self, a: &Exponents) -> Result<SumDistribution> {
        let total = self.admitted_count(a)?;
        let lcm = a.lcm()?;
        let modulus = lcm
            .checked_mul(2)
            .ok_or_else(|| Error::Unsupported(format!("lcm {lcm} too large")))?;
        let ring_work = (modulus as u128) * a.iter().map(|&x| (x - 1) as u128).sum::<u128>();
        let use_convolution = match self.strategy {
            Strategy::Direct => false,
            Strategy::Convolution => {
                if modulus > DENSE_LIMIT {
                    return Err(Error::Unsupported(format!(
                        "residue ring of size {modulus} is too large for convolution"
                    )));
                }
                true
            }
            Strategy::Auto => modulus <= DENSE_LIMIT && ring_work < total as u128,
        };
        let counts = if use_convolution {
            convolve(a.as_slice(), lcm)
        } else {
            enumerate_direct(a.as_slice(), lcm, total, self.workers)
        };
        Ok(SumDistribution { lcm, counts })
    }
}

/// Per-worker accumulator: dense when the residue ring is small.
enum Tally {
    Dense(Vec<u64>),
    Sparse(HashMap<u64, u64>),
}

impl Tally {
    fn new(modulus: u64) -> Self {
        if modulus <= DENSE_LIMIT {
            Tally::Dense(vec![0; modulus as usize])
        } else {
            Tally::Sparse(HashMap::new())
        }
    }

    #[inline]
    fn add(&mut self, r: u64) {
        match self {
            Tally::Dense(v) => v[r as usize] += 1,
            Tally::Sparse(m) => *m.entry(r).or_insert(0) += 1,
        }
    }

    fn merge_into(self, out: &mut BTreeMap<u64, u64>) {
        match self {
            Tally::Dense(v) => {
                for (r, c) in v.into_iter().enumerate() {
                    if c > 0 {
                        *out.entry(r as u64).or_insert(0) += c;
                    }
                }
            }
            Tally::Sparse(m) => {
                for (r, c) in m {
                    *out.entry(r).or_insert(0) += c;
                }
            }
        }
    }
}

struct Odometer<'a> {
    radix: &'a [u64],
    steps: Vec<u64>,
    resets: Vec<u64>,
    modulus: u64,
}

impl<'a> Odometer<'a> {
    fn new(radix: &'a [u64], lcm: u64) -> Self {
        let modulus = 2 * lcm;
        let steps: Vec<u64> = radix.iter().map(|&a| lcm / a).collect();
        // adding `resets[j]` undoes (a_j - 2) increments of digit j
        let resets = radix
            .iter()
            .zip(&steps)
            .map(|(&a, &s)| {
                let span = ((a - 2) as u128 * s as u128 % modulus as u128) as u64;
                (modulus - span) % modulus
            })
            .collect();
        Self {
            radix,
            steps,
            resets,
            modulus,
        }
    }

    /// Tuple digits (kⱼ − 1) of a linear index, digit 0 least significant,
    /// together with the residue of the tuple.
    fn decode(&self, mut index: u64) -> (Vec<u64>, u64) {
        let mut digits = Vec::with_capacity(self.radix.len());
        let mut r: u128 = 0;
        for (j, &a) in self.radix.iter().enumerate() {
            let base = a - 1;
            let d = index % base;
            index /= base;
            digits.push(d);
            r += (d + 1) as u128 * self.steps[j] as u128;
        }
        (digits, (r % self.modulus as u128) as u64)
    }

    fn run(&self, start: u64, count: u64, tally: &mut Tally) {
        if count == 0 {
            return;
        }
        let (mut digits, mut r) = self.decode(start);
        let m = self.modulus;
        for i in 0..count {
            tally.add(r);
            if i + 1 == count {
                break;
            }
            for j in 0..digits.len() {
                if digits[j] + 2 < self.radix[j] {
                    digits[j] += 1;
                    r += self.steps[j];
                    if r >= m {
                        r -= m;
                    }
                    break;
                }
                digits[j] = 0;
                r += self.resets[j];
                if r >= m {
                    r -= m;
                }
            }
        }
    }
}

fn enumerate_direct(a: &[u64], lcm: u64, total: u64, workers: usize) -> BTreeMap<u64, u64> {
    let odometer = Odometer::new(a, lcm);
    let modulus = 2 * lcm;
    let workers = (workers.max(1) as u64).min(total.max(1));
    let bound = |i: u64| ((total as u128 * i as u128) / workers as u128) as u64;

    let mut out = BTreeMap::new();
    if workers == 1 {
        let mut tally = Tally::new(modulus);
        odometer.run(0, total, &mut tally);
        tally.merge_into(&mut out);
        return out;
    }
    let tallies: Vec<Tally> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|i| {
                let (start, end) = (bound(i), bound(i + 1));
                let odometer = &odometer;
                scope.spawn(move || {
                    let mut tally = Tally::new(modulus);
                    odometer.run(start, end - start, &mut tally);
                    tally
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration worker panicked"))
            .collect()
    });
    for t in tallies {
        t.merge_into(&mut out);
    }
    out
}

fn convolve(a: &[u64], lcm: u64) -> BTreeMap<u64, u64> {
    let modulus = (2 * lcm) as usize;
    let mut acc = vec![0u64; modulus];
    acc[0] = 1;
    for &aj in a {
        let step = (lcm / aj) as usize;
        let mut next = vec![0u64; modulus];
        for (r, &c) in acc.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut s = r;
            for _ in 1..aj {
                s += step;
                if s >= modulus {
                    s -= modulus;
                }
                next[s] += c;
            }
        }
        acc = next;
    }
    acc.into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(r, c)| (r as u64, c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(a: &[u64]) -> Exponents {
        Exponents::new(a.to_vec()).unwrap()
    }

    #[test]
    fn quadric_single_tuple() {
        let d = Enumeration::default()
            .distribution(&ex(&[2, 2, 2]))
            .unwrap();
        // 1/2 + 1/2 + 1/2 = 3/2 = 3/L with L = 2
        assert_eq!(d.lcm, 2);
        assert_eq!(d.counts, BTreeMap::from([(3, 1)]));
    }

    #[test]
    fn routes_agree_small() {
        for a in [
            &[5u64, 3, 2][..],
            &[7, 5, 3, 2],
            &[4, 4, 6],
            &[2, 2],
            &[9, 6, 4, 2, 2],
        ] {
            let e = ex(a);
            let direct = Enumeration::default()
                .with_strategy(Strategy::Direct)
                .distribution(&e)
                .unwrap();
            let conv = Enumeration::default()
                .with_strategy(Strategy::Convolution)
                .distribution(&e)
                .unwrap();
            assert_eq!(direct, conv, "{a:?}");
            assert_eq!(direct.total(), e.milnor_number_u64().unwrap());
        }
    }

    #[test]
    fn worker_partitioning_is_invisible() {
        let e = ex(&[7, 5, 3, 2]);
        let base = Enumeration::default().with_strategy(Strategy::Direct);
        let one = base.clone().distribution(&e).unwrap();
        for w in [2, 3, 8, 100] {
            assert_eq!(one, base.clone().with_workers(w).distribution(&e).unwrap());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let e = ex(&[11, 11, 11]);
        let err = Enumeration::default()
            .with_budget(999)
            .distribution(&e)
            .unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 999, .. }));
        assert!(Enumeration::default()
            .with_budget(1000)
            .distribution(&e)
            .is_ok());
    }

    #[test]
    fn sparse_tally_for_large_lcm() {
        // 2·lcm = 4·1447·1451 exceeds the dense limit
        let e = ex(&[1447, 1451, 2]);
        let d = Enumeration::default()
            .with_workers(4)
            .distribution(&e)
            .unwrap();
        assert_eq!(d.total(), 1446 * 1450);
        assert!(d.counts.keys().all(|&r| r < 2 * d.lcm));
    }
}
