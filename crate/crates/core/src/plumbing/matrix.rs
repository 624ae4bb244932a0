//! Exact integer matrices: determinant, Smith normal form, signature.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Top-left `k × k` block.
    pub fn leading_block(&self, k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }

    /// Fraction-free (Bareiss) elimination. The empty matrix has determinant 1.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * &a[n - 1][n - 1]
    }

    /// Diagonalizes by unimodular row and column operations.
    pub fn smith_form(&self) -> SmithForm {
        let (rows, cols) = (self.rows, self.cols);
        let mut a: Vec<Vec<BigInt>> = (0..rows).map(|i| self.row(i).to_vec()).collect();
        let size = rows.min(cols);
        for t in 0..size {
            // pivot: smallest nonzero magnitude in the trailing block
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            loop {
                let mut clean = true;
                for i in t + 1..rows {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..cols {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let v = &q * &row[t];
                        row[j] -= v;
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    // divisibility: fold any entry the pivot fails to divide into row t
                    let bad = (t + 1..rows)
                        .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                        .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
                    match bad {
                        None => break,
                        Some((i, _)) => {
                            for j in t..cols {
                                let v = a[i][j].clone();
                                a[t][j] += v;
                            }
                        }
                    }
                }
                // move the smallest remaining entry of row/column t onto the pivot
                let candidates = (t..rows)
                    .map(|i| (i, t))
                    .chain((t + 1..cols).map(|j| (t, j)))
                    .filter(|&(i, j)| !a[i][j].is_zero())
                    .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
                if let Some((i, j)) = candidates {
                    if i != t {
                        a.swap(t, i);
                    }
                    if j != t {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
        }
        let diagonal = (0..size).map(|i| a[i][i].abs()).collect();
        SmithForm::from_diagonal(diagonal, rows)
    }

    /// Inertia `(positive, negative, zero)` of a symmetric matrix, by
    /// congruence diagonalization over the rationals.
    pub fn inertia(&self) -> (usize, usize, usize) {
        assert!(self.is_symmetric(), "inertia of a non-symmetric matrix");
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| BigRational::from_integer(v.clone()))
                    .collect()
            })
            .collect();
        let (mut pos, mut neg) = (0, 0);
        for k in 0..n {
            if a[k][k].is_zero() {
                if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                    a.swap(k, i);
                    for row in a.iter_mut() {
                        row.swap(k, i);
                    }
                } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                    // e_k ← e_k + e_j makes the pivot 2·a[k][j] (both diagonals vanish)
                    for c in 0..n {
                        let v = a[j][c].clone();
                        a[k][c] += v;
                    }
                    for row in a.iter_mut() {
                        let v = row[j].clone();
                        row[k] += v;
                    }
                } else {
                    continue;
                }
            }
            let pivot = a[k][k].clone();
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &pivot;
                for c in k..n {
                    let v = &f * &a[k][c];
                    a[i][c] -= v;
                }
                for row in a.iter_mut() {
                    let v = &f * &row[k];
                    row[i] -= v;
                }
            }
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        (pos, neg, n - pos - neg)
    }

    pub fn signature(&self) -> i64 {
        let (p, n, _) = self.inertia();
        p as i64 - n as i64
    }

    /// Leading principal minors alternate in sign starting negative.
    pub fn is_negative_definite(&self) -> bool {
        assert!(
            self.is_symmetric(),
            "definiteness of a non-symmetric matrix"
        );
        (1..=self.rows).all(|k| {
            let d = self.leading_block(k).determinant();
            if k % 2 == 1 {
                d.is_negative()
            } else {
                d.is_positive()
            }
        })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Invariant factors `d₁ | d₂ | …` (nonnegative, zeros last) of an `r × c`
/// matrix and the cokernel `Z^r / image`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
    rows: usize,
}

impl SmithForm {
    fn from_diagonal(mut diagonal: Vec<BigInt>, rows: usize) -> Self {
        // canonical order; the elimination already gives divisibility among nonzeros
        diagonal.sort_by(|a, b| match (a.is_zero(), b.is_zero()) {
            (true, false) => std::cmp::Ordering::Greater,
            (false, true) => std::cmp::Ordering::Less,
            _ => a.cmp(b),
        });
        let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
        Self {
            invariant_factors: diagonal,
            rank,
            rows,
        }
    }

    /// Orders of the cyclic summands of the cokernel, dropping trivial ones;
    /// `0` stands for an infinite cyclic summand.
    pub fn cokernel(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = self
            .invariant_factors
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect();
        out.extend(std::iter::repeat(BigInt::zero()).take(self.rows - self.rank));
        out
    }

    pub fn free_rank(&self) -> usize {
        self.rows - self.rank
    }

    /// Order of the torsion part.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_zero())
            .product()
    }

    pub fn divisibility_holds(&self) -> bool {
        self.invariant_factors.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                (&w[1] % &w[0]).is_zero()
            }
        })
    }
}

/// `Z/n ⊕ …`, with `Z` for free summands and `0` for the trivial group.
pub fn format_group(cokernel: &[BigInt]) -> String {
    if cokernel.is_empty() {
        return "0".to_string();
    }
    cokernel
        .iter()
        .map(|d| {
            if d.is_zero() {
                "Z".to_string()
            } else {
                format!("Z/{d}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
