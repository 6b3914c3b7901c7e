//! Fraction-free elimination over the integers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer row echelon data produced by [`row_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    /// Fully reduced rows: every pivot column is zero outside its pivot row.
    pub rows: Vec<Vec<BigInt>>,
    /// Pivot column of each nonzero row, ascending.
    pub pivots: Vec<usize>,
    pub cols: usize,
}

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Gauss-Jordan elimination without division: each elimination step is the
/// cross-multiplication `pivot * row - entry * pivot_row`, followed by removal
/// of the row content so entries stay small.
pub fn row_reduce(matrix: &[Vec<BigInt>]) -> Reduced {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<BigInt>> = matrix.to_vec();
    for r in &mut rows {
        primitive(r);
    }
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, found);
        if rows[rank][col].is_negative() {
            for x in rows[rank].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot_row = rows[rank].clone();
        let pivot = pivot_row[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &pivot * &*x - &factor * p;
            }
            primitive(row);
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Reduced { rows, pivots, cols }
}

impl Reduced {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// An integer basis of the null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        let lcm = self.rows.iter().zip(&self.pivots).fold(BigInt::one(), |acc, (row, &p)| acc.lcm(&row[p]));
        (0..self.cols)
            .filter(|c| !self.pivots.contains(c))
            .map(|free| {
                let mut v = alloc::vec![BigInt::zero(); self.cols];
                v[free] = lcm.clone();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -(&row[free] * &lcm) / &row[p];
                }
                primitive(&mut v);
                v
            })
            .collect()
    }
}

/// Exact determinant of a square integer matrix by Bareiss elimination.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else { return BigInt::zero() };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}
