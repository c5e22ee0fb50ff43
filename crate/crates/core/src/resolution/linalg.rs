//! Exact ranks of small integer matrices over ℚ or 𝔽_p.

// Row operations read clearest with explicit column indices.
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ideal::FieldSpec;

/// Dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    /// Rank over the field of the given characteristic.
    pub fn rank(&self, field: FieldSpec) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match field.characteristic() {
            0 => rank_rational(self),
            p => rank_mod_p(self, p),
        }
    }
}

/// Gaussian elimination over 𝔽_p.
fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let p128 = p as u128;
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| {
            (0..m.cols)
                .map(|c| (m.get(r, c) as i128).rem_euclid(p as i128) as u64)
                .collect()
        })
        .collect();
    let mut rank = 0;
    for c in 0..m.cols {
        let Some(piv) = (rank..m.rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = mod_inverse(a[rank][c], p);
        for j in c..m.cols {
            a[rank][j] = ((a[rank][j] as u128 * inv as u128) % p128) as u64;
        }
        for r in 0..m.rows {
            if r == rank || a[r][c] == 0 {
                continue;
            }
            let f = a[r][c] as u128;
            for j in c..m.cols {
                let sub = (f * a[rank][j] as u128) % p128;
                a[r][j] = ((a[r][j] as u128 + p128 - sub) % p128) as u64;
            }
        }
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2).
    let mut result: u128 = 1;
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    result as u64
}

/// Fraction-free (Bareiss) elimination. Runs in `i128` and restarts with
/// big integers if an intermediate minor does not fit.
fn rank_rational(m: &IntMatrix) -> usize {
    bareiss_rank_i128(m).unwrap_or_else(|| bareiss_rank_big(m))
}

fn bareiss_rank_i128(m: &IntMatrix) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| m.get(r, c) as i128).collect())
        .collect();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..m.cols {
        let Some(piv) = (rank..m.rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let pivot = a[rank][c];
        for r in rank + 1..m.rows {
            let lead = a[r][c];
            for j in c + 1..m.cols {
                let t = pivot
                    .checked_mul(a[r][j])?
                    .checked_sub(lead.checked_mul(a[rank][j])?)?;
                a[r][j] = t / prev;
            }
            a[r][c] = 0;
        }
        prev = pivot;
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_rank_big(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| BigInt::from(m.get(r, c))).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..m.cols {
        let Some(piv) = (rank..m.rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let pivot = a[rank][c].clone();
        for r in rank + 1..m.rows {
            let lead = a[r][c].clone();
            for j in c + 1..m.cols {
                let t = &pivot * &a[r][j] - &lead * &a[rank][j];
                a[r][j] = t / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}
