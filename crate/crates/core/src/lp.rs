//! Exact feasibility of `A x = b, x >= 0` over the rationals.
//!
//! Phase one of the simplex method on a dense tableau of `BigRational`s,
//! with Bland's rule so that degenerate pivots cannot cycle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Answer of a feasibility query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible,
    /// Farkas certificate: `y` with `yᵀA <= 0` and `yᵀb > 0`.
    Infeasible { certificate: Vec<BigRational> },
}

/// Decide whether `A x = b` has a solution with `x >= 0`.
pub fn feasible_nonneg(a: &[Vec<i64>], b: &[i64]) -> bool {
    matches!(solve_feasibility(a, b), Feasibility::Feasible)
}

/// Like [`feasible_nonneg`], returning a certificate of infeasibility.
///
/// `a` is row-major with every row of the same length.
pub fn solve_feasibility(a: &[Vec<i64>], b: &[i64]) -> Feasibility {
    let rows = a.len();
    assert_eq!(rows, b.len(), "one right-hand side per row");
    if rows == 0 {
        return Feasibility::Feasible;
    }
    let cols = a[0].len();
    let width = cols + rows + 1;
    let rhs = width - 1;

    // Flip rows so that b >= 0, then append one artificial per row.
    let mut t: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(r, (row, &bv))| {
            let sign = if bv < 0 { -1 } else { 1 };
            let mut out: Vec<BigRational> = row.iter().map(|&v| int(sign * v)).collect();
            out.extend((0..rows).map(|k| int((k == r) as i64)));
            out.push(int(sign * bv));
            out
        })
        .collect();
    let mut basis: Vec<usize> = (cols..cols + rows).collect();

    // Reduced costs of "minimize the sum of artificials".
    let mut cost: Vec<BigRational> = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..cols {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }

    while let Some(enter) = (0..cols + rows).find(|&j| cost[j].is_negative()) {
        // Ratio test; ties go to the smallest basic index.
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..rows {
            if t[r][enter].is_positive() {
                let ratio = &t[r][rhs] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so some row always qualifies.
        let (pr, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut t, &mut cost, pr, enter);
        basis[pr] = enter;
    }
    // Optimal value is -cost[rhs]. The reduced cost of artificial r is
    // 1 - y_r, which gives the phase-one duals.
    if cost[rhs].is_zero() {
        return Feasibility::Feasible;
    }
    let certificate = (0..rows)
        .map(|r| {
            let y = BigRational::from_integer(BigInt::from(1)) - &cost[cols + r];
            if b[r] < 0 {
                -y
            } else {
                y
            }
        })
        .collect();
    Feasibility::Infeasible { certificate }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn pivot(t: &mut [Vec<BigRational>], cost: &mut [BigRational], pr: usize, pc: usize) {
    let p = t[pr][pc].clone();
    for v in t[pr].iter_mut() {
        *v /= &p;
    }
    let pivot_row = t[pr].clone();
    for (r, row) in t.iter_mut().enumerate() {
        if r == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}
