//! Exponent vectors: points of ℕⁿ standing for monomials `x^a`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent of a single variable.
pub type Exp = u64;

/// Exponent vector of a monomial in `n` variables.
///
/// Ordering is graded: lower total degree first, ties broken
/// lexicographically with larger leading exponents first, so that
/// `x^2 < x*y < y^2`. All canonical generator lists use this order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<Exp>);

impl ExponentVector {
    pub fn new(coords: Vec<Exp>) -> Self {
        ExponentVector(coords)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The `k`-th unit vector, i.e. the variable `x_{k+1}`.
    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = vec![0; n];
        v[k] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Exp] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Exp> {
        self.0
    }

    /// Total degree. Saturates only if the coordinates already sum past `u64::MAX`.
    pub fn degree(&self) -> Exp {
        self.0.iter().fold(0, |acc: Exp, &e| acc.saturating_add(e))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k)
            .collect()
    }

    /// Divisibility: `self | other` iff `self <= other` componentwise.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// True if the monomial is a power of a single variable.
    pub fn is_pure_power(&self) -> bool {
        self.0.iter().filter(|&&e| e > 0).count() == 1
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Monomial product.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("monomial product")))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// `max(self - other, 0)` componentwise: the generator of `(x^self) : x^other`.
    pub fn saturating_sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// Coordinatewise scaling `m·a`, the exponent of `(x^a)^[m]`.
    pub fn checked_scale(&self, m: Exp) -> Result<Self> {
        self.0
            .iter()
            .map(|&e| e.checked_mul(m).ok_or(Error::Overflow("exponent scaling")))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Replace every positive exponent by 1.
    pub fn square_free_part(&self) -> Self {
        ExponentVector(self.0.iter().map(|&e| e.min(1)).collect())
    }
}

impl From<Vec<Exp>> for ExponentVector {
    fn from(v: Vec<Exp>) -> Self {
        ExponentVector(v)
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = Exp;
    fn index(&self, k: usize) -> &Exp {
        &self.0[k]
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All exponent vectors `v` with `0 <= v <= bound` componentwise, in
/// odometer order (last coordinate fastest).
pub fn box_points(bound: &ExponentVector) -> impl Iterator<Item = ExponentVector> + '_ {
    let n = bound.len();
    let mut cur = Some(vec![0; n]);
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut k = n;
        loop {
            if k == 0 {
                cur = None;
                break;
            }
            k -= 1;
            if next[k] < bound[k] {
                next[k] += 1;
                cur = Some(next);
                break;
            }
            next[k] = 0;
        }
        Some(ExponentVector(out))
    })
}
