//! Integral closure of monomial ideals through the Newton polyhedron.
//!
//! `x^v` lies in the closure of `I = (x^{a_1}, ..., x^{a_k})` iff
//! `v ∈ conv{a_i} + ℝ^n_{>=0}`, decided by exact rational feasibility of
//! `Σ λ_i a_i + s = v`, `Σ λ_i = 1`, `λ, s >= 0`.

use crate::caps::ResourceCaps;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::lp::{solve_feasibility, Feasibility};
use crate::monomial::{box_points, ExponentVector};

/// A Newton-polyhedron membership question.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonQuery {
    pub generators: Vec<ExponentVector>,
    pub point: ExponentVector,
}

fn to_i64(e: u64) -> Result<i64> {
    i64::try_from(e).map_err(|_| Error::Overflow("Newton polyhedron test"))
}

pub fn newton_member(q: &NewtonQuery) -> Result<bool> {
    NewtonPolyhedron::new(q.generators.clone(), q.point.len())?.contains(&q.point)
}

/// `conv{a_i} + ℝ^n_{>=0}` with a cache of separating inequalities
/// `w·x >= c` (with `w >= 0`) learned from infeasible membership queries.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    n: usize,
    generators: Vec<ExponentVector>,
    cuts: Vec<(Vec<BigInt>, BigInt)>,
}

impl NewtonPolyhedron {
    pub fn new(generators: Vec<ExponentVector>, n: usize) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::input("Newton polyhedron of an empty generator list"));
        }
        if generators.iter().any(|g| g.len() != n) {
            return Err(Error::input("generator and point lengths differ"));
        }
        Ok(NewtonPolyhedron { n, generators, cuts: Vec::new() })
    }

    pub fn contains(&mut self, v: &ExponentVector) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::input("generator and point lengths differ"));
        }
        if self.generators.iter().any(|g| g.divides(v)) {
            return Ok(true);
        }
        let point: Vec<BigInt> = v.coords().iter().map(|&e| BigInt::from(e)).collect();
        if self.cuts.iter().any(|(w, c)| dot(w, &point) < *c) {
            return Ok(false);
        }
        let n = self.n;
        let k = self.generators.len();
        let mut a = Vec::with_capacity(n + 1);
        let mut b = Vec::with_capacity(n + 1);
        for t in 0..n {
            let mut row = Vec::with_capacity(k + n);
            for g in &self.generators {
                row.push(to_i64(g[t])?);
            }
            row.extend((0..n).map(|u| (u == t) as i64));
            a.push(row);
            b.push(to_i64(v[t])?);
        }
        let mut convex = vec![1; k];
        convex.extend(std::iter::repeat_n(0, n));
        a.push(convex);
        b.push(1);
        match solve_feasibility(&a, &b) {
            Feasibility::Feasible => Ok(true),
            Feasibility::Infeasible { certificate } => {
                // y = (w_1..w_n, c) with yᵀA <= 0, yᵀb > 0 means -w >= 0,
                // (-w)·a_i >= c for every generator and (-w)·v < c.
                let denom = certificate
                    .iter()
                    .fold(BigInt::one(), |acc, y| acc.lcm(y.denom()));
                let scaled: Vec<BigInt> = certificate
                    .iter()
                    .map(|y| (y * &denom).to_integer())
                    .collect();
                let w: Vec<BigInt> = scaled[..n].iter().map(|x| -x).collect();
                let c = scaled[n].clone();
                debug_assert!(w.iter().all(|x| !x.is_negative()));
                debug_assert!(dot(&w, &point) < c);
                self.cuts.push((w, c));
                Ok(false)
            }
        }
    }
}

fn dot(w: &[BigInt], v: &[BigInt]) -> BigInt {
    w.iter().zip(v).fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
}

/// Minimal generators of the integral closure.
///
/// Minimal lattice points of the Newton polyhedron lie in the box bounded
/// by the lcm of the generators. Candidates are visited in the graded
/// order, so a point is tested only if no closure generator found so far
/// divides it.
pub fn integral_closure_gens(ideal: &MonomialIdeal, caps: &ResourceCaps) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::input("integral closure of the zero ideal"));
    }
    if ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let bound = ideal.lcm_of_gens();
    let size = bound
        .coords()
        .iter()
        .try_fold(1usize, |acc, &e| {
            acc.checked_mul(usize::try_from(e).ok()?.checked_add(1)?)
        })
        .filter(|&s| s <= caps.max_box)
        .ok_or_else(|| {
            Error::resource(format!(
                "closure search box exceeds {} points (SQP_MAX_BOX)",
                caps.max_box
            ))
        })?;
    let mut candidates: Vec<ExponentVector> = Vec::with_capacity(size);
    candidates.extend(box_points(&bound));
    candidates.sort();
    let mut polyhedron = NewtonPolyhedron::new(ideal.gens().to_vec(), ideal.n())?;
    let mut found: Vec<ExponentVector> = Vec::new();
    for v in candidates {
        if found.iter().any(|g| g.divides(&v)) {
            continue;
        }
        if polyhedron.contains(&v)? {
            found.push(v);
        }
    }
    MonomialIdeal::minimalize(found, ideal.n())
}

pub fn is_integrally_closed(ideal: &MonomialIdeal, caps: &ResourceCaps) -> Result<bool> {
    Ok(&integral_closure_gens(ideal, caps)? == ideal)
}
