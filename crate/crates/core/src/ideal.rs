//! Monomial ideals as canonical antichains of exponent vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Exp, ExponentVector};

/// A monomial ideal of `k[x_1, ..., x_n]` given by its minimal generators.
///
/// Generators are kept as a divisibility antichain sorted in the graded
/// order of [`ExponentVector`], so structural equality is ideal equality.
/// The zero ideal has no generators; the unit ideal has the single zero
/// vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Canonicalize an arbitrary generating set.
    pub fn minimalize<I>(raw: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        let mut raw: Vec<ExponentVector> = raw.into_iter().collect();
        if let Some(bad) = raw.iter().find(|v| v.len() != n) {
            return Err(Error::input(format!(
                "exponent vector {bad:?} has length {}, expected {n}",
                bad.len()
            )));
        }
        Ok(Self::from_checked(&mut raw, n))
    }

    /// Canonicalize a generating set already known to have length `n`.
    fn from_checked(raw: &mut Vec<ExponentVector>, n: usize) -> Self {
        raw.sort();
        raw.dedup();
        let mut gens: Vec<ExponentVector> = Vec::with_capacity(raw.len());
        // Sorted by degree, so any divisor of `g` is already in `gens`.
        for g in raw.drain(..) {
            if !gens.iter().any(|h| h.divides(&g)) {
                gens.push(g);
            }
        }
        MonomialIdeal { n, gens }
    }

    fn from_raw(mut raw: Vec<ExponentVector>, n: usize) -> Self {
        Self::from_checked(&mut raw, n)
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![ExponentVector::zero(n)] }
    }

    /// The monomial prime generated by the variables in `support`.
    pub fn prime(n: usize, support: &[usize]) -> Self {
        Self::from_raw(support.iter().map(|&k| ExponentVector::unit(n, k)).collect(), n)
    }

    pub fn from_vecs(n: usize, gens: &[&[Exp]]) -> Result<Self> {
        Self::minimalize(gens.iter().map(|g| ExponentVector::new(g.to_vec())), n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    /// Number of minimal generators, `μ(I)`.
    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn is_square_free(&self) -> bool {
        self.gens.iter().all(|g| g.coords().iter().all(|&e| e <= 1))
    }

    /// Componentwise maximum of all generators (the lcm of the generators).
    pub fn lcm_of_gens(&self) -> ExponentVector {
        self.gens
            .iter()
            .fold(ExponentVector::zero(self.n), |acc, g| acc.lcm(g))
    }

    fn check_len(&self, u: &ExponentVector) -> Result<()> {
        if u.len() != self.n {
            return Err(Error::input(format!(
                "monomial {u:?} has length {}, ideal lives in {} variables",
                u.len(),
                self.n
            )));
        }
        Ok(())
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::input(format!(
                "ideals live in different rings ({} vs {} variables)",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Monomial membership: some generator divides `u`.
    pub fn contains(&self, u: &ExponentVector) -> Result<bool> {
        self.check_len(u)?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Ideal inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    /// The square power `I^[m]`, generated by the `m`-th powers of the
    /// variables substituted into each generator.
    pub fn square_power(&self, m: Exp) -> Result<Self> {
        if m == 0 {
            return Err(Error::input("square power exponent m must be at least 1"));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.checked_scale(m))
            .collect::<Result<Vec<_>>>()?;
        // Scaling is an order embedding for both divisibility and the
        // graded order, so the list stays canonical.
        Ok(MonomialIdeal { n: self.n, gens })
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.lcm(h));
            }
        }
        Ok(Self::from_raw(raw, self.n))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(Self::from_raw(
            self.gens.iter().chain(&other.gens).cloned().collect(),
            self.n,
        ))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.checked_add(h)?);
            }
        }
        Ok(Self::from_raw(raw, self.n))
    }

    /// Ordinary power `I^s` by repeated squaring; `I^0` is the unit ideal.
    pub fn power(&self, s: u32) -> Result<Self> {
        let mut result = Self::unit(self.n);
        let mut base = self.clone();
        let mut e = s;
        while e > 0 {
            if e & 1 == 1 {
                result = result.product(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base)?;
            }
        }
        Ok(result)
    }

    /// Colon ideal `(I : x^u)`.
    pub fn colon(&self, u: &ExponentVector) -> Result<Self> {
        self.check_len(u)?;
        Ok(Self::from_raw(
            self.gens.iter().map(|g| g.saturating_sub(u)).collect(),
            self.n,
        ))
    }

    pub fn radical(&self) -> Self {
        Self::from_raw(self.gens.iter().map(|g| g.square_free_part()).collect(), self.n)
    }

    /// Sum with a single extra generator.
    pub(crate) fn with_gen(&self, g: ExponentVector) -> Self {
        let mut raw = self.gens.clone();
        raw.push(g);
        Self::from_raw(raw, self.n)
    }
}

/// Non-unit monomials form a regular sequence exactly when their supports
/// are pairwise disjoint.
pub fn is_monomial_regular_sequence(gens: &[ExponentVector]) -> bool {
    if gens.iter().any(|g| g.is_zero()) {
        return false;
    }
    for (a, g) in gens.iter().enumerate() {
        for h in &gens[a + 1..] {
            if g.len() != h.len() {
                return false;
            }
            if g.coords().iter().zip(h.coords()).any(|(x, y)| *x > 0 && *y > 0) {
                return false;
            }
        }
    }
    true
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g:?}")?;
        }
        write!(f, ">")
    }
}

/// Coefficient field, identified by its characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };
    pub const GF2: FieldSpec = FieldSpec { characteristic: 2 };

    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(Error::input(format!(
                "field characteristic must be 0 or prime, got {characteristic}"
            )))
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::RATIONALS
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = Error;
    fn try_from(c: u64) -> Result<Self> {
        FieldSpec::new(c)
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.characteristic
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
