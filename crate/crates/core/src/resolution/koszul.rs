//! Multigraded Betti numbers from upper-Koszul simplicial complexes.
//!
//! For a multidegree `α`, the upper-Koszul complex is
//! `K^α(I) = { τ ⊆ supp(α) square-free : x^{α-τ} ∈ I }` and
//! `β_{i,α}(R/I) = dim H̃_{i-2}(K^α(I))` for `i >= 1`. The complex `{∅}`
//! has `H̃_{-1}` of rank one (a minimal generator); the void complex has
//! no homology at all.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::{FieldSpec, MonomialIdeal};
use crate::monomial::ExponentVector;

use super::linalg::IntMatrix;
use super::{lcm_lattice, BettiTable, ResourceCaps};

/// The upper-Koszul complex at one multidegree. Faces are bitmasks over
/// the variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulComplexRecord {
    pub multidegree: ExponentVector,
    /// Faces grouped by cardinality: `faces[k]` holds the faces with `k`
    /// vertices, each list sorted.
    pub faces: Vec<Vec<u32>>,
}

impl KoszulComplexRecord {
    pub fn build(ideal: &MonomialIdeal, alpha: &ExponentVector) -> Self {
        let n = ideal.n();
        let support = alpha.support();
        let mut faces: Vec<Vec<u32>> = vec![Vec::new(); support.len() + 1];
        for sub in 0u32..(1 << support.len()) {
            let mut coords = alpha.coords().to_vec();
            let mut mask = 0u32;
            for (b, &k) in support.iter().enumerate() {
                if sub >> b & 1 == 1 {
                    coords[k] -= 1;
                    mask |= 1 << k;
                }
            }
            if ideal.contains_unchecked(&ExponentVector::new(coords)) {
                faces[sub.count_ones() as usize].push(mask);
            }
        }
        for level in &mut faces {
            level.sort_unstable();
        }
        debug_assert!(n <= 32);
        KoszulComplexRecord { multidegree: alpha.clone(), faces }
    }

    pub fn is_void(&self) -> bool {
        self.faces.iter().all(|f| f.is_empty())
    }

    /// Boundary map from faces with `k` vertices to faces with `k - 1`.
    fn boundary(&self, k: usize) -> IntMatrix {
        let src = &self.faces[k];
        let dst = &self.faces[k - 1];
        let mut m = IntMatrix::zeros(dst.len(), src.len());
        for (c, &face) in src.iter().enumerate() {
            let mut sign = 1i64;
            let mut rest = face;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let row = dst
                    .binary_search(&(face & !bit))
                    .expect("complex is closed under subsets");
                m.set(row, c, sign);
                sign = -sign;
            }
        }
        m
    }

    /// Ranks of `H̃` indexed by face cardinality: entry `k` is
    /// `dim H̃_{k-1}`.
    pub fn reduced_homology(&self, field: FieldSpec) -> Vec<usize> {
        let top = self.faces.len();
        let ranks: Vec<usize> = (0..=top)
            .map(|k| {
                if k == 0 || k >= top || self.faces[k].is_empty() {
                    0
                } else {
                    self.boundary(k).rank(field)
                }
            })
            .collect();
        (0..top)
            .map(|k| self.faces[k].len() - ranks[k] - ranks[k + 1])
            .collect()
    }
}

/// Graded Betti table of `R/I` by upper-Koszul homology over the lcm lattice.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldSpec, caps: &ResourceCaps) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::input("R/I is the zero module for the unit ideal"));
    }
    let lattice = lcm_lattice(ideal, caps)?;
    let per_alpha: Vec<Vec<(usize, u64, u64)>> = lattice
        .par_iter()
        .map(|alpha| {
            let record = KoszulComplexRecord::build(ideal, alpha);
            let degree = alpha.degree();
            record
                .reduced_homology(field)
                .into_iter()
                .enumerate()
                .filter(|&(_, h)| h > 0)
                // Faces of cardinality k carry H̃_{k-1}, which is β_{k+1,α}.
                .map(|(k, h)| (k + 1, degree, h as u64))
                .collect()
        })
        .collect();
    let mut table = BettiTable::new(ideal.n(), field);
    table.add(0, 0, 1);
    for (i, j, c) in per_alpha.into_iter().flatten() {
        table.add(i, j, c);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Exp;

    fn ideal(n: usize, gens: &[&[Exp]]) -> MonomialIdeal {
        MonomialIdeal::from_vecs(n, gens).unwrap()
    }

    fn entries(t: &BettiTable) -> Vec<(usize, u64, u64)> {
        t.entries().collect()
    }

    #[test]
    fn complexes_are_closed_and_classified() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let gen = KoszulComplexRecord::build(&i, &ExponentVector::new(vec![1, 0]));
        assert_eq!(gen.faces, vec![vec![0], vec![]]);
        let top = KoszulComplexRecord::build(&i, &ExponentVector::new(vec![1, 1]));
        // x*y - {x} = y and x*y - {y} = x are in I, x*y - {x,y} = 1 is not.
        assert_eq!(top.faces, vec![vec![0], vec![0b01, 0b10], vec![]]);
        assert_eq!(top.reduced_homology(FieldSpec::RATIONALS), vec![0, 1, 0]);
        let outside = KoszulComplexRecord::build(&i, &ExponentVector::new(vec![0, 0]));
        assert!(outside.is_void());
    }

    #[test]
    fn principal_and_complete_intersection() {
        let caps = ResourceCaps::default();
        let t = betti_table(&ideal(2, &[&[2, 0]]), FieldSpec::RATIONALS, &caps).unwrap();
        assert_eq!(entries(&t), vec![(0, 0, 1), (1, 2, 1)]);
        let t = betti_table(&ideal(2, &[&[1, 0], &[0, 1]]), FieldSpec::RATIONALS, &caps).unwrap();
        assert_eq!(entries(&t), vec![(0, 0, 1), (1, 1, 2), (2, 2, 1)]);
    }

    #[test]
    fn zero_and_unit_ideal() {
        let caps = ResourceCaps::default();
        let t = betti_table(&MonomialIdeal::zero(3), FieldSpec::RATIONALS, &caps).unwrap();
        assert_eq!(entries(&t), vec![(0, 0, 1)]);
        assert!(betti_table(&MonomialIdeal::unit(3), FieldSpec::RATIONALS, &caps).is_err());
    }

    #[test]
    fn characteristic_two_torsion() {
        // Stanley-Reisner ideal of the 6-vertex triangulation of ℝP², whose
        // Betti numbers differ between characteristic 0 and 2.
        let facets: [[usize; 3]; 10] = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
        ];
        let is_face = |s: &[usize]| facets.iter().any(|f| s.iter().all(|v| f.contains(v)));
        let mut nonfaces = Vec::new();
        for mask in 1u32..64 {
            let s: Vec<usize> = (0..6).filter(|k| mask >> k & 1 == 1).collect();
            if !is_face(&s) {
                let mut v = vec![0; 6];
                for &k in &s {
                    v[k] = 1;
                }
                nonfaces.push(ExponentVector::new(v));
            }
        }
        let i = MonomialIdeal::minimalize(nonfaces, 6).unwrap();
        assert_eq!(i.num_gens(), 10);
        let caps = ResourceCaps::default();
        let q = betti_table(&i, FieldSpec::RATIONALS, &caps).unwrap();
        let f2 = betti_table(&i, FieldSpec::new(2).unwrap(), &caps).unwrap();
        assert_ne!(q, f2);
        assert_eq!(q.get(3, 6), 0);
        assert_eq!(f2.get(3, 6), 1);
        assert_eq!(f2.get(4, 6), 1);
        assert_eq!(q.pd(), 3);
        assert_eq!(f2.pd(), 4);
    }
}
