//! Betti numbers from the Taylor complex, an independent check on the
//! upper-Koszul engine.
//!
//! Tensoring the Taylor resolution with the residue field kills every
//! differential coefficient `x^{lcm σ - lcm σ'}` that is not a unit, so the
//! strand in multidegree `α` is spanned by generator subsets with lcm
//! exactly `α`, and only faces keeping the lcm survive in the differential.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ideal::{FieldSpec, MonomialIdeal};
use crate::monomial::ExponentVector;

use super::linalg::IntMatrix;
use super::BettiTable;

/// Largest number of generators the oracle accepts.
pub const TAYLOR_MAX_GENS: usize = 8;

pub fn taylor_betti_oracle(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::input("R/I is the zero module for the unit ideal"));
    }
    let gens = ideal.gens();
    if gens.len() > TAYLOR_MAX_GENS {
        return Err(Error::resource(format!(
            "Taylor oracle accepts at most {TAYLOR_MAX_GENS} generators, got {}",
            gens.len()
        )));
    }
    let mut strands: BTreeMap<ExponentVector, Vec<u32>> = BTreeMap::new();
    for mask in 0u32..(1 << gens.len()) {
        let lcm = (0..gens.len())
            .filter(|k| mask >> k & 1 == 1)
            .fold(ExponentVector::zero(ideal.n()), |acc, k| acc.lcm(&gens[k]));
        strands.entry(lcm).or_default().push(mask);
    }
    let mut table = BettiTable::new(ideal.n(), field);
    for (alpha, subsets) in strands {
        let top = gens.len();
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 2];
        for s in subsets {
            by_size[s.count_ones() as usize].push(s);
        }
        // rank of d_i : C_i -> C_{i-1}
        let ranks: Vec<usize> = (0..top + 2)
            .map(|i| {
                if i == 0 || by_size[i].is_empty() || by_size[i - 1].is_empty() {
                    0
                } else {
                    strand_differential(&by_size[i], &by_size[i - 1]).rank(field)
                }
            })
            .collect();
        for i in 0..=top {
            let h = by_size[i].len() - ranks[i] - ranks[i + 1];
            if h > 0 {
                table.add(i, alpha.degree(), h as u64);
            }
        }
    }
    Ok(table)
}

/// Differential of the strand: drop one generator, keep the term only if the
/// smaller subset lies in the same strand (same lcm).
fn strand_differential(src: &[u32], dst: &[u32]) -> IntMatrix {
    let mut m = IntMatrix::zeros(dst.len(), src.len());
    for (c, &sigma) in src.iter().enumerate() {
        let mut sign = 1i64;
        let mut rest = sigma;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if let Some(row) = dst.iter().position(|&t| t == sigma & !bit) {
                m.set(row, c, sign);
            }
            sign = -sign;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Exp;

    fn ideal(n: usize, gens: &[&[Exp]]) -> MonomialIdeal {
        MonomialIdeal::from_vecs(n, gens).unwrap()
    }

    #[test]
    fn complete_intersection() {
        let t = taylor_betti_oracle(&ideal(2, &[&[1, 0], &[0, 1]]), FieldSpec::RATIONALS).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 1, 2), (2, 2, 1)]);
    }

    #[test]
    fn nonminimal_taylor_faces_cancel() {
        // (x^2, xy): Taylor complex is already minimal.
        let t = taylor_betti_oracle(&ideal(2, &[&[2, 0], &[1, 1]]), FieldSpec::RATIONALS).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 2), (2, 3, 1)]);
        // Triangle (xy, yz, xz): the triple has the lcm of every pair and cancels.
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let t = taylor_betti_oracle(&tri, FieldSpec::RATIONALS).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
    }

    #[test]
    fn cap() {
        let gens: Vec<ExponentVector> = (0..9)
            .map(|k| ExponentVector::new(vec![k, 8 - k]))
            .collect();
        let i = MonomialIdeal::minimalize(gens, 2).unwrap();
        assert!(matches!(
            taylor_betti_oracle(&i, FieldSpec::RATIONALS),
            Err(Error::Resource(_))
        ));
    }
}
