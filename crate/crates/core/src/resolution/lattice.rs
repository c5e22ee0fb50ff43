use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::ExponentVector;

use super::ResourceCaps;

/// All lcms of nonempty subsets of the minimal generators, sorted in the
/// graded order.
///
/// Built as the join-closure of the generators, so the cost is governed by
/// the lattice size rather than by `2^μ`.
pub fn lcm_lattice(ideal: &MonomialIdeal, caps: &ResourceCaps) -> Result<Vec<ExponentVector>> {
    caps.check_ideal(ideal)?;
    let mut lattice: BTreeSet<ExponentVector> = BTreeSet::new();
    for g in ideal.gens() {
        let joins: Vec<ExponentVector> = lattice.iter().map(|x| x.lcm(g)).collect();
        lattice.insert(g.clone());
        lattice.extend(joins);
        if lattice.len() > caps.max_lattice {
            return Err(Error::resource(format!(
                "lcm lattice has more than {} elements (SQP_MAX_LATTICE)",
                caps.max_lattice
            )));
        }
    }
    Ok(lattice.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Exp;

    fn ideal(n: usize, gens: &[&[Exp]]) -> MonomialIdeal {
        MonomialIdeal::from_vecs(n, gens).unwrap()
    }

    /// Subset enumeration, the definition of the lattice.
    fn by_subsets(i: &MonomialIdeal) -> Vec<ExponentVector> {
        let g = i.gens();
        let mut out = BTreeSet::new();
        for mask in 1u32..(1 << g.len()) {
            let l = (0..g.len())
                .filter(|k| mask >> k & 1 == 1)
                .fold(ExponentVector::zero(i.n()), |acc, k| acc.lcm(&g[k]));
            out.insert(l);
        }
        out.into_iter().collect()
    }

    #[test]
    fn examples() {
        let caps = ResourceCaps::default();
        let xy = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            lcm_lattice(&xy, &caps).unwrap(),
            vec![
                ExponentVector::new(vec![1, 0]),
                ExponentVector::new(vec![0, 1]),
                ExponentVector::new(vec![1, 1])
            ]
        );
        let single = ideal(3, &[&[2, 0, 1]]);
        assert_eq!(lcm_lattice(&single, &caps).unwrap(), single.gens().to_vec());
        let pairs = ideal(
            4,
            &[&[1, 1, 0, 0], &[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1], &[0, 0, 1, 1]],
        );
        let l = lcm_lattice(&pairs, &caps).unwrap();
        assert_eq!(l.len(), 11);
        assert_eq!(l.last().unwrap(), &ExponentVector::new(vec![1, 1, 1, 1]));
        assert_eq!(l, by_subsets(&pairs));
    }

    #[test]
    fn matches_subset_definition() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 3, 1], &[1, 0, 2], &[1, 1, 1], &[3, 0, 0]]);
        assert_eq!(lcm_lattice(&i, &ResourceCaps::default()).unwrap(), by_subsets(&i));
    }

    #[test]
    fn caps_are_enforced() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 3, 1], &[1, 0, 2]]);
        let caps = ResourceCaps { max_gens: 2, ..ResourceCaps::default() };
        assert!(matches!(lcm_lattice(&i, &caps), Err(Error::Resource(_))));
        let caps = ResourceCaps { max_lattice: 4, ..ResourceCaps::default() };
        assert!(matches!(lcm_lattice(&i, &caps), Err(Error::Resource(_))));
        let caps = ResourceCaps { max_vars: 2, ..ResourceCaps::default() };
        assert!(matches!(lcm_lattice(&i, &caps), Err(Error::Resource(_))));
    }
}
