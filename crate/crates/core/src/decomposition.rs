//! Irreducible and primary decompositions of monomial ideals, associated
//! and minimal primes, Krull dimension and symbolic powers.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::VarNames;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exp, ExponentVector};

/// An irreducible monomial ideal `<x_i^{e_i} : i in S>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    n: usize,
    /// `(variable, exponent)` pairs sorted by variable, exponents >= 1.
    entries: Vec<(usize, Exp)>,
}

impl IrreducibleComponent {
    pub fn new(n: usize, mut entries: Vec<(usize, Exp)>) -> Result<Self> {
        entries.sort();
        for w in entries.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::input(format!("variable {} repeated", w[0].0)));
            }
        }
        if entries.iter().any(|&(k, e)| k >= n || e == 0) {
            return Err(Error::input("irreducible component entries out of range"));
        }
        Ok(IrreducibleComponent { n, entries })
    }

    /// Read off a component from an ideal generated by pure powers.
    fn from_pure_powers(ideal: &MonomialIdeal) -> Self {
        let entries = ideal
            .gens()
            .iter()
            .map(|g| {
                let k = g.support()[0];
                (k, g[k])
            })
            .collect();
        IrreducibleComponent::new(ideal.n(), entries).expect("pure powers form a component")
    }

    pub fn entries(&self) -> &[(usize, Exp)] {
        &self.entries
    }

    pub fn support(&self) -> Vec<usize> {
        self.entries.iter().map(|&(k, _)| k).collect()
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime::new(self.n, self.support())
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            self.entries.iter().map(|&(k, e)| {
                let mut v = vec![0; self.n];
                v[k] = e;
                ExponentVector::new(v)
            }),
            self.n,
        )
        .expect("component vectors have length n")
    }

    /// `self ⊇ other` as ideals.
    pub fn contains(&self, other: &Self) -> bool {
        other.entries.iter().all(|&(k, e)| {
            self.entries
                .iter()
                .any(|&(j, f)| j == k && f <= e)
        })
    }

    pub fn square_power(&self, m: Exp) -> Result<Self> {
        if m == 0 {
            return Err(Error::input("square power exponent m must be at least 1"));
        }
        let entries = self
            .entries
            .iter()
            .map(|&(k, e)| Ok((k, e.checked_mul(m).ok_or(Error::Overflow("exponent scaling"))?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(IrreducibleComponent { n: self.n, entries })
    }

    /// Human-readable form such as `(x1, x2^2)`.
    pub fn render(&self, vars: &VarNames) -> String {
        render_ideal(&self.to_ideal(), vars)
    }
}

/// `(g1, g2, ...)` with the given variable names.
pub fn render_ideal(ideal: &MonomialIdeal, vars: &VarNames) -> String {
    let gens: Vec<String> = ideal.gens().iter().map(|g| vars.render_monomial(g)).collect();
    format!("({})", gens.join(", "))
}

/// A monomial prime, generated by the variables in its support.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialPrime {
    #[serde(skip)]
    n: usize,
    support: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(n: usize, mut support: Vec<usize>) -> Self {
        support.sort_unstable();
        support.dedup();
        MonomialPrime { n, support }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn height(&self) -> usize {
        self.support.len()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.support.iter().all(|k| other.support.contains(k))
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::prime(self.n, &self.support)
    }

    pub fn render(&self, vars: &VarNames) -> String {
        let names: Vec<&str> = self.support.iter().map(|&k| vars.name(k)).collect();
        format!("({})", names.join(", "))
    }
}

// Height first, then lexicographic on supports.
impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.support
            .len()
            .cmp(&other.support.len())
            .then_with(|| self.support.cmp(&other.support))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&VarNames::standard(self.n)))
    }
}

/// An irredundant irreducible decomposition, components in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleDecomposition {
    pub components: Vec<IrreducibleComponent>,
}

/// One primary component together with its radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub radical: MonomialPrime,
    pub ideal: MonomialIdeal,
}

/// An irredundant primary decomposition, one component per associated prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    pub components: Vec<PrimaryComponent>,
}

fn intersect_all<'a, I>(n: usize, ideals: I) -> MonomialIdeal
where
    I: IntoIterator<Item = &'a MonomialIdeal>,
{
    ideals
        .into_iter()
        .fold(MonomialIdeal::unit(n), |acc, q| {
            acc.intersect(q).expect("ideals share the ring")
        })
}

impl IrreducibleDecomposition {
    pub fn intersection(&self, n: usize) -> MonomialIdeal {
        let ideals: Vec<MonomialIdeal> = self.components.iter().map(|c| c.to_ideal()).collect();
        intersect_all(n, &ideals)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.components
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "support": c.support(),
                        "exponents": c.entries.iter().map(|&(_, e)| e).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }
}

impl PrimaryDecomposition {
    pub fn intersection(&self, n: usize) -> MonomialIdeal {
        intersect_all(n, self.components.iter().map(|c| &c.ideal))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.components
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "radical": c.radical.support(),
                        "gens": c.ideal.gens().iter().map(|g| g.coords().to_vec()).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }
}

fn require_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::input("the zero ideal has no monomial decomposition"));
    }
    if ideal.is_unit() {
        return Err(Error::input("the unit ideal has no monomial decomposition"));
    }
    Ok(())
}

/// Drop duplicates and every component that contains another one.
fn irredundant(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(a, c)| {
            !comps
                .iter()
                .enumerate()
                .any(|(b, d)| a != b && c.contains(d))
        })
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

fn split(
    ideal: &MonomialIdeal,
    memo: &mut HashMap<MonomialIdeal, Vec<IrreducibleComponent>>,
) -> Vec<IrreducibleComponent> {
    if let Some(hit) = memo.get(ideal) {
        return hit.clone();
    }
    let out = match ideal.gens().iter().find(|g| !g.is_pure_power()) {
        None => vec![IrreducibleComponent::from_pure_powers(ideal)],
        Some(pivot) => {
            // x^pivot = x_k^{e} * x^rest with disjoint nonempty supports.
            let k = pivot.support()[0];
            let mut head = vec![0; ideal.n()];
            head[k] = pivot[k];
            let mut rest = pivot.coords().to_vec();
            rest[k] = 0;
            let mut comps = split(&ideal.with_gen(ExponentVector::new(head)), memo);
            comps.extend(split(&ideal.with_gen(ExponentVector::new(rest)), memo));
            irredundant(comps)
        }
    };
    memo.insert(ideal.clone(), out.clone());
    out
}

/// Irredundant irreducible decomposition by recursive splitting of mixed
/// generators.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<IrreducibleDecomposition> {
    require_proper_nonzero(ideal)?;
    let mut memo = HashMap::new();
    Ok(IrreducibleDecomposition { components: split(ideal, &mut memo) })
}

/// Irreducible components grouped by radical and intersected.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<PrimaryDecomposition> {
    let irr = irreducible_decomposition(ideal)?;
    Ok(group_by_radical(&irr))
}

fn group_by_radical(irr: &IrreducibleDecomposition) -> PrimaryDecomposition {
    let mut groups: BTreeMap<MonomialPrime, MonomialIdeal> = BTreeMap::new();
    for c in &irr.components {
        let q = c.to_ideal();
        groups
            .entry(c.radical())
            .and_modify(|acc| *acc = acc.intersect(&q).expect("same ring"))
            .or_insert(q);
    }
    PrimaryDecomposition {
        components: groups
            .into_iter()
            .map(|(radical, ideal)| PrimaryComponent { radical, ideal })
            .collect(),
    }
}

/// `Ass(R/I)`: the radicals of the irreducible components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    Ok(irreducible_decomposition(ideal)?
        .components
        .iter()
        .map(|c| c.radical())
        .collect())
}

fn inclusion_minimal(primes: &BTreeSet<MonomialPrime>) -> BTreeSet<MonomialPrime> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset_of(p)))
        .cloned()
        .collect()
}

pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    Ok(inclusion_minimal(&associated_primes(ideal)?))
}

/// `dim R/I`. The zero ideal gives `n`; the unit ideal is rejected.
pub fn krull_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Ok(ideal.n());
    }
    let min = minimal_primes(ideal)?;
    let height = min.iter().map(|p| p.height()).min().unwrap_or(0);
    Ok(ideal.n() - height)
}

/// Symbolic power `I^(s)`: for each minimal prime `p` of `I`, intersect the
/// primary components of `I^s` whose radical lies inside `p`, then
/// intersect over all minimal primes. `I^(0)` is the unit ideal.
pub fn symbolic_power(ideal: &MonomialIdeal, s: u32) -> Result<MonomialIdeal> {
    require_proper_nonzero(ideal)?;
    if s == 0 {
        return Ok(MonomialIdeal::unit(ideal.n()));
    }
    let min = minimal_primes(ideal)?;
    let power_dec = primary_decomposition(&ideal.power(s)?)?;
    let n = ideal.n();
    let mut result = MonomialIdeal::unit(n);
    for p in &min {
        let local = intersect_all(
            n,
            power_dec
                .components
                .iter()
                .filter(|c| c.radical.is_subset_of(p))
                .map(|c| &c.ideal),
        );
        result = result.intersect(&local)?;
    }
    Ok(result)
}
