//! Graded Betti tables of `R/I` and the invariants read off them.

mod koszul;
mod lattice;
pub mod linalg;
mod render;
mod taylor;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::decomposition::krull_dimension;
use crate::error::{Error, Result};
use crate::ideal::{FieldSpec, MonomialIdeal};
use crate::monomial::Exp;

pub use koszul::{betti_table, KoszulComplexRecord};
pub use lattice::lcm_lattice;
pub use taylor::{taylor_betti_oracle, TAYLOR_MAX_GENS};

pub use crate::caps::ResourceCaps;

/// Graded Betti numbers `β_{i,j}(R/I)`, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiJson", try_from = "BettiJson")]
pub struct BettiTable {
    n: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, Exp), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    #[serde(rename = "char")]
    characteristic: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    entries: Vec<(usize, Exp, u64)>,
}

impl From<BettiTable> for BettiJson {
    fn from(t: BettiTable) -> Self {
        BettiJson {
            characteristic: t.field.characteristic(),
            n: None,
            entries: t.entries().collect(),
        }
    }
}

impl TryFrom<BettiJson> for BettiTable {
    type Error = Error;
    fn try_from(j: BettiJson) -> Result<Self> {
        let mut t = BettiTable::new(j.n.unwrap_or(0), FieldSpec::new(j.characteristic)?);
        for (i, d, c) in j.entries {
            t.add(i, d, c);
        }
        if t.n == 0 {
            t.n = t.pd();
        }
        Ok(t)
    }
}

impl BettiTable {
    pub fn new(n: usize, field: FieldSpec) -> Self {
        BettiTable { n, field, entries: BTreeMap::new() }
    }

    /// Add `count` to `β_{i,j}`; zero counts are not stored.
    pub fn add(&mut self, i: usize, j: Exp, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, j: Exp) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `(i, j, β_{i,j})` for every nonzero entry, sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, Exp, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Projective dimension: largest homological degree with an entry.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Castelnuovo-Mumford regularity `max { j - i : β_{i,j} != 0 }`.
    pub fn reg(&self) -> i64 {
        self.entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .unwrap_or(0)
    }

    /// Depth by Auslander-Buchsbaum.
    pub fn depth(&self) -> usize {
        self.n.saturating_sub(self.pd())
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(h, _), _)| h == i)
            .map(|(_, &c)| c)
            .sum()
    }

    /// The corners: nonzero `β_{i,j}` with `β_{r,s} = 0` whenever
    /// `r >= i`, `s >= j` and `(r, s) != (i, j)`.
    pub fn extremal_betti_set(&self) -> Vec<ExtremalCorner> {
        self.entries
            .iter()
            .filter(|(&(i, j), _)| {
                !self
                    .entries
                    .keys()
                    .any(|&(r, s)| (r, s) != (i, j) && r >= i && s >= j)
            })
            .map(|(&(i, j), &value)| ExtremalCorner { i, j, value })
            .collect()
    }

    /// The homological degree `i` of the extremal Betti number on the
    /// regularity row.
    ///
    /// Extremality here is measured by row: `β_{i,i+r}` is a corner when
    /// `β_{k,k+l} = 0` for all `k >= i`, `l >= r` other than `(i, r)`. The
    /// largest `i` with `β_{i,i+reg} != 0` is always such a corner, whereas
    /// a corner in the sense of [`Self::extremal_betti_set`] need not lie on
    /// the regularity row at all.
    pub fn extremal_corner_at_reg(&self) -> Result<usize> {
        let reg = self.reg();
        self.entries
            .keys()
            .filter(|&&(i, j)| j as i64 - i as i64 == reg)
            .map(|&(i, _)| i)
            .max()
            .ok_or_else(|| Error::input("extremal corner of an empty Betti table"))
    }

    /// Regularity of `R/I^[m]` read off this table of `R/I`: the maximum of
    /// `m·j − i` over the nonzero entries `β_{i,j}`.
    pub fn square_power_regularity(&self, m: Exp) -> i64 {
        self.entries
            .keys()
            .map(|&(i, j)| m as i64 * j as i64 - i as i64)
            .max()
            .unwrap_or(i64::MIN)
    }

    /// Move every entry `(i, k)` to `(i, m·k)`: the table of `R/I^[m]`
    /// predicted from the table of `R/I`.
    pub fn predicted_square_betti(&self, m: Exp) -> Result<BettiTable> {
        if m == 0 {
            return Err(Error::input("square power exponent m must be at least 1"));
        }
        let mut out = BettiTable::new(self.n, self.field);
        for (i, k, c) in self.entries() {
            out.add(i, k.checked_mul(m).ok_or(Error::Overflow("Betti degree scaling"))?, c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("Betti table serializes")
    }

    /// Betti diagram with rows indexed by `j - i`.
    pub fn render(&self) -> String {
        render::diagram(self)
    }
}

/// A corner of the Betti table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ExtremalCorner {
    pub i: usize,
    pub j: Exp,
    pub value: u64,
}

/// `m·r + (m-1)·i`, the regularity of `R/I^[m]` when `r = reg(R/I)` and
/// `β_{i,i+r}(R/I)` is extremal.
pub fn predicted_regularity(r: i64, i: usize, m: Exp) -> i64 {
    let m = m as i64;
    m * r + (m - 1) * i as i64
}

/// Cohen-Macaulay data of `R/I` over one field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CmSummary {
    pub depth: usize,
    pub dim: usize,
    pub cohen_macaulay: bool,
    /// Last total Betti number; the Cohen-Macaulay type when CM.
    pub cm_type: u64,
    pub gorenstein: bool,
}

pub fn cm_summary(ideal: &MonomialIdeal, table: &BettiTable) -> Result<CmSummary> {
    let depth = table.depth();
    let dim = krull_dimension(ideal)?;
    let cm_type = table.total(table.pd());
    let cohen_macaulay = depth == dim;
    Ok(CmSummary {
        depth,
        dim,
        cohen_macaulay,
        cm_type,
        gorenstein: cohen_macaulay && cm_type == 1,
    })
}

pub fn is_cohen_macaulay(ideal: &MonomialIdeal, field: FieldSpec, caps: &ResourceCaps) -> Result<bool> {
    Ok(cm_summary(ideal, &betti_table(ideal, field, caps)?)?.cohen_macaulay)
}

pub fn cm_type(ideal: &MonomialIdeal, field: FieldSpec, caps: &ResourceCaps) -> Result<u64> {
    let t = betti_table(ideal, field, caps)?;
    Ok(t.total(t.pd()))
}

pub fn is_gorenstein(ideal: &MonomialIdeal, field: FieldSpec, caps: &ResourceCaps) -> Result<bool> {
    Ok(cm_summary(ideal, &betti_table(ideal, field, caps)?)?.gorenstein)
}

pub fn pd(ideal: &MonomialIdeal, field: FieldSpec, caps: &ResourceCaps) -> Result<usize> {
    Ok(betti_table(ideal, field, caps)?.pd())
}

pub fn reg(ideal: &MonomialIdeal, field: FieldSpec, caps: &ResourceCaps) -> Result<i64> {
    Ok(betti_table(ideal, field, caps)?.reg())
}

pub fn depth(ideal: &MonomialIdeal, field: FieldSpec, caps: &ResourceCaps) -> Result<usize> {
    Ok(betti_table(ideal, field, caps)?.depth())
}
