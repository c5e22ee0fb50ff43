//! Window probes for statements about all large powers.
//!
//! Every probe looks at `s = 1..=window` only. Verdicts describe that
//! window and nothing beyond it.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::{Serialize, Serializer};

use crate::caps::ResourceCaps;
use crate::closure::is_integrally_closed;
use crate::decomposition::{associated_primes, symbolic_power, MonomialPrime};
use crate::error::{Error, Result};
use crate::ideal::{FieldSpec, MonomialIdeal};
use crate::monomial::Exp;
use crate::resolution::betti_table;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    HoldsOnWindow,
    /// The property fails for the input ideal at this `s`.
    ViolatedAt { s: u32 },
    /// The input holds on the window but its square power fails.
    TransferViolated { m: Exp, s: u32 },
    /// Two quantities that should agree differ on the window.
    Mismatch,
    /// No constant tail of length two was seen.
    NotStabilized,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::HoldsOnWindow)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::HoldsOnWindow => write!(f, "holds-on-window"),
            Verdict::ViolatedAt { s } => write!(f, "violated-at-s{s}"),
            Verdict::TransferViolated { m, s } => write!(f, "transfer-violated-m{m}-s{s}"),
            Verdict::Mismatch => write!(f, "mismatch-on-window"),
            Verdict::NotStabilized => write!(f, "not-stabilized-on-window"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

fn supports(primes: &BTreeSet<MonomialPrime>) -> Vec<Vec<usize>> {
    primes.iter().map(|p| p.support().to_vec()).collect()
}

/// One row of a probe report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ProbeRecord {
    /// `Ass` of a power of `I` (`m = 1`) or of `I^[m]`.
    Ass {
        m: Exp,
        s: u32,
        ass: Vec<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        contained: Option<bool>,
    },
    SymbolicDepth {
        s: u32,
        depth: usize,
        depth_square: usize,
        mu: usize,
        mu_square: usize,
        integrally_closed: bool,
        integrally_closed_square: bool,
    },
    ExtremalPower {
        s: u32,
        reg: i64,
        corner: usize,
    },
}

/// Result of a window probe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub probe: &'static str,
    pub window: u32,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub m: Vec<Exp>,
    pub records: Vec<ProbeRecord>,
    /// Index where the observed sequence becomes constant, per subject
    /// (`I` first, then each `I^[m]`).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub stable_from: Vec<u32>,
    /// Constant value of the tail for the extremal-power probe.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_value: Option<usize>,
    pub verdict: Verdict,
}

impl ProbeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("probe report serializes")
    }

    /// Aligned text table.
    pub fn render(&self) -> String {
        let header: &[&str] = match self.records.first() {
            Some(ProbeRecord::SymbolicDepth { .. }) => {
                &["s", "depth", "depth[m]", "mu", "mu[m]", "closed", "closed[m]"]
            }
            Some(ProbeRecord::ExtremalPower { .. }) => &["s", "reg", "corner"],
            Some(ProbeRecord::Ass { .. }) | None => &["ideal", "s", "Ass", "contained"],
        };
        let mut rows: Vec<Vec<String>> = vec![header.iter().map(|h| h.to_string()).collect()];
        for r in &self.records {
            rows.push(match r {
                ProbeRecord::Ass { m, s, ass, contained } => vec![
                    if *m == 1 { "I".into() } else { format!("I^[{m}]") },
                    s.to_string(),
                    ass.iter()
                        .map(|p| format!("({})", p.iter().map(|k| format!("x{}", k + 1)).collect::<Vec<_>>().join(",")))
                        .collect::<Vec<_>>()
                        .join(" "),
                    contained.map_or("-".into(), |c| c.to_string()),
                ],
                ProbeRecord::SymbolicDepth {
                    s,
                    depth,
                    depth_square,
                    mu,
                    mu_square,
                    integrally_closed,
                    integrally_closed_square,
                } => vec![
                    s.to_string(),
                    depth.to_string(),
                    depth_square.to_string(),
                    mu.to_string(),
                    mu_square.to_string(),
                    integrally_closed.to_string(),
                    integrally_closed_square.to_string(),
                ],
                ProbeRecord::ExtremalPower { s, reg, corner } => {
                    vec![s.to_string(), reg.to_string(), corner.to_string()]
                }
            });
        }
        let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..cols)
            .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|v| v.len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for r in &rows {
            let line: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(v, w)| format!("{v:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        if !self.stable_from.is_empty() {
            let s: Vec<String> = self.stable_from.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "stable from: {}", s.join(" "));
        }
        if let Some(v) = self.tail_value {
            let _ = writeln!(out, "tail corner: {v}");
        }
        let _ = writeln!(out, "probe {} on window s <= {}: {}", self.probe, self.window, self.verdict);
        out
    }
}

fn check_window(window: u32) -> Result<()> {
    if window == 0 {
        return Err(Error::input("probe window must be at least 1"));
    }
    Ok(())
}

fn ass_of_powers(ideal: &MonomialIdeal, window: u32) -> Result<Vec<BTreeSet<MonomialPrime>>> {
    (1..=window).map(|s| associated_primes(&ideal.power(s)?)).collect()
}

/// Least `s0` with the sequence constant on `s0..=window` (1-based).
fn stable_from<T: PartialEq>(seq: &[T]) -> u32 {
    let mut start = seq.len();
    while start > 1 && seq[start - 2] == seq[seq.len() - 1] {
        start -= 1;
    }
    start as u32
}

/// Normally torsion-free check `Ass(I^s) ⊆ Ass(I)` on the window, repeated
/// for each `I^[m]` when `I` passes.
pub fn ntf_probe(ideal: &MonomialIdeal, window: u32, m_list: &[Exp]) -> Result<ProbeReport> {
    check_window(window)?;
    let mut records = Vec::new();
    let mut verdict = Verdict::HoldsOnWindow;
    let subjects: Vec<(Exp, MonomialIdeal)> = std::iter::once(Ok((1, ideal.clone())))
        .chain(m_list.iter().map(|&m| Ok((m, ideal.square_power(m)?))))
        .collect::<Result<_>>()?;
    for (m, subject) in &subjects {
        let seq = ass_of_powers(subject, window)?;
        let base = &seq[0];
        let mut first_bad = None;
        for (idx, ass) in seq.iter().enumerate() {
            let contained = ass.is_subset(base);
            let s = idx as u32 + 1;
            if !contained && first_bad.is_none() {
                first_bad = Some(s);
            }
            records.push(ProbeRecord::Ass { m: *m, s, ass: supports(ass), contained: Some(contained) });
        }
        if let Some(s) = first_bad {
            verdict = if *m == 1 {
                Verdict::ViolatedAt { s }
            } else {
                Verdict::TransferViolated { m: *m, s }
            };
            break;
        }
    }
    Ok(ProbeReport {
        probe: "ntf",
        window,
        m: m_list.to_vec(),
        records,
        stable_from: Vec::new(),
        tail_value: None,
        verdict,
    })
}

/// Candidate index of stability of `Ass(I^s)` for `I` and `I^[m]` on the
/// window; the verdict compares the two.
pub fn stability_probe(ideal: &MonomialIdeal, window: u32, m: Exp) -> Result<ProbeReport> {
    check_window(window)?;
    let square = ideal.square_power(m)?;
    let mut records = Vec::new();
    let mut stable = Vec::new();
    for (label, subject) in [(1, ideal), (m, &square)] {
        let seq = ass_of_powers(subject, window)?;
        stable.push(stable_from(&seq));
        records.extend(seq.iter().enumerate().map(|(idx, ass)| ProbeRecord::Ass {
            m: label,
            s: idx as u32 + 1,
            ass: supports(ass),
            contained: None,
        }));
    }
    let verdict = if stable[0] == stable[1] { Verdict::HoldsOnWindow } else { Verdict::Mismatch };
    Ok(ProbeReport {
        probe: "stability",
        window,
        m: vec![m],
        records,
        stable_from: stable,
        tail_value: None,
        verdict,
    })
}

/// Pointwise comparison of `depth R/I^(s)` with `depth R/(I^[m])^(s)` and of
/// their minimal generator counts.
pub fn symbolic_depth_probe(
    ideal: &MonomialIdeal,
    window: u32,
    m: Exp,
    field: FieldSpec,
    caps: &ResourceCaps,
) -> Result<ProbeReport> {
    check_window(window)?;
    let square = ideal.square_power(m)?;
    let mut records = Vec::new();
    let mut verdict = Verdict::HoldsOnWindow;
    for s in 1..=window {
        let sym = symbolic_power(ideal, s)?;
        let sym_sq = symbolic_power(&square, s)?;
        let depth = betti_table(&sym, field, caps)?.depth();
        let depth_square = betti_table(&sym_sq, field, caps)?.depth();
        let record = ProbeRecord::SymbolicDepth {
            s,
            depth,
            depth_square,
            mu: sym.num_gens(),
            mu_square: sym_sq.num_gens(),
            integrally_closed: is_integrally_closed(&sym, caps)?,
            integrally_closed_square: is_integrally_closed(&sym_sq, caps)?,
        };
        if (depth != depth_square || sym.num_gens() != sym_sq.num_gens()) && verdict.holds() {
            verdict = Verdict::ViolatedAt { s };
        }
        records.push(record);
    }
    Ok(ProbeReport {
        probe: "symbolic-depth",
        window,
        m: vec![m],
        records,
        stable_from: Vec::new(),
        tail_value: None,
        verdict,
    })
}

/// Regularity of `R/I^s` and the homological degree of its extremal corner
/// on the regularity row, for `s = 1..=window`.
pub fn extremal_power_probe(
    ideal: &MonomialIdeal,
    window: u32,
    field: FieldSpec,
    caps: &ResourceCaps,
) -> Result<ProbeReport> {
    check_window(window)?;
    let mut records = Vec::new();
    let mut corners = Vec::new();
    for s in 1..=window {
        let table = betti_table(&ideal.power(s)?, field, caps)?;
        let corner = table.extremal_corner_at_reg()?;
        corners.push(corner);
        records.push(ProbeRecord::ExtremalPower { s, reg: table.reg(), corner });
    }
    let start = stable_from(&corners);
    let tail_len = window - start + 1;
    let verdict = if tail_len >= window.min(2) {
        Verdict::HoldsOnWindow
    } else {
        Verdict::NotStabilized
    };
    Ok(ProbeReport {
        probe: "extremal-power",
        window,
        m: Vec::new(),
        records,
        stable_from: vec![start],
        tail_value: corners.last().copied(),
        verdict,
    })
}
