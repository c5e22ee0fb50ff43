//! Executable checks of how ideal invariants behave under `I ↦ I^[m]`,
//! run over a corpus of ideals.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::ResourceCaps;
use crate::closure::{integral_closure_gens, is_integrally_closed};
use crate::corpus::{companion, generate_corpus, CorpusSpec};
use crate::decomposition::{
    associated_primes, krull_dimension, minimal_primes, primary_decomposition, symbolic_power,
};
use crate::error::{Error, Result};
use crate::format::NamedIdeal;
use crate::ideal::{FieldSpec, MonomialIdeal};
use crate::monomial::{box_points, Exp, ExponentVector};
use crate::probes::{ntf_probe, stability_probe, Verdict};
use crate::resolution::{betti_table, cm_summary, predicted_regularity, BettiTable, ExtremalCorner};

macro_rules! theorems {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Catalog of checkable statements.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId { $($variant),* }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),*];

            pub fn as_str(&self) -> &'static str {
                match self { $(TheoremId::$variant => $name),* }
            }
        }

        impl FromStr for TheoremId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(TheoremId::$variant),)*
                    _ => Err(Error::input(format!("unknown theorem id {s:?}"))),
                }
            }
        }
    };
}

theorems! {
    BettiScaling => "betti-scaling",
    RegFormula => "reg-formula",
    PdEqual => "pd-equal",
    DepthEqual => "depth-equal",
    CmTransfer => "cm-transfer",
    GorensteinTransfer => "gorenstein-transfer",
    ExtremalTransfer => "extremal-transfer",
    PowerCommute => "power-commute",
    IntersectCommute => "intersect-commute",
    MembershipTransfer => "membership-transfer",
    PrimaryTransfer => "primary-transfer",
    AssEqual => "ass-equal",
    MinEqual => "min-equal",
    NtfTransfer => "ntf-transfer",
    StabilityEqual => "stability-equal",
    ClosureEqual => "closure-equal",
    SymbolicCommute => "symbolic-commute",
    SymbolicDepth => "symbolic-depth",
    MuEqual => "mu-equal",
    ExtremalPowerStab => "extremal-power-stab",
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Everything a check needs about one corpus member.
#[derive(Debug, Clone)]
pub struct Case<'a> {
    pub index: usize,
    pub ideal: &'a MonomialIdeal,
    pub spec: &'a CorpusSpec,
    pub caps: &'a ResourceCaps,
    pub fields: &'a [FieldSpec],
}

/// Outcome of a check on one case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    /// The statement failed; the string names the offending values.
    Fail(String),
    /// A resource cap stopped the check.
    Resource(String),
    /// The check does not apply to this case.
    Skipped(String),
}

fn fail<T>(msg: String) -> Result<T, Outcome> {
    Err(Outcome::Fail(msg))
}

type CheckResult = std::result::Result<(), Outcome>;

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        match e {
            Error::Resource(_) | Error::Overflow(_) => Outcome::Resource(e.to_string()),
            Error::Input(_) => Outcome::Fail(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub index: usize,
    /// The ideal in text form, replayable with `verify --ideal-file`.
    pub ideal: String,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub corpus: CorpusSpec,
    pub fields: Vec<u64>,
    pub passed: usize,
    pub failed: usize,
    pub resource: usize,
    pub skipped: usize,
    pub elapsed_ms: u128,
    pub cases: Vec<CaseRecord>,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| matches!(c.outcome, Outcome::Fail(_)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Summary line plus one block per failing case.
    pub fn render(&self) -> String {
        let mut out = format!(
            "{}: {} passed, {} failed, {} resource-capped, {} skipped ({} cases, {} ms)\n",
            self.theorem,
            self.passed,
            self.failed,
            self.resource,
            self.skipped,
            self.cases.len(),
            self.elapsed_ms
        );
        for c in &self.cases {
            match &c.outcome {
                Outcome::Fail(msg) => {
                    out.push_str(&format!("FAIL case {}: {msg}\n{}", c.index, c.ideal));
                }
                Outcome::Resource(msg) => {
                    out.push_str(&format!("RESOURCE case {}: {msg}\n", c.index));
                }
                _ => {}
            }
        }
        out
    }

    /// Write the JSON report to `dir/<seed>-<theorem>.json`.
    pub fn persist(&self, dir: &Path) -> std::io::Result<PathBuf> {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("{}-{}.json", self.corpus.seed, self.theorem));
        std::fs::write(&path, self.to_json())?;
        Ok(path)
    }
}

/// Fields used by the Betti-number checks by default.
pub const DEFAULT_FIELDS: [FieldSpec; 2] = [FieldSpec::RATIONALS, FieldSpec::GF2];

/// Run a catalog check over a corpus.
pub fn verify(
    id: TheoremId,
    spec: &CorpusSpec,
    corpus: &[MonomialIdeal],
    fields: &[FieldSpec],
    caps: &ResourceCaps,
) -> VerificationReport {
    verify_with(id.as_str(), spec, corpus, fields, caps, check_fn(id))
}

/// Generate the corpus described by `spec`, then run `verify`.
pub fn verify_spec(
    id: TheoremId,
    spec: &CorpusSpec,
    fields: &[FieldSpec],
    caps: &ResourceCaps,
) -> Result<VerificationReport> {
    let corpus = generate_corpus(spec)?;
    Ok(verify(id, spec, &corpus, fields, caps))
}

/// Run an arbitrary check over a corpus. Cases run in parallel; the report
/// lists them in corpus order.
pub fn verify_with<F>(
    name: &str,
    spec: &CorpusSpec,
    corpus: &[MonomialIdeal],
    fields: &[FieldSpec],
    caps: &ResourceCaps,
    check: F,
) -> VerificationReport
where
    F: Fn(&Case) -> CheckResult + Sync,
{
    let start = Instant::now();
    let cases: Vec<CaseRecord> = corpus
        .par_iter()
        .enumerate()
        .map(|(index, ideal)| {
            let case = Case { index, ideal, spec, caps, fields };
            let outcome = match check(&case) {
                Ok(()) => Outcome::Pass,
                Err(o) => o,
            };
            CaseRecord { index, ideal: NamedIdeal::standard(ideal.clone()).to_text(), outcome }
        })
        .collect();
    let count = |f: fn(&Outcome) -> bool| cases.iter().filter(|c| f(&c.outcome)).count();
    VerificationReport {
        theorem: name.to_string(),
        corpus: spec.clone(),
        fields: fields.iter().map(|f| f.characteristic()).collect(),
        passed: count(|o| matches!(o, Outcome::Pass)),
        failed: count(|o| matches!(o, Outcome::Fail(_))),
        resource: count(|o| matches!(o, Outcome::Resource(_))),
        skipped: count(|o| matches!(o, Outcome::Skipped(_))),
        elapsed_ms: start.elapsed().as_millis(),
        cases,
    }
}

pub fn check_fn(id: TheoremId) -> fn(&Case) -> CheckResult {
    use TheoremId::*;
    match id {
        BettiScaling => check_betti_scaling,
        RegFormula => check_reg_formula,
        PdEqual => check_pd_equal,
        DepthEqual => check_depth_equal,
        CmTransfer => check_cm_transfer,
        GorensteinTransfer => check_gorenstein_transfer,
        ExtremalTransfer => check_extremal_transfer,
        PowerCommute => check_power_commute,
        IntersectCommute => check_intersect_commute,
        MembershipTransfer => check_membership_transfer,
        PrimaryTransfer => check_primary_transfer,
        AssEqual => check_ass_equal,
        MinEqual => check_min_equal,
        NtfTransfer => check_ntf_transfer,
        StabilityEqual => check_stability_equal,
        ClosureEqual => check_closure_equal,
        SymbolicCommute => check_symbolic_commute,
        SymbolicDepth => check_symbolic_depth,
        MuEqual => check_mu_equal,
        ExtremalPowerStab => check_extremal_power_stab,
    }
}

fn square(case: &Case, m: Exp) -> std::result::Result<MonomialIdeal, Outcome> {
    Ok(case.ideal.square_power(m)?)
}

/// Betti tables of `I` and `I^[m]` over one field.
fn tables(case: &Case, m: Exp, field: FieldSpec) -> std::result::Result<(BettiTable, BettiTable), Outcome> {
    let base = betti_table(case.ideal, field, case.caps)?;
    let sq = betti_table(&square(case, m)?, field, case.caps)?;
    Ok((base, sq))
}

fn for_each_m_field<F>(case: &Case, mut f: F) -> CheckResult
where
    F: FnMut(Exp, FieldSpec) -> CheckResult,
{
    for &field in case.fields {
        for &m in &case.spec.m_list {
            f(m, field)?;
        }
    }
    Ok(())
}

fn fmt_entries(t: &BettiTable) -> String {
    format!("{:?}", t.entries().collect::<Vec<_>>())
}

/// Betti scaling with a pluggable degree map; the catalog check uses
/// `k ↦ m·k`.
pub fn check_betti_scaling_with(case: &Case, degree_map: impl Fn(Exp, Exp) -> Exp) -> CheckResult {
    for_each_m_field(case, |m, field| {
        let (base, sq) = tables(case, m, field)?;
        let mut predicted = BettiTable::new(base.n(), field);
        for (i, k, c) in base.entries() {
            predicted.add(i, degree_map(m, k), c);
        }
        if predicted != sq {
            return fail(format!(
                "char {} m={m}: predicted {} but computed {}",
                field.characteristic(),
                fmt_entries(&predicted),
                fmt_entries(&sq)
            ));
        }
        if let Some((i, j, _)) = sq.entries().find(|&(_, j, _)| j % m != 0) {
            return fail(format!("char {} m={m}: beta_{{{i},{j}}} off the m-multiples", field.characteristic()));
        }
        Ok(())
    })
}

fn check_betti_scaling(case: &Case) -> CheckResult {
    check_betti_scaling_with(case, |m, k| m * k)
}

fn check_reg_formula(case: &Case) -> CheckResult {
    for_each_m_field(case, |m, field| {
        let (base, sq) = tables(case, m, field)?;
        let corner = base.extremal_corner_at_reg()?;
        let predicted = predicted_regularity(base.reg(), corner, m);
        if sq.reg() != predicted {
            return fail(format!(
                "char {} m={m}: reg(R/I)={} corner i={corner} predicts {predicted}, measured {}",
                field.characteristic(),
                base.reg(),
                sq.reg()
            ));
        }
        Ok(())
    })
}

fn check_pd_equal(case: &Case) -> CheckResult {
    for_each_m_field(case, |m, field| {
        let (base, sq) = tables(case, m, field)?;
        if base.pd() != sq.pd() {
            return fail(format!("char {} m={m}: pd {} vs {}", field.characteristic(), base.pd(), sq.pd()));
        }
        Ok(())
    })
}

fn check_depth_equal(case: &Case) -> CheckResult {
    for_each_m_field(case, |m, field| {
        let (base, sq) = tables(case, m, field)?;
        let dims = (krull_dimension(case.ideal)?, krull_dimension(&square(case, m)?)?);
        if base.depth() != sq.depth() || dims.0 != dims.1 {
            return fail(format!(
                "char {} m={m}: depth {} vs {}, dim {} vs {}",
                field.characteristic(),
                base.depth(),
                sq.depth(),
                dims.0,
                dims.1
            ));
        }
        Ok(())
    })
}

fn cm_pair(
    case: &Case,
    m: Exp,
    field: FieldSpec,
) -> std::result::Result<(crate::resolution::CmSummary, crate::resolution::CmSummary), Outcome> {
    let (base, sq) = tables(case, m, field)?;
    Ok((cm_summary(case.ideal, &base)?, cm_summary(&square(case, m)?, &sq)?))
}

fn check_cm_transfer(case: &Case) -> CheckResult {
    for_each_m_field(case, |m, field| {
        let (a, b) = cm_pair(case, m, field)?;
        if a.cohen_macaulay != b.cohen_macaulay || a.dim != b.dim {
            return fail(format!("char {} m={m}: {a:?} vs {b:?}", field.characteristic()));
        }
        Ok(())
    })
}

fn check_gorenstein_transfer(case: &Case) -> CheckResult {
    for_each_m_field(case, |m, field| {
        let (a, b) = cm_pair(case, m, field)?;
        if a.gorenstein != b.gorenstein || a.cm_type != b.cm_type {
            return fail(format!("char {} m={m}: {a:?} vs {b:?}", field.characteristic()));
        }
        Ok(())
    })
}

fn check_extremal_transfer(case: &Case) -> CheckResult {
    for_each_m_field(case, |m, field| {
        let (base, sq) = tables(case, m, field)?;
        let mapped: Vec<ExtremalCorner> = base
            .extremal_betti_set()
            .into_iter()
            .map(|c| ExtremalCorner { j: c.j * m, ..c })
            .collect();
        let measured = sq.extremal_betti_set();
        if mapped != measured {
            return fail(format!(
                "char {} m={m}: corners of R/I map to {mapped:?}, R/I^[m] has {measured:?}",
                field.characteristic()
            ));
        }
        Ok(())
    })
}

fn for_each_m_s<F>(case: &Case, mut f: F) -> CheckResult
where
    F: FnMut(Exp, u32) -> CheckResult,
{
    for &m in &case.spec.m_list {
        for s in 1..=case.spec.max_s {
            f(m, s)?;
        }
    }
    Ok(())
}

fn check_power_commute(case: &Case) -> CheckResult {
    for_each_m_s(case, |m, s| {
        let left = square(case, m)?.power(s)?;
        let right = case.ideal.power(s)?.square_power(m)?;
        if left != right {
            return fail(format!("m={m} s={s}: (I^[m])^s = {left:?}, (I^s)^[m] = {right:?}"));
        }
        Ok(())
    })
}

fn check_intersect_commute(case: &Case) -> CheckResult {
    let other = companion(case.ideal, case.spec, case.index);
    for &m in &case.spec.m_list {
        let left = case.ideal.intersect(&other)?.square_power(m)?;
        let right = square(case, m)?.intersect(&other.square_power(m)?)?;
        if left != right {
            return fail(format!("m={m} J={other:?}: (I∩J)^[m] = {left:?}, I^[m]∩J^[m] = {right:?}"));
        }
    }
    Ok(())
}

fn check_membership_transfer(case: &Case) -> CheckResult {
    // Every monomial agrees with its truncation at lcm + 1 on membership.
    let bound = ExponentVector::new(case.ideal.lcm_of_gens().coords().iter().map(|e| e + 1).collect());
    for &m in &case.spec.m_list {
        let sq = square(case, m)?;
        for u in box_points(&bound) {
            let scaled = u.checked_scale(m)?;
            if case.ideal.contains(&u)? != sq.contains(&scaled)? {
                return fail(format!("m={m} u={u:?}: membership differs"));
            }
        }
    }
    Ok(())
}

fn check_primary_transfer(case: &Case) -> CheckResult {
    let base = primary_decomposition(case.ideal)?;
    for &m in &case.spec.m_list {
        let expected: Vec<_> = base
            .components
            .iter()
            .map(|c| Ok((c.radical.clone(), c.ideal.square_power(m)?)))
            .collect::<Result<_>>()?;
        let measured: Vec<_> = primary_decomposition(&square(case, m)?)?
            .components
            .into_iter()
            .map(|c| (c.radical, c.ideal))
            .collect();
        if expected != measured {
            return fail(format!("m={m}: expected {expected:?}, computed {measured:?}"));
        }
    }
    Ok(())
}

fn check_ass_equal(case: &Case) -> CheckResult {
    let base = associated_primes(case.ideal)?;
    for &m in &case.spec.m_list {
        let sq = associated_primes(&square(case, m)?)?;
        if sq != base {
            return fail(format!("m={m}: Ass(I) = {base:?}, Ass(I^[m]) = {sq:?}"));
        }
    }
    Ok(())
}

fn check_min_equal(case: &Case) -> CheckResult {
    let base = minimal_primes(case.ideal)?;
    for &m in &case.spec.m_list {
        let sq = minimal_primes(&square(case, m)?)?;
        if sq != base {
            return fail(format!("m={m}: Min(I) = {base:?}, Min(I^[m]) = {sq:?}"));
        }
    }
    Ok(())
}

fn check_ntf_transfer(case: &Case) -> CheckResult {
    let report = ntf_probe(case.ideal, case.spec.max_s, &case.spec.m_list)?;
    match report.verdict {
        Verdict::TransferViolated { .. } => fail(format!("{}", report.verdict)),
        // I itself is not normally torsion-free on the window.
        Verdict::ViolatedAt { .. } => Err(Outcome::Skipped(report.verdict.to_string())),
        _ => Ok(()),
    }
}

fn check_stability_equal(case: &Case) -> CheckResult {
    for &m in &case.spec.m_list {
        let report = stability_probe(case.ideal, case.spec.max_s, m)?;
        if !report.verdict.holds() {
            return fail(format!("m={m}: candidate indices {:?}", report.stable_from));
        }
    }
    Ok(())
}

fn check_closure_equal(case: &Case) -> CheckResult {
    for &m in &case.spec.m_list {
        let sq = square(case, m)?;
        let left = integral_closure_gens(&sq, case.caps)?;
        let right = integral_closure_gens(&case.ideal.power(m as u32)?, case.caps)?;
        if left != right {
            return fail(format!("m={m}: closure(I^[m]) = {left:?}, closure(I^m) = {right:?}"));
        }
        if m >= 2 && !case.ideal.is_principal() && is_integrally_closed(&sq, case.caps)? {
            return fail(format!("m={m}: I^[m] is integrally closed"));
        }
    }
    Ok(())
}

fn check_symbolic_commute(case: &Case) -> CheckResult {
    for_each_m_s(case, |m, s| {
        let left = symbolic_power(&square(case, m)?, s)?;
        let right = symbolic_power(case.ideal, s)?.square_power(m)?;
        if left != right {
            return fail(format!("m={m} s={s}: (I^[m])^(s) = {left:?}, (I^(s))^[m] = {right:?}"));
        }
        Ok(())
    })
}

fn check_symbolic_depth(case: &Case) -> CheckResult {
    for &field in case.fields.iter().take(1) {
        for_each_m_s(case, |m, s| {
            let a = betti_table(&symbolic_power(case.ideal, s)?, field, case.caps)?.depth();
            let b = betti_table(&symbolic_power(&square(case, m)?, s)?, field, case.caps)?.depth();
            if a != b {
                return fail(format!("m={m} s={s}: depth R/I^(s) = {a}, depth R/(I^[m])^(s) = {b}"));
            }
            Ok(())
        })?;
    }
    Ok(())
}

fn check_mu_equal(case: &Case) -> CheckResult {
    for_each_m_s(case, |m, s| {
        let a = symbolic_power(case.ideal, s)?.num_gens();
        let b = symbolic_power(&square(case, m)?, s)?.num_gens();
        if a != b {
            return fail(format!("m={m} s={s}: mu(I^(s)) = {a}, mu((I^[m])^(s)) = {b}"));
        }
        Ok(())
    })
}

/// For every `s` on the window: the regularity corner `i_s` of `R/I^s`
/// exists, `reg R/(I^[m])^s = reg R/(I^s)^[m]`, and both equal the value
/// `max(m·j − i)` read off the scaled table of `R/I^s`. These are the facts
/// that tie the regularity of powers of `I^[m]` to those of `I`.
fn check_extremal_power_stab(case: &Case) -> CheckResult {
    let field = case.fields.first().copied().unwrap_or_default();
    for s in 1..=case.spec.max_s {
        let base = betti_table(&case.ideal.power(s)?, field, case.caps)?;
        base.extremal_corner_at_reg()?;
        for &m in &case.spec.m_list {
            let power_of_square = betti_table(&square(case, m)?.power(s)?, field, case.caps)?;
            let square_of_power =
                betti_table(&case.ideal.power(s)?.square_power(m)?, field, case.caps)?;
            if power_of_square.reg() != square_of_power.reg() {
                return fail(format!(
                    "m={m} s={s}: reg R/(I^[m])^s = {}, reg R/(I^s)^[m] = {}",
                    power_of_square.reg(),
                    square_of_power.reg()
                ));
            }
            let expected = base.square_power_regularity(m);
            if power_of_square.reg() != expected {
                return fail(format!(
                    "m={m} s={s}: reg R/(I^[m])^s = {}, scaled table of I^s gives {expected}",
                    power_of_square.reg()
                ));
            }
        }
    }
    Ok(())
}
