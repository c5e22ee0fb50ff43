//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use sqp_core::closure::integral_closure_gens;
use sqp_core::corpus::{generate_corpus, CorpusSpec};
use sqp_core::decomposition::{associated_primes, symbolic_power, MonomialPrime};
use sqp_core::probes::{extremal_power_probe, Verdict};
use sqp_core::resolution::{betti_table, taylor_betti_oracle, TAYLOR_MAX_GENS};
use sqp_core::verify::{check_fn, verify, verify_with, TheoremId, VerificationReport, DEFAULT_FIELDS};
use sqp_core::{Exp, ExponentVector, FieldSpec, MonomialIdeal, ResourceCaps};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ideal(n: usize, gens: &[&[Exp]]) -> MonomialIdeal {
    MonomialIdeal::from_vecs(n, gens).unwrap()
}

fn triangle() -> MonomialIdeal {
    ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
}

fn all_hold(reports: &[VerificationReport]) -> Outcome {
    let mut summary = Vec::new();
    for r in reports {
        if !r.holds() {
            let first = r.failures().next().map(|c| format!("{:?}", c.outcome)).unwrap_or_default();
            return Err(format!("{}: {} failed, first {first}", r.theorem, r.failed));
        }
        if r.resource > 0 {
            return Err(format!("{}: {} cases hit a resource cap", r.theorem, r.resource));
        }
        summary.push(format!("{} {}/{}", r.theorem, r.passed, r.cases.len()));
    }
    Ok(summary.join(", "))
}

fn run_cli(args: &[&str], stdin: &str) -> String {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sqp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn sqp");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success(), "sqp {args:?} exited with {}", out.status);
    String::from_utf8(out.stdout).unwrap()
}

fn criterion_1() -> Outcome {
    let input = "vars: x1 x2 x3 x4\ngens: x1*x2, x1*x3, x1*x4, x2*x3, x2*x4, x3*x4\n";
    let first = "       0 1 2 3\ntotal: 1 6 8 3\n    0: 1 . . .\n    1: . 6 8 3\n";
    let second = "       0 1 2 3\n\
                  total: 1 6 8 3\n    \
                  0: 1 . . .\n    \
                  1: . . . .\n    \
                  2: . . . .\n    \
                  3: . 6 . .\n    \
                  4: . . 8 .\n    \
                  5: . . . 3\n";
    let start = Instant::now();
    let got = run_cli(&["betti"], input);
    if got != first {
        return Err(format!("first diagram differs:\n{got}"));
    }
    let squared = run_cli(&["square-power", "-m", "2"], input);
    let got = run_cli(&["betti"], &squared);
    if got != second {
        return Err(format!("second diagram differs:\n{got}"));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("both diagrams byte-exact in {elapsed:?}"))
}

struct Env {
    spec: CorpusSpec,
    corpus: Vec<MonomialIdeal>,
    caps: ResourceCaps,
}

impl Env {
    fn run(&self, ids: &[TheoremId], fields: &[FieldSpec]) -> Vec<VerificationReport> {
        ids.iter().map(|&id| verify(id, &self.spec, &self.corpus, fields, &self.caps)).collect()
    }
}

fn criterion_2(env: &Env) -> Outcome {
    let start = Instant::now();
    let summary = all_hold(&env.run(&[TheoremId::RegFormula], &DEFAULT_FIELDS))?;
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        return Err(format!("sweep took {elapsed:?}"));
    }
    Ok(format!("{summary}, m in {:?}, chars 0 and 2, {elapsed:?}", env.spec.m_list))
}

fn criterion_3(env: &Env) -> Outcome {
    let q = all_hold(&env.run(&[TheoremId::BettiScaling], &[FieldSpec::RATIONALS]))?;
    let f2 = all_hold(&env.run(&[TheoremId::BettiScaling], &[FieldSpec::GF2]))?;
    Ok(format!("char 0: {q}; char 2: {f2}"))
}

fn criterion_4(env: &Env) -> Outcome {
    use TheoremId::*;
    all_hold(&env.run(&[PdEqual, DepthEqual, CmTransfer, GorensteinTransfer], &DEFAULT_FIELDS))
}

fn criterion_5(env: &Env) -> Outcome {
    use TheoremId::*;
    all_hold(&env.run(&[PrimaryTransfer, AssEqual, MinEqual], &DEFAULT_FIELDS))
}

fn criterion_6(env: &Env) -> Outcome {
    use TheoremId::*;
    if env.spec.max_s < 3 || env.spec.m_list != [2, 3] {
        return Err("corpus window does not cover s <= 3, m in {2,3}".into());
    }
    all_hold(&env.run(&[PowerCommute, SymbolicCommute], &DEFAULT_FIELDS))
}

fn criterion_7(env: &Env) -> Outcome {
    let small: Vec<MonomialIdeal> = env.corpus.iter().filter(|i| i.n() <= 3).cloned().collect();
    let report = verify_with(
        "closure-equal (n <= 3)",
        &env.spec,
        &small,
        &DEFAULT_FIELDS,
        &env.caps,
        check_fn(TheoremId::ClosureEqual),
    );
    let summary = all_hold(&[report])?;
    let closure = integral_closure_gens(&ideal(2, &[&[2, 0], &[0, 2]]), &env.caps)
        .map_err(|e| e.to_string())?;
    if closure != ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]) {
        return Err(format!("closure of <x^2,y^2> is {closure:?}"));
    }
    Ok(format!("{summary}; closure of <x^2,y^2> = <x^2,xy,y^2>"))
}

fn box_points(bound: &[Exp]) -> Vec<Vec<Exp>> {
    let mut points = vec![Vec::new()];
    for &b in bound {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    points
}

/// Ass by exhaustive colon: `p ∈ Ass(I)` iff `p = I : u` for a monomial
/// `u`, and `u` may be taken below the lcm of the generators.
fn ass_oracle(i: &MonomialIdeal) -> BTreeSet<MonomialPrime> {
    let n = i.n();
    let mut primes = BTreeSet::new();
    for u in box_points(i.lcm_of_gens().coords()) {
        let colon: Vec<Vec<Exp>> = i
            .gens()
            .iter()
            .map(|g| (0..n).map(|k| g[k].saturating_sub(u[k])).collect())
            .collect();
        if colon.iter().any(|h| h.iter().all(|&e| e == 0)) {
            continue;
        }
        let vars: BTreeSet<usize> = colon
            .iter()
            .filter(|h| h.iter().sum::<Exp>() == 1)
            .map(|h| h.iter().position(|&e| e == 1).unwrap())
            .collect();
        if colon.iter().all(|h| (0..n).any(|k| h[k] > 0 && vars.contains(&k))) {
            primes.insert(MonomialPrime::new(n, vars.into_iter().collect()));
        }
    }
    primes
}

fn criterion_8(env: &Env) -> Outcome {
    let mut taylor_cases = 0;
    for (index, i) in env.corpus.iter().enumerate() {
        if i.num_gens() > TAYLOR_MAX_GENS {
            continue;
        }
        taylor_cases += 1;
        for field in DEFAULT_FIELDS {
            let engine = betti_table(i, field, &env.caps).map_err(|e| e.to_string())?;
            let oracle = taylor_betti_oracle(i, field).map_err(|e| e.to_string())?;
            if engine != oracle {
                return Err(format!("case {index} char {}: engine and Taylor oracle differ", field.characteristic()));
            }
        }
    }
    let mut ass_cases = 0;
    for (index, i) in env.corpus.iter().enumerate().filter(|(_, i)| i.n() <= 4) {
        ass_cases += 1;
        let computed = associated_primes(i).map_err(|e| e.to_string())?;
        if computed != ass_oracle(i) {
            return Err(format!("case {index}: Ass differs from the exhaustive-colon oracle"));
        }
    }
    Ok(format!("Taylor agreement on {taylor_cases} ideals x 2 chars, Ass agreement on {ass_cases} ideals"))
}

/// For a square-free ideal, `u ∈ I^(s)` iff every minimal vertex cover
/// `C` satisfies `Σ_{k∈C} u_k >= s`.
fn squarefree_symbolic_member(i: &MonomialIdeal, s: Exp, u: &[Exp]) -> bool {
    let n = i.n();
    let covers: Vec<u32> = (0u32..1 << n)
        .filter(|&c| i.gens().iter().all(|g| (0..n).any(|k| g[k] > 0 && c >> k & 1 == 1)))
        .collect();
    let minimal = covers.iter().filter(|&&c| !covers.iter().any(|&d| d != c && d & c == d));
    minimal
        .into_iter()
        .all(|&c| (0..n).filter(|&k| c >> k & 1 == 1).map(|k| u[k]).sum::<Exp>() >= s)
}

fn in_square_by_products(i: &MonomialIdeal, u: &[Exp]) -> bool {
    i.gens().iter().any(|a| {
        i.gens().iter().any(|b| (0..i.n()).all(|k| a[k] + b[k] <= u[k]))
    })
}

fn criterion_9(env: &Env) -> Outcome {
    use TheoremId::*;
    let summary = all_hold(&env.run(&[SymbolicDepth, MuEqual], &DEFAULT_FIELDS))?;
    let t = triangle();
    let xyz = [1, 1, 1];
    if !squarefree_symbolic_member(&t, 2, &xyz) || in_square_by_products(&t, &xyz) {
        return Err("oracle disagrees with the triangle record".into());
    }
    let sym = symbolic_power(&t, 2).map_err(|e| e.to_string())?;
    let xyz = ExponentVector::new(xyz.to_vec());
    let in_sym = sym.contains(&xyz).map_err(|e| e.to_string())?;
    let in_sq = t.power(2).unwrap().contains(&xyz).map_err(|e| e.to_string())?;
    if !in_sym || in_sq {
        return Err(format!("xyz in I^(2): {in_sym}, in I^2: {in_sq}"));
    }
    for u in box_points(&[3, 3, 3]) {
        let member = sym.contains(&ExponentVector::new(u.clone())).unwrap();
        if member != squarefree_symbolic_member(&t, 2, &u) {
            return Err(format!("I^(2) membership of {u:?} disagrees with the cover oracle"));
        }
    }
    Ok(format!("{summary}; triangle: xyz in I^(2) \\ I^2"))
}

fn criterion_10(env: &Env) -> Outcome {
    use TheoremId::*;
    let reports = env.run(&[NtfTransfer, StabilityEqual], &DEFAULT_FIELDS);
    let summary = all_hold(&reports)?;
    let skipped = reports[0].skipped;
    let report = extremal_power_probe(&triangle(), 4, FieldSpec::RATIONALS, &env.caps)
        .map_err(|e| e.to_string())?;
    if report.verdict != Verdict::HoldsOnWindow {
        return Err(format!("triangle extremal-power probe: {}", report.verdict));
    }
    let text = report.render();
    if !text.contains("on window s <= 4") {
        return Err("verdict does not record the window bound".into());
    }
    Ok(format!(
        "{summary} ({skipped} not NTF on window s <= {}); triangle corner constant from s = {} at i = {}, window s <= 4",
        env.spec.max_s,
        report.stable_from[0],
        report.tail_value.unwrap()
    ))
}

fn main() {
    let spec = CorpusSpec::default();
    let env = Env { corpus: generate_corpus(&spec).expect("default corpus"), spec, caps: ResourceCaps::default() };
    let criteria: Vec<Criterion> = vec![
        ("pairs ideal diagrams", Box::new(criterion_1)),
        ("regularity formula", Box::new(|| criterion_2(&env))),
        ("Betti scaling", Box::new(|| criterion_3(&env))),
        ("pd/depth/dim/CM/Gorenstein transfer", Box::new(|| criterion_4(&env))),
        ("decomposition transfer", Box::new(|| criterion_5(&env))),
        ("commutation laws", Box::new(|| criterion_6(&env))),
        ("closure law", Box::new(|| criterion_7(&env))),
        ("oracle equivalence", Box::new(|| criterion_8(&env))),
        ("symbolic-depth probe", Box::new(|| criterion_9(&env))),
        ("asymptotic window probes", Box::new(|| criterion_10(&env))),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{elapsed:.2?}]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{elapsed:.2?}]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
