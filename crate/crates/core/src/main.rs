use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sqp_core::closure::integral_closure_gens;
use sqp_core::corpus::{generate_corpus, CorpusSpec};
use sqp_core::decomposition::{
    associated_primes, irreducible_decomposition, krull_dimension, minimal_primes,
    primary_decomposition, render_ideal, symbolic_power, MonomialPrime,
};
use sqp_core::format::{parse_ideal, NamedIdeal};
use sqp_core::probes::{
    extremal_power_probe, ntf_probe, stability_probe, symbolic_depth_probe, ProbeReport,
};
use sqp_core::resolution::{betti_table, BettiTable};
use sqp_core::verify::{verify, TheoremId, VerificationReport};
use sqp_core::{Error, Exp, FieldSpec, MonomialIdeal, ResourceCaps};

#[derive(Parser)]
#[command(name = "sqp", version, about = "Square powers of monomial ideals")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Ideal file in text or JSON form; stdin when omitted.
    file: Option<PathBuf>,
}

#[derive(Args)]
struct FieldArg {
    /// Characteristic of the coefficient field (0 or a prime).
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the ideal in canonical form.
    Show(Input),
    /// The square power I^[m].
    SquarePower {
        #[arg(short)]
        m: Exp,
        #[command(flatten)]
        input: Input,
    },
    /// The ordinary power I^s.
    Power {
        #[arg(short)]
        s: u32,
        #[command(flatten)]
        input: Input,
    },
    /// Intersection of two ideals.
    Intersect { first: PathBuf, second: PathBuf },
    /// Irreducible (default) or primary decomposition.
    Decompose {
        #[arg(long)]
        primary: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Associated primes.
    Ass(Input),
    /// Minimal primes.
    Min(Input),
    /// Krull dimension of R/I.
    Dim(Input),
    /// Graded Betti diagram of R/I.
    Betti {
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        input: Input,
    },
    /// Regularity of R/I.
    Reg {
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        input: Input,
    },
    /// Projective dimension of R/I.
    Pd {
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        input: Input,
    },
    /// Depth of R/I.
    Depth {
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        input: Input,
    },
    /// Extremal Betti numbers of R/I.
    Extremal {
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        input: Input,
    },
    /// The symbolic power I^(s).
    Symbolic {
        #[arg(short)]
        s: u32,
        #[command(flatten)]
        input: Input,
    },
    /// Integral closure.
    Closure(Input),
    /// Window probes over s = 1..=max-s.
    Probe {
        kind: ProbeKind,
        #[arg(long = "max-s")]
        max_s: u32,
        /// Square-power exponents (comma separated).
        #[arg(short, value_delimiter = ',', default_values_t = vec![2u64])]
        m: Vec<Exp>,
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        input: Input,
    },
    /// Check a catalog statement over a random corpus or a single ideal.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ProbeKind {
    Ntf,
    Stability,
    SymbolicDepth,
    ExtremalPower,
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem id, or `all`.
    theorem: String,
    #[arg(long, default_value_t = CorpusSpec::default().seed)]
    seed: u64,
    #[arg(long, default_value_t = CorpusSpec::default().count)]
    count: usize,
    #[arg(long, default_value_t = CorpusSpec::default().n_min)]
    n_min: usize,
    #[arg(long, default_value_t = CorpusSpec::default().n_max)]
    n_max: usize,
    #[arg(long, default_value_t = CorpusSpec::default().gens_min)]
    gens_min: usize,
    #[arg(long, default_value_t = CorpusSpec::default().gens_max)]
    gens_max: usize,
    #[arg(long, default_value_t = CorpusSpec::default().max_exp)]
    max_exp: Exp,
    /// Square-power exponents (comma separated).
    #[arg(short, value_delimiter = ',', default_values_t = CorpusSpec::default().m_list)]
    m: Vec<Exp>,
    #[arg(long, default_value_t = CorpusSpec::default().max_s)]
    max_s: u32,
    /// Field characteristics for the Betti checks (comma separated).
    #[arg(long = "char", value_delimiter = ',', default_values_t = vec![0u64, 2])]
    chars: Vec<u64>,
    /// Replay a single ideal instead of generating a corpus.
    #[arg(long)]
    ideal_file: Option<PathBuf>,
    /// Directory receiving one JSON report per theorem.
    #[arg(long)]
    results_dir: Option<PathBuf>,
}

/// Success, or a property that did not hold.
enum Status {
    Ok,
    Violated,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violated) => ExitCode::from(1),
        Err(e) => {
            eprintln!("sqp: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn read_input(input: &Input) -> Result<NamedIdeal, Error> {
    let text = match &input.file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Input(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    parse_ideal(&text)
}

fn field(arg: &FieldArg) -> Result<FieldSpec, Error> {
    FieldSpec::new(arg.characteristic)
}

fn run(cli: &Cli) -> Result<Status, Error> {
    let caps = ResourceCaps::from_env()?;
    let json = cli.json;
    let print_ideal = |named: &NamedIdeal| {
        if json {
            println!("{}", named.to_json());
        } else {
            print!("{}", named.to_text());
        }
    };
    let print_primes = |named: &NamedIdeal, primes: &std::collections::BTreeSet<MonomialPrime>| {
        if json {
            let v: Vec<&[usize]> = primes.iter().map(|p| p.support()).collect();
            println!("{}", serde_json::to_string(&v).expect("serializes"));
        } else {
            for p in primes {
                println!("{}", p.render(&named.vars));
            }
        }
    };
    let print_number = |key: &str, v: i64| {
        if json {
            println!("{}", serde_json::json!({ key: v }));
        } else {
            println!("{v}");
        }
    };
    let table = |input: &Input, f: &FieldArg| -> Result<BettiTable, Error> {
        betti_table(&read_input(input)?.ideal, field(f)?, &caps)
    };

    match &cli.command {
        Command::Show(input) => print_ideal(&read_input(input)?),
        Command::SquarePower { m, input } => {
            let named = read_input(input)?;
            print_ideal(&named.with(named.ideal.square_power(*m)?));
        }
        Command::Power { s, input } => {
            let named = read_input(input)?;
            print_ideal(&named.with(named.ideal.power(*s)?));
        }
        Command::Intersect { first, second } => {
            let a = read_input(&Input { file: Some(first.clone()) })?;
            let b = read_input(&Input { file: Some(second.clone()) })?;
            if a.vars != b.vars {
                return Err(Error::Input("ideals use different variables".into()));
            }
            print_ideal(&a.with(a.ideal.intersect(&b.ideal)?));
        }
        Command::Decompose { primary, input } => {
            let named = read_input(input)?;
            if *primary {
                let dec = primary_decomposition(&named.ideal)?;
                if json {
                    println!("{}", dec.to_json());
                } else {
                    for c in &dec.components {
                        println!("{}  [{}]", render_ideal(&c.ideal, &named.vars), c.radical.render(&named.vars));
                    }
                }
            } else {
                let dec = irreducible_decomposition(&named.ideal)?;
                if json {
                    println!("{}", dec.to_json());
                } else {
                    for c in &dec.components {
                        println!("{}", c.render(&named.vars));
                    }
                }
            }
        }
        Command::Ass(input) => {
            let named = read_input(input)?;
            print_primes(&named, &associated_primes(&named.ideal)?);
        }
        Command::Min(input) => {
            let named = read_input(input)?;
            print_primes(&named, &minimal_primes(&named.ideal)?);
        }
        Command::Dim(input) => {
            print_number("dim", krull_dimension(&read_input(input)?.ideal)? as i64);
        }
        Command::Betti { field: f, input } => {
            let t = table(input, f)?;
            if json {
                println!("{}", t.to_json());
            } else {
                print!("{}", t.render());
            }
        }
        Command::Reg { field: f, input } => print_number("reg", table(input, f)?.reg()),
        Command::Pd { field: f, input } => print_number("pd", table(input, f)?.pd() as i64),
        Command::Depth { field: f, input } => print_number("depth", table(input, f)?.depth() as i64),
        Command::Extremal { field: f, input } => {
            let corners = table(input, f)?.extremal_betti_set();
            if json {
                println!("{}", serde_json::to_string(&corners).expect("serializes"));
            } else {
                for c in corners {
                    println!("beta_{{{},{}}} = {}", c.i, c.j, c.value);
                }
            }
        }
        Command::Symbolic { s, input } => {
            let named = read_input(input)?;
            print_ideal(&named.with(symbolic_power(&named.ideal, *s)?));
        }
        Command::Closure(input) => {
            let named = read_input(input)?;
            print_ideal(&named.with(integral_closure_gens(&named.ideal, &caps)?));
        }
        Command::Probe { kind, max_s, m, field: f, input } => {
            let ideal = read_input(input)?.ideal;
            let first_m = *m.first().ok_or_else(|| Error::Input("-m needs a value".into()))?;
            let report: ProbeReport = match kind {
                ProbeKind::Ntf => ntf_probe(&ideal, *max_s, m)?,
                ProbeKind::Stability => stability_probe(&ideal, *max_s, first_m)?,
                ProbeKind::SymbolicDepth => symbolic_depth_probe(&ideal, *max_s, first_m, field(f)?, &caps)?,
                ProbeKind::ExtremalPower => extremal_power_probe(&ideal, *max_s, field(f)?, &caps)?,
            };
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render());
            }
            if !report.verdict.holds() {
                return Ok(Status::Violated);
            }
        }
        Command::Verify(args) => return run_verify(args, json, &caps),
    }
    Ok(Status::Ok)
}

fn run_verify(args: &VerifyArgs, json: bool, caps: &ResourceCaps) -> Result<Status, Error> {
    let ids: Vec<TheoremId> = if args.theorem == "all" {
        TheoremId::ALL.to_vec()
    } else {
        vec![args.theorem.parse()?]
    };
    let spec = CorpusSpec {
        seed: args.seed,
        count: args.count,
        n_min: args.n_min,
        n_max: args.n_max,
        gens_min: args.gens_min,
        gens_max: args.gens_max,
        max_exp: args.max_exp,
        m_list: args.m.clone(),
        max_s: args.max_s,
    };
    spec.validate()?;
    let corpus: Vec<MonomialIdeal> = match &args.ideal_file {
        Some(path) => vec![read_input(&Input { file: Some(path.clone()) })?.ideal],
        None => generate_corpus(&spec)?,
    };
    let fields = args
        .chars
        .iter()
        .map(|&c| FieldSpec::new(c))
        .collect::<Result<Vec<_>, _>>()?;
    let mut all_hold = true;
    let mut reports: Vec<VerificationReport> = Vec::new();
    for id in ids {
        let report = verify(id, &spec, &corpus, &fields, caps);
        all_hold &= report.holds();
        if let Some(dir) = &args.results_dir {
            report
                .persist(dir)
                .map_err(|e| Error::Input(format!("cannot write report to {}: {e}", dir.display())))?;
        }
        if !json {
            print!("{}", report.render());
        }
        reports.push(report);
    }
    if json {
        let v: Vec<serde_json::Value> = reports
            .iter()
            .map(|r| serde_json::to_value(r).expect("serializes"))
            .collect();
        println!("{}", serde_json::to_string(&v).expect("serializes"));
    }
    Ok(if all_hold { Status::Ok } else { Status::Violated })
}
