//! `hurwitz`: verify multiplicative pairs, emit square identities and
//! tabulate admissible triples.
//!
//! Exit codes: 0 verified, 1 falsified or mismatch, 2 usage or input error.

mod family;
mod report;

use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_core::constructions::closed_form_triple;
use hurwitz_core::pairing::{
    check_pair_criterion, check_pair_criterion_alt, verify_identity_numeric,
    verify_identity_symbolic_with_budget, DEFAULT_SYMBOLIC_BUDGET,
};
use hurwitz_core::setops::{search_clique, search_pair_exhaustive};
use hurwitz_core::twist::perturbations_from_json;
use hurwitz_core::{
    ElementSet, Error, Family, SearchBudget, SearchOutcome, SquareIdentity, Triple, TwistSpec,
    Verdict,
};
use serde::Serialize;

use family::{FamilyName, MethodArg, Params};
use report::{Row, RunReport};

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Sums-of-squares identities from twisted group algebras over Z2^n"
)]
struct Cli {
    /// Worker threads; output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a pair (A, B) or an identity file.
    Verify(VerifyArgs),
    /// Emit the verified identity of a construction.
    Identity(IdentityArgs),
    /// Compare realized triples with their closed forms over a range.
    Triples(TriplesArgs),
    /// Search for a Hurwitzian set or a pair of given size.
    Search(SearchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Criterion,
    Symbolic,
    Numeric,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdentityFormat {
    Text,
    Latex,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Dimension; defaults to that of the A file.
    #[arg(long)]
    n: Option<u32>,
    /// cl, o, p:<m>, pn (= p:n) or sedenion.
    #[arg(long, default_value = "p:4")]
    algebra: String,
    /// Set JSON file for A.
    #[arg(long = "A", value_name = "FILE")]
    a: Option<PathBuf>,
    /// Set JSON file for B; all of Z2^n when omitted.
    #[arg(long = "B", value_name = "FILE")]
    b: Option<PathBuf>,
    /// JSON array of perturbation rows applied to the algebra.
    #[arg(long, value_name = "FILE")]
    perturb: Option<PathBuf>,
    /// Identity JSON file, instead of --A/--B.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["a", "b", "perturb", "n"])]
    identity: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "all")]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Largest symbolic expansion, in term pairs.
    #[arg(long, default_value_t = DEFAULT_SYMBOLIC_BUDGET)]
    symbolic_budget: u128,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    /// Second entry for special-n4.
    #[arg(long)]
    s: Option<u32>,
    /// Addition or subtraction, for special-n7.
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Node budget for searched families.
    #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
    budget_nodes: u64,
}

impl FamilyArgs {
    fn params(&self) -> Params {
        Params {
            l: self.l,
            k: self.k,
            s: self.s,
            method: self.method,
        }
    }
}

#[derive(Args)]
struct IdentityArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: IdentityFormat,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_SYMBOLIC_BUDGET)]
    symbolic_budget: u128,
}

#[derive(Args)]
struct TriplesArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Inclusive range a..b of dimensions.
    #[arg(long)]
    n_range: String,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value = "p:4")]
    algebra: String,
    /// `r` for a Hurwitzian set of size r, or `r,s,N` for a pair.
    #[arg(long)]
    target: String,
    #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
    budget_nodes: u64,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Shuffle candidates with --seed instead of o-order.
    #[arg(long)]
    shuffle: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write A as Set JSON.
    #[arg(long = "out-A", value_name = "FILE")]
    out_a: Option<PathBuf>,
    /// Write B as Set JSON.
    #[arg(long = "out-B", value_name = "FILE")]
    out_b: Option<PathBuf>,
}

enum Outcome {
    Verified,
    Falsified,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Identity(args) => cmd_identity(args),
        Command::Triples(args) => cmd_triples(args),
        Command::Search(args) => cmd_search(args),
    };
    match result {
        Ok(Outcome::Verified) => ExitCode::SUCCESS,
        Ok(Outcome::Falsified) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn command_echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_set(path: &Path) -> Result<ElementSet> {
    ElementSet::from_json(&read(path)?).with_context(|| path.display().to_string())
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => emit(text),
    }
}

/// Writes to standard output; a reader that closed the pipe early is not an
/// error.
fn emit(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn parse_algebra(s: &str, n: u32) -> Result<TwistSpec> {
    let family = match s {
        "cl" => Family::Clifford,
        "o" => Family::Octonion,
        "pn" => Family::P { m: n },
        "sedenion" => Family::Sedenion,
        _ => match s.strip_prefix("p:").map(str::parse::<u32>) {
            Some(Ok(m)) => Family::P { m },
            _ => bail!("unknown algebra {s:?}; expected cl, o, p:<m>, pn or sedenion"),
        },
    };
    Ok(TwistSpec::new(n, family)?)
}

fn cmd_verify(args: VerifyArgs) -> Result<Outcome> {
    let start = Instant::now();
    let (spec, a, b, given) = match &args.identity {
        Some(path) => {
            let id = SquareIdentity::from_json(&read(path)?)
                .with_context(|| path.display().to_string())?;
            (id.spec.clone(), id.a.clone(), id.b.clone(), Some(id))
        }
        None => {
            let a_path = args
                .a
                .as_deref()
                .ok_or_else(|| anyhow!("--A is required unless --identity is given"))?;
            let a = load_set(a_path)?;
            let n = args.n.unwrap_or(a.n());
            let b = match &args.b {
                Some(p) => load_set(p)?,
                None => ElementSet::full(n)?,
            };
            for (name, set) in [("A", &a), ("B", &b)] {
                if set.n() != n {
                    bail!("{name} has n = {}, expected {n}", set.n());
                }
            }
            let mut spec = parse_algebra(&args.algebra, n)?;
            if let Some(p) = &args.perturb {
                let rows = perturbations_from_json(n, &read(p)?)
                    .with_context(|| p.display().to_string())?;
                spec = spec.perturb(rows)?;
            }
            (spec, a, b, None)
        }
    };

    let mut row = Row::new(format!(
        "n={} {}{}",
        spec.n(),
        spec.family().name(),
        if spec.is_perturbed() {
            " (perturbed)"
        } else {
            ""
        }
    ));
    row.realized = Some(Triple(a.len(), b.len(), a.sumset(&b)?.len()));
    let wants = |m: Mode| args.mode == Mode::All || args.mode == m;
    let mut verdicts: Vec<bool> = Vec::new();

    if let Some(id) = &given {
        let structure = id.check_structure();
        row.verdict(
            "structure",
            structure.is_ok(),
            structure.err().unwrap_or_else(|| "ok".into()),
        );
    }
    if wants(Mode::Criterion) {
        let v = check_pair_criterion(&spec, &a, &b)?;
        row.verdict("criterion", v.holds(), describe(&v));
        verdicts.push(v.holds());
        if args.mode == Mode::All {
            let alt = check_pair_criterion_alt(&spec, &a, &b)?;
            row.verdict("criterion-alt", alt.holds(), describe(&alt));
            verdicts.push(alt.holds());
        }
    }
    if wants(Mode::Symbolic) || wants(Mode::Numeric) {
        let id = match given {
            Some(id) => id,
            None => SquareIdentity::build_unchecked(&spec, &a, &b)?,
        };
        if wants(Mode::Symbolic) {
            let v = verify_identity_symbolic_with_budget(&id, args.symbolic_budget)?;
            row.verdict("symbolic", v.holds(), describe(&v));
            verdicts.push(v.holds());
        }
        if wants(Mode::Numeric) {
            let v = verify_identity_numeric(&id, args.trials, args.seed)?;
            let detail = match v.witness() {
                None => format!("holds ({} trials, seed {})", args.trials, args.seed),
                Some(w) => format!("fails at trial {}: lhs {} != rhs {}", w.trial, w.lhs, w.rhs),
            };
            row.verdict("numeric", v.holds(), detail);
            verdicts.push(v.holds());
        }
    }
    if verdicts.windows(2).any(|w| w[0] != w[1]) {
        row.verdict("agreement", false, "methods disagree");
    }

    let report = RunReport {
        command: command_echo(),
        rows: vec![row],
        wall_time_ms: ms(start.elapsed()),
    };
    match args.format {
        ReportFormat::Json => emit(&(report.to_json() + "\n"))?,
        ReportFormat::Text => {
            let row = &report.rows[0];
            let mut text = format!(
                "pair {} {}\n",
                row.label,
                row.realized.map(|t| t.to_string()).unwrap_or_default()
            );
            for (method, detail) in &row.verdicts {
                text += &format!("  {method:14} {detail}\n");
            }
            text += &format!(
                "{} in {:.1} ms\n",
                if row.ok { "verified" } else { "FALSIFIED" },
                report.wall_time_ms
            );
            emit(&text)?;
        }
    }
    Ok(if report.all_ok() {
        Outcome::Verified
    } else {
        Outcome::Falsified
    })
}

fn describe<W: std::fmt::Display>(v: &Verdict<W>) -> String {
    match v {
        Verdict::Holds => "holds".into(),
        Verdict::Fails(w) => format!("fails: {w}"),
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Construction failures are falsifications; anything else is an input
/// error.
fn falsified(e: &Error) -> bool {
    matches!(
        e,
        Error::ConstructionFailed(_) | Error::NotMultiplicative(_)
    )
}

fn cmd_identity(args: IdentityArgs) -> Result<Outcome> {
    let id = family::family_id(args.family.family, args.n, &args.family.params())?;
    let budget = SearchBudget::with_nodes(args.family.budget_nodes);
    let emitted = family::construct(id, &budget).and_then(|c| c.identity());
    let identity = match emitted {
        Ok(identity) => identity,
        Err(e) if falsified(&e) => {
            eprintln!("{id}: {e}; nothing emitted");
            return Ok(Outcome::Falsified);
        }
        Err(e) => return Err(e.into()),
    };
    let symbolic = verify_identity_symbolic_with_budget(&identity, args.symbolic_budget)?;
    let numeric = verify_identity_numeric(&identity, args.trials, args.seed)?;
    if !symbolic.holds() || !numeric.holds() {
        eprintln!("{id}: {}; nothing emitted", describe(&symbolic));
        return Ok(Outcome::Falsified);
    }
    let text = match args.format {
        IdentityFormat::Text => identity.to_text(),
        IdentityFormat::Latex => identity.to_latex(),
        IdentityFormat::Json => identity.to_json() + "\n",
    };
    write_out(args.out.as_deref(), &text)?;
    eprintln!("{id}: {} verified (symbolic, numeric)", identity.triple);
    Ok(Outcome::Verified)
}

fn cmd_triples(args: TriplesArgs) -> Result<Outcome> {
    let start = Instant::now();
    let range = family::parse_range(&args.n_range)?;
    let points = family::sweep(args.family.family, range, &args.family.params());
    if points.is_empty() {
        bail!(
            "no valid parameters for this family in --n-range {}",
            args.n_range
        );
    }
    let budget = SearchBudget::with_nodes(args.family.budget_nodes);
    let mut rows = Vec::new();
    for id in points {
        let mut row = Row::new(id.to_string());
        row.closed_form = closed_form_triple(id).ok().map(|t| t.triple);
        match family::construct(id, &budget) {
            Ok(c) => {
                row.realized = Some(c.triple);
                match row.closed_form {
                    Some(t) if t != c.triple => {
                        row.verdict("mismatch", false, format!("closed form {t}"))
                    }
                    Some(_) => {}
                    None => row.verdict("note", true, "no closed form"),
                }
            }
            Err(e) if falsified(&e) => row.verdict("construction", false, e.to_string()),
            Err(e) => return Err(e.into()),
        }
        rows.push(row);
    }
    let report = RunReport {
        command: command_echo(),
        rows,
        wall_time_ms: ms(start.elapsed()),
    };
    match args.format {
        ReportFormat::Json => emit(&(report.to_json() + "\n"))?,
        ReportFormat::Text => emit(&report.to_text())?,
    }
    Ok(if report.all_ok() {
        Outcome::Verified
    } else {
        Outcome::Falsified
    })
}

#[derive(Serialize)]
struct FoundPair<'a> {
    #[serde(rename = "A")]
    a: &'a ElementSet,
    #[serde(rename = "B")]
    b: &'a ElementSet,
    triple: Triple,
}

fn parse_target(s: &str) -> Result<Vec<usize>> {
    let parts: Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse::<usize>()).collect();
    match parts {
        Ok(v) if v.len() == 1 || v.len() == 3 => Ok(v),
        _ => bail!("--target must be r or r,s,N, got {s:?}"),
    }
}

fn cmd_search(args: SearchArgs) -> Result<Outcome> {
    let spec = parse_algebra(&args.algebra, args.n)?;
    let target = parse_target(&args.target)?;
    let budget = SearchBudget {
        max_nodes: args.budget_nodes,
        time_limit: args
            .time_limit
            .map(Duration::try_from_secs_f64)
            .transpose()?,
        deterministic: !args.shuffle,
        seed: args.seed,
    };
    let outcome = match target[..] {
        [r] => match search_clique(&spec, r, &budget)? {
            SearchOutcome::Found(h) => SearchOutcome::Found((h, ElementSet::full(args.n)?)),
            SearchOutcome::Exhausted => SearchOutcome::Exhausted,
            SearchOutcome::BudgetExceeded { nodes } => SearchOutcome::BudgetExceeded { nodes },
        },
        [r, s, total] => search_pair_exhaustive(&spec, r, s, total, &budget)?,
        _ => unreachable!("target length checked"),
    };
    match outcome {
        SearchOutcome::Found((a, b)) => {
            let triple = Triple(a.len(), b.len(), a.sumset(&b)?.len());
            let found = FoundPair {
                a: &a,
                b: &b,
                triple,
            };
            emit(&(serde_json::to_string(&found)? + "\n"))?;
            if let Some(p) = &args.out_a {
                write_out(Some(p), &(a.to_json() + "\n"))?;
            }
            if let Some(p) = &args.out_b {
                write_out(Some(p), &(b.to_json() + "\n"))?;
            }
            Ok(Outcome::Verified)
        }
        SearchOutcome::Exhausted => {
            eprintln!("no such set exists: the search space was exhausted");
            Ok(Outcome::Falsified)
        }
        SearchOutcome::BudgetExceeded { nodes } => {
            eprintln!("inconclusive: budget exhausted after {nodes} nodes");
            Ok(Outcome::Falsified)
        }
    }
}
