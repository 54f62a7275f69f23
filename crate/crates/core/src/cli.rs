//! The `folding` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error, 3 a graph with
//! folding number different from chromatic number, 4 solver error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::canon::canonical_key;
use crate::chromatic::chromatic_number;
use crate::colouring::Colouring;
use crate::error::Error;
use crate::families::{connected_classes_up_to, generate, FamilySpec, ENUMERATION_MAX_ORDER};
use crate::folding::{extract_colouring, run_policy, FoldingRun, Policy};
use crate::graph::Multigraph;
use crate::io::report::{write_report, PolicyResult, Report, ReportFormat, ReportRow};
use crate::io::{read_graph, FormatError};
use crate::search::{
    folding_number, hadwiger_number, max_complete_folding, verify_theorem, SearchResult,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_FALSIFIED: i32 = 3;
pub const EXIT_SOLVER: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "folding", version, about = "Graph folding and colouring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact chromatic number with a witness colouring.
    Chi { input: PathBuf },
    /// Fold until complete with a pair-selection policy.
    Fold {
        input: PathBuf,
        #[arg(long, value_enum)]
        policy: PolicyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Folding number with a replayable certificate.
    Foldnum { input: PathBuf },
    /// Largest complete folding with a replayable certificate.
    Maxfold { input: PathBuf },
    /// Hadwiger number with branch sets.
    Hadwiger { input: PathBuf },
    /// Compare folding number and chromatic number on every connected graph
    /// up to the given order.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Seed for the random policy column.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run solvers and policies over a graph family.
    Bench {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Inclusive order range, `A..B` or `A..=B`, or a single order.
        #[arg(long, value_parser = parse_range)]
        range: (usize, usize),
        #[arg(long, value_enum, value_delimiter = ',', default_value = "max-common,lex,random")]
        policies: Vec<PolicyArg>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Edge probability for `gnp`.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Largest order for which the exact folding number is computed.
        #[arg(long, default_value_t = 12)]
        exact_max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    MaxCommon,
    Lex,
    Random,
}

impl PolicyArg {
    fn with_seed(self, seed: u64) -> Policy {
        match self {
            PolicyArg::MaxCommon => Policy::MaxCommonNeighbours,
            PolicyArg::Lex => Policy::LexFirst,
            PolicyArg::Random => Policy::Random { seed },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Cycle,
    Path,
    Complete,
    CompleteBipartite,
    Wheel,
    Fan,
    Petersen,
    /// Mycielskian of the cycle of the given length.
    Mycielski,
    Gnp,
}

impl FamilyArg {
    fn spec(self, n: usize, p: f64, seed: u64) -> FamilySpec {
        match self {
            FamilyArg::Cycle => FamilySpec::Cycle(n),
            FamilyArg::Path => FamilySpec::Path(n),
            FamilyArg::Complete => FamilySpec::Complete(n),
            FamilyArg::CompleteBipartite => FamilySpec::CompleteBipartite(n / 2, n - n / 2),
            FamilyArg::Wheel => FamilySpec::Wheel(n),
            FamilyArg::Fan => FamilySpec::Fan(n),
            FamilyArg::Petersen => FamilySpec::Petersen,
            FamilyArg::Mycielski => FamilySpec::MycielskiOf(Box::new(FamilySpec::Cycle(n))),
            FamilyArg::Gnp => FamilySpec::Gnp { n, p, seed },
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid range bound `{t}`"))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let a = parse(s)?;
            (a, a)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

enum Failure {
    Usage(String),
    Input(String),
    Solver(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Solver(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// process exit code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let command_line = args
        .iter()
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                EXIT_OK
            } else {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            };
        }
    };
    match dispatch(cli.command, &command_line, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_INPUT
        }
        Err(Failure::Solver(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_SOLVER
        }
    }
}

fn dispatch(
    command: Command,
    command_line: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    match command {
        Command::Chi { input } => {
            let g = read_graph(&input)?;
            let r = chromatic_number(&g);
            writeln!(out, "chi = {}", r.chi)?;
            writeln!(out, "colouring: {}", format_colouring(&r.witness))?;
            writeln!(out, "nodes explored: {}", r.nodes_explored)?;
        }
        Command::Fold {
            input,
            policy,
            seed,
        } => {
            let g = read_graph(&input)?;
            let policy = policy.with_seed(seed);
            let run = run_policy(&g, policy)?;
            let colouring = extract_colouring(&run)?;
            writeln!(out, "policy: {policy}")?;
            write_steps(out, &run)?;
            writeln!(out, "final order: {}", run.final_graph().order())?;
            writeln!(out, "colours: {}", colouring.num_colours())?;
            writeln!(out, "colouring: {}", format_colouring(&colouring))?;
        }
        Command::Foldnum { input } => {
            let g = read_graph(&input)?;
            print_folding_search(out, "f", &folding_number(&g)?)?;
        }
        Command::Maxfold { input } => {
            let g = read_graph(&input)?;
            print_folding_search(out, "max complete folding", &max_complete_folding(&g)?)?;
        }
        Command::Hadwiger { input } => {
            let g = read_graph(&input)?;
            let r = hadwiger_number(&g)?;
            writeln!(out, "hadwiger = {}", r.value)?;
            let model = r.certificate.as_minor().expect("minor certificate");
            for (i, block) in model.blocks().iter().enumerate() {
                let ids: Vec<String> = block.iter().map(|v| v.to_string()).collect();
                writeln!(out, "block {i}: {}", ids.join(" "))?;
            }
        }
        Command::Verify {
            max_n,
            jobs,
            out: path,
            format,
            seed,
        } => {
            if !(1..=ENUMERATION_MAX_ORDER).contains(&max_n) {
                return Err(Failure::Usage(format!(
                    "--max-n must be in 1..={ENUMERATION_MAX_ORDER}"
                )));
            }
            let graphs = in_pool(jobs, || connected_classes_up_to(max_n))??;
            let rows = in_pool(jobs, || {
                graphs
                    .par_iter()
                    .enumerate()
                    .map(|(i, g)| verify_row(g, format!("connected#{i}"), seed))
                    .collect::<Result<Vec<_>, Error>>()
            })??;
            let mut report = Report::new(command_line, Some(seed));
            report.rows = rows;
            report.sort_rows();
            let falsified: Vec<&ReportRow> =
                report.rows.iter().filter(|r| r.equal == Some(false)).collect();
            let summary = if falsified.is_empty() {
                format!(
                    "verified {} connected graphs with n <= {max_n}: f = chi for all",
                    report.rows.len()
                )
            } else {
                format!(
                    "FALSIFIED on {} of {} graphs: {}",
                    falsified.len(),
                    report.rows.len(),
                    falsified
                        .iter()
                        .map(|r| r.graph_id.as_str())
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            };
            emit_report(&report, format.into(), path.as_deref(), &summary, out, err)?;
            if !falsified.is_empty() {
                return Ok(EXIT_FALSIFIED);
            }
        }
        Command::Bench {
            family,
            range,
            policies,
            seed,
            out: path,
            format,
            p,
            exact_max_n,
            jobs,
        } => {
            let orders: Vec<usize> = if family == FamilyArg::Petersen {
                vec![10]
            } else {
                (range.0..=range.1).collect()
            };
            let specs: Vec<FamilySpec> = orders.iter().map(|&n| family.spec(n, p, seed)).collect();
            let graphs = specs
                .iter()
                .map(|s| generate(s).map(|g| (s.to_string(), g)))
                .collect::<Result<Vec<_>, Error>>()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let policies: Vec<Policy> = policies.iter().map(|p| p.with_seed(seed)).collect();
            let rows = in_pool(jobs, || {
                graphs
                    .par_iter()
                    .map(|(source, g)| bench_row(g, source.clone(), &policies, exact_max_n))
                    .collect::<Result<Vec<_>, Error>>()
            })??;
            let mut report = Report::new(command_line, Some(seed));
            report.rows = rows;
            report.sort_rows();
            let falsified = report.rows.iter().any(|r| r.equal == Some(false));
            write_report(&report, format.into(), &path)?;
            writeln!(out, "wrote {} rows to {}", report.rows.len(), path.display())?;
            if falsified {
                writeln!(err, "FALSIFIED: some row has f != chi")?;
                return Ok(EXIT_FALSIFIED);
            }
        }
    }
    Ok(EXIT_OK)
}

fn in_pool<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, Failure> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Failure::Usage("--jobs must be positive".into())),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Failure::Solver(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn emit_report(
    report: &Report,
    format: ReportFormat,
    path: Option<&Path>,
    summary: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    match path {
        Some(path) => {
            write_report(report, format, path)?;
            writeln!(out, "{summary}")?;
        }
        None => {
            write!(out, "{}", report.render(format))?;
            writeln!(err, "{summary}")?;
        }
    }
    Ok(())
}

fn policy_results(g: &Multigraph, policies: &[Policy]) -> Result<Vec<PolicyResult>, Error> {
    policies
        .iter()
        .map(|&policy| {
            let run = run_policy(g, policy)?;
            let colouring = extract_colouring(&run)?;
            Ok(PolicyResult {
                policy: policy.name().to_string(),
                seed: policy.seed(),
                final_order: run.final_graph().order(),
                colours_used: colouring.num_colours(),
            })
        })
        .collect()
}

fn verify_row(g: &Multigraph, source: String, seed: u64) -> Result<ReportRow, Error> {
    let start = Instant::now();
    let t = verify_theorem(g)?;
    let policies = [
        Policy::MaxCommonNeighbours,
        Policy::LexFirst,
        Policy::Random { seed },
    ];
    Ok(ReportRow {
        graph_id: t.graph_id,
        source,
        n: t.n,
        m: t.m,
        chi: Some(t.chi),
        f: Some(t.f),
        equal: Some(t.equal),
        policy_results: policy_results(g, &policies)?,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

fn bench_row(
    g: &Multigraph,
    source: String,
    policies: &[Policy],
    exact_max_n: usize,
) -> Result<ReportRow, Error> {
    let start = Instant::now();
    let chi = chromatic_number(g).chi;
    let f = if g.order() <= exact_max_n {
        Some(folding_number(g)?.value)
    } else {
        None
    };
    Ok(ReportRow {
        graph_id: canonical_key(g).to_hex(),
        source,
        n: g.order(),
        m: g.edge_count(),
        chi: Some(chi),
        f,
        equal: f.map(|f| f == chi),
        policy_results: policy_results(g, policies)?,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

fn format_colouring(c: &Colouring) -> String {
    c.iter()
        .map(|(v, k)| format!("{v}:{k}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_steps(out: &mut dyn Write, run: &FoldingRun) -> std::io::Result<()> {
    for step in run.steps() {
        writeln!(out, "{step}")?;
    }
    Ok(())
}

fn print_folding_search(
    out: &mut dyn Write,
    name: &str,
    r: &SearchResult,
) -> std::io::Result<()> {
    let run = r.certificate.as_folding().expect("folding certificate");
    writeln!(out, "{name} = {}", r.value)?;
    write_steps(out, run)?;
    let blocks: Vec<String> = run
        .provenance()
        .iter()
        .map(|b| {
            let ids: Vec<String> = b.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", ids.join(","))
        })
        .collect();
    writeln!(out, "final order: {}", run.final_graph().order())?;
    writeln!(out, "blocks: {}", blocks.join(" "))?;
    writeln!(out, "states visited: {}, memo hits: {}", r.states_visited, r.memo_hits)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..12"), Ok((4, 12)));
        assert_eq!(parse_range("4..=12"), Ok((4, 12)));
        assert_eq!(parse_range("7"), Ok((7, 7)));
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn usage_errors() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(run(["folding", "frobnicate"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(run(["folding", "verify", "--max-n", "9"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(run(["folding", "--help"], &mut out, &mut err), EXIT_OK);
    }

    #[test]
    fn missing_input() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(["folding", "chi", "/nonexistent/graph.col"], &mut out, &mut err);
        assert_eq!(code, EXIT_INPUT);
        assert!(String::from_utf8(err).unwrap().contains("error"));
    }
}
