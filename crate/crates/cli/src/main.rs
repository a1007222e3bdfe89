mod corpus_spec;
mod suites;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use toplat::caps::HARD_MAX_ORDER;
use toplat::corpus::Entry;
use toplat::group::parse_group;
use toplat::settop::MAX_LATTICE_POINTS;
use toplat::topology::{analyze_lattice, TopologyLattice};
use toplat::{Caps, Error};

use corpus_spec::{Corpus, CorpusSpec};
use suites::{Suite, SuiteSummary};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

/// Group topologies on finite groups: lattice analysis and exhaustive
/// verification suites.
#[derive(Parser)]
#[command(name = "toplat", version)]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Accepted for scripts; every run is deterministic.
    #[arg(long, global = true)]
    seed_less: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Builds the lattice of group topologies of one group and reports its
    /// properties.
    Analyze {
        /// Group in notation such as "Z 6", "Z^k 2 3", "D 4", "Q8",
        /// "Heis 3", "S 4" or "Z 3 x Q8".
        #[arg(long)]
        group: String,
        /// Writes the Hasse diagram as Graphviz DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Writes the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Largest group order to enumerate.
        #[arg(long, env = "TOPLAT_MAX_ORDER", value_parser = clap::value_parser!(u64).range(1..=HARD_MAX_ORDER as u64))]
        max_order: Option<u64>,
    },
    /// Runs one verification suite over a corpus.
    Verify {
        suite: Suite,
        /// Largest corpus order (default depends on the suite).
        #[arg(long, env = "TOPLAT_MAX_ORDER", value_parser = clap::value_parser!(u64).range(1..=HARD_MAX_ORDER as u64))]
        max_order: Option<u64>,
        /// Corpus file replacing the standard corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Number of points for toplattice-classical.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(0..=MAX_LATTICE_POINTS as u64))]
        n: u64,
        /// Writes the summary as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Runs every suite listed in a corpus file over its groups.
    Run {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, env = "TOPLAT_MAX_ORDER", value_parser = clap::value_parser!(u64).range(1..=HARD_MAX_ORDER as u64))]
        max_order: Option<u64>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn exit_for(e: &Error) -> u8 {
    if e.is_resource_limit() {
        EXIT_LIMIT
    } else {
        EXIT_USAGE
    }
}

fn write_json<T: Serialize>(value: &T, path: Option<&Path>) -> toplat::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match path {
        Some(p) => std::fs::write(p, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

/// Enumeration cap large enough for every entry, at least the default.
fn caps_for(entries: &[Entry], base: Option<Caps>, max_order: Option<usize>) -> Caps {
    let base = base.unwrap_or_default();
    let largest = entries.iter().map(Entry::order).max().unwrap_or(0);
    let wanted = max_order
        .unwrap_or(0)
        .max(largest)
        .max(base.enumeration_order);
    base.with_enumeration_order(wanted.min(HARD_MAX_ORDER))
}

fn analyze_cmd(
    group: &str,
    dot: Option<&Path>,
    json: Option<&Path>,
    max_order: Option<usize>,
) -> toplat::Result<bool> {
    let g = parse_group(group)?;
    let mut caps = Caps::default();
    if let Some(m) = max_order {
        caps = caps.with_enumeration_order(m);
    }
    let l = TopologyLattice::new(&g, &caps)?;
    let report = analyze_lattice(&l).with_group(group);
    if let Some(p) = dot {
        std::fs::write(p, l.to_dot("L_G"))?;
    }
    write_json(&report, json)?;
    if json.is_some() {
        println!(
            "{group}: {} topologies, height {}, modular={}, semimodular={}",
            report.topologies, report.height, report.modular, report.semimodular
        );
    }
    for v in &report.violations {
        eprintln!("violation: {v}");
    }
    Ok(report.passed())
}

fn print_failures(s: &SuiteSummary) {
    for f in &s.failures {
        eprintln!("FAIL [{}] {f}", s.suite);
    }
}

fn verify_cmd(
    suite: Suite,
    max_order: Option<usize>,
    corpus: Option<&Path>,
    n: usize,
    json: Option<&Path>,
) -> toplat::Result<bool> {
    let (entries, base) = match corpus {
        Some(p) => {
            let Corpus { entries, caps, .. } = CorpusSpec::load(p)?;
            let limit = max_order.unwrap_or(usize::MAX);
            (
                entries.into_iter().filter(|e| e.order() <= limit).collect(),
                caps,
            )
        }
        None => (
            suite.default_corpus(max_order.unwrap_or(suite.default_max_order()))?,
            None,
        ),
    };
    let caps = caps_for(&entries, base, max_order);
    let summary = suite.run(&entries, &caps, n)?;
    write_json(&summary, json)?;
    if json.is_some() {
        println!(
            "{}: {} over {} groups, {} cases",
            summary.suite,
            if summary.passed { "pass" } else { "FAIL" },
            summary.groups,
            summary.cases
        );
    }
    print_failures(&summary);
    Ok(summary.passed)
}

fn run_cmd(corpus: &Path, max_order: Option<usize>, json: Option<&Path>) -> toplat::Result<bool> {
    let Corpus {
        entries,
        suites,
        caps,
    } = CorpusSpec::load(corpus)?;
    if suites.is_empty() {
        return Err(Error::InvalidArgument("corpus file lists no suites".into()));
    }
    let limit = max_order.unwrap_or(usize::MAX);
    let entries: Vec<Entry> = entries.into_iter().filter(|e| e.order() <= limit).collect();
    let caps = caps_for(&entries, caps, max_order);
    let mut summaries = Vec::new();
    for suite in suites {
        let s = suite.run(&entries, &caps, 3)?;
        print_failures(&s);
        summaries.push(s);
    }
    let passed = summaries.iter().all(|s| s.passed);
    write_json(&json!({ "passed": passed, "suites": summaries }), json)?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let to_usize = |m: Option<u64>| m.map(|m| m as usize);
    let outcome = match &cli.command {
        Command::Analyze {
            group,
            dot,
            json,
            max_order,
        } => analyze_cmd(group, dot.as_deref(), json.as_deref(), to_usize(*max_order)),
        Command::Verify {
            suite,
            max_order,
            corpus,
            n,
            json,
        } => verify_cmd(
            *suite,
            to_usize(*max_order),
            corpus.as_deref(),
            *n as usize,
            json.as_deref(),
        ),
        Command::Run {
            corpus,
            max_order,
            json,
        } => run_cmd(corpus, to_usize(*max_order), json.as_deref()),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}
