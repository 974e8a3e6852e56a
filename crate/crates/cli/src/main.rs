//! `gammagraphs` command-line tool.
//!
//! Exit status: 0 on success, 1 when `verify-fixtures` or `realize --verify`
//! finds a mismatch, 2 on usage or precondition errors, 3 when a search
//! budget runs out.

mod checks;
mod input;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use gammagraphs::classify::{classify, enumerate_connected_graphs, ClassifyOptions, Decision, Status};
use gammagraphs::labelling::{SearchBudget, SearchOutcomeDocument};
use gammagraphs::realizer::verify_realization;
use gammagraphs::{blocker, build_gamma_graph, decide_labellable, min_dominating_sets, realize, write_graph6, Graph};

#[derive(Parser)]
#[command(name = "gammagraphs", version, about = "Domination, gamma-graphs and Johnson-graph labellings of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance-d domination number and all minimum dominating sets.
    Gamma {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[command(flatten)]
        out: Output,
    },
    /// The graph of minimum distance-d dominating sets.
    Gammagraph {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Build a graph whose minimum distance-d dominating sets are the given sets.
    Realize {
        #[command(flatten)]
        sets: SetsInput,
        #[arg(long, default_value_t = 1)]
        d: u32,
        /// Recompute the minimum dominating sets of the result and compare.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Minimal transversals of a clutter.
    Blocker {
        #[command(flatten)]
        sets: SetsInput,
        #[command(flatten)]
        out: Output,
    },
    /// Search for a labelling by k-sets.
    Label {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        out: Output,
    },
    /// Classify connected graphs as labellable, minimally unlabellable or neither.
    Classify {
        /// Classify every connected graph with at most this many vertices (at most 7).
        #[arg(long, conflicts_with = "input")]
        max_n: Option<usize>,
        /// Smallest order when using --max-n.
        #[arg(long, default_value_t = 1, requires = "max_n")]
        min_n: usize,
        /// File of graph6 lines to classify instead.
        #[arg(long = "in", value_name = "FILE", required_unless_present = "max_n")]
        input: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
        /// Worker threads; the report does not depend on this.
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Print a member of a named family (e.g. wheel:9, fan:3,2, hypercube:3).
    Family {
        #[arg(long)]
        family: gammagraphs::Family,
        #[command(flatten)]
        out: Output,
    },
    /// Check the bundled reference graphs and a seeded random realization sample.
    VerifyFixtures {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Number of random families for the realization sample.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// A graph6 word.
    #[arg(long)]
    graph6: Option<String>,
    /// A file of graph6 lines.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// A named family member such as wheel:6.
    #[arg(long)]
    family: Option<gammagraphs::Family>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SetsInput {
    /// Comma-separated sets of single-digit symbols, e.g. 123,124.
    #[arg(long)]
    sets: Option<String>,
    /// JSON clutter {"n": .., "members": [[..], ..]}, a JSON list of sets, or one set per line.
    #[arg(long, value_name = "FILE")]
    sets_file: Option<PathBuf>,
}

#[derive(Args)]
struct Budget {
    /// Largest label size to try; defaults to max(2, n) for each graph.
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long, default_value_t = SearchBudget::DEFAULT_NODE_LIMIT)]
    node_limit: u64,
}

#[derive(Args)]
struct Output {
    /// Write the JSON document here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Budget,
    Check,
}

impl From<gammagraphs::Error> for Failure {
    fn from(e: gammagraphs::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn emit<T: Serialize>(out: &Output, doc: &T) -> Outcome {
    let mut text = serde_json::to_string_pretty(doc).map_err(|e| Failure::Usage(e.to_string()))?;
    text.push('\n');
    match &out.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Emits one document for a single graph and an array for several.
fn emit_each<T: Serialize>(out: &Output, docs: Vec<T>) -> Outcome {
    if docs.len() == 1 {
        emit(out, &docs[0])
    } else {
        emit(out, &docs)
    }
}

#[derive(Serialize)]
struct LabelDocument {
    graph6: Option<String>,
    k_bound: usize,
    #[serde(flatten)]
    outcome: SearchOutcomeDocument,
}

#[derive(Serialize)]
struct FamilyDocument {
    family: String,
    vertices: usize,
    edges: usize,
    graph6: Option<String>,
    names: Vec<String>,
}

fn budget_options(b: &Budget) -> ClassifyOptions {
    ClassifyOptions {
        k_max: b.k_max,
        node_limit: b.node_limit,
    }
}

fn label(graphs: &[Graph], budget: &Budget, out: &Output) -> Outcome {
    let options = budget_options(budget);
    let mut exhausted = false;
    let mut docs = Vec::with_capacity(graphs.len());
    for g in graphs {
        let b = options.budget_for(g);
        if b.k_max == 0 || b.node_limit == 0 {
            return Err(Failure::Usage("k_max and node_limit must be positive".into()));
        }
        let outcome = match decide_labellable(g, b)? {
            Decision::Labellable(l) => SearchOutcomeDocument::Found {
                labelling: l.to_document(g),
            },
            Decision::Unlabellable { k_bound } => SearchOutcomeDocument::AbsentUpToK { k_max: k_bound },
            Decision::Undecided { frontier, .. } => {
                exhausted = true;
                SearchOutcomeDocument::BudgetExhausted { k: frontier }
            }
        };
        docs.push(LabelDocument {
            graph6: write_graph6(g).ok(),
            k_bound: b.k_max,
            outcome,
        });
    }
    emit_each(out, docs)?;
    if exhausted {
        Err(Failure::Budget)
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gamma { graph, d, out } => {
            let graphs = input::graphs(&graph)?;
            let docs = graphs
                .iter()
                .map(|g| Ok(min_dominating_sets(g, d)?.to_document(g)))
                .collect::<Result<Vec<_>, Failure>>()?;
            emit_each(&out, docs)
        }
        Command::Gammagraph { graph, d, out } => {
            let graphs = input::graphs(&graph)?;
            let docs = graphs
                .iter()
                .map(|g| Ok(build_gamma_graph(g, d)?.to_document(g)))
                .collect::<Result<Vec<_>, Failure>>()?;
            emit_each(&out, docs)
        }
        Command::Realize { sets, d, verify, out } => {
            let family = input::clutter(&sets)?;
            let r = realize(&family, d)?;
            let mut doc = r.to_document(&family)?;
            if verify {
                let report = verify_realization(&r, &family)?;
                let ok = report.ok;
                doc.verification = Some(report);
                emit(&out, &doc)?;
                return if ok { Ok(()) } else { Err(Failure::Check) };
            }
            emit(&out, &doc)
        }
        Command::Blocker { sets, out } => {
            let family = input::clutter(&sets)?;
            emit(&out, &blocker(&family)?.to_document())
        }
        Command::Label { graph, budget, out } => label(&input::graphs(&graph)?, &budget, &out),
        Command::Classify {
            max_n,
            min_n,
            input,
            budget,
            jobs,
            out,
        } => {
            let graphs = match (max_n, input) {
                (Some(max), _) => {
                    if min_n == 0 || min_n > max {
                        return Err(Failure::Usage(format!("empty order range {min_n}..={max}")));
                    }
                    let mut all = Vec::new();
                    for n in min_n..=max {
                        all.extend(enumerate_connected_graphs(n)?);
                    }
                    all
                }
                (None, Some(path)) => input::graph6_file(&path)?,
                (None, None) => unreachable!("clap requires one input"),
            };
            if jobs == Some(0) {
                return Err(Failure::Usage("--jobs must be positive".into()));
            }
            let report = classify(&graphs, budget_options(&budget), jobs)?;
            emit(&out, &report.to_document()?)?;
            eprint!("{}", report.summary_table());
            if report.entries.iter().any(|e| e.verdict.status == Status::Undecided) {
                Err(Failure::Budget)
            } else {
                Ok(())
            }
        }
        Command::Family { family, out } => {
            let g = family.build()?;
            emit(
                &out,
                &FamilyDocument {
                    family: family.to_string(),
                    vertices: g.vertex_count(),
                    edges: g.edge_count(),
                    graph6: write_graph6(&g).ok(),
                    names: g.names().to_vec(),
                },
            )
        }
        Command::VerifyFixtures { seed, samples } => {
            if checks::run(seed, samples) {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget) => {
            eprintln!("error: search budget exhausted; results are incomplete");
            ExitCode::from(3)
        }
        Err(Failure::Check) => ExitCode::from(1),
    }
}
