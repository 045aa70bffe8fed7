use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use dcut_cli::{load, run, run_corpus, Algorithm, Answer, ResultDocument, RunConfig, Source};
use dcut_core::decomposition::{construct, parse, serialize, verify};
use dcut_core::generate::GeneratorSpec;
use dcut_core::io::write_graph;
use dcut_core::{DpOptions, MinBetaMode};

#[derive(Parser)]
#[command(name = "dcut", version, about = "Decide whether a graph has a d-cut with at most k edges")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance.
    Solve(SolveArgs),
    /// Write a generated graph in DIMACS format.
    Generate {
        #[command(flatten)]
        input: GenArgs,
        /// Output file (stdout if omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a decomposition for `k` and write it in `.td` format.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a decomposition file against a graph; exits 1 on failure.
    VerifyTd {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        td: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Compare the solver with the oracle on a random corpus; exits 2 on any
    /// disagreement.
    Corpus {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        k_max: usize,
        #[arg(long, default_value_t = 2)]
        d_max: usize,
        #[arg(long, value_enum, default_value_t = MinBeta::Auto)]
        minbeta: MinBeta,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct GenArgs {
    /// Generator: gnm:N,M, gnm-free:N,M, grid:RxC or bridged:Q.
    #[arg(long = "gen")]
    spec: GeneratorSpec,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct InputArgs {
    /// DIMACS graph file.
    #[arg(required_unless_present = "spec", conflicts_with = "spec")]
    graph: Option<PathBuf>,
    /// Generate the graph instead: gnm:N,M, gnm-free:N,M, grid:RxC or
    /// bridged:Q.
    #[arg(long = "gen")]
    spec: Option<GeneratorSpec>,
    /// Generator seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl InputArgs {
    fn source(&self) -> Source {
        match (&self.graph, self.spec) {
            (Some(path), _) => Source::File(path.clone()),
            (None, Some(spec)) => Source::Generated { spec, seed: self.seed },
            (None, None) => unreachable!("clap requires one of them"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MinBeta {
    Auto,
    Enumerate,
    Colorcode,
}

impl From<MinBeta> for MinBetaMode {
    fn from(m: MinBeta) -> MinBetaMode {
        match m {
            MinBeta::Auto => MinBetaMode::Auto,
            MinBeta::Enumerate => MinBetaMode::Enumerate,
            MinBeta::Colorcode => MinBetaMode::ColorCode,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    d: usize,
    #[arg(long, value_enum, default_value_t = Algorithm::Fpt)]
    algorithm: Algorithm,
    #[arg(long, value_enum, default_value_t = MinBeta::Auto)]
    minbeta: MinBeta,
    /// Use randomized families seeded with this value instead of all subsets.
    #[arg(long)]
    family_seed: Option<u64>,
    /// Random rounds per bag (default depends on bag size and k).
    #[arg(long)]
    family_rounds: Option<usize>,
    /// Use this decomposition instead of building one.
    #[arg(long)]
    td_in: Option<PathBuf>,
    /// Write the decomposition used (or one built for k) here.
    #[arg(long)]
    td_out: Option<PathBuf>,
    /// Include the certified partition in the output.
    #[arg(long)]
    witness: bool,
    /// Include per-phase wall-clock times (makes output non-reproducible).
    #[arg(long)]
    timings: bool,
    /// Print the result document as JSON.
    #[arg(long)]
    json: bool,
}

fn render_text(doc: &ResultDocument) -> String {
    let mut out = String::new();
    let answer = match doc.answer {
        Answer::Yes => "yes",
        Answer::No => "no",
    };
    writeln!(
        out,
        "{} ({} vertices, {} edges), k = {}, d = {}: {answer}",
        doc.instance.source, doc.instance.vertices, doc.instance.edges, doc.k, doc.d
    )
    .unwrap();
    if let Some(size) = doc.cut_size {
        writeln!(out, "cut size: {size}").unwrap();
    }
    if let Some(w) = &doc.witness {
        writeln!(out, "side A: {:?}", w.side_a).unwrap();
        writeln!(out, "side B: {:?}", w.side_b).unwrap();
    }
    if let Some(f) = &doc.fpt {
        write!(out, "fpt: {:?} via {:?}", f.answer, f.method).unwrap();
        if let Some(td) = &f.decomposition {
            write!(out, ", {} nodes, max bag {}, max adhesion {}", td.nodes, td.max_bag, td.max_adhesion).unwrap();
        }
        out.push('\n');
    }
    if let Some(b) = &doc.brute {
        writeln!(out, "brute: {:?}, minimum d-cut {:?}", b.answer, b.min_dcut_size).unwrap();
    }
    if doc.disagreement() {
        writeln!(out, "DISAGREEMENT between fpt and brute").unwrap();
    }
    if let Some(t) = &doc.timings {
        writeln!(
            out,
            "time: decomposition {:.3} ms, dp {:.3} ms, witness {:.3} ms, brute {:.3} ms",
            t.decomposition_ms, t.dp_ms, t.witness_ms, t.brute_ms
        )
        .unwrap();
    }
    out
}

/// Writes to stdout, treating a closed pipe (e.g. `| head`) as success.
fn print_stdout(text: &str) -> Result<()> {
    let mut stdout = io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => print_stdout(text),
    }
}

fn main_inner() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Solve(args) => {
            let config = RunConfig {
                source: args.input.source(),
                k: args.k,
                d: args.d,
                algorithm: args.algorithm,
                min_beta: args.minbeta.into(),
                family_seed: args.family_seed,
                family_rounds: args.family_rounds,
                td_in: args.td_in,
                td_out: args.td_out,
                witness: args.witness,
                timings: args.timings,
            };
            let doc = run(&config)?;
            if args.json {
                print_stdout(&format!("{}\n", serde_json::to_string(&doc)?))?;
            } else {
                print_stdout(&render_text(&doc))?;
            }
            Ok(if doc.disagreement() { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
        Command::Generate { input, output } => {
            let g = input.spec.generate(input.seed)?;
            emit(&write_graph(&g), output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { input, k, output } => {
            let (g, _) = load(&input.source())?;
            let td = construct(&g, k)?;
            emit(&serialize(&td), output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyTd { input, td, k } => {
            let (g, _) = load(&input.source())?;
            let text = fs::read_to_string(&td).with_context(|| format!("reading {}", td.display()))?;
            let td = parse(&text).with_context(|| format!("parsing {}", td.display()))?;
            if td.vertex_count() != g.vertex_count() {
                bail!("decomposition is over {} vertices, graph has {}", td.vertex_count(), g.vertex_count());
            }
            let report = verify(&g, &td, k);
            print_stdout(&format!("{}\n", serde_json::to_string_pretty(&report)?))?;
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Corpus { count, seed, k_max, d_max, minbeta, json } => {
            let dp = DpOptions { min_beta: minbeta.into(), ..DpOptions::default() };
            let summary = run_corpus(count, seed, k_max, d_max, &dp)?;
            if json {
                print_stdout(&format!("{}\n", serde_json::to_string(&summary)?))?;
            } else {
                let mut text = format!(
                    "{} graphs, {} runs, {} yes, {} disagreements\n",
                    summary.graphs,
                    summary.runs,
                    summary.yes,
                    summary.disagreements.len()
                );
                for d in &summary.disagreements {
                    text += &format!("  graph {} k={} d={}: fpt {:?}, brute {:?}\n", d.graph, d.k, d.d, d.fpt, d.brute);
                }
                print_stdout(&text)?;
            }
            Ok(if summary.disagreements.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
    }
}

fn main() -> ExitCode {
    match main_inner() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
