//! Instance loading, solver/oracle invocation and the JSON result document
//! behind the `dcut` binary.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use dcut_core::decomposition::{construct, parse, serialize};
use dcut_core::dp::DpStats;
use dcut_core::generate::GeneratorSpec;
use dcut_core::io::parse_graph;
use dcut_core::oracle::ORACLE_LIMIT;
use dcut_core::{
    brute_force_min_dcut, solve, Bipartition, DpOptions, FamilyMode, Graph, Method, MinBetaMode, SolveOptions,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    /// Decomposition plus table dynamic program.
    Fpt,
    /// Exhaustive search over all bipartitions.
    Brute,
    /// Run both and fail on disagreement.
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Generated { spec: GeneratorSpec, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub source: Source,
    pub k: usize,
    pub d: usize,
    pub algorithm: Algorithm,
    pub min_beta: MinBetaMode,
    pub family_seed: Option<u64>,
    pub family_rounds: Option<usize>,
    pub td_in: Option<PathBuf>,
    pub td_out: Option<PathBuf>,
    pub witness: bool,
    pub timings: bool,
}

impl RunConfig {
    pub fn new(source: Source, k: usize, d: usize) -> RunConfig {
        RunConfig {
            source,
            k,
            d,
            algorithm: Algorithm::Fpt,
            min_beta: MinBetaMode::Auto,
            family_seed: None,
            family_rounds: None,
            td_in: None,
            td_out: None,
            witness: false,
            timings: false,
        }
    }

    fn family(&self) -> FamilyMode {
        match (self.family_seed, self.family_rounds) {
            (None, None) => FamilyMode::Exhaustive,
            (seed, rounds) => FamilyMode::Randomized { seed: seed.unwrap_or(0), rounds },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

impl From<bool> for Answer {
    fn from(b: bool) -> Answer {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceInfo {
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub vertices: usize,
    pub edges: usize,
}

/// Witness sides with 1-indexed vertices, as in the input file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl From<&Bipartition> for WitnessDoc {
    fn from(p: &Bipartition) -> WitnessDoc {
        WitnessDoc {
            side_a: p.side_a.iter().map(|v| v + 1).collect(),
            side_b: p.side_b.iter().map(|v| v + 1).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionStats {
    pub nodes: usize,
    pub max_bag: usize,
    pub max_adhesion: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FptDoc {
    pub answer: Answer,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cut_size: Option<usize>,
    /// Root entry of the table, `None` for ∞ or when the tables were not
    /// needed.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub root_value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub decomposition: Option<DecompositionStats>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tables: Option<DpStats>,
    pub min_beta: MinBetaMode,
    pub family: FamilyMode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteDoc {
    pub answer: Answer,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub min_dcut_size: Option<usize>,
    pub optimal_count: usize,
}

/// Wall-clock milliseconds per phase.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub decomposition_ms: f64,
    pub dp_ms: f64,
    pub witness_ms: f64,
    pub fpt_total_ms: f64,
    pub brute_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub instance: InstanceInfo,
    pub k: usize,
    pub d: usize,
    pub algorithm: Algorithm,
    pub answer: Answer,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cut_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessDoc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fpt: Option<FptDoc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub brute: Option<BruteDoc>,
    /// Set in `both` mode.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Timings>,
}

impl ResultDocument {
    pub fn disagreement(&self) -> bool {
        self.agree == Some(false)
    }
}

pub fn load(source: &Source) -> Result<(Graph, InstanceInfo)> {
    let (g, name, seed) = match source {
        Source::File(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let g = parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
            (g, path.display().to_string(), None)
        }
        Source::Generated { spec, seed } => (spec.generate(*seed)?, spec.to_string(), Some(*seed)),
    };
    let info = InstanceInfo { source: name, seed, vertices: g.vertex_count(), edges: g.edge_count() };
    Ok((g, info))
}

fn millis(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn run(config: &RunConfig) -> Result<ResultDocument> {
    if config.d == 0 {
        bail!("--d must be at least 1");
    }
    let (g, instance) = load(&config.source)?;
    if config.algorithm != Algorithm::Fpt && g.vertex_count() > ORACLE_LIMIT {
        bail!("the brute-force oracle handles at most {ORACLE_LIMIT} vertices, this graph has {}", g.vertex_count());
    }
    let mut timings = Timings { decomposition_ms: 0.0, dp_ms: 0.0, witness_ms: 0.0, fpt_total_ms: 0.0, brute_ms: 0.0 };

    let mut fpt = None;
    let mut fpt_witness = None;
    if config.algorithm != Algorithm::Brute {
        let mut opts = SolveOptions {
            dp: DpOptions { min_beta: config.min_beta, family: config.family(), ..DpOptions::default() },
            ..SolveOptions::default()
        };
        if let Some(path) = &config.td_in {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            opts.decomposition = Some(parse(&text).with_context(|| format!("parsing {}", path.display()))?);
        }
        let started = Instant::now();
        let out = solve(&g, config.k, config.d, &opts)?;
        timings.fpt_total_ms = millis(started.elapsed());
        timings.decomposition_ms = millis(out.timings.decomposition);
        timings.dp_ms = millis(out.timings.dp);
        timings.witness_ms = millis(out.timings.witness);
        if let Some(path) = &config.td_out {
            let td = match &out.decomposition {
                Some(td) => td.clone(),
                None => construct(&g, config.k)?,
            };
            fs::write(path, serialize(&td)).with_context(|| format!("writing {}", path.display()))?;
        }
        fpt = Some(FptDoc {
            answer: out.answer.into(),
            method: out.method,
            cut_size: out.cut_size,
            root_value: out.root_value.and_then(|c| c.value()),
            decomposition: out.decomposition.as_ref().map(|td| DecompositionStats {
                nodes: td.node_count(),
                max_bag: td.max_bag_size(),
                max_adhesion: td.max_adhesion(),
            }),
            tables: out.dp_stats.clone(),
            min_beta: config.min_beta,
            family: config.family(),
        });
        fpt_witness = out.witness;
    }

    let mut brute = None;
    let mut brute_witness = None;
    if config.algorithm != Algorithm::Fpt {
        let started = Instant::now();
        let result = brute_force_min_dcut(&g, config.d)?;
        timings.brute_ms = millis(started.elapsed());
        let yes = result.min_dcut_size.is_some_and(|m| m <= config.k);
        brute = Some(BruteDoc {
            answer: yes.into(),
            min_dcut_size: result.min_dcut_size,
            optimal_count: result.optimal_count,
        });
        if yes {
            brute_witness = result.best_cut;
        }
    }

    let (answer, cut_size, witness) = match (&fpt, &brute) {
        (Some(f), _) => (f.answer, f.cut_size, fpt_witness),
        (None, Some(b)) => (b.answer, b.min_dcut_size.filter(|_| b.answer == Answer::Yes), brute_witness),
        (None, None) => unreachable!("some algorithm always runs"),
    };
    let agree = match (&fpt, &brute) {
        (Some(f), Some(b)) => Some(f.answer == b.answer),
        _ => None,
    };
    Ok(ResultDocument {
        instance,
        k: config.k,
        d: config.d,
        algorithm: config.algorithm,
        answer,
        cut_size,
        witness: witness.as_ref().filter(|_| config.witness).map(WitnessDoc::from),
        fpt,
        brute,
        agree,
        timings: config.timings.then_some(timings),
    })
}

/// Outcome of a differential run over a random corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub graphs: usize,
    pub seed: u64,
    pub runs: usize,
    pub yes: usize,
    pub disagreements: Vec<CorpusDisagreement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusDisagreement {
    pub graph: usize,
    pub k: usize,
    pub d: usize,
    pub fpt: Answer,
    pub brute: Answer,
}

/// Solves every graph of `random_corpus(count, seed)` for all `k <= k_max`
/// and `d <= d_max` with both algorithms.
pub fn run_corpus(count: usize, seed: u64, k_max: usize, d_max: usize, dp: &DpOptions) -> Result<CorpusSummary> {
    let corpus = dcut_core::generate::random_corpus(count, seed);
    let mut summary = CorpusSummary { graphs: count, seed, runs: 0, yes: 0, disagreements: Vec::new() };
    let opts = SolveOptions { dp: dp.clone(), ..SolveOptions::default() };
    for (i, g) in corpus.iter().enumerate() {
        for d in 1..=d_max {
            let oracle = brute_force_min_dcut(g, d)?;
            for k in 0..=k_max {
                let fpt = solve(g, k, d, &opts)?.answer;
                let brute = oracle.min_dcut_size.is_some_and(|m| m <= k);
                summary.runs += 1;
                summary.yes += usize::from(fpt);
                if fpt != brute {
                    summary.disagreements.push(CorpusDisagreement {
                        graph: i,
                        k,
                        d,
                        fpt: fpt.into(),
                        brute: brute.into(),
                    });
                }
            }
        }
    }
    Ok(summary)
}
