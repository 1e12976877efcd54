//! The `degseq` command line. Results go to stdout (or `--out`) as JSON,
//! progress goes to stderr. Exit status: 0 for graphic / yes / pass, 1 for
//! not graphic / no / fail, 2 for invalid input or any other error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degseq_core::extremal::{build_witness, sigma_formula, tree_class_sum, BruteConfig, SigmaMethod, SigmaQuery};
use degseq_core::graph::{all_realizations, realization_exists_backtracking, realize, CanonicalMode};
use degseq_core::potential::{decide, is_potentially};
use degseq_core::sequence::{enumerate_graphic_sequences, is_graphic_eg, is_graphic_layoff};
use degseq_core::{Answer, Family, SimpleGraph, DEFAULT_REALIZATION_LIMIT};
use serde_json::{json, Value};

use crate::cache::ResultsCache;
use crate::io::{parse_families, parse_sequence, resolve_pattern, write_edge_list};
use crate::parallel::{pool, sigma_brute_parallel};
use crate::verify::{self, Suite, VerifyOptions};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "degseq",
    version,
    about = "Degree sequences: graphicality, realizations, potentially K_m - H graphic decisions and extremal sums"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a sequence is graphic.
    CheckGraphic {
        #[arg(long)]
        seq: String,
        #[arg(long, value_enum, default_value_t = GraphicMethod::Eg)]
        method: GraphicMethod,
    },
    /// Build one realization, or every labeled realization with --all.
    Realize {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        search: SearchArgs,
        /// Also write the realization as an edge list.
        #[arg(long)]
        edges_out: Option<PathBuf>,
    },
    /// Decide whether some realization contains K_m - H.
    Potential {
        #[arg(long)]
        seq: String,
        /// K:<m>-<family>, family one of P2, T3path, T3star, C<k>, K3, P<k>, file:<path>.
        #[arg(long)]
        pattern: String,
        /// `search` always walks realizations; `fast` first tries the sufficient conditions.
        #[arg(long, value_enum, default_value_t = PotentialMethod::Search)]
        method: PotentialMethod,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// σ(K_{r+1} - H, n) from the closed form or by exhaustion.
    Sigma {
        #[arg(long, value_enum, default_value_t = SigmaMode::Formula)]
        method: SigmaMode,
        #[arg(long)]
        family: Family,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        cache: CacheArgs,
        /// Largest n accepted by the brute-force method.
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
    /// The extremal witness K_{r-2} + complement of K_{n-r+2}.
    Witness {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edges_out: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest sequence length (suite default when omitted).
        #[arg(long, alias = "max-n")]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Comma-separated families, e.g. T3path,T3star,C4.
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// List the graphic sequences of length n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        min_sigma: Option<usize>,
        #[arg(long)]
        max_sigma: Option<usize>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Largest number of labeled realizations visited per decision.
    #[arg(long, default_value_t = DEFAULT_REALIZATION_LIMIT)]
    pub limit: usize,
    /// Worker threads (default: one per core).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct CacheArgs {
    #[arg(long, env = "DEGSEQ_CACHE_DIR", default_value = ".degseq-cache")]
    pub cache_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphicMethod {
    Eg,
    Layoff,
    Backtrack,
    /// All three; reports whether they agree.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialMethod {
    Search,
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SigmaMode {
    Formula,
    Brute,
}

/// JSON to print and whether the answer was positive.
pub struct Outcome {
    pub json: Value,
    pub positive: bool,
}

fn positive(json: Value) -> Outcome {
    Outcome { json, positive: true }
}

fn edges_json(g: &SimpleGraph) -> Value {
    json!(g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>())
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

pub fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::CheckGraphic { seq, method } => {
            let s = parse_sequence(&seq)?;
            let (graphic, agree) = match method {
                GraphicMethod::Eg => (is_graphic_eg(&s)?, None),
                GraphicMethod::Layoff => (is_graphic_layoff(&s)?, None),
                GraphicMethod::Backtrack => (realization_exists_backtracking(&s)?, None),
                GraphicMethod::All => {
                    let eg = is_graphic_eg(&s)?;
                    let ok = eg == is_graphic_layoff(&s)? && eg == realization_exists_backtracking(&s)?;
                    (eg, Some(ok))
                }
            };
            let mut out = json!({ "sequence": s, "graphic": graphic, "method": method_name(method) });
            if let Some(a) = agree {
                out["agree"] = json!(a);
            }
            Ok(Outcome { json: out, positive: graphic && agree != Some(false) })
        }
        Command::Realize { seq, all, search, edges_out } => {
            let s = parse_sequence(&seq)?;
            let Some(g) = realize(&s)? else {
                return Ok(Outcome { json: json!({ "sequence": s, "graphic": false }), positive: false });
            };
            if let Some(path) = edges_out {
                write_edge_list(&path, &g)?;
            }
            let mut out = json!({ "sequence": s, "graphic": true, "n": g.n(), "edges": edges_json(&g) });
            if all {
                let set = pool(search.jobs)?.install(|| all_realizations(&s, search.limit))?;
                let mut classes: Vec<_> =
                    set.graphs.iter().map(|h| h.canonical_form(CanonicalMode::Unlabeled)).collect();
                classes.sort_by(|a, b| a.certificate.cmp(&b.certificate));
                classes.dedup();
                out["realizations"] = json!(set.graphs.iter().map(edges_json).collect::<Vec<_>>());
                out["labeledCount"] = json!(set.graphs.len());
                out["isomorphismClasses"] = json!(classes.len());
                out["truncated"] = json!(set.truncated);
            }
            Ok(positive(out))
        }
        Command::Potential { seq, pattern, method, search } => {
            let s = parse_sequence(&seq)?;
            let p = resolve_pattern(&pattern)?;
            let d = match method {
                PotentialMethod::Search => is_potentially(&s, &p, search.limit)?,
                PotentialMethod::Fast => decide(&s, &p, search.limit)?,
            };
            let witness = d
                .witness
                .as_ref()
                .map(|w| json!({ "n": w.graph.n(), "edges": edges_json(&w.graph), "embedding": w.embedding }));
            let out = json!({
                "sequence": s,
                "pattern": p.label(),
                "potentially": d.value(),
                "answer": d.answer,
                "method": d.method,
                "witness": witness,
                "explored": d.stats.explored,
                "truncated": d.stats.truncated,
            });
            Ok(Outcome { json: out, positive: d.answer == Answer::Yes })
        }
        Command::Sigma { method, family, r, n, search, cache, max_n } => {
            let res = match method {
                SigmaMode::Formula => {
                    let start = Instant::now();
                    let mut res = sigma_formula(&family, r, n)?;
                    res.elapsed_ms = start.elapsed().as_millis() as u64;
                    res
                }
                SigmaMode::Brute => {
                    let cache = ResultsCache::new(cache.cache_dir);
                    let query = SigmaQuery { family: family.clone(), r, n, method: SigmaMethod::Brute };
                    match cache.lookup(&query)? {
                        Some(hit) => {
                            log::info!("reusing {}", cache.path_for(&query).display());
                            hit
                        }
                        None => {
                            let config = BruteConfig { limit: search.limit, max_n };
                            let res = pool(search.jobs)?.install(|| sigma_brute_parallel(&family, r, n, config))?;
                            cache.store(&res)?;
                            res
                        }
                    }
                }
            };
            Ok(positive(to_json(&res)))
        }
        Command::Witness { r, n, edges_out } => {
            let (g, s) = build_witness(r, n)?;
            if let Some(path) = edges_out {
                write_edge_list(&path, &g)?;
            }
            Ok(positive(json!({
                "r": r,
                "n": n,
                "sequence": s,
                "sigma": s.sigma(),
                "bound": tree_class_sum(r, n),
                "edges": edges_json(&g),
            })))
        }
        Command::Verify { suite, n, r, family, search, cache } => {
            let opts = VerifyOptions {
                max_n: n,
                r,
                families: family.as_deref().map(parse_families).transpose()?,
                limit: search.limit,
                cache: Some(ResultsCache::new(cache.cache_dir)),
            };
            let reports = pool(search.jobs)?.install(|| verify::run(suite, &opts))?;
            let pass = reports.iter().all(|r| r.passed());
            let json = match reports.as_slice() {
                [one] => to_json(one),
                many => to_json(&many),
            };
            Ok(Outcome { json, positive: pass })
        }
        Command::Enumerate { n, min_sigma, max_sigma } => {
            let seqs: Vec<_> =
                enumerate_graphic_sequences(n, min_sigma.unwrap_or(0), max_sigma.unwrap_or(n * n.saturating_sub(1)))?
                    .collect();
            Ok(positive(json!({ "n": n, "count": seqs.len(), "sequences": seqs })))
        }
    }
}

fn method_name(m: GraphicMethod) -> &'static str {
    match m {
        GraphicMethod::Eg => "eg",
        GraphicMethod::Layoff => "layoff",
        GraphicMethod::Backtrack => "backtrack",
        GraphicMethod::All => "all",
    }
}

fn emit(json: &Value, out: Option<&PathBuf>) -> Result<()> {
    let text = serde_json::to_string_pretty(json).expect("json values print");
    match out {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| Error::io(path, e)),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

pub fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().filter_or("DEGSEQ_LOG", "info"))
        .format_timestamp(None)
        .format_target(false)
        .init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli.command).and_then(|o| emit(&o.json, cli.out.as_ref()).map(|()| o.positive)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
