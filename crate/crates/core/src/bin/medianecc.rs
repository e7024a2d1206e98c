use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use medianecc::error::{Error, Result};
use medianecc::graph::{parse_edge_list, verify_median, Loaded, DEFAULT_CAP};
use medianecc::harness::{self, Caps, GenSpec};
use medianecc::labels::{compute_labels, Backend};
use medianecc::pof::{build_pof_index, pof_stats};
use medianecc::reach::{compute_reach, reach_bfs, reach_oracle};
use medianecc::theta::{compute_theta, dimension, orient};
use medianecc::wopp::{simplex_central_vertex, solve_wopp, Family};

#[derive(Parser)]
#[command(name = "medianecc", version, about = "Exact eccentricities and reach centrality on median graphs")]
struct Cli {
    /// JSON instead of the edge list (`gen`) or CSV (`bench`)
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Io {
    /// Edge-list file; stdin when omitted
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Output file; stdout when omitted
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an instance, e.g. `grid:4x5` or `hypercube:3*tree:5`
    Gen {
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Θ-class summary
    Theta {
        #[command(flatten)]
        io: Io,
        /// Include the full edge partition
        #[arg(long)]
        partition: bool,
    },
    /// Structural counts
    Stats {
        #[command(flatten)]
        io: Io,
    },
    /// All eccentricities
    Ecc {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value = "split")]
        algo: String,
        #[arg(long)]
        c: Option<f64>,
        #[arg(long, default_value = "minpar")]
        backend: String,
    },
    /// Reach centralities; `labels` (χ labels), `bfs` (exact, O(nm)) or `oracle`
    Reach {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value = "labels")]
        algo: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Weighted opposites on a simplex graph
    Wopp {
        #[command(flatten)]
        io: Io,
        /// Lines `vertex weight`; defaults to POF size plus one
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Median check by triple scan
    Verify {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Run every algorithm against the oracles
    Crosscheck {
        #[command(flatten)]
        io: Io,
        /// Generate the instance instead of reading it
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 600)]
        cap: usize,
    },
    /// Timing sweep as CSV
    Bench {
        #[arg(long = "spec", required = false)]
        specs: Vec<String>,
        #[arg(long = "algo", default_values_t = vec!["split".to_string(), "oracle".to_string()])]
        algos: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        c: Option<f64>,
        #[arg(long, default_value = "minpar")]
        backend: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn read_input(path: &Option<PathBuf>) -> Result<Loaded> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|e| Error::Param(format!("{}: {e}", p.display())))?;
        }
        None => {
            std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Param(e.to_string()))?;
        }
    }
    parse_edge_list(&text)
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Param(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Error::Param(e.to_string()))
        }
    }
}

fn json_out(path: &Option<PathBuf>, v: Value) -> Result<()> {
    write_out(path, &(serde_json::to_string_pretty(&v).unwrap() + "\n"))
}

/// Ok(true) on success, Ok(false) on a reported disagreement.
fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Gen { spec, seed, output } => {
            let g = harness::gen(&spec.parse::<GenSpec>()?, seed)?;
            if cli.json {
                json_out(&output, json!({"schema": 1, "spec": spec, "seed": seed, "n": g.n(), "m": g.m(), "edges": g.edges()}))?;
            } else {
                write_out(&output, &g.to_edge_list())?;
            }
        }
        Cmd::Theta { io, partition } => {
            let l = read_input(&io.input)?;
            let ts = compute_theta(&l.graph)?;
            let d = dimension(&orient(&l.graph, &ts, 0)?);
            let mut v = json!({"schema": 1, "n": l.graph.n(), "m": l.graph.m(), "q": ts.q, "d": d, "class_sizes": ts.class_sizes()});
            if partition {
                let classes: Vec<Vec<[u64; 2]>> = ts
                    .class_edges
                    .iter()
                    .map(|es| {
                        es.iter()
                            .map(|&e| {
                                let (a, b) = l.graph.edge(e);
                                [l.labels[a], l.labels[b]]
                            })
                            .collect()
                    })
                    .collect();
                v["classes"] = json!(classes);
            }
            json_out(&io.output, v)?;
        }
        Cmd::Stats { io } => {
            let l = read_input(&io.input)?;
            let ts = compute_theta(&l.graph)?;
            let o = orient(&l.graph, &ts, 0)?;
            let p = build_pof_index(&ts, &o)?;
            let s = pof_stats(&p);
            json_out(
                &io.output,
                json!({"schema": 1, "n": l.graph.n(), "m": l.graph.m(), "q": ts.q, "d": p.d(),
                       "pofs": s.pofs, "hypercubes": s.hypercubes, "mops": s.mops, "maximal_pofs": s.maximal_pofs}),
            )?;
        }
        Cmd::Ecc { io, algo, c, backend } => {
            let l = read_input(&io.input)?;
            let backend: Backend = backend.parse()?;
            let t = Instant::now();
            let ecc = harness::run_algo(&l.graph, &algo, c, backend)?;
            let elapsed = t.elapsed().as_secs_f64() * 1e3;
            let ts = compute_theta(&l.graph)?;
            let d = dimension(&orient(&l.graph, &ts, 0)?);
            json_out(
                &io.output,
                json!({"schema": 1, "n": l.graph.n(), "d": d, "q": ts.q, "labels": l.labels, "ecc": ecc,
                       "diameter": ecc.iter().max(), "radius": ecc.iter().min(), "elapsed_ms": elapsed}),
            )?;
        }
        Cmd::Reach { io, algo, cap } => {
            let l = read_input(&io.input)?;
            let rc = match algo.as_str() {
                "oracle" => reach_oracle(&l.graph, cap)?,
                "bfs" => reach_bfs(&l.graph),
                "labels" => {
                    let ts = compute_theta(&l.graph)?;
                    let o = orient(&l.graph, &ts, 0)?;
                    let p = build_pof_index(&ts, &o)?;
                    compute_reach(&p, &compute_labels(&p, Backend::Naive)?)
                }
                _ => return Err(Error::Param(format!("unknown reach algorithm {algo:?}"))),
            };
            json_out(&io.output, json!({"schema": 1, "labels": l.labels, "rc": rc}))?;
        }
        Cmd::Wopp { io, weights } => {
            let l = read_input(&io.input)?;
            let ts = compute_theta(&l.graph)?;
            let c = simplex_central_vertex(&l.graph, &ts).ok_or(Error::NotSimplex)?;
            let o = orient(&l.graph, &ts, c)?;
            let p = build_pof_index(&ts, &o)?;
            let f = Family::from_index(&p);
            let mut w: Vec<u64> = f.pofs.iter().map(|x| x.len() as u64 + 1).collect();
            if let Some(path) = weights {
                let text = std::fs::read_to_string(&path).map_err(|e| Error::Param(format!("{}: {e}", path.display())))?;
                for (i, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let bad = || Error::Parse { line: i + 1, msg: format!("expected `vertex weight`, got {line:?}") };
                    let (a, b) = line.split_once(char::is_whitespace).ok_or_else(bad)?;
                    let id: u64 = a.trim().parse().map_err(|_| bad())?;
                    let v = l.labels.iter().position(|&x| x == id).ok_or_else(bad)?;
                    w[v] = b.trim().parse().map_err(|_| bad())?;
                }
            }
            let r = solve_wopp(&f, &w)?;
            let rows: Vec<Value> = (0..f.pofs.len())
                .map(|i| json!({"vertex": l.labels[i], "pof": f.pofs[i], "opposite": f.pofs[r.op[i]], "weight": r.weight[i]}))
                .collect();
            json_out(&io.output, json!({"schema": 1, "central": l.labels[c], "opposites": rows, "memo_size": r.memo_size}))?;
        }
        Cmd::Verify { io, cap } => {
            let l = read_input(&io.input)?;
            let r = verify_median(&l.graph, cap)?;
            let violation = r.violation.map(|(a, b, c)| [l.labels[a], l.labels[b], l.labels[c]]);
            json_out(&io.output, json!({"schema": 1, "median": r.ok, "violation": violation}))?;
            return Ok(r.ok);
        }
        Cmd::Crosscheck { io, spec, seed, cap } => {
            let g = match spec {
                Some(s) => harness::gen(&s.parse::<GenSpec>()?, seed)?,
                None => read_input(&io.input)?.graph,
            };
            let caps = Caps { verify: cap, ..Caps::default() };
            let r = harness::crosscheck(&g, &caps)?;
            json_out(&io.output, serde_json::to_value(&r).unwrap())?;
            return Ok(r.all_ok());
        }
        Cmd::Bench { specs, algos, seed, c, backend, output } => {
            let specs = specs.iter().map(|s| s.parse()).collect::<Result<Vec<GenSpec>>>()?;
            let rows = harness::bench(&specs, &algos, seed, c, backend.parse()?)?;
            if cli.json {
                let slopes: Vec<Value> = harness::fit_slopes(&rows)
                    .into_iter()
                    .map(|(family, algo, s)| json!({"family": family, "algo": algo, "slope": s}))
                    .collect();
                json_out(&output, json!({"schema": 1, "rows": rows, "slopes": slopes}))?;
                return Ok(true);
            }
            let mut text = String::from(harness::BENCH_HEADER);
            text.push('\n');
            for r in &rows {
                text.push_str(&r.csv());
                text.push('\n');
            }
            for (family, algo, s) in harness::fit_slopes(&rows) {
                text.push_str(&format!("# slope {family} {algo} {s:.3}\n"));
            }
            write_out(&output, &text)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
