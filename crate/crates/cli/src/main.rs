use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use qmcbn::bench::{default_direction_numbers, method_stream, run_convergence, ExperimentSpec, Method};
use qmcbn::dirnums::{format_candidate_log, format_direction_numbers, parse_direction_numbers};
use qmcbn::formats::{load_evidence, load_network, parse_icpt};
use qmcbn::points::{format_points, parse_points};
use qmcbn::report::{plot_data, results_csv};
use qmcbn_core::bn::{variable_elimination, BayesNet, Evidence, MarginalSet};
use qmcbn_core::discrepancy::{
    cell_uniformity, search_direction_numbers, star_discrepancy_exact, PointSet2D, UniformitySearchConfig,
};
use qmcbn_core::sampling::{importance_estimate, likelihood_weighting_isf, pls_estimate, rmse_metric};
use qmcbn_core::lds::SobolDimensionParams;

#[derive(Parser)]
#[command(name = "qmcbn", version, about = "Quasi-Monte Carlo sampling for discrete Bayesian networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Mc,
    Halton,
    Sobol,
    Faure,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Mc => Method::Mc,
            MethodArg::Halton => Method::Halton,
            MethodArg::Sobol => Method::Sobol,
            MethodArg::Faure => Method::Faure,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Measure {
    /// Exact star discrepancy (d <= 2).
    Star,
    /// Cell-uniformity count deviation on an m x m grid (d = 2).
    Cell,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    PlotData,
}

#[derive(Subcommand)]
enum Command {
    /// Print points of a sequence, one per line.
    Gen {
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long)]
        dimension: usize,
        #[arg(long)]
        count: u64,
        /// Seed for `mc`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        direction_numbers: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search Sobol initial direction numbers by cell uniformity.
    Dirnums {
        #[arg(long, default_value_t = 16)]
        n_dimension: usize,
        #[arg(long, default_value_t = 64)]
        n_random_times: usize,
        /// Points per candidate.
        #[arg(long, default_value_t = 1024)]
        points: usize,
        /// Grid divisions per axis.
        #[arg(long, default_value_t = 32)]
        grid: usize,
        #[arg(long, default_value_t = 8)]
        window: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also write every scored candidate as CSV.
        #[arg(long)]
        candidate_log: Option<PathBuf>,
    },
    /// Exact posterior marginals by variable elimination.
    Exact {
        #[arg(long)]
        network: PathBuf,
        #[arg(long)]
        evidence: Option<PathBuf>,
    },
    /// One sampling run; prints estimated marginals, and the RMSE against the exact ones.
    Estimate {
        #[arg(long)]
        network: PathBuf,
        #[arg(long)]
        evidence: Option<PathBuf>,
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        direction_numbers: Option<PathBuf>,
        #[arg(long)]
        icpt: Option<PathBuf>,
        /// Skip the exact comparison.
        #[arg(long)]
        no_exact: bool,
    },
    /// Convergence benchmark over a doubling sample schedule.
    Bench {
        #[arg(long)]
        network: PathBuf,
        #[arg(long)]
        evidence: Option<PathBuf>,
        /// Comma-separated subset of mc, halton, sobol, faure.
        #[arg(long, value_delimiter = ',', default_values = ["mc", "halton", "sobol", "faure"])]
        methods: Vec<MethodArg>,
        #[arg(long, default_value_t = 250)]
        min_samples: u64,
        #[arg(long, default_value_t = 10)]
        doublings: u32,
        #[arg(long, default_value_t = 10)]
        mc_runs: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        direction_numbers: Option<PathBuf>,
        #[arg(long)]
        icpt: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: ReportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Measure a point file.
    Discrepancy {
        #[arg(long)]
        points: PathBuf,
        #[arg(long, value_enum, default_value = "star")]
        measure: Measure,
        #[arg(long, default_value_t = 32)]
        grid: usize,
    },
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| anyhow::anyhow!("{}: {e}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn direction_numbers(path: Option<&Path>) -> Result<Vec<SobolDimensionParams>> {
    Ok(match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?;
            parse_direction_numbers(&text)?
        }
        None => default_direction_numbers(),
    })
}

fn net_and_evidence(network: &Path, evidence: Option<&Path>) -> Result<(BayesNet, Evidence)> {
    let net = load_network(network)?;
    let ev = match evidence {
        Some(p) => load_evidence(p, &net)?,
        None => Evidence::new(),
    };
    Ok((net, ev))
}

fn marginals_json(net: &BayesNet, m: &MarginalSet, extra: serde_json::Map<String, serde_json::Value>) -> String {
    let nodes: Vec<serde_json::Value> = net
        .nodes()
        .iter()
        .zip(m.per_node())
        .map(|(node, p)| {
            let probs: serde_json::Map<String, serde_json::Value> =
                node.states().iter().cloned().zip(p.iter().map(|&x| x.into())).collect();
            serde_json::json!({ "id": node.id(), "marginal": probs })
        })
        .collect();
    let mut obj = extra;
    obj.insert("network".into(), net.name().into());
    obj.insert("nodes".into(), nodes.into());
    let mut s = serde_json::to_string_pretty(&obj).expect("json");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen { method, dimension, count, seed, direction_numbers: dn, output } => {
            if dimension == 0 {
                bail!("dimension must be at least 1");
            }
            let dn = direction_numbers(dn.as_deref())?;
            let mut stream = method_stream(method.into(), dimension, seed, count, &dn)?;
            let pts = (0..count).map(|_| stream.next_point()).collect::<qmcbn_core::Result<Vec<_>>>()?;
            emit(output.as_deref(), &format_points(&pts))
        }
        Command::Dirnums { n_dimension, n_random_times, points, grid, window, seed, output, candidate_log } => {
            let cfg = UniformitySearchConfig { dimensions: n_dimension, random_times: n_random_times, points, grid, window, seed };
            let out = search_direction_numbers(&cfg)?;
            let header = format!(
                "Sobol initial direction numbers: dim degree polyBits m1 .. mq\n\
                 search: n-dimension {n_dimension}, n-random-times {n_random_times}, points {points}, grid {grid}, window {window}, seed {seed}"
            );
            if let Some(p) = candidate_log {
                std::fs::write(&p, format_candidate_log(&out.log)).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?;
            }
            emit(output.as_deref(), &format_direction_numbers(&out.params, &header))
        }
        Command::Exact { network, evidence } => {
            let (net, ev) = net_and_evidence(&network, evidence.as_deref())?;
            let m = variable_elimination(&net, &ev)?;
            let mut extra = serde_json::Map::new();
            extra.insert("prob_evidence".into(), m.prob_evidence().unwrap_or(1.0).into());
            emit(None, &marginals_json(&net, &m, extra))
        }
        Command::Estimate { network, evidence, method, samples, seed, direction_numbers: dn, icpt, no_exact } => {
            let (net, ev) = net_and_evidence(&network, evidence.as_deref())?;
            let dn = direction_numbers(dn.as_deref())?;
            let dim = net.len() - ev.len();
            let mut stream = method_stream(method.into(), dim, seed, samples, &dn)?;
            let est = if ev.is_empty() && icpt.is_none() {
                pls_estimate(&net, stream.as_mut(), samples)?
            } else if let Some(p) = icpt {
                let text = std::fs::read_to_string(&p).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?;
                let isf = parse_icpt(&text, &net, &ev)?;
                importance_estimate(&net, &ev, &isf, stream.as_mut(), samples)?
            } else {
                let isf = likelihood_weighting_isf(&net, &ev);
                importance_estimate(&net, &ev, &isf, stream.as_mut(), samples)?
            };
            let mut extra = serde_json::Map::new();
            extra.insert("method".into(), Method::from(method).name().into());
            extra.insert("samples".into(), samples.into());
            extra.insert("prob_evidence".into(), est.prob_evidence_estimate.into());
            if !no_exact {
                let exact = variable_elimination(&net, &ev)?;
                extra.insert("rmse".into(), rmse_metric(&est.marginals, &exact, &ev)?.into());
            }
            emit(None, &marginals_json(&net, &est.marginals, extra))
        }
        Command::Bench {
            network,
            evidence,
            methods,
            min_samples,
            doublings,
            mc_runs,
            seed,
            direction_numbers,
            icpt,
            format,
            output,
        } => {
            let spec = ExperimentSpec {
                network,
                evidence,
                methods: methods.into_iter().map(Method::from).collect(),
                min_samples,
                doublings,
                mc_runs,
                seed,
                direction_numbers,
                icpt,
            };
            let report = run_convergence(&spec)?;
            eprintln!("{}", report.provenance);
            let text = match format {
                ReportFormat::Csv => results_csv(&report),
                ReportFormat::PlotData => plot_data(&report),
            };
            emit(output.as_deref(), &text)
        }
        Command::Discrepancy { points, measure, grid } => {
            let text = std::fs::read_to_string(&points).map_err(|e| anyhow::anyhow!("{}: {e}", points.display()))?;
            let pts = parse_points(&text)?;
            let value = match measure {
                Measure::Star => star_discrepancy_exact(&pts)?,
                Measure::Cell => {
                    if pts.first().is_some_and(|p| p.dim() != 2) {
                        bail!("cell uniformity needs 2-dimensional points");
                    }
                    let set = PointSet2D::new(pts.iter().map(|p| (p[0], p[1])).collect())?;
                    cell_uniformity(&set, grid)?
                }
            };
            emit(None, &format!("{value}\n"))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            eprintln!("qmcbn: {msg}");
            ExitCode::FAILURE
        }
    }
}
