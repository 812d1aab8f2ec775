//! Convergence experiments: RMSE against sample size for each method, and the
//! log-log regression `rmse = c * N^-alpha`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use qmcbn_core::bn::{variable_elimination, BayesNet, Evidence, MarginalSet};
use qmcbn_core::lds::{DirectionTable, FaureStream, HaltonStream, SobolDimensionParams, SobolStream, FAURE_DEFAULT_MAX_POINTS};
use qmcbn_core::sampling::{
    importance_checkpoints, likelihood_weighting_isf, load_isf_table, pls_checkpoints, rmse_metric, EstimationResult,
    ImportanceFunction, RandomStream,
};
use qmcbn_core::NumberStream;
use rayon::prelude::*;

use crate::dirnums::parse_direction_numbers;
use crate::error::{read_file, Error, Result};
use crate::formats::{load_evidence, load_network, parse_icpt_tables};

/// Sampling method. Variants are declared in name order, so `Ord` sorts by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Faure,
    Halton,
    Mc,
    Sobol,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Faure, Method::Halton, Method::Mc, Method::Sobol];

    pub fn name(self) -> &'static str {
        match self {
            Method::Faure => "faure",
            Method::Halton => "halton",
            Method::Mc => "mc",
            Method::Sobol => "sobol",
        }
    }

    pub fn is_random(self) -> bool {
        self == Method::Mc
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown method `{s}` (expected faure, halton, mc or sobol)")))
    }
}

/// Experiment description in terms of files on disk.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub network: PathBuf,
    pub evidence: Option<PathBuf>,
    pub methods: Vec<Method>,
    pub min_samples: u64,
    pub doublings: u32,
    pub mc_runs: u32,
    pub seed: u64,
    /// Sobol direction numbers; the bundled set when absent.
    pub direction_numbers: Option<PathBuf>,
    /// Importance table used under evidence; likelihood weighting when absent.
    pub icpt: Option<PathBuf>,
}

impl ExperimentSpec {
    pub fn new(network: impl Into<PathBuf>) -> Self {
        ExperimentSpec {
            network: network.into(),
            evidence: None,
            methods: Method::ALL.to_vec(),
            min_samples: 250,
            doublings: 10,
            mc_runs: 10,
            seed: 0,
            direction_numbers: None,
            icpt: None,
        }
    }

    /// Reads every referenced file.
    pub fn load(&self) -> Result<Experiment> {
        let net = load_network(&self.network)?;
        let evidence = match &self.evidence {
            Some(p) => load_evidence(p, &net)?,
            None => Evidence::new(),
        };
        let direction_numbers = match &self.direction_numbers {
            Some(p) => parse_direction_numbers(&read_file(p)?)?,
            None => default_direction_numbers(),
        };
        let icpt = match &self.icpt {
            Some(p) => Some(parse_icpt_tables(&read_file(p)?)?),
            None => None,
        };
        Ok(Experiment {
            net,
            evidence,
            methods: self.methods.clone(),
            min_samples: self.min_samples,
            doublings: self.doublings,
            mc_runs: self.mc_runs,
            seed: self.seed,
            direction_numbers,
            icpt,
        })
    }
}

/// Stream of `dim`-dimensional points for `method`, able to supply at least
/// `max_points` points. `seed` only affects MC.
pub fn method_stream(
    method: Method,
    dim: usize,
    seed: u64,
    max_points: u64,
    direction_numbers: &[SobolDimensionParams],
) -> qmcbn_core::Result<Box<dyn NumberStream + Send>> {
    Ok(match method {
        Method::Mc => Box::new(RandomStream::new(dim, seed)),
        Method::Halton => Box::new(HaltonStream::new(dim)?),
        Method::Faure => Box::new(FaureStream::new(dim, FAURE_DEFAULT_MAX_POINTS.max(max_points.saturating_add(1)))?),
        Method::Sobol => {
            if direction_numbers.len() < dim {
                return Err(qmcbn_core::Error::UnsupportedDimension { requested: dim, max: direction_numbers.len() });
            }
            let table = DirectionTable::new(&direction_numbers[..dim])?;
            Box::new(SobolStream::new(&table, dim)?)
        }
    })
}

pub fn default_direction_numbers() -> Vec<SobolDimensionParams> {
    parse_direction_numbers(crate::bundled::SOBOL_DIRECTION_NUMBERS).expect("bundled direction numbers are valid")
}

/// A loaded experiment.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub net: BayesNet,
    pub evidence: Evidence,
    pub methods: Vec<Method>,
    pub min_samples: u64,
    pub doublings: u32,
    pub mc_runs: u32,
    pub seed: u64,
    pub direction_numbers: Vec<SobolDimensionParams>,
    pub icpt: Option<BTreeMap<String, Vec<Vec<f64>>>>,
}

impl Experiment {
    pub fn new(net: BayesNet, evidence: Evidence) -> Self {
        Experiment {
            net,
            evidence,
            methods: Method::ALL.to_vec(),
            min_samples: 250,
            doublings: 10,
            mc_runs: 10,
            seed: 0,
            direction_numbers: default_direction_numbers(),
            icpt: None,
        }
    }

    /// `min_samples * 2^k` for `k = 0 ..= doublings`.
    pub fn schedule(&self) -> Result<Vec<u64>> {
        if self.min_samples < 1 {
            return Err(Error::InvalidInput("min-samples must be at least 1".into()));
        }
        if self.doublings < 1 {
            return Err(Error::InvalidInput("doublings must be at least 1".into()));
        }
        (0..=self.doublings)
            .map(|k| {
                1u64.checked_shl(k)
                    .filter(|_| k < 64)
                    .and_then(|p| p.checked_mul(self.min_samples))
                    .ok_or_else(|| Error::InvalidInput("sample schedule overflows u64".into()))
            })
            .collect()
    }

    fn validate(&self) -> Result<()> {
        if self.methods.is_empty() {
            return Err(Error::InvalidInput("no methods selected".into()));
        }
        if self.mc_runs < 1 && self.methods.contains(&Method::Mc) {
            return Err(Error::InvalidInput("mc-runs must be at least 1".into()));
        }
        self.evidence.check(&self.net)?;
        Ok(())
    }

    /// Stream dimension: one coordinate per sampled node.
    pub fn dimension(&self) -> usize {
        self.net.len() - self.evidence.len()
    }

    fn runs(&self, m: Method) -> u32 {
        if m.is_random() {
            self.mc_runs
        } else {
            1
        }
    }

    fn stream(&self, m: Method, run: u32, max_n: u64) -> qmcbn_core::Result<Box<dyn NumberStream + Send>> {
        method_stream(m, self.dimension(), self.seed.wrapping_add(u64::from(run)), max_n, &self.direction_numbers)
    }

    fn estimates(
        &self,
        isf: Option<&(dyn ImportanceFunction + Sync)>,
        m: Method,
        run: u32,
        schedule: &[u64],
    ) -> qmcbn_core::Result<Vec<EstimationResult>> {
        let mut stream = self.stream(m, run, *schedule.last().expect("non-empty schedule"))?;
        match isf {
            None => pls_checkpoints(&self.net, stream.as_mut(), schedule),
            Some(f) => importance_checkpoints(&self.net, &self.evidence, f, stream.as_mut(), schedule),
        }
    }
}

/// One (method, N, run) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub method: Method,
    pub samples: u64,
    pub run: u32,
    pub rmse: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaFit {
    pub alpha: f64,
    pub intercept: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MethodSummary {
    pub method: Method,
    /// `(N, rmse)` used for the fit; run means for MC.
    pub points: Vec<(u64, f64)>,
    /// `None` when some rmse is zero.
    pub fit: Option<AlphaFit>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub network: String,
    pub min_samples: u64,
    /// Sorted by method name, then N, then run.
    pub rows: Vec<ReportRow>,
    /// One entry per method, sorted by method name.
    pub summary: Vec<MethodSummary>,
    pub exact: MarginalSet,
    pub provenance: String,
}

impl ConvergenceReport {
    pub fn summary_for(&self, m: Method) -> Option<&MethodSummary> {
        self.summary.iter().find(|s| s.method == m)
    }
}

/// Ordinary least squares of `ln rmse` on `ln N`; returns `alpha = -slope`
/// and `intercept = exp(constant term)`.
pub fn fit_alpha(points: &[(u64, f64)]) -> Result<AlphaFit> {
    fit_alpha_f64(&points.iter().map(|&(n, r)| (n as f64, r)).collect::<Vec<_>>())
}

pub fn fit_alpha_f64(points: &[(f64, f64)]) -> Result<AlphaFit> {
    if points.len() < 2 {
        return Err(Error::InvalidInput("fit needs at least two points".into()));
    }
    if let Some(&(n, r)) = points.iter().find(|&&(n, r)| r.is_nan() || r <= 0.0 || n.is_nan() || n <= 0.0) {
        return Err(Error::InvalidInput(format!("cannot take the log of point ({n}, {r})")));
    }
    let k = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidInput("fit needs at least two distinct sample sizes".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    Ok(AlphaFit { alpha: -slope, intercept: (my - slope * mx).exp() })
}

/// Loads the files named by `spec` and runs [`run_experiment`].
pub fn run_convergence(spec: &ExperimentSpec) -> Result<ConvergenceReport> {
    run_experiment(&spec.load()?)
}

pub fn run_experiment(exp: &Experiment) -> Result<ConvergenceReport> {
    exp.validate()?;
    let schedule = exp.schedule()?;
    let exact = variable_elimination(&exp.net, &exp.evidence).map_err(|e| match e {
        qmcbn_core::Error::TooLarge { .. } => Error::OracleUnavailable(e),
        other => Error::Core(other),
    })?;

    let lw;
    let table;
    let isf: Option<&(dyn ImportanceFunction + Sync)> = if exp.evidence.is_empty() {
        None
    } else if let Some(t) = &exp.icpt {
        table = load_isf_table(t, &exp.net, &exp.evidence)?;
        Some(&table)
    } else {
        lw = likelihood_weighting_isf(&exp.net, &exp.evidence);
        Some(&lw)
    };

    let mut methods = exp.methods.clone();
    methods.sort();
    methods.dedup();
    let jobs: Vec<(Method, u32)> =
        methods.iter().flat_map(|&m| (0..exp.runs(m)).map(move |r| (m, r))).collect();

    let results: Vec<Vec<ReportRow>> = jobs
        .par_iter()
        .map(|&(method, run)| {
            let ctx = |source| Error::Estimation { method: method.name(), run, source };
            let estimates = exp.estimates(isf, method, run, &schedule).map_err(ctx)?;
            estimates
                .iter()
                .zip(&schedule)
                .map(|(est, &samples)| {
                    let rmse = rmse_metric(&est.marginals, &exact, &exp.evidence).map_err(ctx)?;
                    Ok(ReportRow { method, samples, run, rmse })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let mut rows: Vec<ReportRow> = results.into_iter().flatten().collect();
    rows.sort_by_key(|a| (a.method, a.samples, a.run));

    let summary = methods
        .iter()
        .map(|&method| {
            let points: Vec<(u64, f64)> = schedule
                .iter()
                .map(|&n| {
                    let cell: Vec<f64> =
                        rows.iter().filter(|r| r.method == method && r.samples == n).map(|r| r.rmse).collect();
                    (n, cell.iter().sum::<f64>() / cell.len() as f64)
                })
                .collect();
            let fit = fit_alpha(&points).ok();
            MethodSummary { method, points, fit }
        })
        .collect();

    let mut provenance = format!("exact marginals by variable elimination on `{}`", exp.net.name());
    if let Some(pe) = exact.prob_evidence().filter(|_| !exp.evidence.is_empty()) {
        provenance.push_str(&format!(", Pr(e) = {pe}"));
    }
    Ok(ConvergenceReport {
        network: exp.net.name().to_string(),
        min_samples: exp.min_samples,
        rows,
        summary,
        exact,
        provenance,
    })
}
