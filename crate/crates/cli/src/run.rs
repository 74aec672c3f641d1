//! Monte Carlo scan machinery: seeded trials over a density grid,
//! deterministic CSV records, Wilson-interval summaries, and the
//! empirical threshold estimator.

use crate::CliError;
use hyperorient::models::{binomial_coefficient, gen_binomial, gen_poisson_cloning, gen_uniform};
use hyperorient::orient::orient_with_peeling;
use hyperorient::peel::peel_core;
use hyperorient::rng::Seed;
use hyperorient::threshold::OrientParams;
use hyperorient::Hypergraph;
use rayon::prelude::*;
use std::io::Write;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Uniform,
    Binomial,
    PoissonCloning,
}

impl Model {
    pub fn parse(s: &str) -> Result<Model, CliError> {
        match s {
            "uniform" => Ok(Model::Uniform),
            "binomial" => Ok(Model::Binomial),
            "poisson-cloning" => Ok(Model::PoissonCloning),
            other => Err(CliError::Usage(format!(
                "unknown model `{other}` (expected uniform | binomial | poisson-cloning)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Model::Uniform => "uniform",
            Model::Binomial => "binomial",
            Model::PoissonCloning => "poisson-cloning",
        }
    }

    fn generate(
        &self,
        n: usize,
        c: f64,
        k: usize,
        seed: Seed,
    ) -> Result<Hypergraph, hyperorient::Error> {
        match self {
            Model::Uniform => {
                let m = (c * n as f64).floor() as usize;
                gen_uniform(n, m, k, seed)
            }
            Model::Binomial | Model::PoissonCloning => {
                let per_vertex = binomial_coefficient(n - 1, k - 1).ok_or_else(|| {
                    hyperorient::Error::Argument("C(n-1,k-1) exceeds 128-bit range".into())
                })?;
                let p = c * k as f64 / per_vertex as f64;
                match self {
                    Model::Binomial => gen_binomial(n, p, k, seed),
                    _ => gen_poisson_cloning(n, p, k, seed),
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanSpec {
    pub params: OrientParams,
    pub model: Model,
    pub n: usize,
    /// ascending densities
    pub c_grid: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
    /// report wall-clock per trial in the CSV (breaks byte-reproducibility)
    pub timing: bool,
}

#[derive(Debug, Clone)]
pub struct TrialRecord {
    pub c: f64,
    pub trial: u64,
    pub stream: u64,
    pub orientable: bool,
    pub core_n: usize,
    pub core_m: usize,
    pub elapsed_ms: u64,
}

pub const CSV_HEADER: &str = "k,ell,model,n,c,trial,seed,orientable,core_n,core_m,elapsed_ms";

impl TrialRecord {
    pub fn csv_row(&self, spec: &ScanSpec) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            spec.params.k(),
            spec.params.ell(),
            spec.model.name(),
            spec.n,
            self.c,
            self.trial,
            self.stream,
            self.orientable,
            self.core_n,
            self.core_m,
            if spec.timing { self.elapsed_ms } else { 0 },
        )
    }
}

/// Wilson 95% confidence interval for a binomial fraction.
pub fn wilson_interval(successes: u64, total: u64) -> (f64, f64) {
    if total == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959963984540054f64;
    let n = total as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

fn run_trial(spec: &ScanSpec, c_idx: usize, c: f64, trial: u64) -> TrialRecord {
    let stream = (c_idx as u64) << 32 | trial;
    let seed = Seed::new(spec.seed, stream);
    let start = Instant::now();
    let h = spec
        .model
        .generate(spec.n, c, spec.params.k() as usize, seed)
        .expect("trial generation arguments were validated up front");
    let ell = spec.params.ell();
    let core = peel_core(&h, ell);
    let orientable = orient_with_peeling(&h, ell).is_orientable();
    let elapsed_ms = start.elapsed().as_millis() as u64;
    // per-record cross-check: an overloaded core excludes orientation
    if core.density.exceeds(ell) {
        assert!(
            !orientable,
            "core denser than ell on an orientable instance"
        );
    }
    if orientable {
        assert!(!core.density.exceeds(ell));
    }
    if !core.vertices.is_empty() {
        assert!(
            spec.params.k() as u64 * core.edge_indices.len() as u64
                >= (ell as u64 + 1) * core.vertices.len() as u64,
            "core total degree below minimum"
        );
    }
    TrialRecord {
        c,
        trial,
        stream,
        orientable,
        core_n: core.vertices.len(),
        core_m: core.edge_indices.len(),
        elapsed_ms,
    }
}

/// Per-density summary of a scan.
#[derive(Debug, Clone)]
pub struct ScanSummary {
    pub c: f64,
    pub orientable: u64,
    pub trials: u64,
    pub fraction: f64,
    pub wilson: (f64, f64),
}

/// Run the scan, streaming CSV records to `sink` (flushed per record) and
/// summaries to stdout.
pub fn run_scan(spec: &ScanSpec, sink: &mut dyn Write) -> Result<Vec<ScanSummary>, CliError> {
    writeln!(sink, "{CSV_HEADER}").map_err(CliError::Io)?;
    sink.flush().map_err(CliError::Io)?;
    let mut summaries = Vec::with_capacity(spec.c_grid.len());
    for (c_idx, &c) in spec.c_grid.iter().enumerate() {
        let records: Vec<TrialRecord> = (0..spec.trials)
            .into_par_iter()
            .map(|t| run_trial(spec, c_idx, c, t))
            .collect();
        for r in &records {
            writeln!(sink, "{}", r.csv_row(spec)).map_err(CliError::Io)?;
            sink.flush().map_err(CliError::Io)?;
        }
        let orientable = records.iter().filter(|r| r.orientable).count() as u64;
        let summary = ScanSummary {
            c,
            orientable,
            trials: spec.trials,
            fraction: orientable as f64 / spec.trials as f64,
            wilson: wilson_interval(orientable, spec.trials),
        };
        println!(
            "c = {}: orientable {}/{} (fraction {:.4}, 95% CI [{:.4}, {:.4}])",
            summary.c,
            summary.orientable,
            summary.trials,
            summary.fraction,
            summary.wilson.0,
            summary.wilson.1
        );
        summaries.push(summary);
    }
    Ok(summaries)
}

/// Locate the 0.5 crossing of the orientable-fraction curve by linear
/// interpolation between the bracketing grid points.
pub fn estimate_threshold(summaries: &[ScanSummary]) -> Result<f64, CliError> {
    for w in summaries.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if a.fraction >= 0.5 && b.fraction < 0.5 {
            let t = (a.fraction - 0.5) / (a.fraction - b.fraction);
            return Ok(a.c + t * (b.c - a.c));
        }
    }
    Err(CliError::NoCrossing)
}
