//! Plumbing behind the `mediocre` binary: single runs, seeded benchmarks and
//! CSV rendering. Everything here is deterministic given the seeds, and
//! benchmark aggregation does not depend on how trials were scheduled.

use std::fmt::Write as _;

use clap::ValueEnum;
use mediocre::approx::a2_las_vegas_capped;
use mediocre::approx::DEFAULT_MAX_REPETITIONS;
use mediocre::cost::{self, InstanceConstants};
use mediocre::{
    a1_select, a2_once, a2_params, generate_instance, hyperpair_select, select_floyd_rivest, yao_select, Comparator,
    CountingComparator, Element, Error, ExactSelector, HyperpairConfig, Result, Rng,
};
use rayon::prelude::*;

/// Environment variable capping benchmark parallelism.
pub const THREADS_VAR: &str = "MEDIOCRE_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Yao,
    A1,
    Hyper,
    A2,
    A2lv,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Yao => "yao",
            Algo::A1 => "a1",
            Algo::Hyper => "hyper",
            Algo::A2 => "a2",
            Algo::A2lv => "a2lv",
        }
    }

    /// A2 relies on selecting inside a random sample, where the adaptive
    /// selector is close to optimal; the deterministic schemes keep the
    /// worst-case-linear default.
    pub fn default_exact(self) -> ExactSelector {
        match self {
            Algo::A2 | Algo::A2lv => ExactSelector::Adaptive,
            _ => ExactSelector::MedianOfMedians,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Exact {
    Mom,
    Adaptive,
}

impl From<Exact> for ExactSelector {
    fn from(e: Exact) -> Self {
        match e {
            Exact::Mom => ExactSelector::MedianOfMedians,
            Exact::Adaptive => ExactSelector::Adaptive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    F,
    Constants,
    Hyper4,
}

/// What to run: an algorithm on a family of `(n, i, j)` instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunSpec {
    pub algo: Algo,
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub g: Option<usize>,
    pub exact: ExactSelector,
}

impl RunSpec {
    /// Checks every precondition up front, so a bad command line fails before
    /// any trial runs.
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Parameter("n >= 1 violated".into()));
        }
        if self.i + self.j + 1 > self.n {
            return Err(Error::Parameter(format!(
                "i + j + 1 <= n violated ({} + {} + 1 > {})",
                self.i, self.j, self.n
            )));
        }
        match (self.algo, self.g) {
            (Algo::Hyper, None) => return Err(Error::Parameter("--g is required for --algo hyper".into())),
            (Algo::Hyper, Some(g)) => {
                HyperpairConfig::new(self.n, self.i, self.j, g)?;
            }
            (_, Some(_)) => return Err(Error::Parameter("--g is only valid with --algo hyper".into())),
            (Algo::A2 | Algo::A2lv, None) => {
                a2_params(self.i, self.j, self.n)?;
            }
            _ => {}
        }
        Ok(())
    }
}

/// One seeded run. A Las Vegas run that exhausts its repetitions has no
/// element and counts as failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trial {
    pub seed: u64,
    pub element: Option<Element>,
    pub rank_from_bottom: Option<usize>,
    pub mediocre: bool,
    pub comparisons: u64,
    pub grouping_comparisons: u64,
    pub repetitions: u32,
    pub failed: bool,
}

/// Runs `spec` once on `generate_instance(n, i, j, seed)`. Randomized
/// algorithms draw from stream 1 of the same seed.
pub fn run_trial(spec: &RunSpec, seed: u64) -> Result<Trial> {
    let inst = generate_instance(spec.n, spec.i, spec.j, seed)?;
    let mut cmp = CountingComparator::new();
    let mut rng = Rng::stream(seed, 1);
    let result = match spec.algo {
        Algo::Yao => yao_select(&inst, spec.exact, &mut cmp),
        Algo::A1 => a1_select(&inst, spec.exact, &mut cmp),
        Algo::Hyper => {
            let g = spec
                .g
                .ok_or_else(|| Error::Parameter("--g is required for --algo hyper".into()))?;
            hyperpair_select(&inst, g, spec.exact, &mut cmp)
        }
        Algo::A2 => a2_once(&inst, spec.exact, &mut cmp, &mut rng),
        Algo::A2lv => a2_las_vegas_capped(&inst, spec.exact, &mut cmp, &mut rng, DEFAULT_MAX_REPETITIONS),
    };
    match result {
        Ok(out) => {
            let out = out.with_rank(&inst)?;
            Ok(Trial {
                seed,
                element: Some(out.element),
                rank_from_bottom: out.rank_from_bottom,
                mediocre: out.is_mediocre_in(&inst)?,
                comparisons: out.comparisons,
                grouping_comparisons: out.grouping_comparisons,
                repetitions: out.repetitions,
                failed: out.failed,
            })
        }
        Err(Error::GaveUp {
            repetitions,
            comparisons,
        }) => Ok(Trial {
            seed,
            element: None,
            rank_from_bottom: None,
            mediocre: false,
            comparisons,
            grouping_comparisons: 0,
            repetitions,
            failed: true,
        }),
        Err(e) => Err(e),
    }
}

pub const RUN_HEADER: &str =
    "algo,n,i,j,g,seed,exact,element,rank_from_bottom,mediocre,comparisons,grouping_comparisons,repetitions,failed";

pub fn run_row(spec: &RunSpec, trial: &Trial) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        spec.algo.name(),
        spec.n,
        spec.i,
        spec.j,
        spec.g.map(|g| g.to_string()).unwrap_or_default(),
        trial.seed,
        spec.exact.name(),
        trial.element.map(|e| e.to_string()).unwrap_or_default(),
        trial.rank_from_bottom.map(|r| r.to_string()).unwrap_or_default(),
        trial.mediocre,
        trial.comparisons,
        trial.grouping_comparisons,
        trial.repetitions,
        trial.failed
    )
}

/// Aggregate of a benchmark.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialStats {
    pub algorithm: String,
    pub exact: String,
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub g: Option<usize>,
    pub trials: usize,
    pub seed_base: u64,
    pub mean_comparisons: f64,
    pub stddev: f64,
    pub max: u64,
    pub mean_grouping_comparisons: f64,
    /// Monte Carlo failures, or Las Vegas give-ups.
    pub failure_rate: Option<f64>,
    pub mean_repetitions: Option<f64>,
}

pub const STATS_HEADER: &str = "algo,exact,n,i,j,g,trials,seed_base,mean_comparisons,stddev,max,\
mean_grouping_comparisons,failure_rate,mean_repetitions";

pub fn stats_row(s: &TrialStats) -> String {
    let opt = |v: Option<f64>| v.map(|x| format!("{x:.4}")).unwrap_or_default();
    format!(
        "{},{},{},{},{},{},{},{},{:.4},{:.4},{},{:.4},{},{}",
        s.algorithm,
        s.exact,
        s.n,
        s.i,
        s.j,
        s.g.map(|g| g.to_string()).unwrap_or_default(),
        s.trials,
        s.seed_base,
        s.mean_comparisons,
        s.stddev,
        s.max,
        s.mean_grouping_comparisons,
        opt(s.failure_rate),
        opt(s.mean_repetitions)
    )
}

/// Worker count from [`THREADS_VAR`]; unset means one.
pub fn threads_from_env() -> std::result::Result<usize, String> {
    match std::env::var(THREADS_VAR) {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(t),
            _ => Err(format!("{THREADS_VAR} must be a positive integer (got {v:?})")),
        },
    }
}

/// Runs `f(seed_base + t)` for `t in 0..trials` on `threads` workers and
/// returns the results in trial order.
fn par_trials<T, F>(trials: usize, seed_base: u64, threads: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync,
{
    let seeds: Vec<u64> = (0..trials as u64).map(|t| seed_base.wrapping_add(t)).collect();
    if threads <= 1 {
        return seeds.into_iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Parameter(format!("cannot start {threads} threads: {e}")))?;
    pool.install(|| seeds.into_par_iter().map(&f).collect())
}

fn summarize(counts: &[u64]) -> (f64, f64, u64) {
    let t = counts.len() as f64;
    let sum: u128 = counts.iter().map(|&c| c as u128).sum();
    let mean = sum as f64 / t;
    let var = if counts.len() > 1 {
        counts.iter().map(|&c| (c as f64 - mean).powi(2)).sum::<f64>() / (t - 1.0)
    } else {
        0.0
    };
    (mean, var.sqrt(), counts.iter().copied().max().unwrap_or(0))
}

/// `trials` runs of `spec` with seeds `seed_base + t`.
pub fn bench(spec: &RunSpec, trials: usize, seed_base: u64, threads: usize) -> Result<TrialStats> {
    if trials == 0 {
        return Err(Error::Parameter("trials >= 1 violated".into()));
    }
    spec.validate()?;
    let runs = par_trials(trials, seed_base, threads, |seed| run_trial(spec, seed))?;
    let counts: Vec<u64> = runs.iter().map(|r| r.comparisons).collect();
    let (mean, stddev, max) = summarize(&counts);
    let t = trials as f64;
    let grouping = runs.iter().map(|r| r.grouping_comparisons as f64).sum::<f64>() / t;
    let failures = runs.iter().filter(|r| r.failed).count() as f64 / t;
    let reps = runs.iter().map(|r| r.repetitions as f64).sum::<f64>() / t;
    Ok(TrialStats {
        algorithm: spec.algo.name().to_string(),
        exact: spec.exact.name().to_string(),
        n: spec.n,
        i: spec.i,
        j: spec.j,
        g: spec.g,
        trials,
        seed_base,
        mean_comparisons: mean,
        stddev,
        max,
        mean_grouping_comparisons: grouping,
        failure_rate: matches!(spec.algo, Algo::A2 | Algo::A2lv).then_some(failures),
        mean_repetitions: (spec.algo == Algo::A2lv).then_some(reps),
    })
}

/// Floyd-Rivest for the exact median of the first `i + j + 1` elements of the
/// same instances [`bench`] uses, drawing from stream 2 of each seed.
pub fn bench_fr_median(spec: &RunSpec, trials: usize, seed_base: u64, threads: usize) -> Result<TrialStats> {
    if trials == 0 {
        return Err(Error::Parameter("trials >= 1 violated".into()));
    }
    let size = spec.i + spec.j + 1;
    let counts = par_trials(trials, seed_base, threads, |seed| {
        let inst = generate_instance(spec.n, spec.i, spec.j, seed)?;
        let mut cmp = CountingComparator::new();
        select_floyd_rivest(
            &inst.elements()[..size],
            size / 2 + 1,
            &mut cmp,
            &mut Rng::stream(seed, 2),
        )?;
        Ok(cmp.comparisons())
    })?;
    let (mean, stddev, max) = summarize(&counts);
    Ok(TrialStats {
        algorithm: "fr-median".into(),
        exact: "floyd-rivest".into(),
        n: spec.n,
        i: spec.i,
        j: spec.j,
        g: None,
        trials,
        seed_base,
        mean_comparisons: mean,
        stddev,
        max,
        mean_grouping_comparisons: 0.0,
        failure_rate: None,
        mean_repetitions: None,
    })
}

/// Four decimals, truncated as in the published tables. The nudge keeps
/// values such as 2.7 (stored as 2.69999...) from dropping a digit.
pub fn fixed4(x: f64) -> String {
    format!("{:.4}", ((x * 1e4) + 1e-7).floor() / 1e4)
}

fn constants_csv(header: &str, rows: &[InstanceConstants], hyper: bool) -> String {
    let mut out = format!("{header}\n");
    for r in rows {
        let (a, b) = if hyper {
            (r.c_a4.unwrap_or(f64::NAN), r.c_yao4.unwrap_or(f64::NAN))
        } else {
            (r.c_a1, r.c_yao)
        };
        writeln!(out, "{},{},{}", fixed4(r.alpha), fixed4(a), fixed4(b)).unwrap();
    }
    out
}

/// One of the cost tables as CSV.
pub fn table_csv(which: Table) -> String {
    match which {
        Table::F => {
            let mut out = String::from("alpha,l,g_l,g_l1,f\n");
            for p in cost::f_table() {
                let [a, gl, gl1, f] = [p.alpha, p.g_l, p.g_l1, p.f].map(fixed4);
                writeln!(out, "{a},{},{gl},{gl1},{f}", p.l_star).unwrap();
            }
            out
        }
        Table::Constants => constants_csv("alpha,c_a1,c_yao", &cost::constants_table(), false),
        Table::Hyper4 => constants_csv("alpha,c_a4,c_yao4", &cost::hyper4_table(), true),
    }
}

/// `c_A1` and `c_Yao` on a grid, as CSV.
pub fn plot_csv(from: f64, to: f64, step: f64) -> Result<String> {
    Ok(constants_csv("alpha,c_a1,c_yao", &cost::curve(from, to, step)?, false))
}
