use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mediocre::cost::lower_bound;
use mediocre_cli::{
    bench, bench_fr_median, plot_csv, run_row, run_trial, stats_row, table_csv, threads_from_env, Algo, Exact, RunSpec,
    Table, RUN_HEADER, STATS_HEADER,
};

const USAGE: u8 = 2;
const MONTE_CARLO_FAIL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "mediocre",
    version,
    about = "Comparison-counted selection of mediocre elements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Baseline {
    /// Floyd-Rivest for the exact median of the same i+j+1 elements.
    FrMedian,
}

#[derive(clap::Args)]
struct Target {
    #[arg(long, value_enum)]
    algo: Algo,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    i: usize,
    #[arg(long)]
    j: usize,
    /// Group size, for `--algo hyper` only.
    #[arg(long)]
    g: Option<usize>,
    /// Exact selector; defaults to `adaptive` for a2/a2lv and `mom` otherwise.
    #[arg(long, value_enum)]
    exact: Option<Exact>,
}

impl Target {
    fn spec(&self) -> RunSpec {
        RunSpec {
            algo: self.algo,
            n: self.n,
            i: self.i,
            j: self.j,
            g: self.g,
            exact: self.exact.map(Into::into).unwrap_or_else(|| self.algo.default_exact()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a cost table.
    Table {
        #[arg(long, value_enum)]
        which: Table,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run one algorithm once on a seeded random instance.
    Run {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Average comparisons over seeds seed_base, seed_base + 1, ...
    Bench {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed_base: u64,
        #[arg(long, value_enum)]
        baseline: Option<Baseline>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Information-theoretic lower bound for an (i, j)-mediocre element.
    LowerBound {
        #[arg(long)]
        i: u64,
        #[arg(long)]
        j: u64,
    },
    /// c_A1 and c_Yao on an alpha grid.
    PlotData {
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        step: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Table {
            which,
            format: Format::Csv,
        } => {
            print!("{}", table_csv(which));
            ExitCode::SUCCESS
        }
        Command::Run {
            target,
            seed,
            format: Format::Csv,
        } => {
            let spec = target.spec();
            if let Err(e) = spec.validate() {
                return fail(e);
            }
            let trial = match run_trial(&spec, seed) {
                Ok(t) => t,
                Err(e) => return fail(e),
            };
            println!("{RUN_HEADER}");
            println!("{}", run_row(&spec, &trial));
            if trial.failed {
                eprintln!(
                    "FAIL: no mediocre element certified (repetitions = {})",
                    trial.repetitions
                );
                ExitCode::from(MONTE_CARLO_FAIL)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Bench {
            target,
            trials,
            seed_base,
            baseline,
            format: Format::Csv,
        } => {
            let threads = match threads_from_env() {
                Ok(t) => t,
                Err(e) => return fail(e),
            };
            let spec = target.spec();
            let mut rows = match bench(&spec, trials, seed_base, threads) {
                Ok(s) => vec![s],
                Err(e) => return fail(e),
            };
            if let Some(Baseline::FrMedian) = baseline {
                match bench_fr_median(&spec, trials, seed_base, threads) {
                    Ok(s) => rows.push(s),
                    Err(e) => return fail(e),
                }
            }
            println!("{STATS_HEADER}");
            for r in &rows {
                println!("{}", stats_row(r));
            }
            ExitCode::SUCCESS
        }
        Command::LowerBound { i, j } => match lower_bound(i, j) {
            Ok(b) => {
                println!("{b}");
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
        Command::PlotData {
            from,
            to,
            step,
            format: Format::Csv,
        } => match plot_csv(from, to, step) {
            Ok(csv) => {
                print!("{csv}");
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
    }
}
