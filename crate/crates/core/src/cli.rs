//! Command-line interface: `simulate`, `reproduce`, `weights` and `analyze`.
//!
//! Exit codes: 0 on success, 2 for configuration or input errors, 3 for runtime failures.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::config::{ExperimentConfig, Overrides, VarianceName};
use crate::error::{Error, Result};
use crate::sim::{
    figure_preset, inflation_experiment, power_curve, result_records, run_case_study,
    run_experiment, run_table, table_preset, DEFAULT_SIMS, FIGURE_IDS, TABLE_IDS, WORKERS_ENV,
};
use crate::testing::{analyze_trial, Strategy};
use crate::trial::TrialData;
use crate::weights::{appendix_example, weight_table, AllocationPairs, SplitRule, APPENDIX_IDS};

const DEFAULT_SEED: u64 = 2024;

#[derive(Debug, Parser)]
#[command(
    name = "raradapt",
    version,
    about = "Familywise-error-controlling adaptive tests for response-adaptive trials"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Base random seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Simulated trials per scenario.
    #[arg(long, global = true)]
    pub sims: Option<u64>,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, env = WORKERS_ENV)]
    pub workers: Option<usize>,
    /// Output directory (or file, for `weights`); standard output when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Significance level.
    #[arg(long, global = true)]
    pub alpha: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the experiment described by a JSON configuration file.
    Simulate {
        config: PathBuf,
        /// Also write the data and analysis of the first K replicates.
        #[arg(long, default_value_t = 0)]
        emit_trials: u64,
    },
    /// Rerun a named preset: table1..table4, tableE1..tableE10, figure1..figure3, table5,
    /// inflation, appendixB1..appendixB4.
    Reproduce { id: String },
    /// Weight table for a sequence of actual and auxiliary allocations.
    Weights(WeightsArgs),
    /// Analyse trial data supplied as CSV (`index,block,arm,outcome`).
    Analyze {
        data: PathBuf,
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum)]
        variance: Option<VarianceArg>,
        /// Comma-separated strategy names, overriding the configuration.
        #[arg(long, value_delimiter = ',')]
        strategies: Option<Vec<String>>,
        /// Replicate index whose auxiliary designs are used.
        #[arg(long, default_value_t = 0)]
        replicate: u64,
    },
}

#[derive(Debug, Args)]
pub struct WeightsArgs {
    /// Worked example id (appendixB1..appendixB4).
    #[arg(long, conflicts_with = "pairs")]
    pub preset: Option<String>,
    /// CSV with columns `index,actual_arm,auxiliary_arm`.
    #[arg(long, requires = "n0")]
    pub pairs: Option<PathBuf>,
    #[arg(long)]
    pub n0: Option<usize>,
    /// Burn-in per arm, e.g. `1,1`.
    #[arg(long, value_delimiter = ',')]
    pub burn_in: Option<Vec<usize>>,
    /// Control split `a,b` (explicit counts) or a single `k` for `(n0 − k, k)`.
    #[arg(long, value_delimiter = ',')]
    pub split: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VarianceArg {
    Known,
    Pooled,
}

/// Parse arguments, run, print any error and map it to an exit code.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// 2 for anything the user can fix in the input, 3 otherwise.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Config(_)
        | Error::UnknownPreset(_)
        | Error::InvalidDesign(_)
        | Error::InvalidScenario(_)
        | Error::IncompatibleRule { .. }
        | Error::InvalidInput(_)
        | Error::Csv(_)
        | Error::Json(_) => 2,
        Error::InvalidRule { .. } | Error::Internal(_) | Error::Domain(_) | Error::Io(_) => 3,
    }
}

pub fn run(cli: Cli) -> Result<()> {
    let g = &cli.global;
    match &cli.command {
        Command::Simulate {
            config,
            emit_trials,
        } => simulate(g, config, *emit_trials),
        Command::Reproduce { id } => reproduce(g, id),
        Command::Weights(args) => weights(g, args),
        Command::Analyze {
            data,
            config,
            variance,
            strategies,
            replicate,
        } => analyze(
            g,
            data,
            config,
            *variance,
            strategies.as_deref(),
            *replicate,
        ),
    }
}

fn overrides(g: &GlobalArgs) -> Overrides {
    Overrides {
        seed: g.seed,
        sims: g.sims,
        workers: g.workers,
        alpha: g.alpha,
    }
}

fn workers(g: &GlobalArgs) -> usize {
    g.workers.unwrap_or(0)
}

/// Where outputs go: files in a directory, or standard output.
struct Sink {
    dir: Option<PathBuf>,
    written: Vec<String>,
}

impl Sink {
    fn new(dir: Option<&Path>) -> Result<Self> {
        if let Some(d) = dir {
            std::fs::create_dir_all(d)?;
        }
        Ok(Sink {
            dir: dir.map(Path::to_path_buf),
            written: Vec::new(),
        })
    }

    /// Write `name` into the directory, or to stdout when `echo` and there is no directory.
    fn emit(
        &mut self,
        name: &str,
        echo: bool,
        f: impl FnOnce(&mut dyn Write) -> Result<()>,
    ) -> Result<()> {
        match &self.dir {
            Some(d) => {
                let path = d.join(name);
                let mut w = BufWriter::new(File::create(&path)?);
                f(&mut w)?;
                w.flush()?;
                self.written.push(path.display().to_string());
            }
            None if echo => {
                let stdout = io::stdout();
                let mut lock = stdout.lock();
                f(&mut lock)?;
            }
            None => {}
        }
        Ok(())
    }

    fn manifest(&mut self, name: &str, mut value: serde_json::Value) -> Result<()> {
        if self.dir.is_some() {
            value["outputs"] = json!(self.written.clone());
            self.emit(name, false, |w| {
                serde_json::to_writer_pretty(&mut *w, &value)?;
                writeln!(w)?;
                Ok(())
            })?;
        }
        Ok(())
    }
}

fn simulate(g: &GlobalArgs, path: &Path, emit_trials: u64) -> Result<()> {
    let mut cfg = ExperimentConfig::load(path)?;
    cfg.apply(&overrides(g));
    let exp = cfg.experiment()?;
    let workers = cfg.run.workers.unwrap_or(0);
    let result = run_experiment(&exp, workers)?;
    let mut sink = Sink::new(g.out.as_deref())?;
    let scenario = path
        .file_stem()
        .map_or("experiment".into(), |s| s.to_string_lossy().into_owned());
    sink.emit("results.csv", true, |w| {
        let mut wtr = csv::Writer::from_writer(w);
        for rec in result_records("simulate", &scenario, &result) {
            wtr.serialize(rec)?;
        }
        wtr.flush()?;
        Ok(())
    })?;
    for i in 0..emit_trials.min(exp.n_sims) {
        let (trial, report) = exp.replicate(i)?;
        sink.emit(&format!("trial_{i}.csv"), false, |w| {
            trial.write_csv(&exp.design, w)
        })?;
        sink.emit(&format!("report_{i}.csv"), false, |w| {
            report.write_csv(w, &exp.strategies)
        })?;
    }
    sink.manifest(
        "manifest.json",
        json!({
            "command": "simulate",
            "version": env!("CARGO_PKG_VERSION"),
            "config": cfg,
            "seed": exp.seed,
            "sims": exp.n_sims,
            "workers": workers,
            "wall_clock_secs": result.wall_clock.as_secs_f64(),
        }),
    )?;
    if g.out.is_some() {
        for &s in &exp.strategies {
            let fmt = |m: Option<crate::sim::Estimate>| {
                m.map_or("-".into(), |e| format!("{:.4}", e.estimate))
            };
            println!(
                "{:<22} fwer {:>8}  power {:>8}",
                s.name(),
                fmt(result.fwer(s)),
                fmt(result.power(s))
            );
        }
    }
    Ok(())
}

fn reproduce(g: &GlobalArgs, id: &str) -> Result<()> {
    let sims = g.sims.unwrap_or(DEFAULT_SIMS);
    let seed = g.seed.unwrap_or(DEFAULT_SEED);
    let workers = workers(g);
    if let Some(a) = g.alpha {
        if a != 0.05 {
            return Err(Error::Config(
                "presets use α = 0.05; --alpha applies to simulate and analyze".into(),
            ));
        }
    }
    let started = Instant::now();
    let mut sink = Sink::new(g.out.as_deref())?;
    if TABLE_IDS.contains(&id) {
        let run = run_table(table_preset(id, sims, seed)?, workers)?;
        print!("{}", run.render());
        sink.emit(&format!("{id}.csv"), false, |w| run.write_layout_csv(w))?;
        sink.emit(&format!("{id}_results.csv"), false, |w| {
            run.write_results_csv(w)
        })?;
    } else if FIGURE_IDS.contains(&id) {
        let curve = power_curve(&figure_preset(id, sims, seed)?, workers)?;
        sink.emit(&format!("{id}.csv"), true, |w| curve.write_csv(w))?;
    } else if id == "table5" {
        let cs = run_case_study(seed)?;
        print!("{}", cs.render());
        sink.emit("table5.csv", false, |w| cs.write_csv(w))?;
        sink.emit("table5_trial.csv", false, |w| {
            cs.trial.write_csv(&cs.design, w)
        })?;
    } else if id == "inflation" {
        let exp = inflation_experiment(sims, seed)?;
        let result = run_experiment(&exp, workers)?;
        let e = result
            .fwer(Strategy::ZUnadjusted)
            .expect("H_1 is a true null");
        println!(
            "type I error of the naive test of H_1: {:.2}% (SE {:.2}) over {} trials",
            100.0 * e.estimate,
            100.0 * e.se,
            sims
        );
        sink.emit("inflation_results.csv", false, |w| {
            let mut wtr = csv::Writer::from_writer(w);
            for rec in result_records("inflation", "δ = (0, 1)", &result) {
                wtr.serialize(rec)?;
            }
            wtr.flush()?;
            Ok(())
        })?;
    } else if APPENDIX_IDS.contains(&id) {
        let table = weight_table(&appendix_example(id)?)?;
        sink.emit(&format!("{id}.csv"), true, |w| table.write_csv(w))?;
    } else {
        return Err(Error::UnknownPreset(id.to_string()));
    }
    sink.manifest(
        &format!("{id}_manifest.json"),
        json!({
            "command": "reproduce",
            "version": env!("CARGO_PKG_VERSION"),
            "id": id,
            "seed": seed,
            "sims": sims,
            "workers": workers,
            "wall_clock_secs": started.elapsed().as_secs_f64(),
        }),
    )
}

fn split_arg(v: Option<&[usize]>) -> Result<SplitRule> {
    match v {
        None => Ok(SplitRule::default()),
        Some([k]) => Ok(SplitRule::Trailing(*k)),
        Some([a, b]) => Ok(SplitRule::Counts(*a, *b)),
        Some(other) => Err(Error::Config(format!(
            "--split takes one or two counts, got {other:?}"
        ))),
    }
}

fn weights(g: &GlobalArgs, args: &WeightsArgs) -> Result<()> {
    let alpha = g.alpha.unwrap_or(0.05);
    let pairs = match (&args.preset, &args.pairs) {
        (Some(id), None) => appendix_example(id)?,
        (None, Some(path)) => {
            let n0 = args
                .n0
                .ok_or_else(|| Error::Config("--n0 is required with --pairs".into()))?;
            let burn_in = args
                .burn_in
                .clone()
                .ok_or_else(|| Error::Config("--burn-in is required with --pairs".into()))?;
            let file = File::open(path)
                .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
            AllocationPairs::read_csv(file, n0, burn_in, split_arg(args.split.as_deref())?, alpha)?
        }
        _ => return Err(Error::Config("give either --preset or --pairs".into())),
    };
    let table = weight_table(&pairs)?;
    match &g.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            table.write_csv(&mut w)?;
            w.flush()?;
        }
        None => table.write_csv(io::stdout().lock())?,
    }
    Ok(())
}

fn analyze(
    g: &GlobalArgs,
    data: &Path,
    config: &Path,
    variance: Option<VarianceArg>,
    strategies: Option<&[String]>,
    replicate: u64,
) -> Result<()> {
    let mut cfg = ExperimentConfig::load(config)?;
    cfg.apply(&overrides(g));
    if let Some(v) = variance {
        cfg.testing.variance_mode = match v {
            VarianceArg::Known => VarianceName::Known,
            VarianceArg::Pooled => VarianceName::Pooled,
        };
    }
    if let Some(names) = strategies {
        cfg.testing.strategies = names
            .iter()
            .map(|n| {
                Strategy::parse(n.trim())
                    .ok_or_else(|| Error::Config(format!("unknown strategy `{n}`")))
            })
            .collect::<Result<_>>()?;
    }
    let design = cfg.design()?;
    let file = File::open(data)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", data.display())))?;
    let trial = TrialData::read_csv(&design, file)?;
    let opts = cfg.analysis_options(replicate)?;
    let report = analyze_trial(&design, &trial, &opts)?;
    let mut sink = Sink::new(g.out.as_deref())?;
    sink.emit("report.csv", true, |w| {
        report.write_csv(w, &cfg.testing.strategies)
    })?;
    let rejections = cfg
        .testing
        .strategies
        .iter()
        .map(|&s| {
            Ok((
                s.name().to_string(),
                json!(report.rejections(s)?.arms().collect::<Vec<_>>()),
            ))
        })
        .collect::<Result<serde_json::Map<_, _>>>()?;
    let hypotheses: Vec<_> = report.tested_sets().collect();
    sink.emit("summary.json", false, |w| {
        let value = json!({
            "data": data.display().to_string(),
            "h": report.h,
            "alpha": report.alpha,
            "variance": report.variance,
            "sigma_hat": report.sigma_hat,
            "replicate": replicate,
            "seed": cfg.run.seed,
            "rejections": rejections,
            "hypotheses": hypotheses,
        });
        serde_json::to_writer_pretty(&mut *w, &value)?;
        writeln!(w)?;
        Ok(())
    })?;
    Ok(())
}
