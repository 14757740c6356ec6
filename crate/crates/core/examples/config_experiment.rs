//! Run an experiment described by a JSON configuration file.
//!
//! ```text
//! cargo run --release --example config_experiment -- crates/core/examples/configs/block_bar.json
//! ```

use raradapt::config::{ExperimentConfig, Overrides};
use raradapt::sim::run_experiment;

fn main() -> raradapt::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/examples/configs/sequential_inflator.json"
        )
        .into()
    });
    let mut cfg = ExperimentConfig::load(path.as_ref())?;
    cfg.apply(&Overrides {
        sims: Some(1_000),
        ..Default::default()
    });
    let exp = cfg.experiment()?;
    let res = run_experiment(&exp, cfg.run.workers.unwrap_or(0))?;
    println!("{path}: {} trials, seed {}", exp.n_sims, exp.seed);
    for &s in &exp.strategies {
        let show = |e: Option<raradapt::sim::Estimate>| {
            e.map_or("-".to_string(), |e| format!("{:.1}%", 100.0 * e.estimate))
        };
        println!(
            "{:<18} FWER {:>6}  power {:>6}",
            s.name(),
            show(res.fwer(s)),
            show(res.power(s))
        );
    }
    Ok(())
}
