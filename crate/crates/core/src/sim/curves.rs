//! Power as a function of a fixed allocation probability to treatment 2.

use std::io::Write;

use serde::Serialize;

use crate::design::{ScenarioSpec, TrialDesign};
use crate::error::{Error, Result};
use crate::rules::RuleSpec;
use crate::testing::Strategy;

use super::presets::Setting;
use super::{run_experiment, Estimate, Experiment, ExperimentResult};

/// A `p2` sweep: a two-arm design under the fixed rule `(1 − p2, p2)`.
#[derive(Clone, Debug)]
pub struct CurveSpec {
    pub id: String,
    pub design: TrialDesign,
    pub scenario: ScenarioSpec,
    pub grid: Vec<f64>,
    pub strategies: Vec<Strategy>,
    pub n_sims: u64,
    pub seed: u64,
}

/// Ids accepted by [`figure_preset`].
pub const FIGURE_IDS: [&str; 3] = ["figure1", "figure2", "figure3"];

fn grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    (0..=steps)
        .map(|i| lo + (hi - lo) * i as f64 / steps as f64)
        .collect()
}

/// Holm adaptive versus Holm z power curves: sequential with `δ = (0, 0.7)`, blocks with
/// `δ = (0, 0.5)`, and blocks with `δ = (0, 1)` over `p2 ∈ [0, 0.2]`.
pub fn figure_preset(id: &str, n_sims: u64, seed: u64) -> Result<CurveSpec> {
    let (setting, delta, grid) = match id {
        "figure1" => (Setting::Sequential, 0.7, grid(0.0, 1.0, 20)),
        "figure2" => (Setting::BlockFixed, 0.5, grid(0.0, 1.0, 20)),
        "figure3" => (Setting::BlockFixed, 1.0, grid(0.0, 0.2, 20)),
        _ => return Err(Error::UnknownPreset(id.to_string())),
    };
    Ok(CurveSpec {
        id: id.to_string(),
        design: setting.design(2)?,
        scenario: ScenarioSpec::new(0.0, vec![0.0, delta]),
        grid,
        strategies: vec![Strategy::AdaptiveHolm, Strategy::ZHolm],
        n_sims,
        seed,
    })
}

/// One grid point of a curve.
#[derive(Clone, Debug)]
pub struct CurvePoint {
    pub p2: f64,
    pub result: ExperimentResult,
}

#[derive(Clone, Debug)]
pub struct PowerCurve {
    pub id: String,
    pub strategies: Vec<Strategy>,
    pub points: Vec<CurvePoint>,
}

#[derive(Serialize)]
struct CurveRecord<'a> {
    figure: &'a str,
    p2: f64,
    strategy: &'a str,
    power: f64,
    se: f64,
    n_sims: u64,
    seed: u64,
}

impl PowerCurve {
    pub fn power(&self, point: usize, strategy: Strategy) -> Option<Estimate> {
        self.points.get(point)?.result.power(strategy)
    }

    /// Plot-ready CSV: `figure, p2, strategy, power, se, n_sims, seed`.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        for pt in &self.points {
            for &s in &self.strategies {
                if let Some(e) = pt.result.power(s) {
                    out.serialize(CurveRecord {
                        figure: &self.id,
                        p2: pt.p2,
                        strategy: s.name(),
                        power: e.estimate,
                        se: e.se,
                        n_sims: pt.result.n_sims,
                        seed: pt.result.seed,
                    })?;
                }
            }
        }
        out.flush()?;
        Ok(())
    }
}

/// Run the sweep. Every grid point reuses the same seed, so neighbouring points share
/// their outcome draws and the curve is smooth in `p2`.
pub fn power_curve(spec: &CurveSpec, workers: usize) -> Result<PowerCurve> {
    if spec.design.h != 2 {
        return Err(Error::Config(
            "power curves need exactly two treatments".into(),
        ));
    }
    let points = spec
        .grid
        .iter()
        .map(|&p2| {
            if !(0.0..=1.0).contains(&p2) {
                return Err(Error::Config(format!("p2 must lie in [0, 1], got {p2}")));
            }
            let mut exp = Experiment::new(
                spec.design.clone(),
                RuleSpec::fixed(vec![1.0 - p2, p2]),
                spec.scenario.clone(),
                spec.n_sims,
                spec.seed,
            );
            exp.strategies = spec.strategies.clone();
            Ok(CurvePoint {
                p2,
                result: run_experiment(&exp, workers)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PowerCurve {
        id: spec.id.clone(),
        strategies: spec.strategies.clone(),
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_grids() {
        let f = figure_preset("figure3", 10, 1).unwrap();
        assert_eq!(f.grid.len(), 21);
        assert!((f.grid[20] - 0.2).abs() < 1e-12);
        assert!(figure_preset("figure4", 10, 1).is_err());
    }

    #[test]
    fn equal_split_gives_close_powers() {
        let mut f = figure_preset("figure2", 400, 8).unwrap();
        f.grid = vec![0.5];
        let c = power_curve(&f, 2).unwrap();
        let a = c.power(0, Strategy::AdaptiveHolm).unwrap();
        let z = c.power(0, Strategy::ZHolm).unwrap();
        assert!((a.estimate - z.estimate).abs() < 0.1);
        let mut buf = Vec::new();
        c.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 3);
    }
}
