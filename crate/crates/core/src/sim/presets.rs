//! Named experiment presets for the published error-rate, power and anomaly tables.
//!
//! Every table is a list of scenario rows sharing one design and rule. Row `r` uses seed
//! `derive_seed(seed, [r])`, so a known-variance table and its pooled-variance twin see the
//! same simulated trials.

use std::io::Write;

use crate::design::{ScenarioSpec, TrialDesign};
use crate::error::{Error, Result};
use crate::rules::{RuleParams, RuleSpec};
use crate::streams::derive_seed;
use crate::testing::{Strategy, VarianceMode};

use super::reference::{reference_rows, ReferenceRow};
use super::{result_records, run_experiment, Experiment, ExperimentResult, Metric};

/// Default replicate count per scenario row.
pub const DEFAULT_SIMS: u64 = 10_000;

/// Ids accepted by [`table_preset`].
pub const TABLE_IDS: [&str; 14] = [
    "table1", "table2", "table3", "table4", "tableE1", "tableE2", "tableE3", "tableE4", "tableE5",
    "tableE6", "tableE7", "tableE8", "tableE9", "tableE10",
];

/// What a table reports per strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    /// Familywise error and disjunctive power.
    ErrorPower,
    /// Percentage of trials with an imaginary or a negative treatment weight.
    Anomaly,
}

impl TableKind {
    pub fn metrics(self) -> [Metric; 2] {
        match self {
            TableKind::ErrorPower => [Metric::Fwer, Metric::Power],
            TableKind::Anomaly => [Metric::Imaginary, Metric::NegativeTreatment],
        }
    }

    fn metric_title(metric: Metric) -> &'static str {
        match metric {
            Metric::Fwer => "Error",
            Metric::Power => "Power",
            Metric::Imaginary => "Imaginary",
            Metric::NegativeTreatment => "Negative",
            Metric::NegativeControl => "Negative control",
            Metric::Failed => "Failed",
        }
    }
}

/// Trial setting shared by the rows of a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Setting {
    /// Fully sequential, 50 patients after a burn-in of 5 per arm, `n0 = 60/h`.
    Sequential,
    /// Blocks (40, 40, 40), control blocks (20, 20, 20), burn-in 5 per arm and control.
    BlockFixed,
    /// Blocks (50, 50, 50) including control, burn-in 5 per arm and control.
    BlockAdaptive,
}

impl Setting {
    pub fn design(self, h: usize) -> Result<TrialDesign> {
        match self {
            Setting::Sequential => TrialDesign::sequential(h, 5 * h + 50, 60 / h, vec![5; h], 0.05),
            Setting::BlockFixed => {
                TrialDesign::block_fixed(h, vec![5; h], 5, vec![40; 3], vec![20; 3], 0.05)
            }
            Setting::BlockAdaptive => {
                TrialDesign::block_adaptive_control(h, vec![5; h], 5, vec![50; 3], 0.05)
            }
        }
    }
}

/// One scenario row of a table.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub label: String,
    pub experiment: Experiment,
    pub reference: Option<&'static [Option<f64>]>,
}

/// A fully specified table.
#[derive(Clone, Debug)]
pub struct TablePreset {
    pub id: String,
    pub title: &'static str,
    pub kind: TableKind,
    pub setting: Setting,
    pub rule: RuleSpec,
    pub variance: VarianceMode,
    pub strategies: Vec<Strategy>,
    pub rows: Vec<TableRow>,
}

struct TableDef {
    title: &'static str,
    setting: Setting,
    rule: &'static str,
    kind: TableKind,
    pooled: bool,
}

fn table_def(id: &str) -> Option<TableDef> {
    use Setting::*;
    use TableKind::*;
    let (title, setting, rule, kind, pooled) = match id {
        "table1" => (
            "Type I error inflator, fully sequential",
            Sequential,
            "inflator",
            ErrorPower,
            false,
        ),
        "table2" => (
            "BAR, fully sequential",
            Sequential,
            "bar_yin",
            ErrorPower,
            false,
        ),
        "table3" => (
            "Type I error inflator, blocks with fixed control",
            BlockFixed,
            "inflator",
            ErrorPower,
            false,
        ),
        "table4" => (
            "BAR, blocks with fixed control",
            BlockFixed,
            "bar_wason",
            ErrorPower,
            false,
        ),
        "tableE1" => (
            "Type I error inflator, blocks with adaptive control",
            BlockAdaptive,
            "inflator",
            ErrorPower,
            false,
        ),
        "tableE2" => (
            "BAR, blocks with adaptive control",
            BlockAdaptive,
            "bar_adaptive_control",
            ErrorPower,
            false,
        ),
        "tableE3" => (
            "Weight anomalies, type I error inflator, adaptive control",
            BlockAdaptive,
            "inflator",
            Anomaly,
            false,
        ),
        "tableE4" => (
            "Weight anomalies, BAR, adaptive control",
            BlockAdaptive,
            "bar_adaptive_control",
            Anomaly,
            false,
        ),
        "tableE5" => (
            "Pooled variance: type I error inflator, fully sequential",
            Sequential,
            "inflator",
            ErrorPower,
            true,
        ),
        "tableE6" => (
            "Pooled variance: BAR, fully sequential",
            Sequential,
            "bar_yin",
            ErrorPower,
            true,
        ),
        "tableE7" => (
            "Pooled variance: type I error inflator, blocks with fixed control",
            BlockFixed,
            "inflator",
            ErrorPower,
            true,
        ),
        "tableE8" => (
            "Pooled variance: BAR, blocks with fixed control",
            BlockFixed,
            "bar_wason",
            ErrorPower,
            true,
        ),
        "tableE9" => (
            "Pooled variance: type I error inflator, blocks with adaptive control",
            BlockAdaptive,
            "inflator",
            ErrorPower,
            true,
        ),
        "tableE10" => (
            "Pooled variance: BAR, blocks with adaptive control",
            BlockAdaptive,
            "bar_adaptive_control",
            ErrorPower,
            true,
        ),
        _ => return None,
    };
    Some(TableDef {
        title,
        setting,
        rule,
        kind,
        pooled,
    })
}

/// Human-readable effect vector, e.g. `δ = (0, 0.5, 1)`.
pub fn scenario_label(deltas: &[f64]) -> String {
    let parts: Vec<String> = deltas.iter().map(|d| format!("{d}")).collect();
    format!("δ = ({})", parts.join(", "))
}

/// Build the preset for `id` with `n_sims` replicates per row.
pub fn table_preset(id: &str, n_sims: u64, seed: u64) -> Result<TablePreset> {
    let def = table_def(id).ok_or_else(|| Error::UnknownPreset(id.to_string()))?;
    let rows_ref: &[ReferenceRow] =
        reference_rows(id).ok_or_else(|| Error::UnknownPreset(id.to_string()))?;
    let rule = RuleSpec::new(def.rule, RuleParams::default());
    let variance = if def.pooled {
        VarianceMode::Pooled
    } else {
        VarianceMode::default()
    };
    let strategies = match def.kind {
        TableKind::ErrorPower => Strategy::HEADLINE.to_vec(),
        TableKind::Anomaly => vec![Strategy::AdaptiveClosed, Strategy::AdaptiveHolm],
    };
    let mut rows = Vec::with_capacity(rows_ref.len());
    for (r, row) in rows_ref.iter().enumerate() {
        let design = def.setting.design(row.deltas.len())?;
        let scenario = ScenarioSpec::new(0.0, row.deltas.to_vec());
        let mut exp = Experiment::new(
            design,
            rule.clone(),
            scenario,
            n_sims,
            derive_seed(seed, &[r as u64]),
        );
        exp.strategies = strategies.clone();
        exp.variance = variance;
        rows.push(TableRow {
            label: scenario_label(row.deltas),
            experiment: exp,
            reference: Some(row.values),
        });
    }
    Ok(TablePreset {
        id: id.to_string(),
        title: def.title,
        kind: def.kind,
        setting: def.setting,
        rule,
        variance,
        strategies,
        rows,
    })
}

/// Inflation example: fully sequential inflator with `h = 2`, `n = n0 = 60`, burn-in 5 per
/// arm and `δ = (0, 1)`. The `z_unadjusted` familywise error is the type I error of the naive
/// test of `H_1` on its own.
pub fn inflation_experiment(n_sims: u64, seed: u64) -> Result<Experiment> {
    let design = TrialDesign::sequential(2, 60, 60, vec![5, 5], 0.05)?;
    let mut exp = Experiment::new(
        design,
        RuleSpec::inflator(),
        ScenarioSpec::new(0.0, vec![0.0, 1.0]),
        n_sims,
        seed,
    );
    exp.strategies = vec![
        Strategy::ZUnadjusted,
        Strategy::AdaptiveUnadjusted,
        Strategy::ZBonferroni,
        Strategy::ZHolm,
        Strategy::AdaptiveHolm,
    ];
    Ok(exp)
}

/// A preset together with one result per row.
#[derive(Clone, Debug)]
pub struct TableRun {
    pub preset: TablePreset,
    pub results: Vec<ExperimentResult>,
}

/// Run every row of a preset.
pub fn run_table(preset: TablePreset, workers: usize) -> Result<TableRun> {
    let results = preset
        .rows
        .iter()
        .map(|row| run_experiment(&row.experiment, workers))
        .collect::<Result<Vec<_>>>()?;
    Ok(TableRun { preset, results })
}

/// Build and run the preset for `id`.
pub fn reproduce_table(id: &str, n_sims: u64, seed: u64, workers: usize) -> Result<TableRun> {
    run_table(table_preset(id, n_sims, seed)?, workers)
}

impl TableRun {
    /// `(strategy, metric)` pairs in column order.
    pub fn columns(&self) -> Vec<(Strategy, Metric)> {
        let metrics = self.preset.kind.metrics();
        self.preset
            .strategies
            .iter()
            .flat_map(|&s| metrics.iter().map(move |&m| (s, m)))
            .collect()
    }

    /// Simulated percentage for row `row` and column `col`; `None` where undefined.
    pub fn percent(&self, row: usize, col: usize) -> Option<f64> {
        let (s, m) = self.columns()[col];
        self.results[row].metric(s, m).map(|e| 100.0 * e.estimate)
    }

    /// Reference percentage for row `row` and column `col`.
    pub fn reference(&self, row: usize, col: usize) -> Option<f64> {
        self.preset.rows[row]
            .reference
            .and_then(|v| v.get(col).copied().flatten())
    }

    /// Table layout: one line per scenario, each column followed by its reference value and
    /// the simulated-minus-reference difference, all in percent.
    pub fn write_layout_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        let decimals = match self.preset.kind {
            TableKind::ErrorPower => 1,
            TableKind::Anomaly => 2,
        };
        let columns = self.columns();
        let mut header = vec!["Scenario".to_string(), "Parameter values".to_string()];
        for (s, m) in &columns {
            let name = format!("{} {}", s.title(), TableKind::metric_title(*m));
            header.push(name.clone());
            header.push(format!("{name} (reference)"));
            header.push(format!("{name} (diff)"));
        }
        out.write_record(&header)?;
        let fmt =
            |v: Option<f64>, d: usize| v.map_or_else(|| "-".to_string(), |x| format!("{x:.d$}"));
        for (r, row) in self.preset.rows.iter().enumerate() {
            let mut rec = vec![(r + 1).to_string(), row.label.clone()];
            for c in 0..columns.len() {
                let sim = self.percent(r, c);
                let reference = self.reference(r, c);
                let diff = sim.zip(reference).map(|(a, b)| a - b);
                rec.push(fmt(sim, decimals));
                rec.push(fmt(reference, decimals));
                rec.push(fmt(diff, decimals));
            }
            out.write_record(&rec)?;
        }
        out.flush()?;
        Ok(())
    }

    /// Plain-text rendering: one line per scenario with `simulated(reference)` percentages.
    pub fn render(&self) -> String {
        let mut out = format!("{}: {}\n", self.preset.id, self.preset.title);
        let columns = self.columns();
        let head: Vec<String> = columns
            .iter()
            .map(|(s, m)| {
                format!(
                    "{} {}",
                    s.name(),
                    TableKind::metric_title(*m).to_lowercase()
                )
            })
            .collect();
        out += &format!("columns: {}\n", head.join(" | "));
        for (r, row) in self.preset.rows.iter().enumerate() {
            out += &format!("{:>2}. {:<22}", r + 1, row.label);
            for c in 0..columns.len() {
                out += &match (self.percent(r, c), self.reference(r, c)) {
                    (Some(x), Some(y)) if self.preset.kind == TableKind::Anomaly => {
                        format!(" {x:5.2}({y:5.2})")
                    }
                    (Some(x), Some(y)) => format!(" {x:5.1}({y:4.1})"),
                    (Some(x), None) => format!(" {x:5.1}(  - )"),
                    _ => "      -     ".to_string(),
                };
            }
            out.push('\n');
        }
        out
    }

    /// Long-format results: `table, scenario, strategy, metric, estimate, se, n_sims, seed`.
    pub fn write_results_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        for (r, res) in self.results.iter().enumerate() {
            for rec in result_records(&self.preset.id, &(r + 1).to_string(), res) {
                out.serialize(rec)?;
            }
        }
        out.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_id_builds() {
        for id in TABLE_IDS {
            let p = table_preset(id, 10, 1).unwrap();
            assert_eq!(p.rows.len(), 8, "{id}");
            for row in &p.rows {
                row.experiment.validate().unwrap();
                row.experiment.rule.build(&row.experiment.design).unwrap();
            }
        }
        assert!(matches!(
            table_preset("table9", 10, 1),
            Err(Error::UnknownPreset(_))
        ));
    }

    #[test]
    fn inflation_design() {
        let e = inflation_experiment(10, 1).unwrap();
        assert_eq!((e.design.n, e.design.n0), (60, 60));
        assert_eq!(e.strategies[0], Strategy::ZUnadjusted);
        e.validate().unwrap();
    }

    #[test]
    fn sample_sizes() {
        let d = Setting::Sequential.design(2).unwrap();
        assert_eq!((d.n, d.n0), (60, 30));
        let d = Setting::BlockFixed.design(3).unwrap();
        assert_eq!((d.n, d.n0), (135, 65));
        let d = Setting::BlockAdaptive.design(2).unwrap();
        assert_eq!(d.n, 165);
    }

    #[test]
    fn pooled_twin_shares_seeds() {
        let a = table_preset("table1", 10, 4).unwrap();
        let b = table_preset("tableE5", 10, 4).unwrap();
        for (x, y) in a.rows.iter().zip(&b.rows) {
            assert_eq!(x.experiment.seed, y.experiment.seed);
            assert_eq!(x.experiment.scenario, y.experiment.scenario);
        }
        assert_eq!(b.variance, VarianceMode::Pooled);
    }

    #[test]
    fn layout_has_reference_and_diff() {
        let mut p = table_preset("table1", 20, 4).unwrap();
        p.rows.truncate(2);
        let run = run_table(p, 1).unwrap();
        let mut buf = Vec::new();
        run.write_layout_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let header = text.lines().next().unwrap();
        assert!(header.starts_with("Scenario,Parameter values,Adaptive closed test Error,"));
        assert!(header.contains("z-test (Bonferroni) Power (diff)"));
        assert_eq!(text.lines().count(), 3);
    }
}
