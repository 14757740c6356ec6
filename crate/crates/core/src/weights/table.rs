//! Step-by-step weight tables for a given pair of actual and auxiliary allocation sequences,
//! laid out like the worked examples for the fully sequential regime.

use std::io::{Read, Write};

use serde::Deserialize;

use crate::auxiliary::AuxiliaryDesign;
use crate::design::TrialDesign;
use crate::error::{Error, Result};
use crate::sets::HypothesisSet;

use super::{compute_schedule, ScheduleStatus, SplitRule, SplitSide, WeightSchedule};

/// Ids accepted by [`appendix_example`].
pub const APPENDIX_IDS: [&str; 4] = ["appendixB1", "appendixB2", "appendixB3", "appendixB4"];

/// A fully sequential trial given by its allocations alone.
///
/// `auxiliary` holds one entry per patient; the last one may be `None`, meaning "the lowest
/// arm of whichever hypothesis is being tested".
#[derive(Clone, Debug, PartialEq)]
pub struct AllocationPairs {
    pub design: TrialDesign,
    pub actual: Vec<usize>,
    pub auxiliary: Vec<Option<usize>>,
    pub split: SplitRule,
}

impl AllocationPairs {
    /// Build pairs for a sequential design with `h` inferred from the largest arm index.
    pub fn sequential(
        n0: usize,
        burn_in: Vec<usize>,
        actual: Vec<usize>,
        auxiliary: Vec<Option<usize>>,
        split: SplitRule,
        alpha: f64,
    ) -> Result<Self> {
        if actual.len() != auxiliary.len() {
            return Err(Error::InvalidInput(format!(
                "{} actual allocations but {} auxiliary allocations",
                actual.len(),
                auxiliary.len()
            )));
        }
        let h = burn_in.len();
        let design = TrialDesign::sequential(h, actual.len(), n0, burn_in, alpha)?;
        if let Some(&a) = actual
            .iter()
            .chain(auxiliary.iter().flatten())
            .find(|&&a| a == 0 || a > h)
        {
            return Err(Error::InvalidInput(format!("arm {a} is outside 1..={h}")));
        }
        if auxiliary[..auxiliary.len() - 1].iter().any(Option::is_none) {
            return Err(Error::InvalidInput(
                "only the final auxiliary allocation may be left open".into(),
            ));
        }
        Ok(AllocationPairs {
            design,
            actual,
            auxiliary,
            split,
        })
    }

    /// Read a CSV with columns `index,actual_arm,auxiliary_arm`; the final auxiliary arm may be
    /// `*` or empty.
    pub fn read_csv<R: Read>(
        r: R,
        n0: usize,
        burn_in: Vec<usize>,
        split: SplitRule,
        alpha: f64,
    ) -> Result<Self> {
        #[derive(Deserialize)]
        struct Row {
            index: usize,
            actual_arm: usize,
            auxiliary_arm: String,
        }
        let mut rdr = csv::Reader::from_reader(r);
        let mut rows: Vec<Row> = Vec::new();
        for row in rdr.deserialize() {
            rows.push(row?);
        }
        rows.sort_by_key(|r| r.index);
        let actual = rows.iter().map(|r| r.actual_arm).collect();
        let auxiliary = rows
            .iter()
            .map(|r| match r.auxiliary_arm.trim() {
                "" | "*" => Ok(None),
                s => s.parse().map(Some).map_err(|_| {
                    Error::InvalidInput(format!("row {}: bad auxiliary arm `{s}`", r.index))
                }),
            })
            .collect::<Result<_>>()?;
        AllocationPairs::sequential(n0, burn_in, actual, auxiliary, split, alpha)
    }

    /// Auxiliary design used for `set`.
    pub fn auxiliary_for(&self, set: HypothesisSet) -> AuxiliaryDesign {
        let last = set.min_arm().expect("hypothesis sets are non-empty");
        let allocations = self.auxiliary.iter().map(|b| b.unwrap_or(last)).collect();
        AuxiliaryDesign::from_sequence(set, allocations)
    }
}

/// Weights of one elementary hypothesis across the sequence.
#[derive(Clone, Debug)]
pub struct WeightRow {
    pub arm: usize,
    pub schedule: WeightSchedule,
}

impl WeightRow {
    /// Weight applied to the first and last control observation.
    pub fn control_weights(&self) -> (Option<f64>, Option<f64>) {
        match self.schedule.final_split {
            Some(s) if s.side == SplitSide::Control => (Some(s.weights.0), Some(s.weights.1)),
            _ => {
                let w = self.schedule.control_weights.iter().rev().find_map(|w| *w);
                (w, w)
            }
        }
    }
}

/// Per-patient weights for every elementary hypothesis.
#[derive(Clone, Debug)]
pub struct WeightTable {
    pub pairs: AllocationPairs,
    pub rows: Vec<WeightRow>,
}

/// Compute the weight table for every elementary hypothesis of `pairs`.
pub fn weight_table(pairs: &AllocationPairs) -> Result<WeightTable> {
    let rows = (1..=pairs.design.h)
        .map(|arm| {
            let set = HypothesisSet::singleton(arm);
            let aux = pairs.auxiliary_for(set);
            let schedule = compute_schedule(&pairs.design, &pairs.actual, &aux, pairs.split)?;
            Ok(WeightRow { arm, schedule })
        })
        .collect::<Result<_>>()?;
    Ok(WeightTable {
        pairs: pairs.clone(),
        rows,
    })
}

impl WeightTable {
    /// Write rows `a`, `b`, `w(1)`, ..., `w(h)` with one column per patient followed by the
    /// first and last control weights. Undefined weights are written as `-`.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        let n = self.pairs.actual.len();
        let mut header = vec!["row".to_string()];
        header.extend((1..=n).map(|k| k.to_string()));
        header.extend([
            "control_first".to_string(),
            "control_last".to_string(),
            "status".to_string(),
        ]);
        wtr.write_record(&header)?;
        let blank = || vec![String::new(); 3];
        let mut a = vec!["a".to_string()];
        a.extend(self.pairs.actual.iter().map(|x| x.to_string()));
        a.extend(blank());
        wtr.write_record(&a)?;
        let mut b = vec!["b".to_string()];
        b.extend(
            self.pairs
                .auxiliary
                .iter()
                .map(|x| x.map_or("*".to_string(), |v| v.to_string())),
        );
        b.extend(blank());
        wtr.write_record(&b)?;
        for row in &self.rows {
            let mut rec = vec![format!("w({})", row.arm)];
            rec.extend(
                row.schedule
                    .treatment_weights
                    .iter()
                    .map(|w| fmt_weight(*w)),
            );
            let (first, last) = row.control_weights();
            rec.push(fmt_weight(first));
            rec.push(fmt_weight(last));
            rec.push(status_name(row.schedule.status).to_string());
            wtr.write_record(&rec)?;
        }
        wtr.flush()?;
        Ok(())
    }
}

fn fmt_weight(w: Option<f64>) -> String {
    match w {
        Some(x) if x.is_finite() => format!("{x:.4}"),
        Some(x) => format!("{x}"),
        None => "-".to_string(),
    }
}

fn status_name(s: ScheduleStatus) -> &'static str {
    match s {
        ScheduleStatus::Valid => "valid",
        ScheduleStatus::Imaginary => "imaginary",
        ScheduleStatus::Failed => "failed",
    }
}

/// The worked examples: `h = 2`, `n0 = 10`, `n = 11`, one burn-in patient per arm, an equal
/// randomization auxiliary design and control split (9, 1).
pub fn appendix_example(id: &str) -> Result<AllocationPairs> {
    let actual: [usize; 11] = match id {
        "appendixB1" => [1, 2, 2, 2, 1, 2, 2, 1, 2, 1, 2],
        "appendixB2" => [1, 2, 1, 2, 1, 1, 2, 2, 1, 2, 1],
        "appendixB3" => [1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        "appendixB4" => [1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
        _ => return Err(Error::UnknownPreset(id.to_string())),
    };
    let mut auxiliary: Vec<Option<usize>> = [1, 2, 2, 1, 2, 2, 1, 1, 2, 1]
        .into_iter()
        .map(Some)
        .collect();
    auxiliary.push(None);
    AllocationPairs::sequential(
        10,
        vec![1, 1],
        actual.to_vec(),
        auxiliary,
        SplitRule::Counts(9, 1),
        0.05,
    )
}
