//! The three-arm cholesterol-lowering case study: one simulated block trial with BAR, its
//! data written to CSV, read back and analysed again.

use raradapt::sim::run_case_study;
use raradapt::testing::{analyze_trial, AnalysisOptions, Strategy};
use raradapt::TrialData;

fn main() -> raradapt::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2024);
    let cs = run_case_study(seed)?;
    print!("{}", cs.render());

    let mut csv = Vec::new();
    cs.trial.write_csv(&cs.design, &mut csv)?;
    let trial = TrialData::read_csv(&cs.design, csv.as_slice())?;
    let report = analyze_trial(&cs.design, &trial, &AnalysisOptions::new(0.05, 99))?;
    for s in [Strategy::AdaptiveHolm, Strategy::ZHolm] {
        println!("{} rejects {}", s.name(), report.rejections(s)?);
    }
    Ok(())
}
