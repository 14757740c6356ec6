//! Weight tables for small fully sequential trials.
//!
//! Prints the built-in worked examples, then a custom pair of sequences where the actual
//! allocation drifts towards arm 2.
//!
//! ```text
//! cargo run --example worked_example_weights
//! ```

use raradapt::weights::{appendix_example, weight_table, AllocationPairs, SplitRule, APPENDIX_IDS};

fn main() -> raradapt::Result<()> {
    for id in APPENDIX_IDS {
        println!("{id}");
        weight_table(&appendix_example(id)?)?.write_csv(std::io::stdout())?;
        println!();
    }

    // Burn-in of two per arm and twelve controls; the final auxiliary slot stays open and is
    // filled with the tested arm.
    let actual = vec![1, 1, 2, 2, 1, 2, 2, 2, 2, 2, 1, 2];
    let auxiliary = [1, 1, 2, 2, 1, 2, 1, 2, 1, 2, 1]
        .into_iter()
        .map(Some)
        .chain([None])
        .collect();
    let pairs = AllocationPairs::sequential(
        12,
        vec![2, 2],
        actual,
        auxiliary,
        SplitRule::Trailing(1),
        0.05,
    )?;
    let table = weight_table(&pairs)?;
    for row in &table.rows {
        let (first, last) = row.control_weights();
        println!(
            "H_{}: status {:?}, final treatment weight {:?}, control weights {:?} / {:?}",
            row.arm,
            row.schedule.status,
            row.schedule.treatment_weights.last().copied().flatten(),
            first,
            last
        );
    }
    Ok(())
}
