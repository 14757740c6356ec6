//! Reproduce one of the standard scenario tables and print it next to the reference values.
//!
//! ```text
//! cargo run --release --example reproduce_table -- table3 20000
//! ```

use raradapt::sim::{reproduce_table, TableKind};

fn main() -> raradapt::Result<()> {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "table1".to_string());
    let sims: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(10_000);

    let run = reproduce_table(&id, sims, 2024, 0)?;
    println!(
        "{}: {} ({} trials per row)",
        run.preset.id, run.preset.title, sims
    );
    let columns = run.columns();
    for (r, row) in run.preset.rows.iter().enumerate() {
        print!("{:>2}. {:<22}", r + 1, row.label);
        for c in 0..columns.len() {
            match (run.percent(r, c), run.reference(r, c)) {
                (Some(x), Some(y)) if run.preset.kind == TableKind::Anomaly => {
                    print!(" {x:5.2}({y:5.2})")
                }
                (Some(x), Some(y)) => print!(" {x:5.1}({y:4.1})"),
                _ => print!("      -     "),
            }
        }
        println!();
    }
    let secs: f64 = run.results.iter().map(|r| r.wall_clock.as_secs_f64()).sum();
    println!("simulated(reference) in percent; {secs:.1} s");
    Ok(())
}
