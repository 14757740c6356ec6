//! Results depend on the seed alone, not on the number of workers or on repeated runs.

use std::process::Command;

use raradapt::sim::{reproduce_table, run_experiment, table_preset};

#[test]
fn worker_count_does_not_change_results() {
    let preset = table_preset("table2", 200, 9).unwrap();
    for row in preset.rows.iter().take(2) {
        let one = run_experiment(&row.experiment, 1).unwrap();
        let three = run_experiment(&row.experiment, 3).unwrap();
        assert_eq!(one.counts, three.counts);
    }
}

#[test]
fn same_seed_same_table() {
    let a = reproduce_table("table1", 100, 3, 2).unwrap();
    let b = reproduce_table("table1", 100, 3, 4).unwrap();
    assert_eq!(a.render(), b.render());
    let c = reproduce_table("table1", 100, 4, 2).unwrap();
    assert_ne!(a.render(), c.render());
}

fn cli_output(workers: &str) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_raradapt"))
        .args(["--sims", "100", "--seed", "7", "--workers", workers])
        .args([
            "simulate",
            concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/configs/block_bar.json"
            ),
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

#[test]
fn cli_runs_are_byte_identical() {
    let first = cli_output("1");
    assert!(!first.is_empty());
    assert_eq!(first, cli_output("1"));
    assert_eq!(first, cli_output("3"));
}
