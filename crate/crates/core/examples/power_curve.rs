//! Power of the Holm adaptive and Holm z-tests as the fixed probability of arm 2 varies.

use raradapt::sim::{figure_preset, power_curve};
use raradapt::testing::Strategy;

fn main() -> raradapt::Result<()> {
    let id = std::env::args().nth(1).unwrap_or_else(|| "figure2".into());
    let mut spec = figure_preset(&id, 2_000, 7)?;
    spec.grid = spec.grid.iter().copied().step_by(4).collect();
    let curve = power_curve(&spec, 0)?;
    println!("{:>6} {:>14} {:>10}", "p2", "Holm adaptive", "Holm z");
    for point in &curve.points {
        let p = |s| 100.0 * point.result.power(s).map_or(f64::NAN, |e| e.estimate);
        println!(
            "{:>6.2} {:>13.1}% {:>9.1}%",
            point.p2,
            p(Strategy::AdaptiveHolm),
            p(Strategy::ZHolm)
        );
    }
    Ok(())
}
