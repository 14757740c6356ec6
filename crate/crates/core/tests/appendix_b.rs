//! Every printed weight of the four worked sequential examples, to two decimals.

use raradapt::weights::{appendix_example, weight_table};

const NA: f64 = f64::NAN;

struct Expected {
    id: &'static str,
    w1: [f64; 11],
    w2: [f64; 11],
    control1: (f64, f64),
    control2: (f64, f64),
}

fn expected() -> Vec<Expected> {
    vec![
        Expected {
            id: "appendixB1",
            w1: [6.0, 6.0, 6.0, 5.16, 6.0, 6.0, 4.94, 4.94, 4.94, 4.94, NA],
            w2: [
                6.0, 6.0, 6.0, 7.01, 5.74, 5.74, 7.63, 7.63, 7.63, 7.63, 7.63,
            ],
            control1: (9.74, -5.38),
            control2: (9.58, 9.58),
        },
        Expected {
            id: "appendixB2",
            w1: [
                6.0, 6.0, 6.81, 5.83, 6.81, 8.0, 6.51, 4.94, 6.51, 4.09, 4.09,
            ],
            w2: [6.0, 6.0, 5.16, 6.0, 4.94, 3.81, 4.94, 6.51, 4.10, 6.51, NA],
            control1: (10.17, 10.17),
            control2: (9.23, -7.59),
        },
        Expected {
            id: "appendixB3",
            w1: [
                6.0, 6.0, 6.81, 6.81, 8.0, 9.45, 9.45, 9.45, 12.95, 12.95, 12.95,
            ],
            w2: [6.0, 6.0, 5.16, 5.16, 4.28, 3.33, 3.33, 3.33, 2.23, 2.23, NA],
            control1: (8.82, 8.82),
            control2: (14.73, -2.25),
        },
        Expected {
            id: "appendixB4",
            w1: [6.0, 6.0, 6.0, 5.16, 5.16, 5.16, 4.28, 3.33, 3.33, 2.23, NA],
            w2: [
                6.0, 6.0, 6.0, 7.01, 7.01, 7.01, 9.44, 12.91, 12.91, 22.89, 22.89,
            ],
            control1: (14.73, -2.25),
            control2: (9.01, 9.01),
        },
    ]
}

fn close(got: Option<f64>, want: f64) -> bool {
    match got {
        None => want.is_nan(),
        Some(x) => (x - want).abs() <= 0.01,
    }
}

#[test]
fn worked_examples_match_to_two_decimals() {
    for e in expected() {
        let table = weight_table(&appendix_example(e.id).unwrap()).unwrap();
        for (row, want, control) in [(0, &e.w1, e.control1), (1, &e.w2, e.control2)] {
            let got = &table.rows[row].schedule.treatment_weights;
            for (k, (&g, &w)) in got.iter().zip(want.iter()).enumerate() {
                assert!(
                    close(g, w),
                    "{} w({}) patient {}: {g:?} vs {w}",
                    e.id,
                    row + 1,
                    k + 1
                );
            }
            let (first, last) = table.rows[row].control_weights();
            assert!(close(first, control.0), "{} control first {first:?}", e.id);
            assert!(close(last, control.1), "{} control last {last:?}", e.id);
        }
    }
}
