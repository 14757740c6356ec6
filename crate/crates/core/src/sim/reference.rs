//! Reference percentages for the reproducible tables, used for the diff column of
//! `reproduce` output. Generated from the published tables; do not edit by hand.

/// One scenario row: the treatment effects and the reference percentages in column order.
#[derive(Clone, Copy, Debug)]
pub struct ReferenceRow {
    pub deltas: &'static [f64],
    pub values: &'static [Option<f64>],
}

/// Reference rows for a table id, if the table has printed values.
pub fn reference_rows(id: &str) -> Option<&'static [ReferenceRow]> {
    Some(match id {
        "table1" => TABLE1,
        "table2" => TABLE2,
        "table3" => TABLE3,
        "table4" => TABLE4,
        "tableE1" => TABLEE1,
        "tableE2" => TABLEE2,
        "tableE3" => TABLEE3,
        "tableE4" => TABLEE4,
        "tableE5" => TABLEE5,
        "tableE6" => TABLEE6,
        "tableE7" => TABLEE7,
        "tableE8" => TABLEE8,
        "tableE9" => TABLEE9,
        "tableE10" => TABLEE10,
        _ => return None,
    })
}

const TABLE1: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[
            Some(3.30),
            None,
            Some(4.70),
            None,
            Some(4.70),
            None,
            Some(7.00),
            None,
            Some(7.00),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0],
        values: &[
            Some(4.80),
            Some(21.70),
            Some(3.70),
            Some(27.50),
            Some(10.30),
            Some(26.50),
            Some(9.90),
            Some(63.60),
            Some(5.00),
            Some(63.50),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[
            None,
            Some(62.40),
            None,
            Some(52.40),
            None,
            Some(69.90),
            None,
            Some(61.60),
            None,
            Some(61.60),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[
            Some(2.80),
            None,
            Some(3.80),
            None,
            Some(4.10),
            None,
            Some(5.90),
            None,
            Some(5.90),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 1.0],
        values: &[
            Some(3.20),
            Some(13.10),
            Some(4.20),
            Some(24.20),
            Some(5.10),
            Some(17.20),
            Some(6.40),
            Some(54.20),
            Some(4.50),
            Some(54.10),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0, 1.0],
        values: &[
            Some(4.60),
            Some(22.20),
            Some(3.20),
            Some(28.00),
            Some(9.70),
            Some(27.00),
            Some(9.00),
            Some(75.40),
            Some(3.20),
            Some(75.40),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 1.0],
        values: &[
            Some(4.00),
            Some(19.10),
            Some(2.60),
            Some(24.50),
            Some(9.10),
            Some(23.90),
            Some(7.40),
            Some(58.50),
            Some(3.20),
            Some(58.40),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[
            None,
            Some(51.30),
            None,
            Some(41.70),
            None,
            Some(57.80),
            None,
            Some(49.70),
            None,
            Some(49.70),
        ],
    },
];

const TABLE2: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[
            Some(4.70),
            None,
            Some(4.50),
            None,
            Some(4.80),
            None,
            Some(4.10),
            None,
            Some(4.10),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5],
        values: &[
            Some(4.60),
            Some(46.40),
            Some(4.40),
            Some(52.40),
            Some(3.90),
            Some(46.70),
            Some(3.60),
            Some(53.60),
            Some(1.90),
            Some(53.50),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[
            None,
            Some(70.80),
            None,
            Some(66.40),
            None,
            Some(71.20),
            None,
            Some(65.90),
            None,
            Some(65.90),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[
            Some(3.80),
            None,
            Some(4.10),
            None,
            Some(4.00),
            None,
            Some(3.80),
            None,
            Some(3.80),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 1.0],
        values: &[
            Some(4.40),
            Some(59.90),
            Some(4.20),
            Some(88.70),
            Some(4.30),
            Some(60.10),
            Some(3.80),
            Some(90.60),
            Some(2.60),
            Some(90.60),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0, 1.0],
        values: &[
            Some(4.80),
            Some(89.80),
            Some(4.70),
            Some(95.10),
            Some(4.00),
            Some(90.10),
            Some(3.90),
            Some(96.00),
            Some(1.30),
            Some(96.00),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 1.0],
        values: &[
            Some(4.30),
            Some(74.80),
            Some(3.90),
            Some(88.20),
            Some(3.90),
            Some(75.70),
            Some(3.40),
            Some(90.00),
            Some(1.40),
            Some(90.00),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[
            None,
            Some(56.50),
            None,
            Some(51.80),
            None,
            Some(57.90),
            None,
            Some(52.70),
            None,
            Some(52.70),
        ],
    },
];

const TABLE3: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[
            Some(3.80),
            None,
            Some(4.80),
            None,
            Some(4.60),
            None,
            Some(6.50),
            None,
            Some(6.50),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0],
        values: &[
            Some(4.80),
            Some(22.00),
            Some(3.60),
            Some(26.90),
            Some(8.30),
            Some(25.60),
            Some(7.80),
            Some(61.10),
            Some(4.30),
            Some(61.00),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[
            None,
            Some(92.70),
            None,
            Some(87.90),
            None,
            Some(94.60),
            None,
            Some(91.70),
            None,
            Some(91.70),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[
            Some(3.20),
            None,
            Some(4.10),
            None,
            Some(4.10),
            None,
            Some(6.10),
            None,
            Some(6.10),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 1.0],
        values: &[
            Some(3.70),
            Some(14.20),
            Some(4.40),
            Some(23.40),
            Some(4.70),
            Some(18.10),
            Some(6.20),
            Some(61.20),
            Some(4.50),
            Some(61.10),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0, 1.0],
        values: &[
            Some(4.90),
            Some(20.10),
            Some(3.20),
            Some(26.10),
            Some(8.10),
            Some(23.00),
            Some(7.30),
            Some(78.50),
            Some(3.20),
            Some(78.40),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 1.0],
        values: &[
            Some(4.70),
            Some(17.70),
            Some(3.00),
            Some(23.80),
            Some(8.00),
            Some(21.10),
            Some(6.70),
            Some(66.20),
            Some(2.80),
            Some(66.20),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[
            None,
            Some(91.30),
            None,
            Some(83.40),
            None,
            Some(94.00),
            None,
            Some(89.70),
            None,
            Some(89.70),
        ],
    },
];

const TABLE4: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[
            Some(4.80),
            None,
            Some(4.60),
            None,
            Some(4.80),
            None,
            Some(4.50),
            None,
            Some(4.50),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5],
        values: &[
            Some(5.00),
            Some(61.20),
            Some(4.90),
            Some(82.70),
            Some(4.90),
            Some(61.20),
            Some(4.80),
            Some(82.90),
            Some(2.50),
            Some(82.80),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[
            None,
            Some(94.50),
            None,
            Some(92.30),
            None,
            Some(94.50),
            None,
            Some(92.20),
            None,
            Some(92.20),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[
            Some(3.70),
            None,
            Some(4.50),
            None,
            Some(3.70),
            None,
            Some(4.20),
            None,
            Some(4.20),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.5],
        values: &[
            Some(4.40),
            Some(36.10),
            Some(4.60),
            Some(71.80),
            Some(4.30),
            Some(36.00),
            Some(4.40),
            Some(71.80),
            Some(3.00),
            Some(71.70),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 0.5],
        values: &[
            Some(5.00),
            Some(67.30),
            Some(4.60),
            Some(85.60),
            Some(4.80),
            Some(66.80),
            Some(4.40),
            Some(85.40),
            Some(1.60),
            Some(85.40),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.25, 0.5],
        values: &[
            Some(4.60),
            Some(51.10),
            Some(3.70),
            Some(73.00),
            Some(4.40),
            Some(50.90),
            Some(3.50),
            Some(72.60),
            Some(1.60),
            Some(72.60),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[
            None,
            Some(93.50),
            None,
            Some(90.70),
            None,
            Some(93.40),
            None,
            Some(90.40),
            None,
            Some(90.40),
        ],
    },
];

const TABLEE1: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[
            Some(3.80),
            None,
            Some(4.90),
            None,
            Some(4.40),
            None,
            Some(6.70),
            None,
            Some(6.70),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0],
        values: &[
            Some(4.80),
            Some(19.10),
            Some(3.70),
            Some(25.10),
            Some(8.20),
            Some(25.40),
            Some(7.80),
            Some(67.20),
            Some(4.30),
            Some(67.10),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[
            None,
            Some(90.10),
            None,
            Some(84.40),
            None,
            Some(93.30),
            None,
            Some(89.90),
            None,
            Some(89.90),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[
            Some(3.20),
            None,
            Some(4.10),
            None,
            Some(3.90),
            None,
            Some(6.20),
            None,
            Some(6.20),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 1.0],
        values: &[
            Some(3.80),
            Some(14.00),
            Some(4.40),
            Some(21.90),
            Some(4.80),
            Some(20.00),
            Some(6.50),
            Some(61.70),
            Some(4.80),
            Some(61.60),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0, 1.0],
        values: &[
            Some(4.80),
            Some(19.10),
            Some(3.40),
            Some(24.60),
            Some(8.40),
            Some(26.40),
            Some(7.50),
            Some(80.60),
            Some(3.20),
            Some(80.60),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 1.0],
        values: &[
            Some(4.50),
            Some(17.00),
            Some(3.00),
            Some(22.60),
            Some(8.00),
            Some(23.70),
            Some(6.60),
            Some(66.90),
            Some(2.90),
            Some(66.80),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[
            None,
            Some(87.50),
            None,
            Some(78.40),
            None,
            Some(91.80),
            None,
            Some(86.90),
            None,
            Some(86.90),
        ],
    },
];

const TABLEE2: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[
            Some(4.60),
            None,
            Some(4.50),
            None,
            Some(4.60),
            None,
            Some(4.40),
            None,
            Some(4.40),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5],
        values: &[
            Some(5.00),
            Some(54.40),
            Some(4.90),
            Some(76.40),
            Some(4.80),
            Some(56.10),
            Some(4.70),
            Some(78.00),
            Some(2.40),
            Some(78.00),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[
            None,
            Some(90.60),
            None,
            Some(87.40),
            None,
            Some(91.50),
            None,
            Some(88.30),
            None,
            Some(88.30),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[
            Some(4.00),
            None,
            Some(4.30),
            None,
            Some(3.90),
            None,
            Some(4.20),
            None,
            Some(4.20),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.5],
        values: &[
            Some(4.60),
            Some(29.00),
            Some(4.50),
            Some(61.40),
            Some(4.60),
            Some(29.90),
            Some(4.40),
            Some(62.90),
            Some(3.10),
            Some(62.90),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 0.5],
        values: &[
            Some(4.90),
            Some(56.40),
            Some(4.50),
            Some(76.10),
            Some(4.70),
            Some(57.40),
            Some(4.40),
            Some(77.30),
            Some(1.60),
            Some(77.30),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.25, 0.5],
        values: &[
            Some(4.50),
            Some(41.70),
            Some(3.60),
            Some(62.90),
            Some(4.30),
            Some(42.70),
            Some(3.50),
            Some(63.70),
            Some(1.70),
            Some(63.70),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[
            None,
            Some(85.90),
            None,
            Some(82.00),
            None,
            Some(86.90),
            None,
            Some(83.00),
            None,
            Some(83.00),
        ],
    },
];

const TABLEE3: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[Some(0.09), Some(0.00), Some(0.09), Some(0.00)],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0],
        values: &[Some(0.09), Some(0.00), Some(0.09), Some(0.00)],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[Some(0.07), Some(0.00), Some(0.07), Some(0.00)],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[Some(6.81), Some(0.00), Some(0.18), Some(0.00)],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 1.0],
        values: &[Some(6.86), Some(0.00), Some(0.17), Some(0.00)],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0, 1.0],
        values: &[Some(6.84), Some(0.00), Some(0.17), Some(0.00)],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 1.0],
        values: &[Some(6.89), Some(0.00), Some(0.17), Some(0.00)],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[Some(2.67), Some(0.00), Some(0.53), Some(0.00)],
    },
];

const TABLEE4: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[Some(0.10), Some(0.09), Some(0.10), Some(0.09)],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0],
        values: &[Some(0.14), Some(0.10), Some(0.14), Some(0.10)],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[Some(0.00), Some(0.08), Some(0.00), Some(0.08)],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[Some(0.29), Some(0.12), Some(0.29), Some(0.12)],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 1.0],
        values: &[Some(0.35), Some(0.07), Some(0.34), Some(0.07)],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0, 1.0],
        values: &[Some(0.25), Some(0.08), Some(0.25), Some(0.08)],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 1.0],
        values: &[Some(0.20), Some(0.11), Some(0.19), Some(0.11)],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[Some(0.01), Some(0.08), Some(0.01), Some(0.08)],
    },
];

const TABLEE5: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[
            Some(3.40),
            None,
            Some(4.90),
            None,
            Some(4.90),
            None,
            Some(7.50),
            None,
            Some(7.50),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0],
        values: &[
            Some(5.00),
            Some(21.80),
            Some(3.80),
            Some(27.60),
            Some(10.50),
            Some(26.80),
            Some(10.10),
            Some(63.90),
            Some(5.30),
            Some(63.80),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[
            None,
            Some(62.40),
            None,
            Some(52.70),
            None,
            Some(69.90),
            None,
            Some(61.60),
            None,
            Some(61.60),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[
            Some(3.00),
            None,
            Some(4.30),
            None,
            Some(4.30),
            None,
            Some(6.40),
            None,
            Some(6.40),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 1.0],
        values: &[
            Some(3.60),
            Some(13.20),
            Some(4.60),
            Some(24.90),
            Some(5.40),
            Some(17.30),
            Some(7.00),
            Some(54.60),
            Some(5.10),
            Some(54.50),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0, 1.0],
        values: &[
            Some(5.10),
            Some(22.60),
            Some(3.60),
            Some(28.80),
            Some(10.30),
            Some(27.50),
            Some(9.60),
            Some(72.80),
            Some(3.60),
            Some(72.80),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 1.0],
        values: &[
            Some(4.50),
            Some(19.50),
            Some(3.00),
            Some(25.50),
            Some(9.60),
            Some(24.40),
            Some(7.90),
            Some(59.00),
            Some(3.70),
            Some(58.90),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[
            None,
            Some(51.60),
            None,
            Some(43.00),
            None,
            Some(57.80),
            None,
            Some(50.00),
            None,
            Some(50.00),
        ],
    },
];

const TABLEE6: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[
            Some(4.80),
            None,
            Some(4.70),
            None,
            Some(4.90),
            None,
            Some(4.20),
            None,
            Some(4.20),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5],
        values: &[
            Some(4.70),
            Some(46.70),
            Some(4.40),
            Some(52.60),
            Some(4.00),
            Some(46.90),
            Some(3.70),
            Some(53.60),
            Some(2.00),
            Some(53.50),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[
            None,
            Some(70.90),
            None,
            Some(66.70),
            None,
            Some(71.10),
            None,
            Some(65.80),
            None,
            Some(65.80),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[
            Some(4.20),
            None,
            Some(4.60),
            None,
            Some(4.30),
            None,
            Some(4.20),
            None,
            Some(4.20),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 1.0],
        values: &[
            Some(4.70),
            Some(59.90),
            Some(4.80),
            Some(88.80),
            Some(4.60),
            Some(60.10),
            Some(4.20),
            Some(90.20),
            Some(2.90),
            Some(90.20),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0, 1.0],
        values: &[
            Some(5.00),
            Some(89.90),
            Some(5.00),
            Some(95.30),
            Some(4.20),
            Some(89.90),
            Some(4.20),
            Some(95.80),
            Some(1.40),
            Some(95.80),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 1.0],
        values: &[
            Some(4.70),
            Some(75.10),
            Some(4.20),
            Some(88.60),
            Some(4.10),
            Some(75.60),
            Some(3.60),
            Some(89.70),
            Some(1.50),
            Some(89.70),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[
            None,
            Some(57.20),
            None,
            Some(53.20),
            None,
            Some(58.00),
            None,
            Some(52.80),
            None,
            Some(52.80),
        ],
    },
];

const TABLEE7: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[
            Some(3.90),
            None,
            Some(4.90),
            None,
            Some(4.70),
            None,
            Some(6.90),
            None,
            Some(6.90),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0],
        values: &[
            Some(4.90),
            Some(22.00),
            Some(3.70),
            Some(27.00),
            Some(8.40),
            Some(25.60),
            Some(7.90),
            Some(61.10),
            Some(4.40),
            Some(61.00),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[
            None,
            Some(92.60),
            None,
            Some(87.70),
            None,
            Some(94.60),
            None,
            Some(91.60),
            None,
            Some(91.60),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[
            Some(3.20),
            None,
            Some(4.10),
            None,
            Some(4.10),
            None,
            Some(6.30),
            None,
            Some(6.30),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 1.0],
        values: &[
            Some(3.80),
            Some(14.20),
            Some(4.40),
            Some(23.40),
            Some(4.80),
            Some(18.30),
            Some(6.40),
            Some(61.40),
            Some(4.70),
            Some(61.20),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0, 1.0],
        values: &[
            Some(5.00),
            Some(20.10),
            Some(3.30),
            Some(26.10),
            Some(8.30),
            Some(23.10),
            Some(7.50),
            Some(79.80),
            Some(3.00),
            Some(79.80),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 1.0],
        values: &[
            Some(4.80),
            Some(17.70),
            Some(3.00),
            Some(23.90),
            Some(8.10),
            Some(21.30),
            Some(6.80),
            Some(66.30),
            Some(3.00),
            Some(66.30),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[
            None,
            Some(91.20),
            None,
            Some(83.10),
            None,
            Some(93.90),
            None,
            Some(89.50),
            None,
            Some(89.50),
        ],
    },
];

const TABLEE8: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[
            Some(4.70),
            None,
            Some(4.60),
            None,
            Some(4.70),
            None,
            Some(4.50),
            None,
            Some(4.50),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5],
        values: &[
            Some(5.00),
            Some(61.30),
            Some(5.00),
            Some(82.60),
            Some(4.90),
            Some(61.30),
            Some(4.90),
            Some(82.90),
            Some(2.50),
            Some(82.80),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[
            None,
            Some(94.50),
            None,
            Some(92.20),
            None,
            Some(94.50),
            None,
            Some(92.20),
            None,
            Some(92.20),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[
            Some(3.90),
            None,
            Some(4.60),
            None,
            Some(3.80),
            None,
            Some(4.40),
            None,
            Some(4.40),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.5],
        values: &[
            Some(4.50),
            Some(36.00),
            Some(4.60),
            Some(71.70),
            Some(4.50),
            Some(36.00),
            Some(4.40),
            Some(71.70),
            Some(3.10),
            Some(71.70),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 0.5],
        values: &[
            Some(5.00),
            Some(67.30),
            Some(4.70),
            Some(85.40),
            Some(4.80),
            Some(66.80),
            Some(4.50),
            Some(85.20),
            Some(1.60),
            Some(85.20),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.25, 0.5],
        values: &[
            Some(4.60),
            Some(51.10),
            Some(3.80),
            Some(72.90),
            Some(4.40),
            Some(50.90),
            Some(3.60),
            Some(72.60),
            Some(1.60),
            Some(72.60),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[
            None,
            Some(93.30),
            None,
            Some(90.40),
            None,
            Some(93.20),
            None,
            Some(90.20),
            None,
            Some(90.20),
        ],
    },
];

const TABLEE9: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[
            Some(3.90),
            None,
            Some(5.00),
            None,
            Some(4.60),
            None,
            Some(7.00),
            None,
            Some(7.00),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0],
        values: &[
            Some(5.00),
            Some(19.10),
            Some(3.80),
            Some(25.10),
            Some(8.40),
            Some(25.70),
            Some(7.90),
            Some(67.40),
            Some(4.50),
            Some(67.30),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[
            None,
            Some(90.00),
            None,
            Some(84.40),
            None,
            Some(93.20),
            None,
            Some(89.80),
            None,
            Some(89.80),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[
            Some(3.30),
            None,
            Some(4.10),
            None,
            Some(4.00),
            None,
            Some(6.60),
            None,
            Some(6.60),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 1.0],
        values: &[
            Some(3.80),
            Some(14.00),
            Some(4.50),
            Some(22.10),
            Some(4.90),
            Some(20.00),
            Some(6.60),
            Some(62.00),
            Some(4.90),
            Some(61.90),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 1.0, 1.0],
        values: &[
            Some(5.00),
            Some(19.20),
            Some(3.50),
            Some(24.70),
            Some(8.50),
            Some(26.50),
            Some(7.70),
            Some(80.60),
            Some(3.20),
            Some(80.60),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 1.0],
        values: &[
            Some(4.70),
            Some(17.10),
            Some(3.10),
            Some(22.60),
            Some(8.20),
            Some(24.00),
            Some(6.80),
            Some(67.10),
            Some(3.20),
            Some(67.00),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[
            None,
            Some(87.40),
            None,
            Some(78.30),
            None,
            Some(91.70),
            None,
            Some(86.80),
            None,
            Some(86.80),
        ],
    },
];

const TABLEE10: &[ReferenceRow] = &[
    ReferenceRow {
        deltas: &[0.0, 0.0],
        values: &[
            Some(4.70),
            None,
            Some(4.70),
            None,
            Some(4.70),
            None,
            Some(4.60),
            None,
            Some(4.60),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5],
        values: &[
            Some(5.10),
            Some(54.60),
            Some(5.00),
            Some(76.50),
            Some(5.00),
            Some(56.20),
            Some(4.90),
            Some(78.10),
            Some(2.50),
            Some(78.10),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5],
        values: &[
            None,
            Some(90.50),
            None,
            Some(87.30),
            None,
            Some(91.40),
            None,
            Some(88.30),
            None,
            Some(88.30),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.0],
        values: &[
            Some(4.00),
            None,
            Some(4.50),
            None,
            Some(4.00),
            None,
            Some(4.40),
            None,
            Some(4.40),
            None,
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.0, 0.5],
        values: &[
            Some(4.70),
            Some(29.20),
            Some(4.60),
            Some(61.30),
            Some(4.60),
            Some(30.10),
            Some(4.40),
            Some(62.80),
            Some(3.10),
            Some(62.80),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.5, 0.5],
        values: &[
            Some(5.00),
            Some(56.50),
            Some(4.70),
            Some(75.90),
            Some(4.90),
            Some(57.50),
            Some(4.50),
            Some(77.10),
            Some(1.70),
            Some(77.10),
        ],
    },
    ReferenceRow {
        deltas: &[0.0, 0.25, 0.5],
        values: &[
            Some(4.50),
            Some(41.80),
            Some(3.70),
            Some(62.40),
            Some(4.40),
            Some(42.80),
            Some(3.50),
            Some(63.70),
            Some(1.70),
            Some(63.60),
        ],
    },
    ReferenceRow {
        deltas: &[0.5, 0.5, 0.5],
        values: &[
            None,
            Some(85.90),
            None,
            Some(81.90),
            None,
            Some(86.90),
            None,
            Some(82.90),
            None,
            Some(82.90),
        ],
    },
];
