//! Reference datasets and tables with known association values.
//!
//! | name | content |
//! |------|---------|
//! | `loan` | 650 loan applications: On-Time, Age, Income, Credit, Risk |
//! | `loan_<x>_<y>` | two-way tables of the loan data |
//! | `table1` | 7 × 6 frequency table with 24,000 observations |
//! | `appendix_sevenths` | E-2 but not E-1 |
//! | `appendix_sixths` | E-4 but not E-3 |
//! | `appendix_tenths` | E-5 but not E-4 |
//! | `example23_gamma` | a published 6 × 6 training association matrix |
//! | `example23_confusion` | the matching test confusion matrix |

use std::collections::BTreeMap;

use crate::dataset::{Dataset, MissingPolicy};
use crate::error::{Error, Result};
use crate::table::ContingencyTable;

const LOAN_CSV: &str = include_str!("fixtures/loan.csv");

pub const TABLE1_COUNTS: [[u64; 6]; 7] = [
    [16, 1, 0, 0, 0, 0],
    [1199, 1274, 346, 66, 33, 1],
    [640, 2363, 1363, 343, 103, 7],
    [381, 2203, 2646, 949, 402, 18],
    [182, 1131, 2038, 1369, 762, 55],
    [79, 407, 937, 1047, 1286, 206],
    [2, 5, 14, 20, 51, 55],
];

pub const EXAMPLE23_GAMMA: [[f64; 6]; 6] = [
    [0.26, 0.47, 0.15, 0.06, 0.04, 0.01],
    [0.05, 0.48, 0.28, 0.11, 0.07, 0.01],
    [0.02, 0.36, 0.34, 0.15, 0.11, 0.02],
    [0.02, 0.32, 0.35, 0.17, 0.12, 0.02],
    [0.02, 0.30, 0.35, 0.18, 0.14, 0.03],
    [0.03, 0.29, 0.33, 0.18, 0.15, 0.03],
];

pub const EXAMPLE23_CONFUSION: [[f64; 6]; 6] = [
    [0.27, 0.47, 0.16, 0.05, 0.03, 0.01],
    [0.05, 0.49, 0.28, 0.10, 0.06, 0.01],
    [0.02, 0.36, 0.35, 0.15, 0.10, 0.02],
    [0.02, 0.31, 0.36, 0.17, 0.12, 0.03],
    [0.02, 0.28, 0.35, 0.17, 0.14, 0.04],
    [0.03, 0.27, 0.33, 0.18, 0.15, 0.04],
];

/// Loan table names and their `(x, y)` columns.
pub const LOAN_TABLES: [(&str, &str, &str); 8] = [
    ("loan_ontime_risk", "On-Time", "Risk"),
    ("loan_age_risk", "Age", "Risk"),
    ("loan_income_risk", "Income", "Risk"),
    ("loan_credit_risk", "Credit", "Risk"),
    ("loan_ontime_credit", "On-Time", "Credit"),
    ("loan_age_credit", "Age", "Credit"),
    ("loan_income_credit", "Income", "Credit"),
    ("loan_risk_credit", "Risk", "Credit"),
];

#[derive(Debug, Clone, PartialEq)]
pub enum Fixture {
    Dataset(Dataset),
    Table(ContingencyTable),
    /// Square matrix over the listed categories.
    Matrix { labels: Vec<String>, rows: Vec<Vec<f64>> },
}

impl Fixture {
    /// Record-level view; matrices have none.
    pub fn dataset(&self) -> Option<Dataset> {
        match self {
            Fixture::Dataset(ds) => Some(ds.clone()),
            Fixture::Table(t) => t.to_dataset().ok(),
            Fixture::Matrix { .. } => None,
        }
    }
}

pub fn loan() -> Dataset {
    Dataset::from_csv_reader(LOAN_CSV.as_bytes(), MissingPolicy::DropRow)
        .expect("bundled loan data parses")
}

pub fn table1() -> ContingencyTable {
    let labels = |n: usize| (1..=n).map(|i| i.to_string()).collect::<Vec<_>>();
    ContingencyTable::new(
        "X",
        labels(7),
        "Y",
        labels(6),
        TABLE1_COUNTS.iter().map(|r| r.to_vec()).collect(),
    )
    .expect("valid table")
}

/// Records `(Y, X1, X2)` repeated by integer weight.
fn weighted(rows: &[(u32, u32, u32, usize)]) -> Dataset {
    let mut records = Vec::new();
    for &(y, x1, x2, w) in rows {
        for _ in 0..w {
            records.push(vec![y.to_string(), x1.to_string(), x2.to_string()]);
        }
    }
    Dataset::from_rows(["Y", "X1", "X2"], records, MissingPolicy::DropRow).expect("valid rows")
}

pub fn appendix_sevenths() -> Dataset {
    weighted(&[(1, 1, 2, 2), (0, 2, 3, 2), (0, 3, 1, 2), (1, 4, 2, 1)])
}

pub fn appendix_sixths() -> Dataset {
    weighted(&[
        (1, 1, 1, 1),
        (2, 1, 3, 1),
        (2, 2, 2, 1),
        (4, 2, 3, 1),
        (3, 3, 1, 1),
        (4, 3, 2, 1),
    ])
}

pub fn appendix_tenths() -> Dataset {
    weighted(&[
        (1, 1, 2, 1),
        (1, 1, 1, 2),
        (2, 2, 1, 1),
        (3, 3, 1, 1),
        (1, 4, 4, 1),
        (2, 1, 1, 2),
        (3, 1, 3, 1),
        (2, 4, 4, 1),
    ])
}

fn matrix(m: &[[f64; 6]; 6]) -> Fixture {
    Fixture::Matrix {
        labels: (1..=6).map(|i| i.to_string()).collect(),
        rows: m.iter().map(|r| r.to_vec()).collect(),
    }
}

pub fn paper_fixtures() -> BTreeMap<String, Fixture> {
    let mut out = BTreeMap::new();
    let ds = loan();
    for (name, x, y) in LOAN_TABLES {
        let t = ds.contingency(&[x], y).expect("loan columns exist");
        out.insert(name.to_string(), Fixture::Table(t));
    }
    out.insert("loan".into(), Fixture::Dataset(ds));
    out.insert("table1".into(), Fixture::Table(table1()));
    out.insert("appendix_sevenths".into(), Fixture::Dataset(appendix_sevenths()));
    out.insert("appendix_sixths".into(), Fixture::Dataset(appendix_sixths()));
    out.insert("appendix_tenths".into(), Fixture::Dataset(appendix_tenths()));
    out.insert("example23_gamma".into(), matrix(&EXAMPLE23_GAMMA));
    out.insert("example23_confusion".into(), matrix(&EXAMPLE23_CONFUSION));
    out
}

pub fn fixture(name: &str) -> Result<Fixture> {
    paper_fixtures()
        .remove(name)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown fixture `{name}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals() {
        assert_eq!(table1().total(), 24000);
        assert_eq!(table1().col_sums(), [2499, 7384, 7344, 3794, 2637, 342]);
        assert_eq!(loan().n_records(), 650);
        match fixture("loan_ontime_risk").unwrap() {
            Fixture::Table(t) => {
                assert_eq!(t.total(), 650);
                assert_eq!(t.counts(), [vec![11, 2, 52], vec![306, 24, 255]]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(appendix_tenths().n_records(), 10);
        assert_eq!(appendix_sevenths().n_records(), 7);
        assert!(fixture("nope").is_err());
    }

    #[test]
    fn loan_tables_match_prints() {
        let ds = loan();
        let t = ds.contingency(&["Age"], "Credit").unwrap();
        assert_eq!(t.counts(), [vec![40, 80, 148], vec![34, 118, 217], vec![3, 2, 8]]);
        let t = ds.contingency(&["Credit"], "Risk").unwrap();
        assert_eq!(t.counts(), [vec![35, 2, 40], vec![98, 9, 93], vec![184, 15, 174]]);
    }

    #[test]
    fn example23_rows_near_stochastic() {
        for row in EXAMPLE23_GAMMA.iter().chain(&EXAMPLE23_CONFUSION) {
            assert!((row.iter().sum::<f64>() - 1.0).abs() <= 0.025);
        }
    }
}
