//! Proportional prediction and split validation.
//!
//! A proportional predictor draws `Y = t` with probability `p(Y = t | X = x)`.
//! Its expected confusion matrix, rows indexed by the true category, is the
//! association matrix `γ(Y|X)`. [`split_validate`] estimates `γ` on a
//! training split and compares it with the empirical confusion matrix on
//! the held-out records.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::association::{self, AssociationMatrix};
use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::table::{ContingencyTable, JointDistribution};

/// Test records per independently seeded prediction stream.
const CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfusionMatrix {
    pub labels: Vec<String>,
    /// Row = true category, column = predicted category.
    pub counts: Vec<Vec<u64>>,
    /// Row-normalised rates; rows without true instances are zero.
    pub normalized: Vec<Vec<f64>>,
    pub row_totals: Vec<u64>,
}

impl ConfusionMatrix {
    pub fn from_counts(labels: Vec<String>, counts: Vec<Vec<u64>>) -> Result<Self> {
        let n = labels.len();
        if counts.len() != n || counts.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: counts.len(),
            });
        }
        let row_totals: Vec<u64> = counts.iter().map(|r| r.iter().sum()).collect();
        let normalized = counts
            .iter()
            .zip(&row_totals)
            .map(|(row, &total)| {
                row.iter()
                    .map(|&c| if total == 0 { 0.0 } else { c as f64 / total as f64 })
                    .collect()
            })
            .collect();
        Ok(Self {
            labels,
            counts,
            normalized,
            row_totals,
        })
    }

    /// Fraction of correct predictions per true category.
    pub fn accuracy_rates(&self) -> Vec<f64> {
        (0..self.labels.len()).map(|s| self.normalized[s][s]).collect()
    }
}

/// Cumulative conditionals of a joint, one row per `X` category.
#[derive(Debug, Clone)]
pub struct ProportionalPredictor {
    cdf: Vec<Option<Vec<f64>>>,
    x_labels: Vec<String>,
}

impl ProportionalPredictor {
    pub fn new(j: &JointDistribution<f64>) -> Self {
        let cdf = (0..j.n_x())
            .map(|x| {
                j.conditional(x).map(|cond| {
                    let mut acc = 0.0;
                    cond.iter()
                        .map(|p| {
                            acc += p;
                            acc
                        })
                        .collect()
                })
            })
            .collect();
        Self {
            cdf,
            x_labels: j.x_labels().to_vec(),
        }
    }

    pub fn is_seen(&self, x: usize) -> bool {
        self.cdf.get(x).is_some_and(|c| c.is_some())
    }

    /// Predicted `Y` index for a uniform draw `u` in `[0, 1)`.
    pub fn predict_with(&self, x: usize, u: f64) -> Result<usize> {
        let cdf = self
            .cdf
            .get(x)
            .and_then(|c| c.as_ref())
            .ok_or_else(|| {
                Error::UnseenCategory(self.x_labels.get(x).cloned().unwrap_or_else(|| x.to_string()))
            })?;
        // the first strictly larger cumulative value always has positive mass;
        // rounding slack above the total falls back to the last such category
        Ok(cdf.iter().position(|&c| u < c).unwrap_or_else(|| {
            let total = cdf[cdf.len() - 1];
            cdf.iter().position(|&c| c == total).unwrap()
        }))
    }

    pub fn predict<R: Rng + ?Sized>(&self, x: usize, rng: &mut R) -> Result<usize> {
        self.predict_with(x, rng.gen())
    }
}

/// One proportional prediction for `X = x_value`.
pub fn proportional_predict<R: Rng + ?Sized>(
    j: &JointDistribution<f64>,
    x_value: usize,
    rng: &mut R,
) -> Result<usize> {
    ProportionalPredictor::new(j).predict(x_value, rng)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitConfig {
    pub train_frac: f64,
    pub seed: u64,
    /// Split separately within each response category.
    pub stratify: bool,
}

impl SplitConfig {
    pub fn new(train_frac: f64, seed: u64) -> Self {
        Self {
            train_frac,
            seed,
            stratify: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub x: Vec<String>,
    pub y: String,
    pub config: SplitConfig,
    pub n_train: usize,
    pub n_test: usize,
    /// Test records whose `X` value never occurs in training.
    pub skipped_unseen: usize,
    pub train_gamma: AssociationMatrix<f64>,
    pub test_confusion: ConfusionMatrix,
    /// Largest entrywise gap over rows with at least one test instance.
    pub max_abs_diff: f64,
}

impl ValidationReport {
    /// Per-row largest entrywise gap; `None` for rows without test instances.
    pub fn row_diffs(&self) -> Vec<Option<f64>> {
        self.train_gamma
            .gamma
            .iter()
            .zip(&self.test_confusion.normalized)
            .zip(&self.test_confusion.row_totals)
            .map(|((g, c), &n)| {
                (n > 0).then(|| g.iter().zip(c).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            })
            .collect()
    }
}

fn split_indices(ds: &Dataset, y: usize, cfg: &SplitConfig) -> (Vec<usize>, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let groups: Vec<Vec<usize>> = if cfg.stratify {
        let mut g = vec![Vec::new(); ds.variable(y).len()];
        for (i, &c) in ds.column(y).iter().enumerate() {
            g[c as usize].push(i);
        }
        g
    } else {
        vec![(0..ds.n_records()).collect()]
    };
    let (mut train, mut test) = (Vec::new(), Vec::new());
    for mut group in groups {
        group.shuffle(&mut rng);
        let k = (cfg.train_frac * group.len() as f64).round() as usize;
        test.extend_from_slice(&group[k..]);
        group.truncate(k);
        train.extend(group);
    }
    train.sort_unstable();
    test.sort_unstable();
    (train, test)
}

pub fn split_validate<S: AsRef<str>>(
    ds: &Dataset,
    x: &[S],
    y: &str,
    cfg: &SplitConfig,
) -> Result<ValidationReport> {
    if !(cfg.train_frac > 0.0 && cfg.train_frac < 1.0) {
        return Err(Error::InvalidParameter("train fraction must lie in (0, 1)".into()));
    }
    let y_idx = ds.variable_index(y)?;
    let comp = ds.composite(x)?;
    if comp.parts().contains(&y_idx) {
        return Err(Error::Overlap(y.to_string()));
    }
    let (train, test) = split_indices(ds, y_idx, cfg);
    if train.is_empty() || test.is_empty() {
        return Err(Error::InvalidParameter("split leaves an empty partition".into()));
    }

    let x_codes = comp.codes();
    let y_codes = ds.column(y_idx);
    let y_labels = ds.variable(y_idx).labels().to_vec();
    let pick = |rows: &[usize], codes: &[u32]| rows.iter().map(|&r| codes[r]).collect::<Vec<_>>();
    let table = ContingencyTable::from_codes(
        comp.name(ds),
        comp.labels(ds),
        &pick(&train, x_codes),
        y,
        y_labels.clone(),
        &pick(&train, y_codes),
    )?;
    if let Some(s) = table.col_sums().iter().position(|&c| c == 0) {
        return Err(Error::InvalidData(format!(
            "category `{}` of `{y}` is absent from the training split",
            y_labels[s]
        )));
    }
    let joint = table.to_joint::<f64>()?;
    let train_gamma = association::association_matrix(&joint)?;
    let predictor = ProportionalPredictor::new(&joint);

    let n_y = y_labels.len();
    let (counts, skipped) = test
        .par_chunks(CHUNK)
        .enumerate()
        .map(|(chunk, rows)| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(chunk as u64 + 1);
            let mut counts = vec![vec![0u64; n_y]; n_y];
            let mut skipped = 0usize;
            for &r in rows {
                let xv = x_codes[r] as usize;
                if !predictor.is_seen(xv) {
                    skipped += 1;
                    continue;
                }
                let t = predictor.predict(xv, &mut rng)?;
                counts[y_codes[r] as usize][t] += 1;
            }
            Ok((counts, skipped))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold((vec![vec![0u64; n_y]; n_y], 0), |(mut acc, sk), (c, s)| {
            for (a, b) in acc.iter_mut().flatten().zip(c.iter().flatten()) {
                *a += b;
            }
            (acc, sk + s)
        });

    let test_confusion = ConfusionMatrix::from_counts(y_labels, counts)?;
    let mut report = ValidationReport {
        x: x.iter().map(|v| v.as_ref().to_string()).collect(),
        y: y.to_string(),
        config: *cfg,
        n_train: train.len(),
        n_test: test.len(),
        skipped_unseen: skipped,
        train_gamma,
        test_confusion,
        max_abs_diff: 0.0,
    };
    report.max_abs_diff = report.row_diffs().into_iter().flatten().fold(0.0, f64::max);
    Ok(report)
}

/// Monte-Carlo estimate of the expected confusion matrix of `j`: for every
/// `X` cell, `draws_per_cell` (truth, prediction) pairs from the cell's
/// conditional, weighted by `p(X)`.
pub fn expected_confusion_monte_carlo(
    j: &JointDistribution<f64>,
    draws_per_cell: usize,
    seed: u64,
) -> Result<Vec<Vec<f64>>> {
    if draws_per_cell == 0 {
        return Err(Error::InvalidParameter("draws_per_cell must be positive".into()));
    }
    let predictor = ProportionalPredictor::new(j);
    let n_y = j.n_y();
    let mut acc = vec![vec![0.0; n_y]; n_y];
    for x in 0..j.n_x() {
        if !predictor.is_seen(x) {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(x as u64);
        let mut counts = vec![vec![0u64; n_y]; n_y];
        for _ in 0..draws_per_cell {
            let s = predictor.predict(x, &mut rng)?;
            let t = predictor.predict(x, &mut rng)?;
            counts[s][t] += 1;
        }
        let w = j.p_x()[x] / draws_per_cell as f64;
        for (a, c) in acc.iter_mut().flatten().zip(counts.iter().flatten()) {
            *a += w * *c as f64;
        }
    }
    for (row, &p) in acc.iter_mut().zip(j.p_y()) {
        if p > 0.0 {
            row.iter_mut().for_each(|v| *v /= p);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::MissingPolicy;

    fn joint(p: Vec<Vec<f64>>) -> JointDistribution<f64> {
        JointDistribution::from_probabilities(p).unwrap()
    }

    #[test]
    fn degenerate_conditional() {
        let j = joint(vec![vec![0.0, 0.5], vec![0.25, 0.25]]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            assert_eq!(proportional_predict(&j, 0, &mut rng).unwrap(), 1);
        }
        assert_eq!(ProportionalPredictor::new(&j).predict_with(0, 0.0).unwrap(), 1);
    }

    #[test]
    fn unseen_category() {
        let j = joint(vec![vec![0.0, 0.0], vec![0.5, 0.5]]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(matches!(proportional_predict(&j, 0, &mut rng), Err(Error::UnseenCategory(_))));
    }

    #[test]
    fn uniform_frequencies() {
        let j = joint(vec![vec![0.25; 4]]);
        let p = ProportionalPredictor::new(&j);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut c = [0usize; 4];
        for _ in 0..40_000 {
            c[p.predict(0, &mut rng).unwrap()] += 1;
        }
        assert!(c.iter().all(|&k| (k as f64 / 40_000.0 - 0.25).abs() < 0.01));
    }

    #[test]
    fn functional_split_is_identity() {
        let mut rows = Vec::new();
        for i in 0..300 {
            let x = i % 3;
            rows.push(vec![x.to_string(), ["a", "b", "a"][x].to_string()]);
        }
        let ds = Dataset::from_rows(["x", "y"], rows, MissingPolicy::DropRow).unwrap();
        let r = split_validate(&ds, &["x"], "y", &SplitConfig::new(0.8, 4)).unwrap();
        assert_eq!(r.max_abs_diff, 0.0);
        assert_eq!(r.n_train + r.n_test, 300);
        assert_eq!(r.test_confusion.accuracy_rates(), [1.0, 1.0]);
        let again = split_validate(&ds, &["x"], "y", &SplitConfig::new(0.8, 4)).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn stratified_split_keeps_proportions() {
        let rows: Vec<Vec<String>> = (0..100)
            .map(|i| vec![(i % 7).to_string(), if i < 20 { "r" } else { "c" }.to_string()])
            .collect();
        let ds = Dataset::from_rows(["x", "y"], rows, MissingPolicy::DropRow).unwrap();
        let cfg = SplitConfig {
            stratify: true,
            ..SplitConfig::new(0.75, 2)
        };
        let (train, _) = split_indices(&ds, 1, &cfg);
        assert_eq!(train.iter().filter(|&&i| i < 20).count(), 15);
        assert!(split_validate(&ds, &["x"], "y", &SplitConfig::new(1.0, 1)).is_err());
    }

    #[test]
    fn monte_carlo_tracks_gamma() {
        let j = joint(vec![vec![0.3, 0.1, 0.0], vec![0.1, 0.2, 0.3]]);
        let g = association::association_matrix(&j).unwrap();
        let mc = expected_confusion_monte_carlo(&j, 50_000, 5).unwrap();
        for (a, b) in g.gamma.iter().flatten().zip(mc.iter().flatten()) {
            assert!((a - b).abs() < 0.01);
        }
    }
}
