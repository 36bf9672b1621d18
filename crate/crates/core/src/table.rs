use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dataset::{Dataset, Variable};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Tolerance on the total mass of a user-supplied distribution.
const MASS_TOL: f64 = 1e-12;

/// Joint frequency table of an explanatory variable (rows) and a response (columns).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContingencyTable {
    x_name: String,
    y_name: String,
    x_labels: Vec<String>,
    y_labels: Vec<String>,
    counts: Vec<Vec<u64>>,
    total: u64,
}

impl ContingencyTable {
    pub fn new(
        x_name: impl Into<String>,
        x_labels: Vec<String>,
        y_name: impl Into<String>,
        y_labels: Vec<String>,
        counts: Vec<Vec<u64>>,
    ) -> Result<Self> {
        if counts.len() != x_labels.len() {
            return Err(Error::DimensionMismatch {
                expected: x_labels.len(),
                found: counts.len(),
            });
        }
        if let Some(row) = counts.iter().find(|r| r.len() != y_labels.len()) {
            return Err(Error::DimensionMismatch {
                expected: y_labels.len(),
                found: row.len(),
            });
        }
        let total = counts.iter().flatten().sum();
        Ok(Self {
            x_name: x_name.into(),
            y_name: y_name.into(),
            x_labels,
            y_labels,
            counts,
            total,
        })
    }

    /// Tally of paired category codes.
    pub fn from_codes(
        x_name: impl Into<String>,
        x_labels: Vec<String>,
        x_codes: &[u32],
        y_name: impl Into<String>,
        y_labels: Vec<String>,
        y_codes: &[u32],
    ) -> Result<Self> {
        if x_codes.len() != y_codes.len() {
            return Err(Error::DimensionMismatch {
                expected: x_codes.len(),
                found: y_codes.len(),
            });
        }
        let mut counts = vec![vec![0u64; y_labels.len()]; x_labels.len()];
        for (&x, &y) in x_codes.iter().zip(y_codes) {
            counts[x as usize][y as usize] += 1;
        }
        Self::new(x_name, x_labels, y_name, y_labels, counts)
    }

    pub fn x_name(&self) -> &str {
        &self.x_name
    }

    pub fn y_name(&self) -> &str {
        &self.y_name
    }

    pub fn x_labels(&self) -> &[String] {
        &self.x_labels
    }

    pub fn y_labels(&self) -> &[String] {
        &self.y_labels
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.counts.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        let mut out = vec![0; self.y_labels.len()];
        for row in &self.counts {
            for (o, &c) in out.iter_mut().zip(row) {
                *o += c;
            }
        }
        out
    }

    /// Swaps the roles of the two variables.
    pub fn transposed(&self) -> Self {
        let counts = (0..self.y_labels.len())
            .map(|s| self.counts.iter().map(|r| r[s]).collect())
            .collect();
        Self {
            x_name: self.y_name.clone(),
            y_name: self.x_name.clone(),
            x_labels: self.y_labels.clone(),
            y_labels: self.x_labels.clone(),
            counts,
            total: self.total,
        }
    }

    /// Plug-in estimate of the joint distribution.
    pub fn to_joint<T: Scalar>(&self) -> Result<JointDistribution<T>> {
        if self.total == 0 {
            return Err(Error::ZeroTotal);
        }
        let n = T::from_count(self.total);
        let p_xy = self
            .counts
            .iter()
            .map(|row| row.iter().map(|&c| T::from_count(c) / n.clone()).collect())
            .collect();
        let p_x = self
            .row_sums()
            .into_iter()
            .map(|c| T::from_count(c) / n.clone())
            .collect();
        let p_y = self
            .col_sums()
            .into_iter()
            .map(|c| T::from_count(c) / n.clone())
            .collect();
        Ok(JointDistribution {
            x_labels: self.x_labels.clone(),
            y_labels: self.y_labels.clone(),
            p_xy,
            p_x,
            p_y,
        })
    }

    /// Expands the counts back to records with two columns.
    pub fn to_dataset(&self) -> Result<Dataset> {
        let mut xs = Vec::with_capacity(self.total as usize);
        let mut ys = Vec::with_capacity(self.total as usize);
        for (i, row) in self.counts.iter().enumerate() {
            for (s, &c) in row.iter().enumerate() {
                for _ in 0..c {
                    xs.push(i as u32);
                    ys.push(s as u32);
                }
            }
        }
        Dataset::new(
            vec![
                Variable::new(self.x_name.clone(), self.x_labels.clone())?,
                Variable::new(self.y_name.clone(), self.y_labels.clone())?,
            ],
            vec![xs, ys],
        )
    }
}

/// Joint probabilities `p(X=i, Y=s)` with their marginals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointDistribution<T = f64> {
    x_labels: Vec<String>,
    y_labels: Vec<String>,
    p_xy: Vec<Vec<T>>,
    p_x: Vec<T>,
    p_y: Vec<T>,
}

impl<T: Scalar> JointDistribution<T> {
    /// Validates an explicit `n_X × n_Y` probability table. Rows with zero
    /// mass are allowed and ignored by every association computation.
    pub fn from_probabilities(p_xy: Vec<Vec<T>>) -> Result<Self> {
        let n_x = p_xy.len();
        let n_y = p_xy.first().map(Vec::len).unwrap_or(0);
        if n_x == 0 || n_y == 0 {
            return Err(Error::InvalidData("empty probability table".into()));
        }
        if let Some(row) = p_xy.iter().find(|r| r.len() != n_y) {
            return Err(Error::DimensionMismatch {
                expected: n_y,
                found: row.len(),
            });
        }
        if p_xy.iter().flatten().any(|p| p.lt_zero()) {
            return Err(Error::InvalidData("negative probability".into()));
        }
        let total = scalar::sum(p_xy.iter().flatten().cloned());
        if (total - T::one()).abs().to_f64() > MASS_TOL {
            return Err(Error::InvalidData("probabilities do not sum to 1".into()));
        }
        let p_x = p_xy.iter().map(|r| scalar::sum(r.iter().cloned())).collect();
        let p_y = (0..n_y)
            .map(|s| scalar::sum(p_xy.iter().map(|r| r[s].clone())))
            .collect();
        Ok(Self {
            x_labels: (1..=n_x).map(|i| i.to_string()).collect(),
            y_labels: (1..=n_y).map(|s| s.to_string()).collect(),
            p_xy,
            p_x,
            p_y,
        })
    }

    pub fn with_labels(mut self, x_labels: Vec<String>, y_labels: Vec<String>) -> Result<Self> {
        if x_labels.len() != self.n_x() || y_labels.len() != self.n_y() {
            return Err(Error::DimensionMismatch {
                expected: self.n_x() * self.n_y(),
                found: x_labels.len() * y_labels.len(),
            });
        }
        self.x_labels = x_labels;
        self.y_labels = y_labels;
        Ok(self)
    }

    pub fn n_x(&self) -> usize {
        self.p_x.len()
    }

    pub fn n_y(&self) -> usize {
        self.p_y.len()
    }

    pub fn p_xy(&self) -> &[Vec<T>] {
        &self.p_xy
    }

    pub fn p_x(&self) -> &[T] {
        &self.p_x
    }

    pub fn p_y(&self) -> &[T] {
        &self.p_y
    }

    pub fn x_labels(&self) -> &[String] {
        &self.x_labels
    }

    pub fn y_labels(&self) -> &[String] {
        &self.y_labels
    }

    /// `p(Y | X = x)`, or `None` when `p(X = x) = 0`.
    pub fn conditional(&self, x: usize) -> Option<Vec<T>> {
        let px = self.p_x.get(x)?;
        if px.is_zero() {
            return None;
        }
        Some(self.p_xy[x].iter().map(|p| p.clone() / px.clone()).collect())
    }

    pub fn transposed(&self) -> Self {
        Self {
            x_labels: self.y_labels.clone(),
            y_labels: self.x_labels.clone(),
            p_xy: (0..self.n_y())
                .map(|s| self.p_xy.iter().map(|r| r[s].clone()).collect())
                .collect(),
            p_x: self.p_y.clone(),
            p_y: self.p_x.clone(),
        }
    }

    pub fn to_f64(&self) -> JointDistribution<f64> {
        let conv = |v: &[T]| v.iter().map(Scalar::to_f64).collect::<Vec<_>>();
        JointDistribution {
            x_labels: self.x_labels.clone(),
            y_labels: self.y_labels.clone(),
            p_xy: self.p_xy.iter().map(|r| conv(r)).collect(),
            p_x: conv(&self.p_x),
            p_y: conv(&self.p_y),
        }
    }
}

/// Exact multivariate distribution given as weighted cells over named
/// variables. Used for analytic population values.
#[derive(Debug, Clone)]
pub struct ProbabilityTable<T = f64> {
    variables: Vec<Variable>,
    cells: Vec<(Vec<u32>, T)>,
}

impl<T: Scalar> ProbabilityTable<T> {
    /// Cells with the same value tuple are merged; zero-mass cells dropped.
    pub fn new(variables: Vec<Variable>, cells: Vec<(Vec<u32>, T)>) -> Result<Self> {
        let mut merged: BTreeMap<Vec<u32>, T> = BTreeMap::new();
        for (tuple, p) in cells {
            if tuple.len() != variables.len() {
                return Err(Error::DimensionMismatch {
                    expected: variables.len(),
                    found: tuple.len(),
                });
            }
            for (v, &c) in variables.iter().zip(&tuple) {
                if c as usize >= v.len() {
                    return Err(Error::BadIndex {
                        column: v.name().to_string(),
                        index: c,
                        size: v.len(),
                    });
                }
            }
            if p.lt_zero() {
                return Err(Error::InvalidData("negative probability".into()));
            }
            let e = merged.entry(tuple).or_insert_with(T::zero);
            *e = e.clone() + p;
        }
        let cells: Vec<_> = merged.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        let total = scalar::sum(cells.iter().map(|(_, p)| p.clone()));
        if (total - T::one()).abs().to_f64() > MASS_TOL {
            return Err(Error::InvalidData("probabilities do not sum to 1".into()));
        }
        Ok(Self { variables, cells })
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn cells(&self) -> &[(Vec<u32>, T)] {
        &self.cells
    }

    fn index(&self, name: &str) -> Result<usize> {
        self.variables
            .iter()
            .position(|v| v.name() == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Marginal over the named variables, keyed by value tuple.
    pub fn marginal<S: AsRef<str>>(&self, names: &[S]) -> Result<BTreeMap<Vec<u32>, T>> {
        if names.is_empty() {
            return Err(Error::EmptySelection);
        }
        let idx = names
            .iter()
            .map(|n| self.index(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let mut out: BTreeMap<Vec<u32>, T> = BTreeMap::new();
        for (tuple, p) in &self.cells {
            let key: Vec<u32> = idx.iter().map(|&i| tuple[i]).collect();
            let e = out.entry(key).or_insert_with(T::zero);
            *e = e.clone() + p.clone();
        }
        Ok(out)
    }

    /// Joint distribution of the composite `x` (positive-mass tuples only)
    /// against the single variable `y`.
    pub fn joint<S: AsRef<str>>(&self, x: &[S], y: &str) -> Result<JointDistribution<T>> {
        let y_idx = self.index(y)?;
        if x.iter().any(|n| n.as_ref() == y) {
            return Err(Error::Overlap(y.to_string()));
        }
        let mut names: Vec<&str> = x.iter().map(|n| n.as_ref()).collect();
        names.push(y);
        let marg = self.marginal(&names)?;
        let n_y = self.variables[y_idx].len();
        let mut rows: BTreeMap<Vec<u32>, Vec<T>> = BTreeMap::new();
        for (key, p) in marg {
            let (xk, yk) = key.split_at(key.len() - 1);
            let row = rows
                .entry(xk.to_vec())
                .or_insert_with(|| vec![T::zero(); n_y]);
            row[yk[0] as usize] = p;
        }
        let x_idx: Vec<usize> = x
            .iter()
            .map(|n| self.index(n.as_ref()))
            .collect::<Result<_>>()?;
        let x_labels = rows
            .keys()
            .map(|k| {
                k.iter()
                    .zip(&x_idx)
                    .map(|(&v, &i)| self.variables[i].label(v))
                    .collect::<Vec<_>>()
                    .join("|")
            })
            .collect();
        let y_labels = self.variables[y_idx].labels().to_vec();
        JointDistribution::from_probabilities(rows.into_values().collect())?
            .with_labels(x_labels, y_labels)
    }
}
