//! Proportional association of a response `Y` with an explanatory `X`.
//!
//! Under proportional prediction (draw `Y` from `p(Y | X = i)`), entry
//! `(s, t)` of the association matrix is the probability of predicting `t`
//! when the truth is `s`:
//!
//! ```text
//! γ[s][t] = Σ_i p(i, s) p(i, t) / (p(i) p(s))
//! ```
//!
//! The association vector normalises the diagonal against the marginal,
//! `θ_s = (γ[s][s] − p(s)) / (1 − p(s))`, and a weight vector `α` folds it
//! into the scalar degree `τ_α = Σ_s α_s θ_s`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::table::JointDistribution;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssociationMatrix<T = f64> {
    pub gamma: Vec<Vec<T>>,
    pub y_domain: Vec<String>,
}

impl<T: Scalar> AssociationMatrix<T> {
    pub fn dim(&self) -> usize {
        self.gamma.len()
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.dim()).map(|s| self.gamma[s][s].clone()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssociationVector<T = f64> {
    pub theta: Vec<T>,
    pub y_domain: Vec<String>,
}

fn require_positive_marginal<T: Scalar>(j: &JointDistribution<T>) -> Result<()> {
    match j.p_y().iter().position(|p| !p.gt_zero()) {
        Some(s) => Err(Error::EmptyCategory(j.y_labels()[s].clone())),
        None => Ok(()),
    }
}

fn require_nonconstant<T: Scalar>(j: &JointDistribution<T>) -> Result<()> {
    require_positive_marginal(j)?;
    if j.p_y().iter().any(|p| *p >= T::one()) {
        return Err(Error::ConstantResponse);
    }
    Ok(())
}

/// `Σ_i p(i, s)² / p(i)`, i.e. `p(s) γ[s][s]`.
fn diagonal_mass<T: Scalar>(j: &JointDistribution<T>, s: usize) -> T {
    scalar::sum(
        j.p_xy()
            .iter()
            .zip(j.p_x())
            .filter(|(_, px)| !px.is_zero())
            .map(|(row, px)| row[s].clone() * row[s].clone() / px.clone()),
    )
}

pub fn association_matrix<T: Scalar>(j: &JointDistribution<T>) -> Result<AssociationMatrix<T>> {
    require_positive_marginal(j)?;
    let n_y = j.n_y();
    let mut gamma = vec![vec![T::zero(); n_y]; n_y];
    for (row, px) in j.p_xy().iter().zip(j.p_x()) {
        if px.is_zero() {
            continue;
        }
        for s in 0..n_y {
            if row[s].is_zero() {
                continue;
            }
            let lead = row[s].clone() / (px.clone() * j.p_y()[s].clone());
            for t in 0..n_y {
                gamma[s][t] = gamma[s][t].clone() + lead.clone() * row[t].clone();
            }
        }
    }
    Ok(AssociationMatrix {
        gamma,
        y_domain: j.y_labels().to_vec(),
    })
}

/// Association vector from the normalised diagonal of the association matrix.
pub fn association_vector<T: Scalar>(j: &JointDistribution<T>) -> Result<AssociationVector<T>> {
    require_nonconstant(j)?;
    let theta = j
        .p_y()
        .iter()
        .enumerate()
        .map(|(s, ps)| {
            let gss = diagonal_mass(j, s) / ps.clone();
            (gss - ps.clone()) / (T::one() - ps.clone())
        })
        .collect();
    Ok(AssociationVector {
        theta,
        y_domain: j.y_labels().to_vec(),
    })
}

/// Same vector through the second moment of the conditional probability,
/// `(E[p(s|X)²] − p(s)²) / (p(s)(1 − p(s)))`.
pub fn association_vector_moments<T: Scalar>(
    j: &JointDistribution<T>,
) -> Result<AssociationVector<T>> {
    require_nonconstant(j)?;
    let n_y = j.n_y();
    let theta = (0..n_y)
        .map(|s| {
            let second = scalar::sum(
                j.p_xy()
                    .iter()
                    .zip(j.p_x())
                    .filter(|(_, px)| !px.is_zero())
                    .map(|(row, px)| {
                        let c = row[s].clone() / px.clone();
                        px.clone() * c.clone() * c
                    }),
            );
            let ps = j.p_y()[s].clone();
            (second - ps.clone() * ps.clone()) / (ps.clone() * (T::one() - ps))
        })
        .collect();
    Ok(AssociationVector {
        theta,
        y_domain: j.y_labels().to_vec(),
    })
}

/// How the components of the association vector are weighted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightScheme<T = f64> {
    /// `α_k ∝ p(k)(1 − p(k))`; reproduces the Goodman–Kruskal τ.
    Gk,
    /// `α_k = 1 / n_Y`.
    Equal,
    /// `α_k ∝ 1 / p(k)`; emphasises rare categories.
    InverseProbability,
    /// Any nonnegative vector with positive sum, normalised.
    Custom(Vec<T>),
}

impl<T> WeightScheme<T> {
    pub fn name(&self) -> &'static str {
        match self {
            WeightScheme::Gk => "gk",
            WeightScheme::Equal => "ew",
            WeightScheme::InverseProbability => "ipw",
            WeightScheme::Custom(_) => "custom",
        }
    }

    /// The three named schemes.
    pub fn named() -> [WeightScheme<T>; 3] {
        [
            WeightScheme::Gk,
            WeightScheme::Equal,
            WeightScheme::InverseProbability,
        ]
    }
}

impl<T> fmt::Display for WeightScheme<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl<T> FromStr for WeightScheme<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gk" => Ok(WeightScheme::Gk),
            "ew" | "equal" => Ok(WeightScheme::Equal),
            "ipw" => Ok(WeightScheme::InverseProbability),
            other => Err(Error::InvalidWeights(format!(
                "unknown scheme `{other}` (expected gk, ew or ipw)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightVector<T = f64> {
    pub alpha: Vec<T>,
    pub regular: bool,
}

impl<T: Scalar> WeightVector<T> {
    fn normalised(raw: Vec<T>) -> Result<Self> {
        if raw.iter().any(|a| a.lt_zero()) {
            return Err(Error::InvalidWeights("negative weight".into()));
        }
        let total = scalar::sum(raw.iter().cloned());
        if !total.gt_zero() {
            return Err(Error::InvalidWeights("weights sum to zero".into()));
        }
        let alpha: Vec<T> = raw.into_iter().map(|a| a / total.clone()).collect();
        let regular = alpha.iter().all(|a| a.gt_zero());
        Ok(Self { alpha, regular })
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }
}

pub fn make_weights<T: Scalar>(scheme: &WeightScheme<T>, p_y: &[T]) -> Result<WeightVector<T>> {
    let needs_positive = matches!(scheme, WeightScheme::Gk | WeightScheme::InverseProbability);
    if needs_positive && p_y.iter().any(|p| !p.gt_zero()) {
        return Err(Error::InvalidWeights(
            "response marginal has a zero-probability category".into(),
        ));
    }
    match scheme {
        WeightScheme::Gk => {
            let raw: Vec<T> = p_y
                .iter()
                .map(|p| p.clone() * (T::one() - p.clone()))
                .collect();
            if raw.iter().all(|a| a.is_zero()) {
                return Err(Error::ConstantResponse);
            }
            WeightVector::normalised(raw)
        }
        WeightScheme::Equal => {
            if p_y.is_empty() {
                return Err(Error::InvalidWeights("empty response domain".into()));
            }
            WeightVector::normalised(vec![T::one(); p_y.len()])
        }
        WeightScheme::InverseProbability => {
            WeightVector::normalised(p_y.iter().map(|p| T::one() / p.clone()).collect())
        }
        WeightScheme::Custom(raw) => {
            if raw.len() != p_y.len() {
                return Err(Error::DimensionMismatch {
                    expected: p_y.len(),
                    found: raw.len(),
                });
            }
            WeightVector::normalised(raw.clone())
        }
    }
}

/// α-association degree `Σ_s α_s θ_s`.
pub fn tau<T: Scalar>(theta: &AssociationVector<T>, alpha: &WeightVector<T>) -> Result<T> {
    if theta.theta.len() != alpha.alpha.len() {
        return Err(Error::DimensionMismatch {
            expected: theta.theta.len(),
            found: alpha.alpha.len(),
        });
    }
    Ok(scalar::sum(
        theta
            .theta
            .iter()
            .zip(&alpha.alpha)
            .map(|(t, a)| t.clone() * a.clone()),
    ))
}

/// Association vector and weights in one call.
pub fn tau_of<T: Scalar>(j: &JointDistribution<T>, scheme: &WeightScheme<T>) -> Result<T> {
    let theta = association_vector(j)?;
    let alpha = make_weights(scheme, j.p_y())?;
    tau(&theta, &alpha)
}

/// Goodman–Kruskal τ evaluated directly from the joint table.
pub fn gk_tau_direct<T: Scalar>(j: &JointDistribution<T>) -> Result<T> {
    let ep_y = gini(j.p_y()).ep_y;
    let denom = T::one() - ep_y.clone();
    if !denom.gt_zero() {
        return Err(Error::ConstantResponse);
    }
    let concentration = scalar::sum((0..j.n_y()).map(|s| diagonal_mass(j, s)));
    Ok((concentration - ep_y) / denom)
}

/// Degree to which `X` determines `Y`: the GK τ, with a constant response
/// counted as fully determined.
pub fn determination<T: Scalar>(j: &JointDistribution<T>) -> Result<T> {
    let observed = j.p_y().iter().filter(|p| p.gt_zero()).count();
    if observed <= 1 {
        return Ok(T::one());
    }
    gk_tau_direct(j)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GiniStats<T = f64> {
    /// `Σ_s p(s)²`
    pub ep_y: T,
    /// `1 − ep_y`
    pub v_g: T,
}

pub fn gini<T: Scalar>(p_y: &[T]) -> GiniStats<T> {
    let ep_y = scalar::sum(p_y.iter().map(|p| p.clone() * p.clone()));
    GiniStats {
        v_g: T::one() - ep_y.clone(),
        ep_y,
    }
}

/// Everything about one `(X, Y)` pair, as serialised by the report layer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssociationReport {
    pub x: String,
    pub y: String,
    pub y_domain: Vec<String>,
    pub p_y: Vec<f64>,
    pub gamma: Vec<Vec<f64>>,
    pub theta: Vec<f64>,
    pub tau_by_scheme: BTreeMap<String, f64>,
}

impl AssociationReport {
    pub fn compute(
        x: impl Into<String>,
        y: impl Into<String>,
        j: &JointDistribution<f64>,
        schemes: &[WeightScheme<f64>],
    ) -> Result<Self> {
        let gamma = association_matrix(j)?;
        let theta = association_vector(j)?;
        let mut tau_by_scheme = BTreeMap::new();
        for scheme in schemes {
            let alpha = make_weights(scheme, j.p_y())?;
            tau_by_scheme.insert(scheme.name().to_string(), tau(&theta, &alpha)?);
        }
        Ok(Self {
            x: x.into(),
            y: y.into(),
            y_domain: gamma.y_domain,
            p_y: j.p_y().to_vec(),
            gamma: gamma.gamma,
            theta: theta.theta,
            tau_by_scheme,
        })
    }
}
