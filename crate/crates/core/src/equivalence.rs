//! Nested equivalence of two explanatory variables with respect to a response.
//!
//! | level | condition |
//! |-------|-----------|
//! | E-1 | `X1`, `X2` determine each other and `X1` determines `Y` |
//! | E-2 | each of `X1`, `X2` determines `Y` |
//! | E-3 | `γ(Y|X1) = γ(Y|X2)` |
//! | E-4 | `Θ(Y|X1) = Θ(Y|X2)` |
//! | E-5 | `τ_α(Y|X1) = τ_α(Y|X2)` |
//!
//! With exact arithmetic (`tol = 0`) every level implies the next one.

use serde::{Deserialize, Serialize};

use crate::association::{self, make_weights, WeightScheme};
use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Default tolerance for exact or fixture data.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub pair: [String; 2],
    pub response: String,
    pub e1: bool,
    pub e2: bool,
    pub e3: bool,
    pub e4: bool,
    pub e5: bool,
    /// Smallest `i` with E-i true.
    pub strongest: Option<u8>,
    pub weights: String,
    pub tolerance: f64,
}

impl EquivalenceReport {
    pub fn levels(&self) -> [bool; 5] {
        [self.e1, self.e2, self.e3, self.e4, self.e5]
    }

    /// True when no level holds without all weaker ones.
    pub fn is_chain(&self) -> bool {
        self.levels().windows(2).all(|w| !w[0] || w[1])
    }
}

fn near_one<T: Scalar>(value: &T, tol: &T) -> bool {
    (T::one() - value.clone()).abs() <= *tol
}

/// Degree to which `given` determines `target` (1 for the same variable).
fn determination<T: Scalar>(ds: &Dataset, target: usize, given: usize) -> Result<T> {
    if target == given {
        return Ok(T::one());
    }
    let comp = ds.composite_of(&[given])?;
    let j = ds.contingency_with(&comp, target)?.to_joint::<T>()?;
    association::determination(&j)
}

pub fn equivalence_levels<T: Scalar>(
    ds: &Dataset,
    x1: &str,
    x2: &str,
    y: &str,
    weights: &WeightScheme<T>,
    tol: T,
) -> Result<EquivalenceReport> {
    let i1 = ds.variable_index(x1)?;
    let i2 = ds.variable_index(x2)?;
    let iy = ds.variable_index(y)?;
    if iy == i1 || iy == i2 {
        return Err(Error::Overlap(y.to_string()));
    }
    let j1 = ds.contingency(&[x1], y)?.to_joint::<T>()?;
    let j2 = ds.contingency(&[x2], y)?.to_joint::<T>()?;
    let alpha = make_weights(weights, j1.p_y())?;
    if !alpha.regular {
        return Err(Error::NonRegularWeights);
    }

    let d_y1 = association::determination(&j1)?;
    let d_y2 = association::determination(&j2)?;
    let e2 = near_one(&d_y1, &tol) && near_one(&d_y2, &tol);
    let e1 = near_one(&d_y1, &tol)
        && near_one(&determination::<T>(ds, i1, i2)?, &tol)
        && near_one(&determination::<T>(ds, i2, i1)?, &tol);

    let g1 = association::association_matrix(&j1)?;
    let g2 = association::association_matrix(&j2)?;
    let e3 = scalar::max_abs_diff(g1.gamma.iter().flatten(), g2.gamma.iter().flatten()) <= tol;

    let t1 = association::association_vector(&j1)?;
    let t2 = association::association_vector(&j2)?;
    let e4 = scalar::max_abs_diff(&t1.theta, &t2.theta) <= tol;

    let tau1 = association::tau(&t1, &alpha)?;
    let tau2 = association::tau(&t2, &alpha)?;
    let e5 = (tau1 - tau2).abs() <= tol;

    let levels = [e1, e2, e3, e4, e5];
    Ok(EquivalenceReport {
        pair: [x1.to_string(), x2.to_string()],
        response: y.to_string(),
        e1,
        e2,
        e3,
        e4,
        e5,
        strongest: levels.iter().position(|&l| l).map(|i| i as u8 + 1),
        weights: weights.name().to_string(),
        tolerance: tol.to_f64(),
    })
}

/// Mutual complete determination of `x1` and `x2`, independent of any response.
pub fn e2prime<T: Scalar>(ds: &Dataset, x1: &str, x2: &str, tol: T) -> Result<bool> {
    let i1 = ds.variable_index(x1)?;
    let i2 = ds.variable_index(x2)?;
    Ok(near_one(&determination::<T>(ds, i1, i2)?, &tol)
        && near_one(&determination::<T>(ds, i2, i1)?, &tol))
}

/// Levels for every unordered pair of non-response variables.
pub fn pairwise_levels(
    ds: &Dataset,
    y: &str,
    weights: &WeightScheme<f64>,
    tol: f64,
) -> Result<Vec<EquivalenceReport>> {
    let names: Vec<&str> = ds.names().into_iter().filter(|&n| n != y).collect();
    let mut out = Vec::new();
    for (a, &x1) in names.iter().enumerate() {
        for &x2 in &names[a + 1..] {
            out.push(equivalence_levels(ds, x1, x2, y, weights, tol)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::MissingPolicy;
    use num_rational::BigRational;

    fn ds(csv: &str) -> Dataset {
        Dataset::from_csv_reader(csv.as_bytes(), MissingPolicy::DropRow).unwrap()
    }

    #[test]
    fn relabeling_is_e2prime() {
        let d = ds("a,b,y\n1,p,0\n2,q,1\n3,r,0\n1,p,1\n");
        assert!(e2prime(&d, "a", "b", 0.0).unwrap());
        let r = equivalence_levels(&d, "a", "b", "y", &WeightScheme::Gk, 1e-12).unwrap();
        assert!(r.e3 && r.e4 && r.e5 && !r.e2);
        assert_eq!(r.strongest, Some(3));
    }

    #[test]
    fn independent_pair_not_e2prime() {
        let d = ds("a,b\n0,0\n0,1\n1,0\n1,1\n");
        assert!(!e2prime(&d, "a", "b", 1e-9).unwrap());
    }

    #[test]
    fn reflexive() {
        let d = ds("a,b,y\n1,p,0\n2,p,1\n3,r,0\n1,q,1\n2,q,2\n");
        for x in ["a", "b"] {
            let r = equivalence_levels(&d, x, x, "y", &WeightScheme::<BigRational>::Gk, BigRational::from_count(0))
                .unwrap();
            assert!(r.e3 && r.e4 && r.e5);
        }
    }

    #[test]
    fn errors() {
        let d = ds("a,b,y\n1,p,0\n2,q,1\n");
        assert!(matches!(
            equivalence_levels(&d, "a", "y", "y", &WeightScheme::Gk, 1e-9),
            Err(Error::Overlap(_))
        ));
        assert!(matches!(
            equivalence_levels(&d, "a", "b", "y", &WeightScheme::Custom(vec![1.0, 0.0]), 1e-9),
            Err(Error::NonRegularWeights)
        ));
    }

    #[test]
    fn determined_pair_is_e1() {
        let d = ds("a,b,y\n1,p,0\n2,q,1\n3,r,1\n");
        let r = equivalence_levels(&d, "a", "b", "y", &WeightScheme::Equal, 1e-12).unwrap();
        assert_eq!(r.strongest, Some(1));
        assert!(r.is_chain());
    }
}
