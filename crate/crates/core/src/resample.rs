//! Stratified bootstrap with percentile intervals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::association::WeightScheme;
use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::selection::tau_joint;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BootstrapConfig {
    pub replicates: usize,
    pub level: f64,
    pub seed: u64,
}

impl Default for BootstrapConfig {
    fn default() -> Self {
        Self {
            replicates: 1000,
            level: 0.95,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BootstrapResult {
    /// Statistic on the full sample.
    pub point: f64,
    /// One value per replicate, in replicate order.
    pub replicates: Vec<f64>,
    pub ci_low: f64,
    pub ci_high: f64,
    pub mean: f64,
    pub level: f64,
}

/// Linear-interpolation quantile of sorted values.
fn quantile(sorted: &[f64], q: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * q;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Central percentile interval at `level`.
pub fn percentile_interval(values: &[f64], level: f64) -> Result<(f64, f64)> {
    if values.is_empty() {
        return Err(Error::InvalidParameter("no values".into()));
    }
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::InvalidParameter("level must lie in (0, 1)".into()));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let tail = (1.0 - level) / 2.0;
    Ok((quantile(&sorted, tail), quantile(&sorted, 1.0 - tail)))
}

/// Resamples with replacement inside each category of `strata`, keeping
/// every stratum at its original size. Replicate `b` uses stream `b` of the
/// seeded generator, so results do not depend on the thread count.
pub fn stratified_bootstrap<F>(
    ds: &Dataset,
    strata: &str,
    stat: F,
    cfg: &BootstrapConfig,
) -> Result<BootstrapResult>
where
    F: Fn(&Dataset) -> Result<f64> + Sync,
{
    if cfg.replicates == 0 {
        return Err(Error::InvalidParameter("at least one replicate is required".into()));
    }
    if !(cfg.level > 0.0 && cfg.level < 1.0) {
        return Err(Error::InvalidParameter("level must lie in (0, 1)".into()));
    }
    let s = ds.variable_index(strata)?;
    let mut groups = vec![Vec::new(); ds.variable(s).len()];
    for (i, &c) in ds.column(s).iter().enumerate() {
        groups[c as usize].push(i);
    }
    if let Some(g) = groups.iter().position(Vec::is_empty) {
        return Err(Error::EmptyCategory(ds.variable(s).labels()[g].clone()));
    }

    let point = stat(ds)?;
    let replicates: Vec<f64> = (0..cfg.replicates)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(b as u64);
            let rows: Vec<usize> = groups
                .iter()
                .flat_map(|g| {
                    (0..g.len())
                        .map(|_| g[rng.gen_range(0..g.len())])
                        .collect::<Vec<_>>()
                })
                .collect();
            stat(&ds.select_records(&rows))
        })
        .collect::<Result<_>>()?;
    // centred on the first value so a constant statistic has an exact mean
    let mean = replicates[0]
        + replicates.iter().map(|v| v - replicates[0]).sum::<f64>() / replicates.len() as f64;
    let (ci_low, ci_high) = percentile_interval(&replicates, cfg.level)?;
    Ok(BootstrapResult {
        point,
        replicates,
        ci_low,
        ci_high,
        mean,
        level: cfg.level,
    })
}

/// `τ_α(Y | subset) / τ_α(Y | fullset)`.
pub fn retention_ratio<S: AsRef<str>>(
    ds: &Dataset,
    y: &str,
    subset: &[S],
    fullset: &[S],
    scheme: &WeightScheme<f64>,
) -> Result<f64> {
    if let Some(v) = subset
        .iter()
        .find(|v| !fullset.iter().any(|f| f.as_ref() == v.as_ref()))
    {
        return Err(Error::InvalidParameter(format!(
            "`{}` is not in the full variable set",
            v.as_ref()
        )));
    }
    let full = tau_joint(ds, y, fullset, scheme)?;
    if full == 0.0 {
        return Err(Error::ZeroReference);
    }
    Ok(tau_joint(ds, y, subset, scheme)? / full)
}
