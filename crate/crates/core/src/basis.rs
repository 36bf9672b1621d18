//! Structural bases: small variable subsets that completely determine every
//! variable of a dataset, found without a response through the
//! concentration functional `Ep(V) = Σ_cells p²`.
//!
//! `Ep` never increases when a variable joins a composite, and it stays
//! equal exactly when the new variable is a function of the composite. A
//! subset whose `Ep` equals that of the full variable set therefore
//! determines all variables.
//!
//! These procedures look for exact functional dependence, so they suit
//! deterministic or administrative data. On sampled data exact dependence
//! is rare and `eps` has to absorb the noise.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::association;
use crate::dataset::{CompositeVariable, Dataset};
use crate::error::{Error, Result};
use crate::selection::{resolve_cap, Criterion, Greedy, SelectionTrace};
pub use crate::selection::TieBreak;
use crate::table::ContingencyTable;

pub const DEFAULT_EPS: f64 = 1e-12;

/// Largest variable count accepted by [`minimal_structural_basis`].
pub const MAX_EXHAUSTIVE_VARIABLES: usize = 20;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpValue {
    pub value: f64,
    pub vars: Vec<String>,
    pub domain_size: usize,
}

impl EpValue {
    /// `1 / |Dmn|`, the value reached by a uniform composite.
    pub fn lower_bound(&self) -> f64 {
        1.0 / self.domain_size as f64
    }
}

fn ep_of(ds: &Dataset, comp: &CompositeVariable) -> f64 {
    let m = ds.n_records() as f64;
    comp.sum_sq_counts() as f64 / (m * m)
}

pub fn ep<S: AsRef<str>>(ds: &Dataset, vars: &[S]) -> Result<EpValue> {
    let comp = ds.composite(vars)?;
    Ok(EpValue {
        value: ep_of(ds, &comp),
        vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
        domain_size: comp.domain_size(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BasisConfig {
    pub eps: f64,
    pub tie_break: TieBreak,
    pub domain_cap: Option<usize>,
    /// Number of random variable subsets checked by [`verify_basis`].
    pub subset_checks: usize,
    pub seed: u64,
}

impl Default for BasisConfig {
    fn default() -> Self {
        Self {
            eps: DEFAULT_EPS,
            tie_break: TieBreak::LowestIndex,
            domain_cap: None,
            subset_checks: 32,
            seed: 0,
        }
    }
}

/// Forward selection minimising `Ep`, then backward removal of members whose
/// absence leaves `Ep` unchanged within `eps`.
pub fn structural_basis(ds: &Dataset, config: &BasisConfig) -> Result<SelectionTrace> {
    if !(config.eps >= 0.0) {
        return Err(Error::InvalidParameter("eps must be nonnegative".into()));
    }
    let greedy = Greedy {
        ds,
        candidates: (0..ds.n_variables()).collect(),
        eps: config.eps,
        cap: resolve_cap(ds, config.domain_cap),
        tie: config.tie_break,
        score: |c: &CompositeVariable| Ok(ep_of(ds, c)),
        empty_score: 1.0,
    };
    let outcome = greedy.run(|v| -v)?;
    Ok(SelectionTrace {
        criterion: Criterion::Ep,
        steps: outcome.steps,
        pruned: outcome.pruned,
        basis: outcome
            .basis
            .iter()
            .map(|&i| ds.variable(i).name().to_string())
            .collect(),
        tau_final: None,
        tau_all: None,
        ep_final: Some(outcome.best),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisReport {
    pub basis: Vec<String>,
    /// Every variable has GK τ = 1 given the basis.
    pub determines_all: bool,
    pub undetermined: Vec<String>,
    pub subsets_checked: usize,
    /// Every checked subset composite is determined by the basis.
    pub subsets_determined: bool,
    /// All conditionals `p(V = s | basis cell)` are 0 or 1.
    pub zero_one: bool,
    /// No member can be dropped without losing determination.
    pub minimal: bool,
    pub redundant: Vec<String>,
}

impl BasisReport {
    pub fn passed(&self) -> bool {
        self.determines_all && self.subsets_determined && self.zero_one && self.minimal
    }
}

/// Row-code view of a possibly empty selection.
fn codes_of(ds: &Dataset, parts: &[usize]) -> Result<(Vec<u32>, usize)> {
    if parts.is_empty() {
        return Ok((vec![0; ds.n_records()], 1));
    }
    let comp = ds.composite_of(parts)?;
    let size = comp.domain_size();
    Ok((comp.codes().to_vec(), size))
}

fn table(given: &(Vec<u32>, usize), target: &(Vec<u32>, usize)) -> Result<ContingencyTable> {
    let labels = |n: usize| (0..n).map(|i| i.to_string()).collect::<Vec<_>>();
    ContingencyTable::from_codes("given", labels(given.1), &given.0, "target", labels(target.1), &target.0)
}

fn determined(given: &(Vec<u32>, usize), target: &(Vec<u32>, usize), eps: f64) -> Result<bool> {
    let j = table(given, target)?.to_joint::<f64>()?;
    Ok(association::determination(&j)? >= 1.0 - eps)
}

fn zero_one(given: &(Vec<u32>, usize), target: &(Vec<u32>, usize), eps: f64) -> Result<bool> {
    let ct = table(given, target)?;
    Ok(ct.counts().iter().all(|row| {
        let total: u64 = row.iter().sum();
        total == 0
            || row.iter().all(|&c| {
                let p = c as f64 / total as f64;
                p <= eps || p >= 1.0 - eps
            })
    }))
}

/// Checks the defining properties of a structural basis.
pub fn verify_basis<S: AsRef<str>>(
    ds: &Dataset,
    basis: &[S],
    config: &BasisConfig,
) -> Result<BasisReport> {
    let eps = config.eps;
    let members = ds.indices_of(basis)?;
    let given = codes_of(ds, &members)?;
    let singles: Vec<(Vec<u32>, usize)> = (0..ds.n_variables())
        .map(|v| codes_of(ds, &[v]))
        .collect::<Result<_>>()?;

    let mut undetermined = Vec::new();
    let mut all_zero_one = true;
    for (v, target) in singles.iter().enumerate() {
        if !determined(&given, target, eps)? {
            undetermined.push(ds.variable(v).name().to_string());
        }
        all_zero_one &= zero_one(&given, target, eps)?;
    }

    let subsets = sample_subsets(ds.n_variables(), config.subset_checks, config.seed);
    let mut subsets_determined = true;
    for subset in &subsets {
        let target = codes_of(ds, subset)?;
        subsets_determined &= determined(&given, &target, eps)?;
    }

    let mut redundant = Vec::new();
    for &m in &members {
        let rest: Vec<usize> = members.iter().copied().filter(|&b| b != m).collect();
        let reduced = codes_of(ds, &rest)?;
        let mut still_all = true;
        for target in &singles {
            if !determined(&reduced, target, eps)? {
                still_all = false;
                break;
            }
        }
        if still_all {
            redundant.push(ds.variable(m).name().to_string());
        }
    }

    Ok(BasisReport {
        basis: basis.iter().map(|b| b.as_ref().to_string()).collect(),
        determines_all: undetermined.is_empty(),
        undetermined,
        subsets_checked: subsets.len(),
        subsets_determined,
        zero_one: all_zero_one,
        minimal: redundant.is_empty(),
        redundant,
    })
}

/// Up to `limit` distinct non-empty subsets of `0..n`; all of them when
/// there are at most `limit`.
fn sample_subsets(n: usize, limit: usize, seed: u64) -> Vec<Vec<usize>> {
    if n < usize::BITS as usize - 1 && (1usize << n) - 1 <= limit {
        return (1usize..1 << n)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
            .collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Vec<usize>> = Vec::with_capacity(limit);
    let mut attempts = 0;
    while out.len() < limit && attempts < limit * 100 {
        attempts += 1;
        let k = rng.gen_range(1..=n);
        let mut all: Vec<usize> = (0..n).collect();
        all.shuffle(&mut rng);
        let mut subset = all[..k].to_vec();
        subset.sort_unstable();
        if !out.contains(&subset) {
            out.push(subset);
        }
    }
    out
}

/// Smallest structural basis by exhaustive search over subsets of
/// increasing size (lexicographic order within a size).
pub fn minimal_structural_basis(ds: &Dataset, eps: f64) -> Result<Vec<String>> {
    let n = ds.n_variables();
    if n > MAX_EXHAUSTIVE_VARIABLES {
        return Err(Error::InvalidParameter(format!(
            "exhaustive basis search supports at most {MAX_EXHAUSTIVE_VARIABLES} variables, got {n}"
        )));
    }
    let all: Vec<usize> = (0..n).collect();
    let m = ds.n_records() as f64;
    let target = ds.composite_of(&all)?.sum_sq_counts();
    for k in 1..=n {
        let mut found = None;
        for_each_combination(n, k, &mut |subset| {
            if found.is_some() {
                return Ok(());
            }
            let sq = ds.composite_of(subset)?.sum_sq_counts();
            if (sq - target) as f64 / (m * m) <= eps {
                found = Some(subset.to_vec());
            }
            Ok(())
        })?;
        if let Some(subset) = found {
            return Ok(subset
                .into_iter()
                .map(|i| ds.variable(i).name().to_string())
                .collect());
        }
    }
    unreachable!("the full variable set is always a basis")
}

fn for_each_combination(
    n: usize,
    k: usize,
    f: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    fn rec(
        start: usize,
        n: usize,
        k: usize,
        acc: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        if acc.len() == k {
            return f(acc);
        }
        for i in start..n {
            if n - i < k - acc.len() {
                break;
            }
            acc.push(i);
            rec(i + 1, n, k, acc, f)?;
            acc.pop();
        }
        Ok(())
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::MissingPolicy;

    fn ds(csv: &str) -> Dataset {
        Dataset::from_csv_reader(csv.as_bytes(), MissingPolicy::DropRow).unwrap()
    }

    #[test]
    fn uniform_ep() {
        let d = ds("v\na\nb\nc\nd\n");
        assert!((ep(&d, &["v"]).unwrap().value - 0.25).abs() < 1e-15);
        assert!(matches!(ep::<&str>(&d, &[]), Err(Error::EmptySelection)));
    }

    #[test]
    fn relabeling_gives_single_member() {
        let d = ds("v1,v2\na,x\nb,y\nc,z\na,x\n");
        let t = structural_basis(&d, &BasisConfig::default()).unwrap();
        assert_eq!(t.basis, ["v1"]);
        let t = structural_basis(
            &d,
            &BasisConfig {
                tie_break: TieBreak::HighestIndex,
                ..BasisConfig::default()
            },
        )
        .unwrap();
        assert_eq!(t.basis, ["v2"]);
    }

    #[test]
    fn function_of_two() {
        // v3 = v1 xor v2
        let d = ds("v1,v2,v3\n0,0,0\n0,1,1\n1,0,1\n1,1,0\n0,0,0\n");
        let t = structural_basis(&d, &BasisConfig::default()).unwrap();
        assert_eq!(t.basis.len(), 2);
        let r = verify_basis(&d, &t.basis, &BasisConfig::default()).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = verify_basis(&d, &t.basis[..1], &BasisConfig::default()).unwrap();
        assert!(!r.determines_all);
        let r = verify_basis(&d, &["v1", "v2", "v3"], &BasisConfig::default()).unwrap();
        assert!(r.determines_all && !r.minimal);
        assert_eq!(minimal_structural_basis(&d, 0.0).unwrap(), ["v1", "v2"]);
    }

    #[test]
    fn subsets_enumerated_when_few() {
        assert_eq!(sample_subsets(3, 32, 1).len(), 7);
        let s = sample_subsets(10, 32, 1);
        assert_eq!(s.len(), 32);
        assert_eq!(s, sample_subsets(10, 32, 1));
    }
}
