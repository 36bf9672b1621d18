//! Forward-backward search for an α-association basis of a response.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::association::{self, make_weights, WeightScheme, WeightVector};
use crate::dataset::{CompositeVariable, Dataset};
use crate::error::{Error, Result};

pub const DEFAULT_EPS_GAIN: f64 = 1e-9;

/// Scores closer than this are treated as ties.
const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SelectionConfig {
    /// Minimum improvement for a forward step; maximum loss for a backward prune.
    pub eps_gain: f64,
    /// Largest composite domain allowed; `None` means ten times the record count.
    pub domain_cap: Option<usize>,
}

impl Default for SelectionConfig {
    fn default() -> Self {
        Self {
            eps_gain: DEFAULT_EPS_GAIN,
            domain_cap: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Maximise `τ_α` of the response.
    Tau,
    /// Minimise `Ep` of the composite.
    Ep,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateScore {
    pub variable: String,
    pub value: f64,
    pub domain_size: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionStep {
    pub variable: String,
    /// Criterion value after adding `variable`.
    pub value: f64,
    pub domain_size: usize,
    pub candidates: Vec<CandidateScore>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionTrace {
    pub criterion: Criterion,
    pub steps: Vec<SelectionStep>,
    pub pruned: Vec<String>,
    pub basis: Vec<String>,
    pub tau_final: Option<f64>,
    /// `τ_α` given every explanatory variable, when its composite fits the cap.
    pub tau_all: Option<f64>,
    pub ep_final: Option<f64>,
}

impl SelectionTrace {
    pub fn forward_picks(&self) -> Vec<&str> {
        self.steps.iter().map(|s| s.variable.as_str()).collect()
    }
}

/// Order among candidates whose scores tie.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TieBreak {
    #[default]
    LowestIndex,
    HighestIndex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Candidate {
    pub index: usize,
    pub domain_size: usize,
}

/// Among equally scored candidates: smallest domain, then smallest index.
pub fn first_pick_tiebreak(candidates: &[Candidate]) -> Option<usize> {
    tiebreak(candidates, TieBreak::LowestIndex)
}

pub(crate) fn tiebreak(candidates: &[Candidate], order: TieBreak) -> Option<usize> {
    candidates
        .iter()
        .min_by(|a, b| {
            let by_index = match order {
                TieBreak::LowestIndex => a.index.cmp(&b.index),
                TieBreak::HighestIndex => b.index.cmp(&a.index),
            };
            a.domain_size.cmp(&b.domain_size).then(by_index)
        })
        .map(|c| c.index)
}

pub(crate) fn resolve_cap(ds: &Dataset, cap: Option<usize>) -> usize {
    cap.unwrap_or_else(|| ds.n_records().saturating_mul(10))
}

/// Greedy forward-backward search shared by the supervised and the
/// structural procedures. Scores are oriented so that larger is better.
pub(crate) struct Greedy<'a, F> {
    pub ds: &'a Dataset,
    pub candidates: Vec<usize>,
    pub eps: f64,
    pub cap: usize,
    pub tie: TieBreak,
    pub score: F,
    /// Score of the empty selection.
    pub empty_score: f64,
}

pub(crate) struct GreedyOutcome {
    pub steps: Vec<SelectionStep>,
    pub pruned: Vec<String>,
    pub basis: Vec<usize>,
    pub best: f64,
}

impl<'a, F> Greedy<'a, F>
where
    F: Fn(&CompositeVariable) -> Result<f64> + Sync,
{
    fn build(&self, parts: &[usize]) -> Result<CompositeVariable> {
        let comp = self.ds.composite_of(parts)?;
        self.check_cap(&comp)?;
        Ok(comp)
    }

    fn check_cap(&self, comp: &CompositeVariable) -> Result<()> {
        if comp.domain_size() > self.cap {
            return Err(Error::DomainCap {
                size: comp.domain_size(),
                cap: self.cap,
            });
        }
        Ok(())
    }

    pub fn run(&self, orient: impl Fn(f64) -> f64) -> Result<GreedyOutcome> {
        let name = |i: usize| self.ds.variable(i).name().to_string();
        let mut chosen: Vec<usize> = Vec::new();
        let mut current: Option<CompositeVariable> = None;
        let mut current_score = self.empty_score;
        let mut steps = Vec::new();

        loop {
            let remaining: Vec<usize> = self
                .candidates
                .iter()
                .copied()
                .filter(|c| !chosen.contains(c))
                .collect();
            if remaining.is_empty() {
                break;
            }
            let scored: Vec<(usize, f64, usize)> = remaining
                .par_iter()
                .map(|&c| {
                    let comp = match &current {
                        Some(cur) => cur.extend(self.ds, c),
                        None => self.ds.composite_of(&[c])?,
                    };
                    self.check_cap(&comp)?;
                    Ok((c, (self.score)(&comp)?, comp.domain_size()))
                })
                .collect::<Result<_>>()?;

            let best = scored
                .iter()
                .map(|&(_, v, _)| orient(v))
                .fold(f64::NEG_INFINITY, f64::max);
            let ties: Vec<Candidate> = scored
                .iter()
                .filter(|&&(_, v, _)| orient(v) >= best - TIE_TOL)
                .map(|&(index, _, domain_size)| Candidate { index, domain_size })
                .collect();
            let pick = tiebreak(&ties, self.tie).expect("non-empty tie set");
            let &(_, value, domain_size) = scored.iter().find(|s| s.0 == pick).unwrap();

            if !chosen.is_empty() && orient(value) - orient(current_score) <= self.eps {
                break;
            }
            let comp = match &current {
                Some(cur) => cur.extend(self.ds, pick),
                None => self.ds.composite_of(&[pick])?,
            };
            chosen.push(pick);
            current = Some(comp);
            current_score = value;
            steps.push(SelectionStep {
                variable: name(pick),
                value,
                domain_size,
                candidates: scored
                    .iter()
                    .map(|&(c, v, d)| CandidateScore {
                        variable: name(c),
                        value: v,
                        domain_size: d,
                    })
                    .collect(),
            });
        }

        let reference = orient(current_score);
        let mut basis = chosen.clone();
        let mut pruned = Vec::new();
        for &v in chosen.iter().rev() {
            if basis.len() <= 1 {
                break;
            }
            let without: Vec<usize> = basis.iter().copied().filter(|&b| b != v).collect();
            let value = orient((self.score)(&self.build(&without)?)?);
            if reference - value <= self.eps {
                basis = without;
                pruned.push(name(v));
            }
        }
        let best = if basis.is_empty() {
            self.empty_score
        } else {
            (self.score)(&self.build(&basis)?)?
        };
        Ok(GreedyOutcome {
            steps,
            pruned,
            basis,
            best,
        })
    }
}

struct TauScorer<'a> {
    ds: &'a Dataset,
    y: usize,
    alpha: WeightVector<f64>,
}

impl TauScorer<'_> {
    fn score(&self, comp: &CompositeVariable) -> Result<f64> {
        let j = self.ds.contingency_with(comp, self.y)?.to_joint::<f64>()?;
        association::tau(&association::association_vector(&j)?, &self.alpha)
    }
}

fn response_weights(ds: &Dataset, y: usize, scheme: &WeightScheme<f64>) -> Result<WeightVector<f64>> {
    let m = ds.n_records() as f64;
    let mut counts = vec![0u64; ds.variable(y).len()];
    for &c in ds.column(y) {
        counts[c as usize] += 1;
    }
    let p_y: Vec<f64> = counts.iter().map(|&c| c as f64 / m).collect();
    make_weights(scheme, &p_y)
}

/// `τ_α` of `y` given the composite of `xs`.
pub fn tau_joint<S: AsRef<str>>(
    ds: &Dataset,
    y: &str,
    xs: &[S],
    scheme: &WeightScheme<f64>,
) -> Result<f64> {
    if xs.is_empty() {
        return Err(Error::EmptySelection);
    }
    if xs.iter().any(|x| x.as_ref() == y) {
        return Err(Error::Overlap(y.to_string()));
    }
    let j = ds.contingency(xs, y)?.to_joint::<f64>()?;
    association::tau_of(&j, scheme)
}

/// Forward selection maximising `τ_α` of the response, followed by removal
/// of members whose absence costs at most `eps_gain`.
///
/// The first pick is always taken; afterwards a step must improve `τ_α` by
/// more than `eps_gain`. Ties go to the smaller composite domain, then to the
/// smaller column index. At least one variable is kept.
pub fn select_basis(
    ds: &Dataset,
    y: &str,
    scheme: &WeightScheme<f64>,
    config: &SelectionConfig,
) -> Result<SelectionTrace> {
    if !(config.eps_gain >= 0.0) {
        return Err(Error::InvalidParameter("eps_gain must be nonnegative".into()));
    }
    let y_idx = ds.variable_index(y)?;
    let candidates: Vec<usize> = (0..ds.n_variables()).filter(|&i| i != y_idx).collect();
    if candidates.is_empty() {
        return Err(Error::EmptySelection);
    }
    let alpha = response_weights(ds, y_idx, scheme)?;
    if !alpha.regular {
        return Err(Error::NonRegularWeights);
    }
    let scorer = TauScorer {
        ds,
        y: y_idx,
        alpha,
    };
    let cap = resolve_cap(ds, config.domain_cap);
    let greedy = Greedy {
        ds,
        candidates: candidates.clone(),
        eps: config.eps_gain,
        cap,
        tie: TieBreak::LowestIndex,
        score: |c: &CompositeVariable| scorer.score(c),
        empty_score: 0.0,
    };
    let outcome = greedy.run(|v| v)?;

    let all = ds.composite_of(&candidates)?;
    let tau_all = if all.domain_size() <= cap {
        Some(scorer.score(&all)?)
    } else {
        None
    };
    Ok(SelectionTrace {
        criterion: Criterion::Tau,
        steps: outcome.steps,
        pruned: outcome.pruned,
        basis: outcome
            .basis
            .iter()
            .map(|&i| ds.variable(i).name().to_string())
            .collect(),
        tau_final: Some(outcome.best),
        tau_all,
        ep_final: None,
    })
}
