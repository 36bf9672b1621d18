//! Simulated flu data: a three-category response driven by two binary
//! causes, plus noisy and derived copies of those causes.
//!
//! Columns are `Y, X1, X2, R3, R4, S5` followed by any independent noise
//! columns `N1, N2, ...`. `R3` and `R4` are degraded copies of `X1` and
//! `X2`; `S5 = X1 · X2 · Z` with an independent Bernoulli `Z`. Given
//! `(X1, X2)` every other column is independent of `Y`.

use num_rational::Rational64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dataset::{Dataset, Variable};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::table::ProbabilityTable;

pub const FLU_COLUMNS: [&str; 6] = ["Y", "X1", "X2", "R3", "R4", "S5"];

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FluSpec {
    /// `P(X1, X2)` indexed by `2·x1 + x2`.
    pub p_x1x2: [Rational64; 4],
    /// `P(Y | X1, X2)` indexed like `p_x1x2`.
    pub cond_y: [[Rational64; 3]; 4],
    /// `P(R = 1 | parent)` indexed by the parent value.
    pub r_one: [Rational64; 2],
    pub z_prob: Rational64,
    /// Number of extra independent fair binary columns.
    pub irrelevant_vars: usize,
}

impl Default for FluSpec {
    fn default() -> Self {
        Self {
            p_x1x2: [r(9, 16), r(3, 16), r(3, 16), r(1, 16)],
            cond_y: [
                [r(95, 100), r(5, 100), r(0, 1)],
                [r(50, 100), r(50, 100), r(0, 1)],
                [r(30, 100), r(70, 100), r(0, 1)],
                [r(0, 1), r(5, 100), r(95, 100)],
            ],
            r_one: [r(0, 1), r(9, 10)],
            z_prob: r(8, 10),
            irrelevant_vars: 0,
        }
    }
}

impl FluSpec {
    pub fn with_irrelevant(mut self, k: usize) -> Self {
        self.irrelevant_vars = k;
        self
    }

    pub fn column_names(&self) -> Vec<String> {
        FLU_COLUMNS
            .iter()
            .map(|c| c.to_string())
            .chain((1..=self.irrelevant_vars).map(|i| format!("N{i}")))
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let unit = |p: &Rational64| *p >= r(0, 1) && *p <= r(1, 1);
        let one = r(1, 1);
        let ok = self.p_x1x2.iter().all(unit)
            && self.p_x1x2.iter().sum::<Rational64>() == one
            && self
                .cond_y
                .iter()
                .all(|row| row.iter().all(unit) && row.iter().sum::<Rational64>() == one)
            && self.r_one.iter().all(unit)
            && unit(&self.z_prob);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter("flu specification is not a distribution".into()))
        }
    }

    fn variables(&self) -> Vec<Variable> {
        let labels = |k: usize| (0..k).map(|i| i.to_string()).collect::<Vec<_>>();
        self.column_names()
            .into_iter()
            .enumerate()
            .map(|(i, name)| Variable::new(name, labels(if i == 0 { 3 } else { 2 })).unwrap())
            .collect()
    }
}

fn f(p: Rational64) -> f64 {
    p.to_f64().unwrap()
}

fn draw_index(rng: &mut ChaCha8Rng, probs: &[f64]) -> u32 {
    let u: f64 = rng.gen();
    let mut acc = 0.0;
    for (i, &p) in probs.iter().enumerate() {
        acc += p;
        if u < acc {
            return i as u32;
        }
    }
    // u landed in the rounding slack above the cumulative sum
    probs.iter().rposition(|&p| p > 0.0).unwrap() as u32
}

pub fn gen_flu(n: usize, seed: u64) -> Result<Dataset> {
    gen_flu_with(&FluSpec::default(), n, seed)
}

pub fn gen_flu_with(spec: &FluSpec, n: usize, seed: u64) -> Result<Dataset> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    spec.validate()?;
    let p_x = spec.p_x1x2.map(f);
    let cond = spec.cond_y.map(|row| row.map(f));
    let r_one = spec.r_one.map(f);
    let z = f(spec.z_prob);

    let width = FLU_COLUMNS.len() + spec.irrelevant_vars;
    let mut columns = vec![Vec::with_capacity(n); width];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..n {
        let cell = draw_index(&mut rng, &p_x) as usize;
        let (x1, x2) = ((cell >> 1) as u32, (cell & 1) as u32);
        let y = draw_index(&mut rng, &cond[cell]);
        let r3 = rng.gen_bool(r_one[x1 as usize]) as u32;
        let r4 = rng.gen_bool(r_one[x2 as usize]) as u32;
        let s5 = x1 * x2 * rng.gen_bool(z) as u32;
        for (col, v) in columns.iter_mut().zip([y, x1, x2, r3, r4, s5]) {
            col.push(v);
        }
        for col in &mut columns[FLU_COLUMNS.len()..] {
            col.push(rng.gen_bool(0.5) as u32);
        }
    }
    Dataset::new(spec.variables(), columns)
}

pub fn population_joint_flu<T: Scalar>() -> Result<ProbabilityTable<T>> {
    population_joint(&FluSpec::default())
}

/// Exact joint distribution of every generated column.
pub fn population_joint<T: Scalar>(spec: &FluSpec) -> Result<ProbabilityTable<T>> {
    spec.validate()?;
    let zero = r(0, 1);
    let one = r(1, 1);
    let bern = |p: Rational64, v: u32| if v == 1 { p } else { one - p };
    let noise = r(1, 2).pow(spec.irrelevant_vars as i32);

    let mut cells = Vec::new();
    for cell in 0..4 {
        let (x1, x2) = ((cell >> 1) as u32, (cell & 1) as u32);
        for y in 0..3u32 {
            let base = spec.p_x1x2[cell] * spec.cond_y[cell][y as usize];
            if base == zero {
                continue;
            }
            for r3 in 0..2 {
                for r4 in 0..2 {
                    for zv in 0..2 {
                        let p = base
                            * bern(spec.r_one[x1 as usize], r3)
                            * bern(spec.r_one[x2 as usize], r4)
                            * bern(spec.z_prob, zv)
                            * noise;
                        if p == zero {
                            continue;
                        }
                        let head = [y, x1, x2, r3, r4, x1 * x2 * zv];
                        for bits in 0..1u64 << spec.irrelevant_vars {
                            let mut key = head.to_vec();
                            key.extend((0..spec.irrelevant_vars).map(|i| (bits >> i & 1) as u32));
                            cells.push((key, T::from_ratio(*p.numer(), *p.denom())));
                        }
                    }
                }
            }
        }
    }
    ProbabilityTable::new(spec.variables(), cells)
}
