//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line to
//! the real stdout (bypassing capture) before asserting.

mod common;

use std::io::Write;
use std::time::Instant;

use catassoc::association::{self, make_weights, WeightScheme};
use catassoc::basis::{self, BasisConfig, TieBreak};
use catassoc::equivalence::{equivalence_levels, e2prime};
use catassoc::fixtures;
use catassoc::predict::{split_validate, SplitConfig};
use catassoc::resample::{retention_ratio, stratified_bootstrap, BootstrapConfig};
use catassoc::selection::{select_basis, tau_joint, SelectionConfig};
use catassoc::simgen::{self, FluSpec};
use catassoc::{Dataset, JointDistribution, MissingPolicy, Scalar, Variable};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn verdict(id: &str, pass: bool, detail: &str) {
    let line = format!("criterion {id}: {} | {detail}\n", if pass { "PASS" } else { "FAIL" });
    let _ = std::io::stdout().lock().write_all(line.as_bytes());
    assert!(pass, "criterion {id} failed: {detail}");
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::from_ratio(n, d)
}

// ---------------------------------------------------------------- 1

struct Printed {
    x: &'static str,
    y: &'static str,
    tau: f64,
    theta: [f64; 3],
    gamma: [[f64; 3]; 3],
}

const LOAN_PRINTS: [Printed; 8] = [
    Printed { x: "On-Time", y: "Risk", tau: 0.0432, theta: [0.0451, 0.0002, 0.0479],
        gamma: [[0.5108, 0.0407, 0.4485], [0.4959, 0.0402, 0.4639], [0.4631, 0.0393, 0.4976]] },
    Printed { x: "Age", y: "Risk", tau: 0.5137, theta: [0.5451, 0.0018, 0.5611],
        gamma: [[0.7669, 0.0437, 0.1894], [0.5324, 0.0417, 0.4258], [0.1956, 0.0361, 0.7684]] },
    Printed { x: "Income", y: "Risk", tau: 0.0272, theta: [0.0368, 0.0207, 0.0185],
        gamma: [[0.5065, 0.0345, 0.459], [0.4206, 0.0599, 0.5195], [0.4739, 0.044, 0.4821]] },
    Printed { x: "Credit", y: "Risk", tau: 0.0009, theta: [0.0006, 0.0008, 0.0012],
        gamma: [[0.488, 0.0401, 0.4719], [0.4892, 0.0408, 0.4700], [0.4872, 0.0398, 0.4729]] },
    Printed { x: "On-Time", y: "Credit", tau: 0.0319, theta: [0.0322, 0.0123, 0.0488],
        gamma: [[0.1468, 0.3328, 0.5204], [0.1281, 0.3162, 0.5556], [0.1074, 0.2979, 0.5946]] },
    Printed { x: "Age", y: "Credit", tau: 0.0035, theta: [0.0099, 0.0028, 0.0014],
        gamma: [[0.1272, 0.3023, 0.5705], [0.1164, 0.3096, 0.5740], [0.1178, 0.3078, 0.5744]] },
    Printed { x: "Income", y: "Credit", tau: 0.001, theta: [0.0007, 0.0006, 0.0016],
        gamma: [[0.1191, 0.3085, 0.5724], [0.1188, 0.3081, 0.5731], [0.1182, 0.3073, 0.5745]] },
    Printed { x: "Risk", y: "Credit", tau: 0.0005, theta: [0.0016, 0.0003, 0.0002],
        gamma: [[0.1199, 0.3069, 0.5733], [0.1181, 0.3079, 0.5739], [0.1183, 0.3077, 0.5739]] },
];

#[test]
fn criterion_01_loan_reproduction() {
    const TOL: f64 = 5e-4;
    let start = Instant::now();
    let ds = fixtures::loan();
    let mut worst = 0.0f64;
    for p in &LOAN_PRINTS {
        let j = ds.contingency(&[p.x], p.y).unwrap().to_joint::<f64>().unwrap();
        let g = association::association_matrix(&j).unwrap();
        let t = association::association_vector(&j).unwrap();
        let tau = association::tau_of(&j, &WeightScheme::Gk).unwrap();
        worst = worst.max((tau - p.tau).abs());
        for (a, b) in t.theta.iter().zip(p.theta) {
            worst = worst.max((a - b).abs());
        }
        for (a, b) in g.gamma.iter().flatten().zip(p.gamma.iter().flatten()) {
            worst = worst.max((a - b).abs());
        }
    }
    let p_risk = ds.contingency(&["Credit"], "Risk").unwrap().to_joint::<f64>().unwrap();
    let p_credit = ds.contingency(&["Risk"], "Credit").unwrap().to_joint::<f64>().unwrap();
    for (got, want) in p_risk
        .p_y()
        .iter()
        .zip([0.4877, 0.0400, 0.4723])
        .chain(p_credit.p_y().iter().zip([0.1185, 0.3077, 0.5738]))
    {
        worst = worst.max((got - want).abs());
    }
    let elapsed = start.elapsed().as_secs_f64();
    verdict(
        "1",
        worst <= TOL && elapsed < 1.0,
        &format!("max deviation {worst:.2e} (tol {TOL:e}) over 8 tables, {elapsed:.3}s (< 1s)"),
    );
}

// ---------------------------------------------------------------- 2

#[test]
fn criterion_02_gk_identity() {
    const TOL: f64 = 1e-12;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let j = common::random_table(&mut rng, 12, 12).to_joint::<f64>().unwrap();
        let direct = association::gk_tau_direct(&j).unwrap();
        let via = association::tau_of(&j, &WeightScheme::Gk).unwrap();
        worst = worst.max((direct - via).abs());
    }
    let elapsed = start.elapsed().as_secs_f64();
    verdict(
        "2",
        worst <= TOL && elapsed < 5.0,
        &format!("max |direct - weighted| {worst:.2e} (tol {TOL:e}) on 1000 joints up to 12x12, {elapsed:.2}s (< 5s)"),
    );
}

// ---------------------------------------------------------------- 3

fn exact_joint(ds: &Dataset, x: &str) -> JointDistribution<BigRational> {
    ds.contingency(&[x], "Y").unwrap().to_joint::<BigRational>().unwrap()
}

#[test]
fn criterion_03a_tenths_theta_and_equal_tau() {
    let ds = fixtures::appendix_tenths();
    let t1 = association::association_vector(&exact_joint(&ds, "X1")).unwrap();
    let t2 = association::association_vector(&exact_joint(&ds, "X2")).unwrap();
    let tau1 = association::tau_of(&exact_joint(&ds, "X1"), &WeightScheme::Gk).unwrap();
    let tau2 = association::tau_of(&exact_joint(&ds, "X2"), &WeightScheme::Gk).unwrap();
    let pass = t1.theta == [q(1, 6), q(17, 72), q(23, 48)]
        && t2.theta == [q(17, 72), q(1, 6), q(23, 48)]
        && tau1 == tau2;
    verdict(
        "3a",
        pass,
        &format!("tenths: theta(Y|X1) = {:?}, theta(Y|X2) = {:?}, tau equal: {}", t1.theta, t2.theta, tau1 == tau2),
    );
}

#[test]
fn criterion_03b_tenths_tau_value() {
    const TOL: f64 = 1e-12;
    let ds = fixtures::appendix_tenths();
    let tau1 = association::tau_of(&exact_joint(&ds, "X1"), &WeightScheme::Gk).unwrap();
    let tau2 = association::tau_of(&exact_joint(&ds, "X2"), &WeightScheme::Gk).unwrap();
    let target = q(9, 25);
    let pass = (tau1.to_f64() - target.to_f64()).abs() <= TOL && (tau2.to_f64() - target.to_f64()).abs() <= TOL;
    verdict(
        "3b",
        pass,
        &format!("tenths: tau(Y|X1) = {tau1}, tau(Y|X2) = {tau2}, printed target 9/25 (tol {TOL:e})"),
    );
}

#[test]
fn criterion_03c_sixths_gamma() {
    let ds = fixtures::appendix_sixths();
    let g1 = association::association_matrix(&exact_joint(&ds, "X1")).unwrap();
    let g2 = association::association_matrix(&exact_joint(&ds, "X2")).unwrap();
    let half = q(1, 2);
    let diag = (0..4).all(|s| g1.gamma[s][s] == half && g2.gamma[s][s] == half);
    let off = g1.gamma[0][1] == half && g2.gamma[0][1] == q(0, 1);
    verdict(
        "3c",
        diag && off,
        &format!("sixths: all diagonal 1/2: {diag}; gamma12(X1) = {}, gamma12(X2) = {}", g1.gamma[0][1], g2.gamma[0][1]),
    );
}

#[test]
fn criterion_03d_counterexample_levels() {
    let zero = q(0, 1);
    let levels = |ds: &Dataset| {
        equivalence_levels(ds, "X1", "X2", "Y", &WeightScheme::<BigRational>::Gk, zero.clone()).unwrap()
    };
    let sev = levels(&fixtures::appendix_sevenths());
    let six = levels(&fixtures::appendix_sixths());
    let ten = levels(&fixtures::appendix_tenths());
    let pass = sev.e2 && !sev.e1 && six.e4 && !six.e3 && ten.e5 && !ten.e4;
    verdict(
        "3d",
        pass,
        &format!(
            "sevenths E-2 {} E-1 {}; sixths E-4 {} E-3 {}; tenths E-5 {} E-4 {}",
            sev.e2, sev.e1, six.e4, six.e3, ten.e5, ten.e4
        ),
    );
}

// ---------------------------------------------------------------- 4

#[test]
fn criterion_04_hierarchy() {
    const TOL: f64 = 1e-12;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut broken = 0;
    let mut seen = [0usize; 5];
    for _ in 0..1000 {
        let ds = common::random_triple(&mut rng);
        let r = equivalence_levels(&ds, "X1", "X2", "Y", &WeightScheme::<BigRational>::Gk, q(0, 1)).unwrap();
        if !r.is_chain() {
            broken += 1;
        }
        let e2p = e2prime(&ds, "X1", "X2", q(0, 1)).unwrap();
        if (r.e1 && !e2p) || (e2p && !r.e3) {
            broken += 1;
        }
        if let Some(s) = r.strongest {
            seen[s as usize - 1] += 1;
        }
    }

    let mut binary_worst = 0.0f64;
    for _ in 0..200 {
        let j = common::random_table(&mut rng, 6, 2).to_joint::<f64>().unwrap();
        let theta = association::association_vector(&j).unwrap();
        for _ in 0..10 {
            let raw: Vec<f64> = (0..2).map(|_| rng.gen_range(0.05..1.0)).collect();
            let w = make_weights(&WeightScheme::Custom(raw), j.p_y()).unwrap();
            let t = association::tau(&theta, &w).unwrap();
            binary_worst = binary_worst
                .max((theta.theta[0] - theta.theta[1]).abs())
                .max((theta.theta[0] - t).abs());
        }
    }
    verdict(
        "4",
        broken == 0 && binary_worst <= TOL,
        &format!(
            "1000 exact triples, chain violations {broken}, strongest-level counts E1..E5 {seen:?}; binary Y max |theta - tau| {binary_worst:.2e} (tol {TOL:e})"
        ),
    );
}

// ---------------------------------------------------------------- 5

#[test]
fn criterion_05_monotonicity() {
    const TOL: f64 = 1e-12;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let m = rng.gen_range(5..60);
        let ds = common::random_dataset(&mut rng, m);
        let one = ds.contingency(&["X1"], "Y").unwrap().to_joint::<f64>().unwrap();
        let two = ds.contingency(&["X1", "X2"], "Y").unwrap().to_joint::<f64>().unwrap();
        let t1 = association::association_vector(&one).unwrap();
        let t2 = association::association_vector(&two).unwrap();
        for (a, b) in t2.theta.iter().zip(&t1.theta) {
            worst = worst.max(b - a);
        }
        for scheme in WeightScheme::<f64>::named() {
            let w = make_weights(&scheme, one.p_y()).unwrap();
            let d = association::tau(&t1, &w).unwrap() - association::tau(&t2, &w).unwrap();
            worst = worst.max(d);
        }
    }
    verdict(
        "5",
        worst <= TOL,
        &format!("1000 datasets, largest decrease when adding X2 {worst:.2e} (tol {TOL:e}), theta and gk/ew/ipw tau"),
    );
}

// ---------------------------------------------------------------- 6

#[test]
fn criterion_06_ep_inequalities() {
    const TOL: f64 = 1e-12;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut violations = 0;
    for _ in 0..1000 {
        let m = rng.gen_range(2..80);
        let ds = common::random_dataset(&mut rng, m);
        let ex = basis::ep(&ds, &["X1"]).unwrap();
        let exy = basis::ep(&ds, &["X1", "Y"]).unwrap();
        if ex.value < exy.value - TOL || exy.value < exy.lower_bound() - TOL {
            violations += 1;
        }
    }

    // equality cases: Y a function of X, and a uniform composite
    let rows: Vec<Vec<String>> = (0..40).map(|i| vec![(i % 5).to_string(), (i % 5 % 2).to_string()]).collect();
    let det = Dataset::from_rows(["X", "Y"], rows, MissingPolicy::DropRow).unwrap();
    let det_eq = (basis::ep(&det, &["X"]).unwrap().value - basis::ep(&det, &["X", "Y"]).unwrap().value).abs() <= TOL;
    let rows: Vec<Vec<String>> = (0..36).map(|i| vec![(i % 3).to_string(), (i / 3 % 4).to_string()]).collect();
    let uni = Dataset::from_rows(["X", "Y"], rows, MissingPolicy::DropRow).unwrap();
    let e = basis::ep(&uni, &["X", "Y"]).unwrap();
    let uni_eq = e.domain_size == 12 && (e.value - e.lower_bound()).abs() <= TOL;
    verdict(
        "6",
        violations == 0 && det_eq && uni_eq,
        &format!("1000 datasets, violations {violations}; deterministic equality {det_eq}; uniform equality {uni_eq}"),
    );
}

// ---------------------------------------------------------------- 7

const PUBLISHED_FLU_SINGLE: [(&str, [f64; 3]); 5] = [
    ("X1", [0.2382, 0.2221, 0.1900]),
    ("X2", [0.1010, 0.1206, 0.1597]),
    ("R3", [0.2060, 0.1923, 0.1648]),
    ("R4", [0.0878, 0.1050, 0.1393]),
    ("S5", [0.1511, 0.2943, 0.5806]),
];
const PUBLISHED_FLU_COMBO: [(&[&str], [f64; 3]); 2] = [
    (&["X1", "X2"], [0.5018, 0.6078, 0.8198]),
    (&["X1", "X2", "R3", "R4", "S5"], [0.5018, 0.6078, 0.8199]),
];

#[test]
fn criterion_07_flu_table() {
    const VS_POPULATION: f64 = 0.01;
    const VS_PRINT_HARD: f64 = 0.02;
    const VS_PRINT_SOFT: f64 = 0.03;
    const ALL_MINUS_PAIR: f64 = 1e-3;
    let start = Instant::now();
    let ds = simgen::gen_flu(100_000, 7).unwrap();
    let pop = simgen::population_joint_flu::<f64>().unwrap();
    let schemes = WeightScheme::<f64>::named();

    let mut worst_pop = 0.0f64;
    let mut worst_hard = 0.0f64;
    let mut worst_soft = 0.0f64;
    let mut gap = 0.0f64;
    let mut rows = Vec::new();
    let cases: Vec<(Vec<&str>, [f64; 3], bool)> = PUBLISHED_FLU_SINGLE
        .iter()
        .map(|(x, p)| (vec![*x], *p, matches!(*x, "X1" | "X2")))
        .chain(PUBLISHED_FLU_COMBO.iter().map(|(x, p)| (x.to_vec(), *p, true)))
        .collect();
    for (xs, printed, hard) in &cases {
        let analytic = pop.joint(xs, "Y").unwrap();
        let mut got = [0.0; 3];
        for (k, scheme) in schemes.iter().enumerate() {
            let sample = tau_joint(&ds, "Y", xs, scheme).unwrap();
            let exact = association::tau_of(&analytic, scheme).unwrap();
            got[k] = sample;
            if *hard {
                worst_pop = worst_pop.max((sample - exact).abs());
                worst_hard = worst_hard.max((sample - printed[k]).abs());
            } else {
                worst_soft = worst_soft.max((sample - printed[k]).abs());
            }
        }
        rows.push(format!("{}={:.4}/{:.4}/{:.4}", xs.join("+"), got[0], got[1], got[2]));
    }
    for scheme in &schemes {
        let all = tau_joint(&ds, "Y", PUBLISHED_FLU_COMBO[1].0, scheme).unwrap();
        let pair = tau_joint(&ds, "Y", PUBLISHED_FLU_COMBO[0].0, scheme).unwrap();
        gap = gap.max(all - pair);
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = worst_pop <= VS_POPULATION
        && worst_hard <= VS_PRINT_HARD
        && worst_soft <= VS_PRINT_SOFT
        && gap <= ALL_MINUS_PAIR
        && elapsed < 30.0;
    verdict(
        "7",
        pass,
        &format!(
            "vs population {worst_pop:.4} (<= {VS_POPULATION}), vs print {worst_hard:.4} (<= {VS_PRINT_HARD}), R3/R4/S5 vs print {worst_soft:.4} (<= {VS_PRINT_SOFT}), ALL-(X1+X2) {gap:.2e} (<= {ALL_MINUS_PAIR:e}), {elapsed:.1}s; gk/ew/ipw {}",
            rows.join(" ")
        ),
    );
}

// ---------------------------------------------------------------- 8

#[test]
fn criterion_08_selection_recovery() {
    const EPS_GAIN: f64 = 0.005;
    let cfg = SelectionConfig {
        eps_gain: EPS_GAIN,
        ..SelectionConfig::default()
    };
    let mut failures = Vec::new();
    let mut runs = 0;
    for seed in 0..5u64 {
        for irrelevant in [0usize, 6] {
            let spec = FluSpec::default().with_irrelevant(irrelevant);
            let ds = simgen::gen_flu_with(&spec, 100_000, 800 + seed).unwrap();
            for scheme in WeightScheme::<f64>::named() {
                runs += 1;
                let trace = select_basis(&ds, "Y", &scheme, &cfg).unwrap();
                let mut basis = trace.basis.clone();
                basis.sort();
                if basis != ["X1", "X2"] {
                    failures.push(format!("seed {seed} +{irrelevant} {}: {basis:?}", scheme.name()));
                }
            }
        }
    }
    verdict(
        "8",
        failures.is_empty(),
        &format!("{} of {runs} runs returned {{X1, X2}} (5 seeds, gk/ew/ipw, 0 or 6 irrelevant columns, eps_gain {EPS_GAIN}) {failures:?}", runs - failures.len()),
    );
}

// ---------------------------------------------------------------- 9

/// Records drawn independently from the `table1` frequencies.
fn sample_table1(n: usize, seed: u64) -> Dataset {
    let counts = fixtures::TABLE1_COUNTS;
    let total: u64 = counts.iter().flatten().sum();
    let cells: Vec<(u32, u32, f64)> = counts
        .iter()
        .enumerate()
        .flat_map(|(x, row)| row.iter().enumerate().map(move |(y, &c)| (x as u32, y as u32, c as f64)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut xs, mut ys) = (Vec::with_capacity(n), Vec::with_capacity(n));
    for _ in 0..n {
        let mut u = rng.gen::<f64>() * total as f64;
        let mut pick = cells.len() - 1;
        for (i, c) in cells.iter().enumerate() {
            if u < c.2 {
                pick = i;
                break;
            }
            u -= c.2;
        }
        xs.push(cells[pick].0);
        ys.push(cells[pick].1);
    }
    let labels = |k: usize| (1..=k).map(|i| i.to_string()).collect::<Vec<_>>();
    Dataset::new(
        vec![Variable::new("X", labels(7)).unwrap(), Variable::new("Y", labels(6)).unwrap()],
        vec![xs, ys],
    )
    .unwrap()
}

#[test]
fn criterion_09_confusion_validation() {
    const TOL: f64 = 0.03;
    let mut diffs = Vec::new();
    let mut worst_rows = Vec::new();
    for seed in 0..10u64 {
        let ds = sample_table1(24_000, 900 + seed);
        let r = split_validate(&ds, &["X"], "Y", &SplitConfig::new(0.8, seed)).unwrap();
        let rows = r.row_diffs();
        let (row, _) = rows
            .iter()
            .enumerate()
            .filter_map(|(i, d)| d.map(|d| (i, d)))
            .fold((0, 0.0), |acc, (i, d)| if d > acc.1 { (i, d) } else { acc });
        diffs.push(r.max_abs_diff);
        worst_rows.push(format!("Y={} (n={})", row + 1, r.test_confusion.row_totals[row]));
    }
    let worst = diffs.iter().cloned().fold(0.0, f64::max);
    let formatted: Vec<String> = diffs.iter().map(|d| format!("{d:.3}")).collect();
    verdict(
        "9",
        worst <= TOL,
        &format!(
            "table1 joint, 24000 records, 80/20, 10 seeds: max diff per seed {formatted:?}, worst {worst:.4} (tol {TOL}); worst rows {worst_rows:?}"
        ),
    );
}

// ---------------------------------------------------------------- 10

#[test]
fn criterion_10_table1_resolution() {
    const TOL: f64 = 1e-12;
    let j = fixtures::table1().to_joint::<f64>().unwrap();
    let direct = association::gk_tau_direct(&j).unwrap();
    let weighted = association::tau_of(&j, &WeightScheme::Gk).unwrap();
    let theta = association::association_vector(&j).unwrap();
    let matches = if (direct - 0.0825).abs() < 5e-5 {
        ".0825"
    } else if (direct - 0.0763).abs() < 5e-5 {
        ".0763"
    } else {
        "neither"
    };
    let theta_s: Vec<String> = theta.theta.iter().map(|t| format!("{t:.4}")).collect();
    verdict(
        "10",
        (direct - weighted).abs() <= TOL,
        &format!(
            "tau_gk = {direct:.7} (|direct - weighted| {:.1e}, tol {TOL:e}), theta = {theta_s:?}; matches the {matches} print",
            (direct - weighted).abs()
        ),
    );
}

// ---------------------------------------------------------------- 11

#[test]
fn criterion_11_bootstrap() {
    const MIN_MEAN: f64 = 0.95;
    const MIN_UPPER: f64 = 0.99;
    let full = ["X1", "X2", "R3", "R4", "S5"];
    let mut summary = Vec::new();
    let mut pass = true;
    for seed in 0..5u64 {
        let ds = simgen::gen_flu(500, 1100 + seed).unwrap();
        let cfg = BootstrapConfig {
            replicates: 1000,
            level: 0.95,
            seed,
        };
        let r = stratified_bootstrap(
            &ds,
            "Y",
            |d| retention_ratio(d, "Y", &["X1", "X2"], &full, &WeightScheme::Gk),
            &cfg,
        )
        .unwrap();
        pass &= r.mean >= MIN_MEAN && r.ci_high >= MIN_UPPER;
        summary.push(format!("mean {:.4} ci ({:.4}, {:.4})", r.mean, r.ci_low, r.ci_high));
    }
    verdict(
        "11",
        pass,
        &format!("n 500, B 1000, 5 seeds (mean >= {MIN_MEAN}, upper >= {MIN_UPPER}): {}", summary.join("; ")),
    );
}

// ---------------------------------------------------------------- 12

/// `A` (4 levels) and `B` (3 levels) span every column; `C` and `E` are
/// relabelings of them, `D` and `F` lossy functions of the pair.
fn planted_basis() -> Dataset {
    let mut rows = Vec::new();
    for rep in 0..5 {
        for a in 0..4u32 {
            for b in 0..3u32 {
                let _ = rep;
                rows.push(vec![
                    format!("a{a}"),
                    format!("b{b}"),
                    format!("c{}", (a + 1) % 4),
                    format!("d{}", (a + b) % 2),
                    format!("e{}", 2 - b),
                    format!("f{}", a * b % 4),
                ]);
            }
        }
    }
    Dataset::from_rows(["A", "B", "C", "D", "E", "F"], rows, MissingPolicy::DropRow).unwrap()
}

#[test]
fn criterion_12_structural_basis() {
    let ds = planted_basis();
    let low = BasisConfig::default();
    let high = BasisConfig {
        tie_break: TieBreak::HighestIndex,
        ..BasisConfig::default()
    };
    let b_low = basis::structural_basis(&ds, &low).unwrap();
    let b_high = basis::structural_basis(&ds, &high).unwrap();
    let v_low = basis::verify_basis(&ds, &b_low.basis, &low).unwrap();
    let v_high = basis::verify_basis(&ds, &b_high.basis, &high).unwrap();
    let d_low = ds.composite(&b_low.basis).unwrap().domain_size();
    let d_high = ds.composite(&b_high.basis).unwrap().domain_size();
    let pass = b_low.basis.len() == 2
        && b_high.basis.len() == 2
        && b_low.basis != b_high.basis
        && v_low.passed()
        && v_high.passed()
        && d_low == d_high;
    verdict(
        "12",
        pass,
        &format!(
            "lowest tie-break {:?} (domain {d_low}, verified {}), highest {:?} (domain {d_high}, verified {})",
            b_low.basis,
            v_low.passed(),
            b_high.basis,
            v_high.passed()
        ),
    );
}
