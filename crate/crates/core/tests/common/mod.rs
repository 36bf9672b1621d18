#![allow(dead_code)]

use catassoc::{ContingencyTable, Dataset, MissingPolicy, Variable};
use rand::Rng;

/// Random table with at least two observed response categories.
pub fn random_table<R: Rng>(rng: &mut R, max_x: usize, max_y: usize) -> ContingencyTable {
    loop {
        let nx = rng.gen_range(1..=max_x);
        let ny = rng.gen_range(2..=max_y);
        let sparsity = rng.gen_range(0.0..0.6);
        let counts: Vec<Vec<u64>> = (0..nx)
            .map(|_| {
                (0..ny)
                    .map(|_| if rng.gen_bool(sparsity) { 0 } else { rng.gen_range(1..50) })
                    .collect()
            })
            .collect();
        let t = ContingencyTable::new(
            "X",
            (0..nx).map(|i| format!("x{i}")).collect(),
            "Y",
            (0..ny).map(|i| format!("y{i}")).collect(),
            counts,
        )
        .unwrap();
        if t.col_sums().iter().all(|&c| c > 0) {
            return t;
        }
    }
}

/// Columns `Y, X1, X2` over a few records, with `X2` sometimes a relabeling
/// or a function of `X1` and `Y` sometimes a function of `X1`, so that every
/// equivalence level occurs.
pub fn random_triple<R: Rng>(rng: &mut R) -> Dataset {
    loop {
        let m = rng.gen_range(3..=12);
        let kx = rng.gen_range(2..=4u32);
        let ky = rng.gen_range(2..=4u32);
        let x1: Vec<u32> = (0..m).map(|_| rng.gen_range(0..kx)).collect();
        let perm: Vec<u32> = {
            let mut p: Vec<u32> = (0..kx).collect();
            for i in (1..p.len()).rev() {
                p.swap(i, rng.gen_range(0..=i));
            }
            p
        };
        let fy: Vec<u32> = (0..kx).map(|_| rng.gen_range(0..ky)).collect();
        let y: Vec<u32> = match rng.gen_range(0..3) {
            0 => x1.iter().map(|&v| fy[v as usize]).collect(),
            _ => (0..m).map(|_| rng.gen_range(0..ky)).collect(),
        };
        let x2: Vec<u32> = match rng.gen_range(0..4) {
            0 => x1.iter().map(|&v| perm[v as usize]).collect(),
            1 => x1.iter().map(|&v| perm[v as usize] % 2).collect(),
            _ => (0..m).map(|_| rng.gen_range(0..kx)).collect(),
        };
        let var = |name: &str, k: u32| Variable::new(name, (0..k).map(|i| i.to_string()).collect()).unwrap();
        let ds = Dataset::new(vec![var("Y", ky), var("X1", kx), var("X2", kx)], vec![y, x1, x2]).unwrap();
        if ds.variable(0).len() >= 2 {
            return ds;
        }
    }
}

/// Dataset with a response and two explanatory columns; `m` must be at least 2.
pub fn random_dataset<R: Rng>(rng: &mut R, m: usize) -> Dataset {
    loop {
        let k = [rng.gen_range(2..=4u32), rng.gen_range(1..=4), rng.gen_range(1..=4)];
        let rows: Vec<Vec<String>> = (0..m)
            .map(|_| k.iter().map(|&c| rng.gen_range(0..c).to_string()).collect())
            .collect();
        let ds = Dataset::from_rows(["Y", "X1", "X2"], rows, MissingPolicy::DropRow).unwrap();
        if ds.variable(0).len() >= 2 {
            return ds;
        }
    }
}
