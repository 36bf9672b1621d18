// Simulated diagnosis data compared with the exact population values of
// the generating model.

use catassoc::association::{self, WeightScheme};
use catassoc::selection::tau_joint;
use catassoc::{report, simgen};

fn main() -> catassoc::Result<()> {
    let ds = simgen::gen_flu(50_000, 1)?;
    let population = simgen::population_joint_flu::<f64>()?;
    println!("{}", ds.to_csv_string()?.lines().take(4).collect::<Vec<_>>().join("\n"));
    for xs in [&["X1"][..], &["X2"], &["S5"], &["X1", "X2"], &["X1", "X2", "R3", "R4", "S5"]] {
        let sample = tau_joint(&ds, "Y", xs, &WeightScheme::Gk)?;
        let exact = association::tau_of(&population.joint(xs, "Y")?, &WeightScheme::Gk)?;
        println!("{:>16}: sample {} population {}", xs.join("+"), report::fmt4(sample), report::fmt4(exact));
    }
    Ok(())
}
