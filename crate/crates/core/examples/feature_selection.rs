// Forward-backward selection of explanatory variables on simulated data
// where only two of the columns carry information beyond the others.

use catassoc::association::WeightScheme;
use catassoc::selection::{select_basis, SelectionConfig};
use catassoc::{report, simgen};

fn main() -> catassoc::Result<()> {
    let spec = simgen::FluSpec::default().with_irrelevant(3);
    let ds = simgen::gen_flu_with(&spec, 20_000, 42)?;
    let cfg = SelectionConfig {
        eps_gain: 0.005,
        ..SelectionConfig::default()
    };
    for scheme in WeightScheme::<f64>::named() {
        let trace = select_basis(&ds, "Y", &scheme, &cfg)?;
        println!("== {} ==", scheme.name());
        print!("{}", report::trace_text(&trace));
    }
    Ok(())
}
