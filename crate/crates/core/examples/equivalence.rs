// Graded equivalence of two explanatory variables with respect to a
// response, checked in exact rational arithmetic on small datasets.

use catassoc::association::WeightScheme;
use catassoc::equivalence::{e2prime, equivalence_levels};
use catassoc::fixtures;
use num_rational::BigRational;

fn main() -> catassoc::Result<()> {
    let zero = BigRational::from_integer(0.into());
    for (name, ds) in [
        ("sevenths", fixtures::appendix_sevenths()),
        ("sixths", fixtures::appendix_sixths()),
        ("tenths", fixtures::appendix_tenths()),
    ] {
        let r = equivalence_levels(&ds, "X1", "X2", "Y", &WeightScheme::<BigRational>::Gk, zero.clone())?;
        let held: Vec<String> = r
            .levels()
            .iter()
            .enumerate()
            .filter(|(_, &on)| on)
            .map(|(i, _)| format!("E-{}", i + 1))
            .collect();
        let mutual = e2prime(&ds, "X1", "X2", zero.clone())?;
        println!("{name:>8}: {}  (mutually determined: {mutual})", held.join(" "));
    }
    Ok(())
}
