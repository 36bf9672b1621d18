// Every measure is generic over the scalar type; rationals give exact
// values for small published tables.

use catassoc::association::{self, WeightScheme};
use catassoc::fixtures;
use num_rational::BigRational;

fn main() -> catassoc::Result<()> {
    let ds = fixtures::appendix_tenths();
    for x in ["X1", "X2"] {
        let joint = ds.contingency(&[x], "Y")?.to_joint::<BigRational>()?;
        let theta = association::association_vector(&joint)?;
        let shown: Vec<String> = theta.theta.iter().map(ToString::to_string).collect();
        println!("theta(Y | {x}) = ({})", shown.join(", "));
        for scheme in WeightScheme::<BigRational>::named() {
            println!("  tau_{} = {}", scheme.name(), association::tau_of(&joint, &scheme)?);
        }
    }
    Ok(())
}
