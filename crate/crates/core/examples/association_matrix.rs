// Association matrix, association vector and tau for one pair of columns
// of the bundled loan data.

use catassoc::association::{self, WeightScheme};
use catassoc::{fixtures, report};

fn main() -> catassoc::Result<()> {
    let loan = fixtures::loan();
    let joint = loan.contingency(&["Age"], "Risk")?.to_joint::<f64>()?;

    let gamma = association::association_matrix(&joint)?;
    let labels = joint.y_labels().to_vec();
    print!("{}", report::matrix_text("Risk", &labels, &labels, &gamma.gamma));

    let theta = association::association_vector(&joint)?;
    for (label, t) in labels.iter().zip(&theta.theta) {
        println!("theta({label}) = {}", report::fmt4(*t));
    }
    println!("tau(Risk | Age) = {}", report::fmt4(association::tau_of(&joint, &WeightScheme::Gk)?));
    Ok(())
}
