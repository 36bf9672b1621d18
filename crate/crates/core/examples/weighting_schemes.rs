// The same association vector summarised under different weightings of the
// response categories, including a user-supplied one.

use catassoc::association::{self, make_weights, WeightScheme};
use catassoc::{fixtures, report};

fn main() -> catassoc::Result<()> {
    let joint = fixtures::loan().contingency(&["On-Time"], "Credit")?.to_joint::<f64>()?;
    let theta = association::association_vector(&joint)?;

    let mut schemes = WeightScheme::<f64>::named().to_vec();
    // emphasise the rarest credit category
    schemes.push(WeightScheme::Custom(vec![3.0, 1.0, 1.0]));
    for scheme in &schemes {
        let w = make_weights(scheme, joint.p_y())?;
        let alpha: Vec<String> = w.alpha.iter().map(|&a| report::fmt4(a)).collect();
        println!("{:>6}  alpha = [{}]  tau = {}", scheme.name(), alpha.join(", "), report::fmt4(association::tau(&theta, &w)?));
    }

    let direct = association::gk_tau_direct(&joint)?;
    println!("Goodman-Kruskal tau computed directly: {}", report::fmt4(direct));
    Ok(())
}
