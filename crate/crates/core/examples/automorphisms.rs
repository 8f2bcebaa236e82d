//! Affine automorphisms of W, their fixed points and quotients.
//!
//! ```bash
//! cargo run --example automorphisms
//! ```

use origami_lab::autos::{fixed_points, order_histogram, plus_minus_autos, quotient_by_translations, translations, w};
use origami_lab::quaternion_origami;

fn main() {
    let o = quaternion_origami();
    let all = plus_minus_autos(&o);
    println!("{} automorphisms with derivative +-I", all.len());
    println!("orders: {:?}", order_histogram(&all).unwrap());

    for a in &all {
        let name = w::name_of(a).unwrap_or("?");
        let f = fixed_points(&o, a).unwrap();
        println!(
            "{name:>6} {:?} order {}: {} fixed points",
            a.derivative,
            a.order(),
            f.total()
        );
    }

    let q = quotient_by_translations(&o, &translations(&o)).unwrap();
    println!("W / Q has {} square(s), genus {}", q.n_squares(), q.genus());
}
