//! Invariants of the quaternion origami W.
//!
//! ```bash
//! cargo run --example quaternion_origami
//! ```

use origami_lab::quaternion::QuaternionElement;
use origami_lab::quaternion_origami;

fn main() {
    let w = quaternion_origami();
    println!("{w}");
    println!("squares: {}", w.n_squares());
    println!("genus:   {}", w.genus());
    let profile = w.singularity_profile();
    println!("stratum: H{:?} ({} vertices)", profile.stratum(), profile.vertex_count);
    for c in w.horizontal_cylinders().cylinders {
        println!("horizontal cylinder {}x{}", c.circumference, c.height);
    }

    // square g has right neighbour g·i and top neighbour g·j
    for g in QuaternionElement::SQUARE_ORDER {
        let s = g.square_index();
        let right = QuaternionElement::from_square_index(w.h().apply(s));
        let top = QuaternionElement::from_square_index(w.v().apply(s));
        println!("{g:>2}: right {right:>2}, top {top:>2}");
    }
}
