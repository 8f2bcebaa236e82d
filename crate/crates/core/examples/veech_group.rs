//! SL2(Z)-orbits, Veech group indices and cusp widths.
//!
//! ```bash
//! cargo run --example veech_group
//! ```

use origami_lab::format::parse_origami;
use origami_lab::veech::{act, veech_group, SL2Word};
use origami_lab::{quaternion_origami, torus_grid};

fn main() {
    let l = parse_origami("h=(1,2); v=(1,3)").unwrap();
    for (name, o) in [("W", quaternion_origami()), ("torus 3x3", torus_grid(3).unwrap()), ("L", l)] {
        let vg = veech_group(&o);
        println!("{name}: index {}, cusp widths {:?}", vg.index, vg.cusp_widths);
        for g in vg.generators.iter().take(4) {
            println!("    {g}  {:?}", g.matrix());
        }
    }

    let l = parse_origami("h=(1,2); v=(1,3)").unwrap();
    let st: SL2Word = "S T".parse().unwrap();
    let image = act(&st, &l);
    println!("S T . L = {image}");
    println!("(S T)^6 . L isomorphic to L: {}", act(&st.pow(6), &l).is_isomorphic(&l));
}
