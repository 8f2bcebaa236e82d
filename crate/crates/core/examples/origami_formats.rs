//! Reading and writing origamis as cycle notation or JSON.
//!
//! ```bash
//! cargo run --example origami_formats
//! ```

use origami_lab::format::{parse_origami, to_json, to_text};
use origami_lab::Permutation;

fn main() {
    let o = parse_origami("h=(1,2,3)(4,5); v=(1,4)(2,5,3)").unwrap();
    let text = to_text(&o);
    let json = to_json(&o);
    println!("text: {text}");
    println!("json: {json}");

    let back = parse_origami(&json).unwrap();
    assert_eq!(back, o);
    let relabeled = o.relabel(&Permutation::new(vec![4, 3, 2, 1, 0]).unwrap());
    println!("relabeled: {}", to_text(&relabeled));
    println!("isomorphic: {}", relabeled.is_isomorphic(&o));
    println!("canonical:  {}", to_text(&o.canonical_form()));
}
