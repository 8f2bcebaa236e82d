//! Torsion points of y^2 = x^3 - x and their intersection parameters.
//!
//! ```bash
//! cargo run --example torsion_points -- 5
//! ```

use origami_lab::elliptic::{lambda_from_torsion, torsion_points};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let points = torsion_points(n).expect("3 <= n <= 12");
    println!("{} points of exact order {n}", points.len());
    for t in &points {
        let lz = lambda_from_torsion(t).unwrap();
        println!(
            "x = {:.9}  y = {:.9}  lambda = {:.9}",
            t.x(),
            t.y(),
            lz.lambda
        );
    }
}
