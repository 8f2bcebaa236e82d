//! Double covers of the n x n torus branched over a rotation orbit.
//!
//! ```bash
//! cargo run --example intersecting_origamis -- 7
//! ```

use num_complex::Complex64;
use origami_lab::intersect::{classify_case, pipeline, sweep, GridPoint};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let entries = sweep(n);
    let ok = entries.iter().filter(|e| e.ok()).count();
    println!("n = {n}: {ok}/{} grid points give a genus 3 origami in H(1,1,1,1)", entries.len());

    let p = GridPoint::new(1, 0, n).unwrap();
    let cert = pipeline(p).unwrap();
    println!("{p}: {:?}, {} squares", classify_case(p).unwrap(), cert.squares);
    println!("x_T = {:.9}", Complex64::from(cert.x_t));
    println!("lambda = {:.9}", Complex64::from(cert.lambda));
    println!("certificate passes: {}", cert.pass);
}
