//! The family W_lambda: automorphisms, quotient maps and the torsion criterion.
//!
//! ```bash
//! cargo run --example family_identities -- 0.3+1.5i
//! ```

use origami_lab::curves::{
    critical_values, fixed_points_formula, q_sigma_order, theorem_for_order, verify_identities, AutName, CurveParams,
    THEOREM_TOL,
};
use origami_lab::format::parse_complex;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2".into());
    let lambda = parse_complex(&arg).expect("a complex number");
    let report = verify_identities(lambda, 1, 1e-9).expect("lambda away from 0 and 1");
    for (name, check) in &report.checks {
        println!("{name:<20} {} {}", if check.pass { "ok  " } else { "FAIL" }, check.detail);
    }

    let params = CurveParams::new(lambda).unwrap();
    for name in AutName::INVOLUTIONS {
        let fixed = fixed_points_formula(name, &params).unwrap();
        let crit = critical_values(name, &params).unwrap();
        println!("{name}: fixed {}  critical {}", fixed[0], crit[0]);
    }
    match q_sigma_order(&params, 12, THEOREM_TOL).unwrap() {
        Some(k) => println!("Q_sigma has order {k}"),
        None => println!("no torsion order <= 12"),
    }

    let reports = theorem_for_order(3, THEOREM_TOL).unwrap();
    let passed = reports.iter().filter(|r| r.pass).count();
    println!("order 3: {passed}/{} points pass", reports.len());
}
