use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::maps::{
    apply_aut, aut_matrix, critical_values, fixed_points_formula, iso_phi, kappa, on_curve, quotient_to_e_lambda,
    sample_points, to_affine_e, AutName, Curve, Phi,
};
use super::params::CurveParams;
use super::proj::{same_set, Mat3, ProjPoint2};
use crate::elliptic::{EMinus1, EllipticPoint, Point};
use crate::error::CurveError;
use crate::format::ComplexJson;

pub const SAMPLE_COUNT: usize = 16;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub lambda: ComplexJson,
    pub seed: u64,
    pub tol: f64,
    pub checks: BTreeMap<String, CheckResult>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, c)| !c.pass)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

fn check_preserve(p: &CurveParams, pts: &[ProjPoint2]) -> Result<CheckResult, CurveError> {
    let mut bad = Vec::new();
    for name in AutName::ALL {
        for q in pts {
            if !on_curve(Curve::W, p, &apply_aut(name, p, q)?) {
                bad.push(name.to_string());
                break;
            }
        }
    }
    Ok(CheckResult::new(bad.is_empty(), if bad.is_empty() { "16 maps".to_string() } else { bad.join(",") }))
}

fn check_orders(p: &CurveParams) -> CheckResult {
    let tol = p.tol().max(1e-9);
    let mats: Vec<Mat3> = AutName::ALL.iter().map(|&a| aut_matrix(a, p)).collect();
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for m in &mats {
        *hist.entry(m.proj_order(8, tol).unwrap_or(0)).or_default() += 1;
    }
    let closed = mats
        .iter()
        .all(|a| mats.iter().all(|b| mats.iter().any(|m| m.proj_eq(&a.mul(b), tol))));
    let expected: BTreeMap<usize, usize> = [(1, 1), (2, 7), (4, 8)].into();
    CheckResult::new(hist == expected && closed, format!("orders {hist:?}, closed {closed}"))
}

fn check_central(p: &CurveParams) -> CheckResult {
    let c1 = aut_matrix(AutName::Iota(1), p);
    let bad: Vec<String> = AutName::ALL
        .iter()
        .filter(|&&a| {
            let m = aut_matrix(a, p);
            !c1.mul(&m).proj_eq(&m.mul(&c1), p.tol().max(1e-9))
        })
        .map(|a| a.to_string())
        .collect();
    CheckResult::new(bad.is_empty(), if bad.is_empty() { "c commutes with all 16".into() } else { bad.join(",") })
}

fn check_alpha_square(p: &CurveParams, pts: &[ProjPoint2]) -> Result<CheckResult, CurveError> {
    let tol = p.tol().max(1e-9);
    let one = Complex64::new(1.0, 0.0);
    let l = p.lambda();
    let mut formula_ok = true;
    for name in [AutName::Sigma(false), AutName::K(false)] {
        let zeta = if name == AutName::Sigma(false) { p.zeta() } else { Complex64::new(0.0, 1.0) * p.zeta() };
        for q in pts {
            let twice = apply_aut(name, p, &apply_aut(name, p, q)?)?;
            let [x, y, z] = q.coords();
            let expected = ProjPoint2::new(x * (one - l), zeta * zeta * y, z * (one - l));
            formula_ok &= twice.approx_eq(&expected, tol);
        }
    }
    let order = |a| aut_matrix(a, p).proj_order(8, tol);
    let sigma = order(AutName::Sigma(false));
    let k = order(AutName::K(false));
    // a ζ with neither ζ² = 1 − λ nor ζ² = λ − 1 gives no small order
    let o = Complex64::new(0.0, 0.0);
    let off = Mat3([[one, o, -l], [o, 2.0 * p.zeta(), o], [one, o, -one]]).proj_order(8, tol);
    let k_squared = aut_matrix(AutName::K(false), p);
    let is_minus_one = k_squared
        .mul(&k_squared)
        .proj_eq(&aut_matrix(AutName::Iota(2), p), tol);
    let pass = formula_ok && sigma == Some(2) && k == Some(4) && off.is_none() && is_minus_one;
    Ok(CheckResult::new(
        pass,
        format!("formula {formula_ok}, order(ζ²=1−λ) {sigma:?}, order(ζ²=λ−1) {k:?}, other ζ {off:?}"),
    ))
}

fn check_kappa(p: &CurveParams, pts: &[ProjPoint2]) -> Result<CheckResult, CurveError> {
    let tol = p.tol().max(1e-9);
    let mut bad = Vec::new();
    for name in AutName::INVOLUTIONS {
        let mut ok = true;
        for q in pts {
            let k = kappa(name, p, q)?;
            ok &= on_curve(Curve::EMinus1, p, &k);
            ok &= kappa(name, p, &apply_aut(name, p, q)?)?.approx_eq(&k, tol);
            // the fibre through a generic point meets its G-orbit in exactly two points
            let mut hits = 0;
            for g in AutName::ALL {
                if kappa(name, p, &apply_aut(g, p, q)?)?.approx_eq(&k, 1e-6) {
                    hits += 1;
                }
            }
            ok &= hits == 2;
        }
        let fixed = fixed_points_formula(name, p)?;
        for f in &fixed {
            ok &= apply_aut(name, p, f)?.approx_eq(f, tol);
        }
        let images: Vec<ProjPoint2> = fixed.iter().map(|f| kappa(name, p, f)).collect::<Result<_, _>>()?;
        let crit = critical_values(name, p)?;
        ok &= crit.iter().all(|q| on_curve(Curve::EMinus1, p, q));
        ok &= same_set(&images, &crit, tol);
        if !ok {
            bad.push(name.to_string());
        }
    }
    Ok(CheckResult::new(
        bad.is_empty(),
        if bad.is_empty() { "six quotient maps".into() } else { bad.join(",") },
    ))
}

fn check_quotient(p: &CurveParams, pts: &[ProjPoint2]) -> Result<CheckResult, CurveError> {
    let tol = p.tol().max(1e-9);
    let mut ok = true;
    for q in pts {
        let e = quotient_to_e_lambda(p, q)?;
        ok &= on_curve(Curve::ELambda, p, &e);
        let flipped = apply_aut(AutName::Iota(2), p, q)?;
        ok &= quotient_to_e_lambda(p, &flipped)?.approx_eq(&e, tol);
    }
    Ok(CheckResult::new(ok, "(x, y) ↦ (x, y²)"))
}

fn check_conjugations(p: &CurveParams, pts: &[ProjPoint2]) -> Result<CheckResult, CurveError> {
    let tol = p.tol().max(1e-9);
    let inv = p.companion_inverse();
    let refl = p.companion_reflect();
    use AutName::*;
    // (which φ, involution on the target, involution on W_λ)
    let cases = [
        (Phi::One, Sigma(false), Rho(true), "phi1: sigma ~ -rho"),
        (Phi::One, Rho(false), Sigma(true), "phi1: rho ~ -sigma"),
        (Phi::One, Tau(false), Tau(false), "phi1: tau ~ tau"),
        (Phi::Two, Sigma(false), Tau(true), "phi2: sigma ~ -tau"),
        (Phi::Two, Rho(false), Rho(false), "phi2: rho ~ rho"),
        (Phi::Two, Tau(false), Sigma(true), "phi2: tau ~ -sigma"),
    ];
    let mut bad = Vec::new();
    for (phi, target, source, label) in cases {
        let other = if phi == Phi::One { &inv } else { &refl };
        let mut ok = true;
        for q in pts {
            let image = iso_phi(phi, p, q)?;
            ok &= on_curve(Curve::W, other, &image);
            let lhs = apply_aut(target, other, &image)?;
            let rhs = iso_phi(phi, p, &apply_aut(source, p, q)?)?;
            ok &= lhs.approx_eq(&rhs, tol);
        }
        if !ok {
            bad.push(label);
        }
    }
    Ok(CheckResult::new(bad.is_empty(), if bad.is_empty() { "six identities".into() } else { bad.join("; ") }))
}

/// Translation by the 2-torsion point (0, 0) of E₋₁: `(x, y) ↦ (−1/x, y/x²)`.
pub fn translate_by_origin(p: &EllipticPoint) -> EllipticPoint {
    let zero = Complex64::new(0.0, 0.0);
    match p {
        Point::Infinity => EllipticPoint::new(zero, zero),
        Point::Affine { x, .. } if x.norm() == 0.0 => Point::Infinity,
        Point::Affine { x, y } => EllipticPoint::new(-1.0 / x, y / (x * x)),
    }
}

fn check_commuting_square(p: &CurveParams, pts: &[ProjPoint2]) -> Result<CheckResult, CurveError> {
    let inv = p.companion_inverse();
    let curve = EMinus1::with_tol(1e-6);
    let mut ok = true;
    for q in pts {
        let top = kappa(AutName::Sigma(false), &inv, &iso_phi(Phi::One, p, q)?)?;
        let bottom = translate_by_origin(&to_affine_e(&kappa(AutName::Rho(true), p, q)?));
        ok &= curve.eq(&to_affine_e(&top), &bottom);
    }
    Ok(CheckResult::new(ok, "kappa_sigma(1/λ)∘phi1 = t(0,0)∘kappa_-rho(λ)"))
}

/// Runs checks (a)–(h) on seeded samples of `W_λ`.
pub fn verify_identities(lambda: Complex64, seed: u64, tol: f64) -> Result<IdentityReport, CurveError> {
    let p = CurveParams::new(lambda)?.with_tol(tol);
    verify_params(&p, seed)
}

pub fn verify_params(p: &CurveParams, seed: u64) -> Result<IdentityReport, CurveError> {
    let pts = sample_points(p, SAMPLE_COUNT, seed);
    type Check<'a> = (&'a str, Box<dyn Fn() -> Result<CheckResult, CurveError> + Sync + 'a>);
    let checks: Vec<Check> = vec![
        ("a_preserve_curve", Box::new(|| check_preserve(p, &pts))),
        ("b_order_table", Box::new(|| Ok(check_orders(p)))),
        ("c_center", Box::new(|| Ok(check_central(p)))),
        ("d_alpha_square", Box::new(|| check_alpha_square(p, &pts))),
        ("e_kappa", Box::new(|| check_kappa(p, &pts))),
        ("f_quotient_e_lambda", Box::new(|| check_quotient(p, &pts))),
        ("g_conjugations", Box::new(|| check_conjugations(p, &pts))),
        ("h_commuting_square", Box::new(|| check_commuting_square(p, &pts))),
    ];
    let results: Vec<(String, CheckResult)> = checks
        .par_iter()
        .map(|(name, f)| f().map(|r| (name.to_string(), r)))
        .collect::<Result<_, _>>()?;
    Ok(IdentityReport {
        lambda: p.lambda().into(),
        seed,
        tol: p.tol(),
        checks: results.into_iter().collect(),
    })
}
