//! Simultaneous root finding (Aberth–Ehrlich) with Newton polishing.

use num_complex::Complex64;

use super::poly::eval_complex;
use crate::error::EllipticError;

fn eval_with_derivative(coeffs: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Residual `|p(x)|` relative to `Σ|c_k||x|^k`, the size of the terms being cancelled.
pub fn relative_residual(coeffs: &[Complex64], x: Complex64) -> f64 {
    let scale = coeffs
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * x.norm() + c.norm());
    eval_complex(coeffs, x).norm() / scale.max(f64::MIN_POSITIVE)
}

/// All complex roots of the polynomial with ascending coefficients `coeffs`.
///
/// Roots are accepted by relative residual, not by how the iteration ended.
pub fn polynomial_roots(coeffs: &[Complex64], tol: f64) -> Result<Vec<Complex64>, EllipticError> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    let deg = coeffs.len().saturating_sub(1);
    if deg == 0 {
        return Ok(vec![]);
    }
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    // Cauchy-style bound for the initial circle
    let radius = 1.0
        + monic[..deg]
            .iter()
            .map(|c| c.norm())
            .fold(0.0_f64, f64::max);
    let r0 = radius.min(
        monic[..deg]
            .iter()
            .enumerate()
            .map(|(k, c)| c.norm().powf(1.0 / (deg - k) as f64))
            .fold(0.0_f64, f64::max)
            * 2.0,
    );
    let r0 = if r0 > 0.0 { r0 } else { 1.0 };
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(r0, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / deg as f64 + 0.4))
        .collect();
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for i in 0..deg {
            let (p, dp) = eval_with_derivative(&monic, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / 1f64.max(z[i].norm()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..4 {
            let (p, dp) = eval_with_derivative(&monic, *r);
            if dp.norm() == 0.0 {
                break;
            }
            let next = *r - p / dp;
            if !next.is_finite() {
                break;
            }
            *r = next;
        }
    }
    let worst = z
        .iter()
        .map(|&r| relative_residual(&monic, r))
        .fold(0.0_f64, f64::max);
    if !(worst <= tol) {
        return Err(EllipticError::RootFindingDiverged(worst));
    }
    Ok(z)
}

/// Removes roots within `radius` (relative) of an earlier one.
pub fn dedup_roots(roots: Vec<Complex64>, radius: f64) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = Vec::with_capacity(roots.len());
    for r in roots {
        if !out.iter().any(|s| (s - r).norm() <= radius * 1f64.max(r.norm())) {
            out.push(r);
        }
    }
    out
}
