use rayon::prelude::*;
use serde::Serialize;

use super::maps::{critical_values, fixed_points_formula, kappa, to_affine_e, AutName};
use super::params::CurveParams;
use super::proj::same_set;
use crate::elliptic::{lambda_from_torsion, torsion_points, EMinus1, EllipticPoint, Point, TorsionPoint};
use crate::error::CurveError;
use crate::format::ComplexJson;

pub const THEOREM_TOL: f64 = 1e-8;

/// Outcome of the torsion criterion for one point `T` of exact order `n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    pub x_t: ComplexJson,
    pub lambda: ComplexJson,
    pub zeta: ComplexJson,
    /// `x(Q_σ) = x_T`.
    pub x_matches: bool,
    /// The closed-form critical values are κ_σ of the fixed points of σ.
    pub critical_values_match: bool,
    /// `n·Q_σ^ν` is one and the same c̄-fixed point for all ν.
    pub n_multiples_agree: bool,
    /// `2n·Q_σ^ν = O` for all ν.
    pub two_n_vanishes: bool,
    pub pass: bool,
}

fn is_rot_fixed(p: &EllipticPoint, tol: f64) -> bool {
    match p {
        Point::Infinity => true,
        Point::Affine { x, y } => x.norm() <= tol && y.norm() <= tol,
    }
}

/// The points `Q_σ^ν`, ν = 0..3, on E₋₁.
pub fn q_sigma_orbit(params: &CurveParams) -> [EllipticPoint; 4] {
    critical_values(AutName::Sigma(false), params)
        .expect("σ is an involution")
        .map(|q| to_affine_e(&q))
}

/// Order of `Q_σ`, if at most `nmax`.
pub fn q_sigma_order(params: &CurveParams, nmax: usize, tol: f64) -> Result<Option<usize>, CurveError> {
    let q = q_sigma_orbit(params)[0].clone();
    Ok(EMinus1::with_tol(tol).point_order(&q, nmax)?)
}

pub fn theorem_check(t: &TorsionPoint, tol: f64) -> Result<TheoremReport, CurveError> {
    let lz = lambda_from_torsion(t)?;
    let n = t.order;
    let base = CurveParams::new(lz.lambda)?;
    let params = CurveParams::with_roots(lz.lambda, lz.zeta, base.xi(), base.eta(), base.lambda_quarter())?;
    let curve = EMinus1::with_tol(tol);
    let orbit = q_sigma_orbit(&params);
    let x_t = t.x();
    let x_matches = orbit[0]
        .x()
        .is_some_and(|x| (x - x_t).norm() <= tol * 1f64.max(x_t.norm()));
    let fixed = fixed_points_formula(AutName::Sigma(false), &params)?;
    let images: Vec<_> = fixed
        .iter()
        .map(|f| kappa(AutName::Sigma(false), &params, f))
        .collect::<Result<_, _>>()?;
    let crit = critical_values(AutName::Sigma(false), &params)?;
    let critical_values_match = same_set(&images, &crit, 1e-6);
    let multiples: Vec<EllipticPoint> = orbit
        .iter()
        .map(|q| curve.mul(n as i64, q))
        .collect::<Result<_, _>>()?;
    let n_multiples_agree =
        is_rot_fixed(&multiples[0], tol) && multiples.iter().all(|m| curve.eq(m, &multiples[0]));
    let two_n_vanishes = orbit
        .iter()
        .map(|q| curve.mul(2 * n as i64, q))
        .collect::<Result<Vec<_>, _>>()?
        .iter()
        .all(|p| p.is_infinity());
    Ok(TheoremReport {
        n,
        x_t: x_t.into(),
        lambda: lz.lambda.into(),
        zeta: lz.zeta.into(),
        x_matches,
        critical_values_match,
        n_multiples_agree,
        two_n_vanishes,
        pass: x_matches && critical_values_match && n_multiples_agree && two_n_vanishes,
    })
}

/// [`theorem_check`] for every point of exact order `n`.
pub fn theorem_for_order(n: usize, tol: f64) -> Result<Vec<TheoremReport>, CurveError> {
    if n < 3 {
        return Err(crate::error::EllipticError::TwoTorsionInput.into());
    }
    let pts = torsion_points(n)?;
    pts.par_iter().map(|t| theorem_check(t, tol)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::EllipticError;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn order_four_example() {
        let e = EMinus1::with_tol(1e-12);
        let t = EllipticPoint::new(c(0.0, 1.0), c(1.0, -1.0));
        // group-law oracle: 2T = (0, 0), 4T = O
        let two = e.mul(2, &t).unwrap();
        assert!(e.eq(&two, &EllipticPoint::new(c(0.0, 0.0), c(0.0, 0.0))));
        assert_eq!(e.point_order(&t, 12).unwrap(), Some(4));
        let r = theorem_check(&TorsionPoint { point: t, order: 4 }, THEOREM_TOL).unwrap();
        assert!(r.pass, "{r:?}");
        assert!((r.lambda.re - 2.0).abs() < 1e-12 && r.lambda.im.abs() < 1e-12);
    }

    #[test]
    fn every_torsion_point_of_small_order() {
        for n in 3..=8 {
            let reports = theorem_for_order(n, THEOREM_TOL).unwrap();
            assert!(!reports.is_empty());
            for r in reports {
                assert!(r.pass, "n = {n}: {r:?}");
            }
        }
    }

    #[test]
    fn order_three_lambda() {
        let reports = theorem_for_order(3, THEOREM_TOL).unwrap();
        assert!(reports
            .iter()
            .any(|r| (r.lambda.re + 26.820_461_694).abs() < 1e-6 && r.lambda.im.abs() < 1e-9));
    }

    #[test]
    fn generic_lambda_is_not_torsion() {
        let p = CurveParams::new(c(1.0 / 3.0, 0.0)).unwrap();
        assert_eq!(q_sigma_order(&p, 12, 1e-8).unwrap(), None);
    }

    #[test]
    fn two_torsion_rejected() {
        let t = TorsionPoint {
            point: EllipticPoint::new(c(0.0, 0.0), c(0.0, 0.0)),
            order: 2,
        };
        assert_eq!(
            theorem_check(&t, THEOREM_TOL),
            Err(CurveError::Elliptic(EllipticError::TwoTorsionInput))
        );
        assert!(theorem_for_order(2, THEOREM_TOL).is_err());
    }
}
