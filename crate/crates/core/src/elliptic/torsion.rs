use num_complex::Complex64;
use rayon::prelude::*;

use super::point::{EMinus1, EllipticPoint, Point};
use super::poly::primitive_division_polynomial;
use super::roots::{dedup_roots, polynomial_roots};
use crate::error::EllipticError;

pub const DEFAULT_NMAX: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct TorsionPoint {
    pub point: EllipticPoint,
    pub order: usize,
}

impl TorsionPoint {
    pub fn x(&self) -> Complex64 {
        *self.point.x().expect("torsion points of order ≥ 2 are affine")
    }

    pub fn y(&self) -> Complex64 {
        *self.point.y().expect("torsion points of order ≥ 2 are affine")
    }
}

fn sort_key(p: &EllipticPoint) -> [i64; 4] {
    let r = |v: f64| (v * 1e8).round() as i64;
    match p {
        Point::Infinity => [i64::MIN; 4],
        Point::Affine { x, y } => [r(x.re), r(x.im), r(y.re), r(y.im)],
    }
}

/// All points of exact order `n` on E₋₁, for `2 ≤ n ≤ nmax`.
pub fn torsion_points_up_to(n: usize, nmax: usize) -> Result<Vec<TorsionPoint>, EllipticError> {
    if n < 2 || n > nmax {
        return Err(EllipticError::OrderOutOfRange(n, nmax));
    }
    let phi = primitive_division_polynomial(n);
    let roots = dedup_roots(polynomial_roots(&phi.to_complex(), 1e-9)?, 1e-8);
    let curve = EMinus1::with_tol(1e-8);
    let candidates: Vec<EllipticPoint> = roots
        .iter()
        .flat_map(|&x| {
            let y = (x * x * x - x).sqrt();
            [EllipticPoint::new(x, y), EllipticPoint::new(x, -y)]
        })
        .collect();
    let mut pts: Vec<EllipticPoint> = candidates
        .into_par_iter()
        .filter(|p| curve.has_exact_order(p, n).unwrap_or(false))
        .collect();
    pts.sort_by_key(sort_key);
    pts.dedup_by(|a, b| curve.eq(a, b));
    Ok(pts.into_iter().map(|point| TorsionPoint { point, order: n }).collect())
}

pub fn torsion_points(n: usize) -> Result<Vec<TorsionPoint>, EllipticError> {
    torsion_points_up_to(n, DEFAULT_NMAX)
}

/// Intersection parameter of a torsion point: `ζ = (1 + x)/(1 − x)`, `λ = 1 − ζ²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LambdaZeta {
    pub lambda: Complex64,
    pub zeta: Complex64,
}

pub fn lambda_from_point(p: &EllipticPoint, tol: f64) -> Result<LambdaZeta, EllipticError> {
    let (x, y) = match p {
        Point::Infinity => return Err(EllipticError::TwoTorsionInput),
        Point::Affine { x, y } => (*x, *y),
    };
    // y = 0 exactly on the 2-torsion points (0,0), (±1,0)
    if y.norm() <= tol * 1f64.max(x.norm().powf(1.5)) {
        return Err(EllipticError::TwoTorsionInput);
    }
    let one = Complex64::new(1.0, 0.0);
    let zeta = (one + x) / (one - x);
    Ok(LambdaZeta {
        lambda: one - zeta * zeta,
        zeta,
    })
}

pub fn lambda_from_torsion(t: &TorsionPoint) -> Result<LambdaZeta, EllipticError> {
    if t.order <= 2 {
        return Err(EllipticError::TwoTorsionInput);
    }
    lambda_from_point(&t.point, 1e-9)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn counts_of_exact_order() {
        let expected = [(2, 3), (3, 8), (4, 12), (5, 24), (6, 24), (7, 48), (8, 48)];
        for (n, count) in expected {
            assert_eq!(torsion_points(n).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn full_n_torsion_has_n_squared_points() {
        // points of order dividing n, plus the origin
        for n in 2..=6usize {
            let total: usize = (2..=n)
                .filter(|d| n % d == 0)
                .map(|d| torsion_points(d).unwrap().len())
                .sum();
            assert_eq!(total + 1, n * n);
        }
    }

    #[test]
    fn large_orders_still_resolve() {
        assert_eq!(torsion_points(10).unwrap().len(), 72);
        assert_eq!(torsion_points(12).unwrap().len(), 96);
        assert!(matches!(torsion_points(13), Err(EllipticError::OrderOutOfRange(13, 12))));
        assert!(matches!(torsion_points(1), Err(EllipticError::OrderOutOfRange(1, 12))));
    }

    #[test]
    fn contains_i_one_minus_i() {
        let e = EMinus1::with_tol(1e-9);
        let t = EllipticPoint::new(c(0., 1.), c(1., -1.));
        assert!(torsion_points(4).unwrap().iter().any(|p| e.eq(&p.point, &t)));
        let roots = torsion_points(4).unwrap();
        assert!(roots.iter().any(|p| e.eq(&p.point, &EllipticPoint::new(c(0., -1.), c(1., 1.)))));
    }

    #[test]
    fn lambda_values() {
        let t = TorsionPoint {
            point: EllipticPoint::new(c(0., 1.), c(1., -1.)),
            order: 4,
        };
        let lz = lambda_from_torsion(&t).unwrap();
        assert!((lz.zeta - c(0., 1.)).norm() < 1e-12);
        assert!((lz.lambda - c(2., 0.)).norm() < 1e-12);
        let origin2 = EllipticPoint::new(c(0., 0.), c(0., 0.));
        assert_eq!(lambda_from_point(&origin2, 1e-9), Err(EllipticError::TwoTorsionInput));
        assert_eq!(lambda_from_point(&Point::Infinity, 1e-9), Err(EllipticError::TwoTorsionInput));
    }

    #[test]
    fn real_order_three_point() {
        // oracle: x² = 1 + 2/√3 solves 3x⁴ − 6x² − 1 = 0
        let x = (1.0 + 2.0 / 3f64.sqrt()).sqrt();
        assert!((3.0 * x.powi(4) - 6.0 * x * x - 1.0).abs() < 1e-12);
        let pts = torsion_points(3).unwrap();
        let t = pts
            .iter()
            .find(|p| (p.x() - c(x, 0.)).norm() < 1e-9)
            .expect("real order-3 point present");
        let lz = lambda_from_torsion(t).unwrap();
        let zeta = (1.0 + x) / (1.0 - x);
        assert!((lz.lambda - c(1.0 - zeta * zeta, 0.)).norm() < 1e-9);
        assert!((lz.lambda - c(-26.820_461_694_03, 0.)).norm() < 1e-8);
    }

    #[test]
    fn equal_x_gives_equal_lambda() {
        for p in torsion_points(5).unwrap() {
            let neg = TorsionPoint {
                point: EllipticPoint::new(p.x(), -p.y()),
                order: 5,
            };
            let a = lambda_from_torsion(&p).unwrap().lambda;
            let b = lambda_from_torsion(&neg).unwrap().lambda;
            assert!((a - b).norm() < 1e-12);
        }
    }
}
