use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::EllipticError;

/// Exact Gaussian rationals `a + bi`.
pub type GaussianRational = Complex<BigRational>;

/// Coordinate fields for points on y² = x³ − x.
pub trait CurveField:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(k: i64) -> Self;
    /// Equality up to relative tolerance (exact fields ignore `tol`).
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;
    fn magnitude(&self) -> f64;
}

impl CurveField for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(k: i64) -> Self {
        Complex64::new(k as f64, 0.0)
    }
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self - other).norm() <= tol * 1f64.max(self.norm()).max(other.norm())
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl CurveField for GaussianRational {
    fn zero() -> Self {
        Complex::new(BigRational::zero(), BigRational::zero())
    }
    fn one() -> Self {
        Complex::new(BigRational::one(), BigRational::zero())
    }
    fn from_i64(k: i64) -> Self {
        Complex::new(BigRational::from_integer(k.into()), BigRational::zero())
    }
    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
    fn magnitude(&self) -> f64 {
        let re = self.re.to_f64().unwrap_or(f64::INFINITY);
        let im = self.im.to_f64().unwrap_or(f64::INFINITY);
        re.hypot(im)
    }
}

/// A point on y² = x³ − x: the origin at infinity or an affine point.
#[derive(Clone, Debug, PartialEq)]
pub enum Point<F> {
    Infinity,
    Affine { x: F, y: F },
}

/// Numeric points with double-precision complex coordinates.
pub type EllipticPoint = Point<Complex64>;
/// Points with Gaussian-rational coordinates, computed exactly.
pub type ExactPoint = Point<GaussianRational>;

impl<F: CurveField> Point<F> {
    pub fn affine(x: F, y: F) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn x(&self) -> Option<&F> {
        match self {
            Point::Affine { x, .. } => Some(x),
            Point::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&F> {
        match self {
            Point::Affine { y, .. } => Some(y),
            Point::Infinity => None,
        }
    }
}

impl EllipticPoint {
    pub fn new(x: Complex64, y: Complex64) -> Self {
        Point::Affine { x, y }
    }
}

impl ExactPoint {
    pub fn to_numeric(&self) -> EllipticPoint {
        let f = |z: &GaussianRational| Complex64::new(z.re.to_f64().unwrap(), z.im.to_f64().unwrap());
        match self {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine { x: f(x), y: f(y) },
        }
    }
}

/// Gaussian rational from integer numerators over a common denominator.
pub fn gaussian(re: i64, im: i64, den: i64) -> GaussianRational {
    Complex::new(
        BigRational::new(re.into(), den.into()),
        BigRational::new(im.into(), den.into()),
    )
}

/// The curve E₋₁ together with the tolerance used for numeric comparisons.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EMinus1 {
    pub tol: f64,
}

impl Default for EMinus1 {
    fn default() -> Self {
        EMinus1 { tol: 1e-9 }
    }
}

impl EMinus1 {
    pub fn with_tol(tol: f64) -> Self {
        EMinus1 { tol }
    }

    /// `|y² − (x³ − x)|` scaled by `max(1, |x|³)`.
    pub fn residual<F: CurveField>(&self, p: &Point<F>) -> f64 {
        match p {
            Point::Infinity => 0.0,
            Point::Affine { x, y } => {
                let r = y.clone() * y.clone() - (x.clone() * x.clone() * x.clone() - x.clone());
                r.magnitude() / 1f64.max(x.magnitude().powi(3))
            }
        }
    }

    pub fn on_curve<F: CurveField>(&self, p: &Point<F>) -> bool {
        self.residual(p) <= self.tol
    }

    pub fn check<F: CurveField>(&self, p: &Point<F>) -> Result<(), EllipticError> {
        let r = self.residual(p);
        if r <= self.tol {
            Ok(())
        } else {
            Err(EllipticError::OffCurve(r))
        }
    }

    pub fn eq<F: CurveField>(&self, p: &Point<F>, q: &Point<F>) -> bool {
        match (p, q) {
            (Point::Infinity, Point::Infinity) => true,
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => {
                x1.approx_eq(x2, self.tol) && y1.approx_eq(y2, self.tol)
            }
            _ => false,
        }
    }

    pub fn neg<F: CurveField>(&self, p: &Point<F>) -> Point<F> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine {
                x: x.clone(),
                y: -y.clone(),
            },
        }
    }

    fn add_raw<F: CurveField>(&self, p: &Point<F>, q: &Point<F>) -> Point<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1.approx_eq(x2, self.tol) {
            if y1.approx_eq(&-y2.clone(), self.tol) {
                return Point::Infinity;
            }
            // tangent: (3x² − 1) / 2y
            (F::from_i64(3) * x1.clone() * x1.clone() - F::one()) / (F::from_i64(2) * y1.clone())
        } else {
            (y2.clone() - y1.clone()) / (x2.clone() - x1.clone())
        };
        let x3 = slope.clone() * slope.clone() - x1.clone() - x2.clone();
        let y3 = slope * (x1.clone() - x3.clone()) - y1.clone();
        Point::Affine { x: x3, y: y3 }
    }

    fn mul_raw<F: CurveField>(&self, n: i64, p: &Point<F>) -> Point<F> {
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Point::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_raw(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add_raw(&base, &base);
            }
        }
        acc
    }

    pub fn add<F: CurveField>(&self, p: &Point<F>, q: &Point<F>) -> Result<Point<F>, EllipticError> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_raw(p, q))
    }

    /// `n·p` by double-and-add.
    pub fn mul<F: CurveField>(&self, n: i64, p: &Point<F>) -> Result<Point<F>, EllipticError> {
        self.check(p)?;
        Ok(self.mul_raw(n, p))
    }

    /// Smallest `k ≤ nmax` with `k·p = 0`, found by repeated addition.
    pub fn point_order<F: CurveField>(&self, p: &Point<F>, nmax: usize) -> Result<Option<usize>, EllipticError> {
        self.check(p)?;
        let mut acc = p.clone();
        for k in 1..=nmax {
            if acc.is_infinity() {
                return Ok(Some(k));
            }
            acc = self.add_raw(&acc, p);
        }
        Ok(None)
    }

    /// Whether `p` has exact order `n`.
    pub fn has_exact_order<F: CurveField>(&self, p: &Point<F>, n: usize) -> Result<bool, EllipticError> {
        Ok(self.point_order(p, n)? == Some(n))
    }
}

/// The order-4 automorphism `(x, y) ↦ (−x, iy)`.
pub fn rot_c(p: &EllipticPoint) -> EllipticPoint {
    match p {
        Point::Infinity => Point::Infinity,
        Point::Affine { x, y } => Point::Affine {
            x: -x,
            y: Complex64::i() * y,
        },
    }
}

/// [`rot_c`] with an on-curve check.
pub fn rot_c_checked(curve: &EMinus1, p: &EllipticPoint) -> Result<EllipticPoint, EllipticError> {
    curve.check(p)?;
    Ok(rot_c(p))
}

pub fn rot_c_exact(p: &ExactPoint) -> ExactPoint {
    match p {
        Point::Infinity => Point::Infinity,
        Point::Affine { x, y } => Point::Affine {
            x: -x.clone(),
            y: Complex::new(-y.im.clone(), y.re.clone()),
        },
    }
}
