//! Arithmetic on E₋₁ : y² = x³ − x.

pub mod point;
pub mod poly;
pub mod roots;
pub mod torsion;
pub mod weierstrass;

pub use point::{gaussian, rot_c, rot_c_checked, CurveField, EMinus1, EllipticPoint, ExactPoint, GaussianRational, Point};
pub use poly::{division_polynomial, primitive_division_polynomial, RationalPoly};
pub use torsion::{DEFAULT_NMAX, lambda_from_point, lambda_from_torsion, torsion_points, torsion_points_up_to, LambdaZeta, TorsionPoint};
pub use weierstrass::{bridge_point, weierstrass_bridge};
