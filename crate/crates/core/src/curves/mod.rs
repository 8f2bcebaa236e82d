//! The plane quartics `W_λ: Y⁴ = X(X−Z)(X−λZ)Z`, their 16 automorphisms and the
//! quotient maps to `y² = x³ − x`.

mod maps;
mod params;
mod proj;
mod theorem;
mod verify;

pub use maps::{
    apply_aut, aut_matrix, branch_points, c_bar, critical_values, curve_residual, fiber_points, fixed_points_formula,
    from_affine_e, iso_phi, kappa, on_curve, quotient_to_e_lambda, sample_points, sample_points_with, to_affine_e,
    AutName, Curve, Involution, Phi,
};
pub use params::{CurveParams, DEFAULT_TOL};
pub use proj::{same_set, Mat3, ProjPoint2};
pub use theorem::{q_sigma_order, q_sigma_orbit, theorem_check, theorem_for_order, TheoremReport, THEOREM_TOL};
pub use verify::{translate_by_origin, verify_identities, verify_params, CheckResult, IdentityReport, SAMPLE_COUNT};
