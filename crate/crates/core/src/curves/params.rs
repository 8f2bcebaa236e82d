use num_complex::Complex64;

use crate::error::CurveError;

pub const DEFAULT_TOL: f64 = 1e-9;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The parameter λ of `W_λ: Y⁴ = X(X−Z)(X−λZ)Z` and every root the formulas use.
///
/// Roots are chosen once here. Nothing downstream takes a square or fourth root,
/// so sign choices stay consistent between the maps, κ, fixed points and critical values.
/// Index 0 of each pair belongs to the involution, index 1 to its negative.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveParams {
    lambda: Complex64,
    zeta: Complex64,
    xi: Complex64,
    eta: Complex64,
    lambda_quarter: Complex64,
    zeta8: Complex64,
    omega: [Complex64; 2],
    omega_rho: [Complex64; 2],
    omega_tau: [Complex64; 2],
    z_sigma: [Complex64; 2],
    x_rho: [Complex64; 2],
    z_tau: [Complex64; 2],
    sqrt_zeta_lambda: Complex64,
    sqrt_xi: Complex64,
    sqrt_eta: Complex64,
    sqrt_tau_ratio: [Complex64; 2],
    tol: f64,
}

fn degenerate(lambda: Complex64) -> bool {
    !lambda.is_finite() || lambda.norm() < 1e-12 || (lambda - 1.0).norm() < 1e-12
}

impl CurveParams {
    /// Principal branches throughout.
    pub fn new(lambda: Complex64) -> Result<Self, CurveError> {
        if degenerate(lambda) {
            return Err(CurveError::DegenerateLambda);
        }
        let one = c(1.0, 0.0);
        CurveParams::with_roots(
            lambda,
            (one - lambda).sqrt(),
            (one - one / lambda).sqrt(),
            lambda.sqrt(),
            lambda.powf(0.25),
        )
    }

    /// Uses the given `ζ, ξ, η, λ^{1/4}`; the remaining roots are principal.
    pub fn with_roots(
        lambda: Complex64,
        zeta: Complex64,
        xi: Complex64,
        eta: Complex64,
        lambda_quarter: Complex64,
    ) -> Result<Self, CurveError> {
        if degenerate(lambda) {
            return Err(CurveError::DegenerateLambda);
        }
        let one = c(1.0, 0.0);
        let i = c(0.0, 1.0);
        let tol = DEFAULT_TOL;
        let scale = 1.0 + lambda.norm() + 1.0 / lambda.norm();
        let relations = [
            zeta * zeta - (one - lambda),
            xi * xi - (one - one / lambda),
            eta * eta - lambda,
            lambda_quarter.powu(4) - lambda,
        ];
        if let Some(r) = relations.iter().map(|r| r.norm()).find(|&r| r > 1e-8 * scale) {
            return Err(CurveError::OffCurve(r));
        }
        let signs = [1.0, -1.0];
        let pair = |f: &dyn Fn(f64) -> Complex64| [f(signs[0]), f(signs[1])];
        let omega = pair(&|s| (one - s * zeta).sqrt());
        let omega_rho = pair(&|s| one / (lambda_quarter * (one + s * xi).sqrt()));
        let omega_tau = pair(&|s| (i / (one + s * eta)).powu(3).sqrt());
        let z_sigma = pair(&|s| one / (s * zeta * (one + s * zeta)).sqrt());
        let x_rho = pair(&|s| ((one + s * xi) / (xi * xi * (one - s * xi))).powf(0.25));
        let z_tau = pair(&|s| one / (i * s * eta * (s * eta - one)).sqrt());
        let sqrt_tau_ratio = pair(&|s| ((eta - s) / (eta + s)).sqrt());
        Ok(CurveParams {
            lambda,
            zeta,
            xi,
            eta,
            lambda_quarter,
            zeta8: Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4),
            omega,
            omega_rho,
            omega_tau,
            z_sigma,
            x_rho,
            z_tau,
            sqrt_zeta_lambda: (zeta * lambda).sqrt(),
            sqrt_xi: xi.sqrt(),
            sqrt_eta: eta.sqrt(),
            sqrt_tau_ratio,
            tol,
        })
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    /// Parameters for `W_{1/λ}` with `ζ' = ξ`, `ξ' = ζ`, `η' = 1/η`.
    pub fn companion_inverse(&self) -> Self {
        let one = c(1.0, 0.0);
        CurveParams::with_roots(one / self.lambda, self.xi, self.zeta, one / self.eta, one / self.lambda_quarter)
            .expect("roots of 1/λ follow from those of λ")
            .with_tol(self.tol)
    }

    /// Parameters for `W_{1−λ}` with `ζ' = η`, `ξ' = 1/ξ`, `η' = ζ`.
    pub fn companion_reflect(&self) -> Self {
        let one = c(1.0, 0.0);
        let l = one - self.lambda;
        CurveParams::with_roots(l, self.eta, one / self.xi, self.zeta, l.powf(0.25))
            .expect("roots of 1−λ follow from those of λ")
            .with_tol(self.tol)
    }

    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }
    pub fn zeta(&self) -> Complex64 {
        self.zeta
    }
    pub fn xi(&self) -> Complex64 {
        self.xi
    }
    pub fn eta(&self) -> Complex64 {
        self.eta
    }
    pub fn lambda_quarter(&self) -> Complex64 {
        self.lambda_quarter
    }
    pub fn zeta8(&self) -> Complex64 {
        self.zeta8
    }
    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// `ω` with `ω² = 1 ∓ ζ` (σ, then −σ).
    pub fn omega(&self, negative: bool) -> Complex64 {
        self.omega[negative as usize]
    }

    /// `ω_ρ` with `ω_ρ⁴ = 1/(λ(1 ± ξ)²)`.
    pub fn omega_rho(&self, negative: bool) -> Complex64 {
        self.omega_rho[negative as usize]
    }

    /// `ω_τ` with `ω_τ² = (i/(1 ± η))³`.
    pub fn omega_tau(&self, negative: bool) -> Complex64 {
        self.omega_tau[negative as usize]
    }

    pub(crate) fn z_sigma(&self, negative: bool) -> Complex64 {
        self.z_sigma[negative as usize]
    }
    pub(crate) fn x_rho(&self, negative: bool) -> Complex64 {
        self.x_rho[negative as usize]
    }
    pub(crate) fn z_tau(&self, negative: bool) -> Complex64 {
        self.z_tau[negative as usize]
    }
    pub(crate) fn sqrt_zeta_lambda(&self) -> Complex64 {
        self.sqrt_zeta_lambda
    }
    pub(crate) fn sqrt_xi(&self) -> Complex64 {
        self.sqrt_xi
    }
    pub(crate) fn sqrt_eta(&self) -> Complex64 {
        self.sqrt_eta
    }
    pub(crate) fn sqrt_tau_ratio(&self, negative: bool) -> Complex64 {
        self.sqrt_tau_ratio[negative as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_relations() {
        for l in [c(2.0, 0.0), c(0.0, 1.0), c(1.0 / 3.0, 0.0), c(-3.5, 0.7)] {
            let p = CurveParams::new(l).unwrap();
            let one = c(1.0, 0.0);
            assert!((p.zeta() * p.zeta() - (one - l)).norm() < 1e-12);
            assert!((p.omega(false).powu(2) - (one - p.zeta())).norm() < 1e-12);
            assert!((p.omega(true).powu(2) - (one + p.zeta())).norm() < 1e-12);
            let r = p.omega_rho(false).powu(4) * l * (one + p.xi()).powu(2);
            assert!((r - one).norm() < 1e-12);
            let i = c(0.0, 1.0);
            assert!((p.omega_tau(false).powu(2) - (i / (one + p.eta())).powu(3)).norm() < 1e-12);
            assert!((p.zeta8().powu(4) + one).norm() < 1e-15);
        }
    }

    #[test]
    fn degenerate_values() {
        assert_eq!(CurveParams::new(c(1.0, 0.0)), Err(CurveError::DegenerateLambda));
        assert_eq!(CurveParams::new(c(0.0, 0.0)), Err(CurveError::DegenerateLambda));
        assert!(CurveParams::with_roots(c(2.0, 0.0), c(1.0, 0.0), c(0.5, 0.0), c(1.0, 0.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn companions_satisfy_their_relations() {
        let p = CurveParams::new(c(0.3, 1.1)).unwrap();
        let inv = p.companion_inverse();
        assert!((inv.lambda() * p.lambda() - 1.0).norm() < 1e-12);
        assert_eq!(inv.zeta(), p.xi());
        let refl = p.companion_reflect();
        assert!((refl.lambda() + p.lambda() - 1.0).norm() < 1e-12);
        assert_eq!(refl.eta(), p.zeta());
    }
}
