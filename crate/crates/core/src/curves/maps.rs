use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::params::CurveParams;
use super::proj::{Mat3, ProjPoint2};
use crate::elliptic::{EllipticPoint, Point};
use crate::error::CurveError;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The three plane curves involved: `W_λ`, `E_λ: Y²Z = X(X−Z)(X−λZ)` and
/// `E₋₁: B²C = A³ − AC²` in the coordinates κ produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Curve {
    W,
    ELambda,
    EMinus1,
}

/// Residual of the defining equation at the normalized point.
pub fn curve_residual(which: Curve, params: &CurveParams, p: &ProjPoint2) -> f64 {
    let [x, y, z] = p.coords();
    let l = params.lambda();
    match which {
        Curve::W => (y.powu(4) - x * (x - z) * (x - l * z) * z).norm() / (1.0 + l.norm()),
        Curve::ELambda => (y * y * z - x * (x - z) * (x - l * z)).norm() / (1.0 + l.norm()),
        Curve::EMinus1 => (y * y * z - x * x * x + x * z * z).norm(),
    }
}

pub fn on_curve(which: Curve, params: &CurveParams, p: &ProjPoint2) -> bool {
    !p.is_degenerate() && curve_residual(which, params, p) <= params.tol()
}

fn require_w(params: &CurveParams, p: &ProjPoint2) -> Result<(), CurveError> {
    if on_curve(Curve::W, params, p) {
        Ok(())
    } else {
        Err(CurveError::OffCurve(curve_residual(Curve::W, params, p)))
    }
}

/// The four points of `W_λ` over `x`, one for each fourth root.
pub fn fiber_points(params: &CurveParams, x: Complex64) -> [ProjPoint2; 4] {
    let l = params.lambda();
    let y = (x * (x - 1.0) * (x - l)).powf(0.25);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    [0u32, 1, 2, 3].map(|k| ProjPoint2::new(x, y * i.powu(k), one))
}

/// `count` points of `W_λ`, four over each random abscissa, deterministic in `seed`.
///
/// Points with `Y = 0` only appear when `include_branch` is set; they are then listed first.
pub fn sample_points_with(params: &CurveParams, count: usize, seed: u64, include_branch: bool) -> Vec<ProjPoint2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    if include_branch {
        out.extend(branch_points(params));
    }
    while out.len() < count {
        let x = c(rng.gen_range(-2.5..2.5), rng.gen_range(-2.5..2.5));
        let y4 = x * (x - 1.0) * (x - params.lambda());
        if y4.norm() < 1e-3 {
            continue;
        }
        out.extend(fiber_points(params, x));
    }
    out.truncate(count);
    out
}

pub fn sample_points(params: &CurveParams, count: usize, seed: u64) -> Vec<ProjPoint2> {
    sample_points_with(params, count, seed, false)
}

/// `P₀, P₁, P_λ, P_∞`.
pub fn branch_points(params: &CurveParams) -> [ProjPoint2; 4] {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    [
        ProjPoint2::new(z, z, one),
        ProjPoint2::new(one, z, one),
        ProjPoint2::new(params.lambda(), z, one),
        ProjPoint2::new(one, z, z),
    ]
}

/// The kinds of involution carrying a quotient map to E₋₁.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Involution {
    Sigma,
    Rho,
    Tau,
}

/// One of the 16 automorphisms of `W_λ`, named after the element of the quaternion
/// origami's automorphism group it realizes. `Iota(ν)` is `(X : iᵛY : Z)`; the signs of the
/// others select the root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AutName {
    Iota(u8),
    Sigma(bool),
    K(bool),
    Rho(bool),
    I(bool),
    Tau(bool),
    J(bool),
}

impl AutName {
    pub const ALL: [AutName; 16] = [
        AutName::Iota(0),
        AutName::Iota(1),
        AutName::Iota(2),
        AutName::Iota(3),
        AutName::Sigma(false),
        AutName::Sigma(true),
        AutName::K(false),
        AutName::K(true),
        AutName::Rho(false),
        AutName::Rho(true),
        AutName::I(false),
        AutName::I(true),
        AutName::Tau(false),
        AutName::Tau(true),
        AutName::J(false),
        AutName::J(true),
    ];

    pub const INVOLUTIONS: [AutName; 6] = [
        AutName::Sigma(false),
        AutName::Sigma(true),
        AutName::Rho(false),
        AutName::Rho(true),
        AutName::Tau(false),
        AutName::Tau(true),
    ];

    /// Formula family: `ι`, `α`, `β` or `γ`.
    pub fn family(&self) -> char {
        match self {
            AutName::Iota(_) => 'ι',
            AutName::Sigma(_) | AutName::K(_) => 'α',
            AutName::Rho(_) | AutName::I(_) => 'β',
            AutName::Tau(_) | AutName::J(_) => 'γ',
        }
    }

    pub fn involution(&self) -> Option<(Involution, bool)> {
        match *self {
            AutName::Sigma(n) => Some((Involution::Sigma, n)),
            AutName::Rho(n) => Some((Involution::Rho, n)),
            AutName::Tau(n) => Some((Involution::Tau, n)),
            _ => None,
        }
    }

    /// The name used for this element by [`crate::autos::w`].
    pub fn group_name(&self) -> &'static str {
        match *self {
            AutName::Iota(0) => "1",
            AutName::Iota(1) => "c",
            AutName::Iota(2) => "-1",
            AutName::Iota(_) => "-c",
            AutName::Sigma(false) => "sigma",
            AutName::Sigma(true) => "-sigma",
            AutName::K(false) => "k",
            AutName::K(true) => "-k",
            AutName::Rho(false) => "rho",
            AutName::Rho(true) => "-rho",
            AutName::I(false) => "i",
            AutName::I(true) => "-i",
            AutName::Tau(false) => "tau",
            AutName::Tau(true) => "-tau",
            AutName::J(false) => "j",
            AutName::J(true) => "-j",
        }
    }
}

impl fmt::Display for AutName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.group_name())
    }
}

impl FromStr for AutName {
    type Err = CurveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some(nu) = t.strip_prefix("iota") {
            if let Ok(nu) = nu.parse::<u8>() {
                if nu < 4 {
                    return Ok(AutName::Iota(nu));
                }
            }
        }
        AutName::ALL
            .into_iter()
            .find(|a| a.group_name() == t)
            .ok_or_else(|| CurveError::NotAnInvolution(t.to_string()))
    }
}

fn alpha(params: &CurveParams, zeta: Complex64) -> Mat3 {
    let (o, l) = (c(0.0, 0.0), c(1.0, 0.0));
    Mat3([[l, o, -params.lambda()], [o, zeta, o], [l, o, -l]])
}

fn beta(params: &CurveParams, xi: Complex64) -> Mat3 {
    let (o, l) = (c(0.0, 0.0), c(1.0, 0.0));
    Mat3([[l, o, -l], [o, xi, o], [l / params.lambda(), o, -l]])
}

fn gamma(params: &CurveParams, eta: Complex64) -> Mat3 {
    let (o, l) = (c(0.0, 0.0), c(1.0, 0.0));
    Mat3([[o, o, params.lambda()], [o, eta, o], [l, o, o]])
}

/// The matrix of `name`, built from the stored roots:
/// `k = α_{iζ}`, `i = β_{ηζ/λ}`, `j = γ_{λξζ/(1−λ)}`.
pub fn aut_matrix(name: AutName, params: &CurveParams) -> Mat3 {
    let sign = |neg: bool| if neg { -1.0 } else { 1.0 };
    let (l, z, x, e) = (params.lambda(), params.zeta(), params.xi(), params.eta());
    let i = c(0.0, 1.0);
    match name {
        AutName::Iota(nu) => {
            let (o, one) = (c(0.0, 0.0), c(1.0, 0.0));
            Mat3([[one, o, o], [o, i.powu(nu as u32 % 4), o], [o, o, one]])
        }
        AutName::Sigma(n) => alpha(params, sign(n) * z),
        AutName::K(n) => alpha(params, sign(n) * i * z),
        AutName::Rho(n) => beta(params, sign(n) * x),
        AutName::I(n) => beta(params, sign(n) * e * z / l),
        AutName::Tau(n) => gamma(params, sign(n) * e),
        AutName::J(n) => gamma(params, sign(n) * l * x * z / (1.0 - l)),
    }
}

pub fn apply_aut(name: AutName, params: &CurveParams, p: &ProjPoint2) -> Result<ProjPoint2, CurveError> {
    require_w(params, p)?;
    Ok(aut_matrix(name, params).apply(p))
}

fn involution_of(name: AutName) -> Result<(Involution, bool), CurveError> {
    name.involution()
        .ok_or_else(|| CurveError::NotAnInvolution(name.to_string()))
}

/// The quotient map `W_λ → E₋₁` of an involution, output `(A:B:C)` with `B²C = A³ − AC²`.
///
/// Two charts are evaluated and the one with the larger raw coordinates wins; they agree
/// wherever both are nonzero.
pub fn kappa(name: AutName, params: &CurveParams, p: &ProjPoint2) -> Result<ProjPoint2, CurveError> {
    let (kind, neg) = involution_of(name)?;
    require_w(params, p)?;
    let [x, y, z] = p.coords();
    let l = params.lambda();
    let s = if neg { -1.0 } else { 1.0 };
    let one = c(1.0, 0.0);
    let (main, alt) = match kind {
        Involution::Sigma => {
            let k = one - s * params.zeta();
            let w = params.omega(neg);
            (
                [-k * y * y, w * y * (x - k * z), x * (x - l * z)],
                [-k * y * z * (x - z), w * (x - k * z) * z * (x - z), y * y * y],
            )
        }
        Involution::Rho => {
            let w = params.omega_rho(neg);
            let shift = one / (one + s * params.xi());
            (
                [-w * w * y * y, w * y * (x - shift * z), x * (x - z)],
                [-w * w * y * z * (x - l * z), w * (x - shift * z) * z * (x - l * z), y * y * y],
            )
        }
        Involution::Tau => {
            let e = s * params.eta();
            let w = params.omega_tau(neg);
            let a = c(0.0, 1.0) / (one + e);
            (
                [a * y * y, w * y * (x + e * z), x * z],
                [a * y * (x - z) * (x - l * z), w * (x + e * z) * (x - z) * (x - l * z), y * y * y],
            )
        }
    };
    let size = |v: &[Complex64; 3]| v.iter().map(|t| t.norm()).fold(0.0, f64::max);
    let chosen = if size(&main) >= size(&alt) { main } else { alt };
    Ok(ProjPoint2::from_array(chosen))
}

/// `(A:B:C) ↦ (A/C, B/C)`, with `C = 0` sent to the point at infinity.
pub fn to_affine_e(p: &ProjPoint2) -> EllipticPoint {
    let [a, b, cc] = p.coords();
    if cc.norm() <= 1e-12 {
        Point::Infinity
    } else {
        EllipticPoint::new(a / cc, b / cc)
    }
}

/// `(x, y) ↦ (A : B : 1)`, the inverse of [`to_affine_e`].
pub fn from_affine_e(p: &EllipticPoint) -> ProjPoint2 {
    match p {
        Point::Infinity => ProjPoint2::real(0.0, 1.0, 0.0),
        Point::Affine { x, y } => ProjPoint2::new(*x, *y, c(1.0, 0.0)),
    }
}

/// The four fixed points `(X : iᵛ : Z)`, `ν = 0..3`, of an involution.
pub fn fixed_points_formula(name: AutName, params: &CurveParams) -> Result<[ProjPoint2; 4], CurveError> {
    let (kind, neg) = involution_of(name)?;
    let s = if neg { -1.0 } else { 1.0 };
    let one = c(1.0, 0.0);
    let (x, z) = match kind {
        Involution::Sigma => {
            let z = params.z_sigma(neg);
            ((one + s * params.zeta()) * z, z)
        }
        Involution::Rho => {
            let x = params.x_rho(neg);
            (x, (one - s * params.xi()) * x)
        }
        Involution::Tau => {
            let z = params.z_tau(neg);
            (s * params.eta() * z, z)
        }
    };
    let i = c(0.0, 1.0);
    Ok([0u32, 1, 2, 3].map(|nu| ProjPoint2::new(x, i.powu(nu), z)))
}

/// `c̄ (A:B:C) = (−A : iB : C)`, the rotation of E₋₁ in κ coordinates.
pub fn c_bar(p: &ProjPoint2) -> ProjPoint2 {
    let [a, b, cc] = p.coords();
    ProjPoint2::new(-a, c(0.0, 1.0) * b, cc)
}

/// The four critical values of an involution's κ: one closed-form point and its c̄-orbit.
pub fn critical_values(name: AutName, params: &CurveParams) -> Result<[ProjPoint2; 4], CurveError> {
    let (kind, neg) = involution_of(name)?;
    let one = c(1.0, 0.0);
    let (l, z, x, e) = (params.lambda(), params.zeta(), params.xi(), params.eta());
    let two = c(2.0, 0.0);
    let q = match (kind, neg) {
        (Involution::Sigma, false) => [-l, two * params.sqrt_zeta_lambda(), (one + z).powu(2)],
        (Involution::Sigma, true) => [l, two * params.sqrt_zeta_lambda(), (one - z).powu(2)],
        (Involution::Rho, false) => [x - one, two * e * (one - x) * params.sqrt_xi(), one + x],
        (Involution::Rho, true) => [x + one, two * e * (one + x) * params.sqrt_xi(), one - x],
        (Involution::Tau, false) => [one - e, two * params.sqrt_eta() * params.sqrt_tau_ratio(false), e + one],
        (Involution::Tau, true) => [one + e, two * params.sqrt_eta() * params.sqrt_tau_ratio(true), e - one],
    };
    let q0 = ProjPoint2::from_array(q);
    let q1 = c_bar(&q0);
    let q2 = c_bar(&q1);
    let q3 = c_bar(&q2);
    Ok([q0, q1, q2, q3])
}

/// Which of the two isomorphisms: `φ₁: W_λ → W_{1/λ}` or `φ₂: W_λ → W_{1−λ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phi {
    One,
    Two,
}

/// `φ₁(X:Y:Z) = (Z : λ^{−1/4}Y : X)`, `φ₂(X:Y:Z) = (Z−X : ζ₈Y : Z)`.
pub fn iso_phi(which: Phi, params: &CurveParams, p: &ProjPoint2) -> Result<ProjPoint2, CurveError> {
    require_w(params, p)?;
    let [x, y, z] = p.coords();
    Ok(match which {
        Phi::One => ProjPoint2::new(z, y / params.lambda_quarter(), x),
        Phi::Two => ProjPoint2::new(z - x, params.zeta8() * y, z),
    })
}

/// The degree-2 map `W_λ → E_λ`, `(x, y) ↦ (x, y²)`.
pub fn quotient_to_e_lambda(params: &CurveParams, p: &ProjPoint2) -> Result<ProjPoint2, CurveError> {
    require_w(params, p)?;
    let [x, y, z] = p.coords();
    if z.norm() <= 1e-12 {
        return Ok(ProjPoint2::real(0.0, 1.0, 0.0));
    }
    Ok(ProjPoint2::new(x * z, y * y, z * z))
}
