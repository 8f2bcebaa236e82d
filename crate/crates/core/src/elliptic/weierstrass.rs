//! The Weierstrass ℘-function of the square lattice ℤ + iℤ and the map ℂ/(ℤ + iℤ) → E₋₁.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::point::{EllipticPoint, Point};
use crate::error::EllipticError;

/// Largest row index used in the lattice sums.
pub const ROW_BUDGET: usize = 60;

fn csc2(u: Complex64) -> Complex64 {
    let s = u.sin();
    Complex64::new(1.0, 0.0) / (s * s)
}

/// Rows needed so the neglected rows contribute less than `eps`.
fn rows_for(eps: f64) -> Result<usize, EllipticError> {
    let bound = |m: usize| 2.0 * PI * PI / ((PI * m as f64).sinh().powi(2));
    (1..=ROW_BUDGET)
        .find(|&m| bound(m) < eps)
        .ok_or(EllipticError::ConvergenceBudgetExceeded(bound(ROW_BUDGET)))
}

/// The Eisenstein-summed `G₂ = Σ_m Σ_n' (n + mi)⁻²` for the square lattice.
pub fn g2_eisenstein(eps: f64) -> Result<f64, EllipticError> {
    let m_max = rows_for(eps)?;
    let tail: f64 = (1..=m_max).map(|m| 1.0 / (PI * m as f64).sinh().powi(2)).sum();
    Ok(PI * PI / 3.0 - 2.0 * PI * PI * tail)
}

/// The invariant `g₂ = 60 Σ' ω⁻⁴` of ℤ + iℤ.
pub fn g2_invariant(eps: f64) -> Result<f64, EllipticError> {
    let m_max = rows_for(eps)?;
    // row m = 0 gives 2ζ(4) = π⁴/45
    let mut g4 = PI.powi(4) / 45.0;
    for m in 1..=m_max {
        let u = Complex64::new(0.0, PI * m as f64);
        let s = u.sin();
        let row = (PI.powi(4) / 3.0) * (2.0 * u.cos() * u.cos() + 1.0) / (s * s * s * s);
        g4 += 2.0 * row.re;
    }
    Ok(60.0 * g4)
}

/// `(℘(z), ℘′(z))` for the lattice ℤ + iℤ, summing rows `n + mi` in closed form.
pub fn wp_and_derivative(z: Complex64, eps: f64) -> Result<(Complex64, Complex64), EllipticError> {
    // shift so the imaginary part lies in [−1/2, 1/2]; the tail bound assumes this
    let shift = z.im.round();
    let z = z - Complex64::new(0.0, shift);
    let m_max = rows_for(eps)? as i64 + 1;
    let mut wp = Complex64::new(0.0, 0.0);
    let mut dwp = Complex64::new(0.0, 0.0);
    for m in -m_max..=m_max {
        let u = (z + Complex64::new(0.0, m as f64)) * PI;
        let s = u.sin();
        wp += PI * PI * csc2(u);
        dwp += -2.0 * PI.powi(3) * u.cos() / (s * s * s);
    }
    Ok((wp - g2_eisenstein(eps)?, dwp))
}

/// Scale `c = (4/g₂)^{1/4}` taking `Y² = 4X³ − g₂X` to `y² = x³ − x` via `x = c²℘`, `y = c³℘′/2`.
pub fn bridge_scale() -> f64 {
    (4.0 / g2_invariant(1e-17).expect("fixed budget suffices")).powf(0.25)
}

/// The point of E₋₁ corresponding to `z ∈ ℂ/(ℤ + iℤ)`.
pub fn bridge_point(z: Complex64) -> Result<EllipticPoint, EllipticError> {
    let zr = Complex64::new(z.re - z.re.floor(), z.im - z.im.floor());
    let near_lattice = |t: f64| t.min(1.0 - t) < 1e-12;
    if near_lattice(zr.re) && near_lattice(zr.im) {
        return Ok(Point::Infinity);
    }
    let (wp, dwp) = wp_and_derivative(zr, 1e-17)?;
    let c = bridge_scale();
    Ok(EllipticPoint::new(wp * c * c, dwp * c.powi(3) / 2.0))
}

/// The grid point `(a, b)` of the `n × n` torus, read as `z = (a + ib)/n`.
pub fn weierstrass_bridge(a: i64, b: i64, n: i64) -> Result<EllipticPoint, EllipticError> {
    assert!(n > 0, "grid size must be positive");
    let (a, b) = (a.rem_euclid(n), b.rem_euclid(n));
    if (a, b) == (0, 0) {
        return Ok(Point::Infinity);
    }
    bridge_point(Complex64::new(a as f64 / n as f64, b as f64 / n as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::point::{rot_c, EMinus1};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn lattice_constants() {
        assert!((g2_eisenstein(1e-17).unwrap() - PI).abs() < 1e-13);
        let g2 = g2_invariant(1e-17).unwrap();
        assert!((g2 - 189.07272).abs() < 1e-4, "g2 = {g2}");
        // oracle: g₂ = Γ(1/4)⁸ / (16π²) for the square lattice with periods 1, i
        let gamma_quarter = 3.625_609_908_221_908_f64;
        assert!((g2 - gamma_quarter.powi(8) / (16.0 * PI * PI)).abs() < 1e-9 * g2);
    }

    #[test]
    fn wp_matches_direct_sum_near_a_point() {
        // oracle: symmetric partial sum over a big square, corrected by the row constant
        let z = c(0.23, 0.31);
        let (wp, _) = wp_and_derivative(z, 1e-17).unwrap();
        let mut direct = Complex64::new(1.0, 0.0) / (z * z);
        let r = 400i64;
        for m in -r..=r {
            for n in -r..=r {
                if (m, n) == (0, 0) {
                    continue;
                }
                let w = c(n as f64, m as f64);
                direct += 1.0 / ((z - w) * (z - w)) - 1.0 / (w * w);
            }
        }
        // square truncation converges to ℘ at rate ~1/r²
        assert!((wp - direct).norm() < 1e-3, "{wp} vs {direct}");
    }

    #[test]
    fn differential_equation() {
        let g2 = g2_invariant(1e-17).unwrap();
        for z in [c(0.1, 0.2), c(0.37, 0.71), c(0.5, 0.25)] {
            let (wp, dwp) = wp_and_derivative(z, 1e-17).unwrap();
            let res = dwp * dwp - (4.0 * wp * wp * wp - g2 * wp);
            assert!(res.norm() < 1e-9 * (1.0 + wp.norm().powi(3)), "{z}: {res}");
        }
    }

    #[test]
    fn half_periods_map_to_two_torsion() {
        let e = EMinus1::with_tol(1e-6);
        for n in [2, 4, 6] {
            let h = n / 2;
            let p = weierstrass_bridge(h, 0, n).unwrap();
            assert!(e.eq(&p, &EllipticPoint::new(c(1., 0.), c(0., 0.))), "{p:?}");
            let q = weierstrass_bridge(0, h, n).unwrap();
            assert!(e.eq(&q, &EllipticPoint::new(c(-1., 0.), c(0., 0.))));
            let r = weierstrass_bridge(h, h, n).unwrap();
            assert!(e.eq(&r, &EllipticPoint::new(c(0., 0.), c(0., 0.))));
        }
    }

    #[test]
    fn rotation_equivariance() {
        let e = EMinus1::with_tol(1e-6);
        for n in 3..=7i64 {
            for a in 0..n {
                for b in 0..n {
                    if (a, b) == (0, 0) {
                        continue;
                    }
                    let p = weierstrass_bridge(a, b, n).unwrap();
                    let q = weierstrass_bridge(-b, a, n).unwrap();
                    assert!(e.on_curve(&p));
                    assert!(e.eq(&q, &rot_c(&p)), "({a},{b}) mod {n}");
                }
            }
        }
    }

    #[test]
    fn orders_of_bridge_points() {
        let e = EMinus1::with_tol(1e-6);
        for n in 3..=8i64 {
            for (a, b) in [(1, 0), (1, 2), (2, 2)] {
                let p = weierstrass_bridge(a, b, n).unwrap();
                let g = num_integer::gcd(num_integer::gcd(a, b), n);
                assert_eq!(e.point_order(&p, 20).unwrap(), Some((n / g) as usize), "({a},{b}) mod {n}");
            }
        }
        assert!(weierstrass_bridge(0, 0, 5).unwrap().is_infinity());
    }
}
