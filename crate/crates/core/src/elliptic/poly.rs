//! Dense univariate polynomials over ℚ and the division polynomials of y² = x³ − x.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficients in ascending degree; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

fn q(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        RationalPoly::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigRational) -> Self {
        RationalPoly::new(vec![c])
    }

    pub fn x() -> Self {
        RationalPoly::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(RationalPoly::from_ints(&[1]), |acc, _| &acc * self)
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &RationalPoly) -> (RationalPoly, RationalPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (RationalPoly::zero(), RationalPoly::zero());
        };
        if nd < dd {
            return (RationalPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (RationalPoly::new(quot), RationalPoly::new(rem))
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &RationalPoly) -> RationalPoly {
        let (quo, rem) = self.div_rem(d);
        assert!(rem.is_zero(), "inexact polynomial division");
        quo
    }

    pub fn derivative(&self) -> RationalPoly {
        RationalPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * q(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.coeffs
            .iter()
            .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
            .collect()
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        eval_complex(&self.to_complex(), x)
    }
}

pub(crate) fn eval_complex(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c)
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = BigRational::zero();
        RationalPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) + rhs.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        self + &(-rhs)
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = !a.is_one() || k == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// The reduced polynomials `P_n`: `ψ_n = P_n` for odd `n` and `ψ_n = y·P_n` for even `n`.
fn reduced_division_polys(n: usize) -> Vec<RationalPoly> {
    let mut p: Vec<RationalPoly> = vec![
        RationalPoly::zero(),
        RationalPoly::from_ints(&[1]),
        RationalPoly::from_ints(&[2]),
        RationalPoly::from_ints(&[-1, 0, -6, 0, 3]),
        RationalPoly::from_ints(&[4, 0, -20, 0, -20, 0, 4]),
    ];
    // y⁴ = (x³ − x)²
    let y4 = RationalPoly::from_ints(&[0, -1, 0, 1]).pow(2);
    let half = BigRational::new(1.into(), 2.into());
    for k in 5..=n.max(4) {
        let m = k / 2;
        let next = if k % 2 == 1 {
            let a = &p[m + 2] * &p[m].pow(3);
            let b = &p[m - 1] * &p[m + 1].pow(3);
            if m % 2 == 0 {
                &(&y4 * &a) - &b
            } else {
                &a - &(&y4 * &b)
            }
        } else {
            let inner = &(&p[m + 2] * &p[m - 1].pow(2)) - &(&p[m - 2] * &p[m + 1].pow(2));
            (&p[m] * &inner).scale(&half)
        };
        p.push(next);
    }
    p.truncate(n + 1);
    p
}

/// Polynomial whose roots are the x-coordinates of all nonzero `n`-torsion points, each once.
///
/// For odd `n` this is `ψ_n`. For even `n` it is `(ψ_n / ψ₂)·(x³ − x)`, so the 2-torsion
/// abscissae `0, ±1` are included and `n = 2` gives `x³ − x`.
pub fn division_polynomial(n: usize) -> RationalPoly {
    assert!(n >= 1, "division polynomials start at n = 1");
    let p = reduced_division_polys(n).pop().unwrap();
    if n % 2 == 1 {
        p
    } else {
        let cubic = RationalPoly::from_ints(&[0, -1, 0, 1]);
        (&p * &cubic).scale(&BigRational::new(1.into(), 2.into()))
    }
}

/// Polynomials whose roots are the x-coordinates of the points of exact order `d`,
/// for every `1 < d ≤ n`.
pub fn primitive_division_polynomials(n: usize) -> BTreeMap<usize, RationalPoly> {
    let mut out: BTreeMap<usize, RationalPoly> = BTreeMap::new();
    for d in 2..=n {
        let mut g = division_polynomial(d);
        for (e, phi) in &out {
            if d % e == 0 {
                g = g.div_exact(phi);
            }
        }
        out.insert(d, g);
    }
    out
}

pub fn primitive_division_polynomial(n: usize) -> RationalPoly {
    primitive_division_polynomials(n).remove(&n).expect("n ≥ 2")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_division_polynomials() {
        assert_eq!(division_polynomial(2), RationalPoly::from_ints(&[0, -1, 0, 1]));
        assert_eq!(division_polynomial(3), RationalPoly::from_ints(&[-1, 0, -6, 0, 3]));
        assert_eq!(division_polynomial(3).to_string(), "3x^4 - 6x^2 - 1");
        let g4 = division_polynomial(4);
        assert_eq!(g4.degree(), Some(9));
        let i = Complex64::new(0.0, 1.0);
        assert!(g4.eval_complex(i).norm() < 1e-12);
        assert!(g4.eval_complex(-i).norm() < 1e-12);
    }

    #[test]
    fn degrees_match_torsion_counts() {
        // n² − 1 nonzero points, paired by ±, plus 3 self-paired ones for even n
        for n in 2..=10usize {
            let expected = if n % 2 == 1 { (n * n - 1) / 2 } else { (n * n - 4) / 2 + 3 };
            assert_eq!(division_polynomial(n).degree(), Some(expected), "n = {n}");
        }
        let prim = primitive_division_polynomials(6);
        assert_eq!(prim[&3].degree(), Some(4));
        assert_eq!(prim[&4].degree(), Some(6));
        assert_eq!(prim[&5].degree(), Some(12));
        assert_eq!(prim[&6].degree(), Some(12));
    }

    #[test]
    fn odd_recurrence_against_generic_formula() {
        // generic ψ₅ for y² = x³ + ax restricted to a = −1:
        // 5x¹² + 62ax¹⁰ − 105a²x⁸ − 300a³x⁶ − 125a⁴x⁴ − 50a⁵x² + a⁶
        let expected = RationalPoly::from_ints(&[1, 0, 50, 0, -125, 0, 300, 0, -105, 0, -62, 0, 5]);
        assert_eq!(division_polynomial(5), expected);
    }

    #[test]
    fn division_with_remainder() {
        let a = RationalPoly::from_ints(&[1, 2, 1]);
        let b = RationalPoly::from_ints(&[1, 1]);
        assert_eq!(a.div_exact(&b), b);
        let (quo, rem) = RationalPoly::from_ints(&[2, 0, 1]).div_rem(&b);
        assert_eq!(quo, RationalPoly::from_ints(&[-1, 1]));
        assert_eq!(rem, RationalPoly::from_ints(&[3]));
        assert_eq!(a.derivative(), RationalPoly::from_ints(&[2, 2]));
    }
}
