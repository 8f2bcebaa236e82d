use std::fmt;

use num_complex::Complex64;

/// A point `(X:Y:Z)` of the complex projective plane, scaled so its
/// largest-modulus coordinate equals 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjPoint2 {
    coords: [Complex64; 3],
}

fn argmax(c: &[Complex64; 3]) -> usize {
    (0..3)
        .max_by(|&a, &b| c[a].norm().partial_cmp(&c[b].norm()).unwrap())
        .unwrap()
}

impl ProjPoint2 {
    /// Normalizes `(x : y : z)`; the zero vector is kept as is and reported by
    /// [`ProjPoint2::is_degenerate`].
    pub fn new(x: Complex64, y: Complex64, z: Complex64) -> Self {
        let c = [x, y, z];
        let k = argmax(&c);
        if c[k].norm() == 0.0 || !c[k].is_finite() {
            return ProjPoint2 { coords: c };
        }
        let s = c[k];
        let mut coords = [c[0] / s, c[1] / s, c[2] / s];
        coords[k] = Complex64::new(1.0, 0.0);
        ProjPoint2 { coords }
    }

    pub fn from_array(c: [Complex64; 3]) -> Self {
        ProjPoint2::new(c[0], c[1], c[2])
    }

    pub fn real(x: f64, y: f64, z: f64) -> Self {
        ProjPoint2::new(x.into(), y.into(), z.into())
    }

    pub fn coords(&self) -> [Complex64; 3] {
        self.coords
    }

    pub fn x(&self) -> Complex64 {
        self.coords[0]
    }

    pub fn y(&self) -> Complex64 {
        self.coords[1]
    }

    pub fn z(&self) -> Complex64 {
        self.coords[2]
    }

    pub fn is_degenerate(&self) -> bool {
        self.coords.iter().all(|c| c.norm() == 0.0) || self.coords.iter().any(|c| !c.is_finite())
    }

    /// Scale-invariant comparison within `tol`.
    pub fn approx_eq(&self, other: &ProjPoint2, tol: f64) -> bool {
        if self.is_degenerate() || other.is_degenerate() {
            return false;
        }
        let k = argmax(&self.coords);
        let s = other.coords[k];
        if s.norm() < 1e-300 {
            return false;
        }
        (0..3).all(|j| (self.coords[j] / self.coords[k] - other.coords[j] / s).norm() <= tol)
    }

    /// Multiplies all coordinates by `u` (same projective point; used to test scale invariance).
    pub fn scaled_raw(&self, u: Complex64) -> [Complex64; 3] {
        [self.coords[0] * u, self.coords[1] * u, self.coords[2] * u]
    }
}

impl fmt::Display for ProjPoint2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |z: Complex64| format!("{:.6}{:+.6}i", z.re, z.im);
        write!(f, "({} : {} : {})", c(self.coords[0]), c(self.coords[1]), c(self.coords[2]))
    }
}

/// Whether two finite sets of points agree as sets.
pub fn same_set(a: &[ProjPoint2], b: &[ProjPoint2], tol: f64) -> bool {
    a.iter().all(|p| b.iter().any(|q| p.approx_eq(q, tol))) && b.iter().all(|q| a.iter().any(|p| p.approx_eq(q, tol)))
}

/// A 3×3 complex matrix acting on homogeneous coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat3(pub [[Complex64; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        Mat3([[l, o, o], [o, l, o], [o, o, l]])
    }

    pub fn apply(&self, p: &ProjPoint2) -> ProjPoint2 {
        let c = p.coords();
        let r = |i: usize| self.0[i][0] * c[0] + self.0[i][1] * c[1] + self.0[i][2] * c[2];
        ProjPoint2::new(r(0), r(1), r(2))
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        let mut out = [[Complex64::new(0.0, 0.0); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        Mat3(out)
    }

    fn normalized(&self) -> [Complex64; 9] {
        let flat: Vec<Complex64> = self.0.iter().flatten().copied().collect();
        let k = (0..9)
            .max_by(|&a, &b| flat[a].norm().partial_cmp(&flat[b].norm()).unwrap())
            .unwrap();
        let s = flat[k];
        let mut out = [Complex64::new(0.0, 0.0); 9];
        for (o, f) in out.iter_mut().zip(&flat) {
            *o = f / s;
        }
        out
    }

    /// Equality in PGL₃ within `tol`.
    pub fn proj_eq(&self, other: &Mat3, tol: f64) -> bool {
        let a = self.normalized();
        let flat: Vec<Complex64> = other.0.iter().flatten().copied().collect();
        let k = (0..9).find(|&i| (a[i] - 1.0).norm() == 0.0).unwrap_or(0);
        if flat[k].norm() < 1e-300 {
            return false;
        }
        (0..9).all(|i| (a[i] - flat[i] / flat[k]).norm() <= tol)
    }

    pub fn is_scalar(&self, tol: f64) -> bool {
        self.proj_eq(&Mat3::identity(), tol)
    }

    /// Order in PGL₃, if at most `max`.
    pub fn proj_order(&self, max: usize, tol: f64) -> Option<usize> {
        let mut m = *self;
        for k in 1..=max {
            if m.is_scalar(tol) {
                return Some(k);
            }
            m = self.mul(&m);
        }
        None
    }
}
