use std::fmt;

use serde::Serialize;

use crate::error::IntersectError;

/// A lattice point `(a, b)` of the `n × n` torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GridPoint {
    pub a: usize,
    pub b: usize,
    pub n: usize,
}

impl GridPoint {
    pub fn new(a: i64, b: i64, n: usize) -> Result<Self, IntersectError> {
        if n == 0 || a < 0 || b < 0 || a >= n as i64 || b >= n as i64 {
            return Err(IntersectError::OutOfGrid { a, b, n });
        }
        Ok(GridPoint {
            a: a as usize,
            b: b as usize,
            n,
        })
    }

    /// Reduces `a` and `b` modulo `n`.
    pub fn reduced(a: i64, b: i64, n: usize) -> Self {
        assert!(n > 0, "grid size must be positive");
        let m = n as i64;
        GridPoint {
            a: a.rem_euclid(m) as usize,
            b: b.rem_euclid(m) as usize,
            n,
        }
    }

    pub fn is_two_torsion(&self) -> bool {
        (2 * self.a).is_multiple_of(self.n) && (2 * self.b).is_multiple_of(self.n)
    }

    /// `(a, b) ↦ (−b, a)`.
    pub fn rotate90(&self) -> Self {
        GridPoint {
            a: (self.n - self.b) % self.n,
            b: self.a,
            n: self.n,
        }
    }

    /// Order of the point in `(ℤ/n)²`.
    pub fn order(&self) -> usize {
        let g = num_integer::gcd(num_integer::gcd(self.a, self.b), self.n);
        self.n / g
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) mod {}", self.a, self.b, self.n)
    }
}

/// The rotation orbit `P, Q = c̄P, R = c̄²P, S = c̄³P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MarkedQuadruple {
    pub p: GridPoint,
    pub q: GridPoint,
    pub r: GridPoint,
    pub s: GridPoint,
}

impl MarkedQuadruple {
    pub fn points(&self) -> [GridPoint; 4] {
        [self.p, self.q, self.r, self.s]
    }

    pub fn sorted(&self) -> Vec<GridPoint> {
        let mut v = self.points().to_vec();
        v.sort();
        v
    }
}

pub fn marked_quadruple(p: GridPoint) -> Result<MarkedQuadruple, IntersectError> {
    if p.is_two_torsion() {
        return Err(IntersectError::TwoTorsionInput);
    }
    let q = p.rotate90();
    let r = q.rotate90();
    Ok(MarkedQuadruple { p, q, r, s: r.rotate90() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseKind {
    /// Open triangles with a rotation representative `0 < b < a < n/2`.
    Case1,
    /// Open triangles with a rotation representative `n/2 < a`, `0 < b`, `a + b < n`.
    Case2,
    /// On a diagonal `a ≡ ±b`.
    Case3,
    /// On an axis `a ≡ 0` or `b ≡ 0`.
    Case4,
    /// On a line through `(n/2, n/2)` parallel to an axis.
    Case5,
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn in_delta1(p: &GridPoint) -> bool {
    0 < p.b && p.b < p.a && 2 * p.a < p.n
}

fn in_delta2(p: &GridPoint) -> bool {
    2 * p.a > p.n && p.b > 0 && p.a + p.b < p.n
}

pub fn classify_case(p: GridPoint) -> Result<CaseKind, IntersectError> {
    if p.is_two_torsion() {
        return Err(IntersectError::TwoTorsionInput);
    }
    let n = p.n;
    if p.a == p.b || (p.a + p.b).is_multiple_of(n) {
        return Ok(CaseKind::Case3);
    }
    if p.a == 0 || p.b == 0 {
        return Ok(CaseKind::Case4);
    }
    if (2 * p.a).is_multiple_of(n) || (2 * p.b).is_multiple_of(n) {
        return Ok(CaseKind::Case5);
    }
    let mut q = p;
    for _ in 0..4 {
        if in_delta1(&q) {
            return Ok(CaseKind::Case1);
        }
        if in_delta2(&q) {
            return Ok(CaseKind::Case2);
        }
        q = q.rotate90();
    }
    unreachable!("the lines through 0 and M cut the torus into the eight open triangles")
}

/// The rotate of a Case-1 point lying in `0 < b < a < n/2`.
pub fn delta1_representative(p: GridPoint) -> Result<GridPoint, IntersectError> {
    let case = classify_case(p)?;
    if case != CaseKind::Case1 {
        return Err(IntersectError::WrongCase(case.to_string()));
    }
    let mut q = p;
    while !in_delta1(&q) {
        q = q.rotate90();
    }
    Ok(q)
}

/// All grid points of the `n × n` torus that are not 2-torsion.
pub fn valid_points(n: usize) -> Vec<GridPoint> {
    (0..n)
        .flat_map(|b| (0..n).map(move |a| GridPoint { a, b, n }))
        .filter(|p| !p.is_two_torsion())
        .collect()
}
