//! The quaternion group Q = {±1, ±i, ±j, ±k}.

use std::fmt;
use std::ops::{Mul, Neg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unit {
    One,
    I,
    J,
    K,
}

/// An element `±unit` of the quaternion group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuaternionElement {
    pub negative: bool,
    pub unit: Unit,
}

impl QuaternionElement {
    pub const ONE: Self = Self::new(false, Unit::One);
    pub const MINUS_ONE: Self = Self::new(true, Unit::One);
    pub const I: Self = Self::new(false, Unit::I);
    pub const MINUS_I: Self = Self::new(true, Unit::I);
    pub const J: Self = Self::new(false, Unit::J);
    pub const MINUS_J: Self = Self::new(true, Unit::J);
    pub const K: Self = Self::new(false, Unit::K);
    pub const MINUS_K: Self = Self::new(true, Unit::K);

    /// Square order used by the built-in quaternion origami: (1, i, −1, −i, j, −k, −j, k).
    /// Rows of the origami are the two cosets of ⟨i⟩, each listed left to right.
    pub const SQUARE_ORDER: [Self; 8] = [
        Self::ONE,
        Self::I,
        Self::MINUS_ONE,
        Self::MINUS_I,
        Self::J,
        Self::MINUS_K,
        Self::MINUS_J,
        Self::K,
    ];

    pub const fn new(negative: bool, unit: Unit) -> Self {
        QuaternionElement { negative, unit }
    }

    pub fn all() -> [Self; 8] {
        Self::SQUARE_ORDER
    }

    /// Position in [`Self::SQUARE_ORDER`].
    pub fn square_index(self) -> usize {
        Self::SQUARE_ORDER
            .iter()
            .position(|&q| q == self)
            .expect("every element is listed")
    }

    pub fn from_square_index(i: usize) -> Self {
        Self::SQUARE_ORDER[i]
    }

    pub fn inverse(self) -> Self {
        match self.unit {
            Unit::One => self,
            _ => -self,
        }
    }

    pub fn order(self) -> usize {
        match (self.negative, self.unit) {
            (false, Unit::One) => 1,
            (true, Unit::One) => 2,
            _ => 4,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let (negative, rest) = match s.trim().strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, s.trim().trim_start_matches('+')),
        };
        let unit = match rest {
            "1" => Unit::One,
            "i" => Unit::I,
            "j" => Unit::J,
            "k" => Unit::K,
            _ => return None,
        };
        Some(Self::new(negative, unit))
    }
}

impl Neg for QuaternionElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(!self.negative, self.unit)
    }
}

impl Mul for QuaternionElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        use Unit::*;
        let (flip, unit) = match (self.unit, rhs.unit) {
            (One, u) | (u, One) => (false, u),
            (I, I) | (J, J) | (K, K) => (true, One),
            (I, J) => (false, K),
            (J, I) => (true, K),
            (J, K) => (false, I),
            (K, J) => (true, I),
            (K, I) => (false, J),
            (I, K) => (true, J),
        };
        Self::new(self.negative ^ rhs.negative ^ flip, unit)
    }
}

impl fmt::Display for QuaternionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = match self.unit {
            Unit::One => "1",
            Unit::I => "i",
            Unit::J => "j",
            Unit::K => "k",
        };
        if self.negative {
            write!(f, "-{u}")
        } else {
            write!(f, "{u}")
        }
    }
}
