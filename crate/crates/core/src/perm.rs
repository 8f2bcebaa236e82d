use std::fmt;
use std::ops::Index;

use crate::error::OrigamiError;

/// A permutation of `0..n`, stored as its list of images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, OrigamiError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(OrigamiError::NotBijection(n));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of `0..n` from disjoint cycles (0-based).
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, OrigamiError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= n || touched[a] {
                    return Err(OrigamiError::NotBijection(n));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Permutation::identity(self.len());
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.images[i] == i).collect()
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by that element.
    /// Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Label of the cycle containing each point, numbered in order of first appearance.
    pub fn cycle_labels(&self) -> Vec<usize> {
        let mut labels = vec![usize::MAX; self.len()];
        for (k, cycle) in self.cycles().into_iter().enumerate() {
            for i in cycle {
                labels[i] = k;
            }
        }
        labels
    }

    /// `relabel ∘ self ∘ relabel⁻¹`, i.e. the same permutation written in new labels
    /// where point `i` is renamed `relabel(i)`.
    pub fn conjugate_by(&self, relabel: &Permutation) -> Self {
        let mut images = vec![0; self.len()];
        for i in 0..self.len() {
            images[relabel.apply(i)] = relabel.apply(self.images[i]);
        }
        Permutation { images }
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(|c| c.len())
            .fold(1, num_integer::lcm)
    }
}

impl Index<usize> for Permutation {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.images[i]
    }
}

/// Cycle notation with 1-based labels, omitting fixed points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let body: Vec<String> = cycle.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
