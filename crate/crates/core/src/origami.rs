use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::OrigamiError;
use crate::perm::Permutation;
use crate::quaternion::QuaternionElement;

/// A square-tiled surface given by its right-neighbour permutation `h` and
/// top-neighbour permutation `v` on squares `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Origami {
    h: Permutation,
    v: Permutation,
    name: Option<String>,
}

/// Cone points of an origami, one per vertex.
///
/// Order `k` means cone angle `2π(k+1)`; regular points (order 0) are kept.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityProfile {
    pub cone_orders: Vec<usize>,
    pub vertex_count: usize,
}

impl SingularityProfile {
    /// Nonzero cone orders, sorted descending (the stratum).
    pub fn stratum(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.cone_orders.iter().copied().filter(|&k| k > 0).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    pub fn regular_count(&self) -> usize {
        self.cone_orders.iter().filter(|&&k| k == 0).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cylinder {
    pub circumference: usize,
    pub height: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CylinderDecomposition {
    pub cylinders: Vec<Cylinder>,
}

impl CylinderDecomposition {
    pub fn area(&self) -> usize {
        self.cylinders.iter().map(|c| c.circumference * c.height).sum()
    }
}

impl Origami {
    pub fn new(h: Permutation, v: Permutation, name: Option<String>) -> Result<Self, OrigamiError> {
        if h.len() != v.len() {
            return Err(OrigamiError::LengthMismatch { h: h.len(), v: v.len() });
        }
        if h.is_empty() {
            return Err(OrigamiError::Empty);
        }
        let o = Origami { h, v, name };
        if !o.is_connected() {
            return Err(OrigamiError::NotConnected);
        }
        Ok(o)
    }

    /// Convenience constructor from raw image arrays.
    pub fn from_images(h: Vec<usize>, v: Vec<usize>) -> Result<Self, OrigamiError> {
        Origami::new(Permutation::new(h)?, Permutation::new(v)?, None)
    }

    pub(crate) fn new_unchecked(h: Permutation, v: Permutation) -> Self {
        Origami { h, v, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn h(&self) -> &Permutation {
        &self.h
    }

    pub fn v(&self) -> &Permutation {
        &self.v
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n_squares(&self) -> usize {
        self.h.len()
    }

    fn is_connected(&self) -> bool {
        let n = self.n_squares();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(s) = stack.pop() {
            for t in [self.h[s], self.v[s]] {
                if !seen[t] {
                    seen[t] = true;
                    count += 1;
                    stack.push(t);
                }
            }
        }
        count == n
    }

    /// The commutator `h⁻¹v⁻¹hv` (apply `v` first).
    pub fn commutator(&self) -> Permutation {
        self.h
            .inverse()
            .compose(&self.v.inverse())
            .compose(&self.h)
            .compose(&self.v)
    }

    /// Rotation around lower-left corners: `s ↦ v h v⁻¹ h⁻¹ s`.
    ///
    /// Walking counterclockwise around the lower-left corner of `s` visits
    /// the squares `h⁻¹s`, `v⁻¹h⁻¹s`, `hv⁻¹h⁻¹s` and ends at the next square
    /// sharing that vertex as its own lower-left corner.
    pub fn corner_rotation(&self) -> Permutation {
        self.v
            .compose(&self.h)
            .compose(&self.v.inverse())
            .compose(&self.h.inverse())
    }

    /// Vertices as sets of squares having that vertex as lower-left corner.
    pub fn vertices(&self) -> Vec<Vec<usize>> {
        self.corner_rotation().cycles()
    }

    /// For each square, the index (into [`Origami::vertices`]) of its lower-left corner.
    pub fn lower_left_vertex(&self) -> Vec<usize> {
        self.corner_rotation().cycle_labels()
    }

    pub fn genus(&self) -> usize {
        let vcount = self.vertices().len();
        // 2 - 2g = V - E + F = V - 2N + N
        (2 + self.n_squares() - vcount) / 2
    }

    pub fn singularity_profile(&self) -> SingularityProfile {
        let verts = self.vertices();
        SingularityProfile {
            cone_orders: verts.iter().map(|c| c.len() - 1).collect(),
            vertex_count: verts.len(),
        }
    }

    pub fn horizontal_cylinders(&self) -> CylinderDecomposition {
        cylinders_of(&self.h, &self.v)
    }

    pub fn vertical_cylinders(&self) -> CylinderDecomposition {
        cylinders_of(&self.v, &self.h.inverse())
    }

    /// Renames square `i` to `relabel(i)`.
    pub fn relabel(&self, relabel: &Permutation) -> Origami {
        Origami {
            h: self.h.conjugate_by(relabel),
            v: self.v.conjugate_by(relabel),
            name: self.name.clone(),
        }
    }

    /// Lexicographically smallest `(h, v)` over the BFS relabelings started at each square.
    pub fn canonical_form(&self) -> Origami {
        let (h, v) = self.canonical_key();
        Origami {
            h: Permutation::from_images_unchecked(h),
            v: Permutation::from_images_unchecked(v),
            name: self.name.clone(),
        }
    }

    /// Image arrays of the canonical form, usable as a hash key.
    pub fn canonical_key(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n_squares();
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::with_capacity(n);
        for start in 0..n {
            label.iter_mut().for_each(|l| *l = usize::MAX);
            order.clear();
            queue.clear();
            label[start] = 0;
            order.push(start);
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                for y in [self.h[x], self.v[x]] {
                    if label[y] == usize::MAX {
                        label[y] = order.len();
                        order.push(y);
                        queue.push_back(y);
                    }
                }
            }
            let h: Vec<usize> = order.iter().map(|&x| label[self.h[x]]).collect();
            let v: Vec<usize> = order.iter().map(|&x| label[self.v[x]]).collect();
            let better = match &best {
                None => true,
                Some((bh, bv)) => (&h, &v) < (bh, bv),
            };
            if better {
                best = Some((h, v));
            }
        }
        best.expect("origamis have at least one square")
    }

    pub fn is_isomorphic(&self, other: &Origami) -> bool {
        self.n_squares() == other.n_squares() && self.canonical_key() == other.canonical_key()
    }
}

/// Horizontal cylinders for the pair (`h` = along the core curve, `v` = across).
fn cylinders_of(h: &Permutation, v: &Permutation) -> CylinderDecomposition {
    let rows = h.cycles();
    let row_of = h.cycle_labels();
    // above[r] = the row glued along the whole top of row r without a singular point.
    let above: Vec<Option<usize>> = rows
        .iter()
        .map(|row| {
            let regular = row.iter().all(|&s| v[h[s]] == h[v[s]]);
            regular.then(|| row_of[v[row[0]]])
        })
        .collect();
    let mut has_below = vec![false; rows.len()];
    for r in above.iter().flatten() {
        has_below[*r] = true;
    }
    let mut used = vec![false; rows.len()];
    let mut cylinders = Vec::new();
    let walk = |start: usize, used: &mut Vec<bool>| {
        let mut height = 0;
        let mut r = start;
        loop {
            used[r] = true;
            height += 1;
            match above[r] {
                Some(next) if !used[next] => r = next,
                _ => break,
            }
        }
        Cylinder {
            circumference: rows[start].len(),
            height,
        }
    };
    for r in 0..rows.len() {
        if !has_below[r] && !used[r] {
            cylinders.push(walk(r, &mut used));
        }
    }
    // Whatever is left closes up into a cylinder with no singular boundary.
    for r in 0..rows.len() {
        if !used[r] {
            cylinders.push(walk(r, &mut used));
        }
    }
    cylinders.sort_unstable_by(|a, b| b.cmp(a));
    CylinderDecomposition { cylinders }
}

/// Text form `n=..; h=(..)..; v=(..)..` with 1-based cycle labels.
impl fmt::Display for Origami {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; h={}; v={}", self.n_squares(), self.h, self.v)
    }
}

/// The quaternion origami W: squares are the elements of Q in
/// [`QuaternionElement::SQUARE_ORDER`], with right neighbour `g·i` and top neighbour `g·j`.
pub fn quaternion_origami() -> Origami {
    let images = |unit: QuaternionElement| -> Vec<usize> {
        QuaternionElement::SQUARE_ORDER
            .iter()
            .map(|&g| (g * unit).square_index())
            .collect()
    };
    Origami::new(
        Permutation::from_images_unchecked(images(QuaternionElement::I)),
        Permutation::from_images_unchecked(images(QuaternionElement::J)),
        Some("W".into()),
    )
    .expect("W is connected")
}

/// Square index of grid position `(x, y)` in [`torus_grid`].
pub fn grid_index(n: usize, x: usize, y: usize) -> usize {
    y * n + x
}

/// The `n × n` torus subdivided into unit squares.
pub fn torus_grid(n: usize) -> Result<Origami, OrigamiError> {
    if n == 0 {
        return Err(OrigamiError::Empty);
    }
    let mut h = vec![0; n * n];
    let mut v = vec![0; n * n];
    for y in 0..n {
        for x in 0..n {
            h[grid_index(n, x, y)] = grid_index(n, (x + 1) % n, y);
            v[grid_index(n, x, y)] = grid_index(n, x, (y + 1) % n);
        }
    }
    Ok(Origami::from_images(h, v)?.with_name(format!("torus_grid({n})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::QuaternionElement as Q;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|i| i - 1).collect()).collect();
        Permutation::from_cycles(n, &c).unwrap()
    }

    #[test]
    fn make_origami_examples() {
        let o = Origami::from_images(vec![1, 0], vec![0, 1]).unwrap();
        assert_eq!(o.genus(), 1);
        assert_eq!(Origami::from_images(vec![0, 1], vec![0, 1]), Err(OrigamiError::NotConnected));
        assert_eq!(Origami::from_images(vec![0], vec![0]).unwrap().genus(), 1);
        assert!(matches!(
            Origami::from_images(vec![0, 0], vec![0, 1]),
            Err(OrigamiError::NotBijection(2))
        ));
    }

    #[test]
    fn w_neighbours() {
        let w = quaternion_origami();
        assert_eq!(w.h()[Q::J.square_index()], Q::MINUS_K.square_index());
        assert_eq!(w.v()[Q::K.square_index()], Q::MINUS_I.square_index());
        assert_eq!(w.h(), &cyc(8, &[&[1, 2, 3, 4], &[5, 6, 7, 8]]));
        assert_eq!(w.v(), &cyc(8, &[&[1, 5, 3, 7], &[2, 8, 4, 6]]));
    }

    #[test]
    fn w_invariants() {
        let w = quaternion_origami();
        assert_eq!(w.genus(), 3);
        let p = w.singularity_profile();
        assert_eq!(p.vertex_count, 4);
        assert_eq!(p.cone_orders, vec![1, 1, 1, 1]);
        let cyl = w.horizontal_cylinders().cylinders;
        assert_eq!(cyl, vec![Cylinder { circumference: 4, height: 1 }; 2]);
        assert_eq!(w.vertical_cylinders().area(), 8);
    }

    #[test]
    fn grid_invariants() {
        assert_eq!(torus_grid(0), Err(OrigamiError::Empty));
        for n in 1..=6 {
            let g = torus_grid(n).unwrap();
            assert_eq!(g.genus(), 1);
            assert!(g.commutator().is_identity());
        }
        let g3 = torus_grid(3).unwrap();
        assert_eq!(g3.h().cycles().len(), 3);
        assert_eq!(g3.horizontal_cylinders().cylinders, vec![Cylinder { circumference: 3, height: 3 }]);
        let p = torus_grid(2).unwrap().singularity_profile();
        assert_eq!(p.cone_orders, vec![0; 4]);
        let two = Origami::from_images(vec![1, 0], vec![0, 1]).unwrap();
        assert_eq!(two.horizontal_cylinders().cylinders, vec![Cylinder { circumference: 2, height: 1 }]);
    }

    #[test]
    fn commutator_and_corner_rotation_agree_on_cycle_type() {
        let w = quaternion_origami();
        let mut a: Vec<usize> = w.commutator().cycles().iter().map(|c| c.len()).collect();
        let mut b: Vec<usize> = w.vertices().iter().map(|c| c.len()).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn second_depiction_of_w_is_isomorphic() {
        // squares in reading order: -j, j, 1, i, -1, -i, k, -k
        let alt = Origami::new(
            cyc(8, &[&[1, 7, 2, 8], &[3, 4, 5, 6]]),
            cyc(8, &[&[1, 3, 2, 5], &[4, 7, 6, 8]]),
            None,
        )
        .unwrap();
        assert!(alt.is_isomorphic(&quaternion_origami()));
        assert!(!alt.is_isomorphic(&torus_grid(2).unwrap()));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let w = quaternion_origami();
        let c = w.canonical_form();
        assert_eq!(c.canonical_form(), c);
        let r = cyc(8, &[&[1, 5, 2], &[3, 8]]);
        assert_eq!(w.relabel(&r).canonical_form(), c);
    }
}
