//! Affine automorphisms with derivative in {±I, S, S⁻¹}, their fixed points and quotients.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::AutoError;
use crate::origami::Origami;
use crate::perm::Permutation;
use crate::quaternion::QuaternionElement;

/// The derivatives handled here form the cyclic group generated by S (S² = −I).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Derivative {
    I,
    S,
    MinusI,
    SInv,
}

impl Derivative {
    fn power(self) -> u8 {
        match self {
            Derivative::I => 0,
            Derivative::S => 1,
            Derivative::MinusI => 2,
            Derivative::SInv => 3,
        }
    }

    fn from_power(p: u8) -> Self {
        match p % 4 {
            0 => Derivative::I,
            1 => Derivative::S,
            2 => Derivative::MinusI,
            _ => Derivative::SInv,
        }
    }

    pub fn compose(self, other: Derivative) -> Derivative {
        Derivative::from_power(self.power() + other.power())
    }

    /// `(X, Y)` with `π∘h = X∘π` and `π∘v = Y∘π`.
    fn targets(self, o: &Origami) -> (Permutation, Permutation) {
        match self {
            Derivative::I => (o.h().clone(), o.v().clone()),
            Derivative::MinusI => (o.h().inverse(), o.v().inverse()),
            Derivative::S => (o.v().clone(), o.h().inverse()),
            Derivative::SInv => (o.v().inverse(), o.h().clone()),
        }
    }
}

impl fmt::Display for Derivative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Derivative::I => "I",
            Derivative::MinusI => "-I",
            Derivative::S => "S",
            Derivative::SInv => "S^-1",
        })
    }
}

impl FromStr for Derivative {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "I" | "1" => Ok(Derivative::I),
            "-I" | "-1" => Ok(Derivative::MinusI),
            "S" => Ok(Derivative::S),
            "S^-1" | "-S" | "Sinv" => Ok(Derivative::SInv),
            other => Err(format!("unknown derivative {other:?} (expected I, -I, S or S^-1)")),
        }
    }
}

/// An affine automorphism, recorded by where it sends each square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineAuto {
    pub pi: Permutation,
    pub derivative: Derivative,
}

impl AffineAuto {
    pub fn identity(n: usize) -> Self {
        AffineAuto {
            pi: Permutation::identity(n),
            derivative: Derivative::I,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineAuto) -> AffineAuto {
        AffineAuto {
            pi: self.pi.compose(&other.pi),
            derivative: self.derivative.compose(other.derivative),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.derivative == Derivative::I && self.pi.is_identity()
    }

    pub fn order(&self) -> usize {
        let mut g = self.clone();
        let mut k = 1;
        while !g.is_identity() {
            g = self.compose(&g);
            k += 1;
        }
        k
    }

    pub fn check(&self, o: &Origami) -> Result<(), AutoError> {
        let (x, y) = self.derivative.targets(o);
        let ok = self.pi.len() == o.n_squares()
            && self.pi.compose(o.h()) == x.compose(&self.pi)
            && self.pi.compose(o.v()) == y.compose(&self.pi);
        if ok {
            Ok(())
        } else {
            Err(AutoError::RelationViolated(self.derivative.to_string()))
        }
    }
}

/// The unique auto with the given derivative sending square 0 to `target`, if any.
pub fn auto_from_image(o: &Origami, derivative: Derivative, target: usize) -> Option<AffineAuto> {
    let n = o.n_squares();
    let (x, y) = derivative.targets(o);
    let mut pi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    pi[0] = target;
    used[target] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(s) = queue.pop_front() {
        for (src, img) in [(o.h()[s], x[pi[s]]), (o.v()[s], y[pi[s]])] {
            if pi[src] == usize::MAX {
                if used[img] {
                    return None;
                }
                pi[src] = img;
                used[img] = true;
                queue.push_back(src);
            } else if pi[src] != img {
                return None;
            }
        }
    }
    let a = AffineAuto {
        pi: Permutation::new(pi).ok()?,
        derivative,
    };
    a.check(o).ok()?;
    Some(a)
}

/// All affine automorphisms with the given derivative, ordered by the image of square 0.
pub fn affine_autos(o: &Origami, derivative: Derivative) -> Vec<AffineAuto> {
    (0..o.n_squares())
        .filter_map(|t| auto_from_image(o, derivative, t))
        .collect()
}

pub fn translations(o: &Origami) -> Vec<AffineAuto> {
    affine_autos(o, Derivative::I)
}

/// Autos with derivative ±I.
pub fn plus_minus_autos(o: &Origami) -> Vec<AffineAuto> {
    let mut all = affine_autos(o, Derivative::I);
    all.extend(affine_autos(o, Derivative::MinusI));
    all
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointReport {
    pub fixed_square_centers: Vec<usize>,
    /// Square `s` stands for the midpoint of its right edge.
    pub fixed_vertical_edge_midpoints: Vec<usize>,
    /// Square `s` stands for the midpoint of its top edge.
    pub fixed_horizontal_edge_midpoints: Vec<usize>,
    /// Indices into [`Origami::vertices`].
    pub fixed_vertices: Vec<usize>,
}

impl FixedPointReport {
    pub fn total(&self) -> usize {
        self.fixed_square_centers.len()
            + self.fixed_vertical_edge_midpoints.len()
            + self.fixed_horizontal_edge_midpoints.len()
            + self.fixed_vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.total() == 0
    }
}

/// Vertex (index into [`Origami::vertices`]) that the lower-left corner of `s` is sent to.
fn corner_image(o: &Origami, a: &AffineAuto, ll: &[usize], s: usize) -> usize {
    let t = a.pi[s];
    match a.derivative {
        Derivative::I => ll[t],
        // the lower-left corner lands on the upper-right corner of π(s)
        Derivative::MinusI => ll[o.v()[o.h()[t]]],
        // ... on the lower-right corner
        Derivative::S => ll[o.h()[t]],
        // ... on the upper-left corner
        Derivative::SInv => ll[o.v()[t]],
    }
}

pub fn fixed_points(o: &Origami, a: &AffineAuto) -> Result<FixedPointReport, AutoError> {
    a.check(o)?;
    let n = o.n_squares();
    let mut r = FixedPointReport::default();
    r.fixed_square_centers = (0..n).filter(|&s| a.pi[s] == s).collect();
    match a.derivative {
        Derivative::I => {
            r.fixed_vertical_edge_midpoints = (0..n).filter(|&s| a.pi[s] == s).collect();
            r.fixed_horizontal_edge_midpoints = r.fixed_vertical_edge_midpoints.clone();
        }
        Derivative::MinusI => {
            r.fixed_vertical_edge_midpoints = (0..n).filter(|&s| a.pi[s] == o.h()[s]).collect();
            r.fixed_horizontal_edge_midpoints = (0..n).filter(|&s| a.pi[s] == o.v()[s]).collect();
        }
        // a quarter turn swaps horizontal and vertical edges
        Derivative::S | Derivative::SInv => {}
    }
    let verts = o.vertices();
    let ll = o.lower_left_vertex();
    r.fixed_vertices = verts
        .iter()
        .enumerate()
        .filter(|(k, cycle)| corner_image(o, a, &ll, cycle[0]) == *k)
        .map(|(k, _)| k)
        .collect();
    Ok(r)
}

fn closure_check(autos: &[AffineAuto]) -> Result<(), AutoError> {
    for a in autos {
        for b in autos {
            if !autos.contains(&a.compose(b)) {
                return Err(AutoError::NotClosed);
            }
        }
    }
    Ok(())
}

/// Element orders of a finite group of autos given as a list.
pub fn order_histogram(autos: &[AffineAuto]) -> Result<BTreeMap<usize, usize>, AutoError> {
    closure_check(autos)?;
    let mut hist = BTreeMap::new();
    for a in autos {
        *hist.entry(a.order()).or_insert(0) += 1;
    }
    Ok(hist)
}

/// Quotient origami by a group of translations acting freely on squares.
pub fn quotient_by_translations(o: &Origami, sub: &[AffineAuto]) -> Result<Origami, AutoError> {
    let n = o.n_squares();
    if sub.iter().any(|a| a.derivative != Derivative::I || a.check(o).is_err())
        || !sub.iter().any(|a| a.is_identity())
    {
        return Err(AutoError::NotSubgroup);
    }
    closure_check(sub).map_err(|_| AutoError::NotSubgroup)?;
    if sub.iter().any(|a| !a.is_identity() && !a.pi.fixed_points().is_empty()) {
        return Err(AutoError::NotFreeOnSquares);
    }
    let mut orbit_of = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if orbit_of[s] == usize::MAX {
            for a in sub {
                orbit_of[a.pi[s]] = count;
            }
            count += 1;
        }
    }
    let mut h = vec![0; count];
    let mut v = vec![0; count];
    for s in 0..n {
        h[orbit_of[s]] = orbit_of[o.h()[s]];
        v[orbit_of[s]] = orbit_of[o.v()[s]];
    }
    Ok(Origami::from_images(h, v)?)
}

/// Genus of `o / G` from the orbifold Euler characteristic
/// `χ(X/G) = (1/|G|) Σ_g χ(Fix g)`.
pub fn quotient_genus(o: &Origami, group: &[AffineAuto]) -> Result<usize, AutoError> {
    closure_check(group)?;
    let mut sum: i64 = 0;
    for a in group {
        if a.is_identity() {
            sum += 2 - 2 * o.genus() as i64;
        } else {
            sum += fixed_points(o, a)?.total() as i64;
        }
    }
    let chi = sum / group.len() as i64;
    Ok((2 - chi) as usize / 2)
}

/// The cyclic group generated by `a`.
pub fn generated(a: &AffineAuto) -> Vec<AffineAuto> {
    let mut out = vec![AffineAuto::identity(a.pi.len())];
    let mut g = a.clone();
    while !g.is_identity() {
        out.push(g.clone());
        g = a.compose(&g);
    }
    out
}

/// Named automorphisms of the built-in quaternion origami.
pub mod w {
    use super::*;
    use crate::origami::quaternion_origami;
    use QuaternionElement as Q;

    fn from_map(f: impl Fn(Q) -> Q, derivative: Derivative) -> AffineAuto {
        let pi = Q::SQUARE_ORDER.iter().map(|&g| f(g).square_index()).collect();
        AffineAuto {
            pi: Permutation::from_images_unchecked(pi),
            derivative,
        }
    }

    /// Deck transformation `g ↦ q·g`.
    pub fn translation(q: Q) -> AffineAuto {
        from_map(|g| q * g, Derivative::I)
    }

    /// `g ↦ k g k⁻¹`: rotation by π fixing the centres of ±1 and ±k.
    pub fn sigma() -> AffineAuto {
        from_map(|g| Q::K * g * Q::K.inverse(), Derivative::MinusI)
    }

    pub const NAMES: [&str; 16] = [
        "1", "-1", "i", "-i", "j", "-j", "k", "-k", "sigma", "-sigma", "tau", "-tau", "rho", "-rho", "c",
        "-c",
    ];

    /// Looks up one of [`NAMES`]: translations by quaternions, `σ`, and `τ = iσ`, `ρ = jσ`, `c = kσ`
    /// with their negatives.
    pub fn named(name: &str) -> Option<AffineAuto> {
        if let Some(q) = Q::parse(name) {
            return Some(translation(q));
        }
        let (neg, base) = match name.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, name),
        };
        let q = match base {
            "sigma" => Q::ONE,
            "tau" => Q::I,
            "rho" => Q::J,
            "c" => Q::K,
            _ => return None,
        };
        let q = if neg { -q } else { q };
        Some(translation(q).compose(&sigma()))
    }

    /// Name of the auto of W with this square permutation, if it is one of the sixteen.
    pub fn name_of(a: &AffineAuto) -> Option<&'static str> {
        NAMES.iter().copied().find(|n| named(n).as_ref() == Some(a))
    }

    /// Square label in quaternion notation.
    pub fn square_label(s: usize) -> String {
        Q::from_square_index(s).to_string()
    }

    /// Fixed points of one named auto of W, squares given by their quaternion labels.
    #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
    pub struct FixedPointRow {
        pub name: String,
        pub derivative: String,
        pub order: usize,
        pub square_centers: Vec<String>,
        pub vertical_edges: Vec<String>,
        pub horizontal_edges: Vec<String>,
        pub vertices: usize,
    }

    fn labelled(v: &[usize]) -> Vec<String> {
        let mut q: Vec<Q> = v.iter().map(|&s| Q::from_square_index(s)).collect();
        q.sort();
        q.iter().map(Q::to_string).collect()
    }

    pub fn fixed_point_table() -> Vec<FixedPointRow> {
        let o = quaternion_origami();
        NAMES
            .iter()
            .map(|&name| {
                let a = named(name).expect("listed name");
                let r = fixed_points(&o, &a).expect("named autos are autos of W");
                FixedPointRow {
                    name: name.to_string(),
                    derivative: a.derivative.to_string(),
                    order: a.order(),
                    square_centers: labelled(&r.fixed_square_centers),
                    vertical_edges: labelled(&r.fixed_vertical_edge_midpoints),
                    horizontal_edges: labelled(&r.fixed_horizontal_edge_midpoints),
                    vertices: r.fixed_vertices.len(),
                }
            })
            .collect()
    }

    /// Whether a row matches the known table: σ fixes the centres of ±1, ±k and −σ those of
    /// ±i, ±j; ±τ fix four vertical edge midpoints, ±ρ four horizontal ones; c, −c and −1 fix
    /// the four vertices; ±i, ±j, ±k act freely; 1 is the identity.
    pub fn row_matches(row: &FixedPointRow) -> bool {
        let counts = (
            row.square_centers.len(),
            row.vertical_edges.len(),
            row.horizontal_edges.len(),
            row.vertices,
        );
        let labels = |v: &[&str]| -> Vec<String> {
            let mut q: Vec<Q> = v.iter().map(|s| Q::parse(s).expect("label")).collect();
            q.sort();
            q.iter().map(Q::to_string).collect()
        };
        match row.name.as_str() {
            "1" => counts == (8, 8, 8, 4),
            "sigma" => counts == (4, 0, 0, 0) && row.square_centers == labels(&["1", "-1", "k", "-k"]),
            "-sigma" => counts == (4, 0, 0, 0) && row.square_centers == labels(&["i", "-i", "j", "-j"]),
            "tau" | "-tau" => counts == (0, 4, 0, 0),
            "rho" | "-rho" => counts == (0, 0, 4, 0),
            "c" | "-c" | "-1" => counts == (0, 0, 0, 4),
            "i" | "-i" | "j" | "-j" | "k" | "-k" => counts == (0, 0, 0, 0),
            _ => false,
        }
    }
}
