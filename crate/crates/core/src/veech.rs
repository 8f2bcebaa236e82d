//! The SL₂(ℤ) action on origamis and Veech groups as orbit stabilizers.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::origami::{quaternion_origami, Origami};
use crate::perm::Permutation;
use crate::quaternion::QuaternionElement;

pub type Matrix = [[i64; 2]; 2];

pub const IDENTITY: Matrix = [[1, 0], [0, 1]];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    S,
    SInv,
    T,
    TInv,
}

impl Generator {
    pub fn matrix(self) -> Matrix {
        match self {
            Generator::S => [[0, -1], [1, 0]],
            Generator::SInv => [[0, 1], [-1, 0]],
            Generator::T => [[1, 1], [0, 1]],
            Generator::TInv => [[1, -1], [0, 1]],
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            Generator::S => Generator::SInv,
            Generator::SInv => Generator::S,
            Generator::T => Generator::TInv,
            Generator::TInv => Generator::T,
        }
    }

    /// Acts on a pair `(h, v)`.
    pub fn act_pair(self, h: &Permutation, v: &Permutation) -> (Permutation, Permutation) {
        match self {
            Generator::S => (v.clone(), h.inverse()),
            Generator::SInv => (v.inverse(), h.clone()),
            Generator::T => (h.clone(), v.compose(&h.inverse())),
            Generator::TInv => (h.clone(), v.compose(h)),
        }
    }
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// A word `l₁ l₂ … l_k` in the generators; it acts as `l₁·(l₂·(…(l_k·o)))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SL2Word {
    pub letters: Vec<Generator>,
}

impl SL2Word {
    pub fn identity() -> Self {
        SL2Word::default()
    }

    pub fn new(letters: Vec<Generator>) -> Self {
        SL2Word { letters }
    }

    pub fn matrix(&self) -> Matrix {
        self.letters
            .iter()
            .fold(IDENTITY, |m, g| mat_mul(&m, &g.matrix()))
    }

    pub fn inverse(&self) -> Self {
        SL2Word {
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// `self · other`.
    pub fn then_apply(&self, other: &SL2Word) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        SL2Word { letters }
    }

    pub fn pow(&self, k: usize) -> Self {
        SL2Word {
            letters: (0..k).flat_map(|_| self.letters.iter().copied()).collect(),
        }
    }

    /// Cancels adjacent inverse pairs.
    pub fn reduced(&self) -> Self {
        let mut out: Vec<Generator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&g.inverse()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        SL2Word { letters: out }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for SL2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "I");
        }
        let parts: Vec<&str> = self
            .letters
            .iter()
            .map(|g| match g {
                Generator::S => "S",
                Generator::SInv => "S^-1",
                Generator::T => "T",
                Generator::TInv => "T^-1",
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Accepts `I`, `S T S^-1`, `STS`, `T^3`, `S^-2`.
impl FromStr for SL2Word {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let mut letters = Vec::new();
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() || chars == ['I'] {
            return Ok(SL2Word::identity());
        }
        let mut i = 0;
        while i < chars.len() {
            let (fwd, back) = match chars[i] {
                'S' => (Generator::S, Generator::SInv),
                'T' => (Generator::T, Generator::TInv),
                c => return Err(format!("unexpected {c:?} in word {s:?}")),
            };
            i += 1;
            let mut power: i64 = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && chars[i] == '-' {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                power = text
                    .parse()
                    .map_err(|_| format!("bad exponent {text:?} in word {s:?}"))?;
            }
            let g = if power < 0 { back } else { fwd };
            letters.extend(std::iter::repeat_n(g, power.unsigned_abs() as usize));
        }
        Ok(SL2Word { letters })
    }
}

/// Applies `g` to `o` (squares keep their labels).
pub fn act(g: &SL2Word, o: &Origami) -> Origami {
    let (mut h, mut v) = (o.h().clone(), o.v().clone());
    for letter in g.letters.iter().rev() {
        (h, v) = letter.act_pair(&h, &v);
    }
    Origami::new_unchecked(h, v)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WordEntry {
    pub word: String,
    pub matrix: Matrix,
}

#[derive(Clone, Debug)]
pub struct VeechResult {
    pub index: usize,
    /// Canonical forms of the orbit, starting with the base origami.
    pub orbit: Vec<Origami>,
    /// `coset_table[i] = (S·i, T·i)` as orbit indices.
    pub coset_table: Vec<(usize, usize)>,
    /// Coset representatives: `reps[i]·o ≅ orbit[i]`.
    pub reps: Vec<SL2Word>,
    pub generators: Vec<SL2Word>,
    pub cusp_widths: Vec<usize>,
}

impl VeechResult {
    pub fn generator_entries(&self) -> Vec<WordEntry> {
        self.generators
            .iter()
            .map(|g| WordEntry {
                word: g.to_string(),
                matrix: g.matrix(),
            })
            .collect()
    }
}

type Key = (Vec<usize>, Vec<usize>);

/// Orbit of `o` under SL₂(ℤ), its coset graph and Schreier generators of the stabilizer.
pub fn veech_group(o: &Origami) -> VeechResult {
    let base = o.canonical_form();
    let mut index_of: HashMap<Key, usize> = HashMap::new();
    let mut orbit = vec![base.clone()];
    let mut reps = vec![SL2Word::identity()];
    index_of.insert(base.canonical_key(), 0);
    let mut table: Vec<(usize, usize)> = Vec::new();
    let mut frontier = vec![0usize];
    let mut edges: Vec<[usize; 2]> = Vec::new();
    while !frontier.is_empty() {
        // Images are computed in parallel; indices are assigned in frontier order.
        let images: Vec<[Key; 2]> = frontier
            .par_iter()
            .map(|&i| {
                let src = &orbit[i];
                [
                    act(&SL2Word::new(vec![Generator::S]), src).canonical_key(),
                    act(&SL2Word::new(vec![Generator::T]), src).canonical_key(),
                ]
            })
            .collect();
        let mut next = Vec::new();
        for (&i, keys) in frontier.iter().zip(images) {
            let mut targets = [0usize; 2];
            for (slot, (key, g)) in keys.into_iter().zip([Generator::S, Generator::T]).enumerate() {
                let j = match index_of.get(&key) {
                    Some(&j) => j,
                    None => {
                        let j = orbit.len();
                        let (h, v) = key.clone();
                        orbit.push(Origami::new_unchecked(
                            Permutation::from_images_unchecked(h),
                            Permutation::from_images_unchecked(v),
                        ));
                        let mut w = vec![g];
                        w.extend_from_slice(&reps[i].letters);
                        reps.push(SL2Word::new(w));
                        index_of.insert(key, j);
                        next.push(j);
                        j
                    }
                };
                targets[slot] = j;
            }
            if edges.len() <= i {
                edges.resize(i + 1, [0, 0]);
            }
            edges[i] = targets;
        }
        frontier = next;
    }
    table.extend(edges.iter().map(|e| (e[0], e[1])));

    let mut generators: Vec<SL2Word> = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        for (g, &j) in [Generator::S, Generator::T].into_iter().zip(e.iter()) {
            let w = reps[j]
                .inverse()
                .then_apply(&SL2Word::new(vec![g]))
                .then_apply(&reps[i])
                .reduced();
            if w.is_empty() || generators.contains(&w) {
                continue;
            }
            generators.push(w);
        }
    }

    let t_perm = Permutation::from_images_unchecked(table.iter().map(|&(_, t)| t).collect());
    let cusp_widths = t_perm.cycles().iter().map(|c| c.len()).collect();

    VeechResult {
        index: orbit.len(),
        orbit,
        coset_table: table,
        reps,
        generators,
        cusp_widths,
    }
}

pub fn cusp_count(o: &Origami) -> usize {
    veech_group(o).cusp_widths.len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacteristicReport {
    pub pairs_checked: usize,
    pub epimorphism_count: usize,
    pub all_kernels_equal: bool,
}

/// Whether `{a, b}` generates the quaternion group: both of order 4 with `b ≠ ±a`.
pub fn generates_q(a: QuaternionElement, b: QuaternionElement) -> bool {
    a.order() == 4 && b.order() == 4 && b != a && b != -a
}

/// Whether `i ↦ a, j ↦ b` respects the relations `i⁴ = 1`, `i² = j²`, `j i j⁻¹ = i⁻¹`
/// and is onto.
pub fn extends_to_automorphism(a: QuaternionElement, b: QuaternionElement) -> bool {
    let one = QuaternionElement::ONE;
    let relations = a * a * a * a == one && a * a == b * b && b * a * b.inverse() == a.inverse();
    let mut reached = vec![one];
    let mut k = 0;
    while k < reached.len() {
        for g in [a, b] {
            let x = reached[k] * g;
            if !reached.contains(&x) {
                reached.push(x);
            }
        }
        k += 1;
    }
    relations && reached.len() == 8
}

/// The 8-square cover with monodromy `x ↦ a`, `y ↦ b`.
pub fn cover_from_epimorphism(a: QuaternionElement, b: QuaternionElement) -> Origami {
    let images = |u: QuaternionElement| -> Vec<usize> {
        QuaternionElement::SQUARE_ORDER
            .iter()
            .map(|&g| (g * u).square_index())
            .collect()
    };
    Origami::new_unchecked(
        Permutation::from_images_unchecked(images(a)),
        Permutation::from_images_unchecked(images(b)),
    )
}

/// Enumerates all surjections `F₂ → Q` and checks that each induces a cover isomorphic to W.
pub fn verify_characteristic_w() -> CharacteristicReport {
    let w = quaternion_origami();
    let mut count = 0;
    let mut all_equal = true;
    let mut checked = 0;
    for a in QuaternionElement::all() {
        for b in QuaternionElement::all() {
            checked += 1;
            if !generates_q(a, b) {
                continue;
            }
            count += 1;
            all_equal &= extends_to_automorphism(a, b) && cover_from_epimorphism(a, b).is_isomorphic(&w);
        }
    }
    CharacteristicReport {
        pairs_checked: checked,
        epimorphism_count: count,
        all_kernels_equal: all_equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::origami::torus_grid;
    use crate::quaternion::QuaternionElement as Q;

    fn w(s: &str) -> SL2Word {
        s.parse().unwrap()
    }

    fn l_origami() -> Origami {
        Origami::from_images(vec![1, 0, 2], vec![2, 1, 0]).unwrap()
    }

    #[test]
    fn word_parsing_and_matrices() {
        assert_eq!(w("S^4").matrix(), IDENTITY);
        assert_eq!(w("S^2").matrix(), [[-1, 0], [0, -1]]);
        assert_eq!(w("ST").pow(6).matrix(), IDENTITY);
        assert_eq!(w("T^-2").matrix(), [[1, -2], [0, 1]]);
        assert_eq!(w("S T^-1").to_string(), "S T^-1");
        assert_eq!(w("S T^-1 T S^-1").reduced(), SL2Word::identity());
        assert!("X".parse::<SL2Word>().is_err());
    }

    #[test]
    fn action_relations_on_w_and_l() {
        for o in [quaternion_origami(), l_origami()] {
            assert!(act(&w("S^4"), &o).is_isomorphic(&o));
            assert!(act(&w("ST").pow(6), &o).is_isomorphic(&o));
            assert!(act(&w("ST").pow(3), &o).is_isomorphic(&act(&w("S^2"), &o)));
            assert!(act(&w("S S^-1 T T^-1"), &o).is_isomorphic(&o));
            let g1 = w("T S T");
            let g2 = w("S^-1 T^2");
            assert!(act(&g1.then_apply(&g2), &o).is_isomorphic(&act(&g1, &act(&g2, &o))));
        }
    }

    #[test]
    fn w_is_fixed_by_s_and_t() {
        let q = quaternion_origami();
        assert!(act(&w("T"), &q).is_isomorphic(&q));
        assert!(act(&w("S"), &q).is_isomorphic(&q));
        let r = veech_group(&q);
        assert_eq!(r.index, 1);
        assert_eq!(r.cusp_widths, vec![1]);
        assert_eq!(cusp_count(&q), 1);
    }

    #[test]
    fn torus_grids_have_full_veech_group() {
        for n in 1..=4 {
            assert_eq!(veech_group(&torus_grid(n).unwrap()).index, 1);
        }
        assert!(act(&w("T"), &torus_grid(1).unwrap()).is_isomorphic(&torus_grid(1).unwrap()));
    }

    /// Independent orbit oracle: DFS over all four generators on raw (h, v) pairs,
    /// comparing with brute-force isomorphism over all relabelings.
    fn brute_orbit(o: &Origami) -> Vec<Origami> {
        fn all_perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in all_perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let relabels: Vec<Permutation> = all_perms(o.n_squares())
            .into_iter()
            .map(|p| Permutation::new(p).unwrap())
            .collect();
        let iso = |a: &Origami, b: &Origami| {
            relabels
                .iter()
                .any(|r| a.h().conjugate_by(r) == *b.h() && a.v().conjugate_by(r) == *b.v())
        };
        let mut orbit = vec![o.clone()];
        let mut k = 0;
        while k < orbit.len() {
            for g in [Generator::S, Generator::SInv, Generator::T, Generator::TInv] {
                let img = act(&SL2Word::new(vec![g]), &orbit[k]);
                if !orbit.iter().any(|x| iso(x, &img)) {
                    orbit.push(img);
                }
            }
            k += 1;
        }
        orbit
    }

    #[test]
    fn l_origami_orbit_matches_oracle() {
        let l = l_origami();
        let r = veech_group(&l);
        let oracle = brute_orbit(&l);
        assert_eq!(r.index, oracle.len());
        assert!(r.index > 1);
        assert_eq!(r.cusp_widths.iter().sum::<usize>(), r.index);
        // T-orbits recounted from the table
        let mut seen = vec![false; r.index];
        let mut cusps = 0;
        for i in 0..r.index {
            if !seen[i] {
                cusps += 1;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = r.coset_table[j].1;
                }
            }
        }
        assert_eq!(cusp_count(&l), cusps);
    }

    #[test]
    fn generators_stabilize_and_reps_reach_orbit() {
        let l = l_origami();
        let r = veech_group(&l);
        assert!(!r.generators.is_empty());
        for g in &r.generators {
            assert!(act(g, &l).is_isomorphic(&l), "{g} does not stabilize");
        }
        for (rep, member) in r.reps.iter().zip(&r.orbit) {
            assert!(act(rep, &l).is_isomorphic(member));
        }
    }

    #[test]
    fn characteristic_subgroup() {
        let rep = verify_characteristic_w();
        assert_eq!(rep.pairs_checked, 64);
        assert_eq!(rep.epimorphism_count, 24);
        assert!(rep.all_kernels_equal);
        assert!(!generates_q(Q::I, Q::MINUS_I));
        assert!(!extends_to_automorphism(Q::I, Q::MINUS_I));
        assert!(extends_to_automorphism(Q::J, Q::K));
        // oracle: count generating pairs by closing up the generated subgroup
        let mut generating = 0;
        for a in Q::all() {
            for b in Q::all() {
                let mut sub = vec![Q::ONE];
                loop {
                    let before = sub.len();
                    for x in sub.clone() {
                        for g in [a, b] {
                            if !sub.contains(&(x * g)) {
                                sub.push(x * g);
                            }
                        }
                    }
                    if sub.len() == before {
                        break;
                    }
                }
                if sub.len() == 8 {
                    generating += 1;
                    assert!(generates_q(a, b));
                }
            }
        }
        assert_eq!(generating, 24);
    }
}
