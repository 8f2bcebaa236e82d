use serde::Serialize;

use super::grid::{delta1_representative, marked_quadruple, GridPoint};
use crate::error::{IntersectError, OrigamiError};
use crate::origami::Origami;

/// A ℤ/2 label on every unit edge of the `n × n` torus.
///
/// `vlabel[x][y]` sits on the vertical edge of line `x` spanning `[y, y+1]`,
/// `hlabel[x][y]` on the horizontal edge of line `y` spanning `[x, x+1]`.
/// A label 1 means the two leaves of the double cover are exchanged across that edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeLabeling {
    pub n: usize,
    pub vlabel: Vec<Vec<bool>>,
    pub hlabel: Vec<Vec<bool>>,
}

impl EdgeLabeling {
    pub fn zeros(n: usize) -> Self {
        EdgeLabeling {
            n,
            vlabel: vec![vec![false; n]; n],
            hlabel: vec![vec![false; n]; n],
        }
    }

    pub fn toggle_v(&mut self, x: usize, y: usize) {
        let n = self.n;
        self.vlabel[x % n][y % n] ^= true;
    }

    pub fn toggle_h(&mut self, x: usize, y: usize) {
        let n = self.n;
        self.hlabel[x % n][y % n] ^= true;
    }

    /// Toggles the horizontal edges of line `y` from `x0` rightwards to `x1`, wrapping around.
    pub fn toggle_h_run(&mut self, y: usize, x0: usize, x1: usize) {
        let n = self.n;
        let mut x = x0 % n;
        while x != x1 % n {
            self.toggle_h(x, y);
            x = (x + 1) % n;
        }
    }

    /// Toggles the vertical edges of line `x` from `y0` upwards to `y1`, wrapping around.
    pub fn toggle_v_run(&mut self, x: usize, y0: usize, y1: usize) {
        let n = self.n;
        let mut y = y0 % n;
        while y != y1 % n {
            self.toggle_v(x, y);
            y = (y + 1) % n;
        }
    }

    /// Adds a full horizontal line of labels; changes the holonomy along vertical loops.
    pub fn add_row_holonomy(&mut self) {
        for x in 0..self.n {
            self.toggle_h(x, 0);
        }
    }

    /// Adds a full vertical line of labels; changes the holonomy along horizontal loops.
    pub fn add_column_holonomy(&mut self) {
        for y in 0..self.n {
            self.toggle_v(0, y);
        }
    }

    /// Sum of the four labels at vertex `(x, y)`.
    pub fn vertex_parity(&self, x: usize, y: usize) -> bool {
        let n = self.n;
        let (xl, yd) = ((x + n - 1) % n, (y + n - 1) % n);
        self.vlabel[x][y] ^ self.vlabel[x][yd] ^ self.hlabel[x][y] ^ self.hlabel[xl][y]
    }
}

/// Square index of `(x, y)` on leaf `leaf` in [`cover_from_labeling`].
pub fn cover_square(n: usize, x: usize, y: usize, leaf: usize) -> usize {
    (y * n + x) * 2 + leaf
}

/// Grid square underneath a square of the cover.
pub fn base_square(n: usize, s: usize) -> (usize, usize) {
    let q = s / 2;
    (q % n, q / n)
}

/// The double cover of the `n × n` torus described by `l`, with `2n²` squares.
pub fn cover_from_labeling(l: &EdgeLabeling) -> Result<Origami, IntersectError> {
    let n = l.n;
    let mut h = vec![0; 2 * n * n];
    let mut v = vec![0; 2 * n * n];
    for y in 0..n {
        for x in 0..n {
            for leaf in 0..2 {
                let (xr, yu) = ((x + 1) % n, (y + 1) % n);
                let s = cover_square(n, x, y, leaf);
                h[s] = cover_square(n, xr, y, leaf ^ l.vlabel[xr][y] as usize);
                v[s] = cover_square(n, x, yu, leaf ^ l.hlabel[x][yu] as usize);
            }
        }
    }
    match Origami::from_images(h, v) {
        Ok(o) => Ok(o),
        Err(OrigamiError::NotConnected) => Err(IntersectError::Disconnected),
        Err(e) => Err(e.into()),
    }
}

/// Vertices with odd label sum: the branch points of the cover.
pub fn branch_set(l: &EdgeLabeling) -> Vec<GridPoint> {
    let n = l.n;
    let mut out: Vec<GridPoint> = (0..n)
        .flat_map(|y| (0..n).map(move |x| (x, y)))
        .filter(|&(x, y)| l.vertex_parity(x, y))
        .map(|(a, b)| GridPoint { a, b, n })
        .collect();
    out.sort();
    out
}

/// Two L-shaped paths, `P → Q` and `R → S`, each horizontal then vertical.
pub fn base_labeling(p: GridPoint) -> Result<EdgeLabeling, IntersectError> {
    let m = marked_quadruple(p)?;
    let mut l = EdgeLabeling::zeros(p.n);
    for (from, to) in [(m.p, m.q), (m.r, m.s)] {
        l.toggle_h_run(from.b, from.a, to.a);
        l.toggle_v_run(to.a, from.b, to.b);
    }
    Ok(l)
}

/// The labeling of the explicit Case-1 construction, built for the rotate of `p` in
/// `0 < b < a < n/2`. With `A = (b,b)`, `B = (n−b,b)`, `C = (n−b,n−b)` the leaves switch on
/// the segments `PB`, `BA` (wrapping), `QC`, `RC` and `SA` (wrapping).
pub fn case1_labeling(p: GridPoint) -> Result<EdgeLabeling, IntersectError> {
    let q = delta1_representative(p)?;
    let (a, b, n) = (q.a, q.b, q.n);
    let mut l = EdgeLabeling::zeros(n);
    l.toggle_h_run(b, a, n - b);
    l.toggle_h_run(b, n - b, b);
    l.toggle_v_run(n - b, a, n - b);
    l.toggle_h_run(n - b, n - a, n - b);
    l.toggle_v_run(b, n - a, b);
    Ok(l)
}
