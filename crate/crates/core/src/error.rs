use thiserror::Error;

/// Errors raised while building or reading origamis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrigamiError {
    #[error("images do not form a bijection of 0..{0}")]
    NotBijection(usize),
    #[error("permutations act on different sets ({h} vs {v} squares)")]
    LengthMismatch { h: usize, v: usize },
    #[error("the squares do not form a connected surface")]
    NotConnected,
    #[error("an origami needs at least one square")]
    Empty,
    #[error("malformed origami description: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutoError {
    #[error("square permutation does not satisfy the relations of derivative {0}")]
    RelationViolated(String),
    #[error("the given automorphisms are not closed under composition")]
    NotClosed,
    #[error("the given translations do not form a subgroup")]
    NotSubgroup,
    #[error("the subgroup does not act freely on squares")]
    NotFreeOnSquares,
    #[error(transparent)]
    Origami(#[from] OrigamiError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EllipticError {
    #[error("point is not on y^2 = x^3 - x (residual {0:e})")]
    OffCurve(f64),
    #[error("2-torsion points (and the origin) have no intersection parameter")]
    TwoTorsionInput,
    #[error("root finding did not converge (residual {0:e})")]
    RootFindingDiverged(f64),
    #[error("lattice sum did not reach the requested accuracy (bound {0:e})")]
    ConvergenceBudgetExceeded(f64),
    #[error("torsion order {0} outside the supported range 2..={1}")]
    OrderOutOfRange(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error("lambda must avoid 0, 1 and infinity")]
    DegenerateLambda,
    #[error("point is not on the expected curve (residual {0:e})")]
    OffCurve(f64),
    #[error("{0} is not one of the six involutions")]
    NotAnInvolution(String),
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IntersectError {
    #[error("grid point is 2-torsion")]
    TwoTorsionInput,
    #[error("grid point ({a}, {b}) is outside the {n}x{n} grid")]
    OutOfGrid { a: i64, b: i64, n: usize },
    #[error("labeling produces a disconnected cover")]
    Disconnected,
    #[error("point is not in case 1 (got {0})")]
    WrongCase(String),
    #[error("{0} holonomy classes satisfy the lifting conditions, expected exactly one")]
    UniquenessViolated(usize),
    #[error(transparent)]
    Origami(#[from] OrigamiError),
    #[error(transparent)]
    Auto(#[from] AutoError),
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// Umbrella error for callers that cross module boundaries (the CLI).
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Origami(#[from] OrigamiError),
    #[error(transparent)]
    Auto(#[from] AutoError),
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Intersect(#[from] IntersectError),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
