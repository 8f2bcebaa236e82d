//! Double covers of the `n × n` torus branched over a rotation orbit of four lattice points.

mod construct;
mod grid;
mod labeling;

pub use construct::{
    construct_d, leaf_swap, pipeline, rotation_lift, sweep, CandidateReport, Certificate, CertificateChecks,
    DConstruction, HolonomyClass, SweepEntry,
};
pub use grid::{classify_case, delta1_representative, marked_quadruple, valid_points, CaseKind, GridPoint, MarkedQuadruple};
pub use labeling::{
    base_labeling, base_square, branch_set, case1_labeling, cover_from_labeling, cover_square, EdgeLabeling,
};
