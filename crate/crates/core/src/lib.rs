//! Square-tiled surfaces and the quaternion origami W.

pub mod autos;
pub mod cli;
pub mod curves;
pub mod elliptic;
pub mod error;
pub mod format;
pub mod intersect;
pub mod origami;
pub mod perm;
pub mod quaternion;
pub mod veech;

pub use error::{Error, OrigamiError};
pub use origami::{quaternion_origami, torus_grid, Origami};
pub use perm::Permutation;
pub use quaternion::QuaternionElement;
