//! Exact computations for the extended orthosymplectic Yangian
//! `X(osp_{2n+1|2m})`: the R-matrix, explicit modules, and the
//! finite-dimensionality classification of highest weights.

pub mod classify;
pub mod error;
pub mod exact;
pub mod report;
pub mod sampling;
pub mod super_space;
pub mod yangian;

pub use error::{Error, Result};
