//! Exact scalars, factored series, truncated series and sparse matrices.

mod matrix;
mod multiset;
mod rational;
mod series;

pub use matrix::{compress, SparseMatrix, SparseVec};
pub use multiset::{roots, RootMultiset};
pub use rational::{q, Rational};
pub use series::{evaluate_factored, series_from_roots, series_invert, TruncatedSeries};
