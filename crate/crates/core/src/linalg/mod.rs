//! Exact rational linear algebra.
//!
//! Every matrix is a [`SparseMatrix`] over [`Rational`]. Inner products are
//! taken against a diagonal [`GramForm`], which is how the Gelfand–Tsetlin
//! basis (orthogonal but not orthonormal) enters: adjoints, projections and
//! norms are all Gram-weighted.

mod gram;
mod kernel;
mod norm;
mod rational;
mod sparse;

pub use gram::{gram_projection, gram_projection_sparse, GramForm};
pub use kernel::{kernel_basis, rank, EchelonBasis};
pub use norm::{norm_bracket, NormBracket};
pub use rational::{
    binomial, factorial, int, parse_rational, ratio, rational_json, rational_to_f64,
    FactorialTable, Rational,
};
pub use sparse::{SparseMatrix, SparseVector};
