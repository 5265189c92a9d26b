//! Exact representation theory of SU(n) in the Gelfand–Tsetlin basis.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: rational scalars, sparse matrices and Gram-weighted linear
//!   algebra (kernels, orthogonal projections, norm brackets).
//! * [`gt`]: Gelfand–Tsetlin patterns, their squared norms and weights.
//! * [`rep`]: generator matrices of `gl(n)` on an irreducible module, relation
//!   checks, tensor product decomposition.
//! * [`subgroups`]: block subgroups `K_S`, branching, isotypic projections and
//!   fixed vectors.
//! * [`ortho`]: fixed-vector coefficients, inner-product closed forms,
//!   combinatorial identities and decay experiments for products of
//!   isotypic projections.
//! * [`verify`]: the acceptance suite, shared by the CLI and the test target.
//!
//! All arithmetic is exact; floating point only appears in power-iteration
//! estimates.

pub mod error;
pub mod exec;
pub mod gt;
pub mod linalg;
pub mod ortho;
pub mod rep;
pub mod subgroups;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
pub use gt::{GtPattern, HighestWeight, PatternShift, WeightVector, ZeroWeightTuple};
pub use linalg::{GramForm, NormBracket, Rational, SparseMatrix};
pub use rep::{GeneratorMatrix, Irrep};
pub use subgroups::{BlockStructure, IsotypicProjection, RootSubset, SubgroupLabel};


