//! Generator matrices of `gl(n)` acting on an irreducible module.

mod check;
mod generators;
mod irrep;
mod tensor;

pub use check::{adjointness_failure, check_adjointness, check_relations, check_rep, raise_preserves_grading, RepCheckReport};
pub use generators::{matrix_ekk, matrix_epq, matrix_lower, matrix_raise, GeneratorMatrix, Generators};
pub use irrep::Irrep;
pub use tensor::{dimension, highest_weights_up_to_dim, peel_characters, tensor_decompose, weight_multiset, WeightMultiset};
