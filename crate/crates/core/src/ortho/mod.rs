//! Fixed vectors of the base case, the closed forms around them, and decay
//! of products of isotypic projections.

mod decay;
mod eta;
mod identities;
mod support;

pub use decay::{decay_experiment, projection_product, write_decay_csv, DecayRow, ProjectionProduct, DECAY_CSV_HEADER};
pub use eta::{
    c_normalizer, claim_direct, claim_value_sq, closed_form_ratio, closed_form_scale, eta_closed_form,
    eta_coefficients, eta_direct, eta_direct_in, xim_norm_sq, FixedVectorCoeffs,
};
pub use identities::{comb_identity_check, comb_identity_json, identity1_check, identity1_json, IdentityCheck};
pub use support::{block_support, BlockSupport};
