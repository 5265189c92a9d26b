//! Block subgroups `K_S`, branching to them, and their isotypic projections.

mod label;
mod project;
mod roots;

pub use label::SubgroupLabel;
pub use project::{
    all_projections, fixed_vectors, isotypic_projection, projection_sum, restrict_types, subgroup_generators,
    IsotypicProjection,
};
pub use roots::{blocks_of, named_subgroups, BlockStructure, RootSubset};
