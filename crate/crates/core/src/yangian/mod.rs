//! Explicit Yangian modules and the identities they must satisfy.

mod action;
mod checks;
mod embed;
mod osp;
mod spec;

pub use action::{module_action, module_action_series, sum_matrices, vector_action, ActionAsSeries, ActionAtPoint};
pub use checks::{
    auxiliary_operator, check_central_series, check_consistency, check_defining_relations, consistency_shift,
    eigenvalue, extract_highest_weight, kron_identity, matrix_sign, rtt_mismatch, weight_at_point, ExtractedWeight,
};
pub use embed::{check_reduced_relations, embed_reduce, reduced_context, ReducedAction};
pub use osp::{osp_generators, osp_level_one};
pub use spec::{highest_vector, ModuleKind, ModuleSpec};
