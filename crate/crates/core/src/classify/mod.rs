//! Finite-dimensionality classification of highest weights.

mod drinfeld;
mod hook;
mod linear;
mod n1;
mod necessary;
mod pipeline;
mod reflection;
mod split;
mod weight;

pub use drinfeld::{solve_drinfeld_ratio, DrinfeldPolynomial, RatioOutcome, RatioWitness};
pub use hook::{hook_reflection_consistency, hook_tuples, HookPartition, HookReport};
pub use linear::{check_linear, normalize_linear, tensor_weight, LinearBranch, LinearVerdict};
pub use n1::{gcd_reduce_n1, n1_certificate, CertificateMethod, GcdReduction, N1Certificate};
pub use necessary::{check_necessary, ConditionKind, ConditionResult, NecessaryReport};
pub use pipeline::{classify, is_generic, ClassificationReport, Reason, Verdict};
pub use reflection::{
    inverse_odd_reflection, iterated_reflection_series, odd_reflection, standard_chain, to_standard,
    transport_chain, transport_parity, transport_path, transport_with_trace, ReflectionStep,
};
pub use split::{linear_column_verdict, split_search, SplitReport, Splitting, SPLIT_GUARD};
pub use weight::{HighestWeight, LinearWeight};
