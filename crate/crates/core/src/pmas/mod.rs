//! Recognition, construction and verification of population monotonic
//! allocation schemes, plus the dual description of their coalition vectors.

mod classify;
mod dual;
mod scheme;
mod verify;

pub use classify::{
    classify_components, lambda, recognize_population_monotonic, Classification,
    ComponentClassification, ComponentKind, CoverSystem,
};
pub use dual::{check_dual_feasible, check_dual_optimal, check_pi_star};
pub use scheme::{construct_pmas, AllocationScheme, EqualSplitRule, SchemeRule};
pub use verify::{pmas_violations, verify_pmas, verify_pmas_with_cap, PmasViolation};
