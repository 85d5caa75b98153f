//! Preference systems, stable matchings, and the integral PMAS-es they generate.

mod bijection;
mod enumerate;
mod preference;
mod stable;

pub use bijection::{preferences_from_scheme, scheme_from_preferences, StableMatchingRule};
pub use enumerate::{
    count_integral_pmas, enumerate_integral_pmas, IntegralPmas, IntegralPmasStream,
    DEFAULT_ENUMERATION_CAP,
};
pub use preference::PreferenceSystem;
pub use stable::{gale_shapley, is_stable, StabilityViolation};
