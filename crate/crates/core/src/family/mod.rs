//! Closed-form invariants for S³, connected sums of S¹ × S², lens spaces,
//! Brieskorn spheres and Seifert fibered homology spheres.

mod alpha;
mod invariants;
mod lens;
mod spec;

pub use alpha::{alpha_m_histogram, arrange_exponents, enumerate_alpha, enumerate_alpha_par, AlphaTuple, MAX_ALPHA_TUPLES};
pub use invariants::{
    hp_invariants, lambda_c_seifert, seifert_component_euler, Check, ComponentInfo, Components, Discrepancy,
    FamilyReport, GroupValue, LambdaValue, Refusal, SeifertSummand, SymbolicGroup,
};
pub use lens::{lens_components, LensComponents, Witness};
pub use spec::{FamilyError, FamilySpec, MAX_CONNSUM, MAX_LENS_ORDER};
