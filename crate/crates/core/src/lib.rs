//! Two realizations of one abstract state-space algebra.
//!
//! A state space supports four operations ([`StateSpace`]): *magnitude*,
//! the size of a state; *resize*, scaling that size; *group*, forming the
//! state of two systems; and *combine*, modifying one state by another in
//! the same space.
//!
//! - [`classical`]: states that can be reduced into arbitrarily small parts.
//!   They are nonnegative densities over phase space, grouping and
//!   combining coincide, and the magnitude adds.
//! - [`quantum`]: irreducible states. They are complex amplitude vectors in
//!   one parametrization at a time, grouping is the tensor product, and
//!   combining adds amplitudes so magnitudes interfere
//!   ([`combined_magnitude`]).
//!
//! [`scenario`] runs small experiments contrasting the two and [`report`]
//! writes their results as CSV.

pub mod algebra;
pub mod classical;
mod error;
pub mod quantum;
pub mod report;
pub mod scenario;

pub use algebra::{
    angle_to_corr, combined_magnitude, combined_magnitude_factored, corr_to_angle,
    factored_product, Correlation, CorrelationAngle, Magnitude, StateSpace,
};
pub use classical::{ClassicalState, PhaseSpaceGrid};
pub use error::{Error, Result};
pub use quantum::{gaussian_wavepacket, Basis, CompositeState, PositionGrid, QuantumState};
pub use report::{emit_csv, format_real, ScenarioReport};
pub use scenario::{run_scenario, ScenarioConfig, ScenarioKind};
