//! Fault-tolerant cost comparison of qudit and qubit implementations of the
//! onsite field evolution `exp(-i t phi_x^2)`.
//!
//! The crate builds the product-formula and block-encoding decompositions
//! for both encodings, checks each one against a dense small-dimension
//! oracle, and prices them under logarithmic synthesis models. Encodings are
//! [`strategy`] trait objects selected by name.

pub mod costmodel;
pub mod endtoend;
pub mod error;
pub mod grid;
pub mod lcu;
pub mod pauli;
pub mod scan;
pub mod schedule;
pub mod simverify;
pub mod strategy;
pub mod trotter;
pub mod verify;

pub use costmodel::{pf_thresholds, rz_cost, PfThresholds, SynthesisModel};
pub use endtoend::{
    lcu_fixed_encoding_thresholds, query_count, ratio_and_budget, total_cost_qubit,
    total_cost_qudit_hybrid, EncodingTotals, LcuThresholds, QueryModel, ResourceReport,
};
pub use error::{Error, Result};
pub use grid::{make_grid, FieldGrid};
pub use pauli::{beta_closed_form, beta_dft_oracle, PauliExpansion};
pub use schedule::{Axis, EmbeddedRotation, RotationSchedule};
