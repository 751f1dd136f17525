use std::sync::Arc;

use super::registry::{Named, Registry};
use crate::costmodel::SynthesisModel;
use crate::error::{check_unit_interval, Result};
use crate::grid::qubit_width;
use crate::trotter::{qubit_rotation_count, qudit_rotation_count};

/// One product-formula step of `exp(-i t phi_x^2)` with its error budget
/// split uniformly over the synthesized rotations.
pub trait ProductFormulaScheme: Named + Send + Sync {
    fn rotations_per_step(&self, d: usize) -> usize;

    fn primitive_cost(&self, delta: f64, model: &SynthesisModel) -> Result<f64>;

    fn step_cost(&self, d: usize, eps: f64, model: &SynthesisModel) -> Result<f64> {
        check_unit_interval("eps", eps)?;
        let l = self.rotations_per_step(d) as f64;
        Ok(l * self.primitive_cost(eps / l, model)?)
    }
}

/// `Z` and `ZZ` rotations on the binary register.
#[derive(Debug, Default, Clone, Copy)]
pub struct QubitBinaryTrotter;

impl Named for QubitBinaryTrotter {
    fn name(&self) -> &'static str {
        "qubit-binary"
    }

    fn description(&self) -> &'static str {
        "n_b (n_b + 1) / 2 synthesized R_z per step"
    }
}

impl ProductFormulaScheme for QubitBinaryTrotter {
    fn rotations_per_step(&self, d: usize) -> usize {
        qubit_rotation_count(qubit_width(d))
    }

    fn primitive_cost(&self, delta: f64, model: &SynthesisModel) -> Result<f64> {
        model.rz_cost(delta)
    }
}

/// Adjacent embedded `R_Z` chain on one qudit.
#[derive(Debug, Default, Clone, Copy)]
pub struct QuditGivensTrotter;

impl Named for QuditGivensTrotter {
    fn name(&self) -> &'static str {
        "qudit-givens"
    }

    fn description(&self) -> &'static str {
        "d - 1 adjacent embedded R_Z rotations per step at prefactor a"
    }
}

impl ProductFormulaScheme for QuditGivensTrotter {
    fn rotations_per_step(&self, d: usize) -> usize {
        qudit_rotation_count(d)
    }

    fn primitive_cost(&self, delta: f64, model: &SynthesisModel) -> Result<f64> {
        model.qudit_rotation_cost(delta)
    }
}

pub fn product_formula_registry() -> Registry<dyn ProductFormulaScheme> {
    let mut reg: Registry<dyn ProductFormulaScheme> = Registry::new("product-formula scheme");
    reg.register(Arc::new(QubitBinaryTrotter))
        .register(Arc::new(QuditGivensTrotter));
    reg
}
