use std::sync::Arc;

use super::registry::{Named, Registry};
use crate::costmodel::SynthesisModel;
use crate::error::Result;
use crate::grid::FieldGrid;
use crate::lcu::{
    fixed_encoding_call_rotations, qubit_blockencoding_cost, qubit_lcu_normalization,
    qudit_hybrid_call_cost,
};
use crate::pauli::beta_closed_form;

/// One block-encoding route for `phi_x^2`.
pub trait BlockEncodingScheme: Named + Send + Sync {
    /// LCU 1-norm entering the query count.
    fn normalization(&self, grid: &FieldGrid) -> Result<f64>;

    /// Non-Clifford cost of one call synthesized to total error `eps_be`.
    fn per_call_cost(&self, grid: &FieldGrid, eps_be: f64, model: &SynthesisModel) -> Result<f64>;
}

/// Signed-binary projector LCU on `n_b` qubits.
#[derive(Debug, Default, Clone, Copy)]
pub struct QubitProjectorLcu;

impl Named for QubitProjectorLcu {
    fn name(&self) -> &'static str {
        "qubit-projector"
    }

    fn description(&self) -> &'static str {
        "qubit signed-binary projector LCU, T = 32 b_r + 24 n_b - 116"
    }
}

impl BlockEncodingScheme for QubitProjectorLcu {
    fn normalization(&self, grid: &FieldGrid) -> Result<f64> {
        Ok(qubit_lcu_normalization(grid))
    }

    fn per_call_cost(&self, grid: &FieldGrid, eps_be: f64, _model: &SynthesisModel) -> Result<f64> {
        Ok(qubit_blockencoding_cost(grid, eps_be)?.t_count_per_call as f64)
    }
}

/// Generalized-Pauli LCU with binary PREP and code-switched SELECT.
#[derive(Debug, Default, Clone, Copy)]
pub struct QuditHybridLcu;

impl Named for QuditHybridLcu {
    fn name(&self) -> &'static str {
        "qudit-hybrid"
    }

    fn description(&self) -> &'static str {
        "qudit Z_d LCU with binary PREP, synthesized R_z and a 4 n_b comparator"
    }
}

impl BlockEncodingScheme for QuditHybridLcu {
    fn normalization(&self, grid: &FieldGrid) -> Result<f64> {
        Ok(beta_closed_form(grid)?.lambda_norm())
    }

    fn per_call_cost(&self, grid: &FieldGrid, eps_be: f64, model: &SynthesisModel) -> Result<f64> {
        let cost = qudit_hybrid_call_cost(grid.dim())?;
        let l = cost.rz_rotations_per_call as f64;
        Ok(l * model.rz_cost(eps_be / l)? + cost.t_gates as f64)
    }
}

/// Fully qudit LCU from `3d - 3` embedded two-level rotations, each
/// costing `a log2(1/delta)` with `a` from the synthesis model.
#[derive(Debug, Default, Clone, Copy)]
pub struct QuditFixedLcu;

impl Named for QuditFixedLcu {
    fn name(&self) -> &'static str {
        "qudit-fixed"
    }

    fn description(&self) -> &'static str {
        "fixed-encoding qudit LCU, 3d - 3 embedded rotations at prefactor a"
    }
}

impl BlockEncodingScheme for QuditFixedLcu {
    fn normalization(&self, grid: &FieldGrid) -> Result<f64> {
        Ok(beta_closed_form(grid)?.lambda_norm())
    }

    fn per_call_cost(&self, grid: &FieldGrid, eps_be: f64, model: &SynthesisModel) -> Result<f64> {
        let l = fixed_encoding_call_rotations(grid.dim()) as f64;
        Ok(l * model.qudit_rotation_cost(eps_be / l)?)
    }
}

pub fn block_encoding_registry() -> Registry<dyn BlockEncodingScheme> {
    let mut reg: Registry<dyn BlockEncodingScheme> = Registry::new("block-encoding scheme");
    reg.register(Arc::new(QubitProjectorLcu))
        .register(Arc::new(QuditHybridLcu))
        .register(Arc::new(QuditFixedLcu));
    reg
}
