//! Public-API checks: custom strategies plug into the end-to-end engine.

use std::sync::Arc;

use qudit_cost::endtoend::{compare, ratio_and_budget, total_cost};
use qudit_cost::strategy::{block_encoding_registry, BlockEncodingScheme, Named, QubitProjectorLcu};
use qudit_cost::{make_grid, FieldGrid, Result, SynthesisModel};

/// A scheme that costs exactly twice the qubit baseline per call.
struct DoubledBaseline;

impl Named for DoubledBaseline {
    fn name(&self) -> &'static str {
        "doubled"
    }
}

impl BlockEncodingScheme for DoubledBaseline {
    fn normalization(&self, grid: &FieldGrid) -> Result<f64> {
        QubitProjectorLcu.normalization(grid)
    }

    fn per_call_cost(&self, grid: &FieldGrid, eps_be: f64, model: &SynthesisModel) -> Result<f64> {
        Ok(2.0 * QubitProjectorLcu.per_call_cost(grid, eps_be, model)?)
    }
}

#[test]
fn registered_scheme_is_usable_by_name() {
    let mut reg = block_encoding_registry();
    reg.register(Arc::new(DoubledBaseline));
    let baseline = reg.get("qubit-projector").unwrap();
    let candidate = reg.get("doubled").unwrap();
    let grid = make_grid(1.0, 11).unwrap();
    let r = compare(baseline.as_ref(), candidate.as_ref(), &grid, 1.0, 1e-6, 2, &SynthesisModel::default()).unwrap();
    assert!((r.ratio - 0.5).abs() < 1e-15);
    assert!(r.budget_per_switch < 0.0);
}

#[test]
fn builtin_names_resolve_to_reference_totals() {
    let reg = block_encoding_registry();
    let grid = make_grid(1.0, 5).unwrap();
    let model = SynthesisModel::default();
    let qb = total_cost(reg.get("qubit-projector").unwrap().as_ref(), &grid, 3000.0, 1e-6, &model).unwrap();
    let qd = total_cost(reg.get("qudit-hybrid").unwrap().as_ref(), &grid, 3000.0, 1e-6, &model).unwrap();
    let reference = ratio_and_budget(&grid, 3000.0, 1e-6, 2).unwrap();
    assert_eq!(qb.t_tot, reference.t_tot_qb);
    assert_eq!(qd.t_tot, reference.t_tot_qd);
    assert_eq!(qb.per_call, 596.0);
}

#[test]
fn unknown_name_is_reported() {
    let err = block_encoding_registry().get("qutrit-magic").err().unwrap();
    assert_eq!(err.to_string(), "unknown block-encoding scheme 'qutrit-magic'");
}
