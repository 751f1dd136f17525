//! Query-count model and end-to-end non-Clifford totals.
//!
//! Each encoding needs `Q = alpha t + log2(1/eps_sim)` block-encoding calls.
//! Each call is synthesized to `eps_be = eps_sim / Q` so the accumulated error
//! stays within `eps_sim`, and the total is `Q` times the per-call cost at
//! that budget.

use serde::Serialize;

use crate::costmodel::{is_favorable, SynthesisModel};
use crate::error::{check_unit_interval, Error, Result};
use crate::grid::FieldGrid;
use crate::lcu::fixed_encoding_call_rotations;
use crate::strategy::{BlockEncodingScheme, QubitProjectorLcu, QuditFixedLcu, QuditHybridLcu};

/// Directional code switches per query in the hybrid construction.
pub const DEFAULT_SWITCHES: u32 = 2;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub enum QueryModel {
    /// `alpha t + log2(1/eps_sim)` as a real number.
    #[default]
    Continuous,
    /// The continuous proxy rounded up to a whole number of calls.
    Ceiling,
}

impl QueryModel {
    pub fn count(self, alpha: f64, t: f64, eps_sim: f64) -> Result<f64> {
        let q = query_count(alpha, t, eps_sim)?;
        Ok(match self {
            QueryModel::Continuous => q,
            QueryModel::Ceiling => q.ceil(),
        })
    }
}

pub fn query_count(alpha: f64, t: f64, eps_sim: f64) -> Result<f64> {
    check_unit_interval("eps_sim", eps_sim)?;
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(Error::Domain(format!("alpha must be nonnegative, got {alpha}")));
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("t must be nonnegative, got {t}")));
    }
    Ok(alpha * t + (1.0 / eps_sim).log2())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EncodingTotals {
    pub alpha: f64,
    pub q: f64,
    pub eps_be: f64,
    pub per_call: f64,
    pub t_tot: f64,
}

pub fn total_cost_with(
    scheme: &dyn BlockEncodingScheme,
    grid: &FieldGrid,
    t: f64,
    eps_sim: f64,
    model: &SynthesisModel,
    queries: QueryModel,
) -> Result<EncodingTotals> {
    let alpha = scheme.normalization(grid)?;
    let q = queries.count(alpha, t, eps_sim)?;
    let eps_be = eps_sim / q;
    let per_call = scheme.per_call_cost(grid, eps_be, model)?;
    Ok(EncodingTotals {
        alpha,
        q,
        eps_be,
        per_call,
        t_tot: q * per_call,
    })
}

pub fn total_cost(
    scheme: &dyn BlockEncodingScheme,
    grid: &FieldGrid,
    t: f64,
    eps_sim: f64,
    model: &SynthesisModel,
) -> Result<EncodingTotals> {
    total_cost_with(scheme, grid, t, eps_sim, model, QueryModel::Continuous)
}

pub fn total_cost_qubit(grid: &FieldGrid, t: f64, eps_sim: f64) -> Result<EncodingTotals> {
    total_cost(&QubitProjectorLcu, grid, t, eps_sim, &SynthesisModel::default())
}

pub fn total_cost_qudit_hybrid(grid: &FieldGrid, t: f64, eps_sim: f64) -> Result<EncodingTotals> {
    total_cost(&QuditHybridLcu, grid, t, eps_sim, &SynthesisModel::default())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResourceReport {
    pub d: usize,
    pub n_b: u32,
    pub t: f64,
    pub eps_sim: f64,
    pub k: u32,
    pub alpha_qb: f64,
    pub alpha_qd: f64,
    pub q_qb: f64,
    pub q_qd: f64,
    pub eps_be_qb: f64,
    pub eps_be_qd: f64,
    pub per_call_qb: f64,
    pub per_call_qd: f64,
    pub t_tot_qb: f64,
    pub t_tot_qd: f64,
    /// `T_tot^qb / T_tot^qd`; above one the qudit route is cheaper.
    pub ratio: f64,
    pub delta_tot: f64,
    /// Largest per-switch cost that keeps the qudit route ahead.
    pub budget_per_switch: f64,
}

/// Compares a baseline against a candidate encoding at `k` switches per query.
pub fn compare(
    baseline: &dyn BlockEncodingScheme,
    candidate: &dyn BlockEncodingScheme,
    grid: &FieldGrid,
    t: f64,
    eps_sim: f64,
    k: u32,
    model: &SynthesisModel,
) -> Result<ResourceReport> {
    if k == 0 {
        return Err(Error::Domain("at least one code switch per query is required".into()));
    }
    let qb = total_cost(baseline, grid, t, eps_sim, model)?;
    let qd = total_cost(candidate, grid, t, eps_sim, model)?;
    let delta_tot = qb.t_tot - qd.t_tot;
    Ok(ResourceReport {
        d: grid.dim(),
        n_b: grid.n_b(),
        t,
        eps_sim,
        k,
        alpha_qb: qb.alpha,
        alpha_qd: qd.alpha,
        q_qb: qb.q,
        q_qd: qd.q,
        eps_be_qb: qb.eps_be,
        eps_be_qd: qd.eps_be,
        per_call_qb: qb.per_call,
        per_call_qd: qd.per_call,
        t_tot_qb: qb.t_tot,
        t_tot_qd: qd.t_tot,
        ratio: qb.t_tot / qd.t_tot,
        delta_tot,
        budget_per_switch: delta_tot / (qd.q * k as f64),
    })
}

/// Qubit projector LCU against the hybrid qudit construction.
pub fn ratio_and_budget(grid: &FieldGrid, t: f64, eps_sim: f64, k: u32) -> Result<ResourceReport> {
    compare(
        &QubitProjectorLcu,
        &QuditHybridLcu,
        grid,
        t,
        eps_sim,
        k,
        &SynthesisModel::default(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LcuThresholds {
    pub d: usize,
    /// Rotations per call, `3d - 3`.
    pub rotations_per_call: usize,
    pub q_qd: f64,
    pub eps_be_qd: f64,
    pub t_tot_qb: f64,
    pub a_max: f64,
    pub a_rz: f64,
}

impl LcuThresholds {
    pub fn favorable(&self) -> bool {
        is_favorable(self.a_max, self.a_rz)
    }
}

pub fn lcu_fixed_encoding_thresholds_with(
    grid: &FieldGrid,
    t: f64,
    eps_sim: f64,
    model: &SynthesisModel,
) -> Result<LcuThresholds> {
    let qubit = total_cost(&QubitProjectorLcu, grid, t, eps_sim, model)?;
    let alpha_qd = QuditFixedLcu.normalization(grid)?;
    let q_qd = query_count(alpha_qd, t, eps_sim)?;
    let eps_be_qd = eps_sim / q_qd;
    let l = fixed_encoding_call_rotations(grid.dim());
    let log_term = (l as f64 / eps_be_qd).log2();
    Ok(LcuThresholds {
        d: grid.dim(),
        rotations_per_call: l,
        q_qd,
        eps_be_qd,
        t_tot_qb: qubit.t_tot,
        a_max: qubit.t_tot / (q_qd * l as f64 * log_term),
        a_rz: model.rz_equivalent_prefactor(log_term),
    })
}

pub fn lcu_fixed_encoding_thresholds(grid: &FieldGrid, t: f64, eps_sim: f64) -> Result<LcuThresholds> {
    lcu_fixed_encoding_thresholds_with(grid, t, eps_sim, &SynthesisModel::default())
}
