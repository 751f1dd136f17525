//! Logarithmic synthesis cost models and the product-formula break-even.

use serde::{Deserialize, Serialize};

use crate::error::{check_unit_interval, Error, Result};
use crate::grid::qubit_width;
use crate::lcu::check_odd_dim;
use crate::trotter::{qubit_rotation_count, qudit_rotation_count};

pub const RZ_SLOPE: f64 = 0.57;
pub const RZ_INTERCEPT: f64 = 8.83;

/// Relative margin for `a_max > a_rz`. Several dimensions have
/// `L_qb = L_qd`, where the two prefactors coincide exactly and only
/// round-off could separate them.
pub const FAVORABLE_MARGIN: f64 = 1e-12;

pub fn is_favorable(a_max: f64, a_rz: f64) -> bool {
    a_max > a_rz * (1.0 + FAVORABLE_MARGIN)
}

/// Non-Clifford cost of synthesizing one rotation to precision `delta`:
/// `rz_slope log2(1/delta) + rz_intercept` for qubit `R_z`, and
/// `qudit_prefactor log2(1/delta)` for an embedded two-level qudit rotation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SynthesisModel {
    pub rz_slope: f64,
    pub rz_intercept: f64,
    pub qudit_prefactor: f64,
}

impl Default for SynthesisModel {
    fn default() -> Self {
        Self {
            rz_slope: RZ_SLOPE,
            rz_intercept: RZ_INTERCEPT,
            qudit_prefactor: 1.0,
        }
    }
}

impl SynthesisModel {
    pub fn with_prefactor(a: f64) -> Result<Self> {
        Self {
            qudit_prefactor: a,
            ..Self::default()
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        if !(self.qudit_prefactor.is_finite() && self.qudit_prefactor > 0.0) {
            return Err(Error::Domain(format!(
                "qudit prefactor must be positive, got {}",
                self.qudit_prefactor
            )));
        }
        if !(self.rz_slope.is_finite() && self.rz_slope > 0.0 && self.rz_intercept.is_finite()) {
            return Err(Error::Domain(format!(
                "invalid R_z model {} log2(1/delta) + {}",
                self.rz_slope, self.rz_intercept
            )));
        }
        Ok(self)
    }

    pub fn rz_cost(&self, delta: f64) -> Result<f64> {
        check_unit_interval("delta", delta)?;
        Ok(self.rz_slope * (1.0 / delta).log2() + self.rz_intercept)
    }

    pub fn qudit_rotation_cost(&self, delta: f64) -> Result<f64> {
        check_unit_interval("delta", delta)?;
        Ok(self.qudit_prefactor * (1.0 / delta).log2())
    }

    /// Prefactor `a` that makes `a log2(x)` equal the `R_z` cost at `log2(1/delta) = x`.
    pub fn rz_equivalent_prefactor(&self, log2_inv_delta: f64) -> f64 {
        (self.rz_slope * log2_inv_delta + self.rz_intercept) / log2_inv_delta
    }

    pub fn pf_thresholds(&self, d: usize, eps: f64) -> Result<PfThresholds> {
        check_odd_dim(d)?;
        check_unit_interval("eps", eps)?;
        let n_b = qubit_width(d);
        let l_qb = qubit_rotation_count(n_b);
        let l_qd = qudit_rotation_count(d);
        let (lqb, lqd) = (l_qb as f64, l_qd as f64);
        let log_qd = (lqd / eps).log2();
        let a_max = lqb * (self.rz_slope * (lqb / eps).log2() + self.rz_intercept) / (lqd * log_qd);
        Ok(PfThresholds {
            d,
            n_b,
            l_qb,
            l_qd,
            a_max,
            a_rz: self.rz_equivalent_prefactor(log_qd),
        })
    }
}

pub fn rz_cost(delta: f64) -> Result<f64> {
    SynthesisModel::default().rz_cost(delta)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PfThresholds {
    pub d: usize,
    pub n_b: u32,
    /// Qubit `R_z` per step, `n_b (n_b + 1) / 2`.
    pub l_qb: usize,
    /// Qudit rotations per step, `d - 1`.
    pub l_qd: usize,
    pub a_max: f64,
    pub a_rz: f64,
}

impl PfThresholds {
    pub fn favorable(&self) -> bool {
        is_favorable(self.a_max, self.a_rz)
    }

    /// `L_qb / L_qd`, which shrinks like `(log d)^2 / d`.
    pub fn rotation_ratio(&self) -> f64 {
        self.l_qb as f64 / self.l_qd as f64
    }
}

pub fn pf_thresholds(d: usize, eps: f64) -> Result<PfThresholds> {
    SynthesisModel::default().pf_thresholds(d, eps)
}
