//! One product-formula step of `exp(-i t phi_x^2)` in both encodings.
//!
//! Binary qubit register: `phi_x = P + Q sum_m 2^m Z^{(m)}`, so `phi_x^2`
//! splits into commuting `Z` and `ZZ` terms, `n_b (n_b + 1) / 2` rotations in
//! total. Single qudit: the traceless part of the diagonal is a chain of
//! `d - 1` adjacent `R_Z^{(k,k+1)}` rotations whose angles are twice the
//! centered partial sums of `t lambda_n^2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::FieldGrid;
use crate::schedule::{reduce_angle, Axis, EmbeddedRotation, RotationSchedule};
use crate::simverify::DiagPhases;

/// Synthesized `R_z` rotations per step on `n_b` qubits.
pub fn qubit_rotation_count(n_b: u32) -> usize {
    let n = n_b as usize;
    n * (n + 1) / 2
}

/// Embedded rotations per step on one `d`-level qudit.
pub fn qudit_rotation_count(d: usize) -> usize {
    d - 1
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QubitTrotterExpansion {
    n_b: u32,
    p_shift: f64,
    q_scale: f64,
    /// `(qubit, angle)` of each `R_z`.
    pub linear_terms: Vec<(u32, f64)>,
    /// `(qubit, qubit, angle)` of each `R_zz`, first index smaller.
    pub quad_terms: Vec<(u32, u32, f64)>,
    global_phase: f64,
    rz_count: usize,
}

impl QubitTrotterExpansion {
    pub fn n_b(&self) -> u32 {
        self.n_b
    }

    pub fn p_shift(&self) -> f64 {
        self.p_shift
    }

    pub fn q_scale(&self) -> f64 {
        self.q_scale
    }

    pub fn global_phase(&self) -> f64 {
        self.global_phase
    }

    pub fn rz_count(&self) -> usize {
        self.rz_count
    }

    /// Eigenvalue of the expanded `phi_x` on computational state `n`,
    /// `P + Q (2^n_b - 1) - 2 Q n`.
    pub fn field_value(&self, n: usize) -> f64 {
        let top = ((1u64 << self.n_b) - 1) as f64;
        self.p_shift + self.q_scale * top - 2.0 * self.q_scale * n as f64
    }
}

pub fn qubit_trotter_terms(grid: &FieldGrid, t: f64) -> QubitTrotterExpansion {
    let n_b = grid.n_b();
    let delta = grid.delta_phi();
    let top = ((1u64 << n_b) - 1) as f64;
    let p = -grid.phi_max() + 0.5 * delta * top;
    let q = -0.5 * delta;
    let pow2 = |m: u32| (1u64 << m) as f64;

    let linear_terms: Vec<(u32, f64)> = (0..n_b)
        .map(|m| (m, 2.0 * t * 2.0 * p * q * pow2(m)))
        .collect();
    let mut quad_terms = Vec::with_capacity(qubit_rotation_count(n_b) - n_b as usize);
    for m in 0..n_b {
        for k in m + 1..n_b {
            quad_terms.push((m, k, 2.0 * t * q * q * pow2(m + k) * 2.0));
        }
    }
    // Z_m^2 = I leaves a constant from the diagonal of the double sum.
    let constant = p * p + q * q * (0..n_b).map(|m| pow2(2 * m)).sum::<f64>();
    let rz_count = linear_terms.len() + quad_terms.len();
    QubitTrotterExpansion {
        n_b,
        p_shift: p,
        q_scale: q,
        linear_terms,
        quad_terms,
        global_phase: -t * constant,
        rz_count,
    }
}

/// `sum_{n <= k} (lambda_n^2 - mu)` in closed form,
/// `phi_max^2 * 4 (k + 1) / (3 (d - 1)^2) * (k - (d - 2) / 2) * (k - (d - 1))`.
pub fn centered_partial_sum(grid: &FieldGrid, k: usize) -> Result<f64> {
    let d = grid.dim();
    if k + 2 > d {
        return Err(Error::OutOfRange {
            what: "partial-sum index",
            index: k,
            limit: d - 1,
        });
    }
    let (df, kf) = (d as f64, k as f64);
    let phi2 = grid.phi_max() * grid.phi_max();
    Ok(phi2 * 4.0 * (kf + 1.0) / (3.0 * (df - 1.0) * (df - 1.0))
        * (kf - (df - 2.0) / 2.0)
        * (kf - (df - 1.0)))
}

/// Adjacent `R_Z` chain realizing `exp(-i t phi_x^2)` exactly, with the
/// `e^{-i t mu}` factor carried as the global phase.
pub fn qudit_trotter_angles(grid: &FieldGrid, t: f64) -> RotationSchedule {
    let d = grid.dim();
    let rotations = (0..d - 1)
        .map(|k| {
            let sum = centered_partial_sum(grid, k).expect("k < d - 1");
            EmbeddedRotation::new(Axis::Z, k, k + 1, reduce_angle(2.0 * t * sum))
        })
        .collect();
    RotationSchedule::new(d, rotations, -t * grid.squared_mean()).expect("adjacent levels")
}

/// `diag(e^{-i t (lambda_n^2 - mu)})`, the traceless part of one step.
pub fn qudit_step_target(grid: &FieldGrid, t: f64) -> DiagPhases {
    let mu = grid.squared_mean();
    DiagPhases::new(grid.lambdas().iter().map(|l| -t * (l * l - mu)).collect())
}

/// `diag(e^{-i t phi(n)^2})` over every state of the binary register, where
/// `phi(n) = -phi_max + n delta_phi` continues past the grid for `n >= d`.
pub fn qubit_step_target(grid: &FieldGrid, t: f64) -> DiagPhases {
    DiagPhases::new(
        (0..1usize << grid.n_b())
            .map(|n| {
                let phi = -grid.phi_max() + n as f64 * grid.delta_phi();
                -t * phi * phi
            })
            .collect(),
    )
}
