//! Block-encoding constructions for `phi_x^2` and their per-call costs.
//!
//! Three routes are covered:
//!
//! * the qubit baseline, a projector LCU over a signed-binary register whose
//!   T count is fixed by the Toffoli cost of its PREP/SELECT oracles;
//! * the hybrid qudit oracle, where binary PREP and the `D_clock` diagonal are
//!   synthesized `R_z` gates and `D_sign` is a comparator against `(d+1)/2`;
//! * the fixed-encoding qudit oracle, built entirely from embedded two-level
//!   rotations on one `d`-level system.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{check_unit_interval, Error, Result};
use crate::grid::{qubit_width, FieldGrid};
use crate::pauli::{select_diag_phases, PauliExpansion};
use crate::schedule::{reduce_angle, Axis, EmbeddedRotation, RotationSchedule};

/// T gates per Toffoli.
pub const T_PER_TOFFOLI: i64 = 4;

/// Largest register enumerated by [`qubit_projector_diag_oracle`].
pub const MAX_ORACLE_QUBITS: u32 = 20;

/// Sign bit followed by `n_b - 1` magnitude bits. The sign is the most
/// significant bit of the computational index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignedBinaryRegister {
    n_b: u32,
}

impl SignedBinaryRegister {
    pub fn new(n_b: u32) -> Result<Self> {
        if !(2..=62).contains(&n_b) {
            return Err(Error::Domain(format!(
                "signed-binary register needs 2..=62 qubits, got {n_b}"
            )));
        }
        Ok(Self { n_b })
    }

    pub fn n_b(&self) -> u32 {
        self.n_b
    }

    pub fn num_strings(&self) -> u64 {
        1u64 << self.n_b
    }

    /// `2^{n_b - 1} - 1`.
    pub fn max_magnitude(&self) -> i64 {
        (1i64 << (self.n_b - 1)) - 1
    }

    pub fn magnitude_bit(&self, string: u64, r: u32) -> u64 {
        (string >> r) & 1
    }

    pub fn label(&self, string: u64) -> i64 {
        let sign = (string >> (self.n_b - 1)) & 1;
        let magnitude = (string & ((1u64 << (self.n_b - 1)) - 1)) as i64;
        if sign == 1 {
            -magnitude
        } else {
            magnitude
        }
    }
}

/// `delta_phi^2 sum_{r,s} 2^{r+s} l_r l_s` on every computational string.
pub fn qubit_projector_diag_oracle(grid: &FieldGrid) -> Result<Vec<f64>> {
    let n_b = grid.n_b();
    if n_b > MAX_ORACLE_QUBITS {
        return Err(Error::RegisterTooLarge(n_b));
    }
    let reg = SignedBinaryRegister::new(n_b)?;
    let scale = grid.delta_phi() * grid.delta_phi();
    Ok((0..reg.num_strings())
        .map(|string| {
            let mut acc: u64 = 0;
            for r in 0..n_b - 1 {
                for s in 0..n_b - 1 {
                    acc += (reg.magnitude_bit(string, r) * reg.magnitude_bit(string, s)) << (r + s);
                }
            }
            scale * acc as f64
        })
        .collect())
}

/// `b_r = ceil(1/2 log2(9 pi^2 / (2 eps)))`.
pub fn rotation_bits(eps: f64) -> Result<u32> {
    check_unit_interval("eps", eps)?;
    Ok((0.5 * (9.0 * PI * PI / (2.0 * eps)).log2()).ceil() as u32)
}

/// `32 b_r + 24 n_b - 116`.
pub fn qubit_lcu_t_count(b_r: u32, n_b: u32) -> i64 {
    32 * b_r as i64 + 24 * n_b as i64 - 116
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QubitLcuCost {
    pub alpha_qb: f64,
    pub b_r: u32,
    pub t_count_per_call: i64,
    pub prep_toffoli: i64,
    pub prep_dagger_toffoli: i64,
    pub select_toffoli: i64,
    pub select_t: i64,
}

impl QubitLcuCost {
    /// T count reassembled from the oracle breakdown.
    pub fn t_count_from_breakdown(&self) -> i64 {
        T_PER_TOFFOLI * (self.prep_toffoli + self.prep_dagger_toffoli + self.select_toffoli)
            + self.select_t
    }
}

/// `delta_phi^2 (2^{n_b - 1} - 1)^2`.
pub fn qubit_lcu_normalization(grid: &FieldGrid) -> f64 {
    let m = ((1u64 << (grid.n_b() - 1)) - 1) as f64;
    grid.delta_phi() * grid.delta_phi() * m * m
}

pub fn qubit_blockencoding_cost(grid: &FieldGrid, eps: f64) -> Result<QubitLcuCost> {
    let b_r = rotation_bits(eps)?;
    let n_b = grid.n_b() as i64;
    let prep = 4 * b_r as i64 + 2 * n_b - 16;
    Ok(QubitLcuCost {
        alpha_qb: qubit_lcu_normalization(grid),
        b_r,
        t_count_per_call: qubit_lcu_t_count(b_r, grid.n_b()),
        prep_toffoli: prep,
        prep_dagger_toffoli: prep,
        select_toffoli: 2 * (n_b - 1),
        select_t: 20,
    })
}

pub(crate) fn check_odd_dim(d: usize) -> Result<()> {
    if d < 3 {
        Err(Error::DimensionTooSmall(d))
    } else if d % 2 == 0 {
        Err(Error::EvenDimension(d))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuditHybridCost {
    /// Direct T gates of the `D_sign` comparator.
    pub t_gates: u64,
    /// Synthesized `R_z` per call: two binary PREPs plus `D_clock`.
    pub rz_rotations_per_call: u64,
    pub ancillas: u64,
}

pub fn qudit_hybrid_call_cost(d: usize) -> Result<QuditHybridCost> {
    check_odd_dim(d)?;
    let n_b = qubit_width(d) as u64;
    Ok(QuditHybridCost {
        t_gates: 4 * n_b,
        rz_rotations_per_call: 2 * ((1u64 << n_b) - 1) + n_b,
        ancillas: n_b + 1,
    })
}

/// Single-qubit phase rotation `exp(i coefficient Z^{(qubit)})`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseRotation {
    pub qubit: u32,
    pub coefficient: f64,
}

/// `D_clock = diag(e^{i pi r / d})` as `exp(-i pi 2^m Z^{(m)} / (2d))` on each
/// index qubit, correct up to a global phase.
pub fn dclock_angles(d: usize) -> Result<Vec<PhaseRotation>> {
    check_odd_dim(d)?;
    Ok((0..qubit_width(d))
        .map(|m| PhaseRotation {
            qubit: m,
            coefficient: -PI * (1u64 << m) as f64 / (2.0 * d as f64),
        })
        .collect())
}

/// Phase accumulated on index state `r` by a product of [`PhaseRotation`]s.
pub fn phase_rotation_product(rotations: &[PhaseRotation], r: u64) -> f64 {
    rotations
        .iter()
        .map(|rot| {
            let z = if (r >> rot.qubit) & 1 == 0 { 1.0 } else { -1.0 };
            rot.coefficient * z
        })
        .sum()
}

/// Comparator flag `f(r) = [r >= (d + 1) / 2]` that realizes the sign part of SELECT.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DsignSpec {
    pub threshold: usize,
    pub t_count: u64,
    pub scratch_ancillas: u64,
    pub flag_ancillas: u64,
}

impl DsignSpec {
    pub fn flag(&self, r: usize) -> bool {
        r >= self.threshold
    }
}

pub fn dsign_spec(expansion: &PauliExpansion) -> Result<DsignSpec> {
    let d = expansion.dim();
    let n_b = qubit_width(d) as u64;
    let spec = DsignSpec {
        threshold: (d + 1) / 2,
        t_count: 4 * n_b,
        scratch_ancillas: n_b,
        flag_ancillas: 1,
    };
    for r in 1..d {
        if spec.flag(r) != (expansion.c(r) < 0.0) {
            return Err(Error::SignPatternMismatch { r });
        }
    }
    Ok(spec)
}

/// `vartheta_k` from the closed form; `m = (d - 1) / 2`.
pub fn select_angle_closed_form(d: usize, k: usize) -> f64 {
    let m = (d - 1) / 2;
    let base = PI / d as f64 * (k as f64 + 1.0) * (4.0 * m as f64 - k as f64);
    if k <= m {
        base
    } else {
        base - 2.0 * PI * (k - m) as f64
    }
}

/// Adjacent `R_Z` chain with `D = e^{i gamma} prod_k R_Z^{(k,k+1)}(vartheta_k)`.
pub fn fixed_encoding_select_schedule(expansion: &PauliExpansion) -> Result<RotationSchedule> {
    let d = expansion.dim();
    check_odd_dim(d)?;
    let theta = select_diag_phases(expansion)?;
    let gamma = theta.iter().sum::<f64>() / d as f64;
    let rotations = (0..d - 1)
        .map(|k| {
            EmbeddedRotation::new(Axis::Z, k, k + 1, reduce_angle(select_angle_closed_form(d, k)))
        })
        .collect();
    RotationSchedule::new(d, rotations, gamma)
}

/// `vartheta_k = -2 sum_{n <= k} (theta_n - gamma)` evaluated term by term.
pub fn select_angles_direct(expansion: &PauliExpansion) -> Result<Vec<f64>> {
    let theta = select_diag_phases(expansion)?;
    let gamma = theta.iter().sum::<f64>() / theta.len() as f64;
    let mut acc = 0.0;
    Ok(theta[..theta.len() - 1]
        .iter()
        .map(|t| {
            acc += t - gamma;
            -2.0 * acc
        })
        .collect())
}

/// Largest amount by which a PREP ratio may exceed one before it is an error.
pub const PREP_RATIO_SLACK: f64 = 1e-9;

/// Ratios this close to one are taken as exactly one. Completeness forces
/// the last ratio to one; without the snap its round-off leaves an
/// `O(sqrt(eps))` amplitude on `|0>`.
pub const PREP_RATIO_SNAP: f64 = 1e-12;

/// PREP schedule plus the largest amount any recursion ratio exceeded one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrepSchedule {
    pub schedule: RotationSchedule,
    pub clamp_excess: f64,
}

/// `R_Y^{(0,r)}(theta_r)` for `r = 1..d`, applied in increasing `r`, with
/// `sin(theta_r / 2) = a_r / prod_{k<r} cos(theta_k / 2)`.
pub fn prep_ry_schedule(expansion: &PauliExpansion) -> Result<PrepSchedule> {
    prep_ry_from_amplitudes(&expansion.prep_amplitudes())
}

/// Same recursion for any nonnegative amplitudes `a_1 .. a_{d-1}` of unit norm.
pub fn prep_ry_from_amplitudes(amplitudes: &[f64]) -> Result<PrepSchedule> {
    let dim = amplitudes.len() + 1;
    let mut residual = 1.0_f64;
    let mut clamp_excess = 0.0_f64;
    let mut rotations = Vec::with_capacity(amplitudes.len());
    for (i, &a) in amplitudes.iter().enumerate() {
        let r = i + 1;
        if a < 0.0 {
            return Err(Error::Domain(format!("negative amplitude {a} at r = {r}")));
        }
        let ratio = if residual > 0.0 {
            a / residual
        } else if a == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        if ratio > 1.0 + PREP_RATIO_SLACK {
            return Err(Error::PrepRatio { r, ratio });
        }
        clamp_excess = clamp_excess.max(ratio - 1.0);
        let ratio = if (ratio - 1.0).abs() <= PREP_RATIO_SNAP {
            1.0
        } else {
            ratio.clamp(0.0, 1.0)
        };
        let theta = 2.0 * ratio.asin();
        residual *= (theta / 2.0).cos();
        rotations.push(EmbeddedRotation::new(Axis::Y, 0, r, theta));
    }
    Ok(PrepSchedule {
        schedule: RotationSchedule::new(dim, rotations, 0.0)?,
        clamp_excess,
    })
}

/// Uniform rotation bound per fixed-encoding call: `(d - 1)` for SELECT plus
/// `(d - 1)` for each of PREP and its inverse.
pub fn fixed_encoding_call_rotations(d: usize) -> usize {
    3 * d - 3
}
