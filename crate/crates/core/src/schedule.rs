//! Ordered products of embedded two-level rotations on a single qudit.
//!
//! `R_G^{(b,c)}(theta) = exp(-i theta/2 G^{(b,c)})` where `G` is a Pauli
//! matrix acting on the span of levels `b < c`. An embedded rotation is the
//! identity only when `theta` is a multiple of `4 pi`; at `2 pi` it flips the
//! sign of two levels, which is not a global phase once `d > 2`.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const FULL_TURN: f64 = 4.0 * PI;

/// Tolerance on the mod-`4 pi` class when deciding whether a rotation is trivial.
pub const TRIVIALITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "X",
            Axis::Y => "Y",
            Axis::Z => "Z",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EmbeddedRotation {
    pub axis: Axis,
    pub lower: usize,
    pub upper: usize,
    pub angle: f64,
}

impl EmbeddedRotation {
    pub fn new(axis: Axis, lower: usize, upper: usize, angle: f64) -> Self {
        Self {
            axis,
            lower,
            upper,
            angle,
        }
    }

    pub fn is_trivial(&self) -> bool {
        is_trivial_angle(self.angle)
    }
}

/// Representative of `theta mod 4 pi` in `(-2 pi, 2 pi]`.
pub fn reduce_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(FULL_TURN);
    if r > FULL_TURN / 2.0 {
        r - FULL_TURN
    } else {
        r
    }
}

/// Distance from `theta` to the nearest multiple of `4 pi`.
pub fn distance_to_identity(theta: f64) -> f64 {
    let r = theta.rem_euclid(FULL_TURN);
    r.min(FULL_TURN - r)
}

pub fn is_trivial_angle(theta: f64) -> bool {
    distance_to_identity(theta) < TRIVIALITY_TOL
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RotationSchedule {
    dim: usize,
    rotations: Vec<EmbeddedRotation>,
    global_phase: f64,
    nontrivial_count: usize,
}

impl RotationSchedule {
    pub fn new(dim: usize, rotations: Vec<EmbeddedRotation>, global_phase: f64) -> Result<Self> {
        for rot in &rotations {
            if rot.lower >= rot.upper {
                return Err(Error::Domain(format!(
                    "level pair ({}, {}) must satisfy b < c",
                    rot.lower, rot.upper
                )));
            }
            if rot.upper >= dim {
                return Err(Error::OutOfRange {
                    what: "schedule level",
                    index: rot.upper,
                    limit: dim,
                });
            }
        }
        let nontrivial_count = rotations.iter().filter(|r| !r.is_trivial()).count();
        Ok(Self {
            dim,
            rotations,
            global_phase,
            nontrivial_count,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rotations(&self) -> &[EmbeddedRotation] {
        &self.rotations
    }

    pub fn angles(&self) -> Vec<f64> {
        self.rotations.iter().map(|r| r.angle).collect()
    }

    /// Scalar phase multiplying the rotation product, `e^{i global_phase}`.
    pub fn global_phase(&self) -> f64 {
        self.global_phase
    }

    /// Number of rotations that are not the identity.
    pub fn nontrivial_count(&self) -> usize {
        self.nontrivial_count
    }

    pub fn len(&self) -> usize {
        self.rotations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rotations.is_empty()
    }

    pub fn is_adjacent(&self) -> bool {
        self.rotations.iter().all(|r| r.upper == r.lower + 1)
    }

    /// Copy with `offset` added to every angle. Used to check that the
    /// verification suites notice a corrupted schedule.
    pub fn perturbed(&self, offset: f64) -> Self {
        let rotations = self
            .rotations
            .iter()
            .map(|r| EmbeddedRotation {
                angle: r.angle + offset,
                ..*r
            })
            .collect();
        Self::new(self.dim, rotations, self.global_phase).expect("levels unchanged")
    }

    /// Concatenation: `self` is applied first.
    pub fn then(&self, other: &RotationSchedule) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut rotations = self.rotations.clone();
        rotations.extend_from_slice(&other.rotations);
        Self::new(self.dim, rotations, self.global_phase + other.global_phase)
    }
}
