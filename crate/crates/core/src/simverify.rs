//! Dense small-dimension oracle for rotation schedules.
//!
//! Targets are either diagonal unitaries or single state preparations, so a
//! length-`dim` phase or amplitude vector is enough; no matrices are built.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::schedule::{Axis, RotationSchedule};

/// Largest dimension for dense state simulation.
pub const DENSE_DIM_CAP: usize = 64;

/// Diagonal unitary `diag(e^{i phases[n]})`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagPhases {
    phases: Vec<f64>,
}

impl DiagPhases {
    pub fn new(phases: Vec<f64>) -> Self {
        Self { phases }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.phases.len()
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    /// Product of two diagonal unitaries.
    pub fn combine(&self, other: &DiagPhases) -> Result<DiagPhases> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(Self::new(
            self.phases
                .iter()
                .zip(&other.phases)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn with_global_phase(&self, phase: f64) -> DiagPhases {
        Self::new(self.phases.iter().map(|p| p + phase).collect())
    }
}

/// Accumulated phases of a schedule of `R_Z^{(b,c)}` rotations, including
/// its global phase.
pub fn apply_z_schedule(schedule: &RotationSchedule) -> Result<DiagPhases> {
    let mut phases = vec![schedule.global_phase(); schedule.dim()];
    for (i, rot) in schedule.rotations().iter().enumerate() {
        if rot.axis != Axis::Z {
            return Err(Error::NonDiagonalRotation(i));
        }
        phases[rot.lower] -= rot.angle / 2.0;
        phases[rot.upper] += rot.angle / 2.0;
    }
    Ok(DiagPhases::new(phases))
}

/// Phases of a qubit circuit of commuting `R_z` and `R_zz` rotations.
///
/// `R_z(theta) = e^{-i theta Z / 2}` on qubit `m` (bit `m` of the basis
/// index) and `R_zz(theta) = e^{-i theta Z Z / 2}`. The result covers all
/// `2^n_b` computational states.
pub fn apply_qubit_z_rotations(
    n_b: u32,
    global_phase: f64,
    linear: &[(u32, f64)],
    quadratic: &[(u32, u32, f64)],
) -> Result<DiagPhases> {
    if n_b > 24 {
        return Err(Error::RegisterTooLarge(n_b));
    }
    let z = |n: usize, m: u32| if (n >> m) & 1 == 0 { 1.0 } else { -1.0 };
    let phases = (0..1usize << n_b)
        .map(|n| {
            let lin: f64 = linear.iter().map(|&(m, th)| th * z(n, m)).sum();
            let quad: f64 = quadratic
                .iter()
                .map(|&(m, k, th)| th * z(n, m) * z(n, k))
                .sum();
            global_phase - 0.5 * (lin + quad)
        })
        .collect();
    Ok(DiagPhases::new(phases))
}

/// Compares two diagonal unitaries modulo a global phase.
///
/// The phase difference at level 0 is removed and the returned error is
/// `max_n |e^{i (a_n - b_n - delta_0)} - 1|`.
pub fn equal_up_to_global_phase(a: &DiagPhases, b: &DiagPhases, tol: f64) -> Result<(bool, f64)> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    if a.dim() == 0 {
        return Ok((true, 0.0));
    }
    let anchor = a.phases[0] - b.phases[0];
    let err = a
        .phases
        .iter()
        .zip(&b.phases)
        .map(|(x, y)| (Complex64::from_polar(1.0, x - y - anchor) - 1.0).norm())
        .fold(0.0, f64::max);
    Ok((err <= tol, err))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DenseState {
    amplitudes: Vec<Complex64>,
}

impl DenseState {
    /// Computational basis state `|index>` of a `dim`-level system.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        Self::basis_with_cap(dim, index, DENSE_DIM_CAP)
    }

    pub fn basis_with_cap(dim: usize, index: usize, cap: usize) -> Result<Self> {
        if dim > cap {
            return Err(Error::OutOfRange {
                what: "dense state dimension",
                index: dim,
                limit: cap,
            });
        }
        if index >= dim {
            return Err(Error::OutOfRange {
                what: "basis index",
                index,
                limit: dim,
            });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Euclidean distance to a real target amplitude vector.
    pub fn distance_to_real(&self, target: &[f64]) -> Result<f64> {
        if target.len() != self.dim() {
            return Err(Error::DimensionMismatch(self.dim(), target.len()));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(target)
            .map(|(a, t)| (a - t).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }
}

/// Applies one embedded rotation; components outside `{b, c}` are untouched.
pub fn apply_rotation_to_state(
    state: &DenseState,
    axis: Axis,
    (b, c): (usize, usize),
    angle: f64,
) -> Result<DenseState> {
    let dim = state.dim();
    if b >= c || c >= dim {
        return Err(Error::OutOfRange {
            what: "rotation level",
            index: c.max(b),
            limit: dim,
        });
    }
    let mut out = state.clone();
    let (cos, sin) = ((angle / 2.0).cos(), (angle / 2.0).sin());
    let (xb, xc) = (state.amplitudes[b], state.amplitudes[c]);
    let (nb, nc) = match axis {
        Axis::Y => (xb * cos - xc * sin, xb * sin + xc * cos),
        Axis::X => {
            let isin = Complex64::new(0.0, sin);
            (xb * cos - xc * isin, xc * cos - xb * isin)
        }
        Axis::Z => (
            xb * Complex64::from_polar(1.0, -angle / 2.0),
            xc * Complex64::from_polar(1.0, angle / 2.0),
        ),
    };
    out.amplitudes[b] = nb;
    out.amplitudes[c] = nc;
    Ok(out)
}

/// Applies every rotation of `schedule` in order, then its global phase.
pub fn apply_schedule_to_state(state: &DenseState, schedule: &RotationSchedule) -> Result<DenseState> {
    if state.dim() != schedule.dim() {
        return Err(Error::DimensionMismatch(state.dim(), schedule.dim()));
    }
    let mut current = state.clone();
    for rot in schedule.rotations() {
        current = apply_rotation_to_state(&current, rot.axis, (rot.lower, rot.upper), rot.angle)?;
    }
    let g = Complex64::from_polar(1.0, schedule.global_phase());
    current.amplitudes.iter_mut().for_each(|a| *a *= g);
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schedule::EmbeddedRotation;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn z_schedule(dim: usize, rots: &[(usize, usize, f64)], global: f64) -> RotationSchedule {
        RotationSchedule::new(
            dim,
            rots.iter()
                .map(|&(b, c, a)| EmbeddedRotation::new(Axis::Z, b, c, a))
                .collect(),
            global,
        )
        .unwrap()
    }

    #[test]
    fn empty_schedule_is_identity() {
        let p = apply_z_schedule(&z_schedule(5, &[], 0.0)).unwrap();
        assert_eq!(p.phases(), &[0.0; 5]);
    }

    #[test]
    fn single_half_turn() {
        let p = apply_z_schedule(&z_schedule(3, &[(0, 1, PI)], 0.0)).unwrap();
        assert_eq!(p.phases(), &[-PI / 2.0, PI / 2.0, 0.0]);
    }

    #[test]
    fn rejects_non_z() {
        let s = RotationSchedule::new(3, vec![EmbeddedRotation::new(Axis::Y, 0, 1, 1.0)], 0.0).unwrap();
        assert_eq!(apply_z_schedule(&s), Err(Error::NonDiagonalRotation(0)));
    }

    #[test]
    fn global_phase_comparison() {
        let a = DiagPhases::new(vec![0.1, -0.4, 2.0]);
        assert_eq!(equal_up_to_global_phase(&a, &a, 1e-12).unwrap(), (true, 0.0));
        let shifted = a.with_global_phase(0.7);
        let (ok, err) = equal_up_to_global_phase(&a, &shifted, 1e-12).unwrap();
        assert!(ok && err < 1e-15);
        let mut bent = a.phases().to_vec();
        bent[1] += 0.7;
        let (ok, err) = equal_up_to_global_phase(&a, &DiagPhases::new(bent), 1e-6).unwrap();
        assert!(!ok && err > 0.6);
        assert!(equal_up_to_global_phase(&a, &DiagPhases::identity(2), 1e-6).is_err());
    }

    #[test]
    fn y_rotation_examples() {
        let s = DenseState::basis(2, 0).unwrap();
        let out = apply_rotation_to_state(&s, Axis::Y, (0, 1), PI).unwrap();
        assert!(out.distance_to_real(&[0.0, 1.0]).unwrap() < 1e-15);

        let s = DenseState::basis(3, 0).unwrap();
        let out = apply_rotation_to_state(&s, Axis::Y, (0, 2), PI / 2.0).unwrap();
        assert!(out.distance_to_real(&[FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2]).unwrap() < 1e-15);
    }

    #[test]
    fn x_rotation_half_turn() {
        let s = DenseState::basis(3, 1).unwrap();
        let out = apply_rotation_to_state(&s, Axis::X, (1, 2), PI).unwrap();
        assert!((out.amplitudes()[2] - Complex64::new(0.0, -1.0)).norm() < 1e-15);
        assert!(out.amplitudes()[1].norm() < 1e-15);
    }

    #[test]
    fn z_state_action_matches_phase_rule() {
        let s = DenseState::basis(3, 1).unwrap();
        let out = apply_rotation_to_state(&s, Axis::Z, (0, 1), 0.8).unwrap();
        assert!((out.amplitudes()[1] - Complex64::from_polar(1.0, 0.4)).norm() < 1e-15);
    }

    #[test]
    fn rejects_out_of_range() {
        let s = DenseState::basis(3, 0).unwrap();
        assert!(apply_rotation_to_state(&s, Axis::Y, (0, 3), 1.0).is_err());
        assert!(apply_rotation_to_state(&s, Axis::Y, (2, 1), 1.0).is_err());
        assert!(DenseState::basis(65, 0).is_err());
        assert!(DenseState::basis_with_cap(65, 0, 128).is_ok());
        assert!(DenseState::basis(3, 3).is_err());
    }

    #[test]
    fn qubit_rotations_single_qubit() {
        // R_z(theta) = diag(e^{-i theta/2}, e^{i theta/2})
        let p = apply_qubit_z_rotations(1, 0.0, &[(0, 1.0)], &[]).unwrap();
        assert_eq!(p.phases(), &[-0.5, 0.5]);
        let p = apply_qubit_z_rotations(2, 0.0, &[], &[(0, 1, 2.0)]).unwrap();
        assert_eq!(p.phases(), &[-1.0, 1.0, 1.0, -1.0]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn rotation() -> impl Strategy<Value = (usize, usize, f64)> {
            (0usize..11, 1usize..12, -20.0f64..20.0)
                .prop_filter_map("b < c", |(b, c, a)| (b < c).then_some((b, c, a)))
        }

        fn any_axis() -> impl Strategy<Value = Axis> {
            prop_oneof![Just(Axis::X), Just(Axis::Y), Just(Axis::Z)]
        }

        proptest! {
            #[test]
            fn rotations_preserve_norm(
                ops in prop::collection::vec((any_axis(), rotation()), 0..40),
                start in 0usize..12,
            ) {
                let mut s = DenseState::basis(12, start).unwrap();
                for (axis, (b, c, a)) in ops {
                    s = apply_rotation_to_state(&s, axis, (b, c), a).unwrap();
                    prop_assert!((s.norm() - 1.0).abs() < 1e-12);
                }
            }

            #[test]
            fn z_schedules_commute(
                rots in prop::collection::vec(rotation(), 0..30),
                seed in any::<u64>(),
            ) {
                let mut shuffled = rots.clone();
                // Deterministic Fisher-Yates from the seed.
                let mut x = seed | 1;
                for i in (1..shuffled.len()).rev() {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    shuffled.swap(i, (x % (i as u64 + 1)) as usize);
                }
                let a = apply_z_schedule(&z_schedule(12, &rots, 0.3)).unwrap();
                let b = apply_z_schedule(&z_schedule(12, &shuffled, 0.3)).unwrap();
                for (x, y) in a.phases().iter().zip(b.phases()) {
                    prop_assert!((x - y).abs() < 1e-12);
                }
            }

            #[test]
            fn z_schedule_composition(
                first in prop::collection::vec(rotation(), 0..20),
                second in prop::collection::vec(rotation(), 0..20),
                g1 in -3.0f64..3.0,
                g2 in -3.0f64..3.0,
            ) {
                let s1 = z_schedule(12, &first, g1);
                let s2 = z_schedule(12, &second, g2);
                let joined = apply_z_schedule(&s1.then(&s2).unwrap()).unwrap();
                let combined = apply_z_schedule(&s1).unwrap()
                    .combine(&apply_z_schedule(&s2).unwrap()).unwrap();
                for (x, y) in joined.phases().iter().zip(combined.phases()) {
                    prop_assert!((x - y).abs() < 1e-12);
                }
            }

            #[test]
            fn dense_z_matches_phase_rule(rots in prop::collection::vec(rotation(), 0..20), level in 0usize..12) {
                let sched = z_schedule(12, &rots, 0.0);
                let phases = apply_z_schedule(&sched).unwrap();
                let out = apply_schedule_to_state(&DenseState::basis(12, level).unwrap(), &sched).unwrap();
                let expect = Complex64::from_polar(1.0, phases.phases()[level]);
                prop_assert!((out.amplitudes()[level] - expect).norm() < 1e-12);
            }
        }
    }
}
