//! Expansion of `phi_x^2` in powers of the generalized Pauli `Z_d`.
//!
//! For the symmetric grid every non-identity coefficient is nonzero and has
//! the form `beta_r = c_r e^{i pi r / d}` with real `c_r`, positive below the
//! midpoint and negative from `(d + 1) / 2` upward. That single sign flip is
//! what lets a comparator against a fixed threshold implement the phase
//! pattern of the SELECT diagonal.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::FieldGrid;

/// Relative floor below which a coefficient counts as vanishing.
pub const IRREDUCIBILITY_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PauliExpansion {
    dim: usize,
    phi_max: f64,
    betas: Vec<Complex64>,
    c_amps: Vec<f64>,
    phases: Vec<f64>,
    lambda_norm: f64,
    sign_threshold: usize,
}

/// Closed-form coefficient `beta_r` of `Z_d^r` in `phi_x^2`.
///
/// Accepts `phi_max = 0`, in which case every coefficient vanishes.
pub fn beta_coefficient(phi_max: f64, d: usize, r: usize) -> Complex64 {
    let df = d as f64;
    let scale = phi_max * phi_max;
    if r % d == 0 {
        return Complex64::new(scale * (df + 1.0) / (3.0 * (df - 1.0)), 0.0);
    }
    let x = PI * r as f64 / df;
    let s = x.sin();
    let c = 2.0 * scale / ((df - 1.0) * (df - 1.0)) * x.cos() / (s * s);
    Complex64::from_polar(1.0, x) * c
}

impl PauliExpansion {
    /// Derives `c_r`, the canonical phases and the norm from a full coefficient list.
    fn from_betas(grid: &FieldGrid, betas: Vec<Complex64>) -> Result<Self> {
        let d = grid.dim();
        debug_assert_eq!(betas.len(), d);
        let floor = IRREDUCIBILITY_FLOOR * grid.phi_max() * grid.phi_max();
        let mut c_amps = Vec::with_capacity(d - 1);
        let mut phases = Vec::with_capacity(d - 1);
        for (r, beta) in betas.iter().enumerate().skip(1) {
            let magnitude = beta.norm();
            if magnitude <= floor {
                return Err(Error::Reducible { r, magnitude });
            }
            let base = PI * r as f64 / d as f64;
            let c = (beta * Complex64::from_polar(1.0, -base)).re;
            c_amps.push(c);
            phases.push(if c < 0.0 { base + PI } else { base });
        }
        let lambda_norm = betas[1..].iter().map(|b| b.norm()).sum();
        Ok(Self {
            dim: d,
            phi_max: grid.phi_max(),
            betas,
            c_amps,
            phases,
            lambda_norm,
            sign_threshold: (d + 1) / 2,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn phi_max(&self) -> f64 {
        self.phi_max
    }

    /// All `d` coefficients; index 0 is the identity term.
    pub fn betas(&self) -> &[Complex64] {
        &self.betas
    }

    pub fn beta(&self, r: usize) -> Complex64 {
        self.betas[r % self.dim]
    }

    /// Real amplitude `c_r` for `r` in `1..d`.
    pub fn c(&self, r: usize) -> f64 {
        self.c_amps[r - 1]
    }

    /// `c_1 .. c_{d-1}`.
    pub fn c_amps(&self) -> &[f64] {
        &self.c_amps
    }

    /// Phases `theta_1 .. theta_{d-1}` in `[0, 2 pi)`.
    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    /// `Lambda = sum_{r >= 1} |beta_r|`; the identity term is excluded.
    pub fn lambda_norm(&self) -> f64 {
        self.lambda_norm
    }

    /// First index with negative `c_r`, `(d + 1) / 2`.
    pub fn sign_threshold(&self) -> usize {
        self.sign_threshold
    }

    /// Largest `|beta_{d-r} - conj(beta_r)|`.
    pub fn hermiticity_defect(&self) -> f64 {
        (1..self.dim)
            .map(|r| (self.betas[self.dim - r] - self.betas[r].conj()).norm())
            .fold(0.0, f64::max)
    }

    /// Largest imaginary residue of `beta_r e^{-i pi r / d}`, which should be real.
    pub fn phase_form_defect(&self) -> f64 {
        (1..self.dim)
            .map(|r| {
                let base = PI * r as f64 / self.dim as f64;
                (self.betas[r] * Complex64::from_polar(1.0, -base)).im.abs()
            })
            .fold(0.0, f64::max)
    }

    /// Target PREP amplitudes `sqrt(|beta_r| / Lambda)` for `r = 1..d`.
    pub fn prep_amplitudes(&self) -> Vec<f64> {
        self.betas[1..]
            .iter()
            .map(|b| (b.norm() / self.lambda_norm).sqrt())
            .collect()
    }

    /// `sum_r beta_r omega^{r n}` for every level `n`; inverts the expansion.
    pub fn reconstruct_diagonal(&self) -> Vec<f64> {
        let d = self.dim;
        (0..d)
            .map(|n| {
                self.betas
                    .iter()
                    .enumerate()
                    .map(|(r, b)| b * root_of_unity(d, (r * n) % d))
                    .sum::<Complex64>()
                    .re
            })
            .collect()
    }
}

fn root_of_unity(d: usize, k: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / d as f64)
}

pub fn beta_closed_form(grid: &FieldGrid) -> Result<PauliExpansion> {
    let d = grid.dim();
    let betas = (0..d)
        .map(|r| beta_coefficient(grid.phi_max(), d, r))
        .collect();
    PauliExpansion::from_betas(grid, betas)
}

/// Direct `O(d^2)` discrete Fourier transform of the squared grid.
///
/// Kept deliberately naive: it is the independent check on
/// [`beta_closed_form`] and must not share its trigonometric identities.
pub fn beta_dft_oracle(grid: &FieldGrid) -> Result<PauliExpansion> {
    let d = grid.dim();
    let squares: Vec<f64> = grid.lambdas().iter().map(|l| l * l).collect();
    let betas = (0..d)
        .map(|r| {
            squares
                .iter()
                .enumerate()
                .map(|(n, sq)| root_of_unity(d, (r * n) % d).conj() * *sq)
                .sum::<Complex64>()
                / d as f64
        })
        .collect();
    PauliExpansion::from_betas(grid, betas)
}

/// Phases of the SELECT diagonal `D = diag(e^{i theta_r})` with `theta_0 = 0`.
pub fn select_diag_phases(expansion: &PauliExpansion) -> Result<Vec<f64>> {
    let mut theta = Vec::with_capacity(expansion.dim);
    theta.push(0.0);
    for (i, (&c, &phase)) in expansion.c_amps.iter().zip(&expansion.phases).enumerate() {
        if c == 0.0 {
            return Err(Error::Reducible {
                r: i + 1,
                magnitude: 0.0,
            });
        }
        theta.push(phase);
    }
    Ok(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;
    use approx::assert_relative_eq;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn three_level_coefficients() {
        let g = make_grid(1.0, 3).unwrap();
        let e = beta_closed_form(&g).unwrap();
        assert!(close(e.beta(0), Complex64::new(2.0 / 3.0, 0.0), 1e-15));
        assert!(close(e.beta(1), Complex64::from_polar(1.0 / 3.0, PI / 3.0), 1e-15));
        assert!(close(e.beta(2), Complex64::from_polar(1.0 / 3.0, -PI / 3.0), 1e-15));
        assert_relative_eq!(e.lambda_norm(), 2.0 / 3.0, max_relative = 1e-14);
        let oracle = beta_dft_oracle(&g).unwrap();
        for r in 0..3 {
            assert!(close(e.beta(r), oracle.beta(r), 1e-12));
        }
    }

    #[test]
    fn five_level_magnitudes() {
        let g = make_grid(1.0, 5).unwrap();
        let e = beta_closed_form(&g).unwrap();
        // Values from the DFT oracle.
        let oracle = beta_dft_oracle(&g).unwrap();
        assert_relative_eq!(oracle.beta(1).norm(), 0.292705, max_relative = 1e-5);
        assert_relative_eq!(oracle.beta(2).norm(), 0.0427051, max_relative = 1e-5);
        assert_relative_eq!(oracle.lambda_norm(), 0.670820, max_relative = 1e-5);
        assert_relative_eq!(e.lambda_norm(), oracle.lambda_norm(), max_relative = 1e-12);
        assert_eq!(e.sign_threshold(), 3);
    }

    #[test]
    fn zero_field_coefficients_vanish() {
        for d in [3usize, 5, 9] {
            for r in 0..d {
                assert_eq!(beta_coefficient(0.0, d, r), Complex64::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn dft_inversion_recovers_squares() {
        let g = make_grid(1.0, 7).unwrap();
        for e in [beta_closed_form(&g).unwrap(), beta_dft_oracle(&g).unwrap()] {
            for (value, lambda) in e.reconstruct_diagonal().iter().zip(g.lambdas()) {
                assert!((value - lambda * lambda).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn closed_form_matches_dft_at_101() {
        let g = make_grid(1.0, 101).unwrap();
        let a = beta_closed_form(&g).unwrap();
        let b = beta_dft_oracle(&g).unwrap();
        let worst = (0..101)
            .map(|r| (a.beta(r) - b.beta(r)).norm())
            .fold(0.0, f64::max);
        assert!(worst < 1e-10, "worst = {worst}");
    }

    #[test]
    fn identity_term_matches_squared_mean() {
        for d in (3..=99).step_by(2) {
            let g = make_grid(1.3, d).unwrap();
            let e = beta_closed_form(&g).unwrap();
            assert_relative_eq!(e.beta(0).re, g.squared_mean(), max_relative = 1e-12);
        }
    }

    #[test]
    fn select_phases_small_cases() {
        let e = beta_closed_form(&make_grid(1.0, 3).unwrap()).unwrap();
        let th = select_diag_phases(&e).unwrap();
        let want = [0.0, PI / 3.0, 2.0 * PI / 3.0 + PI];
        for (a, b) in th.iter().zip(want) {
            assert_relative_eq!(*a, b, epsilon = 1e-14);
        }

        let e = beta_closed_form(&make_grid(1.0, 5).unwrap()).unwrap();
        let th = select_diag_phases(&e).unwrap();
        let want = [0.0, PI / 5.0, 2.0 * PI / 5.0, 3.0 * PI / 5.0 + PI, 4.0 * PI / 5.0 + PI];
        for (a, b) in th.iter().zip(want) {
            assert_relative_eq!(*a, b, epsilon = 1e-14);
        }
    }

    #[test]
    fn invariants_hold_across_odd_dimensions() {
        for d in (3..=513).step_by(2) {
            let g = make_grid(1.0, d).unwrap();
            let e = beta_closed_form(&g).unwrap();
            assert!(e.hermiticity_defect() < 1e-12, "d = {d}");
            assert!(e.phase_form_defect() < 1e-12, "d = {d}");
            for r in 1..d {
                let c = e.c(r);
                assert_eq!(c < 0.0, r >= (d + 1) / 2, "d = {d}, r = {r}");
                assert!((e.c(d - r) + c).abs() <= 1e-12 * c.abs().max(1.0));
                let phase = e.phases()[r - 1];
                assert!((0.0..2.0 * PI).contains(&phase));
                let unit = e.beta(r) / e.beta(r).norm();
                assert!(close(unit, Complex64::from_polar(1.0, phase), 1e-12));
            }
        }
    }

    #[test]
    fn prep_amplitudes_are_normalized() {
        let e = beta_closed_form(&make_grid(1.0, 11).unwrap()).unwrap();
        let total: f64 = e.prep_amplitudes().iter().map(|a| a * a).sum();
        assert_relative_eq!(total, 1.0, max_relative = 1e-14);
    }
}
