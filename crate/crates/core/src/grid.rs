//! Symmetric uniform discretization of the field amplitude on one site.
//!
//! The field operator is diagonal with eigenvalues
//! `lambda_n = -phi_max + n * delta_phi` for `n = 0..d`, where `d = 2M + 1`
//! is odd so that `lambda_M = 0` sits at the centre of the grid.

use serde::Serialize;

use crate::error::{Error, Result};

/// `ceil(log2 d)` for `d >= 1`.
pub fn qubit_width(d: usize) -> u32 {
    if d <= 1 {
        0
    } else {
        usize::BITS - (d - 1).leading_zeros()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldGrid {
    phi_max: f64,
    dim: usize,
    half_width: usize,
    delta_phi: f64,
    lambdas: Vec<f64>,
    n_b: u32,
}

impl FieldGrid {
    pub fn new(phi_max: f64, d: usize) -> Result<Self> {
        if !(phi_max.is_finite() && phi_max > 0.0) {
            return Err(Error::Domain(format!(
                "phi_max must be positive and finite, got {phi_max}"
            )));
        }
        if d < 3 {
            return Err(Error::DimensionTooSmall(d));
        }
        if d % 2 == 0 {
            return Err(Error::EvenDimension(d));
        }
        let half_width = (d - 1) / 2;
        let delta_phi = phi_max / half_width as f64;
        // n - M keeps the centre exactly zero and the grid exactly antisymmetric.
        let mut lambdas: Vec<f64> = (0..d)
            .map(|n| (n as f64 - half_width as f64) * delta_phi)
            .collect();
        lambdas[0] = -phi_max;
        lambdas[d - 1] = phi_max;
        Ok(Self {
            phi_max,
            dim: d,
            half_width,
            delta_phi,
            lambdas,
            n_b: qubit_width(d),
        })
    }

    pub fn phi_max(&self) -> f64 {
        self.phi_max
    }

    /// Local dimension `d`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `M = (d - 1) / 2`.
    pub fn half_width(&self) -> usize {
        self.half_width
    }

    pub fn delta_phi(&self) -> f64 {
        self.delta_phi
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// Width of the binary qubit register holding one site.
    pub fn n_b(&self) -> u32 {
        self.n_b
    }

    /// Mean of the squared eigenvalues, `(1/d) sum_n lambda_n^2`.
    pub fn squared_mean(&self) -> f64 {
        self.lambdas.iter().map(|l| l * l).sum::<f64>() / self.dim as f64
    }
}

pub fn make_grid(phi_max: f64, d: usize) -> Result<FieldGrid> {
    FieldGrid::new(phi_max, d)
}

pub fn squared_mean(grid: &FieldGrid) -> f64 {
    grid.squared_mean()
}

/// Analytic value of [`squared_mean`]: `phi_max^2 (d + 1) / (3 (d - 1))`.
pub fn squared_mean_closed_form(phi_max: f64, d: usize) -> f64 {
    phi_max * phi_max * (d as f64 + 1.0) / (3.0 * (d as f64 - 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn three_level_grid() {
        let g = make_grid(1.0, 3).unwrap();
        assert_eq!(g.lambdas(), &[-1.0, 0.0, 1.0]);
        assert_eq!(g.delta_phi(), 1.0);
        assert_eq!(g.n_b(), 2);
        assert_eq!(g.half_width(), 1);
    }

    #[test]
    fn five_level_grid() {
        let g = make_grid(1.0, 5).unwrap();
        assert_eq!(g.lambdas(), &[-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert_eq!(g.delta_phi(), 0.5);
        assert_eq!(g.n_b(), 3);
    }

    #[test]
    fn rejects_bad_inputs() {
        let err = make_grid(1.0, 4).unwrap_err();
        assert_eq!(err, Error::EvenDimension(4));
        assert!(err.to_string().contains("requires odd d"));
        assert_eq!(make_grid(1.0, 1).unwrap_err(), Error::DimensionTooSmall(1));
        assert!(matches!(make_grid(0.0, 3), Err(Error::Domain(_))));
        assert!(matches!(make_grid(-1.0, 3), Err(Error::Domain(_))));
        assert!(matches!(make_grid(f64::NAN, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn qubit_width_matches_ceil_log2() {
        assert_eq!(qubit_width(2), 1);
        assert_eq!(qubit_width(3), 2);
        assert_eq!(qubit_width(4), 2);
        assert_eq!(qubit_width(5), 3);
        assert_eq!(qubit_width(9), 4);
        assert_eq!(qubit_width(1024), 10);
        assert_eq!(qubit_width(1025), 11);
        for d in 2..5000usize {
            assert_eq!(qubit_width(d), (d as f64).log2().ceil() as u32, "d = {d}");
        }
    }

    #[test]
    fn squared_mean_examples() {
        assert_relative_eq!(squared_mean(&make_grid(1.0, 3).unwrap()), 2.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(squared_mean(&make_grid(1.0, 5).unwrap()), 0.5, max_relative = 1e-15);
        assert_eq!(squared_mean_closed_form(0.0, 7), 0.0);
    }

    #[test]
    fn squared_mean_matches_closed_form() {
        for &phi in &[0.5, 1.0, 2.0] {
            for d in (3..=1001).step_by(2) {
                let g = make_grid(phi, d).unwrap();
                assert_relative_eq!(
                    g.squared_mean(),
                    squared_mean_closed_form(phi, d),
                    max_relative = 1e-12
                );
            }
        }
    }

    #[test]
    fn grid_endpoints_and_centre() {
        for d in (3..=201).step_by(2) {
            let g = make_grid(1.7, d).unwrap();
            let l = g.lambdas();
            assert_eq!(l[0], -1.7);
            assert_eq!(l[d - 1], 1.7);
            assert_eq!(l[g.half_width()], 0.0);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn grid_is_increasing_and_symmetric(m in 1usize..400, phi in 0.01f64..10.0) {
                let d = 2 * m + 1;
                let g = make_grid(phi, d).unwrap();
                let l = g.lambdas();
                for n in 0..d {
                    prop_assert!((l[n] + l[d - 1 - n]).abs() <= 1e-12 * phi);
                    prop_assert_eq!(l[n] * l[n], l[d - 1 - n] * l[d - 1 - n]);
                    let expected = -phi + n as f64 * g.delta_phi();
                    prop_assert!((l[n] - expected).abs() <= 1e-12 * phi);
                }
                for w in l.windows(2) {
                    prop_assert!(w[1] > w[0]);
                }
                prop_assert!((g.delta_phi() - 2.0 * phi / (d as f64 - 1.0)).abs() <= 1e-15 * phi);
            }
        }
    }
}
