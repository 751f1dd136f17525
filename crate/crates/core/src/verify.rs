//! Named verification suites that drive the dense and coefficient oracles.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{make_grid, FieldGrid};
use crate::lcu::{
    dsign_spec, fixed_encoding_call_rotations, fixed_encoding_select_schedule,
    prep_ry_schedule, qubit_projector_diag_oracle, SignedBinaryRegister,
};
use crate::pauli::{beta_closed_form, beta_dft_oracle, select_diag_phases};
use crate::simverify::{
    apply_qubit_z_rotations, apply_schedule_to_state, apply_z_schedule,
    equal_up_to_global_phase, DenseState, DiagPhases, DENSE_DIM_CAP,
};
use crate::strategy::{Named, Registry};
use crate::trotter::{
    centered_partial_sum, qubit_step_target, qubit_trotter_terms, qudit_step_target,
    qudit_trotter_angles,
};

/// Largest dimension covered by the coefficient and census suites.
pub const CENSUS_DIM_CAP: usize = 513;

/// Widest register for the exhaustive projector check.
pub const PROJECTOR_QUBIT_CAP: u32 = 8;

pub const SCHEDULE_TOL: f64 = 1e-10;
pub const COEFFICIENT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyOptions {
    pub phi_max: f64,
    /// Largest odd `d` for dense-state suites.
    pub dense_max: usize,
    /// Largest odd `d` for coefficient and census suites.
    pub census_max: usize,
    pub times: Vec<f64>,
    /// Added to every schedule angle before simulation; zero in normal runs.
    pub perturbation: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            phi_max: 1.0,
            dense_max: DENSE_DIM_CAP,
            census_max: CENSUS_DIM_CAP,
            times: vec![0.1, 1.0, 3.7],
            perturbation: 0.0,
        }
    }
}

impl VerifyOptions {
    pub fn validate(&self) -> Result<()> {
        if self.dense_max > DENSE_DIM_CAP {
            return Err(Error::OutOfRange {
                what: "dense verification cap",
                index: self.dense_max,
                limit: DENSE_DIM_CAP,
            });
        }
        if self.census_max > CENSUS_DIM_CAP {
            return Err(Error::OutOfRange {
                what: "census cap",
                index: self.census_max,
                limit: CENSUS_DIM_CAP,
            });
        }
        if self.dense_max < 3 || self.census_max < 3 {
            return Err(Error::EmptyRange);
        }
        make_grid(self.phi_max, 3)?;
        Ok(())
    }

    fn dense_dims(&self) -> Vec<usize> {
        (3..=self.dense_max).step_by(2).collect()
    }

    fn census_dims(&self) -> Vec<usize> {
        (3..=self.census_max).step_by(2).collect()
    }

    fn grid(&self, d: usize) -> Result<FieldGrid> {
        make_grid(self.phi_max, d)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub cases: usize,
    pub max_error: f64,
    pub tolerance: f64,
    pub detail: String,
}

pub trait VerificationSuite: Named + Send + Sync {
    fn run(&self, opts: &VerifyOptions) -> Result<SuiteReport>;
}

/// Per-case outcome: worst error and an optional note on failure.
struct Case {
    error: f64,
    failure: Option<String>,
}

impl Case {
    fn check(error: f64, tol: f64, label: impl FnOnce() -> String) -> Self {
        let failure = (error.is_nan() || error > tol).then(label);
        Self { error, failure }
    }

    fn flag(ok: bool, label: impl FnOnce() -> String) -> Self {
        Self {
            error: if ok { 0.0 } else { 1.0 },
            failure: (!ok).then(label),
        }
    }
}

fn summarize(name: &str, tolerance: f64, cases: Vec<Case>, extra: Option<String>) -> SuiteReport {
    let max_error = cases.iter().map(|c| c.error).fold(0.0, f64::max);
    let failures: Vec<&String> = cases.iter().filter_map(|c| c.failure.as_ref()).collect();
    let mut detail = match failures.first() {
        Some(first) => format!("{} failing case(s), first: {}", failures.len(), first),
        None => String::new(),
    };
    if let Some(extra) = extra {
        if !detail.is_empty() {
            detail.push_str("; ");
        }
        detail.push_str(&extra);
    }
    SuiteReport {
        suite: name.to_string(),
        passed: failures.is_empty(),
        cases: cases.len(),
        max_error,
        tolerance,
        detail,
    }
}

fn par_cases<F>(dims: &[usize], f: F) -> Result<Vec<Case>>
where
    F: Fn(usize) -> Result<Vec<Case>> + Sync,
{
    let nested: Result<Vec<Vec<Case>>> = dims.par_iter().map(|&d| f(d)).collect();
    Ok(nested?.into_iter().flatten().collect())
}

/// Qudit `R_Z` chain against `diag(e^{-i t (lambda^2 - mu)})`.
pub struct TrotterScheduleSuite;

impl Named for TrotterScheduleSuite {
    fn name(&self) -> &'static str {
        "trotter-schedule"
    }
    fn description(&self) -> &'static str {
        "qudit product-formula schedule reproduces the step diagonal"
    }
}

impl VerificationSuite for TrotterScheduleSuite {
    fn run(&self, opts: &VerifyOptions) -> Result<SuiteReport> {
        let cases = par_cases(&opts.dense_dims(), |d| {
            let grid = opts.grid(d)?;
            opts.times
                .iter()
                .map(|&t| {
                    let sched = qudit_trotter_angles(&grid, t).perturbed(opts.perturbation);
                    let realized = apply_z_schedule(&sched)?;
                    let (_, err) = equal_up_to_global_phase(&realized, &qudit_step_target(&grid, t), SCHEDULE_TOL)?;
                    Ok(Case::check(err, SCHEDULE_TOL, || format!("d = {d}, t = {t}: {err:e}")))
                })
                .collect()
        })?;
        Ok(summarize(self.name(), SCHEDULE_TOL, cases, None))
    }
}

/// Binary `Z`/`ZZ` circuit against `diag(e^{-i t phi(n)^2})` on every string.
pub struct QubitTrotterSuite;

impl Named for QubitTrotterSuite {
    fn name(&self) -> &'static str {
        "qubit-trotter"
    }
    fn description(&self) -> &'static str {
        "qubit Z/ZZ expansion reproduces the step diagonal"
    }
}

impl VerificationSuite for QubitTrotterSuite {
    fn run(&self, opts: &VerifyOptions) -> Result<SuiteReport> {
        let cases = par_cases(&opts.dense_dims(), |d| {
            let grid = opts.grid(d)?;
            opts.times
                .iter()
                .map(|&t| {
                    let e = qubit_trotter_terms(&grid, t);
                    let realized =
                        apply_qubit_z_rotations(e.n_b(), e.global_phase(), &e.linear_terms, &e.quad_terms)?;
                    let (_, err) = equal_up_to_global_phase(&realized, &qubit_step_target(&grid, t), SCHEDULE_TOL)?;
                    let count_ok = e.rz_count() == (e.n_b() * (e.n_b() + 1) / 2) as usize;
                    let err = if count_ok { err } else { f64::INFINITY };
                    Ok(Case::check(err, SCHEDULE_TOL, || format!("d = {d}, t = {t}: {err:e}")))
                })
                .collect()
        })?;
        Ok(summarize(self.name(), SCHEDULE_TOL, cases, None))
    }
}

/// Fixed-encoding SELECT chain against `D = diag(e^{i theta_r})`.
pub struct SelectScheduleSuite;

impl Named for SelectScheduleSuite {
    fn name(&self) -> &'static str {
        "select-schedule"
    }
    fn description(&self) -> &'static str {
        "fixed-encoding SELECT chain reproduces D up to global phase"
    }
}

impl VerificationSuite for SelectScheduleSuite {
    fn run(&self, opts: &VerifyOptions) -> Result<SuiteReport> {
        let cases = par_cases(&opts.dense_dims(), |d| {
            let e = beta_closed_form(&opts.grid(d)?)?;
            let sched = fixed_encoding_select_schedule(&e)?.perturbed(opts.perturbation);
            let realized = apply_z_schedule(&sched)?;
            let target = DiagPhases::new(select_diag_phases(&e)?);
            let (_, err) = equal_up_to_global_phase(&realized, &target, SCHEDULE_TOL)?;
            Ok(vec![Case::check(err, SCHEDULE_TOL, || format!("d = {d}: {err:e}"))])
        })?;
        Ok(summarize(self.name(), SCHEDULE_TOL, cases, None))
    }
}

/// `R_Y` PREP chain applied to `|0>` against `sqrt(|beta_r| / Lambda)`.
pub struct PrepScheduleSuite;

impl Named for PrepScheduleSuite {
    fn name(&self) -> &'static str {
        "prep-schedule"
    }
    fn description(&self) -> &'static str {
        "R_Y PREP chain prepares the LCU amplitudes"
    }
}

impl VerificationSuite for PrepScheduleSuite {
    fn run(&self, opts: &VerifyOptions) -> Result<SuiteReport> {
        let cases = par_cases(&opts.dense_dims(), |d| {
            let e = beta_closed_form(&opts.grid(d)?)?;
            let prep = prep_ry_schedule(&e)?;
            let sched = prep.schedule.perturbed(opts.perturbation);
            let out = apply_schedule_to_state(&DenseState::basis(d, 0)?, &sched)?;
            let mut target = vec![0.0];
            target.extend(e.prep_amplitudes());
            let err = out.distance_to_real(&target)?;
            Ok(vec![Case::check(err, SCHEDULE_TOL, || format!("d = {d}: {err:e}"))])
        })?;
        Ok(summarize(self.name(), SCHEDULE_TOL, cases, None))
    }
}

/// Bit-pair projector expansion against `delta_phi^2 l^2`, exhaustively.
pub struct ProjectorDiagSuite;

impl Named for ProjectorDiagSuite {
    fn name(&self) -> &'static str {
        "projector-diag"
    }
    fn description(&self) -> &'static str {
        "qubit projector diagonal equals delta_phi^2 l^2 on every string"
    }
}

impl VerificationSuite for ProjectorDiagSuite {
    fn run(&self, opts: &VerifyOptions) -> Result<SuiteReport> {
        let max_d = (1usize << PROJECTOR_QUBIT_CAP) - 1;
        let dims: Vec<usize> = (3..=max_d).step_by(2).collect();
        let cases = par_cases(&dims, |d| {
            let grid = opts.grid(d)?;
            let reg = SignedBinaryRegister::new(grid.n_b())?;
            let scale = grid.delta_phi() * grid.delta_phi();
            let values = qubit_projector_diag_oracle(&grid)?;
            let err = values
                .iter()
                .enumerate()
                .map(|(s, v)| {
                    let l = reg.label(s as u64) as f64;
                    (v - scale * l * l).abs()
                })
                .fold(0.0, f64::max);
            Ok(vec![Case::check(err, COEFFICIENT_TOL, || format!("d = {d}: {err:e}"))])
        })?;
        Ok(summarize(self.name(), COEFFICIENT_TOL, cases, None))
    }
}

/// Closed-form coefficients against the direct DFT, plus Hermiticity and
/// the sign threshold.
pub struct DftOracleSuite;

impl Named for DftOracleSuite {
    fn name(&self) -> &'static str {
        "dft-oracle"
    }
    fn description(&self) -> &'static str {
        "closed-form beta_r agree with the O(d^2) DFT; sign flips at (d+1)/2"
    }
}

impl VerificationSuite for DftOracleSuite {
    fn run(&self, opts: &VerifyOptions) -> Result<SuiteReport> {
        let cases = par_cases(&opts.census_dims(), |d| {
            let grid = opts.grid(d)?;
            let closed = beta_closed_form(&grid)?;
            let oracle = beta_dft_oracle(&grid)?;
            let scale = opts.phi_max * opts.phi_max;
            let diff = closed
                .betas()
                .iter()
                .zip(oracle.betas())
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max)
                / scale;
            let herm = closed.hermiticity_defect() / scale;
            let signs_ok = dsign_spec(&closed).is_ok();
            let norm_err = (closed.lambda_norm() - oracle.lambda_norm()).abs() / oracle.lambda_norm();
            Ok(vec![
                Case::check(diff, COEFFICIENT_TOL, || format!("d = {d}: closed vs DFT {diff:e}")),
                Case::check(herm, COEFFICIENT_TOL, || format!("d = {d}: hermiticity {herm:e}")),
                Case::check(norm_err, COEFFICIENT_TOL, || format!("d = {d}: Lambda {norm_err:e}")),
                Case::flag(signs_ok, || format!("d = {d}: sign pattern")),
            ])
        })?;
        Ok(summarize(self.name(), COEFFICIENT_TOL, cases, None))
    }
}

/// Closed-form centered partial sums against direct summation.
pub struct PartialSumSuite;

impl Named for PartialSumSuite {
    fn name(&self) -> &'static str {
        "partial-sums"
    }
    fn description(&self) -> &'static str {
        "centered partial sums: closed form equals direct sum and never vanishes"
    }
}

impl VerificationSuite for PartialSumSuite {
    fn run(&self, opts: &VerifyOptions) -> Result<SuiteReport> {
        let cases = par_cases(&opts.census_dims(), |d| {
            let grid = opts.grid(d)?;
            let mu = grid.squared_mean();
            let mut direct = 0.0;
            (0..d - 1)
                .map(|k| {
                    let l = grid.lambdas()[k];
                    direct += l * l - mu;
                    let closed = centered_partial_sum(&grid, k)?;
                    let err = if closed == 0.0 {
                        f64::INFINITY
                    } else {
                        (closed - direct).abs() / closed.abs()
                    };
                    Ok(Case::check(err, COEFFICIENT_TOL, || format!("d = {d}, k = {k}: {err:e}")))
                })
                .collect()
        })?;
        Ok(summarize(self.name(), COEFFICIENT_TOL, cases, None))
    }
}

/// Number of nontrivial SELECT rotations must be `d - 1`, `d - 2` or `d - 4`.
pub struct CensusSuite;

impl Named for CensusSuite {
    fn name(&self) -> &'static str {
        "sd-census"
    }
    fn description(&self) -> &'static str {
        "nontrivial SELECT rotation count s(d) lies in {d-1, d-2, d-4}"
    }
}

impl VerificationSuite for CensusSuite {
    fn run(&self, opts: &VerifyOptions) -> Result<SuiteReport> {
        let dims = opts.census_dims();
        let counts: Vec<(usize, usize)> = dims
            .par_iter()
            .map(|&d| {
                let e = beta_closed_form(&opts.grid(d)?)?;
                Ok((d, fixed_encoding_select_schedule(&e)?.nontrivial_count()))
            })
            .collect::<Result<_>>()?;
        let mut histogram = [0usize; 3];
        let cases = counts
            .iter()
            .map(|&(d, s)| {
                let deficit = d - 1 - s.min(d - 1);
                match deficit {
                    0 => histogram[0] += 1,
                    1 => histogram[1] += 1,
                    3 => histogram[2] += 1,
                    _ => {}
                }
                let ok = matches!(deficit, 0 | 1 | 3) && fixed_encoding_call_rotations(d) >= s + 2 * (d - 1);
                Case::flag(ok, || format!("d = {d}: s(d) = {s}"))
            })
            .collect();
        let extra = format!(
            "s(d) = d-1: {}, d-2: {}, d-4: {}",
            histogram[0], histogram[1], histogram[2]
        );
        Ok(summarize(self.name(), 0.0, cases, Some(extra)))
    }
}

pub fn suite_registry() -> Registry<dyn VerificationSuite> {
    let mut reg: Registry<dyn VerificationSuite> = Registry::new("verification suite");
    reg.register(Arc::new(TrotterScheduleSuite))
        .register(Arc::new(QubitTrotterSuite))
        .register(Arc::new(SelectScheduleSuite))
        .register(Arc::new(PrepScheduleSuite))
        .register(Arc::new(ProjectorDiagSuite))
        .register(Arc::new(DftOracleSuite))
        .register(Arc::new(PartialSumSuite))
        .register(Arc::new(CensusSuite));
    reg
}

/// Runs the named suites, or all of them when `names` is empty.
pub fn run_suites(names: &[String], opts: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    opts.validate()?;
    let reg = suite_registry();
    let selected: Vec<Arc<dyn VerificationSuite>> = if names.is_empty() {
        reg.iter().cloned().collect()
    } else {
        names.iter().map(|n| reg.get(n)).collect::<Result<_>>()?
    };
    selected.iter().map(|s| s.run(opts)).collect()
}
