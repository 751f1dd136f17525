//! Acceptance harness: prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use qudit_cost::endtoend::ratio_and_budget;
use qudit_cost::lcu::{qubit_lcu_t_count, rotation_bits};
use qudit_cost::scan::{is_prime, DimRange};
use qudit_cost::verify::{run_suites, VerifyOptions};
use qudit_cost::{lcu_fixed_encoding_thresholds, make_grid, pf_thresholds, Result};

const EPS: f64 = 1e-6;
const PHI_MAX: f64 = 1.0;

type Outcome = Result<Vec<String>>;

fn rel(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}

struct Checks(Vec<String>);

impl Checks {
    fn new() -> Self {
        Self(Vec::new())
    }

    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.0.push(what.into());
        }
    }

    fn abs(&mut self, label: &str, got: f64, want: f64, tol: f64) {
        self.expect((got - want).abs() <= tol, format!("{label}: got {got:.6}, want {want} ± {tol}"));
    }

    fn rel(&mut self, label: &str, got: f64, want: f64, tol: f64) {
        self.expect(
            rel(got, want) <= tol,
            format!("{label}: got {got:.6e}, want {want:e} (rel {:.2e} > {tol:e})", rel(got, want)),
        );
    }

    fn done(self) -> Outcome {
        Ok(self.0)
    }
}

fn primes_to(max: usize) -> Vec<usize> {
    (3..=max).filter(|&d| is_prime(d)).collect()
}

fn pf_threshold_values() -> Outcome {
    let mut c = Checks::new();
    for (d, want) in [(3, 1.51), (5, 1.48), (7, 0.96)] {
        c.abs(&format!("a_max_pf({d})"), pf_thresholds(d, EPS)?.a_max, want, 0.01);
    }
    let mut favorable = Vec::new();
    for d in primes_to(19) {
        if pf_thresholds(d, EPS)?.favorable() {
            favorable.push(d);
        }
    }
    c.expect(favorable == [3, 5], format!("favorable primes {favorable:?}, want [3, 5]"));
    c.done()
}

fn qubit_lcu_formula() -> Outcome {
    let mut c = Checks::new();
    let b_r = rotation_bits(EPS)?;
    c.expect(b_r == 13, format!("b_r(1e-6) = {b_r}, want 13"));
    for n_b in 2..=10u32 {
        let got = qubit_lcu_t_count(b_r, n_b);
        let want = 32 * b_r as i64 + 24 * n_b as i64 - 116;
        c.expect(got == want, format!("n_b = {n_b}: t_count {got}, want {want}"));
    }
    c.done()
}

fn lcu_table() -> Outcome {
    let mut c = Checks::new();
    let dims = [3, 5, 7, 11, 13, 17, 19];
    let want = [2.56, 1.32, 0.85, 0.53, 0.44, 0.34, 0.30];
    for (d, w) in dims.into_iter().zip(want) {
        let th = lcu_fixed_encoding_thresholds(&make_grid(PHI_MAX, d)?, 0.1, EPS)?;
        c.abs(&format!("a_max_lcu({d})"), th.a_max, w, 0.01);
    }
    c.done()
}

fn ratios_short_time() -> Outcome {
    let mut c = Checks::new();
    for (d, want) in [(3, 2.033787), (5, 1.006205), (7, 0.999963)] {
        let r = ratio_and_budget(&make_grid(PHI_MAX, d)?, 0.1, EPS, 2)?;
        c.rel(&format!("R_tot({d})"), r.ratio, want, 1e-3);
    }
    let r3 = ratio_and_budget(&make_grid(PHI_MAX, 3)?, 0.1, EPS, 2)?;
    c.rel("delta_tot(3)", r3.delta_tot, 4.20e3, 0.02);
    c.done()
}

fn ratios_long_time() -> Outcome {
    let mut c = Checks::new();
    let t = 3000.0;
    for (d, want) in [(5, 3.959978), (21, 1.062653), (23, 0.835319)] {
        let r = ratio_and_budget(&make_grid(PHI_MAX, d)?, t, EPS, 2)?;
        c.rel(&format!("R_tot({d})"), r.ratio, want, 1e-3);
    }
    let mut favorable = Vec::new();
    for d in DimRange::new(3, 101, false).dims()? {
        if ratio_and_budget(&make_grid(PHI_MAX, d)?, t, EPS, 2)?.ratio > 1.0 {
            favorable.push(d);
        }
    }
    let want: Vec<usize> = (3..=13).chain(17..=21).filter(|d| d % 2 == 1).collect();
    c.expect(favorable == want, format!("favorable odd d {favorable:?}, want {want:?}"));
    let r9 = ratio_and_budget(&make_grid(PHI_MAX, 9)?, t, EPS, 2)?;
    c.rel("delta_tot(9)", r9.delta_tot, 3.65e6, 0.02);
    c.done()
}

fn switch_budgets() -> Outcome {
    let mut c = Checks::new();
    let cases: [(f64, &[(usize, f64)], usize); 2] = [
        (0.1, &[(3, 1.05e2), (5, 1.35)], 7),
        (3000.0, &[(3, 2.87e2), (5, 7.42e2), (9, 8.97e2), (17, 6.65e2), (21, 6.34e1)], 23),
    ];
    for (t, golden, negative_at) in cases {
        for &(d, want) in golden {
            let r = ratio_and_budget(&make_grid(PHI_MAX, d)?, t, EPS, 2)?;
            c.rel(&format!("T_cs({d}, t = {t})"), r.budget_per_switch, want, 0.02);
        }
        let r = ratio_and_budget(&make_grid(PHI_MAX, negative_at)?, t, EPS, 2)?;
        c.expect(
            r.budget_per_switch < 0.0,
            format!("T_cs({negative_at}, t = {t}) = {:.3e}, want negative", r.budget_per_switch),
        );
    }
    c.done()
}

fn fixed_encoding_long_time() -> Outcome {
    let mut c = Checks::new();
    let t = 3000.0;
    for (d, a_max, a_rz) in [(5, 4.794611, 0.825901), (19, 1.339724, 0.810783)] {
        let th = lcu_fixed_encoding_thresholds(&make_grid(PHI_MAX, d)?, t, EPS)?;
        c.rel(&format!("a_max_lcu({d})"), th.a_max, a_max, 1e-3);
        c.rel(&format!("a_rz_lcu({d})"), th.a_rz, a_rz, 1e-3);
    }
    for d in primes_to(23) {
        let fav = lcu_fixed_encoding_thresholds(&make_grid(PHI_MAX, d)?, t, EPS)?.favorable();
        c.expect(fav == (d <= 19), format!("d = {d}: favorable = {fav}"));
    }
    c.done()
}

fn suites(names: &[&str]) -> Outcome {
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let reports = run_suites(&names, &VerifyOptions::default())?;
    Ok(reports
        .into_iter()
        .filter(|r| !r.passed)
        .map(|r| format!("{}: {} (max error {:e})", r.suite, r.detail, r.max_error))
        .collect())
}

fn decomposition_oracles() -> Outcome {
    suites(&["trotter-schedule", "qubit-trotter", "select-schedule", "prep-schedule", "projector-diag"])
}

fn coefficient_oracles() -> Outcome {
    suites(&["dft-oracle", "sd-census"])
}

fn partial_sums() -> Outcome {
    suites(&["partial-sums"])
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("product-formula break-even thresholds", pf_threshold_values),
        ("qubit LCU T-count formula", qubit_lcu_formula),
        ("fixed-encoding LCU thresholds at t = 0.1", lcu_table),
        ("end-to-end ratios at t = 0.1", ratios_short_time),
        ("end-to-end ratios at t = 3000", ratios_long_time),
        ("code-switch budgets", switch_budgets),
        ("fixed-encoding LCU thresholds at t = 3000", fixed_encoding_long_time),
        ("decomposition oracle suite", decomposition_oracles),
        ("coefficient oracle suite", coefficient_oracles),
        ("closed-form partial sums", partial_sums),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let problems = run().unwrap_or_else(|e| vec![format!("error: {e}")]);
        let secs = start.elapsed().as_secs_f64();
        let tag = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {:>2}: {name} ({secs:.2}s)", i + 1);
        for p in &problems {
            println!("         {p}");
        }
        if !problems.is_empty() {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
