//! One function per subcommand, each producing a [`Table`].

use anyhow::Result;
use qudit_cost::endtoend::{compare, lcu_fixed_encoding_thresholds_with};
use qudit_cost::lcu::fixed_encoding_select_schedule;
use qudit_cost::scan::scan;
use qudit_cost::strategy::block_encoding_registry;
use qudit_cost::verify::{run_suites, SuiteReport, VerifyOptions};
use qudit_cost::{beta_closed_form, make_grid};

use crate::config::RunConfig;
use crate::table::Table;

pub const SCAN_COLUMNS: [&str; 13] = [
    "d",
    "n_b",
    "alpha_qb",
    "alpha_qd",
    "q_qb",
    "q_qd",
    "per_call_qb",
    "per_call_qd",
    "t_tot_qb",
    "t_tot_qd",
    "ratio",
    "delta_tot",
    "budget_per_switch",
];

pub fn pf_thresholds(cfg: &RunConfig) -> Result<Table> {
    let rows = scan(&cfg.dims()?, |d| cfg.synthesis.pf_thresholds(d, cfg.eps))?;
    let mut table = Table::new(&[
        "d",
        "n_b",
        "l_qb",
        "l_qd",
        "rotation_ratio",
        "a_max_pf",
        "a_rz_pf",
        "favorable",
    ]);
    for r in rows {
        table.push(vec![
            r.d.into(),
            r.n_b.into(),
            r.l_qb.into(),
            r.l_qd.into(),
            r.rotation_ratio().into(),
            r.a_max.into(),
            r.a_rz.into(),
            r.favorable().into(),
        ]);
    }
    Ok(table)
}

pub fn lcu_table(cfg: &RunConfig) -> Result<Table> {
    let rows = scan(&cfg.dims()?, |d| {
        let grid = make_grid(cfg.phi_max, d)?;
        let th = lcu_fixed_encoding_thresholds_with(&grid, cfg.t, cfg.eps, &cfg.synthesis)?;
        let select = fixed_encoding_select_schedule(&beta_closed_form(&grid)?)?;
        Ok((grid.n_b(), select.nontrivial_count(), th))
    })?;
    let mut table = Table::new(&[
        "d",
        "n_b",
        "rotations_per_call",
        "select_nontrivial",
        "q_qd",
        "t_tot_qb",
        "a_max_lcu",
        "a_rz_lcu",
        "favorable",
    ]);
    for (n_b, s, th) in rows {
        table.push(vec![
            th.d.into(),
            n_b.into(),
            th.rotations_per_call.into(),
            s.into(),
            th.q_qd.into(),
            th.t_tot_qb.into(),
            th.a_max.into(),
            th.a_rz.into(),
            th.favorable().into(),
        ]);
    }
    Ok(table)
}

pub fn scan_ratio(cfg: &RunConfig, baseline: &str, candidate: &str) -> Result<Table> {
    let registry = block_encoding_registry();
    let baseline = registry.get(baseline)?;
    let candidate = registry.get(candidate)?;
    let rows = scan(&cfg.dims()?, |d| {
        let grid = make_grid(cfg.phi_max, d)?;
        compare(baseline.as_ref(), candidate.as_ref(), &grid, cfg.t, cfg.eps, cfg.k, &cfg.synthesis)
    })?;
    let mut table = Table::new(&SCAN_COLUMNS);
    for r in rows {
        table.push(vec![
            r.d.into(),
            r.n_b.into(),
            r.alpha_qb.into(),
            r.alpha_qd.into(),
            r.q_qb.into(),
            r.q_qd.into(),
            r.per_call_qb.into(),
            r.per_call_qd.into(),
            r.t_tot_qb.into(),
            r.t_tot_qd.into(),
            r.ratio.into(),
            r.delta_tot.into(),
            r.budget_per_switch.into(),
        ]);
    }
    Ok(table)
}

pub fn verify(suites: &[String], opts: &VerifyOptions) -> Result<(Table, Vec<SuiteReport>)> {
    let reports = run_suites(suites, opts)?;
    let mut table = Table::new(&["suite", "passed", "cases", "max_error", "tolerance", "detail"]);
    for r in &reports {
        table.push(vec![
            r.suite.clone().into(),
            r.passed.into(),
            r.cases.into(),
            r.max_error.into(),
            r.tolerance.into(),
            r.detail.clone().into(),
        ]);
    }
    Ok((table, reports))
}
