//! The verification suites behind `gaussvac verify`.
//!
//! Each check evaluates one identity over a fixed set of cases and records the
//! worst residual against its tolerance. Checks are independent and run in
//! parallel; the report keeps them in declaration order.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bogolyubov::{tau_from_argument, uv_from_params, SqueezeParams, StateClass};
use crate::error::{Error, Result};
use crate::oracle::fock::{self, FockWorkspace, DEFAULT_DIM};
use crate::oracle::grid::{grid_expectations, hamiltonian_kernel_residual, PositionGrid};
use crate::oscillator::{stable_coth, stable_csch, ThermalContext};
use crate::thermo;
use crate::vacuum::{state_from_params, state_from_temperature, GaussianVacuumState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Analytic,
    Fock,
    Quadrature,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "analytic" => Ok(Suite::Analytic),
            "fock" => Ok(Suite::Fock),
            "quadrature" => Ok(Suite::Quadrature),
            other => Err(Error::Config(format!("unknown suite '{other}' (expected all|analytic|fock|quadrature)"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Analytic => "analytic",
            Suite::Fock => "fock",
            Suite::Quadrature => "quadrature",
        })
    }
}

/// Whether the measured value must stay below or above the tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    AtMost,
    AtLeast,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub dim: usize,
    /// Replaces every upper-bound tolerance. Lower bounds (negative controls)
    /// keep their own thresholds.
    pub tol_override: Option<f64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { dim: DEFAULT_DIM, tol_override: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: &'static str,
    pub cases: usize,
    /// Worst residual for an upper bound, smallest value for a lower bound.
    pub value: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub passed: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub dim: usize,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn cases(&self) -> usize {
        self.checks.iter().map(|c| c.cases).sum()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}  (fock dim {})", self.suite, self.dim)?;
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let op = match c.bound {
                Bound::AtMost => "<=",
                Bound::AtLeast => ">=",
            };
            write!(
                f,
                "  {status}  {:<10} {:<34} cases {:>5}  value {:>10.3e} {op} {:.1e}",
                c.suite.to_string(),
                c.name,
                c.cases,
                c.value,
                c.tolerance
            )?;
            if let Some(e) = &c.error {
                write!(f, "  [{e}]")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} checks, {} cases, {} failed: {}",
            self.checks.len(),
            self.cases(),
            failed,
            if self.passed { "OK" } else { "FAILED" }
        )
    }
}

struct Measurement {
    cases: usize,
    value: f64,
}

impl Measurement {
    fn worst(values: impl IntoIterator<Item = f64>) -> Self {
        let mut cases = 0;
        let mut value = 0.0f64;
        for v in values {
            cases += 1;
            // NaN propagates so a broken case can never pass
            value = if v.is_nan() || value.is_nan() { f64::NAN } else { value.max(v) };
        }
        Self { cases, value }
    }

    fn least(values: impl IntoIterator<Item = f64>) -> Self {
        let mut cases = 0;
        let mut value = f64::INFINITY;
        for v in values {
            cases += 1;
            value = if v.is_nan() || value.is_nan() { f64::NAN } else { value.min(v) };
        }
        Self { cases, value }
    }
}

type Runner = fn(&VerifyOptions) -> Result<Measurement>;

struct Check {
    suite: Suite,
    name: &'static str,
    tolerance: f64,
    bound: Bound,
    run: Runner,
}

const fn at_most(suite: Suite, name: &'static str, tolerance: f64, run: Runner) -> Check {
    Check { suite, name, tolerance, bound: Bound::AtMost, run }
}

const fn at_least(suite: Suite, name: &'static str, tolerance: f64, run: Runner) -> Check {
    Check { suite, name, tolerance, bound: Bound::AtLeast, run }
}

const CHECKS: &[Check] = &[
    at_most(Suite::Analytic, "hyperbolic_identity", 1e-12, hyperbolic_identity),
    at_most(Suite::Analytic, "canonicity", 1e-12, canonicity),
    at_most(Suite::Analytic, "tau_round_trip", 1e-10, tau_round_trip),
    at_most(Suite::Analytic, "schrodinger_saturation", 1e-12, schrodinger_saturation),
    at_most(Suite::Analytic, "scs_heisenberg_saturation", 1e-12, scs_saturation),
    at_most(Suite::Analytic, "scs_zero_covariance", 0.0, scs_zero_covariance),
    at_most(Suite::Analytic, "energy_balance", 1e-12, energy_balance),
    at_most(Suite::Analytic, "zeroth_law_equal_temperatures", 1e-12, zeroth_law_diagonal),
    at_least(Suite::Analytic, "zeroth_law_unequal_temperatures", 1e-6, zeroth_law_off_diagonal),
    at_most(Suite::Analytic, "high_t_asymptote", 1e-5, high_t_asymptote),
    at_most(Suite::Analytic, "non_asymptotic_deviation", 1e-9, non_asymptotic_deviation),
    at_most(Suite::Analytic, "lorentz_invariant", 1e-9, lorentz_invariant),
    at_most(Suite::Analytic, "beta_term_cold_limit", 1e-12, beta_cold_limit),
    at_most(Suite::Analytic, "beta_term_hot_limit", 2e-4, beta_hot_limit),
    at_most(Suite::Analytic, "lorentz_factor_product", 1e-14, lorentz_factor_product),
    at_most(Suite::Analytic, "scs_invariant_det", 1e-12, scs_invariant_det),
    at_most(Suite::Analytic, "influence_quadrature_sum", 1e-12, influence_quadrature),
    at_most(Suite::Analytic, "temperature_consistency", 1e-12, temperature_consistency),
    at_most(Suite::Fock, "density_trace", 1e-12, density_trace),
    at_most(Suite::Fock, "canonical_commutator_interior", 1e-12, fock_commutator),
    at_most(Suite::Fock, "park_determinant", 1e-8, park_determinant),
    at_most(Suite::Fock, "park_cross_traces", 1e-8, park_cross_traces),
    at_most(Suite::Fock, "thermal_variances", 1e-8, thermal_variances),
    at_most(Suite::Fock, "renormalized_operator_pinning", 1e-8, renormalized_pinning),
    at_most(Suite::Fock, "commutation_rule", 1e-10, commutation_rule),
    at_least(Suite::Fock, "commutation_negative_control", 0.1, commutation_negative_control),
    at_most(Suite::Fock, "truncation_convergence", 1e-12, truncation_convergence),
    at_most(Suite::Quadrature, "grid_variances", 1e-8, grid_variances),
    at_most(Suite::Quadrature, "grid_normalization", 1e-10, grid_normalization),
    at_most(Suite::Quadrature, "hamiltonian_kernel", 1e-5, hamiltonian_kernel),
];

pub fn run(suite: Suite, opts: &VerifyOptions) -> VerifyReport {
    let checks: Vec<CheckResult> = CHECKS
        .par_iter()
        .filter(|c| suite == Suite::All || c.suite == suite)
        .map(|c| evaluate(c, opts))
        .collect();
    let passed = checks.iter().all(|c| c.passed);
    VerifyReport { suite, dim: opts.dim, checks, passed }
}

fn evaluate(check: &Check, opts: &VerifyOptions) -> CheckResult {
    let tolerance = match (check.bound, opts.tol_override) {
        (Bound::AtMost, Some(t)) => t,
        _ => check.tolerance,
    };
    let (cases, value, error) = match (check.run)(opts) {
        Ok(m) => (m.cases, m.value, None),
        Err(e) => (0, f64::NAN, Some(e.to_string())),
    };
    let passed = error.is_none()
        && cases > 0
        && match check.bound {
            Bound::AtMost => value <= tolerance,
            Bound::AtLeast => value >= tolerance,
        };
    CheckResult { suite: check.suite, name: check.name, cases, value, tolerance, bound: check.bound, passed, error }
}

/// `n` points spaced evenly in `ln x` over `[lo, hi]`.
fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect()
}

/// The 50×50 `(τ, φ)` grid with `τ ∈ [0, 3]`, `φ ∈ [0, 2π)`.
pub fn tau_phi_grid() -> Vec<SqueezeParams> {
    let n = 50;
    (0..n)
        .flat_map(|i| {
            (0..n).map(move |j| {
                let tau = 3.0 * i as f64 / (n - 1) as f64;
                let phi = TAU * j as f64 / n as f64;
                SqueezeParams::new(tau, phi).expect("finite grid parameters")
            })
        })
        .collect()
}

fn natural_state(p: SqueezeParams) -> Result<GaussianVacuumState> {
    state_from_params(p, 1.0, 1.0)
}

fn at_x(x: f64) -> Result<ThermalContext> {
    ThermalContext::natural_from_argument(x)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn hyperbolic_identity(_: &VerifyOptions) -> Result<Measurement> {
    let mut out = Vec::new();
    for x in log_grid(1e-8, 700.0, 400) {
        let (c, s) = (stable_coth(x)?, stable_csch(x)?);
        // relative to the size of the terms, which grow as 1/x²
        out.push((c * c - s * s - 1.0).abs() / (c * c));
    }
    Ok(Measurement::worst(out))
}

fn canonicity(_: &VerifyOptions) -> Result<Measurement> {
    Ok(Measurement::worst(tau_phi_grid().iter().map(|p| (uv_from_params(p).canonicity() - 1.0).abs())))
}

fn tau_round_trip(_: &VerifyOptions) -> Result<Measurement> {
    let mut out = Vec::new();
    for x in log_grid(0.05, 20.0, 200) {
        let tau = tau_from_argument(x)?;
        out.push(rel((2.0 * tau).cosh(), stable_coth(x)?));
        out.push(rel((2.0 * tau).sinh(), stable_csch(x)?));
    }
    Ok(Measurement::worst(out))
}

fn schrodinger_saturation(_: &VerifyOptions) -> Result<Measurement> {
    let mut out = Vec::new();
    for p in tau_phi_grid() {
        out.push(natural_state(p)?.schrodinger_relative_residual());
    }
    Ok(Measurement::worst(out))
}

fn scs_states() -> Result<Vec<GaussianVacuumState>> {
    let mut states = Vec::new();
    for i in 0..=100 {
        let tau = 5.0 * i as f64 / 100.0;
        for k in 0..4 {
            states.push(natural_state(SqueezeParams::new(tau, k as f64 * FRAC_PI_2)?)?);
        }
    }
    Ok(states)
}

fn scs_saturation(_: &VerifyOptions) -> Result<Measurement> {
    Ok(Measurement::worst(scs_states()?.iter().map(|s| rel(s.up_product(), 0.5 * s.hbar()))))
}

fn scs_zero_covariance(_: &VerifyOptions) -> Result<Measurement> {
    Ok(Measurement::worst(scs_states()?.iter().map(|s| s.cov().abs())))
}

fn energy_balance(_: &VerifyOptions) -> Result<Measurement> {
    let mut out = Vec::new();
    for p in tau_phi_grid() {
        let s = natural_state(p)?;
        out.push(s.energy_balance().relative_residual(0.5 * s.hbar() * s.omega()));
    }
    Ok(Measurement::worst(out))
}

/// `T_i = 50 i / 40` for `i = 1..=40`.
pub fn zeroth_law_temperatures() -> Vec<f64> {
    (1..=40).map(|i| 50.0 * i as f64 / 40.0).collect()
}

fn zeroth_law_residuals(diagonal: bool) -> Result<Vec<f64>> {
    let template = ThermalContext::natural(1.0)?;
    let ts = zeroth_law_temperatures();
    let mut out = Vec::new();
    for (i, &t) in ts.iter().enumerate() {
        for (j, &t0) in ts.iter().enumerate() {
            if (i == j) == diagonal {
                out.push(thermo::zeroth_law_report(t, t0, &template)?.residual.abs());
            }
        }
    }
    Ok(out)
}

fn zeroth_law_diagonal(_: &VerifyOptions) -> Result<Measurement> {
    Ok(Measurement::worst(zeroth_law_residuals(true)?))
}

fn zeroth_law_off_diagonal(_: &VerifyOptions) -> Result<Measurement> {
    Ok(Measurement::least(zeroth_law_residuals(false)?))
}

fn high_t_asymptote(_: &VerifyOptions) -> Result<Measurement> {
    let t = 100.0;
    let estimate = thermo::high_t_temperature_estimate(&ThermalContext::natural(t)?)?;
    Ok(Measurement::worst([rel(estimate, t)]))
}

fn non_asymptotic_deviation(_: &VerifyOptions) -> Result<Measurement> {
    let estimate = thermo::high_t_temperature_estimate(&ThermalContext::natural(1.0)?)?;
    // 0.5 coth(0.5) − 1
    Ok(Measurement::worst([(estimate - 1.0 - 0.08197670686932642).abs()]))
}

fn lorentz_invariant(_: &VerifyOptions) -> Result<Measurement> {
    let mut out = Vec::new();
    for x in log_grid(0.01, 350.0, 500) {
        out.push(rel(thermo::lorentz_invariant(&at_x(x)?)?, 0.25));
    }
    Ok(Measurement::worst(out))
}

fn beta_cold_limit(_: &VerifyOptions) -> Result<Measurement> {
    Ok(Measurement::worst([(thermo::lorentz_factors(&at_x(350.0)?)?.beta_term - 1.0).abs()]))
}

fn beta_hot_limit(_: &VerifyOptions) -> Result<Measurement> {
    Ok(Measurement::worst([thermo::lorentz_factors(&at_x(1e-4)?)?.beta_term.abs()]))
}

fn lorentz_factor_product(_: &VerifyOptions) -> Result<Measurement> {
    let mut out = Vec::new();
    for x in log_grid(1e-4, 350.0, 200) {
        let f = thermo::lorentz_factors(&at_x(x)?)?;
        out.push((f.beta_term * f.gamma_term - 1.0).abs());
    }
    Ok(Measurement::worst(out))
}

fn scs_invariant_det(_: &VerifyOptions) -> Result<Measurement> {
    let mut out = Vec::new();
    for x in log_grid(0.01, 350.0, 200) {
        out.push(rel(thermo::scs_invariant_det(&at_x(x)?)?, 0.25));
    }
    Ok(Measurement::worst(out))
}

fn influence_quadrature(_: &VerifyOptions) -> Result<Measurement> {
    let mut out = Vec::new();
    for x in log_grid(0.01, 350.0, 200) {
        out.push(thermo::influence_measure(&at_x(x)?)?.quadrature_defect().abs());
    }
    Ok(Measurement::worst(out))
}

/// `(ω/k_B)·Δq Δp`, `(ω/k_B)·𝕁`, `T_eff` and `ε_P/k_B` of the correlated state
/// must all coincide.
fn temperature_consistency(_: &VerifyOptions) -> Result<Measurement> {
    let mut out = Vec::new();
    for i in 0..=50 {
        let ctx = ThermalContext::natural(i as f64)?;
        let scale = ctx.omega() / ctx.k_boltzmann();
        let t_eff = thermo::effective_temperature(&ctx)?.value;
        let from_state = scale * state_from_temperature(&ctx, StateClass::Ccs)?.up_product();
        let from_influence = scale * thermo::influence_measure(&ctx)?.total;
        let from_planck = thermo::planck_energy(&ctx)? / ctx.k_boltzmann();
        out.extend([rel(from_state, t_eff), rel(from_influence, t_eff), rel(from_planck, t_eff)]);
    }
    Ok(Measurement::worst(out))
}

/// Thermal arguments used by the Fock checks.
pub const FOCK_ARGUMENTS: [f64; 5] = [0.3, 0.5, 1.0, 2.0, 5.0];

fn workspace(opts: &VerifyOptions) -> Result<FockWorkspace> {
    fock::build_workspace(opts.dim, 1.0, 1.0)
}

fn density_trace(opts: &VerifyOptions) -> Result<Measurement> {
    let ws = workspace(opts)?;
    let mut out = Vec::new();
    for x in FOCK_ARGUMENTS {
        out.push((fock::thermal_density(&ws, &at_x(x)?)?.trace() - 1.0).abs());
    }
    Ok(Measurement::worst(out))
}

fn fock_commutator(opts: &VerifyOptions) -> Result<Measurement> {
    Ok(Measurement::worst([workspace(opts)?.commutator_residual()]))
}

fn park_determinant(opts: &VerifyOptions) -> Result<Measurement> {
    let ws = workspace(opts)?;
    let mut out = Vec::new();
    for x in FOCK_ARGUMENTS {
        out.push((fock::park_determinant(&ws, &at_x(x)?)? - 0.25).abs());
    }
    Ok(Measurement::worst(out))
}

fn park_cross_traces(opts: &VerifyOptions) -> Result<Measurement> {
    let ws = workspace(opts)?;
    let mut out = Vec::new();
    for x in FOCK_ARGUMENTS {
        let t = fock::park_traces(&ws, &at_x(x)?)?;
        let expected = 0.5 * stable_csch(x)?;
        out.push((t.q_cross - expected).abs());
        out.push((t.p_cross - expected).abs());
    }
    Ok(Measurement::worst(out))
}

fn thermal_variances(opts: &VerifyOptions) -> Result<Measurement> {
    let ws = workspace(opts)?;
    let mut out = Vec::new();
    for x in FOCK_ARGUMENTS {
        let t = fock::park_traces(&ws, &at_x(x)?)?;
        let expected = 0.5 * stable_coth(x)?;
        out.push((t.q_sq - expected).abs());
        out.push((t.p_sq - expected).abs());
    }
    Ok(Measurement::worst(out))
}

fn renormalized_pinning(opts: &VerifyOptions) -> Result<Measurement> {
    let ws = workspace(opts)?;
    let mut out = Vec::new();
    for x in FOCK_ARGUMENTS {
        let rho = fock::thermal_density(&ws, &at_x(x)?)?;
        let (p_t, q_t) = fock::renormalized_operators(&ws, rho.epsilon);
        let s = &rho.sqrt_matrix;
        for (op, renorm) in [(&ws.q_op, &q_t), (&ws.p_op, &p_t)] {
            let op_s = op * s;
            let split = fock::trace_of_product(&op_s, &op_s);
            let moved = fock::trace_of_product(&(op * renorm), &rho.matrix);
            out.push(rel(moved, split));
        }
    }
    Ok(Measurement::worst(out))
}

fn commutation_rule(opts: &VerifyOptions) -> Result<Measurement> {
    let ws = workspace(opts)?;
    let r = fock::commutation_residual(&ws, &at_x(0.5)?)?;
    Ok(Measurement::worst([r.unwrap_or(f64::NAN)]))
}

fn commutation_negative_control(opts: &VerifyOptions) -> Result<Measurement> {
    let ws = workspace(opts)?;
    let r = fock::commutation_residual_with_exponent(&ws, &at_x(0.5)?, 0.0)?;
    Ok(Measurement::least([r.unwrap_or(f64::NAN)]))
}

/// Dimensions of the truncation study.
pub const TRUNCATION_DIMS: [usize; 4] = [32, 64, 128, 256];

/// `|det − ħ²/4|` at `x = 0.5` for each of [`TRUNCATION_DIMS`].
pub fn truncation_errors() -> Result<Vec<f64>> {
    let ctx = at_x(0.5)?;
    TRUNCATION_DIMS
        .iter()
        .map(|&d| Ok((fock::park_determinant(&fock::build_workspace(d, 1.0, 1.0)?, &ctx)? - 0.25).abs()))
        .collect()
}

/// Largest increase of the determinant error from one dimension to the next.
fn truncation_convergence(_: &VerifyOptions) -> Result<Measurement> {
    let errors = truncation_errors()?;
    Ok(Measurement::worst(errors.windows(2).map(|w| (w[1] - w[0]).max(0.0))))
}

/// Twenty states covering the thermal correlated and squeezed families, the
/// cold vacuum and general phases.
pub fn quadrature_states() -> Result<Vec<GaussianVacuumState>> {
    let mut states = Vec::new();
    for x in [0.3, 0.5, 1.0, 3.0] {
        states.push(state_from_temperature(&at_x(x)?, StateClass::Ccs)?);
    }
    for tau in [0.25, 0.5, 1.0] {
        states.push(natural_state(SqueezeParams::new(tau, 0.0)?)?);
    }
    states.push(natural_state(SqueezeParams::cold())?);
    for tau in [0.2, 0.45, 0.7, 0.95] {
        for phi in [0.37, FRAC_PI_4 + 0.6, PI - 0.9] {
            states.push(natural_state(SqueezeParams::new(tau, phi)?)?);
        }
    }
    Ok(states)
}

fn grid_variances(_: &VerifyOptions) -> Result<Measurement> {
    let mut out = Vec::new();
    for s in quadrature_states()? {
        let g = grid_expectations(&s, &PositionGrid::for_state(&s))?;
        out.push(rel(g.var_q, s.var_q()));
        out.push(rel(g.var_p, s.var_p()));
        out.push((g.cov - s.cov()).abs() / s.cov().abs().max(0.5 * s.hbar()));
    }
    Ok(Measurement::worst(out))
}

fn grid_normalization(_: &VerifyOptions) -> Result<Measurement> {
    let mut out = Vec::new();
    for s in quadrature_states()? {
        out.push((grid_expectations(&s, &PositionGrid::for_state(&s))?.norm - 1.0).abs());
    }
    Ok(Measurement::worst(out))
}

fn hamiltonian_kernel(_: &VerifyOptions) -> Result<Measurement> {
    let mut out = Vec::new();
    for s in quadrature_states()? {
        out.push(hamiltonian_kernel_residual(&s, &PositionGrid::for_state(&s))?);
    }
    Ok(Measurement::worst(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("fock".parse::<Suite>().unwrap(), Suite::Fock);
        assert!("everything".parse::<Suite>().is_err());
        assert_eq!(Suite::Quadrature.to_string(), "quadrature");
    }

    #[test]
    fn quadrature_state_set() {
        let states = quadrature_states().unwrap();
        assert_eq!(states.len(), 20);
        let ccs = states.iter().filter(|s| s.classify(1e-9) == StateClass::Ccs).count();
        let scs = states.iter().filter(|s| s.classify(1e-9) == StateClass::Scs).count();
        assert_eq!((ccs, scs), (4, 3));
    }

    #[test]
    fn analytic_suite_passes() {
        let report = run(Suite::Analytic, &VerifyOptions::default());
        assert!(report.passed, "{report}");
        assert!(report.checks.iter().all(|c| c.suite == Suite::Analytic));
    }

    #[test]
    fn impossible_tolerance_fails_upper_bounds_only() {
        let opts = VerifyOptions { tol_override: Some(1e-300), ..Default::default() };
        let report = run(Suite::Analytic, &opts);
        assert!(!report.passed);
        let control = report.checks.iter().find(|c| c.name == "zeroth_law_unequal_temperatures").unwrap();
        assert!(control.passed);
        assert_eq!(control.tolerance, 1e-6);
    }

    #[test]
    fn undersized_basis_is_reported_not_panicked() {
        let opts = VerifyOptions { dim: 16, tol_override: None };
        let report = run(Suite::Fock, &opts);
        assert!(!report.passed);
        let det = report.checks.iter().find(|c| c.name == "park_determinant").unwrap();
        assert!(det.error.as_deref().unwrap().contains("truncation"));
    }
}
