//! Temperature sweeps over thermal squeezed or correlated states.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::bogolyubov::StateClass;
use crate::error::{Error, Result};
use crate::oscillator::{OscillatorConfig, PhysicalConstants, ThermalContext};
use crate::thermo::{effective_temperature, influence_measure, planck_energy};
use crate::vacuum::state_from_temperature;

/// CSV column order, which is also the JSON key order of a row.
pub const COLUMNS: [&str; 12] = [
    "T",
    "x",
    "tau",
    "var_q",
    "var_p",
    "cov",
    "up_product",
    "influence_J",
    "planck_energy",
    "t_effective",
    "schrodinger_residual",
    "zeroth_residual",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub t_min: f64,
    pub t_max: f64,
    pub points: usize,
    pub spacing: Spacing,
    pub omega: f64,
    pub hbar: f64,
    pub k_b: f64,
    pub class: StateClass,
}

impl SweepConfig {
    pub fn natural(t_min: f64, t_max: f64, points: usize, class: StateClass) -> Self {
        Self { t_min, t_max, points, spacing: Spacing::Linear, omega: 1.0, hbar: 1.0, k_b: 1.0, class }
    }
}

/// One tabulated temperature. `x` is infinite at `T = 0`; it serializes as
/// `inf` in CSV and `null` in JSON.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    #[serde(rename = "T")]
    pub t: f64,
    pub x: f64,
    pub tau: f64,
    pub var_q: f64,
    pub var_p: f64,
    pub cov: f64,
    pub up_product: f64,
    #[serde(rename = "influence_J")]
    pub influence_j: f64,
    pub planck_energy: f64,
    pub t_effective: f64,
    pub schrodinger_residual: f64,
    /// `Δq Δp` of the swept state minus the influence `𝕁` of a thermostat at
    /// the same temperature.
    pub zeroth_residual: f64,
}

impl SweepRow {
    fn values(&self) -> [f64; 12] {
        [
            self.t,
            self.x,
            self.tau,
            self.var_q,
            self.var_p,
            self.cov,
            self.up_product,
            self.influence_j,
            self.planck_energy,
            self.t_effective,
            self.schrodinger_residual,
            self.zeroth_residual,
        ]
    }
}

#[derive(Debug, Clone, Serialize)]
struct Units {
    hbar: f64,
    k_b: f64,
    mass: f64,
}

#[derive(Debug, Clone, Serialize)]
struct Meta {
    units: Units,
    omega: f64,
    class: StateClass,
    version: &'static str,
}

#[derive(Debug, Clone, Serialize)]
struct SweepDocument<'a> {
    meta: Meta,
    rows: &'a [SweepRow],
}

pub fn temperatures(cfg: &SweepConfig) -> Result<Vec<f64>> {
    let (lo, hi, n) = (cfg.t_min, cfg.t_max, cfg.points);
    if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || lo >= hi {
        return Err(Error::Config(format!("need 0 <= t_min < t_max, got t_min={lo}, t_max={hi}")));
    }
    if n < 2 {
        return Err(Error::Config(format!("need at least 2 points, got {n}")));
    }
    let last = (n - 1) as f64;
    let ts = match cfg.spacing {
        Spacing::Linear => (0..n)
            .map(|i| if i == n - 1 { hi } else { lo + (hi - lo) * (i as f64 / last) })
            .collect(),
        Spacing::Log => {
            if lo == 0.0 {
                return Err(Error::Config("log spacing needs t_min > 0".into()));
            }
            let (a, b) = (lo.ln(), hi.ln());
            (0..n)
                .map(|i| match i {
                    0 => lo,
                    _ if i == n - 1 => hi,
                    _ => (a + (b - a) * (i as f64 / last)).exp(),
                })
                .collect()
        }
    };
    Ok(ts)
}

pub fn sweep_row(ctx: &ThermalContext, class: StateClass) -> Result<SweepRow> {
    let state = state_from_temperature(ctx, class)?;
    let influence = influence_measure(ctx)?;
    let up = state.up_product();
    Ok(SweepRow {
        t: ctx.temperature(),
        x: ctx.x(),
        tau: state.params().tau(),
        var_q: state.var_q(),
        var_p: state.var_p(),
        cov: state.cov(),
        up_product: up,
        influence_j: influence.total,
        planck_energy: planck_energy(ctx)?,
        t_effective: effective_temperature(ctx)?.value,
        schrodinger_residual: state.schrodinger_residual(),
        zeroth_residual: up - influence.total,
    })
}

/// Rows are computed in parallel and returned in temperature order.
pub fn compute_rows(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    if !matches!(cfg.class, StateClass::Scs | StateClass::Ccs) {
        return Err(Error::Config(format!("sweeps support SCS or CCS, not {}", cfg.class)));
    }
    let constants = PhysicalConstants::new(cfg.hbar, cfg.k_b)?;
    let oscillator = OscillatorConfig::new(cfg.omega)?;
    temperatures(cfg)?
        .into_par_iter()
        .map(|t| sweep_row(&ThermalContext::new(t, constants, oscillator)?, cfg.class))
        .collect()
}

fn format_float(v: f64) -> String {
    if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v:.16e}")
    }
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(COLUMNS)?;
    for row in rows {
        w.write_record(row.values().map(format_float))?;
    }
    w.flush()
}

pub fn write_json<W: Write>(cfg: &SweepConfig, rows: &[SweepRow], mut out: W) -> std::io::Result<()> {
    let doc = SweepDocument {
        meta: Meta {
            units: Units { hbar: cfg.hbar, k_b: cfg.k_b, mass: OscillatorConfig::MASS },
            omega: cfg.omega,
            class: cfg.class,
            version: env!("CARGO_PKG_VERSION"),
        },
        rows,
    };
    serde_json::to_writer_pretty(&mut out, &doc)?;
    out.write_all(b"\n")?;
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn linear_grid_hits_endpoints() {
        let ts = temperatures(&SweepConfig::natural(0.0, 10.0, 11, StateClass::Ccs)).unwrap();
        assert_eq!(ts.len(), 11);
        assert_eq!(ts[0], 0.0);
        assert_eq!(ts[1], 1.0);
        assert_eq!(ts[10], 10.0);
    }

    #[test]
    fn log_grid() {
        let mut cfg = SweepConfig::natural(0.1, 100.0, 4, StateClass::Ccs);
        cfg.spacing = Spacing::Log;
        let ts = temperatures(&cfg).unwrap();
        assert_eq!(ts[0], 0.1);
        assert_relative_eq!(ts[1], 1.0, max_relative = 1e-14);
        assert_eq!(ts[3], 100.0);
        cfg.t_min = 0.0;
        assert!(temperatures(&cfg).is_err());
    }

    #[test]
    fn invalid_ranges() {
        for (lo, hi, n) in [(1.0, 1.0, 5), (2.0, 1.0, 5), (-1.0, 1.0, 5), (0.0, 1.0, 1), (0.0, f64::NAN, 3)] {
            assert!(temperatures(&SweepConfig::natural(lo, hi, n, StateClass::Ccs)).is_err());
        }
    }

    #[test]
    fn correlated_rows() {
        let rows = compute_rows(&SweepConfig::natural(0.0, 10.0, 11, StateClass::Ccs)).unwrap();
        assert_eq!(rows[0].cov, 0.0);
        assert_eq!(rows[0].up_product, 0.5);
        assert!(rows[0].x.is_infinite());
        assert_relative_eq!(rows[1].up_product, 1.0819767068693264, max_relative = 1e-13);
        assert!(rows.iter().all(|r| r.zeroth_residual.abs() < 1e-12));
    }

    #[test]
    fn squeezed_rows_stay_saturated() {
        let rows = compute_rows(&SweepConfig::natural(0.0, 10.0, 11, StateClass::Scs)).unwrap();
        for r in &rows {
            assert_relative_eq!(r.up_product, 0.5, max_relative = 1e-12);
            assert_eq!(r.cov, 0.0);
        }
    }

    #[test]
    fn csv_layout() {
        let rows = compute_rows(&SweepConfig::natural(0.0, 1.0, 2, StateClass::Ccs)).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(!text.contains('\r'));
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], COLUMNS.join(","));
        assert!(lines[1].starts_with("0.0000000000000000e0,inf,"));
        let t1: f64 = lines[2].split(',').next().unwrap().parse().unwrap();
        assert_eq!(t1, 1.0);
    }
}
