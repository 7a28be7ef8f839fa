//! Thermodynamic-level quantities built on the thermal correlated states:
//! effective temperature, Planck energy, the holistic influence `𝕁`, the
//! zeroth-law comparison of object and environment, and the invariants that
//! distinguish squeezed from correlated states.

use serde::Serialize;

use crate::bogolyubov::StateClass;
use crate::error::{Error, Result};
use crate::oscillator::{stable_coth, stable_csch, stable_tanh, ThermalContext};
use crate::vacuum::state_from_temperature;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InfluenceMeasure {
    /// `𝕁 = (ħ/2) coth x`
    pub total: f64,
    /// `ħ/2`
    pub quantum_part: f64,
    /// `(ħ/2) csch x`, the covariance-driven contribution
    pub thermal_part: f64,
}

impl InfluenceMeasure {
    /// `(total² − quantum² − thermal²) / total²`
    pub fn quadrature_defect(&self) -> f64 {
        let t2 = self.total * self.total;
        (t2 - self.quantum_part * self.quantum_part - self.thermal_part * self.thermal_part) / t2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EffectiveTemperature {
    pub value: f64,
    pub kelvin_input: f64,
    pub minimum: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZerothLawReport {
    pub j_system: f64,
    pub j_environment: f64,
    /// `j_system − j_environment`
    pub residual: f64,
    pub t_eff_system: f64,
    pub t_eff_environment: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LorentzFactors {
    pub beta_term: f64,
    pub gamma_term: f64,
}

/// The identity `coth² x − csch² x = 1` evaluated literally, together with
/// the ratio `coth² x / csch² x` that only tends to 1 at high temperature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NaiveIdentity {
    pub residual: f64,
    pub high_t_ratio: f64,
}

pub fn effective_temperature(ctx: &ThermalContext) -> Result<EffectiveTemperature> {
    let minimum = ctx.hbar() * ctx.omega() / (2.0 * ctx.k_boltzmann());
    Ok(EffectiveTemperature {
        value: minimum * stable_coth(ctx.x())?,
        kelvin_input: ctx.temperature(),
        minimum,
    })
}

/// Mean thermal oscillator energy `(ħω/2) coth x`.
pub fn planck_energy(ctx: &ThermalContext) -> Result<f64> {
    Ok(0.5 * ctx.hbar() * ctx.omega() * stable_coth(ctx.x())?)
}

pub fn influence_measure(ctx: &ThermalContext) -> Result<InfluenceMeasure> {
    let half_hbar = 0.5 * ctx.hbar();
    Ok(InfluenceMeasure {
        total: half_hbar * stable_coth(ctx.x())?,
        quantum_part: half_hbar,
        thermal_part: half_hbar * stable_csch(ctx.x())?,
    })
}

/// Compares the response `Δq Δp` of a correlated state at `system_t` with the
/// influence `𝕁` of a thermostat at `env_t0`. Both temperatures share the
/// constants and oscillator of `template`.
pub fn zeroth_law_report(system_t: f64, env_t0: f64, template: &ThermalContext) -> Result<ZerothLawReport> {
    let system = template.at_temperature(system_t)?;
    let environment = template.at_temperature(env_t0)?;
    let j_system = state_from_temperature(&system, StateClass::Ccs)?.up_product();
    let j_environment = influence_measure(&environment)?.total;
    let to_temperature = template.omega() / template.k_boltzmann();
    Ok(ZerothLawReport {
        j_system,
        j_environment,
        residual: j_system - j_environment,
        t_eff_system: to_temperature * j_system,
        t_eff_environment: to_temperature * j_environment,
    })
}

/// `(ω/k_B)·Δq Δp` of the correlated state, which approaches `T` from above.
pub fn high_t_temperature_estimate(ctx: &ThermalContext) -> Result<f64> {
    if ctx.temperature() == 0.0 {
        return Err(Error::Domain("temperature estimate is undefined at T = 0".into()));
    }
    let up = state_from_temperature(ctx, StateClass::Ccs)?.up_product();
    Ok(ctx.omega() / ctx.k_boltzmann() * up)
}

/// `𝕁² − σ²` for the thermal correlated state, in product form.
pub fn lorentz_invariant(ctx: &ThermalContext) -> Result<f64> {
    let (sum, diff) = sum_and_difference(ctx.x())?;
    let half_hbar = 0.5 * ctx.hbar();
    Ok(half_hbar * half_hbar * diff * sum)
}

/// `(coth x + csch x, coth x − csch x)`. The difference equals `tanh(x/2)` and
/// is taken from there, since subtracting two terms of size `1/x` loses
/// `log₁₀(1/x²)` digits.
fn sum_and_difference(x: f64) -> Result<(f64, f64)> {
    Ok((stable_coth(x)? + stable_csch(x)?, stable_tanh(0.5 * x)?))
}

/// `β_term = 1 / coth x`, `γ_term = coth x`.
pub fn lorentz_factors(ctx: &ThermalContext) -> Result<LorentzFactors> {
    let coth = stable_coth(ctx.x())?;
    Ok(LorentzFactors { beta_term: 1.0 / coth, gamma_term: coth })
}

/// Determinant of `diag(coth x + csch x, coth x − csch x)` scaled by `(ħ/2)²`.
pub fn scs_invariant_det(ctx: &ThermalContext) -> Result<f64> {
    let (sum, diff) = sum_and_difference(ctx.x())?;
    let up0 = 0.5 * ctx.hbar();
    // squeezed states carry no p-q correlation, so the matrix is diagonal
    Ok(up0 * up0 * sum * diff)
}

pub fn naive_identity_residual(ctx: &ThermalContext) -> Result<NaiveIdentity> {
    let coth = stable_coth(ctx.x())?;
    let csch = stable_csch(ctx.x())?;
    Ok(NaiveIdentity {
        residual: coth * coth - csch * csch - 1.0,
        high_t_ratio: if csch == 0.0 { f64::INFINITY } else { (coth * coth) / (csch * csch) },
    })
}
