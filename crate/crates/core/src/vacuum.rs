//! Gaussian arbitrary-vacuum states of one oscillator mode.
//!
//! A state is fixed by its Bogolyubov parameters `(τ, φ)`. In coordinate
//! representation
//!
//! ```text
//! ψ(q) = [2π Δq²]^{-1/4} exp{ −q² (1 − iβ) / (4 Δq²) }
//! Δq² = (ħ/2ω)(cosh 2τ − sinh 2τ cos 2φ)
//! Δp² = (ħω/2)(cosh 2τ + sinh 2τ cos 2φ)
//! β   = sinh 2τ sin 2φ,      σ = ⟨½(p̂q̂ + q̂p̂)⟩ = ħβ/2
//! ```
//!
//! so that `Δq² Δp² = σ² + ħ²/4` for every `(τ, φ)`. Variances are closed
//! form; the wavefunction is exposed for the quadrature oracle.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bogolyubov::{self, SqueezeParams, StateClass};
use crate::error::{Error, Result};
use crate::oscillator::ThermalContext;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianVacuumState {
    params: SqueezeParams,
    omega: f64,
    hbar: f64,
    var_q: f64,
    var_p: f64,
    beta: f64,
    cov: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavefunctionSample {
    pub q: f64,
    pub value: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyBalance {
    pub mean_system: f64,
    pub mean_influence: f64,
    pub residual: f64,
}

impl EnergyBalance {
    /// Residual scaled by `max(|⟨H⟩|, ħω/2)`.
    pub fn relative_residual(&self, zero_point: f64) -> f64 {
        self.residual.abs() / self.mean_system.abs().max(zero_point)
    }
}

pub fn state_from_params(p: SqueezeParams, omega: f64, hbar: f64) -> Result<GaussianVacuumState> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::Domain(format!("omega must be finite and > 0, got {omega}")));
    }
    if !(hbar.is_finite() && hbar > 0.0) {
        return Err(Error::Domain(format!("hbar must be finite and > 0, got {hbar}")));
    }
    let two_tau = 2.0 * p.tau();
    let sinh2 = two_tau.sinh();
    let decay = (-two_tau).exp();
    let (sin_phi, cos_phi) = p.phase_sin_cos();
    // cosh 2τ ∓ sinh 2τ cos 2φ rewritten as sums of non-negative terms so
    // strongly squeezed quadratures keep full relative precision.
    let q_factor = decay + 2.0 * sinh2 * sin_phi * sin_phi;
    let p_factor = decay + 2.0 * sinh2 * cos_phi * cos_phi;
    let beta = sinh2 * p.sin_two_phi();
    Ok(GaussianVacuumState {
        params: p,
        omega,
        hbar,
        var_q: hbar / (2.0 * omega) * q_factor,
        var_p: hbar * omega / 2.0 * p_factor,
        beta,
        cov: 0.5 * hbar * beta,
    })
}

/// Thermal parametrization of a squeezed (`φ = 0`) or correlated (`φ = π/4`) state.
pub fn state_from_temperature(ctx: &ThermalContext, class: StateClass) -> Result<GaussianVacuumState> {
    let tau = bogolyubov::tau_from_temperature(ctx)?;
    let phi = match class {
        StateClass::Scs => 0.0,
        StateClass::Ccs => PI / 4.0,
        other => {
            return Err(Error::Domain(format!(
                "temperature parametrization is defined for SCS or CCS, not {other}"
            )))
        }
    };
    state_from_params(SqueezeParams::new(tau, phi)?, ctx.omega(), ctx.hbar())
}

impl GaussianVacuumState {
    pub fn params(&self) -> SqueezeParams {
        self.params
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn var_q(&self) -> f64 {
        self.var_q
    }

    pub fn var_p(&self) -> f64 {
        self.var_p
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn cov(&self) -> f64 {
        self.cov
    }

    pub fn classify(&self, tol: f64) -> StateClass {
        bogolyubov::classify(&self.params, tol)
    }

    /// Kinetic coefficient `cosh 2τ − sinh 2τ cos 2φ` of the system Hamiltonian.
    pub fn kinetic_coefficient(&self) -> f64 {
        self.var_q * 2.0 * self.omega / self.hbar
    }

    /// Potential coefficient `cosh 2τ + sinh 2τ cos 2φ` of the system Hamiltonian.
    pub fn potential_coefficient(&self) -> f64 {
        self.var_p * 2.0 / (self.hbar * self.omega)
    }

    pub fn wavefunction_eval(&self, q: f64) -> Complex64 {
        let norm = (2.0 * PI * self.var_q).powf(-0.25);
        let exponent = Complex64::new(-1.0, self.beta) * (q * q / (4.0 * self.var_q));
        norm * exponent.exp()
    }

    pub fn sample(&self, q: f64) -> WavefunctionSample {
        WavefunctionSample { q, value: self.wavefunction_eval(q) }
    }

    /// `⟨Ĥ_{τ,φ}⟩` from the kinetic and potential energies weighted by their
    /// Bogolyubov coefficients.
    pub fn mean_system_energy(&self) -> f64 {
        let kinetic = 0.5 * self.var_p;
        let potential = 0.5 * self.omega * self.omega * self.var_q;
        self.kinetic_coefficient() * kinetic + self.potential_coefficient() * potential
    }

    /// `⟨ω ĵ₀⟩ + ⟨ω σ̂_{τ,φ}⟩ = ωħ/2 + ωβσ`.
    pub fn mean_influence_energy(&self) -> f64 {
        self.omega * 0.5 * self.hbar + self.omega * self.beta * self.cov
    }

    pub fn energy_balance(&self) -> EnergyBalance {
        let mean_system = self.mean_system_energy();
        let mean_influence = self.mean_influence_energy();
        EnergyBalance { mean_system, mean_influence, residual: mean_system - mean_influence }
    }

    /// `Δq Δp`.
    pub fn up_product(&self) -> f64 {
        (self.var_q * self.var_p).sqrt()
    }

    /// `Δq² Δp² − σ² − ħ²/4`, evaluated with fused multiply-adds.
    pub fn schrodinger_residual(&self) -> f64 {
        let cov_sq = self.cov * self.cov;
        let cov_sq_err = self.cov.mul_add(self.cov, -cov_sq);
        let det = self.var_q.mul_add(self.var_p, -cov_sq) - cov_sq_err;
        det - 0.25 * self.hbar * self.hbar
    }

    /// [`schrodinger_residual`](Self::schrodinger_residual) relative to the
    /// saturation bound `σ² + ħ²/4`.
    pub fn schrodinger_relative_residual(&self) -> f64 {
        self.schrodinger_residual().abs() / (self.cov * self.cov + 0.25 * self.hbar * self.hbar)
    }

    /// Heisenberg product minus its bound, `Δq Δp − ħ/2`.
    pub fn heisenberg_excess(&self) -> f64 {
        self.up_product() - 0.5 * self.hbar
    }
}
