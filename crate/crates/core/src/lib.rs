//! Gaussian vacuum states of a quantum oscillator and the saturated
//! Schrödinger uncertainty relation as an equilibrium condition between an
//! object and a quantum thermostat.
//!
//! * [`oscillator`]: constants, the thermal argument `x = ħω/2k_BT`, stable `coth`/`csch`
//! * [`bogolyubov`]: `(τ, φ)` parameters, `(u, v)` and the temperature map
//! * [`vacuum`]: variances, covariance, wavefunction and energy balance
//! * [`thermo`]: effective temperature, influence `𝕁`, zeroth-law residuals
//! * [`oracle`]: Fock-space and quadrature verification
//! * [`sweep`], [`verify`]: the tabulation and verification behind the CLI

pub mod bogolyubov;
pub mod error;
pub mod oracle;
pub mod oscillator;
pub mod sweep;
pub mod thermo;
pub mod vacuum;
pub mod verify;

pub use bogolyubov::{classify, tau_from_temperature, uv_from_params, SqueezeParams, StateClass, UvPair};
pub use error::{Error, Result};
pub use oscillator::{stable_coth, stable_csch, thermal_argument, OscillatorConfig, PhysicalConstants, ThermalContext};
pub use vacuum::{state_from_params, state_from_temperature, EnergyBalance, GaussianVacuumState};
