//! Physical constants, oscillator configuration, the dimensionless thermal
//! argument `x = ħω / (2 k_B T)` and overflow-safe hyperbolic kernels.
//!
//! Zero temperature is represented by `x = +∞` rather than an error, so the
//! cold-vacuum limit flows through every downstream formula unchanged.

use crate::error::{Error, Result};

/// Above this argument `coth` is 1 and `csch` is 0 to double precision.
pub const OVERFLOW_THRESHOLD: f64 = 350.0;

/// Below this argument the kernels switch to their Laurent series.
pub const SERIES_THRESHOLD: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    hbar: f64,
    k_boltzmann: f64,
}

impl PhysicalConstants {
    pub fn new(hbar: f64, k_boltzmann: f64) -> Result<Self> {
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::Domain(format!("hbar must be finite and > 0, got {hbar}")));
        }
        if !(k_boltzmann.is_finite() && k_boltzmann > 0.0) {
            return Err(Error::Domain(format!(
                "k_B must be finite and > 0, got {k_boltzmann}"
            )));
        }
        Ok(Self { hbar, k_boltzmann })
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn k_boltzmann(&self) -> f64 {
        self.k_boltzmann
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self { hbar: 1.0, k_boltzmann: 1.0 }
    }
}

/// A unit-mass oscillator mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorConfig {
    omega: f64,
}

impl OscillatorConfig {
    pub const MASS: f64 = 1.0;

    pub fn new(omega: f64) -> Result<Self> {
        if !(omega.is_finite() && omega > 0.0) {
            return Err(Error::Domain(format!("omega must be finite and > 0, got {omega}")));
        }
        Ok(Self { omega })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn mass(&self) -> f64 {
        Self::MASS
    }
}

impl Default for OscillatorConfig {
    fn default() -> Self {
        Self { omega: 1.0 }
    }
}

/// Returns `ħω / (2 k_B T)`, or `+∞` for `T = 0`.
pub fn thermal_argument(
    temperature: f64,
    constants: &PhysicalConstants,
    oscillator: &OscillatorConfig,
) -> Result<f64> {
    if !temperature.is_finite() {
        return Err(Error::Domain(format!("temperature must be finite, got {temperature}")));
    }
    if temperature < 0.0 {
        return Err(Error::Domain(format!("temperature must be >= 0, got {temperature}")));
    }
    if temperature == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(constants.hbar * oscillator.omega / (2.0 * constants.k_boltzmann * temperature))
}

/// Everything needed to evaluate a thermal quantity at one Kelvin temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalContext {
    pub constants: PhysicalConstants,
    pub oscillator: OscillatorConfig,
    temperature: f64,
    x: f64,
}

impl ThermalContext {
    pub fn new(
        temperature: f64,
        constants: PhysicalConstants,
        oscillator: OscillatorConfig,
    ) -> Result<Self> {
        let x = thermal_argument(temperature, &constants, &oscillator)?;
        Ok(Self { constants, oscillator, temperature, x })
    }

    /// Natural units `ħ = k_B = ω = 1`.
    pub fn natural(temperature: f64) -> Result<Self> {
        Self::new(temperature, PhysicalConstants::default(), OscillatorConfig::default())
    }

    /// Builds a context directly from the thermal argument; `x = +∞` maps to `T = 0`.
    pub fn from_argument(
        x: f64,
        constants: PhysicalConstants,
        oscillator: OscillatorConfig,
    ) -> Result<Self> {
        if x.is_nan() || x <= 0.0 {
            return Err(Error::Domain(format!("thermal argument must be > 0, got {x}")));
        }
        let temperature = if x.is_infinite() {
            0.0
        } else {
            constants.hbar * oscillator.omega / (2.0 * constants.k_boltzmann * x)
        };
        Ok(Self { constants, oscillator, temperature, x })
    }

    pub fn natural_from_argument(x: f64) -> Result<Self> {
        Self::from_argument(x, PhysicalConstants::default(), OscillatorConfig::default())
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn hbar(&self) -> f64 {
        self.constants.hbar
    }

    pub fn k_boltzmann(&self) -> f64 {
        self.constants.k_boltzmann
    }

    pub fn omega(&self) -> f64 {
        self.oscillator.omega
    }

    /// Same constants and oscillator at a different Kelvin temperature.
    pub fn at_temperature(&self, temperature: f64) -> Result<Self> {
        Self::new(temperature, self.constants, self.oscillator)
    }
}

fn check_positive(x: f64, name: &str) -> Result<()> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain(format!("{name} requires x > 0, got {x}")));
    }
    Ok(())
}

/// `coth(x)` for `x > 0`, including `x = +∞`.
pub fn stable_coth(x: f64) -> Result<f64> {
    check_positive(x, "coth")?;
    Ok(if x >= OVERFLOW_THRESHOLD {
        1.0
    } else if x < SERIES_THRESHOLD {
        let x2 = x * x;
        1.0 / x + x / 3.0 - x * x2 / 45.0
    } else {
        // coth x = 1 + 2 / (e^{2x} - 1)
        1.0 + 2.0 / (2.0 * x).exp_m1()
    })
}

/// `1 / sinh(x)` for `x > 0`, including `x = +∞`.
pub fn stable_csch(x: f64) -> Result<f64> {
    check_positive(x, "csch")?;
    Ok(if x >= OVERFLOW_THRESHOLD {
        0.0
    } else if x < SERIES_THRESHOLD {
        let x2 = x * x;
        1.0 / x - x / 6.0 + 7.0 * x * x2 / 360.0
    } else {
        // 2 e^{-x} / (1 - e^{-2x})
        -2.0 * (-x).exp() / (-2.0 * x).exp_m1()
    })
}

/// `tanh(x)` for `x > 0`, including `x = +∞`.
pub fn stable_tanh(x: f64) -> Result<f64> {
    check_positive(x, "tanh")?;
    Ok(if x >= OVERFLOW_THRESHOLD { 1.0 } else { x.tanh() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // Independent oracle: Laurent series summed to high order from the
    // Bernoulli-number coefficients, valid for |x| < π.
    fn coth_series(x: f64) -> f64 {
        // coth x = 1/x + Σ 2^{2n} B_{2n} x^{2n-1} / (2n)!
        let coeffs = [1.0 / 3.0, -1.0 / 45.0, 2.0 / 945.0, -1.0 / 4725.0, 2.0 / 93555.0];
        1.0 / x + coeffs.iter().enumerate().map(|(n, c)| c * x.powi(2 * n as i32 + 1)).sum::<f64>()
    }

    fn csch_series(x: f64) -> f64 {
        let coeffs = [-1.0 / 6.0, 7.0 / 360.0, -31.0 / 15120.0, 127.0 / 604800.0];
        1.0 / x + coeffs.iter().enumerate().map(|(n, c)| c * x.powi(2 * n as i32 + 1)).sum::<f64>()
    }

    #[test]
    fn thermal_argument_examples() {
        let c = PhysicalConstants::default();
        let o = OscillatorConfig::default();
        assert_eq!(thermal_argument(1.0, &c, &o).unwrap(), 0.5);
        assert_eq!(thermal_argument(0.0, &c, &o).unwrap(), f64::INFINITY);
        let o2 = OscillatorConfig::new(2.0).unwrap();
        assert_eq!(thermal_argument(0.25, &c, &o2).unwrap(), 4.0);
    }

    #[test]
    fn thermal_argument_rejects_bad_input() {
        let c = PhysicalConstants::default();
        let o = OscillatorConfig::default();
        assert!(matches!(thermal_argument(-1.0, &c, &o), Err(Error::Domain(_))));
        assert!(matches!(thermal_argument(f64::NAN, &c, &o), Err(Error::Domain(_))));
        assert!(matches!(thermal_argument(f64::INFINITY, &c, &o), Err(Error::Domain(_))));
        assert!(PhysicalConstants::new(0.0, 1.0).is_err());
        assert!(PhysicalConstants::new(1.0, f64::NAN).is_err());
        assert!(OscillatorConfig::new(-2.0).is_err());
    }

    #[test]
    fn argument_times_temperature_is_constant() {
        let c = PhysicalConstants::new(1.3, 0.7).unwrap();
        let o = OscillatorConfig::new(2.9).unwrap();
        let expected = 1.3 * 2.9 / (2.0 * 0.7);
        for i in 1..200 {
            let t = 0.037 * i as f64;
            let x = thermal_argument(t, &c, &o).unwrap();
            assert_relative_eq!(x * t, expected, max_relative = 1e-14);
        }
    }

    #[test]
    fn context_round_trips_through_argument() {
        let ctx = ThermalContext::natural_from_argument(0.5).unwrap();
        assert_eq!(ctx.temperature(), 1.0);
        let cold = ThermalContext::natural_from_argument(f64::INFINITY).unwrap();
        assert_eq!(cold.temperature(), 0.0);
        assert!(ThermalContext::natural_from_argument(0.0).is_err());
    }

    #[test]
    fn coth_examples() {
        // mpmath, 40 digits
        assert_relative_eq!(stable_coth(1.0).unwrap(), 1.3130352854993313, max_relative = 1e-15);
        assert_eq!(stable_coth(f64::INFINITY).unwrap(), 1.0);
        let small = stable_coth(1e-8).unwrap();
        assert_relative_eq!(small, coth_series(1e-8), max_relative = 1e-12);
        assert_relative_eq!(small, 1e8 + 3.333e-9, max_relative = 1e-12);
    }

    #[test]
    fn csch_examples() {
        assert_relative_eq!(stable_csch(1.0).unwrap(), 0.8509181282393215, max_relative = 1e-15);
        assert_eq!(stable_csch(f64::INFINITY).unwrap(), 0.0);
        assert_eq!(stable_csch(OVERFLOW_THRESHOLD).unwrap(), 0.0);
        assert_relative_eq!(stable_csch(1e-8).unwrap(), 1e8 - 1e-8 / 6.0, max_relative = 1e-12);
    }

    #[test]
    fn kernels_reject_nonpositive() {
        for bad in [0.0, -1.0, f64::NAN, f64::NEG_INFINITY] {
            assert!(stable_coth(bad).is_err());
            assert!(stable_csch(bad).is_err());
            assert!(stable_tanh(bad).is_err());
        }
    }

    #[test]
    fn kernels_agree_with_series_across_switchover() {
        for &x in &[1e-6, 5e-5, 9.9e-5, 1e-4, 1.1e-4, 1e-3, 1e-2, 0.1] {
            assert_relative_eq!(stable_coth(x).unwrap(), coth_series(x), max_relative = 1e-13);
            assert_relative_eq!(stable_csch(x).unwrap(), csch_series(x), max_relative = 1e-13);
        }
    }

    #[test]
    fn kernels_match_std_in_the_bulk() {
        for i in 1..400 {
            let x = 0.05 * i as f64;
            assert_relative_eq!(stable_coth(x).unwrap(), 1.0 / x.tanh(), max_relative = 1e-14);
            assert_relative_eq!(stable_csch(x).unwrap(), 1.0 / x.sinh(), max_relative = 1e-14);
        }
    }

    #[test]
    fn kernels_are_strictly_decreasing() {
        let grid: Vec<f64> = (0..=600).map(|i| 10f64.powf(-8.0 + i as f64 * 10.5 / 600.0)).collect();
        for w in grid.windows(2) {
            let (lo, hi) = (stable_coth(w[0]).unwrap(), stable_coth(w[1]).unwrap());
            // coth rounds to exactly 1.0 once 2e^{-2x} drops below an ulp
            if w[1] < 18.0 {
                assert!(hi < lo, "coth not decreasing at {}", w[1]);
            } else {
                assert!(hi <= lo);
            }
            assert!(stable_csch(w[1]).unwrap() < stable_csch(w[0]).unwrap());
        }
    }
}
