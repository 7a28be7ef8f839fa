//! Bogolyubov `(u, v)` parameters of a single-mode vacuum and the formal
//! temperature parametrization `cosh 2τ = coth x`, `sinh 2τ = csch x`.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::oscillator::{stable_csch, ThermalContext};

/// Default tolerance used by [`classify`] when comparing `|sin 2φ|` to 0 or 1.
pub const CLASSIFY_TOL: f64 = 1e-9;

/// Squeeze magnitude `τ ≥ 0` and phase `φ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezeParams {
    tau: f64,
    phi: f64,
}

impl SqueezeParams {
    /// Negative `τ` is folded into the canonical domain as `(−τ, φ + π/2)`,
    /// which leaves every variance and the covariance unchanged.
    pub fn new(tau: f64, phi: f64) -> Result<Self> {
        if !tau.is_finite() || !phi.is_finite() {
            return Err(Error::Domain(format!("squeeze parameters must be finite, got ({tau}, {phi})")));
        }
        let (tau, phi) = if tau < 0.0 { (-tau, phi + FRAC_PI_2) } else { (tau, phi) };
        Ok(Self { tau, phi: normalize_angle(phi) })
    }

    pub fn cold() -> Self {
        Self { tau: 0.0, phi: 0.0 }
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// `(sin φ, cos φ)`, with components below the rounding error of a
    /// multiple of π/2 set to exactly zero.
    pub fn phase_sin_cos(&self) -> (f64, f64) {
        let (s, c) = self.phi.sin_cos();
        let snap = |v: f64| if v.abs() < ANGLE_SNAP { 0.0 } else { v };
        (snap(s), snap(c))
    }

    /// `sin 2φ`, exactly zero on the squeezed axes.
    pub fn sin_two_phi(&self) -> f64 {
        let (s, c) = self.phase_sin_cos();
        2.0 * s * c
    }
}

// A few ulps of 2π: the representation error of an angle in [0, 2π).
const ANGLE_SNAP: f64 = 8.0 * f64::EPSILON;

fn normalize_angle(phi: f64) -> f64 {
    let r = phi.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs
    if r >= TAU { 0.0 } else { r }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UvPair {
    pub u: Complex64,
    pub v: Complex64,
}

impl UvPair {
    /// `|u|² − |v|²`, which is 1 for a canonical transformation.
    pub fn canonicity(&self) -> f64 {
        self.u.norm_sqr() - self.v.norm_sqr()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StateClass {
    ColdVacuum,
    #[serde(rename = "SCS")]
    Scs,
    #[serde(rename = "CCS")]
    Ccs,
    General,
}

impl fmt::Display for StateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StateClass::ColdVacuum => "ColdVacuum",
            StateClass::Scs => "SCS",
            StateClass::Ccs => "CCS",
            StateClass::General => "General",
        })
    }
}

/// `u = cosh τ · e^{iφ}`, `v = sinh τ · e^{−iφ}`.
pub fn uv_from_params(p: &SqueezeParams) -> UvPair {
    UvPair {
        u: Complex64::from_polar(p.tau.cosh(), p.phi),
        v: Complex64::from_polar(p.tau.sinh(), -p.phi),
    }
}

/// Inverts `cosh 2τ = coth x` for `τ ≥ 0`.
///
/// Evaluated through the equivalent branch `τ = ½ asinh(csch x)`, which stays
/// well conditioned as `coth x → 1` at low temperature.
pub fn tau_from_temperature(ctx: &ThermalContext) -> Result<f64> {
    tau_from_argument(ctx.x())
}

pub fn tau_from_argument(x: f64) -> Result<f64> {
    Ok(0.5 * stable_csch(x)?.asinh())
}

pub fn classify(p: &SqueezeParams, tol: f64) -> StateClass {
    if p.tau <= tol {
        return StateClass::ColdVacuum;
    }
    let s = p.sin_two_phi().abs();
    if s <= tol {
        StateClass::Scs
    } else if (1.0 - s).abs() <= tol {
        StateClass::Ccs
    } else {
        StateClass::General
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_4, PI};

    #[test]
    fn identity_transformation() {
        let uv = uv_from_params(&SqueezeParams::cold());
        assert_eq!(uv.u, Complex64::new(1.0, 0.0));
        assert_eq!(uv.v, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn real_squeeze() {
        let uv = uv_from_params(&SqueezeParams::new(0.5, 0.0).unwrap());
        assert_relative_eq!(uv.u.re, 1.1276259652063807, max_relative = 1e-15);
        assert_relative_eq!(uv.v.re, 0.5210953054937474, max_relative = 1e-15);
        assert_eq!(uv.u.im, 0.0);
        assert_relative_eq!(uv.canonicity(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn correlated_squeeze() {
        let uv = uv_from_params(&SqueezeParams::new(0.3, FRAC_PI_4).unwrap());
        assert_relative_eq!(uv.u.norm(), 1.045_338_514_128_86, max_relative = 1e-14);
        assert_relative_eq!(uv.u.arg(), FRAC_PI_4, max_relative = 1e-14);
        assert_relative_eq!(uv.v.norm(), 0.3045202934471426, max_relative = 1e-14);
        assert_relative_eq!(uv.v.arg(), -FRAC_PI_4, max_relative = 1e-14);
        assert_relative_eq!(uv.canonicity(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn params_normalize_into_canonical_domain() {
        let p = SqueezeParams::new(-0.4, 0.1).unwrap();
        assert_eq!(p.tau(), 0.4);
        assert_relative_eq!(p.phi(), 0.1 + FRAC_PI_2);
        let p = SqueezeParams::new(0.4, -FRAC_PI_2).unwrap();
        assert_relative_eq!(p.phi(), 1.5 * PI);
        let p = SqueezeParams::new(0.4, -1e-18).unwrap();
        assert!(p.phi() >= 0.0 && p.phi() < TAU);
        assert!(SqueezeParams::new(f64::NAN, 0.0).is_err());
        assert!(SqueezeParams::new(0.1, f64::INFINITY).is_err());
    }

    #[test]
    fn tau_at_zero_temperature() {
        let ctx = ThermalContext::natural(0.0).unwrap();
        assert_eq!(tau_from_temperature(&ctx).unwrap(), 0.0);
    }

    #[test]
    fn tau_where_cosh_two_tau_is_two() {
        let x = (1.0 / 3f64.sqrt()).asinh();
        assert_relative_eq!(x, 0.5493061443340548, max_relative = 1e-15);
        let tau = tau_from_argument(x).unwrap();
        // ½ arccosh 2 = ½ ln(2 + √3)
        assert_relative_eq!(tau, 0.6584789484624083, max_relative = 1e-14);
        assert_relative_eq!((2.0 * tau).cosh(), 2.0, max_relative = 1e-14);
        assert_relative_eq!((2.0 * tau).sinh(), 3f64.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn tau_at_half() {
        let tau = tau_from_argument(0.5).unwrap();
        assert_relative_eq!((2.0 * tau).cosh(), 2.163953413738653, max_relative = 1e-14);
        assert!(tau_from_argument(0.0).is_err());
        assert!(tau_from_argument(-1.0).is_err());
    }

    #[test]
    fn squeezed_axes_have_exact_zero_correlation() {
        for k in 0..4 {
            let p = SqueezeParams::new(1.0, k as f64 * FRAC_PI_2).unwrap();
            assert_eq!(p.sin_two_phi(), 0.0);
        }
        let p = SqueezeParams::new(1.0, FRAC_PI_4).unwrap();
        assert_relative_eq!(p.sin_two_phi(), 1.0, max_relative = 1e-15);
        let p = SqueezeParams::new(1.0, 1e-12).unwrap();
        assert!(p.sin_two_phi() > 0.0);
    }

    #[test]
    fn classification() {
        let c = |t, p| classify(&SqueezeParams::new(t, p).unwrap(), CLASSIFY_TOL);
        assert_eq!(c(0.0, 0.7), StateClass::ColdVacuum);
        assert_eq!(c(0.4, 0.0), StateClass::Scs);
        assert_eq!(c(0.4, FRAC_PI_2), StateClass::Scs);
        assert_eq!(c(0.4, PI), StateClass::Scs);
        assert_eq!(c(0.4, FRAC_PI_4), StateClass::Ccs);
        assert_eq!(c(0.4, 3.0 * FRAC_PI_4), StateClass::Ccs);
        assert_eq!(c(0.4, 0.3), StateClass::General);
    }
}
