use std::f64::consts::{FRAC_PI_2, TAU};

use gaussvac::bogolyubov::{classify, tau_from_argument, CLASSIFY_TOL};
use gaussvac::oscillator::{stable_coth, stable_csch};
use gaussvac::thermo::{influence_measure, lorentz_invariant, planck_energy, zeroth_law_report};
use gaussvac::{state_from_params, state_from_temperature, uv_from_params, SqueezeParams, StateClass, ThermalContext};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = SqueezeParams> {
    (0.0f64..3.0, 0.0f64..TAU).prop_map(|(t, p)| SqueezeParams::new(t, p).unwrap())
}

fn units() -> impl Strategy<Value = (f64, f64)> {
    (0.1f64..10.0, 0.1f64..10.0)
}

proptest! {
    #[test]
    fn bogolyubov_map_is_canonical(p in params()) {
        let uv = uv_from_params(&p);
        prop_assert!((uv.canonicity() - 1.0).abs() <= 1e-12 * uv.u.norm_sqr());
    }

    #[test]
    fn every_vacuum_saturates_schrodinger((omega, hbar) in units(), p in params()) {
        let s = state_from_params(p, omega, hbar).unwrap();
        prop_assert!(s.schrodinger_relative_residual() <= 1e-12);
        prop_assert!(s.up_product() >= 0.5 * hbar * (1.0 - 1e-15));
    }

    #[test]
    fn squeezed_axes_saturate_heisenberg(tau in 0.0f64..5.0, k in 0u8..4) {
        let s = state_from_params(SqueezeParams::new(tau, k as f64 * FRAC_PI_2).unwrap(), 1.0, 1.0).unwrap();
        prop_assert_eq!(s.cov(), 0.0);
        prop_assert!((s.up_product() - 0.5).abs() <= 0.5e-12);
        if tau > CLASSIFY_TOL {
            prop_assert_eq!(s.classify(CLASSIFY_TOL), StateClass::Scs);
        }
    }

    #[test]
    fn heisenberg_excess_tracks_correlation(p in params()) {
        let s = state_from_params(p, 1.0, 1.0).unwrap();
        // (ΔqΔp)² − ħ²/4 = σ²
        let lhs = s.up_product().powi(2) - 0.25;
        prop_assert!((lhs - s.cov().powi(2)).abs() <= 1e-12 * s.up_product().powi(2));
    }

    #[test]
    fn energy_balance_vanishes((omega, hbar) in units(), p in params()) {
        let s = state_from_params(p, omega, hbar).unwrap();
        prop_assert!(s.energy_balance().relative_residual(0.5 * hbar * omega) <= 1e-12);
    }

    #[test]
    fn negative_tau_folds_without_changing_moments(tau in 0.01f64..3.0, phi in 0.0f64..TAU) {
        let a = state_from_params(SqueezeParams::new(tau, phi).unwrap(), 1.0, 1.0).unwrap();
        let b = state_from_params(SqueezeParams::new(-tau, phi).unwrap(), 1.0, 1.0).unwrap();
        // the closed forms at −τ swap the quadratures and flip the correlation
        let scale = a.up_product();
        prop_assert!((b.var_q() - a.var_p()).abs() <= 1e-12 * a.var_p());
        prop_assert!((b.var_p() - a.var_q()).abs() <= 1e-12 * a.var_q());
        prop_assert!((b.cov() + a.cov()).abs() <= 1e-12 * scale);
        prop_assert!((a.up_product() - b.up_product()).abs() <= 1e-12 * scale);
    }

    #[test]
    fn tau_round_trip(x in 0.05f64..20.0) {
        let tau = tau_from_argument(x).unwrap();
        let (c, s) = (stable_coth(x).unwrap(), stable_csch(x).unwrap());
        prop_assert!(((2.0 * tau).cosh() - c).abs() <= 1e-10 * c);
        prop_assert!(((2.0 * tau).sinh() - s).abs() <= 1e-10 * s);
    }

    #[test]
    fn hyperbolic_identity(x in 1e-8f64..700.0) {
        let (c, s) = (stable_coth(x).unwrap(), stable_csch(x).unwrap());
        prop_assert!((c * c - s * s - 1.0).abs() <= 1e-12 * c * c);
        prop_assert!(c >= 1.0 && s >= 0.0);
    }

    #[test]
    fn thermal_correlated_state_matches_planck(t in 0.0f64..200.0, (omega, hbar) in units(), kb in 0.1f64..10.0) {
        let ctx = ThermalContext::new(
            t,
            gaussvac::PhysicalConstants::new(hbar, kb).unwrap(),
            gaussvac::OscillatorConfig::new(omega).unwrap(),
        ).unwrap();
        let s = state_from_temperature(&ctx, StateClass::Ccs).unwrap();
        let j = influence_measure(&ctx).unwrap().total;
        prop_assert!((s.up_product() - j).abs() <= 1e-12 * j);
        prop_assert!((omega * j - planck_energy(&ctx).unwrap()).abs() <= 1e-12 * omega * j);
        let expected = if t == 0.0 { StateClass::ColdVacuum } else { StateClass::Ccs };
        if t == 0.0 || tau_from_argument(ctx.x()).unwrap() > CLASSIFY_TOL {
            prop_assert_eq!(s.classify(CLASSIFY_TOL), expected);
        }
    }

    #[test]
    fn zeroth_law_biconditional(i in 1u32..=400, j in 1u32..=400) {
        let (t, t0) = (i as f64 / 8.0, j as f64 / 8.0);
        let template = ThermalContext::natural(1.0).unwrap();
        let r = zeroth_law_report(t, t0, &template).unwrap().residual.abs();
        if i == j {
            prop_assert!(r <= 1e-12);
        } else {
            prop_assert!(r > 1e-6);
        }
    }

    #[test]
    fn lorentz_invariant_is_constant(x in 0.01f64..350.0, hbar in 0.1f64..10.0) {
        let ctx = ThermalContext::from_argument(
            x,
            gaussvac::PhysicalConstants::new(hbar, 1.0).unwrap(),
            gaussvac::OscillatorConfig::new(1.0).unwrap(),
        ).unwrap();
        let target = 0.25 * hbar * hbar;
        prop_assert!((lorentz_invariant(&ctx).unwrap() - target).abs() <= 1e-9 * target);
    }

    #[test]
    fn classification_is_phase_periodic(p in params()) {
        let shifted = SqueezeParams::new(p.tau(), p.phi() + std::f64::consts::PI).unwrap();
        prop_assert_eq!(classify(&p, CLASSIFY_TOL), classify(&shifted, CLASSIFY_TOL));
    }
}
