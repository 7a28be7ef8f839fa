//! Truncated Fock-space matrices for the thermal oscillator.
//!
//! The Gibbs state is `ρ ∝ exp[−ε(N̂ + ½)]` with `ε = ħω / k_B T = 2x`; this is
//! the exponent under which the thermal traces reproduce the variances
//! `(ħ/2ω) coth x` and `(ħω/2) coth x` of the correlated states. All traces
//! are taken with dense matrix products so the oracle shares no algebra with
//! the closed forms it checks.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::oscillator::ThermalContext;

/// Smallest truncation accepted by [`build_workspace`].
pub const MIN_DIM: usize = 8;
pub const DEFAULT_DIM: usize = 200;
/// Largest population allowed in the top 10% of basis states.
pub const TAIL_MASS_GATE: f64 = 1e-10;
/// Maximum relative mismatch between split traces and renormalized-operator traces.
pub const PINNING_TOL: f64 = 1e-8;

type CMatrix = DMatrix<Complex64>;

#[derive(Debug, Clone)]
pub struct FockWorkspace {
    dim: usize,
    omega: f64,
    hbar: f64,
    pub a: CMatrix,
    pub a_dag: CMatrix,
    pub n_op: CMatrix,
    pub q_op: CMatrix,
    pub p_op: CMatrix,
    pub identity: CMatrix,
}

#[derive(Debug, Clone)]
pub struct ThermalDensityMatrix {
    pub x: f64,
    /// Boltzmann exponent per quantum, `2x`.
    pub epsilon: f64,
    pub matrix: CMatrix,
    /// `Z = Σ_n e^{−ε(n+½)}` over the truncated basis.
    pub partition: f64,
    pub sqrt_matrix: CMatrix,
    /// Population of the top 10% of basis states.
    pub tail_mass: f64,
}

impl ThermalDensityMatrix {
    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn population(&self, n: usize) -> f64 {
        self.matrix[(n, n)].re
    }

    pub fn mean_occupation(&self) -> f64 {
        (0..self.matrix.nrows()).map(|n| n as f64 * self.population(n)).sum()
    }
}

/// Entries of the generalized uncertainty determinant built from split traces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParkTraces {
    /// `tr[p² ρ]`
    pub p_sq: f64,
    /// `tr[p ρ^½ p ρ^½]`
    pub p_cross: f64,
    /// `tr[q ρ^½ q ρ^½]`
    pub q_cross: f64,
    /// `tr[q² ρ]`
    pub q_sq: f64,
}

impl ParkTraces {
    pub fn determinant(&self) -> f64 {
        self.p_sq * self.q_sq - self.p_cross * self.q_cross
    }
}

pub fn build_workspace(dim: usize, omega: f64, hbar: f64) -> Result<FockWorkspace> {
    if dim < MIN_DIM {
        return Err(Error::Config(format!("Fock dimension must be >= {MIN_DIM}, got {dim}")));
    }
    if !(omega.is_finite() && omega > 0.0 && hbar.is_finite() && hbar > 0.0) {
        return Err(Error::Config(format!("omega and hbar must be finite and > 0, got ({omega}, {hbar})")));
    }
    // a|n⟩ = √n |n−1⟩
    let a = CMatrix::from_fn(dim, dim, |i, j| {
        if j == i + 1 {
            Complex64::new((j as f64).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let a_dag = a.adjoint();
    let n_op = &a_dag * &a;
    let q_scale = (hbar / (2.0 * omega)).sqrt();
    let p_scale = (hbar * omega / 2.0).sqrt();
    let q_op = (&a + &a_dag) * Complex64::new(q_scale, 0.0);
    let p_op = (&a_dag - &a) * Complex64::new(0.0, p_scale);
    Ok(FockWorkspace { dim, omega, hbar, a, a_dag, n_op, q_op, p_op, identity: CMatrix::identity(dim, dim) })
}

impl FockWorkspace {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Largest entry of `[q, p] − iħ` on the first `dim − 1` basis states,
    /// scaled by `ħ`. The last state is excluded because truncation breaks the
    /// canonical commutator there.
    pub fn commutator_residual(&self) -> f64 {
        let commutator = &self.q_op * &self.p_op - &self.p_op * &self.q_op;
        let target = &self.identity * Complex64::new(0.0, self.hbar);
        let diff = commutator - target;
        let interior = diff.view((0, 0), (self.dim - 1, self.dim - 1));
        interior.iter().map(|z| z.norm()).fold(0.0, f64::max) / self.hbar
    }

    fn check_context(&self, ctx: &ThermalContext) -> Result<()> {
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(b.abs());
        if !close(self.omega, ctx.omega()) || !close(self.hbar, ctx.hbar()) {
            return Err(Error::Config(format!(
                "workspace (omega={}, hbar={}) does not match thermal context (omega={}, hbar={})",
                self.omega,
                self.hbar,
                ctx.omega(),
                ctx.hbar()
            )));
        }
        Ok(())
    }
}

fn tail_start(dim: usize) -> usize {
    (dim * 9).div_ceil(10)
}

/// Smallest dimension whose top 10% carries less than the gate mass at `epsilon`.
fn suggested_dim(epsilon: f64) -> usize {
    // tail mass ≈ e^{−0.9 ε dim}
    let needed = (1.0 / TAIL_MASS_GATE).ln() / (0.9 * epsilon);
    (needed.ceil() as usize + 1).max(MIN_DIM)
}

fn diagonal(values: &DVector<f64>) -> CMatrix {
    CMatrix::from_diagonal(&values.map(|v| Complex64::new(v, 0.0)))
}

pub fn thermal_density(ws: &FockWorkspace, ctx: &ThermalContext) -> Result<ThermalDensityMatrix> {
    ws.check_context(ctx)?;
    let x = ctx.x();
    let dim = ws.dim;
    if x.is_infinite() {
        let mut pops = DVector::zeros(dim);
        pops[0] = 1.0;
        return Ok(ThermalDensityMatrix {
            x,
            epsilon: f64::INFINITY,
            matrix: diagonal(&pops),
            partition: 0.0,
            sqrt_matrix: diagonal(&pops),
            tail_mass: 0.0,
        });
    }
    let epsilon = 2.0 * x;
    // weights relative to the ground state, e^{−εn}
    let weights = DVector::from_fn(dim, |n, _| (-epsilon * n as f64).exp());
    let total: f64 = weights.sum();
    let pops = weights / total;
    let tail_mass: f64 = pops.rows_range(tail_start(dim)..).sum();
    if tail_mass >= TAIL_MASS_GATE {
        return Err(Error::Truncation { dim, tail_mass, suggested_dim: suggested_dim(epsilon) });
    }
    let sqrt_pops = pops.map(f64::sqrt);
    Ok(ThermalDensityMatrix {
        x,
        epsilon,
        matrix: diagonal(&pops),
        partition: (-x).exp() * total,
        sqrt_matrix: diagonal(&sqrt_pops),
        tail_mass,
    })
}

/// `Re tr[a b]` as `Σ_ij a_ij b_ji`, without forming the product.
pub fn trace_of_product(a: &CMatrix, b: &CMatrix) -> f64 {
    a.component_mul(&b.transpose()).sum().re
}

pub fn park_traces(ws: &FockWorkspace, ctx: &ThermalContext) -> Result<ParkTraces> {
    let rho = thermal_density(ws, ctx)?;
    let (p, q, s) = (&ws.p_op, &ws.q_op, &rho.sqrt_matrix);
    let (ps, qs) = (p * s, q * s);
    Ok(ParkTraces {
        p_sq: trace_of_product(&(p * p), &rho.matrix),
        p_cross: trace_of_product(&ps, &ps),
        q_cross: trace_of_product(&qs, &qs),
        q_sq: trace_of_product(&(q * q), &rho.matrix),
    })
}

pub fn park_determinant(ws: &FockWorkspace, ctx: &ThermalContext) -> Result<f64> {
    Ok(park_traces(ws, ctx)?.determinant())
}

/// Renormalized momentum and coordinate `(p_T, q_T)` satisfying
/// `tr[A ρ^½ A ρ^½] = tr[A A_T ρ]`.
///
/// Moving `ρ^½` through the ladder operators gives `ρ^½ a = e^{ε/2} a ρ^½` and
/// `ρ^½ a† = e^{−ε/2} a† ρ^½`, hence
///
/// ```text
/// q_T = √(ħ/2ω) (e^{ε/2} a + e^{−ε/2} a†)
/// p_T = i√(ħω/2) (e^{−ε/2} a† − e^{ε/2} a)
/// ```
///
/// which reduce to `q` and `p` as `ε → 0`. Both trace identities are
/// re-checked numerically before the operators are returned.
pub fn park_renormalized_ops(ws: &FockWorkspace, ctx: &ThermalContext) -> Result<(CMatrix, CMatrix)> {
    if !ctx.x().is_finite() {
        return Err(Error::Domain("renormalized operators need a finite thermal argument".into()));
    }
    let rho = thermal_density(ws, ctx)?;
    let (p_t, q_t) = renormalized_operators(ws, rho.epsilon);

    let s = &rho.sqrt_matrix;
    for (name, op, renorm) in [("q", &ws.q_op, &q_t), ("p", &ws.p_op, &p_t)] {
        let op_s = op * s;
        let split = trace_of_product(&op_s, &op_s);
        let moved = trace_of_product(&(op * renorm), &rho.matrix);
        let mismatch = (split - moved).abs() / split.abs().max(f64::MIN_POSITIVE);
        if mismatch > PINNING_TOL {
            return Err(Error::Consistency(format!(
                "tr[{name} ρ^½ {name} ρ^½] = {split} but tr[{name} {name}_T ρ] = {moved}"
            )));
        }
    }
    Ok((p_t, q_t))
}

/// `(p_T, q_T)` for an arbitrary exponent `ε`, without the trace check.
pub fn renormalized_operators(ws: &FockWorkspace, epsilon: f64) -> (CMatrix, CMatrix) {
    let half = 0.5 * epsilon;
    let (up, down) = (Complex64::new(half.exp(), 0.0), Complex64::new((-half).exp(), 0.0));
    let q_scale = Complex64::new((ws.hbar / (2.0 * ws.omega)).sqrt(), 0.0);
    let p_scale = Complex64::new(0.0, (ws.hbar * ws.omega / 2.0).sqrt());
    let q_t = (&ws.a * up + &ws.a_dag * down) * q_scale;
    let p_t = (&ws.a_dag * down - &ws.a * up) * p_scale;
    (p_t, q_t)
}

/// `‖ρ^½ a − e^{κ} a ρ^½‖ / ‖a ρ^½‖` on the first `dim − 1` basis states with
/// the pinned exponent `κ = ε/2 = x`. `None` at zero temperature, where
/// `a ρ^½` vanishes.
pub fn commutation_residual(ws: &FockWorkspace, ctx: &ThermalContext) -> Result<Option<f64>> {
    commutation_residual_with_exponent(ws, ctx, ctx.x())
}

pub fn commutation_residual_with_exponent(
    ws: &FockWorkspace,
    ctx: &ThermalContext,
    kappa: f64,
) -> Result<Option<f64>> {
    let rho = thermal_density(ws, ctx)?;
    if rho.x.is_infinite() {
        return Ok(None);
    }
    let s = &rho.sqrt_matrix;
    let left = s * &ws.a;
    let right = &ws.a * s;
    let n = ws.dim - 1;
    let diff = left.view((0, 0), (n, n)) - right.view((0, 0), (n, n)) * Complex64::new(kappa.exp(), 0.0);
    Ok(Some(diff.norm() / right.view((0, 0), (n, n)).norm()))
}
