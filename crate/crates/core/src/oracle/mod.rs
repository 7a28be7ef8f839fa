//! Independent numerical checks of the closed forms: truncated Fock-space
//! matrix algebra for the thermal state, and position-grid quadrature of the
//! vacuum wavefunction.

pub mod fock;
pub mod grid;

pub use fock::{
    build_workspace, commutation_residual, commutation_residual_with_exponent, park_determinant,
    park_renormalized_ops, park_traces, renormalized_operators, thermal_density, FockWorkspace, ParkTraces,
    ThermalDensityMatrix,
};
pub use grid::{grid_expectations, hamiltonian_kernel_residual, GridExpectations, PositionGrid};
