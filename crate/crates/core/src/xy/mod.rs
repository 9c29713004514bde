//! Infinite anisotropic XY chain in a transverse field.

pub mod integrals;
pub mod pair;
pub mod params;
pub mod toeplitz;

pub use integrals::{g_equilibrium, magnetization, magnetization_ising_exact, quench_correlators};
pub use pair::{
    bell_basis, bell_pattern_defect, bell_transform, pair_correlators, pair_correlators_lenient,
    state_from_correlators, state_matrix, two_site_state, CorrelatorSet, LimitInfo,
};
pub use params::{Separation, XYParams};

/// Factorizing field `h_f = sqrt(1 - gamma^2)` where the ground state is a product state.
pub fn factorizing_field(gamma: f64) -> f64 {
    (1.0 - gamma * gamma).max(0.0).sqrt()
}
