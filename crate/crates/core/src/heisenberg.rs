//! Two-qubit Heisenberg ring `H = sum_i (B sz_i + J s_i . s_{i+1})`, N = 2.
//!
//! Levels: `2J + 2B` (|00>), `2J` (|Psi+>), `2J - 2B` (|11>), `-6J` (|Psi->).

use crate::error::{Error, Result};
use crate::matrix::dense::{Matrix4, C64};
use crate::matrix::jacobi::eig_hermitian;
use crate::matrix::state::DensityMatrix;

/// Relative tolerance (in units of J) for calling two levels degenerate.
pub const DEGENERACY_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HeisenbergParams {
    /// Antiferromagnetic coupling, > 0.
    pub j: f64,
    pub b: f64,
    /// `0` is the ground-state limit.
    pub temperature: f64,
}

impl HeisenbergParams {
    pub fn new(j: f64, b: f64, temperature: f64) -> Result<Self> {
        let p = HeisenbergParams { j, b, temperature };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        check_coupling(self.j)?;
        if !self.b.is_finite() {
            return Err(Error::DomainError(format!("field B = {} must be finite", self.b)));
        }
        if !(self.temperature >= 0.0) {
            return Err(Error::DomainError(format!(
                "temperature = {} must be >= 0",
                self.temperature
            )));
        }
        Ok(())
    }
}

fn check_coupling(j: f64) -> Result<()> {
    if !(j > 0.0) || !j.is_finite() {
        return Err(Error::DomainError(format!("coupling J = {j} must be finite and > 0")));
    }
    Ok(())
}

pub fn hamiltonian(j: f64, b: f64) -> Result<Matrix4> {
    check_coupling(j)?;
    let mut h = Matrix4::diagonal([2.0 * j + 2.0 * b, -2.0 * j, -2.0 * j, 2.0 * j - 2.0 * b]);
    h.0[1][2] = C64::new(4.0 * j, 0.0);
    h.0[2][1] = C64::new(4.0 * j, 0.0);
    Ok(h)
}

/// `(T_c, B_c) = (8J / ln 3, 4J)`.
pub fn critical_points(j: f64) -> Result<(f64, f64)> {
    check_coupling(j)?;
    Ok((8.0 * j / 3f64.ln(), 4.0 * j))
}

/// Energies in the order |00>, |Psi+>, |11>, |Psi->.
fn levels(j: f64, b: f64) -> [f64; 4] {
    [2.0 * j + 2.0 * b, 2.0 * j, 2.0 * j - 2.0 * b, -6.0 * j]
}

/// Assembles `rho` from (unnormalized) weights of the four levels.
fn from_level_weights(w: [f64; 4]) -> Result<DensityMatrix> {
    let z: f64 = w.iter().sum();
    let mut m = Matrix4::diagonal([w[0] / z, 0.5 * (w[1] + w[3]) / z, 0.5 * (w[1] + w[3]) / z, w[2] / z]);
    let off = C64::new(0.5 * (w[1] - w[3]) / z, 0.0);
    m.0[1][2] = off;
    m.0[2][1] = off;
    DensityMatrix::new(m)
}

/// Zero-temperature state: uniform mixture over the lowest level(s).
/// Below `B_c = 4J` this is the singlet, above it `|11><11|`, and at `B_c` the
/// equal mixture of the two.
pub fn ground_state(j: f64, b: f64) -> Result<DensityMatrix> {
    check_coupling(j)?;
    let e = levels(j, b);
    let min = e.iter().copied().fold(f64::INFINITY, f64::min);
    let w = e.map(|x| if x - min <= DEGENERACY_TOL * j { 1.0 } else { 0.0 });
    from_level_weights(w)
}

/// Thermal state `exp(-H/T)/Z` from the explicit matrix entries
///
/// ```text
/// e_wmy = exp(-2w - 2y), e_wp = exp(-2w) + exp(6w), e_wm = exp(-2w) - exp(6w),
/// e_wpy = exp(-2w + 2y),  w = J/T, y = B/T
/// rho = diag-block(e_wmy, [[e_wp, e_wm], [e_wm, e_wp]]/2, e_wpy) / Z
/// ```
///
/// with the largest exponent factored out before exponentiating.
pub fn thermal_state(params: &HeisenbergParams) -> Result<DensityMatrix> {
    params.validate()?;
    let HeisenbergParams { j, b, temperature } = *params;
    if temperature == 0.0 {
        return ground_state(j, b);
    }
    if temperature.is_infinite() {
        return Ok(DensityMatrix::maximally_mixed());
    }
    let (w, y) = (j / temperature, b / temperature);
    let exponents = [-2.0 * w - 2.0 * y, -2.0 * w, 6.0 * w, -2.0 * w + 2.0 * y];
    let top = exponents.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let [e_my, e_m2, e_6, e_py] = exponents.map(|x| (x - top).exp());
    let (e_wp, e_wm) = (e_m2 + e_6, e_m2 - e_6);
    let z = e_my + e_wp + e_py;
    let mut m = Matrix4::diagonal([e_my / z, 0.5 * e_wp / z, 0.5 * e_wp / z, e_py / z]);
    m.0[1][2] = C64::new(0.5 * e_wm / z, 0.0);
    m.0[2][1] = m.0[1][2];
    DensityMatrix::new(m)
}

/// Thermal state from the numerical spectrum of [`hamiltonian`].
pub fn thermal_state_spectral(params: &HeisenbergParams) -> Result<DensityMatrix> {
    params.validate()?;
    let HeisenbergParams { j, b, temperature } = *params;
    if temperature == 0.0 {
        return ground_state(j, b);
    }
    if temperature.is_infinite() {
        return Ok(DensityMatrix::maximally_mixed());
    }
    let spectrum = eig_hermitian(&hamiltonian(j, b)?)?;
    let e_min = spectrum.values[3];
    let unnormalized = spectrum.map(|e| (-(e - e_min) / temperature).exp());
    let z = unnormalized.trace().re;
    DensityMatrix::new(unnormalized.scale(1.0 / z))
}

/// `C = (e^{8w} - 3) / (1 + e^{-2y} + e^{2y} + e^{8w})` below `T_c`, 0 above.
pub fn concurrence_closed(params: &HeisenbergParams) -> Result<f64> {
    params.validate()?;
    let HeisenbergParams { j, b, temperature } = *params;
    if temperature == 0.0 {
        return Err(Error::DomainError(
            "closed-form concurrence needs T > 0; use ground_state for T = 0".into(),
        ));
    }
    let (t_c, _) = critical_points(j)?;
    if temperature >= t_c {
        return Ok(0.0);
    }
    let (w, y) = (j / temperature, b / temperature);
    let top = [0.0, -2.0 * y, 2.0 * y, 8.0 * w]
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    let e = |x: f64| (x - top).exp();
    let c = (e(8.0 * w) - 3.0 * e(0.0)) / (e(0.0) + e(-2.0 * y) + e(2.0 * y) + e(8.0 * w));
    Ok(c.max(0.0))
}
