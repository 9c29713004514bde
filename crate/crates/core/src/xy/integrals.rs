//! Fermionic two-point functions `G_R` and `S_R` of the infinite XY chain.
//!
//! With the thermal state of field `h0` prepared at `t = 0` and evolved under
//! field `hf`,
//!
//! ```text
//! G_R = (g/pi) int_0^pi sin(R p) sin p  th(L0)/(L0 Lf^2) [g^2 s^2 + (h0-c)(hf-c) - (h0-hf)(hf-c) cos(2 Lf t)]
//!     - (1/pi) int_0^pi cos(R p)        th(L0)/(L0 Lf^2) [(g^2 s^2 + (h0-c)(hf-c))(c-hf) - (h0-hf) g^2 s^2 cos(2 Lf t)]
//! S_R = g (h0-hf)/pi int_0^pi sin(R p) sin p sin(2 Lf t)/(L0 Lf)
//! ```
//!
//! where `s = sin p`, `c = cos p`, `L = Lambda(h)` and `th(L) = tanh(L / 2T)`.
//! At `h0 = hf`, `t = 0` both brackets collapse to `Lf^2` times a single factor
//! and `G_R` reduces to
//!
//! ```text
//! G_R = (1/pi) int_0^pi th(L)/L [g sin p sin(R p) + (h - cos p) cos(R p)]
//! ```

use std::f64::consts::PI;

use crate::elliptic::{ellipe, ellipk};
use crate::error::{Error, Result};
use crate::quadrature::Adaptive;

use super::params::XYParams;

/// Quasiparticle energy `Lambda(h) = sqrt(g^2 sin^2 p + (h - cos p)^2)`.
#[inline]
pub fn dispersion(phi: f64, h: f64, gamma: f64) -> f64 {
    let s = gamma * phi.sin();
    let d = h - phi.cos();
    s.hypot(d)
}

/// `tanh(Lambda / 2T)`, equal to 1 in the zero-temperature limit.
#[inline]
pub fn thermal_factor(lambda: f64, temperature: f64) -> f64 {
    if temperature == 0.0 {
        1.0
    } else {
        (0.5 * lambda / temperature).tanh()
    }
}

/// Points where `Lambda` can become small and the integrand sharply varies.
pub(crate) fn splits_for(fields: &[f64]) -> Vec<f64> {
    fields
        .iter()
        .filter(|h| h.abs() < 1.0)
        .map(|h| h.acos())
        .collect()
}

/// Equilibrium `G_R` at field `h`, anisotropy `gamma` and temperature `T`.
pub fn g_equilibrium(r: i64, h: f64, gamma: f64, temperature: f64) -> Result<f64> {
    g_equilibrium_with(&Adaptive::default(), r, h, gamma, temperature)
}

pub fn g_equilibrium_with(q: &Adaptive, r: i64, h: f64, gamma: f64, temperature: f64) -> Result<f64> {
    if temperature.is_infinite() {
        return Ok(0.0);
    }
    let rf = r as f64;
    let integrand = |phi: f64| {
        let lambda = dispersion(phi, h, gamma);
        if lambda == 0.0 {
            return 0.0;
        }
        let weight = thermal_factor(lambda, temperature) / lambda;
        weight * (gamma * phi.sin() * (rf * phi).sin() + (h - phi.cos()) * (rf * phi).cos())
    };
    Ok(q.integrate(integrand, 0.0, PI, &splits_for(&[h]))? / PI)
}

/// Time-dependent `(G_R(t), S_R(t))` after a field quench `h0 -> hf`.
pub fn quench_correlators(r: i64, params: &XYParams) -> Result<(f64, f64)> {
    params.validate()?;
    let XYParams {
        gamma,
        h0,
        hf,
        time,
        temperature,
        ..
    } = *params;
    if temperature.is_infinite() {
        return Ok((0.0, 0.0));
    }
    let q = Adaptive::default();
    let rf = r as f64;
    let dh = h0 - hf;
    let g2 = gamma * gamma;
    let splits = splits_for(&[h0, hf]);

    let g_integrand = |phi: f64| {
        let (s, c) = phi.sin_cos();
        let l0 = dispersion(phi, h0, gamma);
        let lf = dispersion(phi, hf, gamma);
        if l0 == 0.0 || lf == 0.0 {
            return 0.0;
        }
        let weight = thermal_factor(l0, temperature) / (l0 * lf * lf);
        let osc = (2.0 * lf * time).cos();
        let common = g2 * s * s + (h0 - c) * (hf - c);
        let sine_part = gamma * (rf * phi).sin() * s * (common - dh * (hf - c) * osc);
        let cosine_part = (rf * phi).cos() * (common * (c - hf) - dh * g2 * s * s * osc);
        weight * (sine_part - cosine_part)
    };
    let g = q.integrate(g_integrand, 0.0, PI, &splits)? / PI;

    if dh == 0.0 {
        return Ok((g, 0.0));
    }
    let s_integrand = |phi: f64| {
        let l0 = dispersion(phi, h0, gamma);
        let lf = dispersion(phi, hf, gamma);
        if l0 == 0.0 || lf == 0.0 {
            return 0.0;
        }
        (rf * phi).sin() * phi.sin() * (2.0 * lf * time).sin() / (l0 * lf)
    };
    let s = gamma * dh * q.integrate(s_integrand, 0.0, PI, &splits)? / PI;
    Ok((g, s))
}

/// `M_z = G_0 / 2`.
pub fn magnetization(h: f64, gamma: f64, temperature: f64) -> Result<f64> {
    Ok(0.5 * g_equilibrium(0, h, gamma, temperature)?)
}

/// Ground-state magnetization of the transverse Ising chain (`gamma = 1`, `T = 0`)
/// in closed form:
/// `M_z = [((h-1)/h) K(k) + ((h+1)/h) E(k)] / 2 pi`, `k = 2 sqrt(h)/(h+1)`.
pub fn magnetization_ising_exact(h: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::DomainError(format!("closed-form magnetization needs h > 0, got {h}")));
    }
    if h.is_infinite() {
        return Ok(0.5);
    }
    if h == 1.0 {
        // (h-1) K(k) -> 0 at the critical field, E(1) = 1.
        return Ok(1.0 / PI);
    }
    let k = 2.0 * h.sqrt() / (h + 1.0);
    Ok(((h - 1.0) / h * ellipk(k) + (h + 1.0) / h * ellipe(k)) / (2.0 * PI))
}
