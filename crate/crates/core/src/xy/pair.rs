//! Two-spin correlators and the reduced two-site state of the infinite chain.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::matrix::dense::{CMatrix, Matrix4, C64, I, ZERO};
use crate::matrix::state::{Basis, DensityMatrix};
use crate::quadrature::Adaptive;

use super::integrals::g_equilibrium_with;
use super::params::{Separation, XYParams};
use super::toeplitz::toeplitz_determinant;

/// Largest separation evaluated explicitly.
pub const MAX_SEPARATION: u32 = 400;
/// First separation tried for the `R -> infinity` limit; doubled until converged.
pub const LIMIT_START: u32 = 50;
pub const LIMIT_TOL: f64 = 1e-8;

/// How an infinite-separation value was obtained.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitInfo {
    /// Largest finite separation evaluated.
    pub evaluated_at: u32,
    /// `max(|d txx|, |d tyy|)` between the last two separations.
    pub last_change: f64,
    pub converged: bool,
}

/// `<sigma_u^i sigma_v^{i+R}>` for the non-vanishing pairs, plus `M_z = <S_z>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelatorSet {
    pub txx: f64,
    pub tyy: f64,
    pub tzz: f64,
    pub txy: f64,
    pub mz: f64,
    pub separation: Separation,
    pub limit: Option<LimitInfo>,
}

/// Lazily extended table of equilibrium `G_k`, `|k| <= reach`.
struct GTable {
    gamma: f64,
    h: f64,
    temperature: f64,
    quad: Adaptive,
    /// `values[k + reach]`
    values: Vec<f64>,
    reach: i64,
}

impl GTable {
    fn new(gamma: f64, h: f64, temperature: f64) -> Result<Self> {
        let quad = Adaptive::default();
        let g0 = g_equilibrium_with(&quad, 0, h, gamma, temperature)?;
        Ok(GTable {
            gamma,
            h,
            temperature,
            quad,
            values: vec![g0],
            reach: 0,
        })
    }

    fn ensure(&mut self, reach: i64) -> Result<()> {
        if reach <= self.reach {
            return Ok(());
        }
        let mut neg = Vec::new();
        let mut pos = Vec::new();
        for k in (self.reach + 1)..=reach {
            neg.push(g_equilibrium_with(&self.quad, -k, self.h, self.gamma, self.temperature)?);
            pos.push(g_equilibrium_with(&self.quad, k, self.h, self.gamma, self.temperature)?);
        }
        let mut values: Vec<f64> = neg.into_iter().rev().collect();
        values.extend_from_slice(&self.values);
        values.extend(pos);
        self.values = values;
        self.reach = reach;
        Ok(())
    }

    fn get(&self, k: i64) -> f64 {
        self.values[(k + self.reach) as usize]
    }

    fn correlators(&mut self, r: u32) -> Result<(f64, f64, f64)> {
        let ri = r as i64;
        self.ensure(ri + 1)?;
        let n = r as usize;
        let txx = toeplitz_determinant(n, |k| self.get(k - 1));
        let tyy = toeplitz_determinant(n, |k| self.get(k + 1));
        let g0 = self.get(0);
        let tzz = g0 * g0 - self.get(ri) * self.get(-ri);
        Ok((txx, tyy, tzz))
    }
}

fn require_equilibrium(params: &XYParams) -> Result<()> {
    params.validate()?;
    if !params.is_equilibrium() {
        return Err(Error::DomainError(
            "pair correlators are defined here for equilibrium parameters (h0 = hf, t = 0)".into(),
        ));
    }
    Ok(())
}

/// Two-spin correlators at equilibrium. For `Separation::Infinite` a
/// non-converged limit is an error; see [`pair_correlators_lenient`].
pub fn pair_correlators(params: &XYParams) -> Result<CorrelatorSet> {
    let set = pair_correlators_lenient(params)?;
    if let Some(info) = set.limit {
        if !info.converged {
            return Err(Error::RLimitNotConverged {
                cap: MAX_SEPARATION,
                last_change: info.last_change,
            });
        }
    }
    Ok(set)
}

/// Like [`pair_correlators`] but returns the last evaluated values with
/// `limit.converged == false` instead of failing.
pub fn pair_correlators_lenient(params: &XYParams) -> Result<CorrelatorSet> {
    require_equilibrium(params)?;
    let mut table = GTable::new(params.gamma, params.field(), params.temperature)?;
    let mz = 0.5 * table.get(0);

    match params.separation {
        Separation::Finite(r) => {
            if r == 0 || r > MAX_SEPARATION {
                return Err(Error::DomainError(format!(
                    "separation {r} outside 1..={MAX_SEPARATION}"
                )));
            }
            let (txx, tyy, tzz) = table.correlators(r)?;
            Ok(CorrelatorSet {
                txx,
                tyy,
                tzz,
                txy: 0.0,
                mz,
                separation: params.separation,
                limit: None,
            })
        }
        Separation::Infinite => {
            let mut r = LIMIT_START;
            let mut prev = table.correlators(r)?;
            loop {
                let next_r = r * 2;
                let next = table.correlators(next_r)?;
                let change = (next.0 - prev.0).abs().max((next.1 - prev.1).abs());
                let converged = change < LIMIT_TOL;
                if converged || next_r >= MAX_SEPARATION {
                    return Ok(CorrelatorSet {
                        txx: next.0,
                        tyy: next.1,
                        tzz: next.2,
                        txy: 0.0,
                        mz,
                        separation: Separation::Infinite,
                        limit: Some(LimitInfo {
                            evaluated_at: next_r,
                            last_change: change,
                            converged,
                        }),
                    });
                }
                prev = next;
                r = next_r;
            }
        }
    }
}

/// Computational-basis matrix built from a correlator set:
///
/// ```text
///       | 1+4Mz+Tzz   0        0        Txx-Tyy-2iTxy |
/// 1/4 * | 0           1-Tzz    Txx+Tyy  0             |
///       | 0           Txx+Tyy  1-Tzz    0             |
///       | Txx-Tyy+2iTxy 0      0        1-4Mz+Tzz     |
/// ```
pub fn state_matrix(c: &CorrelatorSet) -> Matrix4 {
    let re = |x: f64| C64::new(0.25 * x, 0.0);
    let mut m = Matrix4::zeros();
    m.0[0][0] = re(1.0 + 4.0 * c.mz + c.tzz);
    m.0[1][1] = re(1.0 - c.tzz);
    m.0[2][2] = re(1.0 - c.tzz);
    m.0[3][3] = re(1.0 - 4.0 * c.mz + c.tzz);
    m.0[1][2] = re(c.txx + c.tyy);
    m.0[2][1] = re(c.txx + c.tyy);
    m.0[0][3] = C64::new(0.25 * (c.txx - c.tyy), -0.5 * c.txy);
    m.0[3][0] = C64::new(0.25 * (c.txx - c.tyy), 0.5 * c.txy);
    m
}

pub fn state_from_correlators(c: &CorrelatorSet) -> Result<DensityMatrix> {
    DensityMatrix::new(state_matrix(c)).map_err(|e| match e {
        Error::InvalidState(msg) => Error::InvalidState(format!(
            "assembled two-site state is not positive ({msg}); quadrature tolerance too loose?"
        )),
        other => other,
    })
}

/// Reduced state of two spins at equilibrium.
pub fn two_site_state(params: &XYParams) -> Result<DensityMatrix> {
    state_from_correlators(&pair_correlators(params)?)
}

/// Bell basis `|Phi+>, i|Phi->, i|Psi+>, |Psi->` as columns. The phases on the
/// middle two vectors make equilibrium chain states take the real/imaginary
/// block pattern with a real diagonal.
pub fn bell_transform() -> Matrix4 {
    let r = C64::new(FRAC_1_SQRT_2, 0.0);
    let ir = I * FRAC_1_SQRT_2;
    CMatrix([
        [r, ir, ZERO, ZERO],
        [ZERO, ZERO, ir, r],
        [ZERO, ZERO, ir, -r],
        [r, -ir, ZERO, ZERO],
    ])
}

/// Rewrites a computational-basis state in the Bell basis.
pub fn bell_basis(rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.basis() == Basis::Bell {
        return Ok(rho.clone());
    }
    DensityMatrix::with_basis(rho.matrix().conjugate_by(&bell_transform()), Basis::Bell)
}

/// Largest violation of the Bell-basis pattern: real diagonal, real `(1,4)`
/// and `(2,3)` entries, imaginary `(1,2)`, `(1,3)`, `(2,4)`, `(3,4)` entries.
pub fn bell_pattern_defect(rho_bell: &DensityMatrix) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            let z = rho_bell.entry(i, j);
            let real_slot = i == j || (i.min(j), i.max(j)) == (0, 3) || (i.min(j), i.max(j)) == (1, 2);
            let off = if real_slot { z.im } else { z.re };
            worst = worst.max(off.abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xy::integrals::g_equilibrium;

    fn eq(gamma: f64, h: f64, t: f64, r: u32) -> XYParams {
        XYParams::equilibrium(gamma, h, t, Separation::Finite(r)).unwrap()
    }

    #[test]
    fn zero_field_ising_nearest_neighbours() {
        let c = pair_correlators(&eq(1.0, 0.0, 0.0, 1)).unwrap();
        assert!((c.txx + 1.0).abs() < 1e-12);
        assert!(c.tzz.abs() < 1e-12);
        assert!(c.tyy.abs() < 1e-12);
        assert!(c.mz.abs() < 1e-12);
    }

    #[test]
    fn zero_field_ising_next_nearest() {
        let c = pair_correlators(&eq(1.0, 0.0, 0.0, 2)).unwrap();
        assert!((c.txx - 1.0).abs() < 1e-12);
    }

    #[test]
    fn r1_determinants_are_single_entries() {
        let (g, h, t) = (0.35, 0.8, 0.4);
        let c = pair_correlators(&eq(g, h, t, 1)).unwrap();
        assert_eq!(c.txx, g_equilibrium(-1, h, g, t).unwrap());
        assert_eq!(c.tyy, g_equilibrium(1, h, g, t).unwrap());
    }

    #[test]
    fn infinite_temperature_kills_correlations() {
        let c = pair_correlators(&eq(0.5, 0.6, f64::INFINITY, 3)).unwrap();
        assert_eq!((c.txx, c.tyy, c.tzz, c.mz), (0.0, 0.0, 0.0, 0.0));
        let rho = two_site_state(&eq(0.5, 0.6, f64::INFINITY, 1)).unwrap();
        assert!(rho.matrix().max_abs_diff(&Matrix4::identity().scale(0.25)) < 1e-15);
    }

    #[test]
    fn saturated_field_is_polarized() {
        let rho = two_site_state(&eq(0.5, 1e8, 0.0, 1)).unwrap();
        assert!((rho.entry(0, 0).re - 1.0).abs() < 1e-6);
    }

    #[test]
    fn quench_parameters_are_rejected() {
        let p = XYParams::quench(0.5, 0.2, 0.9, 1.0, 0.0, Separation::Finite(1)).unwrap();
        assert!(matches!(pair_correlators(&p), Err(Error::DomainError(_))));
    }

    #[test]
    fn monotone_decay_of_txx() {
        let mut prev = f64::INFINITY;
        for r in 1..=6 {
            let c = pair_correlators(&eq(0.5, 0.5, 0.0, r)).unwrap();
            assert!(c.txx.abs() <= prev + 1e-12, "R = {r}");
            prev = c.txx.abs();
        }
    }

    #[test]
    fn infinite_limit_paramagnet() {
        let p = XYParams::equilibrium(0.5, 1.5, 0.0, Separation::Infinite).unwrap();
        let c = pair_correlators(&p).unwrap();
        let info = c.limit.unwrap();
        assert!(info.converged);
        assert!(c.txx.abs() < 1e-8 && c.tyy.abs() < 1e-8);
        assert!((c.tzz - 4.0 * c.mz * c.mz).abs() < 1e-8);
    }

    #[test]
    fn bell_views() {
        let b = bell_basis(&DensityMatrix::singlet()).unwrap();
        assert!(b.matrix().max_abs_diff(&Matrix4::diagonal([0.0, 0.0, 0.0, 1.0])) < 1e-15);
        let mixed = bell_basis(&DensityMatrix::maximally_mixed()).unwrap();
        assert!(mixed.matrix().max_abs_diff(&Matrix4::identity().scale(0.25)) < 1e-15);
        let u = bell_transform();
        assert!((u.adjoint() * u).max_abs_diff(&Matrix4::identity()) < 1e-15);
    }

    #[test]
    fn bell_pattern_for_equilibrium_state() {
        let rho = two_site_state(&eq(0.5, 1.5, 0.5, 1)).unwrap();
        let b = bell_basis(&rho).unwrap();
        assert!(bell_pattern_defect(&b) < 1e-10);
        // the pattern is not trivially satisfied: magnetization feeds (1,2)
        assert!(b.entry(0, 1).im.abs() > 1e-3);
    }
}
