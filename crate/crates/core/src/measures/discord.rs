//! Mutual information, one-sided projective discord and classical correlations.

use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;

use super::bloch::{dot, norm, BlochForm};
use crate::error::{Error, Result};
use crate::matrix::entropy::{qubit_entropy_from_radius, von_neumann_entropy};
use crate::matrix::state::{DensityMatrix, Subsystem};
use crate::optimize::golden_section;

pub const GRID: usize = 64;
pub const PARAM_TOL: f64 = 1e-10;
/// Outcomes less likely than this contribute nothing to the conditional entropy.
pub const OUTCOME_TOL: f64 = 1e-14;
const MAX_ROUNDS: usize = 200;
const X_STATE_TOL: f64 = 1e-10;

/// Projective measurement on qubit B with basis
/// `|0'> = cos a |0> + e^{ib} sin a |1>`, `|1'> = -e^{-ib} sin a |0> + cos a |1>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Measurement {
    pub alpha: f64,
    pub beta: f64,
}

impl Measurement {
    /// `alpha` in `[0, pi]`, `beta` in `[0, 2 pi)`.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&alpha) || !(0.0..2.0 * PI).contains(&beta) {
            return Err(Error::DomainError(format!(
                "measurement angles ({alpha}, {beta}) outside [0, pi] x [0, 2 pi)"
            )));
        }
        Ok(Measurement { alpha, beta })
    }

    /// Bloch vector of `|0'>`.
    pub fn direction(&self) -> [f64; 3] {
        direction(self.alpha, self.beta)
    }

    /// Measurement whose outcome-`0'` Bloch vector is `n`, normalized.
    pub fn from_direction(n: [f64; 3]) -> Self {
        let r = norm(&n);
        let theta = (n[0].hypot(n[1])).atan2(n[2]);
        let phi = if n[0] == 0.0 && n[1] == 0.0 || r == 0.0 {
            0.0
        } else {
            n[1].atan2(n[0]).rem_euclid(2.0 * PI)
        };
        Measurement {
            alpha: 0.5 * theta,
            beta: if phi >= 2.0 * PI { 0.0 } else { phi },
        }
    }

    /// Representative with the same projector pair in `[0, pi/2] x [0, pi)`.
    /// The two outcomes may be exchanged.
    pub fn canonical(&self) -> Self {
        let n = self.direction();
        let m = Measurement::from_direction(n);
        if m.beta >= PI {
            Measurement::from_direction([-n[0], -n[1], -n[2]])
        } else {
            m
        }
    }
}

fn direction(alpha: f64, beta: f64) -> [f64; 3] {
    let (s2, c2) = (2.0 * alpha).sin_cos();
    let (sb, cb) = beta.sin_cos();
    [s2 * cb, s2 * sb, c2]
}

/// `M_q = S(rho_A) + S(rho_B) - S(rho)`.
pub fn mutual_information(rho: &DensityMatrix) -> f64 {
    let sa = von_neumann_entropy(&rho.partial_trace(Subsystem::A));
    let sb = von_neumann_entropy(&rho.partial_trace(Subsystem::B));
    (sa + sb - von_neumann_entropy(rho)).max(0.0)
}

fn conditional_entropy_along(form: &BlochForm, n: &[f64; 3]) -> f64 {
    let bn = dot(&form.b, n);
    let tn = form.t_apply(n);
    let mut total = 0.0;
    for sign in [1.0, -1.0] {
        let weight = 1.0 + sign * bn;
        let p = 0.5 * weight;
        if p < OUTCOME_TOL {
            continue;
        }
        let v = [
            form.a[0] + sign * tn[0],
            form.a[1] + sign * tn[1],
            form.a[2] + sign * tn[2],
        ];
        total += p * qubit_entropy_from_radius(norm(&v) / weight);
    }
    total
}

/// `S(A | {Pi_j^B}) = sum_j p_j S(rho_{A|j})`.
pub fn conditional_entropy(rho: &DensityMatrix, m: &Measurement) -> f64 {
    conditional_entropy_along(&BlochForm::of(rho), &m.direction())
}

struct Objective {
    form: BlochForm,
}

impl Objective {
    fn at(&self, alpha: f64, beta: f64) -> f64 {
        conditional_entropy_along(&self.form, &direction(alpha, beta))
    }
}

fn grid_alpha(i: usize) -> f64 {
    i as f64 * FRAC_PI_2 / (GRID - 1) as f64
}

fn grid_beta(j: usize) -> f64 {
    j as f64 * PI / GRID as f64
}

fn refine(obj: &Objective, start: (f64, f64), f0: f64, half_width: (f64, f64)) -> (f64, f64, f64) {
    let (mut alpha, mut beta) = start;
    let mut best = f0;
    for _ in 0..MAX_ROUNDS {
        let (a_new, fa) = golden_section(
            |a| obj.at(a, beta),
            alpha - half_width.0,
            alpha + half_width.0,
            PARAM_TOL,
        );
        let mut moved = 0.0f64;
        if fa < best {
            moved = moved.max((a_new - alpha).abs());
            alpha = a_new;
            best = fa;
        }
        let (b_new, fb) = golden_section(
            |b| obj.at(alpha, b),
            beta - half_width.1,
            beta + half_width.1,
            PARAM_TOL,
        );
        if fb < best {
            moved = moved.max((b_new - beta).abs());
            beta = b_new;
            best = fb;
        }
        if moved <= PARAM_TOL {
            break;
        }
    }
    (alpha, beta, best)
}

fn discord_from_min(rho: &DensityMatrix, min_cond: f64) -> f64 {
    let sb = von_neumann_entropy(&rho.partial_trace(Subsystem::B));
    let s = von_neumann_entropy(rho);
    (sb - s + min_cond).max(0.0)
}

/// Grid search over `[0, pi/2] x [0, pi)` followed by coordinate-wise
/// golden-section refinement. Returns `(discord, minimizing measurement)`.
pub fn discord_numeric(rho: &DensityMatrix) -> (f64, Measurement) {
    let obj = Objective {
        form: BlochForm::of(rho),
    };
    let values: Vec<f64> = (0..GRID * GRID)
        .into_par_iter()
        .map(|k| obj.at(grid_alpha(k / GRID), grid_beta(k % GRID)))
        .collect();
    let mut best = 0;
    for k in 1..values.len() {
        if values[k] < values[best] {
            best = k;
        }
    }
    let start = (grid_alpha(best / GRID), grid_beta(best % GRID));
    let steps = (grid_alpha(1), grid_beta(1));
    let (alpha, beta, min_cond) = refine(&obj, start, values[best], steps);
    let m = Measurement { alpha, beta }.canonical();
    (discord_from_min(rho, min_cond), m)
}

/// Local refinement from an arbitrary starting measurement, with brackets of
/// `half_width` radians per coordinate. Returns the minimized conditional
/// entropy and where it was found.
pub fn refine_conditional_entropy(
    rho: &DensityMatrix,
    start: Measurement,
    half_width: f64,
) -> (f64, Measurement) {
    let obj = Objective {
        form: BlochForm::of(rho),
    };
    let f0 = obj.at(start.alpha, start.beta);
    let (alpha, beta, best) = refine(&obj, (start.alpha, start.beta), f0, (half_width, half_width));
    (best, Measurement { alpha, beta }.canonical())
}

/// Discord of a real X-state: the optimal measurement is along one of the
/// coordinate axes.
pub fn discord_xstate(rho: &DensityMatrix) -> Result<f64> {
    let m = rho.matrix();
    for i in 0..4 {
        for j in 0..4 {
            let z = m.0[i][j];
            if i != j && i + j != 3 && z.norm() > X_STATE_TOL {
                return Err(Error::NotXState(format!("entry ({i}, {j}) = {z}")));
            }
            if z.im.abs() > X_STATE_TOL {
                return Err(Error::NotXState(format!("entry ({i}, {j}) = {z} is not real")));
            }
        }
    }
    let form = BlochForm::of(rho);
    let min_cond = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
        .iter()
        .map(|n| conditional_entropy_along(&form, n))
        .fold(f64::INFINITY, f64::min);
    Ok(discord_from_min(rho, min_cond))
}

/// `CC = M_q - discord`.
pub fn classical_correlations(rho: &DensityMatrix) -> f64 {
    let (d, _) = discord_numeric(rho);
    (mutual_information(rho) - d).max(0.0)
}
