//! Field interval of vanishing nearest-neighbour entanglement at fixed `T`.

use crate::error::{Error, Result};
use crate::xy::{factorizing_field, pair_correlators, state_matrix, Separation, XYParams};

pub const SCAN_STEP: f64 = 0.01;
pub const H_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NullRegion {
    /// Zero temperature: entanglement vanishes only at the factorizing field.
    Point(f64),
    Interval { lo: f64, hi: f64 },
}

impl NullRegion {
    pub fn width(&self) -> f64 {
        match *self {
            NullRegion::Point(_) => 0.0,
            NullRegion::Interval { lo, hi } => hi - lo,
        }
    }

    pub fn contains(&self, h: f64) -> bool {
        match *self {
            NullRegion::Point(p) => p == h,
            NullRegion::Interval { lo, hi } => (lo..=hi).contains(&h),
        }
    }
}

/// `2 max(|r23| - sqrt(r11 r44), |r14| - sqrt(r22 r33))`: the concurrence
/// before clamping at zero, so its sign separates entangled from separable.
pub fn signed_concurrence(gamma: f64, h: f64, separation: Separation, temperature: f64) -> Result<f64> {
    let c = pair_correlators(&XYParams::equilibrium(gamma, h, temperature, separation)?)?;
    let m = state_matrix(&c);
    let d = |i: usize| m.0[i][i].re.max(0.0);
    let a = m.0[1][2].norm() - (d(0) * d(3)).sqrt();
    let b = m.0[0][3].norm() - (d(1) * d(2)).sqrt();
    Ok(2.0 * a.max(b))
}

/// Scan bracket `[max(0, h_f - 0.5), min(2, h_f + 0.8)]`.
pub fn scan_bracket(gamma: f64) -> (f64, f64) {
    let hf = factorizing_field(gamma);
    ((hf - 0.5).max(0.0), (hf + 0.8).min(2.0))
}

/// Bisects a sign change of `f` between `inside` (`f <= 0`) and `outside`.
fn bisect(f: &impl Fn(f64) -> Result<f64>, mut inside: f64, mut outside: f64) -> Result<f64> {
    while (outside - inside).abs() > H_TOL {
        let mid = 0.5 * (inside + outside);
        if f(mid)? <= 0.0 {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    Ok(0.5 * (inside + outside))
}

/// Interval of fields with zero concurrence. At `T = 0` it is the point
/// `h_f = sqrt(1 - gamma^2)`. Otherwise the bracket is scanned at
/// [`SCAN_STEP`] and the run of non-positive signed concurrence nearest to
/// `h_f` is refined by bisection to [`H_TOL`]. An edge that reaches the
/// bracket is reported at the bracket.
pub fn zero_entanglement_region(gamma: f64, separation: Separation, temperature: f64) -> Result<NullRegion> {
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::DomainError(format!("gamma = {gamma} must lie in (0, 1)")));
    }
    if !(temperature >= 0.0) {
        return Err(Error::DomainError(format!("temperature = {temperature} must be >= 0")));
    }
    let hf = factorizing_field(gamma);
    if temperature == 0.0 {
        return Ok(NullRegion::Point(hf));
    }
    let (lo, hi) = scan_bracket(gamma);
    let f = |h: f64| signed_concurrence(gamma, h, separation, temperature);
    let n = ((hi - lo) / SCAN_STEP).round() as usize;
    let grid: Vec<f64> = (0..=n).map(|k| if k == n { hi } else { lo + SCAN_STEP * k as f64 }).collect();
    let null: Vec<bool> = grid.iter().map(|&h| f(h).map(|s| s <= 0.0)).collect::<Result<_>>()?;

    // runs of consecutive null grid points, as index ranges
    let mut runs = Vec::new();
    let mut k = 0;
    while k < null.len() {
        if null[k] {
            let start = k;
            while k + 1 < null.len() && null[k + 1] {
                k += 1;
            }
            runs.push((start, k));
        }
        k += 1;
    }
    let distance = |&(a, b): &(usize, usize)| {
        if grid[a] <= hf && hf <= grid[b] {
            0.0
        } else {
            (grid[a] - hf).abs().min((grid[b] - hf).abs())
        }
    };
    let Some(&(a, b)) = runs.iter().min_by(|x, y| distance(x).total_cmp(&distance(y))) else {
        return Err(Error::NotFound { lo, hi });
    };
    let left = if a == 0 { grid[0] } else { bisect(&f, grid[a], grid[a - 1])? };
    let right = if b == n { grid[n] } else { bisect(&f, grid[b], grid[b + 1])? };
    Ok(NullRegion::Interval { lo: left, hi: right })
}
