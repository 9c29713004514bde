//! Wootters concurrence and entanglement of formation.

use crate::error::Result;
use crate::matrix::dense::{kron, pauli_y, CMatrix, Matrix4, C64};
use crate::matrix::entropy::binary_entropy;
use crate::matrix::jacobi::eig_hermitian;
use crate::matrix::state::DensityMatrix;

/// Entries outside the X pattern below this size count as zero.
const X_PATTERN_TOL: f64 = 1e-14;

fn is_x_shaped(m: &Matrix4) -> bool {
    (0..4).all(|i| {
        (0..4).all(|j| i == j || i + j == 3 || m.0[i][j].norm() <= X_PATTERN_TOL)
    })
}

/// `C = max(0, l1 - l2 - l3 - l4)`, `l_i` the descending square roots of the
/// eigenvalues of `rho (sy sy) rho* (sy sy)`.
///
/// X-shaped states use the equivalent `2 max(0, |r23| - sqrt(r11 r44), |r14| - sqrt(r22 r33))`.
/// Otherwise the `l_i` are taken as singular values of `tau_ij = v_i^T (sy sy) v_j`
/// with `v_i = sqrt(p_i) e_i` from the spectral decomposition of `rho`; this
/// keeps the small `l_i` accurate to roundoff instead of its square root.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    let m = rho.matrix();
    if is_x_shaped(m) {
        let d = |i: usize| m.0[i][i].re.max(0.0);
        let c1 = m.0[1][2].norm() - (d(0) * d(3)).sqrt();
        let c2 = m.0[0][3].norm() - (d(1) * d(2)).sqrt();
        return Ok((2.0 * c1.max(c2)).clamp(0.0, 1.0));
    }
    let yy = kron(&pauli_y(), &pauli_y());
    let spectrum = eig_hermitian(m)?;
    let v: [[C64; 4]; 4] = std::array::from_fn(|k| {
        let w = spectrum.values[k].max(0.0).sqrt();
        spectrum.vector(k).map(|z| z * w)
    });
    let tau = CMatrix::<4>::from_fn(|i, j| {
        let yv = yy.apply(&v[j]);
        (0..4).map(|a| v[i][a] * yv[a]).sum()
    });
    let mut l = singular_values(&tau);
    l.sort_by(|a, b| b.total_cmp(a));
    Ok((l[0] - l[1] - l[2] - l[3]).clamp(0.0, 1.0))
}

/// One-sided (Hestenes) Jacobi: rotate column pairs until mutually
/// orthogonal; the column norms are then the singular values.
fn singular_values(a: &Matrix4) -> [f64; 4] {
    let mut cols: [[C64; 4]; 4] = std::array::from_fn(|j| std::array::from_fn(|i| a.0[i][j]));
    for _ in 0..60 {
        let mut rotated = false;
        for p in 0..3 {
            for q in p + 1..4 {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma: C64 = (0..4).map(|i| cols[p][i].conj() * cols[q][i]).sum();
                let g = gamma.norm();
                if g <= 1e-15 * (alpha * beta).sqrt() || g < 1e-300 {
                    continue;
                }
                rotated = true;
                // make the overlap real, then rotate as in the real case
                let phase = (gamma / g).conj();
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..4 {
                    let x = cols[p][i];
                    let y = cols[q][i] * phase;
                    cols[p][i] = x * c - y * s;
                    cols[q][i] = x * s + y * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    cols.map(|c| c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
}

/// `E = h2((1 + sqrt(1 - C^2)) / 2)` in bits.
pub fn eof_from_concurrence(c: f64) -> Result<f64> {
    let c = c.clamp(0.0, 1.0);
    // (1 - sqrt(1 - C^2))/2 without cancellation
    let s = (1.0 - c * c).sqrt();
    let x = c * c / (2.0 * (1.0 + s));
    binary_entropy(x)
}

pub fn eof(rho: &DensityMatrix) -> Result<f64> {
    eof_from_concurrence(concurrence(rho)?)
}
