//! Cyclic Jacobi diagonalization of small Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` and then applies
//! the real symmetric Jacobi rotation that annihilates it. Rotations only
//! touch rows and columns `p`, `q`, so exact zeros elsewhere stay exact zeros.
//! X-shaped two-qubit states therefore keep their block structure and their
//! decoupled diagonal entries are returned without roundoff.

use super::dense::{CMatrix, C64, ZERO};
use crate::error::{Error, Result};

const HERMITIAN_TOL: f64 = 1e-10;
const OFF_DIAGONAL_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 64;

/// Eigen-decomposition `M = V diag(values) V^dagger`, values sorted descending.
#[derive(Clone, Debug)]
pub struct Spectrum<const N: usize> {
    pub values: [f64; N],
    /// Column `k` is the eigenvector of `values[k]`.
    pub vectors: CMatrix<N>,
}

impl<const N: usize> Spectrum<N> {
    pub fn vector(&self, k: usize) -> [C64; N] {
        std::array::from_fn(|i| self.vectors.0[i][k])
    }

    /// `V diag(f(values)) V^dagger`
    pub fn map(&self, f: impl Fn(f64) -> f64) -> CMatrix<N> {
        let mut out = CMatrix::<N>::zeros();
        for k in 0..N {
            let w = f(self.values[k]);
            if w == 0.0 {
                continue;
            }
            for i in 0..N {
                let vi = self.vectors.0[i][k] * w;
                for j in 0..N {
                    out.0[i][j] += vi * self.vectors.0[j][k].conj();
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> CMatrix<N> {
        self.map(|x| x)
    }
}

/// Hermitian eigensolver. Fails with `NonHermitianInput` if the input deviates
/// from Hermiticity by more than 1e-10.
pub fn eig_hermitian<const N: usize>(m: &CMatrix<N>) -> Result<Spectrum<N>> {
    let deviation = m.hermiticity_defect();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NonHermitianInput { deviation });
    }

    // Symmetrize so that the rotations see an exactly Hermitian matrix.
    let mut a = CMatrix::<N>::from_fn(|i, j| {
        if i == j {
            C64::new(m.0[i][i].re, 0.0)
        } else {
            (m.0[i][j] + m.0[j][i].conj()) * 0.5
        }
    });
    let mut v = CMatrix::<N>::identity();
    let threshold = OFF_DIAGONAL_TOL * a.frobenius_norm().max(1.0);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: [usize; N] = std::array::from_fn(|i| i);
    order.sort_by(|&x, &y| a.0[y][y].re.total_cmp(&a.0[x][x].re));
    let values = std::array::from_fn(|k| a.0[order[k]][order[k]].re);
    let vectors = CMatrix::from_fn(|i, k| v.0[i][order[k]]);
    Ok(Spectrum { values, vectors })
}

/// Eigenvalues only, sorted descending.
pub fn eigvals_hermitian<const N: usize>(m: &CMatrix<N>) -> Result<[f64; N]> {
    eig_hermitian(m).map(|s| s.values)
}

fn off_diagonal_norm<const N: usize>(a: &CMatrix<N>) -> f64 {
    let mut s = 0.0;
    for i in 0..N {
        for j in 0..N {
            if i != j {
                s += a.0[i][j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn rotate<const N: usize>(a: &mut CMatrix<N>, v: &mut CMatrix<N>, p: usize, q: usize) {
    let apq = a.0[p][q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = a.0[p][p].re;
    let aqq = a.0[q][q].re;

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // U = diag(1, conj(phase)) * [[c, s], [-s, c]] restricted to (p, q).
    let upp = C64::new(c, 0.0);
    let upq = C64::new(s, 0.0);
    let uqp = phase.conj() * (-s);
    let uqq = phase.conj() * c;

    for k in 0..N {
        let akp = a.0[k][p];
        let akq = a.0[k][q];
        a.0[k][p] = akp * upp + akq * uqp;
        a.0[k][q] = akp * upq + akq * uqq;
    }
    for k in 0..N {
        let apk = a.0[p][k];
        let aqk = a.0[q][k];
        a.0[p][k] = upp.conj() * apk + uqp.conj() * aqk;
        a.0[q][k] = upq.conj() * apk + uqq.conj() * aqk;
    }
    a.0[p][q] = ZERO;
    a.0[q][p] = ZERO;
    a.0[p][p] = C64::new(a.0[p][p].re, 0.0);
    a.0[q][q] = C64::new(a.0[q][q].re, 0.0);

    for k in 0..N {
        let vkp = v.0[k][p];
        let vkq = v.0[k][q];
        v.0[k][p] = vkp * upp + vkq * uqp;
        v.0[k][q] = vkp * upq + vkq * uqq;
    }
}

/// Eigenvalues of a 2x2 Hermitian matrix in closed form, descending.
pub fn eigvals_hermitian_2x2(m: &CMatrix<2>) -> [f64; 2] {
    let a = m.0[0][0].re;
    let d = m.0[1][1].re;
    let b = m.0[0][1];
    let mean = 0.5 * (a + d);
    let radius = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    [mean + radius, mean - radius]
}
