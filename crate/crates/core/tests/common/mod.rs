//! Shared generators and an independent reference for the integration tests.
#![allow(dead_code)]

use faer::{Mat, Side};
use proptest::prelude::*;
use spincorr::matrix::{CMatrix, DensityMatrix, Matrix2, Matrix4, C64};

/// `G G^+ / Tr` for a 4x4 complex `G` built from 32 reals.
pub fn ginibre_state(re_im: &[f64; 32]) -> DensityMatrix {
    let g = CMatrix::<4>::from_fn(|i, j| C64::new(re_im[8 * i + 2 * j], re_im[8 * i + 2 * j + 1]));
    let mut m = CMatrix::<4>::from_fn(|i, j| (0..4).map(|k| g.0[i][k] * g.0[j][k].conj()).sum());
    let tr = m.trace().re;
    m = m.scale(1.0 / tr);
    DensityMatrix::new(hermitize(m)).expect("Ginibre state is valid")
}

pub fn pure_state(re_im: &[f64; 8]) -> DensityMatrix {
    let psi = [0, 1, 2, 3].map(|k| C64::new(re_im[2 * k], re_im[2 * k + 1]));
    DensityMatrix::from_pure(psi).expect("nonzero vector")
}

/// A general SU(2) element times a phase.
pub fn unitary2(p: [f64; 4]) -> Matrix2 {
    let [phi, theta, psi, chi] = p;
    let e = |x: f64| C64::from_polar(1.0, x);
    let (c, s) = (theta.cos(), theta.sin());
    CMatrix([
        [e(phi + psi) * c, e(phi + chi) * s],
        [-e(phi - chi) * s, e(phi - psi) * c],
    ])
}

/// Real X-shaped state: diagonal weights `d` (normalized) and coherences
/// shrunk until positive.
pub fn x_state(d: [f64; 4], c23: f64, c14: f64) -> DensityMatrix {
    let t: f64 = d.iter().sum();
    let d = d.map(|x| x / t);
    let c23 = c23 * (d[1] * d[2]).sqrt();
    let c14 = c14 * (d[0] * d[3]).sqrt();
    let mut m = CMatrix::<4>::diagonal(d);
    m.0[1][2] = C64::new(c23, 0.0);
    m.0[2][1] = C64::new(c23, 0.0);
    m.0[0][3] = C64::new(c14, 0.0);
    m.0[3][0] = C64::new(c14, 0.0);
    DensityMatrix::new(m).expect("X-state is valid")
}

pub fn arb_ginibre() -> impl Strategy<Value = DensityMatrix> {
    prop::array::uniform32(-1.0f64..1.0).prop_map(|a| ginibre_state(&a))
}

pub fn arb_pure() -> impl Strategy<Value = DensityMatrix> {
    prop::array::uniform8(-1.0f64..1.0)
        .prop_filter("nonzero", |a| a.iter().map(|x| x * x).sum::<f64>() > 1e-3)
        .prop_map(|a| pure_state(&a))
}

pub fn arb_unitary() -> impl Strategy<Value = Matrix2> {
    prop::array::uniform4(0.0f64..std::f64::consts::TAU).prop_map(unitary2)
}

pub fn arb_x_state() -> impl Strategy<Value = DensityMatrix> {
    (prop::array::uniform4(0.01f64..1.0), -1.0f64..1.0, -1.0f64..1.0).prop_map(|(d, a, b)| x_state(d, a, b))
}

fn hermitize<const N: usize>(m: CMatrix<N>) -> CMatrix<N> {
    CMatrix::from_fn(|i, j| 0.5 * (m.0[i][j] + m.0[j][i].conj()))
}

// ---- reference implementation: faer eigenvalues and explicit projectors ----

fn eigenvalues<const N: usize>(m: &CMatrix<N>) -> Vec<f64> {
    let a = Mat::<C64>::from_fn(N, N, |i, j| m.0[i][j]);
    a.self_adjoint_eigenvalues(Side::Lower).expect("eigensolver converges")
}

pub fn entropy_bits<const N: usize>(m: &CMatrix<N>) -> f64 {
    eigenvalues(m).into_iter().filter(|&p| p > 1e-300).map(|p| -p * p.log2()).sum()
}

/// Entropy of a 2x2 density matrix from its closed-form eigenvalues.
fn entropy2(m: &Matrix2) -> f64 {
    let (a, d, b) = (m.0[0][0].re, m.0[1][1].re, m.0[0][1]);
    let r = ((a - d) * (a - d) + 4.0 * b.norm_sqr()).sqrt();
    [(a + d + r) / 2.0, (a + d - r) / 2.0]
        .into_iter()
        .filter(|&p| p > 1e-300)
        .map(|p| -p * p.log2())
        .sum()
}

fn trace_a(m: &Matrix4) -> Matrix2 {
    CMatrix::from_fn(|b, b2| m.0[b][b2] + m.0[2 + b][2 + b2])
}

fn trace_b(m: &Matrix4) -> Matrix2 {
    CMatrix::from_fn(|a, a2| m.0[2 * a][2 * a2] + m.0[2 * a + 1][2 * a2 + 1])
}

pub fn reference_mutual_information(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    entropy_bits(&trace_a(m)) + entropy_bits(&trace_b(m)) - entropy_bits(m)
}

/// `sum_k p_k S(rho_A|k)` for the projective measurement on B with
/// `|0'> = cos a |0> + e^{ib} sin a |1>`.
pub fn reference_conditional_entropy(rho: &DensityMatrix, alpha: f64, beta: f64) -> f64 {
    let m = rho.matrix();
    let (c, s) = (alpha.cos(), alpha.sin());
    let e = C64::from_polar(1.0, beta);
    let kets = [[C64::new(c, 0.0), e * s], [-e.conj() * s, C64::new(c, 0.0)]];
    let mut total = 0.0;
    for k in kets {
        // <k|_B rho |k>_B, a 2x2 operator on A
        let block = CMatrix::<2>::from_fn(|a, a2| {
            let mut z = C64::new(0.0, 0.0);
            for b in 0..2 {
                for b2 in 0..2 {
                    z += k[b].conj() * m.0[2 * a + b][2 * a2 + b2] * k[b2];
                }
            }
            z
        });
        let p = block.trace().re;
        if p > 1e-14 {
            total += p * entropy2(&block.scale(1.0 / p));
        }
    }
    total
}

/// Discord from a plain `n x n` grid over `alpha in [0, pi/2)`, `beta in [0, pi)`.
/// `alpha = pi/2` is the antipode of `alpha = 0`, the same measurement.
pub fn reference_discord_grid(rho: &DensityMatrix, n: usize) -> f64 {
    use std::f64::consts::{FRAC_PI_2, PI};
    let mut best = f64::INFINITY;
    for i in 0..n {
        let alpha = FRAC_PI_2 * i as f64 / n as f64;
        for j in 0..n {
            let beta = PI * j as f64 / n as f64;
            best = best.min(reference_conditional_entropy(rho, alpha, beta));
        }
    }
    let sa = entropy_bits(&trace_b(rho.matrix()));
    reference_mutual_information(rho) - sa + best
}

pub fn reference_marginal_entropy_a(rho: &DensityMatrix) -> f64 {
    entropy_bits(&trace_b(rho.matrix()))
}

pub fn reference_concurrence(rho: &DensityMatrix) -> f64 {
    // eigenvalues of rho (sy x sy) rho* (sy x sy) via its similar Hermitian form
    let m = rho.matrix();
    let flip = |i: usize| 3 - i;
    let sign = |i: usize| if i == 0 || i == 3 { 1.0 } else { -1.0 };
    let tilde = CMatrix::<4>::from_fn(|i, j| m.0[flip(i)][flip(j)].conj() * (sign(i) * sign(j)));
    let sq = sqrt_psd(m);
    let r = sq * tilde * sq;
    let mut l: Vec<f64> = eigenvalues(&hermitize(r)).into_iter().map(|x| x.max(0.0).sqrt()).collect();
    l.sort_by(|a, b| b.total_cmp(a));
    (l[0] - l[1] - l[2] - l[3]).max(0.0)
}

fn sqrt_psd(m: &Matrix4) -> Matrix4 {
    let a = Mat::<C64>::from_fn(4, 4, |i, j| m.0[i][j]);
    let evd = a.self_adjoint_eigen(Side::Lower).expect("eigensolver converges");
    let (u, s) = (evd.U(), evd.S());
    CMatrix::from_fn(|i, j| {
        (0..4)
            .map(|k| u[(i, k)] * s[k].re.max(0.0).sqrt() * u[(j, k)].conj())
            .sum()
    })
}
