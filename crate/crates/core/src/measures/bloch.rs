use crate::matrix::dense::{kron, paulis, Matrix2, Matrix4};
use crate::matrix::state::DensityMatrix;

/// Pauli decomposition
/// `rho = (I + a.sigma (x) I + I (x) b.sigma + sum T_ij sigma_i (x) sigma_j) / 4`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochForm {
    pub a: [f64; 3],
    pub b: [f64; 3],
    pub t: [[f64; 3]; 3],
}

impl BlochForm {
    pub fn of(rho: &DensityMatrix) -> Self {
        let s = paulis();
        let id = Matrix2::identity();
        let ev = |op: Matrix4| rho.expectation(&op).re;
        BlochForm {
            a: std::array::from_fn(|i| ev(kron(&s[i], &id))),
            b: std::array::from_fn(|j| ev(kron(&id, &s[j]))),
            t: std::array::from_fn(|i| std::array::from_fn(|j| ev(kron(&s[i], &s[j])))),
        }
    }

    /// `T n`
    pub fn t_apply(&self, n: &[f64; 3]) -> [f64; 3] {
        std::array::from_fn(|i| dot(&self.t[i], n))
    }
}

#[inline]
pub(crate) fn dot(x: &[f64; 3], y: &[f64; 3]) -> f64 {
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

#[inline]
pub(crate) fn norm(x: &[f64; 3]) -> f64 {
    dot(x, x).sqrt()
}
