use crate::error::Result;
use crate::matrix::dense::Matrix3;
use crate::matrix::jacobi::eigvals_hermitian;
use crate::matrix::state::DensityMatrix;

use super::bloch::BlochForm;

/// Maximal CHSH expectation `2 sqrt(t1 + t2)`, with `t1 >= t2` the two largest
/// eigenvalues of `T^T T`.
pub fn chsh_max(rho: &DensityMatrix) -> Result<f64> {
    let t = BlochForm::of(rho).t;
    let mut tt = [[0.0; 3]; 3];
    for (i, row) in tt.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = (0..3).map(|k| t[k][i] * t[k][j]).sum();
        }
    }
    let ev = eigvals_hermitian(&Matrix3::from_real(tt))?;
    Ok(2.0 * (ev[0] + ev[1]).max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::state::QubitState;
    use std::f64::consts::SQRT_2;

    #[test]
    fn examples() {
        let s = chsh_max(&DensityMatrix::singlet()).unwrap();
        assert!((s - 2.0 * SQRT_2).abs() < 1e-12);
        let w = chsh_max(&DensityMatrix::werner(0.9).unwrap()).unwrap();
        assert!((w - 2.0 * SQRT_2 * 0.9).abs() < 1e-12);
        assert_eq!(chsh_max(&DensityMatrix::maximally_mixed()).unwrap(), 0.0);
        let a = QubitState::from_bloch([0.0, 0.0, 1.0]).unwrap();
        let p = DensityMatrix::product(&a, &a).unwrap();
        assert!(chsh_max(&p).unwrap() <= 2.0 + 1e-12);
    }
}
