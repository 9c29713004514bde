use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Fixed-size complex square matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMatrix<const N: usize>(pub [[C64; N]; N]);

pub type Matrix2 = CMatrix<2>;
pub type Matrix3 = CMatrix<3>;
pub type Matrix4 = CMatrix<4>;

impl<const N: usize> CMatrix<N> {
    pub fn zeros() -> Self {
        CMatrix([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn from_real(rows: [[f64; N]; N]) -> Self {
        Self::from_fn(|i, j| C64::new(rows[i][j], 0.0))
    }

    pub fn diagonal(d: [f64; N]) -> Self {
        Self::from_fn(|i, j| if i == j { C64::new(d[i], 0.0) } else { ZERO })
    }

    /// `|v><v|`
    pub fn outer(v: &[C64; N]) -> Self {
        Self::from_fn(|i, j| v[i] * v[j].conj())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i])
    }

    pub fn trace(&self) -> C64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    /// Largest deviation from Hermiticity, `max |m_ij - conj(m_ji)|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..N {
            for j in i..N {
                worst = worst.max((self.0[i][j] - self.0[j][i].conj()).norm());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..N {
            for j in 0..N {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|row| row.iter())
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `U^dagger M U`
    pub fn conjugate_by(&self, u: &Self) -> Self {
        u.adjoint() * *self * *u
    }

    pub fn apply(&self, v: &[C64; N]) -> [C64; N] {
        let mut out = [ZERO; N];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..N).map(|k| self.0[i][k] * v[k]).sum();
        }
        out
    }
}

impl<const N: usize> Index<(usize, usize)> for CMatrix<N> {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for CMatrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Mul for CMatrix<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| (0..N).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
    }
}

impl<const N: usize> Add for CMatrix<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl<const N: usize> Sub for CMatrix<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

/// Kronecker product of two single-qubit operators, basis order |00>,|01>,|10>,|11>.
pub fn kron(a: &Matrix2, b: &Matrix2) -> Matrix4 {
    Matrix4::from_fn(|i, j| a.0[i / 2][j / 2] * b.0[i % 2][j % 2])
}

pub fn pauli_x() -> Matrix2 {
    Matrix2::from_real([[0.0, 1.0], [1.0, 0.0]])
}

pub fn pauli_y() -> Matrix2 {
    CMatrix([[ZERO, -I], [I, ZERO]])
}

pub fn pauli_z() -> Matrix2 {
    Matrix2::from_real([[1.0, 0.0], [0.0, -1.0]])
}

/// The three Pauli matrices in x, y, z order.
pub fn paulis() -> [Matrix2; 3] {
    [pauli_x(), pauli_y(), pauli_z()]
}
