//! Validated one- and two-qubit density matrices.

use std::f64::consts::FRAC_1_SQRT_2;

use super::dense::{kron, Matrix2, Matrix4, C64, ONE, ZERO};
use super::jacobi::{eig_hermitian, eigvals_hermitian_2x2};
use crate::error::{Error, Result};

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues in `[-PSD_TOL, 0)` are roundoff and clamped to zero.
pub const PSD_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// |00>, |01>, |10>, |11>
    Computational,
    /// |Phi+>, |Phi->, |Psi+>, |Psi->
    Bell,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

fn validate_eigenvalues(values: &mut [f64], trace: C64) -> Result<()> {
    if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
        return Err(Error::InvalidState(format!(
            "trace {:.15} differs from 1",
            trace
        )));
    }
    for v in values.iter_mut() {
        if *v < -PSD_TOL {
            return Err(Error::InvalidState(format!(
                "negative eigenvalue {v:.3e}"
            )));
        }
        if *v < 0.0 {
            *v = 0.0;
        }
    }
    Ok(())
}

/// A two-qubit state: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    matrix: Matrix4,
    basis: Basis,
    eigenvalues: [f64; 4],
}

impl DensityMatrix {
    /// Validates `m` as a computational-basis two-qubit state.
    pub fn new(m: Matrix4) -> Result<Self> {
        Self::with_basis(m, Basis::Computational)
    }

    pub fn with_basis(m: Matrix4, basis: Basis) -> Result<Self> {
        let deviation = m.hermiticity_defect();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NonHermitianInput { deviation });
        }
        let mut eigenvalues = eig_hermitian(&m)?.values;
        validate_eigenvalues(&mut eigenvalues, m.trace())?;
        Ok(DensityMatrix {
            matrix: m,
            basis,
            eigenvalues,
        })
    }

    pub fn from_pure(psi: [C64; 4]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::InvalidState("zero state vector".into()));
        }
        let psi = psi.map(|z| z / norm);
        Self::new(Matrix4::outer(&psi))
    }

    /// Computational basis projector `|k><k|`, `k` in 0..4 indexing |ab> as 2a+b.
    pub fn basis_state(k: usize) -> Self {
        let mut m = Matrix4::zeros();
        m.0[k][k] = ONE;
        Self::new(m).expect("basis projector is a valid state")
    }

    pub fn maximally_mixed() -> Self {
        Self::new(Matrix4::identity().scale(0.25)).expect("I/4 is a valid state")
    }

    /// |Psi-> = (|01> - |10>)/sqrt(2)
    pub fn singlet() -> Self {
        let r = FRAC_1_SQRT_2;
        Self::from_pure([ZERO, C64::new(r, 0.0), C64::new(-r, 0.0), ZERO])
            .expect("singlet is a valid state")
    }

    /// `p |Psi-><Psi-| + (1-p) I/4`
    pub fn werner(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::DomainError(format!("Werner weight {p} outside [0, 1]")));
        }
        let m = Self::singlet().matrix.scale(p) + Matrix4::identity().scale((1.0 - p) / 4.0);
        Self::new(m)
    }

    pub fn product(a: &QubitState, b: &QubitState) -> Result<Self> {
        Self::new(kron(a.matrix(), b.matrix()))
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.matrix
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Entry `(i, j)` in the state's basis.
    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.matrix.0[i][j]
    }

    /// Eigenvalues, descending, with roundoff negatives clamped to zero.
    pub fn eigenvalues(&self) -> [f64; 4] {
        self.eigenvalues
    }

    /// `Tr[rho O]`
    pub fn expectation(&self, op: &Matrix4) -> C64 {
        (self.matrix * *op).trace()
    }

    pub fn partial_trace(&self, keep: Subsystem) -> QubitState {
        partial_trace(self, keep)
    }

    /// Applies a local unitary `U_A (x) U_B`.
    pub fn local_unitary(&self, ua: &Matrix2, ub: &Matrix2) -> Result<Self> {
        let u = kron(ua, ub);
        Self::with_basis(u * self.matrix * u.adjoint(), self.basis)
    }
}

/// A single-qubit state with the same validation as [`DensityMatrix`].
#[derive(Clone, Debug)]
pub struct QubitState {
    matrix: Matrix2,
    eigenvalues: [f64; 2],
}

impl QubitState {
    pub fn new(m: Matrix2) -> Result<Self> {
        let deviation = m.hermiticity_defect();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NonHermitianInput { deviation });
        }
        let mut eigenvalues = eigvals_hermitian_2x2(&m);
        validate_eigenvalues(&mut eigenvalues, m.trace())?;
        Ok(QubitState {
            matrix: m,
            eigenvalues,
        })
    }

    /// State with Bloch vector `r`, `|r| <= 1`.
    pub fn from_bloch(r: [f64; 3]) -> Result<Self> {
        let m = Matrix2::from_fn(|i, j| match (i, j) {
            (0, 0) => C64::new(0.5 * (1.0 + r[2]), 0.0),
            (1, 1) => C64::new(0.5 * (1.0 - r[2]), 0.0),
            (0, 1) => C64::new(0.5 * r[0], -0.5 * r[1]),
            _ => C64::new(0.5 * r[0], 0.5 * r[1]),
        });
        Self::new(m)
    }

    pub fn matrix(&self) -> &Matrix2 {
        &self.matrix
    }

    pub fn eigenvalues(&self) -> [f64; 2] {
        self.eigenvalues
    }

    pub fn bloch(&self) -> [f64; 3] {
        let m = &self.matrix.0;
        [2.0 * m[0][1].re, -2.0 * m[0][1].im, (m[0][0] - m[1][1]).re]
    }
}

/// Reduced state of one qubit; index convention |ab> = 2a + b.
pub fn partial_trace(rho: &DensityMatrix, keep: Subsystem) -> QubitState {
    let m = &rho.matrix.0;
    let mut out = Matrix2::zeros();
    for x in 0..2 {
        for y in 0..2 {
            out.0[x][y] = match keep {
                Subsystem::A => m[2 * x][2 * y] + m[2 * x + 1][2 * y + 1],
                Subsystem::B => m[x][y] + m[2 + x][2 + y],
            };
        }
    }
    QubitState::new(out).expect("partial trace of a valid state is valid")
}
