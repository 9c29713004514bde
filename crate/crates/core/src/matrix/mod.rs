//! Small-dimension Hermitian linear algebra and entropy primitives.

pub mod dense;
pub mod entropy;
pub mod jacobi;
pub mod state;

pub use dense::{kron, pauli_x, pauli_y, pauli_z, paulis, CMatrix, Matrix2, Matrix3, Matrix4, C64};
pub use entropy::{binary_entropy, shannon_entropy, von_neumann_entropy};
pub use jacobi::{eig_hermitian, eigvals_hermitian, Spectrum};
pub use state::{partial_trace, Basis, DensityMatrix, QubitState, Subsystem};
