use super::state::{DensityMatrix, QubitState};
use crate::error::{Error, Result};

/// States with a spectrum, so entropy works on one or two qubits alike.
pub trait HasSpectrum {
    fn spectrum(&self) -> Vec<f64>;
}

impl HasSpectrum for DensityMatrix {
    fn spectrum(&self) -> Vec<f64> {
        self.eigenvalues().to_vec()
    }
}

impl HasSpectrum for QubitState {
    fn spectrum(&self) -> Vec<f64> {
        self.eigenvalues().to_vec()
    }
}

/// `-x log2 x` with the `0 log 0 = 0` convention.
#[inline]
pub fn entropy_term(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

/// Shannon entropy in bits of a (sub)normalized probability vector.
pub fn shannon_entropy(p: &[f64]) -> f64 {
    p.iter().map(|&x| entropy_term(x)).sum()
}

/// `S(rho) = -Tr rho log2 rho`, in bits.
pub fn von_neumann_entropy<S: HasSpectrum>(rho: &S) -> f64 {
    shannon_entropy(&rho.spectrum()).max(0.0)
}

/// `h2(x) = -x log2 x - (1-x) log2 (1-x)`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    const SLACK: f64 = 1e-12;
    if !(-SLACK..=1.0 + SLACK).contains(&x) || x.is_nan() {
        return Err(Error::DomainError(format!(
            "binary entropy argument {x} outside [0, 1]"
        )));
    }
    let x = x.clamp(0.0, 1.0);
    Ok(entropy_term(x) + entropy_term(1.0 - x))
}

/// Entropy of a qubit whose Bloch vector has length `r`.
#[inline]
pub(crate) fn qubit_entropy_from_radius(r: f64) -> f64 {
    let r = r.clamp(0.0, 1.0);
    // (1 - r)/2 computed directly keeps precision for nearly pure states.
    let small = 0.5 * (1.0 - r);
    let large = 0.5 * (1.0 + r);
    entropy_term(small) + entropy_term(large)
}
