use crate::error::Result;
use crate::matrix::state::DensityMatrix;

use super::chsh::chsh_max;
use super::discord::{discord_numeric, mutual_information, Measurement};
use super::entanglement::{concurrence, eof_from_concurrence};

/// Every correlation measure of one two-qubit state. Entropic quantities in bits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelationReport {
    pub concurrence: f64,
    pub eof: f64,
    pub discord: f64,
    pub classical: f64,
    pub mutual_info: f64,
    pub chsh: f64,
    pub argmin: Measurement,
}

pub fn report(rho: &DensityMatrix) -> Result<CorrelationReport> {
    let c = concurrence(rho)?;
    let (discord, argmin) = discord_numeric(rho);
    let mutual_info = mutual_information(rho);
    let discord = discord.min(mutual_info);
    Ok(CorrelationReport {
        concurrence: c,
        eof: eof_from_concurrence(c)?,
        discord,
        classical: mutual_info - discord,
        mutual_info,
        chsh: chsh_max(rho)?,
        argmin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;

    #[test]
    fn singlet() {
        let r = report(&DensityMatrix::singlet()).unwrap();
        assert_eq!(r.concurrence, 1.0);
        assert_eq!(r.eof, 1.0);
        assert!((r.discord - 1.0).abs() < 1e-10);
        assert!((r.classical - 1.0).abs() < 1e-10);
        assert!((r.mutual_info - 2.0).abs() < 1e-12);
        assert!((r.chsh - 2.0 * SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn maximally_mixed() {
        let r = report(&DensityMatrix::maximally_mixed()).unwrap();
        for v in [r.concurrence, r.eof, r.discord, r.classical, r.mutual_info, r.chsh] {
            assert!(v.abs() < 1e-15);
        }
    }
}
