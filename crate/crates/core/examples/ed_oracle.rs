//! Exact diagonalization of short periodic chains as a check on the
//! infinite-chain correlators.
//!
//! cargo run --release --example ed_oracle

use spincorr::ed::{oracle_correlators, ChainModel, FiniteChainSpec};
use spincorr::xy::{pair_correlators, Separation, XYParams};

fn main() -> spincorr::Result<()> {
    let (gamma, h, t) = (0.5, 0.8, 1.0);
    let exact = pair_correlators(&XYParams::equilibrium(gamma, h, t, Separation::Finite(1))?)?;
    println!("gamma = {gamma}, h = {h}, T = {t}, R = 1");
    println!("infinite chain: txx = {:.8}  tyy = {:.8}  tzz = {:.8}", exact.txx, exact.tyy, exact.tzz);
    for n in [4, 6, 8, 10] {
        let spec = FiniteChainSpec::new(n, ChainModel::XY { gamma, h }, t)?;
        let c = oracle_correlators(&spec, 1)?;
        let gap = [c.txx - exact.txx, c.tyy - exact.tyy, c.tzz - exact.tzz, c.mz - exact.mz]
            .iter()
            .fold(0.0f64, |m, d| m.max(d.abs()));
        println!("N = {n:>2}:          txx = {:.8}  tyy = {:.8}  tzz = {:.8}  gap {gap:.1e}", c.txx, c.tyy, c.tzz);
    }
    Ok(())
}
