//! Where nearest-neighbour entanglement vanishes as the chain warms up.
//!
//! cargo run --release --example null_region

use spincorr::scan::{zero_entanglement_region, NullRegion};
use spincorr::xy::{factorizing_field, Separation};
use spincorr::Error;

fn main() -> spincorr::Result<()> {
    let gamma = 0.5;
    println!("gamma = {gamma}, h_f = {:.6}", factorizing_field(gamma));
    for t in [0.0, 0.01, 0.05, 0.1, 0.2, 0.3] {
        match zero_entanglement_region(gamma, Separation::Finite(1), t) {
            Ok(NullRegion::Point(h)) => println!("T = {t:<5} point h = {h:.6}"),
            Ok(NullRegion::Interval { lo, hi }) => {
                println!("T = {t:<5} [{lo:.6}, {hi:.6}]  width {:.6}", hi - lo)
            }
            Err(Error::NotFound { .. }) => println!("T = {t:<5} entangled everywhere in the bracket"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
