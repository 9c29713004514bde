//! Every correlation measure for a few textbook two-qubit states.
//!
//! cargo run --release --example measures

use spincorr::matrix::{DensityMatrix, QubitState};
use spincorr::measures::{discord_xstate, report};

fn main() -> spincorr::Result<()> {
    let up = QubitState::from_bloch([0.0, 0.0, 1.0])?;
    let plus = QubitState::from_bloch([1.0, 0.0, 0.0])?;
    let states = [
        ("singlet", DensityMatrix::singlet()),
        ("werner p=0.5", DensityMatrix::werner(0.5)?),
        ("werner p=0.2", DensityMatrix::werner(0.2)?),
        ("product", DensityMatrix::product(&up, &plus)?),
        ("I/4", DensityMatrix::maximally_mixed()),
    ];
    println!(
        "{:<14} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
        "state", "C", "EoF", "discord", "CC", "I", "CHSH"
    );
    for (name, rho) in &states {
        let r = report(rho)?;
        println!(
            "{name:<14} {:>8.5} {:>8.5} {:>8.5} {:>8.5} {:>8.5} {:>8.5}",
            r.concurrence, r.eof, r.discord, r.classical, r.mutual_info, r.chsh
        );
    }

    // Werner states are X-shaped, so the three-axis formula applies
    let w = DensityMatrix::werner(0.5)?;
    println!("\nwerner p=0.5: numeric {:.12}, x-state {:.12}", report(&w)?.discord, discord_xstate(&w)?);
    Ok(())
}
