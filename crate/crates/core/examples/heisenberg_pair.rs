//! Two-qubit Heisenberg model: levels, ground states and thermal entanglement.
//!
//! cargo run --release --example heisenberg_pair

use spincorr::heisenberg::{concurrence_closed, critical_points, ground_state, thermal_state, HeisenbergParams};
use spincorr::matrix::eigvals_hermitian;
use spincorr::measures::{concurrence, report};

fn main() -> spincorr::Result<()> {
    let j = 1.0;
    let (tc, bc) = critical_points(j)?;
    println!("J = {j}: T_c = {tc:.10}, B_c = {bc}");

    for b in [1.0, 4.0, 8.0] {
        let levels = eigvals_hermitian(&spincorr::heisenberg::hamiltonian(j, b)?)?;
        let c = concurrence(&ground_state(j, b)?)?;
        println!("B = {b}: levels {levels:.3?}, ground-state concurrence {c:.3}");
    }

    println!("\n{:>6} {:>6} {:>9} {:>9} {:>9}", "B", "T", "C", "discord", "CC");
    for b in [1.0, 8.0, 25.0] {
        for t in [0.1, 1.0, 3.0, 6.0, 9.0] {
            let p = HeisenbergParams::new(j, b, t)?;
            let r = report(&thermal_state(&p)?)?;
            assert!((concurrence_closed(&p)? - r.concurrence).abs() < 1e-12);
            println!("{b:>6} {t:>6} {:>9.5} {:>9.5} {:>9.5}", r.concurrence, r.discord, r.classical);
        }
    }
    Ok(())
}
