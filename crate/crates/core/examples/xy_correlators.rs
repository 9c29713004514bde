//! Spin correlators and the two-site state of the infinite XY chain.
//!
//! cargo run --release --example xy_correlators

use spincorr::xy::{
    bell_basis, bell_pattern_defect, pair_correlators, pair_correlators_lenient, state_from_correlators, Separation,
    XYParams,
};

fn main() -> spincorr::Result<()> {
    let gamma = 0.5;
    println!("gamma = {gamma}, T = 0.2");
    println!("{:>5} {:>5} {:>12} {:>12} {:>12} {:>12}", "h", "R", "mz", "txx", "tyy", "tzz");
    for h in [0.3, 0.866, 1.5] {
        for r in [Separation::Finite(1), Separation::Finite(3), Separation::Infinite] {
            // the R -> infinity limit converges slowly in the ordered phase
            let c = pair_correlators_lenient(&XYParams::equilibrium(gamma, h, 0.2, r)?)?;
            let note = match c.limit {
                Some(l) if !l.converged => format!("  (R = {}: still moving by {:.0e})", l.evaluated_at, l.last_change),
                Some(l) => format!("  (limit reached by R = {})", l.evaluated_at),
                None => String::new(),
            };
            println!(
                "{h:>5} {:>5} {:>12.8} {:>12.8} {:>12.8} {:>12.8}{note}",
                r.to_string(),
                c.mz, c.txx, c.tyy, c.tzz
            );
        }
    }

    let c = pair_correlators(&XYParams::equilibrium(gamma, 1.5, 0.5, Separation::Finite(1))?)?;
    let rho = state_from_correlators(&c)?;
    println!("\nh = 1.5, T = 0.5, R = 1");
    for i in 0..4 {
        let row: Vec<String> = (0..4).map(|j| format!("{:>9.5}", rho.entry(i, j).re)).collect();
        println!("  {}", row.join(" "));
    }
    // in the Bell basis the state splits into a real block and an imaginary block
    let defect = bell_pattern_defect(&bell_basis(&rho)?);
    println!("largest entry off the Bell-basis pattern: {defect:.1e}");
    Ok(())
}
