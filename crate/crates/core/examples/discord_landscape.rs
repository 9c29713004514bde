//! Conditional entropy over the measurement sphere for an XY chain state, and
//! where the optimizer lands.
//!
//! cargo run --release --example discord_landscape

use std::f64::consts::PI;

use spincorr::measures::{conditional_entropy, discord_numeric, mutual_information, Measurement};
use spincorr::xy::{two_site_state, Separation, XYParams};

fn main() -> spincorr::Result<()> {
    let rho = two_site_state(&XYParams::equilibrium(0.5, 0.6, 0.0, Separation::Finite(1))?)?;
    println!("S(B|{{Pi_A}}) on a coarse (alpha, beta) grid, gamma = 0.5, h = 0.6, T = 0");
    print!("{:>8}", "a \\ b");
    let betas: Vec<f64> = (0..6).map(|k| k as f64 * PI / 6.0).collect();
    for b in &betas {
        print!(" {b:>7.3}");
    }
    println!();
    for k in 0..=6 {
        let a = k as f64 * PI / 12.0;
        print!("{a:>8.3}");
        for &b in &betas {
            print!(" {:>7.4}", conditional_entropy(&rho, &Measurement::new(a, b)?));
        }
        println!();
    }
    let (d, m) = discord_numeric(&rho);
    println!("\nmutual information {:.6}", mutual_information(&rho));
    println!("discord {d:.9} at alpha = {:.6}, beta = {:.6}", m.alpha, m.beta);
    println!("sin(alpha) = {:.6}", m.alpha.sin());
    Ok(())
}
