//! Transverse magnetization of the Ising chain: quadrature against the
//! elliptic-integral closed form, and the log divergence of dMz/dh at h = 1.
//!
//! cargo run --release --example magnetization

use spincorr::xy::{magnetization, magnetization_ising_exact};

fn main() -> spincorr::Result<()> {
    println!("{:>6} {:>16} {:>16} {:>9}", "h", "quadrature", "elliptic", "diff");
    for h in [0.25, 0.5, 0.9, 1.1, 2.0, 5.0] {
        let q = magnetization(h, 1.0, 0.0)?;
        let e = magnetization_ising_exact(h)?;
        println!("{h:>6} {q:>16.12} {e:>16.12} {:>9.1e}", (q - e).abs());
    }

    println!("\nslope near the critical field");
    for k in 2..=5 {
        let d = 10f64.powi(-k);
        for h in [1.0 - d, 1.0 + d] {
            let step = d / 10.0;
            let slope = (magnetization(h + step, 1.0, 0.0)? - magnetization(h - step, 1.0, 0.0)?) / (2.0 * step);
            println!("  h = {h:<10} dMz/dh = {slope:>8.4}   |ln|h-1|| = {:.3}", d.ln().abs());
        }
    }
    Ok(())
}
