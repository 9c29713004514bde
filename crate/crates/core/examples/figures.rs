//! Regenerates the four figure tables (same as `spincorr figures`).
//!
//! cargo run --release --example figures -- [out-dir]

use std::path::PathBuf;

fn main() -> spincorr::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("fig"));
    for path in spincorr::scan::figures::generate(&dir)? {
        println!("{}", path.display());
    }
    Ok(())
}
