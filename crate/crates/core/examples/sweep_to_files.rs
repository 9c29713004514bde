//! A field sweep written as CSV and SVG, then read back.
//!
//! cargo run --release --example sweep_to_files -- [out-dir]

use std::path::PathBuf;

use spincorr::scan::csv::{emit_csv, read_csv};
use spincorr::scan::svg::emit_svg;
use spincorr::scan::{sweep, Axis, Point, SweepSpec};
use spincorr::xy::Separation;

fn main() -> spincorr::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let spec = SweepSpec {
        base: Point::XY {
            gamma: 0.5,
            h: 0.0,
            temperature: 0.1,
            separation: Separation::Finite(2),
        },
        axis: Axis::H,
        min: 0.0,
        max: 2.0,
        count: 81,
    };
    let rows = sweep(&spec)?;
    let csv = dir.join("sweep.csv");
    let svg = dir.join("sweep.svg");
    emit_csv(&rows, &csv)?;
    emit_svg(&rows, "h", &["discord", "eof", "cc"], &svg)?;
    assert_eq!(read_csv(&csv)?, rows);

    let peak = rows
        .iter()
        .max_by(|a, b| a.discord.partial_cmp(&b.discord).unwrap())
        .unwrap();
    println!("wrote {} and {}", csv.display(), svg.display());
    println!("discord peaks at h = {:?} with {:?}", peak.h.unwrap(), peak.discord.unwrap());
    Ok(())
}
