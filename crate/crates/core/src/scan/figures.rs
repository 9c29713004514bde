//! The four standard figure tables, written as CSV plus SVG.

use std::fs;
use std::path::{Path, PathBuf};

use super::csv::{emit_csv, format_value};
use super::region::{zero_entanglement_region, NullRegion};
use super::svg::emit_svg;
use super::{evaluate_all, sweep, Axis, Point, ScanRow, SweepSpec};
use crate::error::{Error, Result};
use crate::xy::Separation;

pub const GAMMA: f64 = 0.5;
pub const FIG3_TEMPERATURES: [f64; 5] = [0.01, 0.1, 0.3, 0.5, 1.0];
pub const FIG4_FIELDS: [f64; 4] = [1.0, 4.0, 8.0, 25.0];

fn h_sweep(temperature: f64, separation: Separation) -> SweepSpec {
    SweepSpec {
        base: Point::XY {
            gamma: GAMMA,
            h: 0.0,
            temperature,
            separation,
        },
        axis: Axis::H,
        min: 0.0,
        max: 2.0,
        count: 201,
    }
}

/// Discord, EoF and classical correlations of nearest neighbours against `h`
/// in the ground state.
pub fn fig1_rows() -> Result<Vec<ScanRow>> {
    sweep(&h_sweep(0.0, Separation::Finite(1)))
}

/// Ground-state discord against `h` for R = 1, 2, 3 and the R -> infinity limit.
pub fn fig2_rows() -> Result<Vec<ScanRow>> {
    let mut points = Vec::new();
    for r in [Separation::Finite(1), Separation::Finite(2), Separation::Finite(3), Separation::Infinite] {
        points.extend(h_sweep(0.0, r).points()?);
    }
    Ok(evaluate_all(&points))
}

/// Nearest-neighbour EoF and discord against `h` at several temperatures.
pub fn fig3_rows() -> Result<Vec<ScanRow>> {
    let mut points = Vec::new();
    for t in FIG3_TEMPERATURES {
        points.extend(h_sweep(t, Separation::Finite(1)).points()?);
    }
    Ok(evaluate_all(&points))
}

/// Null-entanglement region for each fig. 3 temperature. `None` when no
/// separable field was found in the scan bracket.
pub fn fig3_regions() -> Result<Vec<(f64, Option<NullRegion>)>> {
    FIG3_TEMPERATURES
        .iter()
        .map(|&t| match zero_entanglement_region(GAMMA, Separation::Finite(1), t) {
            Ok(r) => Ok((t, Some(r))),
            Err(Error::NotFound { .. }) => Ok((t, None)),
            Err(e) => Err(e),
        })
        .collect()
}

pub const REGION_HEADER: &str = "gamma,R,T,h_lo,h_hi,width";

pub fn regions_csv(regions: &[(f64, Option<NullRegion>)]) -> String {
    let mut out = format!("{REGION_HEADER}\n");
    for &(t, r) in regions {
        let (lo, hi) = match r {
            Some(NullRegion::Point(p)) => (format_value(p), format_value(p)),
            Some(NullRegion::Interval { lo, hi }) => (format_value(lo), format_value(hi)),
            None => (String::new(), String::new()),
        };
        let width = r.map(|r| r.width()).unwrap_or(0.0);
        out.push_str(&format!(
            "{},1,{},{lo},{hi},{}\n",
            format_value(GAMMA),
            format_value(t),
            format_value(width)
        ));
    }
    out
}

/// Heisenberg pair: concurrence, discord and classical correlations against
/// `T` for several fields.
pub fn fig4_rows() -> Result<Vec<ScanRow>> {
    let mut points = Vec::new();
    for b in FIG4_FIELDS {
        let spec = SweepSpec {
            base: Point::Heisenberg {
                j: 1.0,
                b,
                temperature: 0.0,
            },
            axis: Axis::T,
            min: 0.05,
            max: 10.0,
            count: 200,
        };
        points.extend(spec.points()?);
    }
    Ok(evaluate_all(&points))
}

/// Writes `fig1..fig4` `.csv`/`.svg` and `fig3_region.csv` into `dir`,
/// creating it if needed. Returns the written paths.
pub fn generate(dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();
    let mut put = |name: &str, rows: &[ScanRow], x: &str, cols: &[&str]| -> Result<()> {
        let csv = dir.join(format!("{name}.csv"));
        let svg = dir.join(format!("{name}.svg"));
        emit_csv(rows, &csv)?;
        emit_svg(rows, x, cols, &svg)?;
        written.push(csv);
        written.push(svg);
        Ok(())
    };
    put("fig1", &fig1_rows()?, "h", &["discord", "eof", "cc"])?;
    put("fig2", &fig2_rows()?, "h", &["discord"])?;
    put("fig3", &fig3_rows()?, "h", &["eof", "discord"])?;
    put("fig4", &fig4_rows()?, "T", &["concurrence", "discord", "cc"])?;
    let region = dir.join("fig3_region.csv");
    fs::write(&region, regions_csv(&fig3_regions()?)).map_err(|e| Error::io(&region, e))?;
    written.push(region);
    Ok(written)
}
