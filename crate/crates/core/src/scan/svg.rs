//! Static line plots of sweep tables (SVG 1.1, `line`/`polyline`/`text` only).

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::csv::format_value;
use super::ScanRow;
use crate::error::{Error, Result};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 450.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 50.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];
const PARAMETERS: [&str; 6] = ["gamma", "h", "B", "J", "T", "R"];

/// Rows sharing every parameter except `x` form one series.
fn group_key(row: &ScanRow, x: &str) -> Result<Vec<String>> {
    let mut key = Vec::new();
    for p in PARAMETERS {
        if p == x {
            continue;
        }
        match (p, row.value(p)?) {
            ("R", Some(_)) => key.push(format!("R={}", row.separation.expect("R present"))),
            (_, Some(v)) => key.push(format!("{p}={}", format_value(v))),
            _ => {}
        }
    }
    Ok(key)
}

struct Series {
    label: String,
    points: Vec<(f64, f64)>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn collect_series(rows: &[ScanRow], x: &str, columns: &[&str]) -> Result<Vec<Series>> {
    let mut groups: Vec<(Vec<String>, Vec<&ScanRow>)> = Vec::new();
    for row in rows {
        let key = group_key(row, x)?;
        match groups.iter_mut().find(|g| g.0 == key) {
            Some(g) => g.1.push(row),
            None => groups.push((key, vec![row])),
        }
    }
    // legend labels only name the parameters that vary between groups
    let shared = |part: &String| groups.iter().all(|g| g.0.contains(part));
    let mut series = Vec::new();
    for (key, members) in &groups {
        let varying: Vec<&str> = key.iter().filter(|p| !shared(p)).map(String::as_str).collect();
        for &col in columns {
            let mut points = Vec::new();
            for row in members {
                if let (Some(xv), Some(yv)) = (row.value(x)?, row.value(col)?) {
                    if xv.is_finite() && yv.is_finite() {
                        points.push((xv, yv));
                    }
                }
            }
            let label = if varying.is_empty() {
                col.to_string()
            } else {
                format!("{col} {}", varying.join(" "))
            };
            series.push(Series { label, points });
        }
    }
    Ok(series)
}

/// Renders `columns` against the `x` column. Rows that differ in any other
/// parameter are drawn as separate curves.
pub fn render_svg(rows: &[ScanRow], x: &str, columns: &[&str]) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::EmptyTable);
    }
    rows[0].value(x)?;
    for c in columns {
        rows[0].value(c)?;
    }
    let series = collect_series(rows, x, columns)?;
    let all = series.iter().flat_map(|s| s.points.iter());
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(a, b) in all {
        x0 = x0.min(a);
        x1 = x1.max(a);
        y0 = y0.min(b);
        y1 = y1.max(b);
    }
    if !x0.is_finite() {
        return Err(Error::EmptyTable);
    }
    if x1 == x0 {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if y1 == y0 {
        y0 -= 0.5;
        y1 += 0.5;
    }
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |v: f64| LEFT + (v - x0) / (x1 - x0) * plot_w;
    let sy = |v: f64| TOP + (y1 - v) / (y1 - y0) * plot_h;

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )
    .unwrap();
    let (bx, by) = (LEFT, TOP + plot_h);
    writeln!(s, r#"<line x1="{bx}" y1="{by}" x2="{:.2}" y2="{by}" stroke="black"/>"#, LEFT + plot_w).unwrap();
    writeln!(s, r#"<line x1="{bx}" y1="{TOP}" x2="{bx}" y2="{by}" stroke="black"/>"#).unwrap();
    let font = r#"font-family="sans-serif" font-size="12""#;
    for (v, anchor) in [(x0, "start"), (x1, "end")] {
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" {font} text-anchor="{anchor}">{}</text>"#,
            sx(v),
            by + 16.0,
            format_value(v)
        )
        .unwrap();
    }
    for v in [y0, y1] {
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" {font} text-anchor="end">{}</text>"#,
            LEFT - 6.0,
            sy(v) + 4.0,
            format_value(v)
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" {font} text-anchor="middle">{}</text>"#,
        LEFT + 0.5 * plot_w,
        HEIGHT - 12.0,
        escape(x)
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="16" y="{:.2}" {font} text-anchor="middle" transform="rotate(-90 16 {:.2})">{}</text>"#,
        TOP + 0.5 * plot_h,
        TOP + 0.5 * plot_h,
        escape(&columns.join(", "))
    )
    .unwrap();

    for (k, se) in series.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        match se.points.len() {
            0 => {}
            1 => {
                let (px, py) = (sx(se.points[0].0), sy(se.points[0].1));
                writeln!(
                    s,
                    r#"<line x1="{:.2}" y1="{py:.2}" x2="{:.2}" y2="{py:.2}" stroke="{color}" stroke-width="2"/>"#,
                    px - 5.0,
                    px + 5.0
                )
                .unwrap();
                writeln!(
                    s,
                    r#"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="{color}" stroke-width="2"/>"#,
                    py - 5.0,
                    py + 5.0
                )
                .unwrap();
            }
            _ => {
                let pts: Vec<String> = se
                    .points
                    .iter()
                    .map(|&(a, b)| format!("{:.2},{:.2}", sx(a), sy(b)))
                    .collect();
                writeln!(
                    s,
                    r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
                    pts.join(" ")
                )
                .unwrap();
            }
        }
        let ly = TOP + 14.0 * k as f64 + 6.0;
        let lx = WIDTH - RIGHT + 10.0;
        writeln!(
            s,
            r#"<line x1="{lx}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/>"#,
            lx + 18.0
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="10">{}</text>"#,
            lx + 22.0,
            ly + 3.5,
            escape(&se.label)
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}

pub fn emit_svg(rows: &[ScanRow], x: &str, columns: &[&str], path: &Path) -> Result<()> {
    let text = render_svg(rows, x, columns)?;
    fs::write(path, text).map_err(|e| Error::io(path, e))
}
