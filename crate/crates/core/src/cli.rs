//! Command-line front end. `main` only forwards to [`run`].

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::ed::{oracle_correlators, ChainModel, FiniteChainSpec};
use crate::error::{Error, Result};
use crate::heisenberg::{thermal_state, HeisenbergParams};
use crate::measures::report;
use crate::scan::csv::{emit_csv, format_value, to_csv_string};
use crate::scan::figures::generate;
use crate::scan::svg::emit_svg;
use crate::scan::{sweep, with_threads, zero_entanglement_region, Axis, NullRegion, Point, ScanRow, SweepSpec};
use crate::xy::{pair_correlators, state_from_correlators, CorrelatorSet, Separation, XYParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NO_CONVERGENCE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "spincorr",
    version,
    about = "Quantum correlations of spin pairs in the XY chain and the Heisenberg pair",
    after_help = "Exit status: 0 success, 1 usage or domain error, 2 numerical non-convergence."
)]
struct Cli {
    /// Worker threads for sweeps (default: all cores)
    #[arg(long, global = true, env = "SPINCORR_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sweep the transverse field of the XY chain
    XySweep(XySweep),
    /// Sweep the temperature of the Heisenberg pair
    HeisenbergSweep(HeisenbergSweep),
    /// Field interval of vanishing nearest-neighbour entanglement
    Region(RegionArgs),
    /// Spin correlators of the XY chain at one point
    Correlators(XYPoint),
    /// Every correlation measure at one point (XY, or Heisenberg with --j/--b)
    Discord(DiscordArgs),
    /// Exact-diagonalization correlators of a finite periodic chain
    Oracle(OracleArgs),
    /// Regenerate the fig1..fig4 tables and plots
    Figures(FiguresArgs),
}

#[derive(Debug, Args)]
struct XYPoint {
    #[arg(long, default_value_t = 0.5)]
    gamma: f64,
    #[arg(long, default_value_t = 0.5)]
    h: f64,
    #[arg(long, default_value_t = 0.0)]
    temp: f64,
    /// Separation: integer >= 1 or `inf`
    #[arg(long, default_value = "1")]
    r: Separation,
}

#[derive(Debug, Args)]
struct XySweep {
    #[arg(long, default_value_t = 0.5)]
    gamma: f64,
    #[arg(long, default_value_t = 0.0)]
    h_min: f64,
    #[arg(long, default_value_t = 2.0)]
    h_max: f64,
    #[arg(long, default_value_t = 201)]
    points: usize,
    #[arg(long, default_value_t = 0.0)]
    temp: f64,
    #[arg(long, default_value = "1")]
    r: Separation,
    /// CSV output (default: stdout)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also plot discord, eof and cc against h
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct HeisenbergSweep {
    #[arg(long, default_value_t = 1.0)]
    j: f64,
    #[arg(long, default_value_t = 1.0)]
    b: f64,
    #[arg(long, default_value_t = 0.05)]
    temp_min: f64,
    #[arg(long, default_value_t = 10.0)]
    temp_max: f64,
    #[arg(long, default_value_t = 200)]
    points: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also plot concurrence, discord and cc against T
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RegionArgs {
    #[arg(long, default_value_t = 0.5)]
    gamma: f64,
    #[arg(long, default_value = "1")]
    r: Separation,
    #[arg(long, default_value_t = 0.0)]
    temp: f64,
}

#[derive(Debug, Args)]
struct DiscordArgs {
    #[command(flatten)]
    xy: XYPoint,
    #[arg(long, conflicts_with_all = ["gamma", "h", "r"])]
    j: Option<f64>,
    #[arg(long, conflicts_with_all = ["gamma", "h", "r"])]
    b: Option<f64>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    xy: XYPoint,
    /// Heisenberg exchange; selects the Heisenberg chain
    #[arg(long, conflicts_with_all = ["gamma", "h"])]
    j: Option<f64>,
    #[arg(long, conflicts_with_all = ["gamma", "h"])]
    b: Option<f64>,
    /// Chain length (at most 12)
    #[arg(long, default_value_t = 10)]
    sites: usize,
}

#[derive(Debug, Args)]
struct FiguresArgs {
    #[arg(long, default_value = "fig")]
    out: PathBuf,
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, err) {
        Ok(Output { text, code }) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_convergence_failure() {
                EXIT_NO_CONVERGENCE
            } else {
                EXIT_USAGE
            }
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

struct Output {
    text: String,
    code: i32,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

fn execute(cli: Cli, err: &mut dyn Write) -> Result<Output> {
    let threads = cli.threads;
    match cli.command {
        Command::XySweep(a) => {
            let spec = SweepSpec {
                base: Point::XY {
                    gamma: a.gamma,
                    h: a.h_min,
                    temperature: a.temp,
                    separation: a.r,
                },
                axis: Axis::H,
                min: a.h_min,
                max: a.h_max,
                count: a.points,
            };
            let rows = with_threads(threads, || sweep(&spec))??;
            write_table(&rows, a.out.as_deref(), a.svg.as_deref(), "h", &["discord", "eof", "cc"], err)
        }
        Command::HeisenbergSweep(a) => {
            let spec = SweepSpec {
                base: Point::Heisenberg {
                    j: a.j,
                    b: a.b,
                    temperature: a.temp_min,
                },
                axis: Axis::T,
                min: a.temp_min,
                max: a.temp_max,
                count: a.points,
            };
            let rows = with_threads(threads, || sweep(&spec))??;
            let cols = ["concurrence", "discord", "cc"];
            write_table(&rows, a.out.as_deref(), a.svg.as_deref(), "T", &cols, err)
        }
        Command::Region(a) => region(&a),
        Command::Correlators(p) => {
            let c = pair_correlators(&xy_params(&p)?)?;
            Ok(correlator_lines(&c).into())
        }
        Command::Discord(a) => with_threads(threads, || discord(&a))?,
        Command::Oracle(a) => with_threads(threads, || oracle(&a))?,
        Command::Figures(a) => {
            let written = with_threads(threads, || generate(&a.out))??;
            let mut text = String::new();
            for p in written {
                writeln!(text, "{}", p.display()).unwrap();
            }
            Ok(text.into())
        }
    }
}

fn xy_params(p: &XYPoint) -> Result<XYParams> {
    XYParams::equilibrium(p.gamma, p.h, p.temp, p.r)
}

/// Writes the CSV to `path` or returns it as output. Rows with convergence
/// failures are counted on `err` but do not change the exit status.
fn write_table(
    rows: &[ScanRow],
    path: Option<&Path>,
    svg: Option<&Path>,
    x: &str,
    columns: &[&str],
    err: &mut dyn Write,
) -> Result<Output> {
    let failed = rows.iter().filter(|r| r.has_convergence_failure()).count();
    if failed > 0 {
        let _ = writeln!(err, "warning: {failed} row(s) flagged as not converged");
    }
    if let Some(svg) = svg {
        emit_svg(rows, x, columns, svg)?;
    }
    match path {
        Some(p) => {
            emit_csv(rows, p)?;
            Ok(String::new().into())
        }
        None => Ok(to_csv_string(rows).into()),
    }
}

fn region(a: &RegionArgs) -> Result<Output> {
    let text = match zero_entanglement_region(a.gamma, a.r, a.temp) {
        Ok(NullRegion::Point(h)) => format!("h_f = {h:.6}\n"),
        Ok(NullRegion::Interval { lo, hi }) => {
            format!("h_lo = {lo:.6}\nh_hi = {hi:.6}\nwidth = {:.6}\n", hi - lo)
        }
        Err(Error::NotFound { lo, hi }) => {
            format!("no zero-entanglement region for h in [{lo:.6}, {hi:.6}]\n")
        }
        Err(e) => return Err(e),
    };
    Ok(text.into())
}

fn correlator_lines(c: &CorrelatorSet) -> String {
    let mut s = String::new();
    for (name, v) in [("mz", c.mz), ("txx", c.txx), ("tyy", c.tyy), ("tzz", c.tzz), ("txy", c.txy)] {
        writeln!(s, "{name} = {}", format_value(v)).unwrap();
    }
    if let Some(l) = c.limit {
        writeln!(s, "limit evaluated at R = {} (last change {:.3e})", l.evaluated_at, l.last_change).unwrap();
    }
    s
}

fn discord(a: &DiscordArgs) -> Result<Output> {
    let rho = if a.j.is_some() || a.b.is_some() {
        thermal_state(&HeisenbergParams::new(a.j.unwrap_or(1.0), a.b.unwrap_or(0.0), a.xy.temp)?)?
    } else {
        state_from_correlators(&pair_correlators(&xy_params(&a.xy)?)?)?
    };
    let r = report(&rho)?;
    let mut s = String::new();
    for (name, v) in [
        ("discord", r.discord),
        ("classical", r.classical),
        ("mutual_info", r.mutual_info),
        ("concurrence", r.concurrence),
        ("eof", r.eof),
        ("chsh", r.chsh),
        ("alpha", r.argmin.alpha),
        ("beta", r.argmin.beta),
        ("sin(alpha)", r.argmin.alpha.sin()),
    ] {
        writeln!(s, "{name} = {}", format_value(v)).unwrap();
    }
    Ok(s.into())
}

fn oracle(a: &OracleArgs) -> Result<Output> {
    let heisenberg = a.j.is_some() || a.b.is_some();
    let model = if heisenberg {
        ChainModel::Heisenberg {
            j: a.j.unwrap_or(1.0),
            b: a.b.unwrap_or(0.0),
        }
    } else {
        ChainModel::XY {
            gamma: a.xy.gamma,
            h: a.xy.h,
        }
    };
    let r = match a.xy.r {
        Separation::Finite(r) => r as usize,
        Separation::Infinite => {
            return Err(Error::DomainError("a finite chain needs a finite --r".into()));
        }
    };
    let spec = FiniteChainSpec::new(a.sites, model, a.xy.temp)?;
    let ed = oracle_correlators(&spec, r)?;
    let mut s = format!("sites = {}\n", a.sites);
    if heisenberg {
        s.push_str(&correlator_lines(&ed));
        return Ok(s.into());
    }
    let exact = pair_correlators(&xy_params(&a.xy)?)?;
    writeln!(s, "{:<4} {:>16} {:>16} {:>10}", "", "chain", "infinite", "gap").unwrap();
    for (name, x, y) in [
        ("mz", ed.mz, exact.mz),
        ("txx", ed.txx, exact.txx),
        ("tyy", ed.tyy, exact.tyy),
        ("tzz", ed.tzz, exact.tzz),
        ("txy", ed.txy, exact.txy),
    ] {
        writeln!(s, "{name:<4} {x:>16.10} {y:>16.10} {:>10.2e}", (x - y).abs()).unwrap();
    }
    Ok(s.into())
}
