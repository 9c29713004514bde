//! Parameter sweeps over either model, producing one [`ScanRow`] per grid point.

pub mod csv;
pub mod figures;
pub mod region;
pub mod svg;

use std::fmt;

use rayon::prelude::*;

use crate::ed::correlators_of;
use crate::error::{Error, Result};
use crate::heisenberg::{thermal_state, HeisenbergParams};
use crate::matrix::state::DensityMatrix;
use crate::measures::report;
use crate::xy::{pair_correlators_lenient, state_from_correlators, CorrelatorSet, Separation, XYParams};

pub use region::{zero_entanglement_region, NullRegion};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    XY,
    Heisenberg,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::XY => "XY",
            ModelKind::Heisenberg => "HEISENBERG",
        })
    }
}

impl std::str::FromStr for ModelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "XY" => Ok(ModelKind::XY),
            "HEISENBERG" => Ok(ModelKind::Heisenberg),
            other => Err(Error::Parse(format!("unknown model `{other}`"))),
        }
    }
}

/// One parameter point of either model.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Point {
    XY {
        gamma: f64,
        h: f64,
        temperature: f64,
        separation: Separation,
    },
    Heisenberg {
        j: f64,
        b: f64,
        temperature: f64,
    },
}

impl Point {
    fn validate(&self) -> Result<()> {
        match *self {
            Point::XY {
                gamma,
                h,
                temperature,
                separation,
            } => XYParams::equilibrium(gamma, h, temperature, separation).map(|_| ()),
            Point::Heisenberg { j, b, temperature } => HeisenbergParams::new(j, b, temperature).map(|_| ()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    H,
    T,
    B,
    R,
}

/// A one-dimensional sweep of `axis` over `count` evenly spaced values in
/// `[min, max]`, other parameters taken from `base`.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub base: Point,
    pub axis: Axis,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl SweepSpec {
    pub fn points(&self) -> Result<Vec<Point>> {
        if self.count < 2 {
            return Err(Error::DomainError(format!("sweep needs at least 2 points, got {}", self.count)));
        }
        if !(self.min < self.max) {
            return Err(Error::DomainError(format!(
                "sweep range [{}, {}] is empty",
                self.min, self.max
            )));
        }
        let step = (self.max - self.min) / (self.count - 1) as f64;
        let mut out = Vec::with_capacity(self.count);
        for k in 0..self.count {
            let v = if k + 1 == self.count {
                self.max
            } else {
                self.min + step * k as f64
            };
            let p = match (self.base, self.axis) {
                (Point::XY { gamma, temperature, separation, .. }, Axis::H) => Point::XY {
                    gamma,
                    h: v,
                    temperature,
                    separation,
                },
                (Point::XY { gamma, h, separation, .. }, Axis::T) => Point::XY {
                    gamma,
                    h,
                    temperature: v,
                    separation,
                },
                (Point::XY { gamma, h, temperature, .. }, Axis::R) => {
                    if v.fract() != 0.0 || v < 1.0 {
                        return Err(Error::DomainError(format!(
                            "R sweep produced non-integer separation {v}; choose count = max - min + 1"
                        )));
                    }
                    Point::XY {
                        gamma,
                        h,
                        temperature,
                        separation: Separation::Finite(v as u32),
                    }
                }
                (Point::Heisenberg { j, temperature, .. }, Axis::B) => Point::Heisenberg { j, b: v, temperature },
                (Point::Heisenberg { j, b, .. }, Axis::T) => Point::Heisenberg { j, b, temperature: v },
                (base, axis) => {
                    return Err(Error::DomainError(format!("cannot sweep {axis:?} for {base:?}")));
                }
            };
            p.validate()?;
            out.push(p);
        }
        Ok(out)
    }
}

pub const FLAG_R_LIMIT: &str = "r_limit";
pub const FLAG_R_LIMIT_UNCONVERGED: &str = "r_limit_unconverged";
pub const FLAG_QUADRATURE: &str = "quadrature_no_convergence";
pub const FLAG_INVALID_STATE: &str = "invalid_state";
pub const FLAG_ERROR: &str = "error";

/// One CSV line. Absent values are fields that do not apply to the model or
/// could not be computed (see `flags`).
#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub model: ModelKind,
    pub gamma: Option<f64>,
    pub h: Option<f64>,
    pub b: Option<f64>,
    pub j: Option<f64>,
    pub temperature: f64,
    pub separation: Option<Separation>,
    pub mz: Option<f64>,
    pub txx: Option<f64>,
    pub tyy: Option<f64>,
    pub tzz: Option<f64>,
    pub concurrence: Option<f64>,
    pub eof: Option<f64>,
    pub discord: Option<f64>,
    pub cc: Option<f64>,
    pub mutual_info: Option<f64>,
    pub chsh: Option<f64>,
    pub argmin_alpha: Option<f64>,
    pub argmin_beta: Option<f64>,
    pub flags: Vec<String>,
}

/// Rounds to the 12 significant digits kept in CSV output.
pub fn quantize(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

impl ScanRow {
    fn blank(point: &Point) -> Self {
        let (model, gamma, h, b, j, temperature, separation) = match *point {
            Point::XY {
                gamma,
                h,
                temperature,
                separation,
            } => (ModelKind::XY, Some(gamma), Some(h), None, None, temperature, Some(separation)),
            Point::Heisenberg { j, b, temperature } => {
                (ModelKind::Heisenberg, None, None, Some(b), Some(j), temperature, None)
            }
        };
        ScanRow {
            model,
            gamma: gamma.map(quantize),
            h: h.map(quantize),
            b: b.map(quantize),
            j: j.map(quantize),
            temperature: quantize(temperature),
            separation,
            mz: None,
            txx: None,
            tyy: None,
            tzz: None,
            concurrence: None,
            eof: None,
            discord: None,
            cc: None,
            mutual_info: None,
            chsh: None,
            argmin_alpha: None,
            argmin_beta: None,
            flags: Vec::new(),
        }
    }

    fn fill(&mut self, c: &CorrelatorSet, rho: &DensityMatrix) -> Result<()> {
        let q = |x: f64| Some(quantize(x));
        self.mz = q(c.mz);
        self.txx = q(c.txx);
        self.tyy = q(c.tyy);
        self.tzz = q(c.tzz);
        let r = report(rho)?;
        self.concurrence = q(r.concurrence);
        self.eof = q(r.eof);
        self.discord = q(r.discord);
        self.cc = q(r.classical);
        self.mutual_info = q(r.mutual_info);
        self.chsh = q(r.chsh);
        self.argmin_alpha = q(r.argmin.alpha);
        self.argmin_beta = q(r.argmin.beta);
        Ok(())
    }

    /// True when a numerical procedure failed to converge for this row.
    pub fn has_convergence_failure(&self) -> bool {
        self.flags
            .iter()
            .any(|f| f.starts_with(FLAG_R_LIMIT_UNCONVERGED) || f == FLAG_QUADRATURE)
    }

    /// Numeric value of a CSV column; `UnknownColumn` for names that are not
    /// numeric columns.
    pub fn value(&self, column: &str) -> Result<Option<f64>> {
        Ok(match column {
            "gamma" => self.gamma,
            "h" => self.h,
            "B" => self.b,
            "J" => self.j,
            "T" => Some(self.temperature),
            "R" => match self.separation {
                Some(Separation::Finite(r)) => Some(r as f64),
                Some(Separation::Infinite) => Some(f64::INFINITY),
                None => None,
            },
            "mz" => self.mz,
            "txx" => self.txx,
            "tyy" => self.tyy,
            "tzz" => self.tzz,
            "concurrence" => self.concurrence,
            "eof" => self.eof,
            "discord" => self.discord,
            "cc" => self.cc,
            "mutual_info" => self.mutual_info,
            "chsh" => self.chsh,
            "argmin_alpha" => self.argmin_alpha,
            "argmin_beta" => self.argmin_beta,
            other => return Err(Error::UnknownColumn(other.to_string())),
        })
    }
}

fn error_flag(e: &Error) -> &'static str {
    match e {
        Error::QuadratureNoConvergence { .. } => FLAG_QUADRATURE,
        Error::RLimitNotConverged { .. } => FLAG_R_LIMIT_UNCONVERGED,
        Error::InvalidState(_) | Error::NonHermitianInput { .. } => FLAG_INVALID_STATE,
        _ => FLAG_ERROR,
    }
}

/// Evaluates every measure at one point. Numerical failures are recorded in
/// the row's flags instead of being returned.
pub fn evaluate(point: &Point) -> ScanRow {
    let mut row = ScanRow::blank(point);
    let outcome = match *point {
        Point::XY {
            gamma,
            h,
            temperature,
            separation,
        } => XYParams::equilibrium(gamma, h, temperature, separation)
            .and_then(|p| pair_correlators_lenient(&p))
            .and_then(|c| {
                if let Some(info) = c.limit {
                    let tag = if info.converged {
                        FLAG_R_LIMIT
                    } else {
                        FLAG_R_LIMIT_UNCONVERGED
                    };
                    row.flags.push(format!("{tag}={}", info.evaluated_at));
                }
                let rho = state_from_correlators(&c)?;
                row.fill(&c, &rho)
            }),
        Point::Heisenberg { j, b, temperature } => HeisenbergParams::new(j, b, temperature)
            .and_then(|p| thermal_state(&p))
            .and_then(|rho| row.fill(&correlators_of(&rho, 1), &rho)),
    };
    if let Err(e) = outcome {
        row.flags.push(error_flag(&e).to_string());
    }
    row
}

/// Evaluates `points` in parallel; rows come back in input order.
pub fn evaluate_all(points: &[Point]) -> Vec<ScanRow> {
    points.par_iter().map(evaluate).collect()
}

pub fn sweep(spec: &SweepSpec) -> Result<Vec<ScanRow>> {
    Ok(evaluate_all(&spec.points()?))
}

/// Runs `f` on a dedicated pool of `threads` workers (`None`: rayon default).
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(Error::DomainError("thread count must be >= 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::DomainError(format!("cannot start {n} threads: {e}")))?;
            Ok(pool.install(f))
        }
    }
}
