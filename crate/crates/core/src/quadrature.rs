//! Adaptive Gauss–Legendre quadrature on finite intervals.
//!
//! Each panel is integrated with a fixed 31-point rule and compared against the
//! sum over its two halves. Panels whose disagreement is within their share of
//! the absolute tolerance are accepted; the rest are bisected.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const RULE_POINTS: usize = 31;
pub const DEFAULT_ABS_TOL: f64 = 1e-10;
pub const DEFAULT_PANEL_BUDGET: usize = 4096;

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    /// Integral of `f` over `[a, b]`.
    #[inline]
    pub fn integrate(&self, f: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut s = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            s += w * f(mid + half * x);
        }
        s * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

pub fn rule31() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(RULE_POINTS))
}

#[derive(Clone, Copy, Debug)]
pub struct Adaptive {
    pub abs_tol: f64,
    pub panel_budget: usize,
}

impl Default for Adaptive {
    fn default() -> Self {
        Adaptive {
            abs_tol: DEFAULT_ABS_TOL,
            panel_budget: DEFAULT_PANEL_BUDGET,
        }
    }
}

impl Adaptive {
    /// Integrates `f` over `[a, b]`, pre-splitting at the given interior points.
    pub fn integrate(&self, f: impl Fn(f64) -> f64, a: f64, b: f64, splits: &[f64]) -> Result<f64> {
        let rule = rule31();
        let length = b - a;
        if length == 0.0 {
            return Ok(0.0);
        }

        let mut edges = vec![a];
        edges.extend(splits.iter().copied().filter(|&s| s > a && s < b));
        edges.push(b);
        edges.sort_by(f64::total_cmp);
        edges.dedup();

        let mut stack: Vec<(f64, f64, f64)> = edges
            .windows(2)
            .rev()
            .map(|w| (w[0], w[1], rule.integrate(&f, w[0], w[1])))
            .collect();
        let mut panels = stack.len();
        let mut total = 0.0;
        let min_width = length * 1e-13;

        while let Some((lo, hi, whole)) = stack.pop() {
            let mid = 0.5 * (lo + hi);
            let left = rule.integrate(&f, lo, mid);
            let right = rule.integrate(&f, mid, hi);
            let error = (whole - (left + right)).abs();
            let allowed = self.abs_tol * (hi - lo) / length;
            if error <= allowed || hi - lo < min_width {
                total += left + right;
                continue;
            }
            panels += 1;
            if panels > self.panel_budget {
                return Err(Error::QuadratureNoConvergence {
                    budget: self.panel_budget,
                    error,
                });
            }
            stack.push((mid, hi, right));
            stack.push((lo, mid, left));
        }
        Ok(total)
    }
}
