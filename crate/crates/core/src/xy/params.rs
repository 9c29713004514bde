use std::fmt;

use crate::error::{Error, Result};

/// Spin separation `R = j - i` along the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Separation {
    Finite(u32),
    /// Large-distance limit, evaluated by extrapolating finite `R`.
    Infinite,
}

impl fmt::Display for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Separation::Finite(r) => write!(f, "{r}"),
            Separation::Infinite => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for Separation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinite") {
            return Ok(Separation::Infinite);
        }
        match s.parse::<u32>() {
            Ok(r) if r >= 1 => Ok(Separation::Finite(r)),
            _ => Err(Error::DomainError(format!(
                "separation must be an integer >= 1 or `inf`, got `{s}`"
            ))),
        }
    }
}

/// Parameters of the infinite XY chain. `temperature` uses k = 1; zero is the
/// ground-state limit and `f64::INFINITY` is allowed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XYParams {
    pub gamma: f64,
    pub h0: f64,
    pub hf: f64,
    pub time: f64,
    pub temperature: f64,
    pub separation: Separation,
}

impl XYParams {
    pub fn equilibrium(gamma: f64, h: f64, temperature: f64, separation: Separation) -> Result<Self> {
        Self::quench(gamma, h, h, 0.0, temperature, separation)
    }

    /// Thermal state of the field `h0` at time zero, evolved for `time` under `hf`.
    pub fn quench(
        gamma: f64,
        h0: f64,
        hf: f64,
        time: f64,
        temperature: f64,
        separation: Separation,
    ) -> Result<Self> {
        let p = XYParams {
            gamma,
            h0,
            hf,
            time,
            temperature,
            separation,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.gamma) {
            return Err(Error::DomainError(format!("gamma = {} outside [0, 1]", self.gamma)));
        }
        if !(self.temperature >= 0.0) {
            return Err(Error::DomainError(format!(
                "temperature = {} must be >= 0",
                self.temperature
            )));
        }
        if !(self.time >= 0.0) || !self.time.is_finite() {
            return Err(Error::DomainError(format!("time = {} must be finite and >= 0", self.time)));
        }
        if !self.h0.is_finite() || !self.hf.is_finite() {
            return Err(Error::DomainError("field must be finite".into()));
        }
        if self.separation == Separation::Finite(0) {
            return Err(Error::DomainError("separation must be >= 1".into()));
        }
        Ok(())
    }

    pub fn is_equilibrium(&self) -> bool {
        self.h0 == self.hf && self.time == 0.0
    }

    /// Equilibrium field; only meaningful when `is_equilibrium()`.
    pub fn field(&self) -> f64 {
        self.h0
    }

    pub fn with_separation(mut self, separation: Separation) -> Self {
        self.separation = separation;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separation_parsing() {
        assert_eq!("inf".parse::<Separation>().unwrap(), Separation::Infinite);
        assert_eq!("3".parse::<Separation>().unwrap(), Separation::Finite(3));
        assert!("0".parse::<Separation>().is_err());
        assert!("-2".parse::<Separation>().is_err());
    }

    #[test]
    fn validation() {
        assert!(XYParams::equilibrium(1.5, 0.0, 0.0, Separation::Finite(1)).is_err());
        assert!(XYParams::equilibrium(0.5, 0.0, -1.0, Separation::Finite(1)).is_err());
        assert!(XYParams::equilibrium(0.5, 0.0, f64::INFINITY, Separation::Finite(1)).is_ok());
        let q = XYParams::quench(0.5, 0.0, 2.0, 1.0, 0.1, Separation::Finite(1)).unwrap();
        assert!(!q.is_equilibrium());
        assert!(XYParams::equilibrium(0.0, 0.3, 0.0, Separation::Infinite).unwrap().is_equilibrium());
    }
}
