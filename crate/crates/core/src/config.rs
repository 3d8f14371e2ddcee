use std::fmt;
use std::str::FromStr;

use crate::error::{InterpError, Result};

/// Which admissibility constraint the stencil search enforces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Data-bounded: each interpolant stays within its two interval data values.
    Dbi,
    /// Positivity-preserving: bounds relaxed by `eps0`/`eps1`, never below zero for
    /// nonnegative data when both are at most one.
    Ppi,
}

impl Method {
    /// Numeric code used by the reference interface (1 = DBI, 2 = PPI).
    pub fn code(self) -> u8 {
        match self {
            Method::Dbi => 1,
            Method::Ppi => 2,
        }
    }

    pub fn from_code(code: u8) -> Result<Self> {
        match code {
            1 => Ok(Method::Dbi),
            2 => Ok(Method::Ppi),
            other => Err(InterpError::InvalidConfig(format!(
                "method code must be 1 (DBI) or 2 (PPI), got {other}"
            ))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Dbi => "dbi",
            Method::Ppi => "ppi",
        })
    }
}

impl FromStr for Method {
    type Err = InterpError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dbi" | "1" => Ok(Method::Dbi),
            "ppi" | "2" => Ok(Method::Ppi),
            _ => Err(InterpError::InvalidConfig(format!("unknown method {s:?}"))),
        }
    }
}

/// Tie-break rule when both stencil expansions are admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StencilPolicy {
    /// `st = 1`: smaller divided difference (ENO-like).
    Smoothness,
    /// `st = 2`: side with fewer points, keeping the stencil symmetric.
    Symmetry,
    /// `st = 3`: point closest to the base interval.
    Locality,
}

impl StencilPolicy {
    pub fn code(self) -> u8 {
        match self {
            StencilPolicy::Smoothness => 1,
            StencilPolicy::Symmetry => 2,
            StencilPolicy::Locality => 3,
        }
    }

    pub fn from_code(code: u8) -> Result<Self> {
        match code {
            1 => Ok(StencilPolicy::Smoothness),
            2 => Ok(StencilPolicy::Symmetry),
            3 => Ok(StencilPolicy::Locality),
            other => Err(InterpError::InvalidConfig(format!(
                "stencil policy must be 1, 2 or 3, got {other}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpConfig {
    /// Target polynomial degree; stencils hold at most `degree + 1` points.
    pub degree: usize,
    pub method: Method,
    pub policy: StencilPolicy,
    /// Relative bound relaxation for intervals without a detected extremum.
    pub eps0: f64,
    /// Relative bound relaxation for intervals with a detected extremum.
    pub eps1: f64,
}

impl InterpConfig {
    pub const DEFAULT_POLICY: StencilPolicy = StencilPolicy::Locality;
    pub const DEFAULT_EPS0: f64 = 0.01;
    pub const DEFAULT_EPS1: f64 = 1.0;

    pub fn new(degree: usize, method: Method) -> Self {
        InterpConfig {
            degree,
            method,
            policy: Self::DEFAULT_POLICY,
            eps0: Self::DEFAULT_EPS0,
            eps1: Self::DEFAULT_EPS1,
        }
    }

    pub fn dbi(degree: usize) -> Self {
        Self::new(degree, Method::Dbi)
    }

    pub fn ppi(degree: usize) -> Self {
        Self::new(degree, Method::Ppi)
    }

    pub fn with_policy(mut self, policy: StencilPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn with_eps(mut self, eps0: f64, eps1: f64) -> Self {
        self.eps0 = eps0;
        self.eps1 = eps1;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.degree < 1 {
            return Err(InterpError::InvalidConfig(
                "degree must be at least 1".into(),
            ));
        }
        for (name, eps) in [("eps0", self.eps0), ("eps1", self.eps1)] {
            if !(eps.is_finite() && eps >= 0.0) {
                return Err(InterpError::InvalidConfig(format!(
                    "{name} must be finite and nonnegative, got {eps}"
                )));
            }
        }
        Ok(())
    }

    /// The `(eps0, eps1)` pair actually applied; DBI never relaxes.
    pub(crate) fn effective_eps(&self) -> (f64, f64) {
        match self.method {
            Method::Dbi => (0.0, 0.0),
            Method::Ppi => (self.eps0, self.eps1),
        }
    }
}
