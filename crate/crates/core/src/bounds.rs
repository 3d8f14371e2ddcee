//! Hidden-extremum classification and per-interval bounds.
//!
//! An interval `I_i = [x_i, x_{i+1}]` gets a pair `(u_min, u_max)` that every
//! interpolant on it must respect, plus the equivalent bounds `(m_l, m_r)` on the
//! normalized shape function `S(s)` where `U(x) = u_i + (u_{i+1} - u_i) S(s)`.

use crate::config::{InterpConfig, Method};

/// Extremum detected from the slopes `sigma_{i-1}, sigma_i, sigma_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumClass {
    None,
    /// Data rises into the interval and falls after it.
    LocalMax,
    /// Data falls into the interval and rises after it.
    LocalMin,
    /// Outer slopes agree but the interval slope opposes them.
    Ambiguous,
}

impl ExtremumClass {
    /// Whether the lower bound is relaxed with `eps1`.
    pub fn relaxes_lower(self) -> bool {
        matches!(self, ExtremumClass::LocalMin | ExtremumClass::Ambiguous)
    }

    /// Whether the upper bound is relaxed with `eps1`.
    pub fn relaxes_upper(self) -> bool {
        matches!(self, ExtremumClass::LocalMax | ExtremumClass::Ambiguous)
    }
}

/// Classifies interval `i` from the first divided differences of its neighbours.
///
/// Only signs matter. A zero product counts as nonnegative.
pub fn classify_interval(sigma_prev: f64, sigma_cur: f64, sigma_next: f64) -> ExtremumClass {
    if sigma_prev * sigma_next < 0.0 {
        if sigma_prev < 0.0 {
            ExtremumClass::LocalMin
        } else {
            ExtremumClass::LocalMax
        }
    } else if sigma_prev * sigma_cur < 0.0 {
        ExtremumClass::Ambiguous
    } else {
        ExtremumClass::None
    }
}

/// Slopes `(sigma_{i-1}, sigma_i, sigma_{i+1})` for interval `i`. A missing
/// neighbour at the mesh ends copies the slope on the other side of the interval.
pub fn neighbour_slopes(slopes: &[f64], i: usize) -> (f64, f64, f64) {
    let cur = slopes[i];
    let prev = if i > 0 { Some(slopes[i - 1]) } else { None };
    let next = slopes.get(i + 1).copied();
    match (prev, next) {
        (Some(p), Some(n)) => (p, cur, n),
        (None, Some(n)) => (n, cur, n),
        (Some(p), None) => (p, cur, p),
        (None, None) => (cur, cur, cur),
    }
}

/// `(u_min, u_max)` for an interval with endpoint values `u_i`, `u_ip1`.
pub fn interval_bounds(
    u_i: f64,
    u_ip1: f64,
    class: ExtremumClass,
    eps0: f64,
    eps1: f64,
) -> (f64, f64) {
    let lo = u_i.min(u_ip1);
    let hi = u_i.max(u_ip1);
    let eps_lo = if class.relaxes_lower() { eps1 } else { eps0 };
    let eps_hi = if class.relaxes_upper() { eps1 } else { eps0 };
    (lo - eps_lo * lo.abs(), hi + eps_hi * hi.abs())
}

/// Returned when `u_i = u_{i+1}` and the quadratic coefficient is zero too.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlatData;

/// `(m_l, m_r)` such that `m_l <= S(s) <= m_r` is equivalent to `u_min <= U <= u_max`.
///
/// `degenerate_w` must be supplied when `u_i == u_ip1`; it is the scale
/// `w = U[x_1^l..x_1^r] (x_{i+1} - x_i)(x_1^r - x_1^l)` of the first expansion.
pub fn scaling_factors(
    u_i: f64,
    u_ip1: f64,
    u_min: f64,
    u_max: f64,
    method: Method,
    degenerate_w: Option<f64>,
) -> Result<(f64, f64), FlatData> {
    if method == Method::Dbi {
        return Ok((0.0, 1.0));
    }
    let (lo_ratio, hi_ratio) = if u_ip1 != u_i {
        let du = u_ip1 - u_i;
        ordered_ratios(u_i, u_min, u_max, du)
    } else {
        match degenerate_w {
            Some(w) if w != 0.0 => ordered_ratios(u_i, u_min, u_max, w),
            _ => return Err(FlatData),
        }
    };
    Ok((lo_ratio.min(0.0), hi_ratio.max(1.0)))
}

/// `((u_min - u_i)/scale, (u_max - u_i)/scale)` ordered low-to-high by the sign of `scale`.
pub fn ordered_ratios(u_i: f64, u_min: f64, u_max: f64, scale: f64) -> (f64, f64) {
    let a = (u_min - u_i) / scale;
    let b = (u_max - u_i) / scale;
    if scale > 0.0 {
        (a, b)
    } else {
        (b, a)
    }
}

/// Bounds for one interval, before any stencil is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalBounds {
    pub u_min: f64,
    pub u_max: f64,
    /// Lower bound on `S`. For a degenerate interval this is a placeholder
    /// until [`IntervalBounds::with_weight`] supplies `w`.
    pub m_l: f64,
    pub m_r: f64,
    /// `u_i == u_{i+1}` exactly.
    pub degenerate: bool,
    pub w: Option<f64>,
    pub class: ExtremumClass,
}

impl IntervalBounds {
    pub fn new(u_i: f64, u_ip1: f64, class: ExtremumClass, config: &InterpConfig) -> Self {
        let (eps0, eps1) = config.effective_eps();
        let (u_min, u_max) = interval_bounds(u_i, u_ip1, class, eps0, eps1);
        let degenerate = u_i == u_ip1;
        let (m_l, m_r) = if degenerate {
            (0.0, 1.0)
        } else {
            scaling_factors(u_i, u_ip1, u_min, u_max, config.method, None).unwrap_or((0.0, 1.0))
        };
        IntervalBounds {
            u_min,
            u_max,
            m_l,
            m_r,
            degenerate,
            w: None,
            class,
        }
    }

    /// Resolves a degenerate interval once the first expansion fixes `w`.
    pub fn with_weight(mut self, u_i: f64, w: f64, method: Method) -> Result<Self, FlatData> {
        let (m_l, m_r) = scaling_factors(u_i, u_i, self.u_min, self.u_max, method, Some(w))?;
        self.m_l = m_l;
        self.m_r = m_r;
        self.w = Some(w);
        Ok(self)
    }
}
