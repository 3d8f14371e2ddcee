//! Adaptive stencil construction for one base interval.
//!
//! Starting from `V_0 = {x_i, x_{i+1}}`, the stencil grows one mesh point at a
//! time. With `h = x_{i+1} - x_i` and the Newton form written as
//!
//! ```text
//! U(x) = u_i + (u_{i+1} - u_i) S(s),   s = (x - x_i) / h,
//! S(s) = s (1 + (s - t_1)/d_1 λ_1 (1 + (s - t_2)/d_2 λ_2 (1 + ...)))
//! ```
//!
//! an expansion to `V_j` is admissible iff the running product
//! `λ̄_j = λ_1 ... λ_j` lies in `[B⁻_j, B⁺_j]`. Here `d_j` is the width of `V_j`
//! over `h` and `t_j` is the scaled offset of the point added at the previous
//! expansion (`t_1 = 1` for `x_{i+1}`). The bounds are built recursively from
//! `(m_l, m_r)`, so every accepted chain keeps `m_l <= S <= m_r` on the interval.
//!
//! When `u_i == u_{i+1}` the linear term vanishes and the normalization switches
//! to `w`, the scaled quadratic coefficient of the first expansion.

use crate::bounds::{ordered_ratios, IntervalBounds};
use crate::config::{InterpConfig, StencilPolicy};
use crate::divdiff::{DividedDifferenceTable, IntervalInterpolant};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

/// `t_j` and `d_j` for one expansion, both scaled by the base interval width.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometryFactors {
    pub t: f64,
    pub d: f64,
}

/// `t = (x_e - x_i) / h` for mesh point `e`, `d = (x_r - x_l) / h` for window `(l, r)`.
pub fn geometry_factors(x: &[f64], i: usize, window: (usize, usize), e: usize) -> GeometryFactors {
    let h = x[i + 1] - x[i];
    GeometryFactors {
        t: (x[e] - x[i]) / h,
        d: (x[window.1] - x[window.0]) / h,
    }
}

/// `(B⁻_1, B⁺_1)` for the first expansion of a non-degenerate interval.
pub fn first_bounds(m_l: f64, m_r: f64, d1: f64) -> (f64, f64) {
    ((-4.0 * (m_r - 1.0) - 1.0) * d1, (-4.0 * m_l + 1.0) * d1)
}

/// `(B⁻_1, B⁺_1)` when `u_i == u_{i+1}`.
///
/// Without the linear term the interpolant is `u_i + w s(s-1)/d_1 R(s)`, and
/// `s(s-1) ∈ [-1/4, 0]`, so `R` must stay in `[-4 hi d_1, -4 lo d_1]` where
/// `lo <= 0 <= hi` are the raw bound ratios `(u_bound - u_i) / w`.
pub fn degenerate_first_bounds(lo_ratio: f64, hi_ratio: f64, d1: f64) -> (f64, f64) {
    (-4.0 * hi_ratio * d1, -4.0 * lo_ratio * d1)
}

/// One step of the `B` recursion.
///
/// `j = 1` uses the closed form from `(m_l, m_r)`; later steps need the previous
/// bounds and `λ̄_{j-1}`.
pub fn b_bounds_step(
    prev: Option<(f64, f64)>,
    lambda_bar_prev: f64,
    factors: GeometryFactors,
    m_l: f64,
    m_r: f64,
    j: usize,
) -> (f64, f64) {
    match prev {
        None => {
            debug_assert_eq!(j, 1);
            first_bounds(m_l, m_r, factors.d)
        }
        Some((lo, hi)) => next_bounds((lo, hi), lambda_bar_prev, factors),
    }
}

#[inline]
fn next_bounds(prev: (f64, f64), lambda_bar_prev: f64, g: GeometryFactors) -> (f64, f64) {
    let (lo, hi) = prev;
    if g.t <= 0.0 {
        let k = g.d / (1.0 - g.t);
        ((lo - lambda_bar_prev) * k, (hi - lambda_bar_prev) * k)
    } else {
        let k = g.d / (-g.t);
        ((hi - lambda_bar_prev) * k, (lo - lambda_bar_prev) * k)
    }
}

/// What the direction policy sees about one candidate expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideInfo {
    pub admissible: bool,
    /// Divided difference over the expanded window.
    pub divided_difference: f64,
    /// Points of the current window beyond the base interval on this side.
    pub count: usize,
    /// Distance from the candidate point to the nearer base-interval endpoint.
    pub distance: f64,
    pub lambda_bar: f64,
}

/// Picks the expansion side. Exactly one admissible side wins outright; with both
/// admissible the policy decides and exact ties fall back to the `λ̄` magnitudes.
///
/// # Panics
/// If neither side is admissible.
pub fn select_direction(policy: StencilPolicy, left: &SideInfo, right: &SideInfo) -> Direction {
    match (left.admissible, right.admissible) {
        (true, false) => return Direction::Left,
        (false, true) => return Direction::Right,
        (false, false) => panic!("select_direction needs an admissible side"),
        (true, true) => {}
    }
    let (a, b) = match policy {
        StencilPolicy::Smoothness => (
            left.divided_difference.abs(),
            right.divided_difference.abs(),
        ),
        StencilPolicy::Symmetry => (left.count as f64, right.count as f64),
        StencilPolicy::Locality => (left.distance, right.distance),
    };
    // ties go to the side with the smaller |λ̄|, right when equal
    if a < b || (a == b && left.lambda_bar.abs() < right.lambda_bar.abs()) {
        Direction::Left
    } else {
        Direction::Right
    }
}

/// How `λ̄` is normalized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Normalization {
    /// Divide by the base slope `U[x_i, x_{i+1}]`.
    Standard { slope: f64 },
    /// `u_i == u_{i+1}`: divide by `w`.
    Degenerate { w: f64 },
}

/// Stencil growth state after `j` accepted expansions.
#[derive(Debug, Clone)]
pub struct StencilState {
    pub interval: usize,
    pub window: (usize, usize),
    pub j: usize,
    pub lambda_bar: f64,
    pub b_minus: f64,
    pub b_plus: f64,
    pub insertion_order: Vec<usize>,
    pub coefficients: Vec<f64>,
    pub normalization: Normalization,
    /// `prod (x_k^r - x_k^l)` over the accepted windows that enter `λ̄`.
    width_product: f64,
}

impl StencilState {
    fn standard(table: &DividedDifferenceTable, i: usize) -> Self {
        let slope = table.get(i, 1);
        StencilState {
            interval: i,
            window: (i, i + 1),
            j: 0,
            lambda_bar: 1.0,
            b_minus: f64::NEG_INFINITY,
            b_plus: f64::INFINITY,
            insertion_order: vec![i, i + 1],
            coefficients: vec![slope],
            normalization: Normalization::Standard { slope },
            width_product: 1.0,
        }
    }

    pub fn mu_left(&self) -> usize {
        self.interval - self.window.0
    }

    pub fn mu_right(&self) -> usize {
        self.window.1 - (self.interval + 1)
    }

    fn into_interpolant(self, base_value: f64) -> IntervalInterpolant {
        IntervalInterpolant {
            interval: self.interval,
            window: self.window,
            insertion_order: self.insertion_order,
            coefficients: self.coefficients,
            base_value,
        }
    }
}

/// A possible expansion of the current window.
#[derive(Debug, Clone, Copy)]
struct Candidate {
    point: usize,
    window: (usize, usize),
    dd: f64,
    width: f64,
    lambda_bar: f64,
    bounds: (f64, f64),
}

impl Candidate {
    fn admissible(&self) -> bool {
        self.bounds.0 <= self.lambda_bar && self.lambda_bar <= self.bounds.1
    }
}

fn expansion(
    x: &[f64],
    window: (usize, usize),
    side: Direction,
) -> Option<(usize, (usize, usize))> {
    let (l, r) = window;
    match side {
        Direction::Left => (l > 0).then(|| (l - 1, (l - 1, r))),
        Direction::Right => (r + 1 < x.len()).then_some((r + 1, (l, r + 1))),
    }
}

/// `λ̄_{j+1}` for growing `state` towards `side`, or `None` past the mesh ends.
pub fn lambda_bar_candidate(
    table: &DividedDifferenceTable,
    x: &[f64],
    state: &StencilState,
    side: Direction,
) -> Option<f64> {
    let (_, window) = expansion(x, state.window, side)?;
    let dd = table.window(window.0, window.1);
    let width = x[window.1] - x[window.0];
    Some(match state.normalization {
        Normalization::Standard { slope } => dd / slope * state.width_product * width,
        Normalization::Degenerate { w } => {
            if state.j == 0 {
                1.0
            } else {
                dd / w * state.width_product * width
            }
        }
    })
}

fn propose(
    x: &[f64],
    table: &DividedDifferenceTable,
    state: &StencilState,
    bounds: &IntervalBounds,
    side: Direction,
) -> Option<Candidate> {
    let (point, window) = expansion(x, state.window, side)?;
    let i = state.interval;
    let h = x[i + 1] - x[i];
    let dd = table.window(window.0, window.1);
    let width = x[window.1] - x[window.0];
    let lambda_bar = lambda_bar_candidate(table, x, state, side)?;
    let d = width / h;
    let cand_bounds = if state.j == 0 {
        first_bounds(bounds.m_l, bounds.m_r, d)
    } else {
        let last = *state.insertion_order.last().expect("non-empty");
        let t = (x[last] - x[i]) / h;
        next_bounds(
            (state.b_minus, state.b_plus),
            state.lambda_bar,
            GeometryFactors { t, d },
        )
    };
    Some(Candidate {
        point,
        window,
        dd,
        width,
        lambda_bar,
        bounds: cand_bounds,
    })
}

/// First expansion of a degenerate interval; each side carries its own `w`.
fn propose_degenerate(
    x: &[f64],
    table: &DividedDifferenceTable,
    i: usize,
    bounds: &IntervalBounds,
    side: Direction,
) -> Option<(Candidate, f64)> {
    let (point, window) = expansion(x, (i, i + 1), side)?;
    let h = x[i + 1] - x[i];
    let dd = table.window(window.0, window.1);
    let width = x[window.1] - x[window.0];
    let w = dd * h * width;
    let u_i = table.get(i, 0);
    let cand_bounds = if w != 0.0 {
        let (lo, hi) = ordered_ratios(u_i, bounds.u_min, bounds.u_max, w);
        degenerate_first_bounds(lo, hi, width / h)
    } else {
        // flat data: never admissible
        (f64::INFINITY, f64::NEG_INFINITY)
    };
    let cand = Candidate {
        point,
        window,
        dd,
        width,
        lambda_bar: 1.0,
        bounds: cand_bounds,
    };
    Some((cand, w))
}

fn side_info(
    state: &StencilState,
    x: &[f64],
    side: Direction,
    cand: Option<&Candidate>,
) -> SideInfo {
    let i = state.interval;
    match cand {
        Some(c) => SideInfo {
            admissible: c.admissible(),
            divided_difference: c.dd,
            count: match side {
                Direction::Left => state.mu_left(),
                Direction::Right => state.mu_right(),
            },
            distance: match side {
                Direction::Left => (x[c.point] - x[i]).abs(),
                Direction::Right => (x[c.point] - x[i + 1]).abs(),
            },
            lambda_bar: c.lambda_bar,
        },
        None => SideInfo {
            admissible: false,
            divided_difference: f64::NAN,
            count: usize::MAX,
            distance: f64::INFINITY,
            lambda_bar: f64::NAN,
        },
    }
}

fn accept(state: &mut StencilState, cand: &Candidate) {
    state.window = cand.window;
    state.j += 1;
    state.lambda_bar = cand.lambda_bar;
    state.b_minus = cand.bounds.0;
    state.b_plus = cand.bounds.1;
    state.insertion_order.push(cand.point);
    state.coefficients.push(cand.dd);
    state.width_product *= cand.width;
}

/// Grows the stencil of interval `i` until no expansion is admissible, the
/// window holds `degree + 1` points, or the mesh is exhausted.
///
/// `table` must hold at least order `min(config.degree, n - 1)`.
pub fn build_stencil(
    x: &[f64],
    table: &DividedDifferenceTable,
    i: usize,
    bounds: &IntervalBounds,
    config: &InterpConfig,
) -> IntervalInterpolant {
    let n = x.len();
    let max_degree = config.degree.min(n - 1);
    let base_value = table.get(i, 0);
    if max_degree < 2 {
        return IntervalInterpolant::linear(table, i);
    }

    let mut state = StencilState::standard(table, i);
    if bounds.degenerate {
        let left = propose_degenerate(x, table, i, bounds, Direction::Left);
        let right = propose_degenerate(x, table, i, bounds, Direction::Right);
        let li = side_info(&state, x, Direction::Left, left.as_ref().map(|c| &c.0));
        let ri = side_info(&state, x, Direction::Right, right.as_ref().map(|c| &c.0));
        if !li.admissible && !ri.admissible {
            return IntervalInterpolant::linear(table, i);
        }
        let (cand, w) = match select_direction(config.policy, &li, &ri) {
            Direction::Left => left.expect("admissible"),
            Direction::Right => right.expect("admissible"),
        };
        state.normalization = Normalization::Degenerate { w };
        state.width_product = x[i + 1] - x[i];
        accept(&mut state, &cand);
    }

    while state.window.1 - state.window.0 < max_degree {
        let left = propose(x, table, &state, bounds, Direction::Left);
        let right = propose(x, table, &state, bounds, Direction::Right);
        let li = side_info(&state, x, Direction::Left, left.as_ref());
        let ri = side_info(&state, x, Direction::Right, right.as_ref());
        if !li.admissible && !ri.admissible {
            break;
        }
        let chosen = match select_direction(config.policy, &li, &ri) {
            Direction::Left => left,
            Direction::Right => right,
        };
        accept(&mut state, &chosen.expect("admissible side exists"));
    }

    let piece = state.into_interpolant(base_value);
    debug_assert!(
        verify_chain(x, table, &piece, bounds).is_ok(),
        "accepted chain violates its bounds: {:?}",
        verify_chain(x, table, &piece, bounds)
    );
    piece
}

/// A failed re-check of an accepted stencil.
#[derive(Debug, Clone, PartialEq)]
pub enum ChainViolation {
    NotContiguous {
        step: usize,
    },
    CoefficientMismatch {
        step: usize,
    },
    OutOfBounds {
        step: usize,
        lambda_bar: f64,
        lo: f64,
        hi: f64,
    },
    FlatDegenerate,
}

/// Recomputes `λ̄_j` and `(B⁻_j, B⁺_j)` for every step of `piece` from scratch and
/// checks `B⁻_j <= λ̄_j <= B⁺_j` (up to rounding of the recomputation).
pub fn verify_chain(
    x: &[f64],
    table: &DividedDifferenceTable,
    piece: &IntervalInterpolant,
    bounds: &IntervalBounds,
) -> Result<(), ChainViolation> {
    let i = piece.interval;
    let h = x[i + 1] - x[i];
    let order = &piece.insertion_order;
    if order.len() < 2 || order[0] != i || order[1] != i + 1 {
        return Err(ChainViolation::NotContiguous { step: 0 });
    }
    let mut windows = vec![(i, i + 1)];
    for (step, &p) in order.iter().enumerate().skip(2) {
        let (l, r) = *windows.last().expect("non-empty");
        let next = if l > 0 && p == l - 1 {
            (p, r)
        } else if p == r + 1 {
            (l, p)
        } else {
            return Err(ChainViolation::NotContiguous { step: step - 1 });
        };
        windows.push(next);
    }
    if *windows.last().expect("non-empty") != piece.window
        || piece.coefficients.len() != windows.len()
    {
        return Err(ChainViolation::NotContiguous {
            step: windows.len() - 1,
        });
    }
    for (step, (&(l, r), &c)) in windows.iter().zip(&piece.coefficients).enumerate() {
        if table.window(l, r) != c {
            return Err(ChainViolation::CoefficientMismatch { step });
        }
    }
    if windows.len() == 1 {
        return Ok(());
    }

    let width = |k: usize| x[windows[k].1] - x[windows[k].0];
    let u_i = table.get(i, 0);
    let (denominator, first) = if bounds.degenerate {
        let w = table.window(windows[1].0, windows[1].1) * h * width(1);
        if w == 0.0 {
            return Err(ChainViolation::FlatDegenerate);
        }
        let (lo, hi) = ordered_ratios(u_i, bounds.u_min, bounds.u_max, w);
        (w, degenerate_first_bounds(lo, hi, width(1) / h))
    } else {
        (
            table.get(i, 1),
            first_bounds(bounds.m_l, bounds.m_r, width(1) / h),
        )
    };

    let lambda_bar = |j: usize| -> f64 {
        let mut prod: f64 = (1..=j).map(width).product();
        if bounds.degenerate {
            prod *= h;
        }
        table.window(windows[j].0, windows[j].1) / denominator * prod
    };

    let mut b = first;
    let mut prev_lb = 0.0;
    for j in 1..windows.len() {
        if j > 1 {
            let g = geometry_factors(x, i, windows[j], order[j]);
            b = next_bounds(b, prev_lb, g);
        }
        let lb = lambda_bar(j);
        let tol = 1e-12 * (1.0 + lb.abs().max(b.0.abs()).max(b.1.abs()));
        if !(b.0 - tol <= lb && lb <= b.1 + tol) {
            return Err(ChainViolation::OutOfBounds {
                step: j,
                lambda_bar: lb,
                lo: b.0,
                hi: b.1,
            });
        }
        prev_lb = lb;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{classify_interval, neighbour_slopes, ExtremumClass};
    use crate::config::Method;
    use crate::mesh::Mesh1D;

    fn approx(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    fn bounds_for(u: &[f64], x: &[f64], i: usize, config: &InterpConfig) -> IntervalBounds {
        let slopes: Vec<f64> = (0..u.len() - 1)
            .map(|k| (u[k + 1] - u[k]) / (x[k + 1] - x[k]))
            .collect();
        let (p, c, n) = neighbour_slopes(&slopes, i);
        IntervalBounds::new(u[i], u[i + 1], classify_interval(p, c, n), config)
    }

    #[test]
    fn geometry_examples() {
        let x: Vec<f64> = (0..6).map(f64::from).collect();
        assert_eq!(
            geometry_factors(&x, 2, (1, 3), 1),
            GeometryFactors { t: -1.0, d: 2.0 }
        );
        assert_eq!(
            geometry_factors(&x, 2, (2, 4), 4),
            GeometryFactors { t: 2.0, d: 2.0 }
        );
        let x = [0.0, 1.0, 3.0, 7.0];
        assert_eq!(
            geometry_factors(&x, 1, (1, 3), 3),
            GeometryFactors { t: 3.0, d: 3.0 }
        );
    }

    #[test]
    fn b_bounds_examples() {
        let g = |t, d| GeometryFactors { t, d };
        assert_eq!(
            b_bounds_step(None, 1.0, g(0.0, 2.0), 0.0, 1.0, 1),
            (-2.0, 2.0)
        );
        let (lo, hi) = b_bounds_step(None, 1.0, g(0.0, 1.0), -0.01, 1.02, 1);
        assert!(approx(lo, -1.08) && approx(hi, 1.04));
        let (lo, hi) = b_bounds_step(Some((-1.0, 1.0)), 0.5, g(-1.0, 2.0), 0.0, 1.0, 2);
        assert!(approx(lo, -1.5) && approx(hi, 0.5));
        // right-side point swaps the roles of the previous bounds
        let (lo, hi) = b_bounds_step(Some((-1.0, 1.0)), 0.5, g(2.0, 2.0), 0.0, 1.0, 2);
        assert!(approx(lo, -0.5) && approx(hi, 1.5));
    }

    #[test]
    fn lambda_bar_examples() {
        let m = Mesh1D::new(vec![0.0, 1.0, 2.0]).unwrap();
        let t = DividedDifferenceTable::build(&m, &[0.0, 1.0, 4.0], 2).unwrap();
        let s = StencilState::standard(&t, 0);
        assert_eq!(
            lambda_bar_candidate(&t, &m, &s, Direction::Right),
            Some(2.0)
        );
        assert_eq!(lambda_bar_candidate(&t, &m, &s, Direction::Left), None);

        let x: Vec<f64> = (0..7).map(|k| k as f64 * 0.3).collect();
        let lin: Vec<f64> = x.iter().map(|v| 2.0 - 3.0 * v).collect();
        let m = Mesh1D::new(x).unwrap();
        let t = DividedDifferenceTable::build(&m, &lin, 4).unwrap();
        let s = StencilState::standard(&t, 3);
        for side in [Direction::Left, Direction::Right] {
            assert!(lambda_bar_candidate(&t, &m, &s, side).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn lambda_bar_follows_its_recurrence() {
        let x = [0.0, 0.3, 0.45, 1.0, 1.2, 1.9, 2.4, 3.0];
        let u = [0.2, 1.3, 0.7, 2.2, 0.1, 0.9, 1.7, 0.4];
        let m = Mesh1D::new(x.to_vec()).unwrap();
        let t = DividedDifferenceTable::build(&m, &u, 7).unwrap();
        let mut s = StencilState::standard(&t, 3);
        let mut prev_lb = 1.0;
        let mut prev_dd = t.get(3, 1);
        for side in [
            Direction::Left,
            Direction::Right,
            Direction::Right,
            Direction::Left,
        ] {
            let lb = lambda_bar_candidate(&t, &m, &s, side).unwrap();
            let (p, window) = expansion(&x, s.window, side).unwrap();
            let dd = t.window(window.0, window.1);
            // λ_{j+1} = (U[V_{j+1}] / U[V_j]) (x^r_{j+1} - x^l_{j+1})
            let lambda = dd / prev_dd * (x[window.1] - x[window.0]);
            assert!(approx(lb, lambda * prev_lb));
            let width = x[window.1] - x[window.0];
            accept(
                &mut s,
                &Candidate {
                    point: p,
                    window,
                    dd,
                    width,
                    lambda_bar: lb,
                    bounds: (0.0, 0.0),
                },
            );
            prev_lb = lb;
            prev_dd = dd;
        }
    }

    fn info(admissible: bool, dd: f64, count: usize, distance: f64, lambda_bar: f64) -> SideInfo {
        SideInfo {
            admissible,
            divided_difference: dd,
            count,
            distance,
            lambda_bar,
        }
    }

    #[test]
    fn direction_policy_examples() {
        use StencilPolicy::*;
        let l = info(true, 0.3, 0, 1.0, 1.0);
        let r = info(true, -0.7, 0, 1.0, 1.0);
        assert_eq!(select_direction(Smoothness, &l, &r), Direction::Left);
        let l = info(true, 0.0, 1, 1.0, 2.0);
        let r = info(true, 0.0, 1, 1.0, 1.0);
        assert_eq!(select_direction(Symmetry, &l, &r), Direction::Right);
        let l = info(true, 0.0, 0, 0.5, 0.5);
        let r = info(true, 0.0, 0, 0.5, -1.0);
        assert_eq!(select_direction(Locality, &l, &r), Direction::Left);
        let l = info(true, 9.0, 3, 0.1, 0.0);
        let r = info(false, 0.0, 0, 0.0, 0.0);
        assert_eq!(select_direction(Smoothness, &l, &r), Direction::Left);
        assert_eq!(select_direction(Symmetry, &r, &l), Direction::Right);
    }

    #[test]
    fn unconstrained_convex_data_reaches_full_degree() {
        let x: Vec<f64> = (0..20).map(|k| k as f64 * 0.1).collect();
        let u: Vec<f64> = x.iter().map(|v| (v * 0.7).exp()).collect();
        let m = Mesh1D::new(x.clone()).unwrap();
        let t = DividedDifferenceTable::build(&m, &u, 7).unwrap();
        let config = InterpConfig::ppi(6);
        let wide = IntervalBounds {
            u_min: f64::NEG_INFINITY,
            u_max: f64::INFINITY,
            m_l: -1e300,
            m_r: 1e300,
            degenerate: false,
            w: None,
            class: ExtremumClass::None,
        };
        for i in 0..19 {
            let piece = build_stencil(&x, &t, i, &wide, &config);
            assert_eq!(piece.degree(), 6, "interval {i}");
        }
    }

    #[test]
    fn sharp_turn_forces_linear_piece() {
        // steep opposite jumps on both sides of interval 3
        let x: Vec<f64> = (0..8).map(f64::from).collect();
        let u = [0.0, 0.0, 10.0, 1.0, 1.1, 20.0, 0.0, 0.0];
        let m = Mesh1D::new(x.clone()).unwrap();
        let t = DividedDifferenceTable::build(&m, &u, 5).unwrap();
        let config = InterpConfig::dbi(4);
        let b = bounds_for(&u, &x, 3, &config);
        // |λ̄_1| exceeds (−4 m_l + 1) d_1 on both sides
        let s = StencilState::standard(&t, 3);
        for side in [Direction::Left, Direction::Right] {
            let lb = lambda_bar_candidate(&t, &m, &s, side).unwrap();
            assert!(lb.abs() > (1.0 - 4.0 * b.m_l) * 2.0, "{lb}");
        }
        let piece = build_stencil(&x, &t, 3, &b, &config);
        assert_eq!(piece.degree(), 1);
    }

    #[test]
    fn stencils_are_contiguous_bounded_and_verified() {
        let x: Vec<f64> = (0..17).map(|k| -0.2 + 0.4 * k as f64 / 16.0).collect();
        let u: Vec<f64> = x.iter().map(|v| 1.0 / (1.0 + (-200.0 * v).exp())).collect();
        let m = Mesh1D::new(x.clone()).unwrap();
        let t = DividedDifferenceTable::build(&m, &u, 9).unwrap();
        for method in [Method::Dbi, Method::Ppi] {
            let config = InterpConfig::new(8, method);
            for i in 0..16 {
                let b = bounds_for(&u, &x, i, &config);
                let piece = build_stencil(&x, &t, i, &b, &config);
                let (l, r) = piece.window;
                assert!(l <= i && r > i && r - l <= 8);
                assert_eq!(verify_chain(&x, &t, &piece, &b), Ok(()));
                let lo = u[i].min(u[i + 1]) - 1e-12;
                let hi = u[i].max(u[i + 1]) + 1e-12;
                if method == Method::Dbi {
                    for k in 0..=1000 {
                        let xs = x[i] + (x[i + 1] - x[i]) * k as f64 / 1000.0;
                        let v = piece.eval(&x, xs);
                        assert!(v >= lo && v <= hi, "interval {i}: {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_interval_respects_bounds() {
        let x: Vec<f64> = (0..8).map(f64::from).collect();
        let u = [0.3, 0.0, 0.0, 0.0, 0.4, 0.4, 1.0, 0.2];
        let m = Mesh1D::new(x.clone()).unwrap();
        let t = DividedDifferenceTable::build(&m, &u, 6).unwrap();
        for method in [Method::Dbi, Method::Ppi] {
            let config = InterpConfig::new(5, method);
            for i in 0..7 {
                let b = bounds_for(&u, &x, i, &config);
                let piece = build_stencil(&x, &t, i, &b, &config);
                assert_eq!(verify_chain(&x, &t, &piece, &b), Ok(()));
                for k in 0..=1000 {
                    let xs = x[i] + k as f64 / 1000.0;
                    let v = piece.eval(&x, xs);
                    assert!(
                        v >= b.u_min - 1e-12 && v <= b.u_max + 1e-12,
                        "{method} interval {i}: {v}"
                    );
                }
            }
            // 0,0,0 plateau: flat on both sides, must stay exactly zero
            let b = bounds_for(&u, &x, 1, &config);
            let piece = build_stencil(&x, &t, 1, &b, &config);
            assert_eq!(piece.eval(&x, 1.5), 0.0);
        }
        // with room to move, PPI lifts the 0.4 plateau off its linear piece
        let config = InterpConfig::ppi(5).with_eps(1.0, 1.0);
        let b = bounds_for(&u, &x, 4, &config);
        assert!(b.degenerate);
        let piece = build_stencil(&x, &t, 4, &b, &config);
        assert!(piece.degree() >= 2);
    }
}
