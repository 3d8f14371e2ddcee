//! Divided-difference tables and Newton-form interpolants.

use crate::error::Result;
use crate::mesh::{check_finite, check_len, Mesh1D};

/// Dense lower-triangular table with `T[i][j] = U[x_i, ..., x_{i+j}]`.
///
/// Entries with `i + j >= n` are never read and are left at zero.
#[derive(Debug, Clone, Default)]
pub struct DividedDifferenceTable {
    entries: Vec<f64>,
    n_points: usize,
    max_order: usize,
}

impl DividedDifferenceTable {
    /// Builds orders `0..=min(max_order, n - 1)`.
    pub fn build(mesh: &Mesh1D, values: &[f64], max_order: usize) -> Result<Self> {
        let mut table = DividedDifferenceTable::default();
        table.rebuild(mesh, values, max_order)?;
        Ok(table)
    }

    /// Recomputes the table in place, reusing the allocation.
    pub fn rebuild(&mut self, mesh: &Mesh1D, values: &[f64], max_order: usize) -> Result<()> {
        check_len(mesh.len(), values.len())?;
        check_finite(values)?;
        let n = mesh.len();
        let order = max_order.max(1).min(n - 1);
        let stride = order + 1;
        self.entries.clear();
        self.entries.resize(n * stride, 0.0);
        self.n_points = n;
        self.max_order = order;

        let x = mesh.points();
        for (i, &u) in values.iter().enumerate() {
            self.entries[i * stride] = u;
        }
        for j in 1..=order {
            for i in 0..n - j {
                let hi = self.entries[(i + 1) * stride + j - 1];
                let lo = self.entries[i * stride + j - 1];
                self.entries[i * stride + j] = (hi - lo) / (x[i + j] - x[i]);
            }
        }
        Ok(())
    }

    /// `U[x_i, ..., x_{i+j}]`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(j <= self.max_order && i + j < self.n_points);
        self.entries[i * (self.max_order + 1) + j]
    }

    /// Divided difference over the contiguous window `[l, r]`.
    #[inline]
    pub fn window(&self, l: usize, r: usize) -> f64 {
        self.get(l, r - l)
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }
}

/// Newton interpolant for one base interval `[x_i, x_{i+1}]`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalInterpolant {
    pub interval: usize,
    /// Inclusive mesh-index window `(l, r)`.
    pub window: (usize, usize),
    /// Mesh indices in insertion order, starting `i, i + 1`.
    pub insertion_order: Vec<usize>,
    /// `coefficients[j]` is the divided difference of the window after `j` expansions.
    pub coefficients: Vec<f64>,
    /// `u_i`.
    pub base_value: f64,
}

impl IntervalInterpolant {
    /// The two-point (linear) interpolant on interval `i`.
    pub fn linear(table: &DividedDifferenceTable, i: usize) -> Self {
        IntervalInterpolant {
            interval: i,
            window: (i, i + 1),
            insertion_order: vec![i, i + 1],
            coefficients: vec![table.get(i, 1)],
            base_value: table.get(i, 0),
        }
    }

    pub fn degree(&self) -> usize {
        self.window.1 - self.window.0
    }

    /// Evaluates the Newton form by nested multiplication over the insertion order.
    pub fn eval(&self, mesh: &[f64], x: f64) -> f64 {
        let c = &self.coefficients;
        let nodes = &self.insertion_order;
        let n = c.len();
        let mut acc = c[n - 1];
        for j in (1..n).rev() {
            acc = c[j - 1] + acc * (x - mesh[nodes[j]]);
        }
        self.base_value + acc * (x - mesh[nodes[0]])
    }
}

/// `u_i + sum_j c_j prod_{k <= j} (x - x_k^e)`, see [`IntervalInterpolant::eval`].
pub fn newton_eval(piece: &IntervalInterpolant, mesh: &Mesh1D, x: f64) -> f64 {
    piece.eval(mesh.points(), x)
}

/// Estimate of the local interpolation error of `piece`:
/// the divided difference of the window grown by one more point, times
/// `prod_k max(|x_i - x_k^e|, |x_{i+1} - x_k^e|)` over the stencil nodes.
///
/// The extra point is the nearer of the two mesh neighbours of the window
/// (the right one on ties). Returns `None` when the table does not reach
/// `degree + 1` or the window already spans the mesh.
pub fn estimate_local_error(
    piece: &IntervalInterpolant,
    table: &DividedDifferenceTable,
    mesh: &Mesh1D,
) -> Option<f64> {
    let x = mesh.points();
    let (l, r) = piece.window;
    if piece.degree() + 1 > table.max_order() {
        return None;
    }
    let i = piece.interval;
    let left = (l > 0).then(|| l - 1);
    let right = (r + 1 < x.len()).then_some(r + 1);
    let grown = match (left, right) {
        (Some(p), Some(q)) => {
            if x[i] - x[p] < x[q] - x[i + 1] {
                (p, r)
            } else {
                (l, q)
            }
        }
        (Some(p), None) => (p, r),
        (None, Some(q)) => (l, q),
        (None, None) => return None,
    };
    let dd = table.window(grown.0, grown.1);
    let spread: f64 = piece
        .insertion_order
        .iter()
        .map(|&k| (x[i] - x[k]).abs().max((x[i + 1] - x[k]).abs()))
        .product();
    Some(dd * spread)
}
