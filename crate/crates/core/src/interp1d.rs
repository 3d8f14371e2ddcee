//! The 1D data-bounded / positivity-preserving interpolation driver.

use crate::bounds::{classify_interval, neighbour_slopes, IntervalBounds};
use crate::config::InterpConfig;
use crate::divdiff::{DividedDifferenceTable, IntervalInterpolant};
use crate::error::Result;
use crate::mesh::{check_len, Mesh1D};
use crate::stencil::build_stencil;

/// Per-interval adaptive interpolant over a whole mesh.
///
/// Construction classifies each interval, computes its bounds and grows its
/// stencil once; evaluation is then a binary search plus a Newton evaluation.
#[derive(Debug, Clone)]
pub struct AdaptiveInterpolant1D {
    mesh: Mesh1D,
    config: InterpConfig,
    table: DividedDifferenceTable,
    bounds: Vec<IntervalBounds>,
    pieces: Vec<IntervalInterpolant>,
}

impl AdaptiveInterpolant1D {
    pub fn new(mesh: Mesh1D, values: &[f64], config: InterpConfig) -> Result<Self> {
        let mut this = AdaptiveInterpolant1D {
            mesh,
            config,
            table: DividedDifferenceTable::default(),
            bounds: Vec::new(),
            pieces: Vec::new(),
        };
        this.fit(values)?;
        Ok(this)
    }

    /// Refits on new data over the same mesh, reusing allocations.
    pub fn fit(&mut self, values: &[f64]) -> Result<()> {
        self.config.validate()?;
        check_len(self.mesh.len(), values.len())?;
        // one order past the target degree feeds the local error estimate
        self.table
            .rebuild(&self.mesh, values, self.config.degree + 1)?;

        let x = self.mesh.points();
        let intervals = self.mesh.intervals();
        let slopes: Vec<f64> = (0..intervals).map(|i| self.table.get(i, 1)).collect();

        self.bounds.clear();
        self.pieces.clear();
        for i in 0..intervals {
            let (prev, cur, next) = neighbour_slopes(&slopes, i);
            let class = classify_interval(prev, cur, next);
            let bounds = IntervalBounds::new(values[i], values[i + 1], class, &self.config);
            let piece = build_stencil(x, &self.table, i, &bounds, &self.config);
            let bounds = match (bounds.degenerate, piece.insertion_order.get(2)) {
                (true, Some(_)) => {
                    let (l, r) = if piece.insertion_order[2] < i {
                        (i - 1, i + 1)
                    } else {
                        (i, i + 2)
                    };
                    let w = self.table.window(l, r) * (x[i + 1] - x[i]) * (x[r] - x[l]);
                    bounds
                        .with_weight(values[i], w, self.config.method)
                        .unwrap_or(bounds)
                }
                _ => bounds,
            };
            self.bounds.push(bounds);
            self.pieces.push(piece);
        }
        Ok(())
    }

    /// Value at `x`; errors if `x` lies outside the mesh.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let i = self.mesh.locate_checked(0, x)?;
        Ok(self.pieces[i].eval(self.mesh.points(), x))
    }

    /// Values at every point of `xout`, in the order given.
    pub fn eval_many(&self, xout: &[f64]) -> Result<Vec<f64>> {
        let mut out = vec![0.0; xout.len()];
        self.eval_into(xout, &mut out)?;
        Ok(out)
    }

    pub fn eval_into(&self, xout: &[f64], out: &mut [f64]) -> Result<()> {
        check_len(xout.len(), out.len())?;
        let x = self.mesh.points();
        for (k, (&xo, slot)) in xout.iter().zip(out.iter_mut()).enumerate() {
            let i = self.mesh.locate_checked(k, xo)?;
            *slot = self.pieces[i].eval(x, xo);
        }
        Ok(())
    }

    /// Evaluates with the interval of every point already known.
    pub(crate) fn eval_located(&self, located: &[usize], xout: &[f64], out: &mut [f64]) {
        let x = self.mesh.points();
        for ((&i, &xo), slot) in located.iter().zip(xout).zip(out.iter_mut()) {
            *slot = self.pieces[i].eval(x, xo);
        }
    }

    pub fn mesh(&self) -> &Mesh1D {
        &self.mesh
    }

    pub fn config(&self) -> &InterpConfig {
        &self.config
    }

    pub fn table(&self) -> &DividedDifferenceTable {
        &self.table
    }

    /// Bounds of every interval; degenerate intervals carry their resolved `w`.
    pub fn bounds(&self) -> &[IntervalBounds] {
        &self.bounds
    }

    pub fn pieces(&self) -> &[IntervalInterpolant] {
        &self.pieces
    }
}

/// Interpolates `(x, u)` to the points `xout` (any order, all inside the mesh).
pub fn adaptive_interpolation_1d(
    x: &Mesh1D,
    u: &[f64],
    xout: &[f64],
    config: &InterpConfig,
) -> Result<Vec<f64>> {
    config.validate()?;
    check_len(x.len(), u.len())?;
    for (k, &xo) in xout.iter().enumerate() {
        x.locate_checked(k, xo)?;
    }
    AdaptiveInterpolant1D::new(x.clone(), u, *config)?.eval_many(xout)
}
