//! Monotone piecewise cubic Hermite interpolation (Fritsch-Carlson), the
//! baseline the adaptive methods are compared against.

use crate::error::Result;
use crate::interpnd::{sweep_2d, GridField2D, LineKernel};
use crate::mesh::{check_finite, check_len, Mesh1D};

/// Node derivatives from weighted harmonic means of the adjacent slopes.
///
/// Derivatives vanish where the data has a local extremum. The end derivatives
/// use the one-sided three-point formula, limited to keep monotonicity.
pub fn pchip_derivatives(x: &[f64], u: &[f64], d: &mut Vec<f64>) {
    let n = x.len();
    d.clear();
    d.resize(n, 0.0);
    let h = |k: usize| x[k + 1] - x[k];
    let delta = |k: usize| (u[k + 1] - u[k]) / h(k);

    if n == 2 {
        d[0] = delta(0);
        d[1] = d[0];
        return;
    }

    for (k, dk) in d.iter_mut().enumerate().take(n - 1).skip(1) {
        let (s0, s1) = (delta(k - 1), delta(k));
        if s0 * s1 <= 0.0 {
            continue;
        }
        let w1 = 2.0 * h(k) + h(k - 1);
        let w2 = h(k) + 2.0 * h(k - 1);
        *dk = (w1 + w2) / (w1 / s0 + w2 / s1);
    }

    d[0] = end_derivative(h(0), h(1), delta(0), delta(1));
    d[n - 1] = end_derivative(h(n - 2), h(n - 3), delta(n - 2), delta(n - 3));
}

fn end_derivative(h0: f64, h1: f64, s0: f64, s1: f64) -> f64 {
    let d = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
    if d * s0 <= 0.0 {
        0.0
    } else if s0 * s1 < 0.0 && d.abs() > 3.0 * s0.abs() {
        3.0 * s0
    } else {
        d
    }
}

/// Cubic Hermite value on `[x0, x1]` from endpoint values and derivatives.
#[inline]
fn hermite(x0: f64, x1: f64, u0: f64, u1: f64, d0: f64, d1: f64, x: f64) -> f64 {
    let h = x1 - x0;
    let t = (x - x0) / h;
    let t2 = t * t;
    let t3 = t2 * t;
    let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    let h10 = t3 - 2.0 * t2 + t;
    let h01 = -2.0 * t3 + 3.0 * t2;
    let h11 = t3 - t2;
    h00 * u0 + h10 * h * d0 + h01 * u1 + h11 * h * d1
}

fn eval_located(x: &[f64], u: &[f64], d: &[f64], located: &[usize], xout: &[f64], out: &mut [f64]) {
    for ((&i, &xo), slot) in located.iter().zip(xout).zip(out.iter_mut()) {
        *slot = hermite(x[i], x[i + 1], u[i], u[i + 1], d[i], d[i + 1], xo);
    }
}

/// PCHIP interpolant of `(x, u)` at `xout` (any order, all inside the mesh).
pub fn pchip_1d(x: &Mesh1D, u: &[f64], xout: &[f64]) -> Result<Vec<f64>> {
    check_len(x.len(), u.len())?;
    check_finite(u)?;
    let located = xout
        .iter()
        .enumerate()
        .map(|(k, &xo)| x.locate_checked(k, xo))
        .collect::<Result<Vec<_>>>()?;
    let mut d = Vec::new();
    pchip_derivatives(x, u, &mut d);
    let mut out = vec![0.0; xout.len()];
    eval_located(x, u, &d, &located, xout, &mut out);
    Ok(out)
}

pub(crate) struct PchipKernel;

impl LineKernel for PchipKernel {
    type Workspace = Vec<f64>;

    fn workspace(&self, _mesh: &Mesh1D) -> Self::Workspace {
        Vec::new()
    }

    fn apply(
        &self,
        d: &mut Vec<f64>,
        mesh: &Mesh1D,
        values: &[f64],
        located: &[usize],
        xout: &[f64],
        out: &mut [f64],
    ) -> Result<()> {
        pchip_derivatives(mesh, values, d);
        eval_located(mesh, values, d, located, xout, out);
        Ok(())
    }
}

/// Tensor-product PCHIP: a sweep along x, then along y.
pub fn pchip_2d(field: &GridField2D, xout: &Mesh1D, yout: &Mesh1D) -> Result<GridField2D> {
    sweep_2d(&PchipKernel, field, xout, yout)
}
