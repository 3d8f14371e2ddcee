//! Tensor-product interpolation on 2D and 3D grids by 1D sweeps, x first,
//! then y, then z.
//!
//! The method is nonlinear, so the sweep order matters; it is fixed here.
//! Each sweep materializes the full intermediate field and runs its lines in
//! parallel. Lines are independent, so results do not depend on scheduling.

use rayon::prelude::*;

use crate::config::InterpConfig;
use crate::error::{Axis, InterpError, Result};
use crate::interp1d::AdaptiveInterpolant1D;
use crate::mesh::{check_finite, check_len, Mesh1D};

/// Values on `xs x ys`, stored with x varying fastest: `values[i + nx * j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridField2D {
    xs: Mesh1D,
    ys: Mesh1D,
    values: Vec<f64>,
}

impl GridField2D {
    pub fn new(xs: Mesh1D, ys: Mesh1D, values: Vec<f64>) -> Result<Self> {
        check_len(xs.len() * ys.len(), values.len())?;
        Ok(GridField2D { xs, ys, values })
    }

    /// Samples `f(x, y)` at every grid node.
    pub fn from_fn(xs: Mesh1D, ys: Mesh1D, mut f: impl FnMut(f64, f64) -> f64) -> Self {
        let mut values = Vec::with_capacity(xs.len() * ys.len());
        for &y in ys.iter() {
            values.extend(xs.iter().map(|&x| f(x, y)));
        }
        GridField2D { xs, ys, values }
    }

    pub fn xs(&self) -> &Mesh1D {
        &self.xs
    }

    pub fn ys(&self) -> &Mesh1D {
        &self.ys
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i + self.xs.len() * j]
    }
}

/// Values on `xs x ys x zs`, stored x fastest: `values[i + nx * (j + ny * k)]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridField3D {
    xs: Mesh1D,
    ys: Mesh1D,
    zs: Mesh1D,
    values: Vec<f64>,
}

impl GridField3D {
    pub fn new(xs: Mesh1D, ys: Mesh1D, zs: Mesh1D, values: Vec<f64>) -> Result<Self> {
        check_len(xs.len() * ys.len() * zs.len(), values.len())?;
        Ok(GridField3D { xs, ys, zs, values })
    }

    pub fn from_fn(
        xs: Mesh1D,
        ys: Mesh1D,
        zs: Mesh1D,
        mut f: impl FnMut(f64, f64, f64) -> f64,
    ) -> Self {
        let mut values = Vec::with_capacity(xs.len() * ys.len() * zs.len());
        for &z in zs.iter() {
            for &y in ys.iter() {
                values.extend(xs.iter().map(|&x| f(x, y, z)));
            }
        }
        GridField3D { xs, ys, zs, values }
    }

    pub fn xs(&self) -> &Mesh1D {
        &self.xs
    }

    pub fn ys(&self) -> &Mesh1D {
        &self.ys
    }

    pub fn zs(&self) -> &Mesh1D {
        &self.zs
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.values[i + self.xs.len() * (j + self.ys.len() * k)]
    }
}

/// A 1D method applied line by line during a sweep.
pub(crate) trait LineKernel: Sync {
    /// Per-thread scratch state, reused across the lines of one sweep.
    type Workspace: Send;

    fn workspace(&self, mesh: &Mesh1D) -> Self::Workspace;

    /// Interpolates one line. `located[k]` is the interval holding `xout[k]`.
    fn apply(
        &self,
        ws: &mut Self::Workspace,
        mesh: &Mesh1D,
        values: &[f64],
        located: &[usize],
        xout: &[f64],
        out: &mut [f64],
    ) -> Result<()>;
}

struct AdaptiveKernel(InterpConfig);

impl LineKernel for AdaptiveKernel {
    type Workspace = Option<AdaptiveInterpolant1D>;

    fn workspace(&self, _mesh: &Mesh1D) -> Self::Workspace {
        None
    }

    fn apply(
        &self,
        ws: &mut Self::Workspace,
        mesh: &Mesh1D,
        values: &[f64],
        located: &[usize],
        xout: &[f64],
        out: &mut [f64],
    ) -> Result<()> {
        match ws {
            Some(f) => f.fit(values)?,
            None => *ws = Some(AdaptiveInterpolant1D::new(mesh.clone(), values, self.0)?),
        }
        ws.as_ref()
            .expect("fitted above")
            .eval_located(located, xout, out);
        Ok(())
    }
}

fn locate_all(mesh: &Mesh1D, xout: &Mesh1D) -> Result<Vec<usize>> {
    xout.iter()
        .enumerate()
        .map(|(k, &x)| mesh.locate_checked(k, x))
        .collect()
}

/// One sweep along `axis` of a field with shape `dims` (x fastest), mapping
/// `dims[axis]` points on `mesh` to the points of `xout`.
fn sweep_axis<K: LineKernel>(
    kernel: &K,
    src: &[f64],
    dims: [usize; 3],
    axis: Axis,
    mesh: &Mesh1D,
    xout: &Mesh1D,
) -> Result<(Vec<f64>, [usize; 3])> {
    let a = axis as usize;
    let located = locate_all(mesh, xout)?;
    let n = dims[a];
    let m = xout.len();
    let mut out_dims = dims;
    out_dims[a] = m;

    // strides of the swept axis and of the two remaining axes, in and out
    let stride = |d: [usize; 3], k: usize| d[..k].iter().product::<usize>();
    let others: Vec<usize> = (0..3).filter(|&k| k != a).collect();
    let (p, q) = (others[0], others[1]);
    let np = dims[p];
    let lines = dims[p] * dims[q];
    let base = |d: [usize; 3], line: usize| (line % np) * stride(d, p) + (line / np) * stride(d, q);
    let (s_in, s_out) = (stride(dims, a), stride(out_dims, a));

    let mut buffer = vec![0.0; lines * m];
    buffer.par_chunks_mut(m).enumerate().try_for_each_init(
        || (kernel.workspace(mesh), vec![0.0; n]),
        |(ws, line_in), (line, out)| {
            let b = base(dims, line);
            for (t, v) in line_in.iter_mut().enumerate() {
                *v = src[b + t * s_in];
            }
            kernel
                .apply(ws, mesh, line_in, &located, xout, out)
                .map_err(|e| e.on_line(axis, line))
        },
    )?;

    if a == 0 {
        return Ok((buffer, out_dims));
    }
    let mut dst = vec![0.0; buffer.len()];
    for (line, chunk) in buffer.chunks_exact(m).enumerate() {
        let b = base(out_dims, line);
        for (t, &v) in chunk.iter().enumerate() {
            dst[b + t * s_out] = v;
        }
    }
    Ok((dst, out_dims))
}

fn check_field(values: &[f64], dims: [usize; 3]) -> Result<()> {
    check_finite(values).map_err(|e| match e {
        // name the x line holding the bad value
        InterpError::NonFinite { index, value } => InterpError::NonFinite {
            index: index % dims[0],
            value,
        }
        .on_line(Axis::X, index / dims[0]),
        other => other,
    })
}

pub(crate) fn sweep_2d<K: LineKernel>(
    kernel: &K,
    field: &GridField2D,
    xout: &Mesh1D,
    yout: &Mesh1D,
) -> Result<GridField2D> {
    let dims = [field.xs.len(), field.ys.len(), 1];
    check_field(&field.values, dims)?;
    locate_all(&field.ys, yout).map_err(|e| e.on_line(Axis::Y, 0))?;
    let (v, dims) = sweep_axis(kernel, &field.values, dims, Axis::X, &field.xs, xout)
        .map_err(tag_range(Axis::X))?;
    let (v, _) = sweep_axis(kernel, &v, dims, Axis::Y, &field.ys, yout)?;
    Ok(GridField2D {
        xs: xout.clone(),
        ys: yout.clone(),
        values: v,
    })
}

pub(crate) fn sweep_3d<K: LineKernel>(
    kernel: &K,
    field: &GridField3D,
    xout: &Mesh1D,
    yout: &Mesh1D,
    zout: &Mesh1D,
) -> Result<GridField3D> {
    let dims = [field.xs.len(), field.ys.len(), field.zs.len()];
    check_field(&field.values, dims)?;
    locate_all(&field.ys, yout).map_err(|e| e.on_line(Axis::Y, 0))?;
    locate_all(&field.zs, zout).map_err(|e| e.on_line(Axis::Z, 0))?;
    let (v, dims) = sweep_axis(kernel, &field.values, dims, Axis::X, &field.xs, xout)
        .map_err(tag_range(Axis::X))?;
    let (v, dims) = sweep_axis(kernel, &v, dims, Axis::Y, &field.ys, yout)?;
    let (v, _) = sweep_axis(kernel, &v, dims, Axis::Z, &field.zs, zout)?;
    Ok(GridField3D {
        xs: xout.clone(),
        ys: yout.clone(),
        zs: zout.clone(),
        values: v,
    })
}

// out-of-range output points are found before any line runs; tag them with the axis
fn tag_range(axis: Axis) -> impl Fn(InterpError) -> InterpError {
    move |e| match e {
        InterpError::OutOfRange { .. } => e.on_line(axis, 0),
        other => other,
    }
}

/// Interpolates a 2D field onto the grid `xout x yout`.
pub fn adaptive_interpolation_2d(
    field: &GridField2D,
    xout: &Mesh1D,
    yout: &Mesh1D,
    config: &InterpConfig,
) -> Result<GridField2D> {
    config.validate()?;
    sweep_2d(&AdaptiveKernel(*config), field, xout, yout)
}

/// Interpolates a 3D field onto the grid `xout x yout x zout`.
pub fn adaptive_interpolation_3d(
    field: &GridField3D,
    xout: &Mesh1D,
    yout: &Mesh1D,
    zout: &Mesh1D,
    config: &InterpConfig,
) -> Result<GridField3D> {
    config.validate()?;
    sweep_3d(&AdaptiveKernel(*config), field, xout, yout, zout)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp1d::adaptive_interpolation_1d;

    fn mesh(a: f64, b: f64, n: usize) -> Mesh1D {
        Mesh1D::uniform(a, b, n).unwrap()
    }

    #[test]
    fn constant_in_y_matches_1d() {
        let g = |x: f64| 1.0 + (4.0 * x).sin().powi(2);
        let field = GridField2D::from_fn(mesh(0.0, 1.0, 17), mesh(-1.0, 2.0, 5), |x, _| g(x));
        let (xo, yo) = (mesh(0.0, 1.0, 40), mesh(-1.0, 2.0, 7));
        let config = InterpConfig::ppi(6);
        let out = adaptive_interpolation_2d(&field, &xo, &yo, &config).unwrap();
        let u: Vec<f64> = field.xs().iter().map(|&x| g(x)).collect();
        let line = adaptive_interpolation_1d(field.xs(), &u, &xo, &config).unwrap();
        for j in 0..yo.len() {
            for (i, &want) in line.iter().enumerate() {
                assert_eq!(out.get(i, j), want);
            }
        }
    }

    #[test]
    fn bilinear_is_exact() {
        let f = |x: f64, y: f64| 2.0 + 0.5 * x - 1.5 * y + 0.25 * x * y;
        let field = GridField2D::from_fn(mesh(-1.0, 1.0, 9), mesh(0.0, 3.0, 11), f);
        let (xo, yo) = (mesh(-1.0, 1.0, 23), mesh(0.0, 3.0, 31));
        let out = adaptive_interpolation_2d(&field, &xo, &yo, &InterpConfig::ppi(8)).unwrap();
        for (j, &y) in yo.iter().enumerate() {
            for (i, &x) in xo.iter().enumerate() {
                let want = f(x, y);
                assert!((out.get(i, j) - want).abs() <= 1e-12 * want.abs().max(1.0));
            }
        }
    }

    #[test]
    fn separable_affine_3d_is_exact() {
        let f = |x: f64, y: f64, z: f64| (1.0 + x) * (2.0 - 0.5 * y) * (0.5 + z);
        let field =
            GridField3D::from_fn(mesh(0.0, 1.0, 5), mesh(0.0, 2.0, 6), mesh(-0.25, 0.5, 7), f);
        let (xo, yo, zo) = (mesh(0.0, 1.0, 8), mesh(0.0, 2.0, 9), mesh(-0.25, 0.5, 10));
        let out = adaptive_interpolation_3d(&field, &xo, &yo, &zo, &InterpConfig::dbi(4)).unwrap();
        for (k, &z) in zo.iter().enumerate() {
            for (j, &y) in yo.iter().enumerate() {
                for (i, &x) in xo.iter().enumerate() {
                    let want = f(x, y, z);
                    assert!((out.get(i, j, k) - want).abs() <= 1e-12 * want.abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn constant_3d_is_constant() {
        let field = GridField3D::from_fn(
            mesh(0.0, 1.0, 4),
            mesh(0.0, 1.0, 5),
            mesh(0.0, 1.0, 6),
            |_, _, _| 3.5,
        );
        let o = mesh(0.0, 1.0, 9);
        let out = adaptive_interpolation_3d(&field, &o, &o, &o, &InterpConfig::ppi(5)).unwrap();
        assert!(out.values().iter().all(|&v| v == 3.5));
    }

    #[test]
    fn nodes_are_reproduced() {
        let f = |x: f64, y: f64| 0.1 / (0.1 + 25.0 * (x * x + y * y));
        let (xs, ys) = (mesh(-1.0, 1.0, 17), mesh(-1.0, 1.0, 13));
        let field = GridField2D::from_fn(xs.clone(), ys.clone(), f);
        let out = adaptive_interpolation_2d(&field, &xs, &ys, &InterpConfig::ppi(8)).unwrap();
        for (a, b) in out.values().iter().zip(field.values()) {
            assert!((a - b).abs() <= 1e-12 * b.abs());
        }
    }

    #[test]
    fn errors_name_the_axis() {
        let field = GridField2D::from_fn(mesh(0.0, 1.0, 4), mesh(0.0, 1.0, 4), |x, y| x + y);
        let err = adaptive_interpolation_2d(
            &field,
            &mesh(0.0, 1.0, 3),
            &mesh(0.0, 1.5, 3),
            &InterpConfig::dbi(3),
        )
        .unwrap_err();
        assert!(matches!(err, InterpError::Line { axis: Axis::Y, .. }));

        let mut values = field.values().to_vec();
        values[9] = f64::NAN;
        let bad = GridField2D::new(mesh(0.0, 1.0, 4), mesh(0.0, 1.0, 4), values).unwrap();
        let err = adaptive_interpolation_2d(
            &bad,
            &mesh(0.0, 1.0, 3),
            &mesh(0.0, 1.0, 3),
            &InterpConfig::dbi(3),
        )
        .unwrap_err();
        assert!(
            matches!(
                err,
                InterpError::Line {
                    axis: Axis::X,
                    line: 2,
                    ..
                }
            ),
            "{err}"
        );
    }

    #[test]
    fn field_shape_is_checked() {
        assert!(matches!(
            GridField2D::new(mesh(0.0, 1.0, 3), mesh(0.0, 1.0, 3), vec![0.0; 8]),
            Err(InterpError::LengthMismatch {
                expected: 9,
                actual: 8
            })
        ));
    }
}
