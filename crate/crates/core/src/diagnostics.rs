//! Error norms and mesh refinement.

use crate::error::{InterpError, Result};
use crate::mesh::{check_len, Mesh1D};

/// Trapezoid weights for `mesh`, so that `sum w_k f_k` approximates the integral of `f`.
fn trapezoid_weights(mesh: &[f64]) -> Vec<f64> {
    let n = mesh.len();
    let mut w = vec![0.0; n];
    for k in 0..n - 1 {
        let h = 0.5 * (mesh[k + 1] - mesh[k]);
        w[k] += h;
        w[k + 1] += h;
    }
    w
}

/// `(integral (approx - exact)^2 dx)^(1/2)` by the trapezoid rule on `mesh`.
pub fn l2_error_continuum(approx: &[f64], exact: &[f64], mesh: &Mesh1D) -> Result<f64> {
    check_len(mesh.len(), approx.len())?;
    check_len(mesh.len(), exact.len())?;
    let w = trapezoid_weights(mesh);
    let sum: f64 = approx
        .iter()
        .zip(exact)
        .zip(&w)
        .map(|((a, e), w)| w * (a - e) * (a - e))
        .sum();
    Ok(sum.sqrt())
}

/// 2D version of [`l2_error_continuum`]; values are stored x fastest.
///
/// The rule is applied along x on every row, then along y on the row integrals.
pub fn l2_error_continuum_2d(
    approx: &[f64],
    exact: &[f64],
    xs: &Mesh1D,
    ys: &Mesh1D,
) -> Result<f64> {
    let nx = xs.len();
    check_len(nx * ys.len(), approx.len())?;
    check_len(nx * ys.len(), exact.len())?;
    let wx = trapezoid_weights(xs);
    let wy = trapezoid_weights(ys);
    let sum: f64 = approx
        .chunks_exact(nx)
        .zip(exact.chunks_exact(nx))
        .zip(&wy)
        .map(|((a, e), wy)| {
            let row: f64 = a
                .iter()
                .zip(e)
                .zip(&wx)
                .map(|((a, e), w)| w * (a - e) * (a - e))
                .sum();
            wy * row
        })
        .sum();
    Ok(sum.sqrt())
}

/// Root-mean-square of `a - b` over grid points.
pub fn l2_error_grid(a: &[f64], b: &[f64]) -> Result<f64> {
    check_len(a.len(), b.len())?;
    if a.is_empty() {
        return Err(InterpError::InvalidConfig("empty grid".into()));
    }
    let sum: f64 = a.iter().zip(b).map(|(a, b)| (a - b) * (a - b)).sum();
    Ok((sum / a.len() as f64).sqrt())
}

/// Inserts `k` equally spaced points inside every interval.
pub fn refine_mesh(mesh: &Mesh1D, k: usize) -> Mesh1D {
    let x = mesh.points();
    let mut out = Vec::with_capacity(x.len() + k * mesh.intervals());
    for pair in x.windows(2) {
        out.push(pair[0]);
        let h = (pair[1] - pair[0]) / (k + 1) as f64;
        out.extend((1..=k).map(|j| pair[0] + j as f64 * h));
    }
    out.push(mesh.last());
    Mesh1D::new(out).expect("refinement of a valid mesh is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn continuum_examples() {
        let m = Mesh1D::uniform(0.0, 1.0, 10_000).unwrap();
        let zero = vec![0.0; m.len()];
        assert_eq!(l2_error_continuum(&zero, &zero, &m).unwrap(), 0.0);
        let c = vec![-0.75; m.len()];
        assert!((l2_error_continuum(&c, &zero, &m).unwrap() - 0.75).abs() < 1e-12);
        let e = l2_error_continuum(m.points(), &zero, &m).unwrap();
        assert!((e - (1.0f64 / 3.0).sqrt()).abs() < 1e-6);
    }

    #[test]
    fn continuum_2d_separable() {
        // integral of (x y)^2 over [0,1]x[0,2] = 1/3 * 8/3
        let xs = Mesh1D::uniform(0.0, 1.0, 1000).unwrap();
        let ys = Mesh1D::uniform(0.0, 2.0, 1000).unwrap();
        let a: Vec<f64> = ys
            .iter()
            .flat_map(|y| xs.iter().map(move |x| x * y))
            .collect();
        let zero = vec![0.0; a.len()];
        let e = l2_error_continuum_2d(&a, &zero, &xs, &ys).unwrap();
        assert!((e - (8.0f64 / 9.0).sqrt()).abs() < 1e-5);
    }

    #[test]
    fn grid_norm_is_rms() {
        assert!((l2_error_grid(&[3.0, 4.0], &[0.0, 0.0]).unwrap() - 12.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(l2_error_grid(&[1.0, 2.0], &[1.0, 2.0]).unwrap(), 0.0);
        assert!(l2_error_grid(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn refinement_counts() {
        let m = Mesh1D::uniform(0.0, 1.0, 64).unwrap();
        assert_eq!(refine_mesh(&m, 1).len(), 127);
        assert_eq!(refine_mesh(&m, 3).len(), 253);
        assert_eq!(refine_mesh(&m, 0), m);
    }

    proptest! {
        #[test]
        fn refinement_keeps_original_points(
            mut pts in proptest::collection::vec(-100.0f64..100.0, 2..30), k in 0usize..5,
        ) {
            pts.sort_by(f64::total_cmp);
            pts.dedup();
            prop_assume!(pts.len() >= 2);
            let m = Mesh1D::new(pts).unwrap();
            let r = refine_mesh(&m, k);
            prop_assert_eq!(r.len(), m.len() + k * m.intervals());
            for (j, x) in m.iter().enumerate() {
                prop_assert_eq!(r[j * (k + 1)], *x);
            }
        }

        #[test]
        fn grid_norm_is_permutation_invariant(
            v in proptest::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 1..40), seed in 0usize..1000,
        ) {
            let (a, b): (Vec<f64>, Vec<f64>) = v.iter().copied().unzip();
            let n = v.len();
            let perm: Vec<usize> = (0..n).map(|i| (i * 7 + seed) % n).collect();
            let mut seen = vec![false; n];
            let is_perm = perm.iter().all(|&p| !std::mem::replace(&mut seen[p], true));
            prop_assume!(is_perm);
            let ap: Vec<f64> = perm.iter().map(|&p| a[p]).collect();
            let bp: Vec<f64> = perm.iter().map(|&p| b[p]).collect();
            let x = l2_error_grid(&a, &b).unwrap();
            let y = l2_error_grid(&ap, &bp).unwrap();
            prop_assert!((x - y).abs() <= 1e-12 * x.max(1.0));
        }
    }
}
