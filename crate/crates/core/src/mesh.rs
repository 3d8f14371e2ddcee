//! One-dimensional meshes: strictly increasing, finite coordinate sequences.

use std::ops::Deref;

use crate::error::{InterpError, Result};

/// A strictly increasing sequence of at least two finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh1D(Vec<f64>);

impl Mesh1D {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(InterpError::TooFewPoints(points.len()));
        }
        if let Some((index, &value)) = points.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(InterpError::NonFinite { index, value });
        }
        if let Some(k) = points.windows(2).position(|w| w[0] >= w[1]) {
            return Err(InterpError::NotIncreasing {
                index: k + 1,
                prev: points[k],
                next: points[k + 1],
            });
        }
        Ok(Mesh1D(points))
    }

    /// `n` equally spaced points on `[a, b]`, both endpoints included exactly.
    pub fn uniform(a: f64, b: f64, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(InterpError::TooFewPoints(n));
        }
        let h = (b - a) / (n - 1) as f64;
        let mut points: Vec<f64> = (0..n).map(|k| a + k as f64 * h).collect();
        points[n - 1] = b;
        Mesh1D::new(points)
    }

    pub fn points(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn first(&self) -> f64 {
        self.0[0]
    }

    pub fn last(&self) -> f64 {
        self.0[self.0.len() - 1]
    }

    pub fn intervals(&self) -> usize {
        self.0.len() - 1
    }

    /// Index `i` of the interval `[x_i, x_{i+1})` holding `x`. The last interval is
    /// closed on the right. `None` when `x` lies outside the mesh or is NaN.
    pub fn locate(&self, x: f64) -> Option<usize> {
        if !(x >= self.first() && x <= self.last()) {
            return None;
        }
        let k = self.0.partition_point(|&p| p <= x);
        Some(k.saturating_sub(1).min(self.intervals() - 1))
    }

    /// Like [`Mesh1D::locate`] but reports the offending value as an error.
    pub(crate) fn locate_checked(&self, index: usize, x: f64) -> Result<usize> {
        self.locate(x).ok_or(InterpError::OutOfRange {
            index,
            value: x,
            lo: self.first(),
            hi: self.last(),
        })
    }
}

impl Deref for Mesh1D {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for Mesh1D {
    type Error = InterpError;

    fn try_from(points: Vec<f64>) -> Result<Self> {
        Mesh1D::new(points)
    }
}

impl TryFrom<&[f64]> for Mesh1D {
    type Error = InterpError;

    fn try_from(points: &[f64]) -> Result<Self> {
        Mesh1D::new(points.to_vec())
    }
}

pub(crate) fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(InterpError::LengthMismatch { expected, actual });
    }
    Ok(())
}

pub(crate) fn check_finite(values: &[f64]) -> Result<()> {
    match values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
        Some((index, &value)) => Err(InterpError::NonFinite { index, value }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_meshes() {
        assert_eq!(Mesh1D::new(vec![1.0]), Err(InterpError::TooFewPoints(1)));
        assert!(matches!(
            Mesh1D::new(vec![0.0, 1.0, 1.0]),
            Err(InterpError::NotIncreasing { index: 2, .. })
        ));
        assert!(matches!(
            Mesh1D::new(vec![0.0, f64::NAN]),
            Err(InterpError::NonFinite { index: 1, .. })
        ));
    }

    #[test]
    fn uniform_hits_endpoints() {
        let m = Mesh1D::uniform(-1.0, 1.0, 257).unwrap();
        assert_eq!(m.len(), 257);
        assert_eq!(m.first(), -1.0);
        assert_eq!(m.last(), 1.0);
    }

    #[test]
    fn locate_is_half_open_with_closed_last_interval() {
        let m = Mesh1D::new(vec![0.0, 1.0, 3.0]).unwrap();
        assert_eq!(m.locate(0.0), Some(0));
        assert_eq!(m.locate(0.5), Some(0));
        assert_eq!(m.locate(1.0), Some(1));
        assert_eq!(m.locate(3.0), Some(1));
        assert_eq!(m.locate(3.0001), None);
        assert_eq!(m.locate(-1e-300), None);
        assert_eq!(m.locate(f64::NAN), None);
    }
}
