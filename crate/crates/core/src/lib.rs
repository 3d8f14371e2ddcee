//! Adaptive data-bounded and positivity-preserving piecewise polynomial
//! interpolation on 1D meshes and tensor-product grids.
//!
//! Each mesh interval gets its own Newton polynomial whose stencil grows one
//! point at a time, as long as the interpolant provably stays inside bounds
//! derived from the neighbouring data. With `eps0 = eps1 = 0` the result never
//! leaves the range of the two interval endpoints; positive `eps` values let
//! the polynomial overshoot by a controlled relative amount, which keeps high
//! order near extrema while still preserving positivity for `eps <= 1`.

pub mod bounds;
pub mod config;
pub mod diagnostics;
pub mod divdiff;
pub mod error;
pub mod harness;
pub mod interp1d;
pub mod interpnd;
pub mod mesh;
pub mod pchip;
pub mod stencil;

pub use config::{InterpConfig, Method, StencilPolicy};
pub use error::{Axis, InterpError, Result};
pub use interp1d::{adaptive_interpolation_1d, AdaptiveInterpolant1D};

pub use interpnd::{
    adaptive_interpolation_2d, adaptive_interpolation_3d, GridField2D, GridField3D,
};
pub use mesh::Mesh1D;
pub use pchip::{pchip_1d, pchip_2d};
