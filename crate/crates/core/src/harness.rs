//! Analytic test functions and the experiments built on them: approximation
//! error sweeps and round-trip mappings between two meshes, written as CSV.

use std::f64::consts::PI;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::config::{InterpConfig, Method};
use crate::diagnostics::{l2_error_continuum, l2_error_continuum_2d, l2_error_grid, refine_mesh};
use crate::error::InterpError;
use crate::interp1d::adaptive_interpolation_1d;
use crate::interpnd::{adaptive_interpolation_2d, GridField2D};
use crate::mesh::Mesh1D;
use crate::pchip::{pchip_1d, pchip_2d};

/// Dense sampling used by the continuum error norm in 1D.
pub const DENSE_POINTS_1D: usize = 10_000;
/// Dense sampling per axis used by the continuum error norm in 2D.
pub const DENSE_POINTS_2D: usize = 1_000;
/// Mesh sizes of the approximation tables.
pub const TABLE_SIZES: [usize; 5] = [17, 33, 65, 129, 257];

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Interp(#[from] InterpError),
    #[error("point {point:?} lies outside the domain of {function}")]
    OutOfDomain {
        function: TestFunctionId,
        point: Vec<f64>,
    },
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, HarnessError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TestFunctionId {
    /// Runge-type bump `0.1 / (0.1 + 25 x^2)` on `[-1, 1]`.
    F1,
    /// Steep logistic `1 / (1 + e^{-200 x})` on `[-0.2, 0.2]`.
    F2,
    /// Exponential and sine pieces joined by a jump at `x = -0.5`, on `[-1, 1]`.
    F3,
    /// 2D Runge-type bump on `[-1, 1]^2`.
    F4,
    /// 2D logistic with a steep front along `y = -x`, on `[-0.2, 0.2]^2`.
    F5,
    /// Ramp, plateau and cosine bump, only C0 in places, on `[0, 2] x [0, 1]`.
    F6,
}

impl TestFunctionId {
    pub const ALL: [TestFunctionId; 6] = [
        TestFunctionId::F1,
        TestFunctionId::F2,
        TestFunctionId::F3,
        TestFunctionId::F4,
        TestFunctionId::F5,
        TestFunctionId::F6,
    ];

    pub fn dimension(self) -> usize {
        match self {
            TestFunctionId::F1 | TestFunctionId::F2 | TestFunctionId::F3 => 1,
            _ => 2,
        }
    }

    /// `[lo, hi]` per axis.
    pub fn domain(self) -> &'static [(f64, f64)] {
        match self {
            TestFunctionId::F1 | TestFunctionId::F3 => &[(-1.0, 1.0)],
            TestFunctionId::F2 => &[(-0.2, 0.2)],
            TestFunctionId::F4 => &[(-1.0, 1.0), (-1.0, 1.0)],
            TestFunctionId::F5 => &[(-0.2, 0.2), (-0.2, 0.2)],
            TestFunctionId::F6 => &[(0.0, 2.0), (0.0, 1.0)],
        }
    }

    /// The formula, without a domain check.
    fn raw(self, p: &[f64]) -> f64 {
        match self {
            TestFunctionId::F1 => 0.1 / (0.1 + 25.0 * p[0] * p[0]),
            TestFunctionId::F2 => 1.0 / (1.0 + (-200.0 * p[0]).exp()),
            TestFunctionId::F3 => {
                let x = p[0];
                if x < -0.5 {
                    // rises from 0 at x = -1 to 2 at the jump
                    let e = PI.exp();
                    1.0 + (2.0 * (2.0 * PI * (x + 1.0)).exp() - 1.0 - e) / (e - 1.0)
                } else {
                    1.0 - (2.0 * PI * x / 3.0 + PI / 3.0).sin()
                }
            }
            TestFunctionId::F4 => 0.1 / (0.1 + 25.0 * (p[0] * p[0] + p[1] * p[1])),
            TestFunctionId::F5 => 1.0 / (1.0 + (-(2.0f64.sqrt()) * 100.0 * (p[0] + p[1])).exp()),
            TestFunctionId::F6 => {
                let (x, y) = (p[0], p[1]);
                let r2 = (x - 1.5).powi(2) + (y - 0.5).powi(2);
                if (0.0..=0.5).contains(&(y - x)) {
                    2.0 * (y - x)
                } else if y - x >= 0.5 {
                    1.0
                } else if r2 <= 1.0 / 16.0 {
                    // a bump that meets the zero plane at r = 1/4
                    (2.0 * PI * r2.sqrt()).cos()
                } else {
                    0.0
                }
            }
        }
    }

    /// Uniform mesh with `n` points along `axis` of the domain.
    pub fn mesh(self, axis: usize, n: usize) -> Result<Mesh1D> {
        let (a, b) = self.domain()[axis];
        Ok(Mesh1D::uniform(a, b, n)?)
    }
}

impl fmt::Display for TestFunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = TestFunctionId::ALL
            .iter()
            .position(|id| id == self)
            .unwrap()
            + 1;
        write!(f, "f{k}")
    }
}

impl FromStr for TestFunctionId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        TestFunctionId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown test function '{s}', expected f1..f6"))
    }
}

/// Value of a test function at `point`, which must lie in its domain.
pub fn eval_test_function(id: TestFunctionId, point: &[f64]) -> Result<f64> {
    let domain = id.domain();
    let inside = point.len() == domain.len()
        && point
            .iter()
            .zip(domain)
            .all(|(&p, &(a, b))| p >= a && p <= b);
    if !inside {
        return Err(HarnessError::OutOfDomain {
            function: id,
            point: point.to_vec(),
        });
    }
    Ok(id.raw(point))
}

fn sample_1d(id: TestFunctionId, mesh: &Mesh1D) -> Result<Vec<f64>> {
    mesh.iter().map(|&x| eval_test_function(id, &[x])).collect()
}

fn sample_2d(id: TestFunctionId, xs: &Mesh1D, ys: &Mesh1D) -> Result<GridField2D> {
    // every node is inside the domain by construction of the meshes
    for (x, y) in [(xs.first(), ys.first()), (xs.last(), ys.last())] {
        eval_test_function(id, &[x, y])?;
    }
    Ok(GridField2D::from_fn(xs.clone(), ys.clone(), |x, y| {
        id.raw(&[x, y])
    }))
}

/// Which interpolation method an experiment runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scheme {
    Pchip,
    Adaptive(InterpConfig),
}

impl Scheme {
    fn label(&self) -> String {
        match self {
            Scheme::Pchip => "pchip".into(),
            Scheme::Adaptive(c) => c.method.to_string(),
        }
    }

    fn degree(&self) -> usize {
        match self {
            Scheme::Pchip => 3,
            Scheme::Adaptive(c) => c.degree,
        }
    }

    fn map_1d(&self, x: &Mesh1D, u: &[f64], xout: &[f64]) -> Result<Vec<f64>> {
        Ok(match self {
            Scheme::Pchip => pchip_1d(x, u, xout)?,
            Scheme::Adaptive(c) => adaptive_interpolation_1d(x, u, xout, c)?,
        })
    }

    fn map_2d(&self, field: &GridField2D, xout: &Mesh1D, yout: &Mesh1D) -> Result<GridField2D> {
        Ok(match self {
            Scheme::Pchip => pchip_2d(field, xout, yout)?,
            Scheme::Adaptive(c) => adaptive_interpolation_2d(field, xout, yout, c)?,
        })
    }
}

/// The second mesh of a round trip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReactionMesh {
    /// Endpoints plus the midpoint of every interval.
    Midpoint,
    /// The first mesh itself.
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentKind {
    /// Sample on a uniform mesh and measure the continuum error on a dense grid.
    Approximation,
    /// Map from a uniform mesh (refined `refine` times per interval) to the
    /// reaction mesh and back, and measure the error at the grid points.
    RoundTrip {
        refine: usize,
        reaction: ReactionMesh,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentSpec {
    pub function: TestFunctionId,
    /// Points per axis of the input mesh, before any refinement.
    pub n: usize,
    pub scheme: Scheme,
    pub kind: ExperimentKind,
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    /// Points per axis actually used.
    pub n: usize,
    pub method: String,
    pub degree: usize,
    pub config: Option<InterpConfig>,
    pub l2: f64,
}

pub const CSV_HEADER: &str = "N,method,degree,st,eps0,eps1,l2";

impl ResultRow {
    pub fn to_csv(&self) -> String {
        let params = match &self.config {
            // DBI ignores eps; report the values in effect
            Some(c) if c.method == Method::Dbi => format!("{},0,0", c.policy.code()),
            Some(c) => format!("{},{},{}", c.policy.code(), c.eps0, c.eps1),
            None => ",,".into(),
        };
        format!(
            "{},{},{},{},{:.5e}",
            self.n, self.method, self.degree, params, self.l2
        )
    }
}

/// Header plus one line per row, LF-terminated.
pub fn to_csv(rows: &[ResultRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        writeln!(out, "{}", row.to_csv()).unwrap();
    }
    out
}

fn row(spec: &ExperimentSpec, n: usize, l2: f64) -> ResultRow {
    ResultRow {
        n,
        method: spec.scheme.label(),
        degree: spec.scheme.degree(),
        config: match spec.scheme {
            Scheme::Pchip => None,
            Scheme::Adaptive(c) => Some(c),
        },
        l2,
    }
}

/// Continuum L2 error of the interpolant built from `spec.n` uniform samples.
pub fn run_approximation(spec: &ExperimentSpec) -> Result<ResultRow> {
    let id = spec.function;
    let l2 = if id.dimension() == 1 {
        let x = id.mesh(0, spec.n)?;
        let u = sample_1d(id, &x)?;
        let dense = id.mesh(0, DENSE_POINTS_1D)?;
        let approx = spec.scheme.map_1d(&x, &u, &dense)?;
        let exact = sample_1d(id, &dense)?;
        l2_error_continuum(&approx, &exact, &dense)?
    } else {
        let field = sample_2d(id, &id.mesh(0, spec.n)?, &id.mesh(1, spec.n)?)?;
        let (dx, dy) = (id.mesh(0, DENSE_POINTS_2D)?, id.mesh(1, DENSE_POINTS_2D)?);
        let approx = spec.scheme.map_2d(&field, &dx, &dy)?;
        let exact = sample_2d(id, &dx, &dy)?;
        l2_error_continuum_2d(approx.values(), exact.values(), &dx, &dy)?
    };
    Ok(row(spec, spec.n, l2))
}

/// Endpoints plus all interval midpoints of `mesh`.
pub fn midpoint_mesh(mesh: &Mesh1D) -> Mesh1D {
    let mut out = Vec::with_capacity(mesh.len() + 1);
    out.push(mesh.first());
    out.extend(mesh.windows(2).map(|w| 0.5 * (w[0] + w[1])));
    out.push(mesh.last());
    Mesh1D::new(out).expect("midpoints of a valid mesh are increasing")
}

/// Grid-point RMS error after mapping to the reaction mesh and back.
pub fn run_roundtrip(spec: &ExperimentSpec) -> Result<ResultRow> {
    let ExperimentKind::RoundTrip { refine, reaction } = spec.kind else {
        return Err(HarnessError::Unsupported(
            "not a round-trip experiment".into(),
        ));
    };
    let id = spec.function;
    if id.dimension() != 1 {
        return Err(HarnessError::Unsupported(format!(
            "round trips are defined for 1D functions, {id} is 2D"
        )));
    }
    let advection = refine_mesh(&id.mesh(0, spec.n)?, refine);
    let reaction_mesh = match reaction {
        ReactionMesh::Midpoint => midpoint_mesh(&advection),
        ReactionMesh::Identity => advection.clone(),
    };
    let u = sample_1d(id, &advection)?;
    let there = spec.scheme.map_1d(&advection, &u, &reaction_mesh)?;
    let back = spec.scheme.map_1d(&reaction_mesh, &there, &advection)?;
    Ok(row(spec, advection.len(), l2_error_grid(&back, &u)?))
}

pub fn run_experiment(spec: &ExperimentSpec) -> Result<ResultRow> {
    match spec.kind {
        ExperimentKind::Approximation => run_approximation(spec),
        ExperimentKind::RoundTrip { .. } => run_roundtrip(spec),
    }
}

/// Runs every cell in parallel; rows come back in the order of `specs`.
pub fn run_sweep(specs: &[ExperimentSpec]) -> Result<Vec<ResultRow>> {
    specs.par_iter().map(run_experiment).collect()
}

/// The column layout shared by the tables: PCHIP, then DBI and PPI at each degree.
fn columns(degrees: &[usize]) -> Vec<Scheme> {
    let mut out = vec![Scheme::Pchip];
    out.extend(
        degrees
            .iter()
            .map(|&d| Scheme::Adaptive(InterpConfig::dbi(d))),
    );
    out.extend(
        degrees
            .iter()
            .map(|&d| Scheme::Adaptive(InterpConfig::ppi(d))),
    );
    out
}

/// Cells of table `id`: 1 to 6 are the approximation tables for f1 to f6,
/// 7 is the f1 round-trip study on meshes refined from 64 points.
pub fn table_specs(id: usize) -> Result<Vec<ExperimentSpec>> {
    match id {
        1..=6 => {
            let function = TestFunctionId::ALL[id - 1];
            Ok(TABLE_SIZES
                .iter()
                .flat_map(|&n| {
                    columns(&[3, 4, 8])
                        .into_iter()
                        .map(move |scheme| ExperimentSpec {
                            function,
                            n,
                            scheme,
                            kind: ExperimentKind::Approximation,
                        })
                })
                .collect())
        }
        7 => Ok([0, 1, 3]
            .iter()
            .flat_map(|&refine| {
                columns(&[3, 5, 7])
                    .into_iter()
                    .map(move |scheme| ExperimentSpec {
                        function: TestFunctionId::F1,
                        n: 64,
                        scheme,
                        kind: ExperimentKind::RoundTrip {
                            refine,
                            reaction: ReactionMesh::Midpoint,
                        },
                    })
            })
            .collect()),
        _ => Err(HarnessError::Unsupported(format!(
            "no table {id}, expected 1..7"
        ))),
    }
}

pub fn run_approximation_table(id: usize) -> Result<Vec<ResultRow>> {
    run_sweep(&table_specs(id)?)
}
