//! C ABI for `ppinterp`.
//!
//! Every entry point returns a [`PpStatus`]. On failure a message is kept per thread and can be
//! copied out with [`pp_last_error_message`]. Arrays are passed as pointer plus length, tensor
//! values are stored with x varying fastest, and outputs are written into caller-owned buffers.

use std::cell::RefCell;
use std::ffi::c_char;
use std::panic::{catch_unwind, UnwindSafe};
use std::slice;

use ppinterp::{
    adaptive_interpolation_1d, adaptive_interpolation_2d, adaptive_interpolation_3d, pchip_1d,
    pchip_2d, AdaptiveInterpolant1D, GridField2D, GridField3D, InterpConfig, InterpError, Mesh1D,
    Method, StencilPolicy,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PpStatus {
    Ok = 0,
    NullPointer = 1,
    TooFewPoints = 2,
    NotIncreasing = 3,
    NonFinite = 4,
    LengthMismatch = 5,
    OutOfRange = 6,
    InvalidConfig = 7,
    Panic = 99,
}

/// Interpolation settings.
pub struct PpConfig(InterpConfig);

/// A fitted 1D adaptive interpolant.
pub struct PpInterpolant1D(AdaptiveInterpolant1D);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn status_of(err: &InterpError) -> PpStatus {
    match err {
        InterpError::TooFewPoints(_) => PpStatus::TooFewPoints,
        InterpError::NotIncreasing { .. } => PpStatus::NotIncreasing,
        InterpError::NonFinite { .. } => PpStatus::NonFinite,
        InterpError::LengthMismatch { .. } => PpStatus::LengthMismatch,
        InterpError::OutOfRange { .. } => PpStatus::OutOfRange,
        InterpError::InvalidConfig(_) => PpStatus::InvalidConfig,
        InterpError::Line { source, .. } => status_of(source),
    }
}

enum Failure {
    Null(&'static str),
    Interp(InterpError),
}

impl From<InterpError> for Failure {
    fn from(e: InterpError) -> Self {
        Failure::Interp(e)
    }
}

type FfiResult = Result<(), Failure>;

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn guard(f: impl FnOnce() -> FfiResult + UnwindSafe) -> PpStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => {
            set_error(String::new());
            PpStatus::Ok
        }
        Ok(Err(Failure::Null(name))) => {
            set_error(format!("null pointer: {name}"));
            PpStatus::NullPointer
        }
        Ok(Err(Failure::Interp(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".to_owned());
            PpStatus::Panic
        }
    }
}

/// A zero-length slice may come with a null pointer.
unsafe fn input<'a>(ptr: *const f64, len: usize, name: &'static str) -> Result<&'a [f64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(Failure::Null(name));
    }
    Ok(slice::from_raw_parts(ptr, len))
}

unsafe fn output<'a>(
    ptr: *mut f64,
    len: usize,
    name: &'static str,
) -> Result<&'a mut [f64], Failure> {
    if len == 0 {
        return Ok(&mut []);
    }
    if ptr.is_null() {
        return Err(Failure::Null(name));
    }
    Ok(slice::from_raw_parts_mut(ptr, len))
}

unsafe fn mesh(ptr: *const f64, len: usize, name: &'static str) -> Result<Mesh1D, Failure> {
    Ok(Mesh1D::new(input(ptr, len, name)?.to_vec())?)
}

fn make_config(
    degree: usize,
    method: u8,
    st: u8,
    eps0: f64,
    eps1: f64,
) -> Result<InterpConfig, Failure> {
    let config = InterpConfig::new(degree, Method::from_code(method)?)
        .with_policy(StencilPolicy::from_code(st)?)
        .with_eps(eps0, eps1);
    config.validate()?;
    Ok(config)
}

fn checked_product(dims: &[usize]) -> Result<usize, Failure> {
    dims.iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .ok_or_else(|| InterpError::InvalidConfig("array size overflows".to_owned()).into())
}

/// Copies the last error message of this thread into `buf` as a NUL-terminated string,
/// truncating if needed. Returns the full message length in bytes, excluding the NUL.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn pp_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            std::ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Creates a configuration. `method` is 1 (DBI) or 2 (PPI); `st` is 1, 2 or 3.
///
/// # Safety
/// `out` must be a valid pointer. The handle is released with [`pp_config_free`].
#[no_mangle]
pub unsafe extern "C" fn pp_config_new(
    degree: usize,
    method: u8,
    st: u8,
    eps0: f64,
    eps1: f64,
    out: *mut *mut PpConfig,
) -> PpStatus {
    guard(move || {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        let config = make_config(degree, method, st, eps0, eps1)?;
        *out = Box::into_raw(Box::new(PpConfig(config)));
        Ok(())
    })
}

/// # Safety
/// `config` must be null or a handle from [`pp_config_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pp_config_free(config: *mut PpConfig) {
    if !config.is_null() {
        drop(Box::from_raw(config));
    }
}

/// Fits an adaptive interpolant to `n` values on the mesh `x`.
///
/// # Safety
/// `x` and `u` must point to `n` readable values, `config` must be a live handle, and `out`
/// must be valid. The handle is released with [`pp_interp1d_free`].
#[no_mangle]
pub unsafe extern "C" fn pp_interp1d_new(
    x: *const f64,
    u: *const f64,
    n: usize,
    config: *const PpConfig,
    out: *mut *mut PpInterpolant1D,
) -> PpStatus {
    guard(move || {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        let config = config.as_ref().ok_or(Failure::Null("config"))?;
        let mesh = mesh(x, n, "x")?;
        let fitted = AdaptiveInterpolant1D::new(mesh, input(u, n, "u")?, config.0)?;
        *out = Box::into_raw(Box::new(PpInterpolant1D(fitted)));
        Ok(())
    })
}

/// Evaluates a fitted interpolant at `m` points.
///
/// # Safety
/// `interp` must be a live handle, `xout` must point to `m` readable values and `out` to `m`
/// writable values.
#[no_mangle]
pub unsafe extern "C" fn pp_interp1d_eval(
    interp: *const PpInterpolant1D,
    xout: *const f64,
    m: usize,
    out: *mut f64,
) -> PpStatus {
    guard(move || {
        let interp = interp.as_ref().ok_or(Failure::Null("interp"))?;
        interp
            .0
            .eval_into(input(xout, m, "xout")?, output(out, m, "out")?)?;
        Ok(())
    })
}

/// # Safety
/// `interp` must be null or a handle from [`pp_interp1d_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pp_interp1d_free(interp: *mut PpInterpolant1D) {
    if !interp.is_null() {
        drop(Box::from_raw(interp));
    }
}

/// One-shot 1D adaptive interpolation of `v` on `x` (length `n`) at `xout` (length `m`).
///
/// # Safety
/// Pointers must reference arrays of the stated lengths; `out` holds `m` values.
#[no_mangle]
pub unsafe extern "C" fn pp_adaptive_1d(
    x: *const f64,
    v: *const f64,
    n: usize,
    xout: *const f64,
    m: usize,
    d: usize,
    im: u8,
    st: u8,
    eps0: f64,
    eps1: f64,
    out: *mut f64,
) -> PpStatus {
    guard(move || {
        let config = make_config(d, im, st, eps0, eps1)?;
        let x = mesh(x, n, "x")?;
        let result =
            adaptive_interpolation_1d(&x, input(v, n, "v")?, input(xout, m, "xout")?, &config)?;
        output(out, m, "out")?.copy_from_slice(&result);
        Ok(())
    })
}

/// One-shot 2D adaptive interpolation. `v` holds `nx * ny` values and `out` receives
/// `mx * my` values, x fastest.
///
/// # Safety
/// Pointers must reference arrays of the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn pp_adaptive_2d(
    x: *const f64,
    nx: usize,
    y: *const f64,
    ny: usize,
    v: *const f64,
    xout: *const f64,
    mx: usize,
    yout: *const f64,
    my: usize,
    d: usize,
    im: u8,
    st: u8,
    eps0: f64,
    eps1: f64,
    out: *mut f64,
) -> PpStatus {
    guard(move || {
        let config = make_config(d, im, st, eps0, eps1)?;
        let field = GridField2D::new(
            mesh(x, nx, "x")?,
            mesh(y, ny, "y")?,
            input(v, checked_product(&[nx, ny])?, "v")?.to_vec(),
        )?;
        let result = adaptive_interpolation_2d(
            &field,
            &mesh(xout, mx, "xout")?,
            &mesh(yout, my, "yout")?,
            &config,
        )?;
        output(out, checked_product(&[mx, my])?, "out")?.copy_from_slice(result.values());
        Ok(())
    })
}

/// One-shot 3D adaptive interpolation. `v` holds `nx * ny * nz` values and `out` receives
/// `mx * my * mz` values, x fastest then y.
///
/// # Safety
/// Pointers must reference arrays of the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn pp_adaptive_3d(
    x: *const f64,
    nx: usize,
    y: *const f64,
    ny: usize,
    z: *const f64,
    nz: usize,
    v: *const f64,
    xout: *const f64,
    mx: usize,
    yout: *const f64,
    my: usize,
    zout: *const f64,
    mz: usize,
    d: usize,
    im: u8,
    st: u8,
    eps0: f64,
    eps1: f64,
    out: *mut f64,
) -> PpStatus {
    guard(move || {
        let config = make_config(d, im, st, eps0, eps1)?;
        let field = GridField3D::new(
            mesh(x, nx, "x")?,
            mesh(y, ny, "y")?,
            mesh(z, nz, "z")?,
            input(v, checked_product(&[nx, ny, nz])?, "v")?.to_vec(),
        )?;
        let result = adaptive_interpolation_3d(
            &field,
            &mesh(xout, mx, "xout")?,
            &mesh(yout, my, "yout")?,
            &mesh(zout, mz, "zout")?,
            &config,
        )?;
        output(out, checked_product(&[mx, my, mz])?, "out")?.copy_from_slice(result.values());
        Ok(())
    })
}

/// PCHIP interpolation of `v` on `x` (length `n`) at `xout` (length `m`).
///
/// # Safety
/// Pointers must reference arrays of the stated lengths; `out` holds `m` values.
#[no_mangle]
pub unsafe extern "C" fn pp_pchip_1d(
    x: *const f64,
    v: *const f64,
    n: usize,
    xout: *const f64,
    m: usize,
    out: *mut f64,
) -> PpStatus {
    guard(move || {
        let result = pchip_1d(
            &mesh(x, n, "x")?,
            input(v, n, "v")?,
            input(xout, m, "xout")?,
        )?;
        output(out, m, "out")?.copy_from_slice(&result);
        Ok(())
    })
}

/// Tensor-product PCHIP, same layout as [`pp_adaptive_2d`].
///
/// # Safety
/// Pointers must reference arrays of the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn pp_pchip_2d(
    x: *const f64,
    nx: usize,
    y: *const f64,
    ny: usize,
    v: *const f64,
    xout: *const f64,
    mx: usize,
    yout: *const f64,
    my: usize,
    out: *mut f64,
) -> PpStatus {
    guard(move || {
        let field = GridField2D::new(
            mesh(x, nx, "x")?,
            mesh(y, ny, "y")?,
            input(v, checked_product(&[nx, ny])?, "v")?.to_vec(),
        )?;
        let result = pchip_2d(&field, &mesh(xout, mx, "xout")?, &mesh(yout, my, "yout")?)?;
        output(out, checked_product(&[mx, my])?, "out")?.copy_from_slice(result.values());
        Ok(())
    })
}
