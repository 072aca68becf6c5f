//! C ABI over `landau_bohm`.
//!
//! Every function returns an [`LbStatus`]; results go through out-pointers.
//! On failure the message is kept per thread and read back with
//! [`lb_last_error_message`]. Handles are opaque and must be released with
//! their `_free` function.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use landau_bohm::flux::{pi_theta_closed, FluxContext};
use landau_bohm::regular::{
    axial_regularised, azimuthal_whittaker, radial_regularised, theta_local_branch, LocalBranchParams,
};
use landau_bohm::spectrum::{degeneracy_splitting, SpectrumModel};
use landau_bohm::verify::{run_suite, Suite, VerifyOptions, VerifyReport};
use landau_bohm::{Error, PhysParams, QuantumNumbers};
use num_complex::Complex64;

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// Input lies on a singular point or outside the domain of a closed form.
    Domain = 3,
    /// A series, quadrature or integrator did not converge.
    Numerical = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LbModel {
    Qm = 0,
    El = 1,
    Cbr = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LbSuite {
    Ep = 0,
    Flux = 1,
    Regular = 2,
    Spectrum = 3,
    All = 4,
}

/// Physical constants (hbar, mass, charge, field).
pub struct LbParams(PhysParams);

/// Outcome of a verification run.
pub struct LbVerifyReport {
    report: VerifyReport,
    json: String,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(err: &Error) -> LbStatus {
    match err {
        Error::SeriesBudgetExceeded { .. }
        | Error::IntegrationStalled { .. }
        | Error::QuadratureBudgetExceeded { .. }
        | Error::ConnectionDegenerate { .. } => LbStatus::Numerical,
        Error::InvalidGrid(_) | Error::InvalidParameter(_) | Error::InadmissibleCoefficients(_) => {
            LbStatus::InvalidArgument
        }
        _ => LbStatus::Domain,
    }
}

fn guard(f: impl FnOnce() -> Result<(), LbStatus>) -> LbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LbStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside landau-bohm");
            LbStatus::Panic
        }
    }
}

fn lift<T>(r: landau_bohm::Result<T>) -> Result<T, LbStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, LbStatus> {
    p.as_mut().ok_or_else(|| {
        set_error("null output pointer");
        LbStatus::NullPointer
    })
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, LbStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle");
        LbStatus::NullPointer
    })
}

fn n_r_of(n_r: c_int) -> Result<u32, LbStatus> {
    u32::try_from(n_r).map_err(|_| {
        set_error(format!("radial quantum number must be non-negative (got {n_r})"));
        LbStatus::InvalidArgument
    })
}

/// Copies `text` into `buf` as a NUL-terminated string. `needed` receives the
/// size including the terminator; a null `buf` only queries the size.
unsafe fn copy_text(text: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> Result<(), LbStatus> {
    let size = text.len() + 1;
    if let Some(n) = needed.as_mut() {
        *n = size;
    }
    if buf.is_null() {
        return Ok(());
    }
    if len < size {
        set_error(format!("buffer of {len} bytes, {size} needed"));
        return Err(LbStatus::BufferTooSmall);
    }
    std::ptr::copy_nonoverlapping(text.as_ptr(), buf as *mut u8, text.len());
    *buf.add(text.len()) = 0;
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message of the last failed call on this thread (empty after a success).
#[no_mangle]
pub unsafe extern "C" fn lb_last_error_message(buf: *mut c_char, len: usize, needed: *mut usize) -> LbStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    match copy_text(&msg, buf, len, needed) {
        Ok(()) => LbStatus::Ok,
        Err(s) => s,
    }
}

#[no_mangle]
pub unsafe extern "C" fn lb_params_new(
    hbar: f64,
    mass: f64,
    charge: f64,
    field: f64,
    params: *mut *mut LbParams,
) -> LbStatus {
    guard(|| {
        let slot = out(params)?;
        let p = lift(PhysParams::new(hbar, mass, charge, field))?;
        *slot = Box::into_raw(Box::new(LbParams(p)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn lb_params_free(params: *mut LbParams) {
    if !params.is_null() {
        drop(Box::from_raw(params));
    }
}

/// Energy of the state (n_r, l, k_z) under `model`.
#[no_mangle]
pub unsafe extern "C" fn lb_energy(
    params: *const LbParams,
    model: LbModel,
    n_r: c_int,
    l: c_int,
    k_z: f64,
    energy: *mut f64,
) -> LbStatus {
    guard(|| {
        let p = handle(params)?;
        let slot = out(energy)?;
        let m = match model {
            LbModel::Qm => SpectrumModel::Qm,
            LbModel::El => SpectrumModel::El,
            LbModel::Cbr => SpectrumModel::Cbr,
        };
        *slot = m.energy(&QuantumNumbers::new(n_r_of(n_r)?, l, k_z), &p.0);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn lb_degeneracy_splitting(params: *const LbParams, l: c_int, splitting: *mut f64) -> LbStatus {
    guard(|| {
        let p = handle(params)?;
        *out(splitting)? = degeneracy_splitting(l, &p.0);
        Ok(())
    })
}

/// Langer-regularised radial amplitude at `r`.
#[no_mangle]
pub unsafe extern "C" fn lb_radial_regularised(
    params: *const LbParams,
    n_r: c_int,
    l: c_int,
    r: f64,
    value: *mut f64,
) -> LbStatus {
    guard(|| {
        let p = handle(params)?;
        let slot = out(value)?;
        let rad = lift(radial_regularised(&QuantumNumbers::new(n_r_of(n_r)?, l, 0.0), &p.0))?;
        *slot = lift(rad.value(r))?;
        Ok(())
    })
}

/// `sqrt(z) J_{1/sqrt 2}(k_z z)`.
#[no_mangle]
pub unsafe extern "C" fn lb_axial_regularised(k_z: f64, z: f64, value: *mut f64) -> LbStatus {
    guard(|| {
        let slot = out(value)?;
        *slot = lift(lift(axial_regularised(k_z))?.value(z))?;
        Ok(())
    })
}

/// Complex Whittaker azimuthal amplitude `c1 M + c2 W` at `theta`.
#[no_mangle]
pub unsafe extern "C" fn lb_azimuthal_whittaker(
    theta: f64,
    l: c_int,
    phi: f64,
    c1_re: f64,
    c1_im: f64,
    c2_re: f64,
    c2_im: f64,
    value_re: *mut f64,
    value_im: *mut f64,
) -> LbStatus {
    guard(|| {
        let re = out(value_re)?;
        let im = out(value_im)?;
        let v = lift(azimuthal_whittaker(theta, l, phi, Complex64::new(c1_re, c1_im), Complex64::new(c2_re, c2_im)))?;
        *re = v.re;
        *im = v.im;
        Ok(())
    })
}

/// Real local azimuthal branch with amplitude constant `a_theta`.
#[no_mangle]
pub unsafe extern "C" fn lb_theta_local_branch(
    theta: f64,
    a_theta: f64,
    phi: f64,
    kappa: f64,
    value: *mut f64,
) -> LbStatus {
    guard(|| {
        let slot = out(value)?;
        let p = lift(LocalBranchParams::new(a_theta, phi, kappa))?;
        *slot = lift(theta_local_branch(theta, &p))?;
        Ok(())
    })
}

/// Closed-form azimuthal momentum for separation constant `lambda`.
#[no_mangle]
pub unsafe extern "C" fn lb_pi_theta(
    lambda: f64,
    phi: f64,
    r: f64,
    hbar: f64,
    e_pi: f64,
    theta0: f64,
    theta: f64,
    value: *mut f64,
) -> LbStatus {
    guard(|| {
        let slot = out(value)?;
        let ctx = lift(FluxContext::with_lambda(lambda, phi, r, hbar, e_pi, theta0))?;
        *slot = lift(pi_theta_closed(theta, &ctx))?;
        Ok(())
    })
}

/// Runs a verification suite. `tol <= 0` keeps the built-in tolerances.
#[no_mangle]
pub unsafe extern "C" fn lb_verify_run(suite: LbSuite, tol: f64, report: *mut *mut LbVerifyReport) -> LbStatus {
    guard(|| {
        let slot = out(report)?;
        if tol.is_nan() {
            set_error("tolerance is NaN");
            return Err(LbStatus::InvalidArgument);
        }
        let s = match suite {
            LbSuite::Ep => Suite::Ep,
            LbSuite::Flux => Suite::Flux,
            LbSuite::Regular => Suite::Regular,
            LbSuite::Spectrum => Suite::Spectrum,
            LbSuite::All => Suite::All,
        };
        let opts = VerifyOptions { tol: (tol > 0.0).then_some(tol), inject_fault: false };
        let r = run_suite(s, &opts);
        let json = r.to_json();
        *slot = Box::into_raw(Box::new(LbVerifyReport { report: r, json }));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn lb_verify_passed(report: *const LbVerifyReport, passed: *mut bool) -> LbStatus {
    guard(|| {
        let r = handle(report)?;
        *out(passed)? = r.report.pass;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn lb_verify_check_count(report: *const LbVerifyReport, count: *mut usize) -> LbStatus {
    guard(|| {
        let r = handle(report)?;
        *out(count)? = r.report.checks.len();
        Ok(())
    })
}

/// Worst residual and pass flag of the check called `name`.
#[no_mangle]
pub unsafe extern "C" fn lb_verify_check(
    report: *const LbVerifyReport,
    name: *const c_char,
    max_residual: *mut f64,
    passed: *mut bool,
) -> LbStatus {
    guard(|| {
        let r = handle(report)?;
        let name = handle(name)?;
        let name = CStr::from_ptr(name).to_str().map_err(|_| {
            set_error("check name is not UTF-8");
            LbStatus::InvalidArgument
        })?;
        let c = r.report.check(name).ok_or_else(|| {
            set_error(format!("no check named '{name}'"));
            LbStatus::InvalidArgument
        })?;
        *out(max_residual)? = c.max_residual;
        *out(passed)? = c.pass;
        Ok(())
    })
}

/// The report as JSON, with the same buffer protocol as [`lb_last_error_message`].
#[no_mangle]
pub unsafe extern "C" fn lb_verify_json(
    report: *const LbVerifyReport,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> LbStatus {
    guard(|| {
        let r = handle(report)?;
        copy_text(&r.json, buf, len, needed)
    })
}

#[no_mangle]
pub unsafe extern "C" fn lb_verify_free(report: *mut LbVerifyReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
