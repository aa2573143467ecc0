//! C ABI for the sun-euler library.
//!
//! Conventions: matrices are written into caller-provided `re`/`im` buffers
//! of `n*n` doubles, row-major. Range and parameter arrays hold
//! `sun_euler_param_count(n)` entries. Every function returns a
//! [`SunEulerStatus`]; outputs are only valid on `SUN_EULER_STATUS_OK`.
//! The sampler is an opaque handle created by `sun_euler_sampler_new` and
//! released by `sun_euler_sampler_free`.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use sun_euler::density_matrix::{density, theta_ranges, DensitySpec};
use sun_euler::error::Error;
use sun_euler::euler_param::{unitary, ParamVector};
use sun_euler::group_volume::{marinov_volume, monte_carlo_volume, quadrature_volume};
use sun_euler::haar_measure::kernel;
use sun_euler::haar_sampler::{Sampler, SamplerConfig, ThetaMode};
use sun_euler::lie_algebra::make_generators;
use sun_euler::matrix::ComplexMatrix;
use sun_euler::param_ranges::{ranges, RangeMode};

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SunEulerStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidDimension = 2,
    InvalidArgument = 3,
    DomainError = 4,
    InternalError = 5,
}

/// Which parameter box to use for the flat directions.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SunEulerRangeMode {
    Quotient = 0,
    Covering = 1,
}

/// How θ is chosen when sampling density matrices.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SunEulerThetaMode {
    Endpoints = 0,
    Uniform = 1,
}

impl From<SunEulerRangeMode> for RangeMode {
    fn from(mode: SunEulerRangeMode) -> Self {
        match mode {
            SunEulerRangeMode::Quotient => RangeMode::Quotient,
            SunEulerRangeMode::Covering => RangeMode::Covering,
        }
    }
}

fn status_of(err: &Error) -> SunEulerStatus {
    match err {
        Error::InvalidDimension(_) => SunEulerStatus::InvalidDimension,
        Error::ThetaOutOfRange { .. } => SunEulerStatus::DomainError,
        Error::Inconsistent(_) => SunEulerStatus::InternalError,
        _ => SunEulerStatus::InvalidArgument,
    }
}

fn guarded(f: impl FnOnce() -> SunEulerStatus) -> SunEulerStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(SunEulerStatus::InternalError)
}

/// Static, nul-terminated description of a status code.
#[no_mangle]
pub extern "C" fn sun_euler_status_name(status: SunEulerStatus) -> *const c_char {
    let name: &'static [u8] = match status {
        SunEulerStatus::Ok => b"ok\0",
        SunEulerStatus::NullPointer => b"null pointer\0",
        SunEulerStatus::InvalidDimension => b"invalid dimension\0",
        SunEulerStatus::InvalidArgument => b"invalid argument\0",
        SunEulerStatus::DomainError => b"domain error\0",
        SunEulerStatus::InternalError => b"internal error\0",
    };
    name.as_ptr().cast()
}

/// Number of Euler parameters for SU(n): n²−1, or 0 if n < 2.
#[no_mangle]
pub extern "C" fn sun_euler_param_count(n: u32) -> usize {
    if n < 2 {
        0
    } else {
        (n as usize) * (n as usize) - 1
    }
}

unsafe fn write_matrix(m: &ComplexMatrix, re: *mut f64, im: *mut f64) {
    let n = m.dim();
    for r in 0..n {
        for c in 0..n {
            let z = m.get(r, c);
            *re.add(r * n + c) = z.re;
            *im.add(r * n + c) = z.im;
        }
    }
}

unsafe fn read_params(
    n: u32,
    alpha: *const f64,
    alpha_len: usize,
) -> Result<ParamVector, SunEulerStatus> {
    let slice = std::slice::from_raw_parts(alpha, alpha_len);
    ParamVector::new(n as usize, slice.to_vec()).map_err(|e| status_of(&e))
}

/// Write generator λ_index (1-based) of su(n) into `re`/`im` (n*n doubles).
///
/// # Safety
/// `re` and `im` must point to writable arrays of at least n*n doubles.
#[no_mangle]
pub unsafe extern "C" fn sun_euler_generator(
    n: u32,
    index: u32,
    re: *mut f64,
    im: *mut f64,
) -> SunEulerStatus {
    if re.is_null() || im.is_null() {
        return SunEulerStatus::NullPointer;
    }
    guarded(|| match make_generators(n as usize) {
        Ok(gs) => {
            if index == 0 || index as usize > gs.count() {
                return SunEulerStatus::InvalidArgument;
            }
            unsafe { write_matrix(gs.lambda(index as usize), re, im) };
            SunEulerStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Evaluate U(α) into `re`/`im` (n*n doubles). `alpha` holds `alpha_len`
/// doubles and must have exactly n²−1 entries.
///
/// # Safety
/// `alpha` must point to `alpha_len` readable doubles; `re`/`im` to n*n
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn sun_euler_unitary(
    n: u32,
    alpha: *const f64,
    alpha_len: usize,
    re: *mut f64,
    im: *mut f64,
) -> SunEulerStatus {
    if alpha.is_null() || re.is_null() || im.is_null() {
        return SunEulerStatus::NullPointer;
    }
    guarded(|| {
        let p = match unsafe { read_params(n, alpha, alpha_len) } {
            Ok(p) => p,
            Err(status) => return status,
        };
        match unitary(n as usize, &p) {
            Ok(u) => {
                unsafe { write_matrix(&u, re, im) };
                SunEulerStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Evaluate the invariant-measure kernel K_SU(n)(α) into `out`.
///
/// # Safety
/// `alpha` must point to `alpha_len` readable doubles; `out` to one
/// writable double.
#[no_mangle]
pub unsafe extern "C" fn sun_euler_kernel(
    n: u32,
    alpha: *const f64,
    alpha_len: usize,
    out: *mut f64,
) -> SunEulerStatus {
    if alpha.is_null() || out.is_null() {
        return SunEulerStatus::NullPointer;
    }
    guarded(|| {
        let p = match unsafe { read_params(n, alpha, alpha_len) } {
            Ok(p) => p,
            Err(status) => return status,
        };
        match kernel(n as usize, &p) {
            Ok(v) => {
                unsafe { *out = v };
                SunEulerStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Closed-formula group volume of SU(n).
///
/// # Safety
/// `out` must point to one writable double.
#[no_mangle]
pub unsafe extern "C" fn sun_euler_volume_marinov(n: u32, out: *mut f64) -> SunEulerStatus {
    if out.is_null() {
        return SunEulerStatus::NullPointer;
    }
    guarded(|| match marinov_volume(n as usize) {
        Ok(v) => {
            unsafe { *out = v };
            SunEulerStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Group volume assembled from per-factor integrals; equals the closed
/// formula to machine precision.
///
/// # Safety
/// `out` must point to one writable double.
#[no_mangle]
pub unsafe extern "C" fn sun_euler_volume_quadrature(n: u32, out: *mut f64) -> SunEulerStatus {
    if out.is_null() {
        return SunEulerStatus::NullPointer;
    }
    guarded(|| match quadrature_volume(n as usize) {
        Ok(v) => {
            unsafe { *out = v };
            SunEulerStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Monte Carlo volume estimate; deterministic for fixed (seed, workers).
/// Needs at least 10000 samples and one worker.
///
/// # Safety
/// `value` and `stderr_out` must point to writable doubles.
#[no_mangle]
pub unsafe extern "C" fn sun_euler_volume_monte_carlo(
    n: u32,
    samples: u64,
    seed: u64,
    workers: u32,
    value: *mut f64,
    stderr_out: *mut f64,
) -> SunEulerStatus {
    if value.is_null() || stderr_out.is_null() {
        return SunEulerStatus::NullPointer;
    }
    guarded(
        || match monte_carlo_volume(n as usize, samples, seed, workers as usize) {
            Ok(r) => {
                unsafe {
                    *value = r.value;
                    *stderr_out = r.stderr;
                }
                SunEulerStatus::Ok
            }
            Err(e) => status_of(&e),
        },
    )
}

/// Fill `lo`/`hi` (n²−1 doubles each) with the parameter box of the chosen
/// mode, indexed by parameter − 1.
///
/// # Safety
/// `lo` and `hi` must point to writable arrays of n²−1 doubles.
#[no_mangle]
pub unsafe extern "C" fn sun_euler_ranges(
    n: u32,
    mode: SunEulerRangeMode,
    lo: *mut f64,
    hi: *mut f64,
) -> SunEulerStatus {
    if lo.is_null() || hi.is_null() {
        return SunEulerStatus::NullPointer;
    }
    guarded(|| match ranges(n as usize, mode.into()) {
        Ok(set) => {
            for (i, &(l, h)) in set.bounds().iter().enumerate() {
                unsafe {
                    *lo.add(i) = l;
                    *hi.add(i) = h;
                }
            }
            SunEulerStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Fill `lo`/`hi` (n−1 doubles each) with the sphere-angle bounds of the
/// density-matrix parametrization.
///
/// # Safety
/// `lo` and `hi` must point to writable arrays of n−1 doubles.
#[no_mangle]
pub unsafe extern "C" fn sun_euler_theta_ranges(
    n: u32,
    lo: *mut f64,
    hi: *mut f64,
) -> SunEulerStatus {
    if lo.is_null() || hi.is_null() {
        return SunEulerStatus::NullPointer;
    }
    guarded(|| match theta_ranges(n as usize) {
        Ok(bounds) => {
            for (i, &(l, h)) in bounds.iter().enumerate() {
                unsafe {
                    *lo.add(i) = l;
                    *hi.add(i) = h;
                }
            }
            SunEulerStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Build ρ = U ρ_d U† from θ (n−1 entries) and α (n²−1 entries) into
/// `re`/`im` (n*n doubles).
///
/// # Safety
/// `theta` and `alpha` must point to the stated number of readable
/// doubles; `re`/`im` to n*n writable doubles.
#[no_mangle]
pub unsafe extern "C" fn sun_euler_density(
    n: u32,
    theta: *const f64,
    theta_len: usize,
    alpha: *const f64,
    alpha_len: usize,
    re: *mut f64,
    im: *mut f64,
) -> SunEulerStatus {
    if theta.is_null() || alpha.is_null() || re.is_null() || im.is_null() {
        return SunEulerStatus::NullPointer;
    }
    guarded(|| {
        let p = match unsafe { read_params(n, alpha, alpha_len) } {
            Ok(p) => p,
            Err(status) => return status,
        };
        let theta = unsafe { std::slice::from_raw_parts(theta, theta_len) }.to_vec();
        let spec = match DensitySpec::new(n as usize, theta, p) {
            Ok(spec) => spec,
            Err(e) => return status_of(&e),
        };
        match density(&spec) {
            Ok(rho) => {
                unsafe { write_matrix(&rho, re, im) };
                SunEulerStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Opaque sampler handle.
pub struct SunEulerSampler {
    inner: Sampler,
}

/// Create a sampler for SU(n) with the given seed and range mode. Returns
/// null on invalid arguments. Free with `sun_euler_sampler_free`.
#[no_mangle]
pub extern "C" fn sun_euler_sampler_new(
    n: u32,
    seed: u64,
    mode: SunEulerRangeMode,
) -> *mut SunEulerSampler {
    let config = SamplerConfig {
        n: n as usize,
        seed,
        mode: mode.into(),
    };
    match Sampler::new(config) {
        Ok(inner) => Box::into_raw(Box::new(SunEulerSampler { inner })),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Draw the next parameter vector (n²−1 doubles) from the sampler.
///
/// # Safety
/// `sampler` must come from `sun_euler_sampler_new` and not be freed;
/// `out` must point to n²−1 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn sun_euler_sampler_next_angles(
    sampler: *mut SunEulerSampler,
    out: *mut f64,
) -> SunEulerStatus {
    if sampler.is_null() || out.is_null() {
        return SunEulerStatus::NullPointer;
    }
    guarded(|| {
        let sampler = unsafe { &mut *sampler };
        let p = sampler.inner.sample_angles();
        for (i, &a) in p.as_slice().iter().enumerate() {
            unsafe { *out.add(i) = a };
        }
        SunEulerStatus::Ok
    })
}

/// Draw the next Haar-distributed U ∈ SU(n) into `re`/`im` (n*n doubles).
///
/// # Safety
/// `sampler` must come from `sun_euler_sampler_new` and not be freed;
/// `re`/`im` must point to n*n writable doubles.
#[no_mangle]
pub unsafe extern "C" fn sun_euler_sampler_next_unitary(
    sampler: *mut SunEulerSampler,
    re: *mut f64,
    im: *mut f64,
) -> SunEulerStatus {
    if sampler.is_null() || re.is_null() || im.is_null() {
        return SunEulerStatus::NullPointer;
    }
    guarded(|| {
        let sampler = unsafe { &mut *sampler };
        let u = sampler.inner.sample_unitary();
        unsafe { write_matrix(&u, re, im) };
        SunEulerStatus::Ok
    })
}

/// Draw the next random density matrix into `re`/`im` (n*n doubles).
///
/// # Safety
/// `sampler` must come from `sun_euler_sampler_new` and not be freed;
/// `re`/`im` must point to n*n writable doubles.
#[no_mangle]
pub unsafe extern "C" fn sun_euler_sampler_next_density(
    sampler: *mut SunEulerSampler,
    theta_mode: SunEulerThetaMode,
    re: *mut f64,
    im: *mut f64,
) -> SunEulerStatus {
    if sampler.is_null() || re.is_null() || im.is_null() {
        return SunEulerStatus::NullPointer;
    }
    guarded(|| {
        let sampler = unsafe { &mut *sampler };
        let mode = match theta_mode {
            SunEulerThetaMode::Endpoints => ThetaMode::Endpoints,
            SunEulerThetaMode::Uniform => ThetaMode::Uniform,
        };
        match sampler.inner.sample_density(mode) {
            Ok(rho) => {
                unsafe { write_matrix(&rho, re, im) };
                SunEulerStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Release a sampler. Passing null is a no-op.
///
/// # Safety
/// `sampler` must be null or a pointer from `sun_euler_sampler_new` that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn sun_euler_sampler_free(sampler: *mut SunEulerSampler) {
    if !sampler.is_null() {
        drop(unsafe { Box::from_raw(sampler) });
    }
}
