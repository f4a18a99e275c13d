//! C interface to `bergman-dirichlet`.
//!
//! Spaces are opaque heap handles created by `bd_*_space_new` and released
//! with `bd_*_space_free`. Every fallible function returns a [`BdStatus`] and
//! writes its result through an out-pointer; on failure a description is
//! available from [`bd_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bergman_dirichlet::special::{hypergeometric_sum, HypergeometricSpec};
use bergman_dirichlet::{
    CoefficientSeries, DiskSpaceParams, Error, FunctionSpace, KernelOptions, PlaneSpaceParams,
};
use num_complex::Complex64;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParameter = 2,
    Domain = 3,
    Divergent = 4,
    NotConverged = 5,
    Overflow = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BdComplex {
    pub re: f64,
    pub im: f64,
}

impl From<BdComplex> for Complex64 {
    fn from(z: BdComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

impl From<Complex64> for BdComplex {
    fn from(z: Complex64) -> Self {
        BdComplex { re: z.re, im: z.im }
    }
}

/// Weighted Bergman-Dirichlet space on a disk.
pub struct BdDiskSpace(DiskSpaceParams);

/// Bargmann-Dirichlet space on the plane.
pub struct BdPlaneSpace(PlaneSpaceParams);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> BdStatus {
    match e {
        Error::InvalidParameter(_) => BdStatus::InvalidParameter,
        Error::Domain(_) => BdStatus::Domain,
        Error::Divergent { .. } => BdStatus::Divergent,
        Error::NotConverged { .. } => BdStatus::NotConverged,
        Error::Overflow { .. } => BdStatus::Overflow,
    }
}

struct Failure(BdStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(BdStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, turning errors and panics into a status code.
fn guard<F: FnOnce() -> Result<(), Failure>>(body: F) -> BdStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BdStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            BdStatus::Panic
        }
    }
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn series(coeffs: *const BdComplex, len: usize) -> Result<CoefficientSeries, Failure> {
    if len == 0 {
        return Ok(CoefficientSeries::new(Vec::new()));
    }
    if coeffs.is_null() {
        return Err(null("coefficient array"));
    }
    let slice = std::slice::from_raw_parts(coeffs, len);
    Ok(CoefficientSeries::new(
        slice.iter().map(|&c| c.into()).collect(),
    ))
}

unsafe fn reals<'a>(values: *const f64, len: usize) -> Result<&'a [f64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if values.is_null() {
        return Err(null("parameter array"));
    }
    Ok(std::slice::from_raw_parts(values, len))
}

fn options(force_series: bool) -> KernelOptions {
    KernelOptions {
        force_series,
        ..KernelOptions::default()
    }
}

/// Message for the most recent failure on this thread, or null if none.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn bd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Creates the disk space `(R, alpha, m)`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn bd_disk_space_new(
    radius: f64,
    alpha: f64,
    order: usize,
    out: *mut *mut BdDiskSpace,
) -> BdStatus {
    guard(|| {
        let params = DiskSpaceParams::new(radius, alpha, order)?;
        write(out, Box::into_raw(Box::new(BdDiskSpace(params))))
    })
}

/// Releases a handle from [`bd_disk_space_new`]. Null is ignored.
///
/// # Safety
/// `space` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bd_disk_space_free(space: *mut BdDiskSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Creates the plane space `(nu, m)`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn bd_plane_space_new(
    nu: f64,
    order: usize,
    out: *mut *mut BdPlaneSpace,
) -> BdStatus {
    guard(|| {
        let params = PlaneSpaceParams::new(nu, order)?;
        write(out, Box::into_raw(Box::new(BdPlaneSpace(params))))
    })
}

/// Releases a handle from [`bd_plane_space_new`]. Null is ignored.
///
/// # Safety
/// `space` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bd_plane_space_free(space: *mut BdPlaneSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

unsafe fn handle<'a, T>(space: *const T) -> Result<&'a T, Failure> {
    space.as_ref().ok_or_else(|| null("space handle"))
}

trait Handle {
    type Space: FunctionSpace;
    fn space(&self) -> &Self::Space;
}

impl Handle for BdDiskSpace {
    type Space = DiskSpaceParams;
    fn space(&self) -> &DiskSpaceParams {
        &self.0
    }
}

impl Handle for BdPlaneSpace {
    type Space = PlaneSpaceParams;
    fn space(&self) -> &PlaneSpaceParams {
        &self.0
    }
}

unsafe fn kernel<H: Handle>(
    h: *const H,
    z: BdComplex,
    w: BdComplex,
    force: bool,
    out: *mut BdComplex,
) -> BdStatus {
    guard(|| {
        let k = handle(h)?
            .space()
            .kernel(z.into(), w.into(), &options(force))?;
        write(out, k.into())
    })
}

unsafe fn monomial_norm_sq<H: Handle>(h: *const H, n: usize, out: *mut f64) -> BdStatus {
    guard(|| {
        let v = handle(h)?.space().monomial_norm_sq(n)?;
        write(out, v)
    })
}

unsafe fn norm_sq<H: Handle>(
    h: *const H,
    coeffs: *const BdComplex,
    len: usize,
    out: *mut f64,
) -> BdStatus {
    guard(|| {
        let s = handle(h)?.space();
        let v = s.norm_sq(&series(coeffs, len)?)?;
        write(out, v)
    })
}

unsafe fn inner_product<H: Handle>(
    h: *const H,
    f: *const BdComplex,
    f_len: usize,
    g: *const BdComplex,
    g_len: usize,
    out: *mut BdComplex,
) -> BdStatus {
    guard(|| {
        let s = handle(h)?.space();
        let v = s.inner_product(&series(f, f_len)?, &series(g, g_len)?)?;
        write(out, v.into())
    })
}

unsafe fn evaluation_bound<H: Handle>(h: *const H, z: BdComplex, out: *mut f64) -> BdStatus {
    guard(|| {
        let v = handle(h)?.space().evaluation_bound(z.into())?;
        write(out, v)
    })
}

/// Reproducing kernel `K(z, w)` of the disk space.
///
/// # Safety
/// `space` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_disk_kernel(
    space: *const BdDiskSpace,
    z: BdComplex,
    w: BdComplex,
    force_series: bool,
    out: *mut BdComplex,
) -> BdStatus {
    kernel(space, z, w, force_series, out)
}

/// Squared norm of `z^n` in the disk space.
///
/// # Safety
/// `space` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_disk_monomial_norm_sq(
    space: *const BdDiskSpace,
    n: usize,
    out: *mut f64,
) -> BdStatus {
    monomial_norm_sq(space, n, out)
}

/// Squared norm of the polynomial with `len` Taylor coefficients.
///
/// # Safety
/// `coeffs` must point to `len` values (may be null if `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn bd_disk_norm_sq(
    space: *const BdDiskSpace,
    coeffs: *const BdComplex,
    len: usize,
    out: *mut f64,
) -> BdStatus {
    norm_sq(space, coeffs, len, out)
}

/// Inner product `<f, g>` in the disk space.
///
/// # Safety
/// `f` and `g` must point to `f_len` and `g_len` values.
#[no_mangle]
pub unsafe extern "C" fn bd_disk_inner_product(
    space: *const BdDiskSpace,
    f: *const BdComplex,
    f_len: usize,
    g: *const BdComplex,
    g_len: usize,
    out: *mut BdComplex,
) -> BdStatus {
    inner_product(space, f, f_len, g, g_len, out)
}

/// `sqrt(K(z, z))` in the disk space.
///
/// # Safety
/// `space` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_disk_evaluation_bound(
    space: *const BdDiskSpace,
    z: BdComplex,
    out: *mut f64,
) -> BdStatus {
    evaluation_bound(space, z, out)
}

/// Reproducing kernel `K(z, w)` of the plane space.
///
/// # Safety
/// `space` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_plane_kernel(
    space: *const BdPlaneSpace,
    z: BdComplex,
    w: BdComplex,
    force_series: bool,
    out: *mut BdComplex,
) -> BdStatus {
    kernel(space, z, w, force_series, out)
}

/// Squared norm of `z^n` in the plane space.
///
/// # Safety
/// `space` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_plane_monomial_norm_sq(
    space: *const BdPlaneSpace,
    n: usize,
    out: *mut f64,
) -> BdStatus {
    monomial_norm_sq(space, n, out)
}

/// Squared norm of the polynomial with `len` Taylor coefficients.
///
/// # Safety
/// `coeffs` must point to `len` values (may be null if `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn bd_plane_norm_sq(
    space: *const BdPlaneSpace,
    coeffs: *const BdComplex,
    len: usize,
    out: *mut f64,
) -> BdStatus {
    norm_sq(space, coeffs, len, out)
}

/// Inner product `<f, g>` in the plane space.
///
/// # Safety
/// `f` and `g` must point to `f_len` and `g_len` values.
#[no_mangle]
pub unsafe extern "C" fn bd_plane_inner_product(
    space: *const BdPlaneSpace,
    f: *const BdComplex,
    f_len: usize,
    g: *const BdComplex,
    g_len: usize,
    out: *mut BdComplex,
) -> BdStatus {
    inner_product(space, f, f_len, g, g_len, out)
}

/// `sqrt(K(z, z))` in the plane space.
///
/// # Safety
/// `space` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_plane_evaluation_bound(
    space: *const BdPlaneSpace,
    z: BdComplex,
    out: *mut f64,
) -> BdStatus {
    evaluation_bound(space, z, out)
}

/// `min(1, R^{2m}/(m! (alpha+2)_m), alpha/R²)` for the disk handle.
///
/// # Safety
/// `space` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_disk_embedding_constant(
    space: *const BdDiskSpace,
    out: *mut f64,
) -> BdStatus {
    guard(|| write(out, handle(space)?.0.embedding_constant()))
}

/// Sums `pFq(num; den; x)` to relative `tolerance` with at most `max_terms` terms.
///
/// # Safety
/// `num` and `den` must point to `p` and `q` values; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_hypergeometric(
    num: *const f64,
    p: usize,
    den: *const f64,
    q: usize,
    x: BdComplex,
    tolerance: f64,
    max_terms: usize,
    out: *mut BdComplex,
) -> BdStatus {
    guard(|| {
        let spec =
            HypergeometricSpec::new(reals(num, p)?.to_vec(), reals(den, q)?.to_vec(), x.into())?;
        let r = hypergeometric_sum(&spec, tolerance, max_terms)?;
        write(out, r.value.into())
    })
}
