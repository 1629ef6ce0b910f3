//! C ABI over `psisum`.
//!
//! Every fallible function returns a [`PsisumStatus`] and writes its result
//! through an out pointer. After a failure, [`psisum_last_error`] describes it
//! on the calling thread. Panics never cross the boundary; they surface as
//! [`PsisumStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use psisum::hyper::{hypergeometric, HyperParams};
use psisum::identities::{catalog, check, lookup, ParamPoint, Status};
use psisum::specfun;
use psisum::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsisumStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Pole = 3,
    Domain = 4,
    NonConvergence = 5,
    UnknownId = 6,
    InvalidParams = 7,
    Unsupported = 8,
    Panic = 9,
}

/// Outcome of a catalog check, mirroring the report statuses.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsisumCheckStatus {
    Ok = 0,
    LhsNonconverged = 1,
    PoleSkipped = 2,
    DomainExcluded = 3,
}

/// One checked point. Values that were not computed are NaN.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct PsisumCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub status: PsisumCheckStatus,
    pub pass: bool,
}

/// Opaque catalog handle.
pub struct PsisumCatalog {
    ids: Vec<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(PsisumStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Pole(_) => PsisumStatus::Pole,
            Error::Domain(_) => PsisumStatus::Domain,
            Error::NonConvergence { .. } => PsisumStatus::NonConvergence,
            Error::UnknownId(_) => PsisumStatus::UnknownId,
            Error::Params(_) => PsisumStatus::InvalidParams,
            Error::Unsupported(_) => PsisumStatus::Unsupported,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(message: String) {
    // interior NULs cannot appear in a C string
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PsisumStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PsisumStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("panic inside psisum".into());
            PsisumStatus::Panic
        }
    }
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(PsisumStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(Failure(PsisumStatus::NullPointer, format!("null {what}")));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| Failure(PsisumStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_slice<'a>(ptr: *const f64, len: usize, what: &str) -> Result<&'a [f64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(Failure(PsisumStatus::NullPointer, format!("null {what}")));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

/// Message for the most recent failure on this thread, or NULL if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn psisum_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(std::ptr::null(), |m| m.as_ptr()))
}

/// ψ(x).
///
/// # Safety
/// `out` must be NULL or valid for a write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn psisum_digamma(x: f64, out: *mut f64) -> PsisumStatus {
    guard(|| write(out, specfun::digamma(x)?))
}

/// ψ′(x).
///
/// # Safety
/// `out` must be NULL or valid for a write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn psisum_trigamma(x: f64, out: *mut f64) -> PsisumStatus {
    guard(|| write(out, specfun::trigamma(x)?))
}

/// Γ(x).
///
/// # Safety
/// `out` must be NULL or valid for a write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn psisum_gamma(x: f64, out: *mut f64) -> PsisumStatus {
    guard(|| write(out, specfun::gamma(x)?))
}

/// Rising factorial (x)_n.
///
/// # Safety
/// `out` must be NULL or valid for a write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn psisum_pochhammer(x: f64, n: u64, out: *mut f64) -> PsisumStatus {
    guard(|| write(out, specfun::pochhammer(x, n)))
}

/// Beta function B(x, y).
///
/// # Safety
/// `out` must be NULL or valid for a write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn psisum_beta(x: f64, y: f64, out: *mut f64) -> PsisumStatus {
    guard(|| write(out, specfun::beta_fn(x, y)?))
}

/// β(z) = ½[ψ((z+1)/2) − ψ(z/2)].
///
/// # Safety
/// `out` must be NULL or valid for a write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn psisum_prudnikov_beta(z: f64, out: *mut f64) -> PsisumStatus {
    guard(|| write(out, specfun::prudnikov_beta(z)?))
}

/// pFq(a_1..a_p; b_1..b_q; z). Terminating series are summed exactly,
/// others truncated; failure to converge is reported.
///
/// # Safety
/// `numerator` must point to `p` doubles and `denominator` to `q` doubles
/// (either may be NULL when its length is 0). `out` must be NULL or valid
/// for a write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn psisum_pfq(
    numerator: *const f64,
    p: usize,
    denominator: *const f64,
    q: usize,
    z: f64,
    out: *mut f64,
) -> PsisumStatus {
    guard(|| {
        let a = read_slice(numerator, p, "numerator")?.to_vec();
        let b = read_slice(denominator, q, "denominator")?.to_vec();
        write(out, hypergeometric(&HyperParams::new(a, b, z))?)
    })
}

/// New catalog handle; release it with [`psisum_catalog_free`].
/// Returns NULL only if construction panicked.
#[no_mangle]
pub extern "C" fn psisum_catalog_new() -> *mut PsisumCatalog {
    let built = catch_unwind(|| {
        let ids = catalog().iter().map(|e| CString::new(e.id).expect("ids have no NUL")).collect();
        PsisumCatalog { ids }
    });
    match built {
        Ok(c) => Box::into_raw(Box::new(c)),
        Err(_) => {
            set_last_error("panic while building the catalog".into());
            std::ptr::null_mut()
        }
    }
}

/// # Safety
/// `handle` must be NULL or a pointer from [`psisum_catalog_new`] that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn psisum_catalog_free(handle: *mut PsisumCatalog) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of entries; 0 for a NULL handle.
///
/// # Safety
/// `handle` must be NULL or a live catalog handle.
#[no_mangle]
pub unsafe extern "C" fn psisum_catalog_len(handle: *const PsisumCatalog) -> usize {
    handle.as_ref().map_or(0, |c| c.ids.len())
}

/// Id of entry `index` in sorted order, or NULL when out of range. The
/// string lives as long as the handle.
///
/// # Safety
/// `handle` must be NULL or a live catalog handle.
#[no_mangle]
pub unsafe extern "C" fn psisum_catalog_id(handle: *const PsisumCatalog, index: usize) -> *const c_char {
    handle.as_ref().and_then(|c| c.ids.get(index)).map_or(std::ptr::null(), |s| s.as_ptr())
}

/// Checks one point of entry `id`. `params` uses the `a=1.5,c=2` syntax.
/// A non-positive or NaN `tol` selects the entry's own tolerance.
///
/// # Safety
/// `handle` must be a live catalog handle, `id` and `params` NUL-terminated
/// strings, and `out` valid for a write of one [`PsisumCheck`].
#[no_mangle]
pub unsafe extern "C" fn psisum_catalog_check(
    handle: *const PsisumCatalog,
    id: *const c_char,
    params: *const c_char,
    tol: f64,
    out: *mut PsisumCheck,
) -> PsisumStatus {
    guard(|| {
        if handle.is_null() {
            return Err(Failure(PsisumStatus::NullPointer, "null catalog handle".into()));
        }
        let id = read_str(id, "id")?;
        let point = ParamPoint::parse(read_str(params, "params")?)?;
        let entry = lookup(id)?;
        let tol = if tol > 0.0 { tol } else { entry.tolerance() };
        let r = check(id, &point, tol)?;
        let status = match r.status {
            Status::Ok => PsisumCheckStatus::Ok,
            Status::LhsNonconverged => PsisumCheckStatus::LhsNonconverged,
            Status::PoleSkipped => PsisumCheckStatus::PoleSkipped,
            Status::DomainExcluded => PsisumCheckStatus::DomainExcluded,
        };
        write(
            out,
            PsisumCheck {
                lhs: r.lhs.unwrap_or(f64::NAN),
                rhs: r.rhs.unwrap_or(f64::NAN),
                abs_diff: r.abs_diff.unwrap_or(f64::NAN),
                rel_diff: r.rel_diff.unwrap_or(f64::NAN),
                status,
                pass: r.pass,
            },
        )
    })
}
