//! C ABI for `sqp-core`.
//!
//! Ideals cross the boundary as opaque `SqpIdeal` handles created by
//! `sqp_ideal_parse` (or derived from another handle) and released with
//! `sqp_ideal_free`. Every fallible function returns an `SqpStatus` and
//! writes its result through an out-pointer; on failure the message is
//! available from `sqp_last_error_message` on the same thread. Strings
//! returned through `char **` out-pointers are owned by the caller and must
//! be released with `sqp_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sqp_core::decomposition::primary_decomposition;
use sqp_core::format::{parse_ideal, NamedIdeal};
use sqp_core::resolution::betti_table;
use sqp_core::{Error, FieldSpec, MonomialIdeal, ResourceCaps};

/// Status codes; the nonzero values match the exit codes of the `sqp` CLI
/// where they overlap.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqpStatus {
    Ok = 0,
    InputError = 2,
    ResourceError = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

/// Opaque handle to a monomial ideal together with its variable names.
pub struct SqpIdeal {
    inner: NamedIdeal,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(e: &Error) -> SqpStatus {
    match e.exit_code() {
        2 => SqpStatus::InputError,
        _ => SqpStatus::ResourceError,
    }
}

/// Run `body`, converting errors and panics into status codes.
fn guard<F>(body: F) -> SqpStatus
where
    F: FnOnce() -> Result<(), (SqpStatus, String)>,
{
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SqpStatus::Ok,
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            SqpStatus::Panic
        }
    }
}

fn core<T>(r: sqp_core::Result<T>) -> Result<T, (SqpStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (SqpStatus, String) {
    (SqpStatus::NullPointer, format!("{what} is null"))
}

unsafe fn ideal_ref<'a>(p: *const SqpIdeal, what: &str) -> Result<&'a SqpIdeal, (SqpStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (SqpStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_ideal(out: *mut *mut SqpIdeal, inner: NamedIdeal) -> Result<(), (SqpStatus, String)> {
    write_out(out, Box::into_raw(Box::new(SqpIdeal { inner })))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (SqpStatus, String)> {
    let c = CString::new(s).map_err(|_| (SqpStatus::Panic, "string contains nul".to_string()))?;
    write_out(out, c.into_raw())
}

fn field(characteristic: u64) -> Result<FieldSpec, (SqpStatus, String)> {
    core(FieldSpec::new(characteristic))
}

fn caps() -> Result<ResourceCaps, (SqpStatus, String)> {
    core(ResourceCaps::from_env())
}

/// Parse an ideal in the text (`vars:`/`gens:`) or JSON format.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sqp_ideal_parse(text: *const c_char, out: *mut *mut SqpIdeal) -> SqpStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (SqpStatus::InvalidUtf8, "text is not valid UTF-8".to_string()))?;
        let parsed = core(parse_ideal(text))?;
        write_ideal(out, parsed)
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `ideal` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sqp_ideal_free(ideal: *mut SqpIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Number of variables of the ambient ring; 0 for a null handle.
///
/// # Safety
/// `ideal` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sqp_ideal_num_vars(ideal: *const SqpIdeal) -> usize {
    ideal.as_ref().map_or(0, |i| i.inner.ideal.n())
}

/// Number of minimal generators; 0 for a null handle.
///
/// # Safety
/// `ideal` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sqp_ideal_num_gens(ideal: *const SqpIdeal) -> usize {
    ideal.as_ref().map_or(0, |i| i.inner.ideal.num_gens())
}

unsafe fn derive<F>(ideal: *const SqpIdeal, out: *mut *mut SqpIdeal, f: F) -> SqpStatus
where
    F: FnOnce(&MonomialIdeal) -> sqp_core::Result<MonomialIdeal>,
{
    guard(|| {
        let i = ideal_ref(ideal, "ideal")?;
        let result = core(f(&i.inner.ideal))?;
        write_ideal(out, i.inner.with(result))
    })
}

/// The square power `I^[m]`, replacing each generator `x^a` by `x^(m·a)`.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sqp_ideal_square_power(
    ideal: *const SqpIdeal,
    m: u64,
    out: *mut *mut SqpIdeal,
) -> SqpStatus {
    derive(ideal, out, |i| i.square_power(m))
}

/// The ordinary power `I^s`.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sqp_ideal_power(ideal: *const SqpIdeal, s: u32, out: *mut *mut SqpIdeal) -> SqpStatus {
    derive(ideal, out, |i| i.power(s))
}

/// The intersection of two ideals in the same ring. The result keeps the
/// variable names of `a`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sqp_ideal_intersect(
    a: *const SqpIdeal,
    b: *const SqpIdeal,
    out: *mut *mut SqpIdeal,
) -> SqpStatus {
    guard(|| {
        let b = ideal_ref(b, "second ideal")?;
        let a = ideal_ref(a, "first ideal")?;
        let result = core(a.inner.ideal.intersect(&b.inner.ideal))?;
        write_ideal(out, a.inner.with(result))
    })
}

/// Whether two handles hold the same ideal (variable names are ignored).
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sqp_ideal_equal(a: *const SqpIdeal, b: *const SqpIdeal, out: *mut bool) -> SqpStatus {
    guard(|| {
        let a = ideal_ref(a, "first ideal")?;
        let b = ideal_ref(b, "second ideal")?;
        write_out(out, a.inner.ideal == b.inner.ideal)
    })
}

/// Canonical text form, `vars: ...` / `gens: ...`.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sqp_ideal_to_text(ideal: *const SqpIdeal, out: *mut *mut c_char) -> SqpStatus {
    guard(|| write_string(out, ideal_ref(ideal, "ideal")?.inner.to_text()))
}

/// JSON form `{"n": .., "gens": [[..], ..]}`.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sqp_ideal_to_json(ideal: *const SqpIdeal, out: *mut *mut c_char) -> SqpStatus {
    guard(|| write_string(out, ideal_ref(ideal, "ideal")?.inner.to_json()))
}

/// Graded Betti numbers of `R/I` over the field of the given characteristic
/// (0 or a prime), as JSON `{"char": p, "entries": [[i, j, beta], ..]}`.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sqp_betti_json(
    ideal: *const SqpIdeal,
    characteristic: u64,
    out: *mut *mut c_char,
) -> SqpStatus {
    guard(|| {
        let i = ideal_ref(ideal, "ideal")?;
        let table = core(betti_table(&i.inner.ideal, field(characteristic)?, &caps()?))?;
        write_string(out, table.to_json())
    })
}

/// The Betti diagram of `R/I` as aligned text.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sqp_betti_diagram(
    ideal: *const SqpIdeal,
    characteristic: u64,
    out: *mut *mut c_char,
) -> SqpStatus {
    guard(|| {
        let i = ideal_ref(ideal, "ideal")?;
        let table = core(betti_table(&i.inner.ideal, field(characteristic)?, &caps()?))?;
        write_string(out, table.render())
    })
}

/// Regularity, projective dimension and depth of `R/I`.
///
/// # Safety
/// `ideal` must be a live handle; the three out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sqp_invariants(
    ideal: *const SqpIdeal,
    characteristic: u64,
    reg: *mut i64,
    pd: *mut usize,
    depth: *mut usize,
) -> SqpStatus {
    guard(|| {
        let i = ideal_ref(ideal, "ideal")?;
        if reg.is_null() || pd.is_null() || depth.is_null() {
            return Err(null("output pointer"));
        }
        let table = core(betti_table(&i.inner.ideal, field(characteristic)?, &caps()?))?;
        write_out(reg, table.reg())?;
        write_out(pd, table.pd())?;
        write_out(depth, table.depth())
    })
}

/// Primary decomposition as JSON `[{"radical": [..], "gens": [[..], ..]}, ..]`
/// with 0-based variable indices.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sqp_primary_decomposition_json(
    ideal: *const SqpIdeal,
    out: *mut *mut c_char,
) -> SqpStatus {
    guard(|| {
        let i = ideal_ref(ideal, "ideal")?;
        let d = core(primary_decomposition(&i.inner.ideal))?;
        write_string(out, d.to_json().to_string())
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sqp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn sqp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn sqp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
