//! C ABI over the ternary-group library.
//!
//! Conventions:
//! * Cubes are opaque handles created by the `tgc_cube_*` constructors and
//!   released with [`tgc_cube_free`].
//! * Every fallible call returns a [`TgcStatus`]; results travel through out
//!   parameters, which are written only on `Ok`.
//! * On any non-`Ok` status a human-readable message is stored per thread and
//!   can be read with [`tgc_last_error_message`].
//! * Strings returned through `*mut c_char` out parameters are owned by the
//!   caller and must be released with [`tgc_string_free`].
//!
//! All entry points catch panics and convert them to
//! [`TgcStatus::InternalError`]; unwinding never crosses the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use tgc::enumeration::is_isomorphic;
use tgc::error::Error;
use tgc::examples::builtin_example;
use tgc::format::{parse_cube, serialize_cube};
use tgc::props::{self, PropertyReport};
use tgc::CayleyCube;

/// Status of a call across the C boundary.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TgcStatus {
    /// The call succeeded and all out parameters are valid.
    Ok = 0,
    /// The input was well formed but the queried property is false or the
    /// requested object does not exist (e.g. no isomorphism).
    PropertyFalse = 1,
    /// Malformed input: parse errors, size mismatches, out-of-range indices,
    /// unknown example names.
    InvalidInput = 2,
    /// A required pointer argument was null.
    NullPointer = 3,
    /// An internal invariant failed; this is a bug, not a user error.
    InternalError = 4,
}

/// Opaque handle to a validated Cayley cube.
pub struct TgcCube {
    inner: CayleyCube,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized: Vec<u8> = msg.bytes().filter(|&b| b != 0).collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("nul bytes removed");
    });
}

fn fail(status: TgcStatus, msg: &str) -> TgcStatus {
    set_error(msg);
    status
}

fn fail_from(e: &Error) -> TgcStatus {
    let status = match e {
        Error::SizeMismatch { .. }
        | Error::ClosureViolation { .. }
        | Error::OrderTooLarge { .. }
        | Error::ElementOutOfRange { .. }
        | Error::UnknownExample { .. }
        | Error::Parse { .. } => TgcStatus::InvalidInput,
        Error::NotATernaryGroup(_)
        | Error::NotAGroup { .. }
        | Error::RepresentationViolation { .. }
        | Error::NonCommutingPair { .. }
        | Error::NotLabelable { .. }
        | Error::ToleranceFailure { .. } => TgcStatus::PropertyFalse,
        Error::InternalVerificationFailure(_) => TgcStatus::InternalError,
    };
    fail(status, &e.to_string())
}

/// Runs a body under panic protection, turning panics into `InternalError`.
fn guarded(body: impl FnOnce() -> TgcStatus) -> TgcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(TgcStatus::InternalError, "internal panic"),
    }
}

/// # Safety
/// `ptr` must be null or a valid pointer to a value of type `T`.
unsafe fn deref<'a, T>(ptr: *const T) -> Result<&'a T, TgcStatus> {
    unsafe { ptr.as_ref() }.ok_or_else(|| fail(TgcStatus::NullPointer, "null handle"))
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, TgcStatus> {
    if ptr.is_null() {
        return Err(fail(TgcStatus::NullPointer, "null string"));
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| fail(TgcStatus::InvalidInput, "string is not valid UTF-8"))
}

fn give_cube(cube: CayleyCube, out: *mut *mut TgcCube) -> TgcStatus {
    if out.is_null() {
        return fail(TgcStatus::NullPointer, "null out parameter");
    }
    let handle = Box::into_raw(Box::new(TgcCube { inner: cube }));
    unsafe { out.write(handle) };
    TgcStatus::Ok
}

fn give_string(text: String, out: *mut *mut c_char) -> TgcStatus {
    if out.is_null() {
        return fail(TgcStatus::NullPointer, "null out parameter");
    }
    match CString::new(text) {
        Ok(s) => {
            unsafe { out.write(s.into_raw()) };
            TgcStatus::Ok
        }
        Err(_) => fail(TgcStatus::InternalError, "text contains a nul byte"),
    }
}

/// Library version as a static nul-terminated string; do not free.
#[no_mangle]
pub extern "C" fn tgc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message describing the most recent failure on the calling thread.
/// The pointer stays valid until the next failing call on the same thread;
/// do not free.
#[no_mangle]
pub extern "C" fn tgc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Builds a cube from `order³` entries in row-major order (`x` outermost,
/// `z` innermost). Entries must lie in `0..order`.
///
/// # Safety
/// `entries` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tgc_cube_new(
    order: usize,
    entries: *const usize,
    len: usize,
    out: *mut *mut TgcCube,
) -> TgcStatus {
    guarded(|| {
        if entries.is_null() {
            return fail(TgcStatus::NullPointer, "null entries");
        }
        if len != order * order * order {
            return fail(
                TgcStatus::InvalidInput,
                &format!("expected {} entries for order {order}, got {len}", order.pow(3)),
            );
        }
        let table = unsafe { std::slice::from_raw_parts(entries, len) }.to_vec();
        match CayleyCube::from_raw(order, table) {
            Ok(cube) => give_cube(cube, out),
            Err(e) => fail_from(&e),
        }
    })
}

/// Parses the `tgc v1` text format.
///
/// # Safety
/// `text` must be a valid nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tgc_cube_parse(
    text: *const c_char,
    out: *mut *mut TgcCube,
) -> TgcStatus {
    guarded(|| {
        let text = match unsafe { read_str(text) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        match parse_cube(text) {
            Ok(cube) => give_cube(cube, out),
            Err(e) => fail_from(&e),
        }
    })
}

/// Builds one of the built-in example cubes by name.
///
/// # Safety
/// `name` must be a valid nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tgc_cube_example(
    name: *const c_char,
    out: *mut *mut TgcCube,
) -> TgcStatus {
    guarded(|| {
        let name = match unsafe { read_str(name) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        match builtin_example(name) {
            Ok(cube) => give_cube(cube, out),
            Err(e) => fail_from(&e),
        }
    })
}

/// Releases a cube handle. Null is accepted and ignored.
///
/// # Safety
/// `cube` must be null or a handle returned by a constructor, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tgc_cube_free(cube: *mut TgcCube) {
    if !cube.is_null() {
        drop(unsafe { Box::from_raw(cube) });
    }
}

/// Order of the cube's carrier; 0 for a null handle.
///
/// # Safety
/// `cube` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tgc_cube_order(cube: *const TgcCube) -> usize {
    match unsafe { cube.as_ref() } {
        Some(c) => c.inner.order(),
        None => 0,
    }
}

/// Looks up one product `[x y z]`.
///
/// # Safety
/// `cube` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tgc_cube_get(
    cube: *const TgcCube,
    x: usize,
    y: usize,
    z: usize,
    out: *mut usize,
) -> TgcStatus {
    guarded(|| {
        let cube = match unsafe { deref(cube) } {
            Ok(c) => &c.inner,
            Err(status) => return status,
        };
        if out.is_null() {
            return fail(TgcStatus::NullPointer, "null out parameter");
        }
        let n = cube.order();
        if x >= n || y >= n || z >= n {
            return fail(
                TgcStatus::InvalidInput,
                &format!("index ({x},{y},{z}) out of range for order {n}"),
            );
        }
        unsafe { out.write(cube.get(x, y, z)) };
        TgcStatus::Ok
    })
}

/// Writes `true` when the cube is a ternary group.
///
/// # Safety
/// `cube` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tgc_cube_is_ternary_group(
    cube: *const TgcCube,
    out: *mut bool,
) -> TgcStatus {
    guarded(|| {
        let cube = match unsafe { deref(cube) } {
            Ok(c) => &c.inner,
            Err(status) => return status,
        };
        if out.is_null() {
            return fail(TgcStatus::NullPointer, "null out parameter");
        }
        unsafe { out.write(props::is_ternary_group(cube)) };
        TgcStatus::Ok
    })
}

/// Fills `out` (length `len`, which must equal the order) with the skew map.
/// Returns `PropertyFalse` when the cube is not a ternary group.
///
/// # Safety
/// `cube` must be a live handle; `out` must point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn tgc_cube_skew_map(
    cube: *const TgcCube,
    out: *mut usize,
    len: usize,
) -> TgcStatus {
    guarded(|| {
        let cube = match unsafe { deref(cube) } {
            Ok(c) => &c.inner,
            Err(status) => return status,
        };
        if out.is_null() {
            return fail(TgcStatus::NullPointer, "null out parameter");
        }
        if len != cube.order() {
            return fail(
                TgcStatus::InvalidInput,
                &format!("skew buffer of {len} for order {}", cube.order()),
            );
        }
        match props::skew_map(cube) {
            Ok(skew) => {
                let images = skew.as_slice();
                unsafe { std::ptr::copy_nonoverlapping(images.as_ptr(), out, images.len()) };
                TgcStatus::Ok
            }
            Err(e) => fail(TgcStatus::PropertyFalse, &Error::from(e).to_string()),
        }
    })
}

/// Serializes the cube in the `tgc v1` text format. Free with
/// [`tgc_string_free`].
///
/// # Safety
/// `cube` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tgc_cube_serialize(
    cube: *const TgcCube,
    out: *mut *mut c_char,
) -> TgcStatus {
    guarded(|| {
        let cube = match unsafe { deref(cube) } {
            Ok(c) => &c.inner,
            Err(status) => return status,
        };
        give_string(serialize_cube(cube), out)
    })
}

/// Full structural report (flags, identity sets, skew map, witnesses) as a
/// JSON document. `force_medial` runs the mediality sweep regardless of the
/// order bound. Free with [`tgc_string_free`].
///
/// # Safety
/// `cube` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tgc_cube_report_json(
    cube: *const TgcCube,
    force_medial: bool,
    out: *mut *mut c_char,
) -> TgcStatus {
    guarded(|| {
        let cube = match unsafe { deref(cube) } {
            Ok(c) => &c.inner,
            Err(status) => return status,
        };
        let run_mediality = force_medial || cube.order() <= props::MEDIALITY_DEFAULT_BOUND;
        let report = PropertyReport::build(cube, run_mediality);
        match serde_json::to_string_pretty(&report) {
            Ok(body) => give_string(body, out),
            Err(e) => fail(TgcStatus::InternalError, &e.to_string()),
        }
    })
}

/// Searches for an isomorphism from `a` to `b` and fills `out_map` (length
/// `len`, which must equal the common order) with the relabeling. Returns
/// `PropertyFalse` when the cubes are proven non-isomorphic.
///
/// # Safety
/// `a` and `b` must be live handles; `out_map` must hold `len` writable
/// values.
#[no_mangle]
pub unsafe extern "C" fn tgc_cube_isomorphism(
    a: *const TgcCube,
    b: *const TgcCube,
    out_map: *mut usize,
    len: usize,
) -> TgcStatus {
    guarded(|| {
        let a = match unsafe { deref(a) } {
            Ok(c) => &c.inner,
            Err(status) => return status,
        };
        let b = match unsafe { deref(b) } {
            Ok(c) => &c.inner,
            Err(status) => return status,
        };
        if out_map.is_null() {
            return fail(TgcStatus::NullPointer, "null out parameter");
        }
        if len != a.order() {
            return fail(
                TgcStatus::InvalidInput,
                &format!("map buffer of {len} for order {}", a.order()),
            );
        }
        match is_isomorphic(a, b) {
            Ok(Some(map)) => {
                unsafe { std::ptr::copy_nonoverlapping(map.as_ptr(), out_map, map.len()) };
                TgcStatus::Ok
            }
            Ok(None) => fail(TgcStatus::PropertyFalse, "the cubes are not isomorphic"),
            Err(e) => fail_from(&e),
        }
    })
}

/// Releases a string returned by this library. Null is accepted and ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tgc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
