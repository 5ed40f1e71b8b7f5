//! C ABI over the admpoisson toolkit.
//!
//! Structures travel as opaque `AdmFile` handles holding a parsed text file.
//! Every fallible call returns an `AdmStatus`; on failure the message is kept
//! per thread and can be copied out with `adm_last_error`. Strings returned
//! by the library are freed with `adm_string_free`, handles with
//! `adm_file_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use admpoisson::cli::{build_file, check_file, report_line, CheckOptions, Construction, Predicate};
use admpoisson::format::{parse_file, print_file, AlgebraFile};
use admpoisson::search::{search, SearchSpec, Target};
use admpoisson::Error;
use clap::ValueEnum;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdmStatus {
    Ok = 0,
    /// The predicate was evaluated and does not hold.
    Fails = 1,
    NullPointer = 2,
    InvalidUtf8 = 3,
    ParseError = 4,
    UnknownName = 5,
    InvalidInput = 6,
    Panic = 7,
}

/// A parsed structure file.
pub struct AdmFile {
    inner: AlgebraFile,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: AdmStatus, msg: impl Into<String>) -> AdmStatus {
    set_error(msg);
    status
}

fn lib_error(e: Error) -> AdmStatus {
    let status = match e {
        Error::Parse { .. } => AdmStatus::ParseError,
        _ => AdmStatus::InvalidInput,
    };
    fail(status, e.to_string())
}

fn guarded(body: impl FnOnce() -> AdmStatus) -> AdmStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(s) => s,
        Err(_) => fail(AdmStatus::Panic, "internal panic"),
    }
}

/// # Safety
/// `s` is null or a NUL-terminated string valid for the call.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, AdmStatus> {
    if s.is_null() {
        return Err(fail(AdmStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(AdmStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn named<T: ValueEnum>(name: &str, kind: &str) -> Result<T, AdmStatus> {
    T::from_str(name, false)
        .map_err(|_| fail(AdmStatus::UnknownName, format!("unknown {kind} '{name}'")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn boxed(file: AlgebraFile) -> *mut AdmFile {
    Box::into_raw(Box::new(AdmFile { inner: file }))
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `len`). Returns the full message length without the NUL,
/// or 0 when there is no error.
///
/// # Safety
/// `buf` is null or points to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn adm_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(msg) = e.as_ref() else { return 0 };
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Parses the text format into a new handle.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn adm_file_parse(text: *const c_char, out: *mut *mut AdmFile) -> AdmStatus {
    guarded(|| {
        if out.is_null() {
            return fail(AdmStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let text = try_status!(read_str(text, "text"));
        match parse_file(text) {
            Ok(f) => {
                *out = boxed(f);
                AdmStatus::Ok
            }
            Err(e) => lib_error(e),
        }
    })
}

/// # Safety
/// `file` is null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn adm_file_free(file: *mut AdmFile) {
    if !file.is_null() {
        drop(Box::from_raw(file));
    }
}

/// The declared dimension, or 0 for a null handle.
///
/// # Safety
/// `file` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn adm_file_dim(file: *const AdmFile) -> usize {
    file.as_ref().map_or(0, |f| f.inner.dim)
}

/// Canonical text of the file, or null for a null handle. Free with
/// `adm_string_free`.
///
/// # Safety
/// `file` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn adm_file_print(file: *const AdmFile) -> *mut c_char {
    match file.as_ref() {
        Some(f) => into_c_string(print_file(&f.inner)),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `s` is null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn adm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Evaluates a predicate (CLI name, e.g. "adm-poisson"). Returns `Ok` when
/// it holds and `Fails` when it does not. When `report` is non-null it
/// receives the OK/FAIL line, to be freed with `adm_string_free`.
///
/// # Safety
/// `file` is a live handle, `predicate` a NUL-terminated string, `report`
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn adm_check(
    file: *const AdmFile,
    predicate: *const c_char,
    report: *mut *mut c_char,
) -> AdmStatus {
    guarded(|| {
        if !report.is_null() {
            *report = ptr::null_mut();
        }
        let Some(f) = file.as_ref() else {
            return fail(AdmStatus::NullPointer, "file is null");
        };
        let name = try_status!(read_str(predicate, "predicate"));
        let pred: Predicate = try_status!(named(name, "predicate"));
        let r = match check_file(pred, &f.inner, CheckOptions::default()) {
            Ok(r) => r,
            Err(e) => return lib_error(e),
        };
        if !report.is_null() {
            *report = into_c_string(report_line(name, f.inner.dim, &r));
        }
        if r.holds {
            AdmStatus::Ok
        } else {
            AdmStatus::Fails
        }
    })
}

/// Runs a construction (CLI name, e.g. "polarize") into a new handle.
///
/// # Safety
/// `file` is a live handle, `construction` a NUL-terminated string, `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn adm_build(
    file: *const AdmFile,
    construction: *const c_char,
    out: *mut *mut AdmFile,
) -> AdmStatus {
    guarded(|| {
        if out.is_null() {
            return fail(AdmStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let Some(f) = file.as_ref() else {
            return fail(AdmStatus::NullPointer, "file is null");
        };
        let name = try_status!(read_str(construction, "construction"));
        let cons: Construction = try_status!(named(name, "construction"));
        match build_file(cons, &f.inner) {
            Ok(b) => {
                *out = boxed(b);
                AdmStatus::Ok
            }
            Err(e) => lib_error(e),
        }
    })
}

/// Searches over GF(`prime`) and writes the rendered instances to `out`
/// (free with `adm_string_free`). `base` may be null for targets that need
/// no base algebra; `max_count` 0 means unlimited; `samples` 0 means
/// exhaustive only.
///
/// # Safety
/// `target` is a NUL-terminated string, `base` null or a live handle, `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn adm_search(
    target: *const c_char,
    dim: usize,
    prime: u64,
    base: *const AdmFile,
    max_count: usize,
    samples: u64,
    seed: u64,
    out: *mut *mut c_char,
) -> AdmStatus {
    guarded(|| {
        if out.is_null() {
            return fail(AdmStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let name = try_status!(read_str(target, "target"));
        let target: Target = try_status!(named(name, "target"));
        let mut spec = SearchSpec::new(target, dim, prime);
        spec.base = base.as_ref().map(|b| b.inner.clone());
        spec.count = (max_count > 0).then_some(max_count);
        spec.samples = (samples > 0).then_some(samples);
        spec.seed = seed;
        match search(&spec) {
            Ok(found) => {
                *out = into_c_string(found.render());
                AdmStatus::Ok
            }
            Err(e) => lib_error(e),
        }
    })
}
