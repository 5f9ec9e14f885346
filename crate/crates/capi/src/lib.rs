//! C ABI for the eqgb engine.
//!
//! The surface mirrors the CLI: problems and targets travel as JSON
//! strings, results come back as JSON documents, and every call returns an
//! [`EqgbStatus`] aligned with the CLI exit codes. Problems are held behind
//! opaque handles; strings returned through out-parameters are freed with
//! [`eqgb_string_free`]. On any non-OK status, [`eqgb_last_error`] returns
//! a message valid until the next failing call on the same thread.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use libc::c_char;

use eqgb::cli::{
    cmd_expand, cmd_gb, cmd_member, cmd_reduce, cmd_verify, cmd_wpo, CommandOutput, PolyDecl,
    ProblemFile, WpoFile,
};

/// Status codes: `Ok`, `BudgetExhausted` and `False` match the CLI exit
/// codes 0, 2 and 3; everything else reports through `InvalidInput`,
/// `NullPointer` or `Panic`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqgbStatus {
    Ok = 0,
    InvalidInput = 1,
    BudgetExhausted = 2,
    False = 3,
    NullPointer = 4,
    Panic = 5,
}

/// Opaque handle to a parsed problem file.
pub struct EqgbProblem {
    file: ProblemFile,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

/// Message of the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn eqgb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn eqgb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, EqgbStatus> {
    if ptr.is_null() {
        set_error("null pointer argument");
        return Err(EqgbStatus::NullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }.to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        EqgbStatus::InvalidInput
    })
}

fn write_string(out: *mut *mut c_char, s: &str) -> EqgbStatus {
    if out.is_null() {
        set_error("null output pointer");
        return EqgbStatus::NullPointer;
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            EqgbStatus::Ok
        }
        Err(_) => {
            set_error("document contains an interior NUL byte");
            EqgbStatus::InvalidInput
        }
    }
}

fn guard<F: FnOnce() -> EqgbStatus>(f: F) -> EqgbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            EqgbStatus::Panic
        }
    }
}

fn deliver(out_json: *mut *mut c_char, result: eqgb::Result<CommandOutput>) -> EqgbStatus {
    match result {
        Ok(out) => {
            let status = match out.exit_code {
                0 => EqgbStatus::Ok,
                2 => EqgbStatus::BudgetExhausted,
                3 => EqgbStatus::False,
                _ => EqgbStatus::InvalidInput,
            };
            if !out_json.is_null() {
                let write = write_string(out_json, &out.document);
                if write != EqgbStatus::Ok {
                    return write;
                }
            }
            status
        }
        Err(e) => {
            set_error(&e.to_string());
            EqgbStatus::InvalidInput
        }
    }
}

/// Parses a problem file from JSON into an opaque handle. The problem is
/// validated eagerly, so later calls cannot fail on malformed input.
#[no_mangle]
pub extern "C" fn eqgb_problem_parse(
    json: *const c_char,
    out: *mut *mut EqgbProblem,
) -> EqgbStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return EqgbStatus::NullPointer;
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match ProblemFile::parse(text).and_then(|f| f.resolve().map(|_| f)) {
            Ok(file) => {
                unsafe { *out = Box::into_raw(Box::new(EqgbProblem { file })) };
                EqgbStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                EqgbStatus::InvalidInput
            }
        }
    })
}

/// Frees a problem handle. Null is ignored.
#[no_mangle]
pub extern "C" fn eqgb_problem_free(problem: *mut EqgbProblem) {
    if !problem.is_null() {
        drop(unsafe { Box::from_raw(problem) });
    }
}

/// Frees a string returned by this library. Null is ignored.
#[no_mangle]
pub extern "C" fn eqgb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Re-serializes the parsed problem (round-trip check for bindings).
#[no_mangle]
pub extern "C" fn eqgb_problem_to_json(
    problem: *const EqgbProblem,
    out_json: *mut *mut c_char,
) -> EqgbStatus {
    guard(|| {
        let Some(p) = (unsafe { problem.as_ref() }) else {
            set_error("null problem handle");
            return EqgbStatus::NullPointer;
        };
        write_string(out_json, &p.file.to_json())
    })
}

/// Computes the equivariant Groebner basis; the JSON document lands in
/// `out_json`. `BudgetExhausted` still writes the document.
#[no_mangle]
pub extern "C" fn eqgb_gb(problem: *const EqgbProblem, out_json: *mut *mut c_char) -> EqgbStatus {
    guard(|| {
        let Some(p) = (unsafe { problem.as_ref() }) else {
            set_error("null problem handle");
            return EqgbStatus::NullPointer;
        };
        deliver(out_json, cmd_gb(&p.file, false))
    })
}

fn parse_target(target_json: *const c_char) -> Result<PolyDecl, EqgbStatus> {
    let text = read_str(target_json)?;
    serde_json::from_str(text).map_err(|e| {
        set_error(&format!("target: {e}"));
        EqgbStatus::InvalidInput
    })
}

/// Division with remainder of a target polynomial (JSON term list).
#[no_mangle]
pub extern "C" fn eqgb_reduce(
    problem: *const EqgbProblem,
    target_json: *const c_char,
    assume_basis: bool,
    out_json: *mut *mut c_char,
) -> EqgbStatus {
    guard(|| {
        let Some(p) = (unsafe { problem.as_ref() }) else {
            set_error("null problem handle");
            return EqgbStatus::NullPointer;
        };
        let target = match parse_target(target_json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        deliver(out_json, cmd_reduce(&p.file, &target, assume_basis, false))
    })
}

/// Ideal membership. `Ok` means member, `False` means not; the boolean also
/// lands in `out_member` when non-null.
#[no_mangle]
pub extern "C" fn eqgb_member(
    problem: *const EqgbProblem,
    target_json: *const c_char,
    assume_basis: bool,
    out_member: *mut bool,
    out_json: *mut *mut c_char,
) -> EqgbStatus {
    guard(|| {
        let Some(p) = (unsafe { problem.as_ref() }) else {
            set_error("null problem handle");
            return EqgbStatus::NullPointer;
        };
        let target = match parse_target(target_json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let status = deliver(out_json, cmd_member(&p.file, &target, assume_basis, false));
        if !out_member.is_null() && (status == EqgbStatus::Ok || status == EqgbStatus::False) {
            unsafe { *out_member = status == EqgbStatus::Ok };
        }
        status
    })
}

/// All images of the generators within the width.
#[no_mangle]
pub extern "C" fn eqgb_expand(
    problem: *const EqgbProblem,
    width: u32,
    out_json: *mut *mut c_char,
) -> EqgbStatus {
    guard(|| {
        let Some(p) = (unsafe { problem.as_ref() }) else {
            set_error("null problem handle");
            return EqgbStatus::NullPointer;
        };
        deliver(out_json, cmd_expand(&p.file, width, false))
    })
}

/// Truncation cross-check against the classical finite Buchberger.
/// `Ok` = consistent, `False` = inconsistent.
#[no_mangle]
pub extern "C" fn eqgb_verify(
    problem: *const EqgbProblem,
    width: u32,
    out_consistent: *mut bool,
    out_json: *mut *mut c_char,
) -> EqgbStatus {
    guard(|| {
        let Some(p) = (unsafe { problem.as_ref() }) else {
            set_error("null problem handle");
            return EqgbStatus::NullPointer;
        };
        let status = deliver(out_json, cmd_verify(&p.file, width, false));
        if !out_consistent.is_null() && (status == EqgbStatus::Ok || status == EqgbStatus::False) {
            unsafe { *out_consistent = status == EqgbStatus::Ok };
        }
        status
    })
}

/// Decides a well-partial-order relation from a JSON subject (`relation`,
/// `poset`, `a`, `b`). `Ok` = related, `False` = not related.
#[no_mangle]
pub extern "C" fn eqgb_wpo(
    subject_json: *const c_char,
    out_result: *mut bool,
    out_json: *mut *mut c_char,
) -> EqgbStatus {
    guard(|| {
        let text = match read_str(subject_json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let subject: WpoFile = match serde_json::from_str(text) {
            Ok(s) => s,
            Err(e) => {
                set_error(&format!("subject: {e}"));
                return EqgbStatus::InvalidInput;
            }
        };
        let status = deliver(out_json, cmd_wpo(&subject, false));
        if !out_result.is_null() && (status == EqgbStatus::Ok || status == EqgbStatus::False) {
            unsafe { *out_result = status == EqgbStatus::Ok };
        }
        status
    })
}
