//! Exercises the C ABI directly: handles, documents, status codes, and the
//! error paths a binding would hit.

use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::ptr;

use eqgb_capi::*;
use libc::c_char;

fn problems_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../problems")
}

fn cstring(path: &str) -> CString {
    let text = std::fs::read_to_string(problems_dir().join(path)).expect("problem file");
    CString::new(text).unwrap()
}

fn parse(path: &str) -> *mut EqgbProblem {
    let json = cstring(path);
    let mut handle: *mut EqgbProblem = ptr::null_mut();
    let status = eqgb_problem_parse(json.as_ptr(), &mut handle);
    assert_eq!(status, EqgbStatus::Ok, "parse {path}");
    assert!(!handle.is_null());
    handle
}

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    eqgb_string_free(s);
    out
}

#[test]
fn gb_document_roundtrip() {
    let p = parse("onefactor.json");
    let mut doc: *mut c_char = ptr::null_mut();
    assert_eq!(eqgb_gb(p, &mut doc), EqgbStatus::Ok);
    let doc = take_string(doc);
    assert!(doc.contains("\"status\": \"complete\""));
    assert!(doc.contains("\"max_width\": 4"));

    let mut json: *mut c_char = ptr::null_mut();
    assert_eq!(eqgb_problem_to_json(p, &mut json), EqgbStatus::Ok);
    let json = take_string(json);
    assert!(json.contains("elim-onefactor"));
    eqgb_problem_free(p);
}

#[test]
fn membership_statuses() {
    let p = parse("onefactor.json");
    let t_true = cstring("targets/onefactor-member-true.json");
    let t_false = cstring("targets/onefactor-member-false.json");

    let mut member = false;
    let status = eqgb_member(p, t_true.as_ptr(), false, &mut member, ptr::null_mut());
    assert_eq!(status, EqgbStatus::Ok);
    assert!(member);

    let mut member = true;
    let status = eqgb_member(p, t_false.as_ptr(), false, &mut member, ptr::null_mut());
    assert_eq!(status, EqgbStatus::False);
    assert!(!member);

    let mut doc: *mut c_char = ptr::null_mut();
    let status = eqgb_reduce(p, t_false.as_ptr(), false, &mut doc);
    assert_eq!(status, EqgbStatus::Ok);
    let doc = take_string(doc);
    assert!(doc.contains("\"remainder_is_zero\": false"));
    eqgb_problem_free(p);
}

#[test]
fn expand_and_verify() {
    let p = parse("onefactor-elim.json");
    let mut doc: *mut c_char = ptr::null_mut();
    assert_eq!(eqgb_expand(p, 5, &mut doc), EqgbStatus::Ok);
    let doc = take_string(doc);
    assert!(doc.contains("\"count\": 10"));
    eqgb_problem_free(p);

    let p = parse("onefactor.json");
    let mut consistent = false;
    let status = eqgb_verify(p, 4, &mut consistent, ptr::null_mut());
    assert_eq!(status, EqgbStatus::Ok);
    assert!(consistent);
    eqgb_problem_free(p);
}

#[test]
fn wpo_subject() {
    let subject = cstring("wpo/kruskal-demo.json");
    let mut result = false;
    let mut doc: *mut c_char = ptr::null_mut();
    assert_eq!(eqgb_wpo(subject.as_ptr(), &mut result, &mut doc), EqgbStatus::Ok);
    assert!(result);
    let doc = take_string(doc);
    assert!(doc.contains("\"relation\": \"kruskal\""));
}

#[test]
fn budget_exhaustion_status() {
    let text = std::fs::read_to_string(problems_dir().join("onefactor.json")).unwrap();
    let with_budget = text.replace(
        "\"generators\"",
        "\"config\": { \"max_steps\": 1 }, \"generators\"",
    );
    let json = CString::new(with_budget).unwrap();
    let mut handle: *mut EqgbProblem = ptr::null_mut();
    assert_eq!(eqgb_problem_parse(json.as_ptr(), &mut handle), EqgbStatus::Ok);
    let mut doc: *mut c_char = ptr::null_mut();
    assert_eq!(eqgb_gb(handle, &mut doc), EqgbStatus::BudgetExhausted);
    let doc = take_string(doc);
    assert!(doc.contains("budget-exhausted"));
    eqgb_problem_free(handle);
}

#[test]
fn error_paths() {
    // Null pointers are reported, not dereferenced.
    assert_eq!(eqgb_problem_parse(ptr::null(), ptr::null_mut()), EqgbStatus::NullPointer);
    assert_eq!(eqgb_gb(ptr::null(), ptr::null_mut()), EqgbStatus::NullPointer);

    // Malformed JSON surfaces as InvalidInput with a message.
    let bad = CString::new("{ not json").unwrap();
    let mut handle: *mut EqgbProblem = ptr::null_mut();
    assert_eq!(eqgb_problem_parse(bad.as_ptr(), &mut handle), EqgbStatus::InvalidInput);
    let msg = unsafe { CStr::from_ptr(eqgb_last_error()) }.to_str().unwrap();
    assert!(!msg.is_empty());

    // Valid JSON, invalid ring (constraint needs arity >= 2).
    let bad_ring = CString::new(
        r#"{ "ring": [ { "name": "y", "free": 1, "constraint": "strictly-decreasing" } ] }"#,
    )
    .unwrap();
    assert_eq!(eqgb_problem_parse(bad_ring.as_ptr(), &mut handle), EqgbStatus::InvalidInput);

    // Frees tolerate null.
    eqgb_problem_free(ptr::null_mut());
    eqgb_string_free(ptr::null_mut());

    // Version is a readable static string.
    let v = unsafe { CStr::from_ptr(eqgb_version()) }.to_str().unwrap();
    assert!(!v.is_empty());
}
