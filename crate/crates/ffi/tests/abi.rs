//! Calls through the C ABI from Rust.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use sqp::*;

const PAIRS: &str = "vars: x1 x2 x3 x4\ngens: x1*x2, x1*x3, x1*x4, x2*x3, x2*x4, x3*x4\n";

fn parse(text: &str) -> *mut SqpIdeal {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sqp_ideal_parse(c.as_ptr(), &mut out) }, SqpStatus::Ok);
    assert!(!out.is_null());
    out
}

fn take_string(s: *mut c_char) -> String {
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { sqp_string_free(s) };
    owned
}

fn last_error() -> Option<String> {
    let p = sqp_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string())
}

#[test]
fn square_power_and_betti_diagram() {
    let i = parse(PAIRS);
    assert_eq!(unsafe { sqp_ideal_num_vars(i) }, 4);
    assert_eq!(unsafe { sqp_ideal_num_gens(i) }, 6);
    let mut sq = ptr::null_mut();
    assert_eq!(unsafe { sqp_ideal_square_power(i, 2, &mut sq) }, SqpStatus::Ok);
    let mut diagram = ptr::null_mut();
    assert_eq!(unsafe { sqp_betti_diagram(sq, 0, &mut diagram) }, SqpStatus::Ok);
    assert_eq!(
        take_string(diagram),
        "       0 1 2 3\ntotal: 1 6 8 3\n    0: 1 . . .\n    1: . . . .\n    2: . . . .\n    \
         3: . 6 . .\n    4: . . 8 .\n    5: . . . 3\n"
    );
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { sqp_betti_json(i, 2, &mut json) }, SqpStatus::Ok);
    assert_eq!(take_string(json), r#"{"char":2,"entries":[[0,0,1],[1,2,6],[2,3,8],[3,4,3]]}"#);
    let (mut reg, mut pd, mut depth) = (0i64, 0usize, 0usize);
    assert_eq!(unsafe { sqp_invariants(sq, 0, &mut reg, &mut pd, &mut depth) }, SqpStatus::Ok);
    assert_eq!((reg, pd, depth), (5, 3, 1));
    unsafe {
        sqp_ideal_free(sq);
        sqp_ideal_free(i);
    }
}

#[test]
fn derived_ideals_keep_variable_names() {
    let a = parse("vars: x y\ngens: x\n");
    let b = parse("vars: x y\ngens: x^2, y\n");
    let mut meet = ptr::null_mut();
    assert_eq!(unsafe { sqp_ideal_intersect(a, b, &mut meet) }, SqpStatus::Ok);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { sqp_ideal_to_text(meet, &mut text) }, SqpStatus::Ok);
    assert_eq!(take_string(text), "vars: x y\ngens: x^2, x*y\n");
    let mut sq = ptr::null_mut();
    assert_eq!(unsafe { sqp_ideal_power(a, 2, &mut sq) }, SqpStatus::Ok);
    let mut equal = false;
    let expected = parse("{\"n\":2,\"gens\":[[2,0]]}");
    assert_eq!(unsafe { sqp_ideal_equal(sq, expected, &mut equal) }, SqpStatus::Ok);
    assert!(equal);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { sqp_primary_decomposition_json(meet, &mut json) }, SqpStatus::Ok);
    assert_eq!(take_string(json), r#"[{"gens":[[1,0]],"radical":[0]},{"gens":[[0,1],[2,0]],"radical":[0,1]}]"#);
    unsafe {
        for p in [a, b, meet, sq, expected] {
            sqp_ideal_free(p);
        }
    }
}

#[test]
fn errors_are_reported_with_messages() {
    let bad = CString::new("vars: x\ngens: y\n").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sqp_ideal_parse(bad.as_ptr(), &mut out) }, SqpStatus::InputError);
    assert!(out.is_null());
    assert!(last_error().unwrap().contains('y'));

    assert_eq!(unsafe { sqp_ideal_parse(ptr::null(), &mut out) }, SqpStatus::NullPointer);
    let invalid = [0xffu8, 0];
    assert_eq!(unsafe { sqp_ideal_parse(invalid.as_ptr().cast(), &mut out) }, SqpStatus::InvalidUtf8);

    let i = parse("vars: x y\ngens: x^2*y\n");
    let mut sq = ptr::null_mut();
    assert_eq!(unsafe { sqp_ideal_square_power(i, 0, &mut sq) }, SqpStatus::InputError);
    assert_eq!(unsafe { sqp_ideal_square_power(i, 2, ptr::null_mut()) }, SqpStatus::NullPointer);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { sqp_betti_json(i, 4, &mut json) }, SqpStatus::InputError);
    let mut big = ptr::null_mut();
    assert_eq!(unsafe { sqp_ideal_square_power(i, u64::MAX, &mut big) }, SqpStatus::ResourceError);
    assert!(big.is_null());

    assert_eq!(unsafe { sqp_ideal_to_json(i, &mut json) }, SqpStatus::Ok);
    assert!(last_error().is_none());
    take_string(json);
    unsafe {
        sqp_ideal_free(i);
        sqp_ideal_free(ptr::null_mut());
        sqp_string_free(ptr::null_mut());
    }
    assert_eq!(unsafe { sqp_ideal_num_gens(ptr::null()) }, 0);
}

#[test]
fn version_matches_package() {
    let v = unsafe { CStr::from_ptr(sqp_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
