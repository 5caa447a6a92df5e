use std::ffi::{c_char, CStr, CString};
use std::ptr;

use arcdiag_ffi::*;

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { arcdiag_string_free(s) };
    out
}

fn last_error() -> String {
    let p = arcdiag_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn pres(name: &str, field: Option<&str>) -> *mut ArcPresentation {
    let name = CString::new(name).unwrap();
    let field = field.map(|f| CString::new(f).unwrap());
    let mut out = ptr::null_mut();
    let st = unsafe { arcdiag_presentation_new(name.as_ptr(), field.as_ref().map_or(ptr::null(), |f| f.as_ptr()), &mut out) };
    assert_eq!(st, ArcStatus::Ok);
    out
}

fn eval(p: *const ArcPresentation, src: &str) -> Result<*mut ArcMorphism, ArcStatus> {
    let src = CString::new(src).unwrap();
    let mut out = ptr::null_mut();
    match unsafe { arcdiag_eval(p, src.as_ptr(), &mut out) } {
        ArcStatus::Ok => Ok(out),
        st => Err(st),
    }
}

#[test]
fn relations_through_the_abi() {
    let p = pres("jacobson-dg", Some("q"));
    let y = eval(p, "y").unwrap();
    let x = eval(p, "x").unwrap();
    let mut yx = ptr::null_mut();
    assert_eq!(unsafe { arcdiag_compose(y, x, &mut yx) }, ArcStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { arcdiag_morphism_print(yx, &mut s) }, ArcStatus::Ok);
    assert_eq!(take(s), "1_X");

    let id = eval(p, "1_X").unwrap();
    let mut eq = false;
    assert_eq!(unsafe { arcdiag_equal(yx, id, &mut eq) }, ArcStatus::Ok);
    assert!(eq);

    let mut t = ptr::null_mut();
    assert_eq!(unsafe { arcdiag_tensor(x, y, &mut t) }, ArcStatus::Ok);
    let (mut n, mut m) = (0, 0);
    assert_eq!(unsafe { arcdiag_morphism_arity(t, &mut n, &mut m) }, ArcStatus::Ok);
    assert_eq!((n, m), (2, 2));

    let mut sum = ptr::null_mut();
    assert_eq!(unsafe { arcdiag_add(x, y, &mut sum) }, ArcStatus::Ok);
    let mut terms = 0;
    assert_eq!(unsafe { arcdiag_morphism_terms(sum, &mut terms) }, ArcStatus::Ok);
    assert_eq!(terms, 2);

    for h in [y, x, yx, id, t, sum] {
        unsafe { arcdiag_morphism_free(h) };
    }
    unsafe { arcdiag_presentation_free(p) };
}

#[test]
fn json_round_trip() {
    let p = pres("leavitt:3", None);
    let m = eval(p, "x1.x2^* + 2 z.z^*").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { arcdiag_morphism_to_json(m, &mut s) }, ArcStatus::Ok);
    let json = CString::new(take(s)).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { arcdiag_morphism_from_json(json.as_ptr(), &mut back) }, ArcStatus::Ok);
    let mut eq = false;
    assert_eq!(unsafe { arcdiag_equal(m, back, &mut eq) }, ArcStatus::Ok);
    assert!(eq);
    unsafe {
        arcdiag_morphism_free(m);
        arcdiag_morphism_free(back);
        arcdiag_presentation_free(p);
    }
}

#[test]
fn error_codes() {
    let name = CString::new("nope").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { arcdiag_presentation_new(name.as_ptr(), ptr::null(), &mut out) }, ArcStatus::UnknownPreset);
    assert!(last_error().contains("nope"));
    assert_eq!(unsafe { arcdiag_presentation_new(ptr::null(), ptr::null(), &mut out) }, ArcStatus::NullPointer);

    let p = pres("jacobson-dg", None);
    assert_eq!(eval(p, "x_1").unwrap_err(), ArcStatus::UnknownGenerator);
    assert_eq!(eval(p, "x . (").unwrap_err(), ArcStatus::Syntax);
    assert_eq!(eval(p, "z.x").unwrap_err(), ArcStatus::ArityMismatch);
    assert!(last_error().contains("arity"));
    assert!(eval(p, "x").is_ok());
    assert!(arcdiag_last_error().is_null());

    let q = pres("jacobson-dg", Some("q"));
    let (a, b) = (eval(p, "x").unwrap(), eval(q, "x").unwrap());
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { arcdiag_compose(a, b, &mut c) }, ArcStatus::PresetMismatch);

    let quiver = pres("quiver-example1", None);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { arcdiag_k0_class(quiver, 1, &mut s) }, ArcStatus::Undetermined);
    unsafe {
        arcdiag_morphism_free(a);
        arcdiag_morphism_free(b);
        for h in [p, q, quiver] {
            arcdiag_presentation_free(h);
        }
    }
}

#[test]
fn k0_and_counts() {
    let p = pres("jacobson-dg", None);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { arcdiag_k0_class(p, 3, &mut s) }, ArcStatus::Ok);
    assert_eq!(take(s), "1/8");
    let mut ok = false;
    assert_eq!(unsafe { arcdiag_verify_iso_pair(p, 2, &mut ok) }, ArcStatus::Ok);
    assert!(ok);
    assert_eq!(arcdiag_count_partial_bijections(2, 2), 6);
    assert_eq!(arcdiag_count_partial_bijections(5, 4), 126);
    unsafe { arcdiag_presentation_free(p) };
}
