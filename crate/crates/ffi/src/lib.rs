//! C ABI for the arcdiag engine.
//!
//! Every fallible call returns an [`ArcStatus`]; on failure a message is
//! available from [`arcdiag_last_error`] until the next call on the same
//! thread. Handles are opaque and owned by the caller, who releases them with
//! the matching `_free` function. Strings returned by the library are freed
//! with [`arcdiag_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use arcdiag::expr::{eval, print};
use arcdiag::k0::{k0_class_of_power, verify_iso_pair};
use arcdiag::parser::parse;
use arcdiag::{interchange, Error, Morphism, Presentation};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownPreset = 3,
    Syntax = 4,
    UnknownGenerator = 5,
    ArityMismatch = 6,
    PresetMismatch = 7,
    TermLimit = 8,
    InvalidInput = 9,
    Undetermined = 10,
    Panic = 99,
}

/// A preset together with its coefficient field.
pub struct ArcPresentation(Presentation);

/// A morphism in normal form, tied to the presentation it was built in.
pub struct ArcMorphism {
    pres: Presentation,
    m: Morphism,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ArcStatus {
    match e {
        Error::UnknownPreset(_) | Error::UnknownField(_) => ArcStatus::UnknownPreset,
        Error::Syntax { .. } | Error::UnknownArity => ArcStatus::Syntax,
        Error::UnknownGenerator { .. } => ArcStatus::UnknownGenerator,
        Error::ArityMismatch { .. } => ArcStatus::ArityMismatch,
        Error::PresetMismatch { .. } => ArcStatus::PresetMismatch,
        Error::TermLimit { .. } => ArcStatus::TermLimit,
        Error::Undetermined(_) | Error::Collapse => ArcStatus::Undetermined,
        _ => ArcStatus::InvalidInput,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (ArcStatus, String)>) -> ArcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ArcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            ArcStatus::Panic
        }
    }
}

fn lift<T>(r: arcdiag::Result<T>) -> Result<T, (ArcStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (ArcStatus, String) {
    (ArcStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, (ArcStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (ArcStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, (ArcStatus, String)> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), (ArcStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

fn same(a: &ArcMorphism, b: &ArcMorphism) -> Result<(), (ArcStatus, String)> {
    if a.pres != b.pres {
        return Err((
            ArcStatus::PresetMismatch,
            format!("{} {} vs {} {}", a.pres.preset, a.pres.field, b.pres.preset, b.pres.field),
        ));
    }
    Ok(())
}

fn boxed(pres: &Presentation, m: Morphism) -> *mut ArcMorphism {
    Box::into_raw(Box::new(ArcMorphism { pres: pres.clone(), m }))
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library.
#[no_mangle]
pub extern "C" fn arcdiag_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a presentation. `field` may be null for the preset's default.
///
/// # Safety
/// `preset` and `field` must be null or nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_presentation_new(
    preset: *const c_char,
    field: *const c_char,
    out: *mut *mut ArcPresentation,
) -> ArcStatus {
    guard(|| {
        let preset = text(preset)?;
        let field = if field.is_null() { None } else { Some(text(field)?) };
        let p = lift(Presentation::from_names(preset, field))?;
        put(out, Box::into_raw(Box::new(ArcPresentation(p))))
    })
}

/// # Safety
/// `p` must be null or a handle from [`arcdiag_presentation_new`].
#[no_mangle]
pub unsafe extern "C" fn arcdiag_presentation_free(p: *mut ArcPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Parses and evaluates an expression such as `"x.y + z.z^*"`.
///
/// # Safety
/// Pointers must be valid; `out` receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_eval(
    pres: *const ArcPresentation,
    expr: *const c_char,
    out: *mut *mut ArcMorphism,
) -> ArcStatus {
    guard(|| {
        let p = &handle(pres)?.0;
        let e = lift(parse(text(expr)?))?;
        let m = lift(eval(p, &e))?;
        put(out, boxed(p, m))
    })
}

/// Reads a morphism in the JSON interchange format.
///
/// # Safety
/// Pointers must be valid; `out` receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_morphism_from_json(json: *const c_char, out: *mut *mut ArcMorphism) -> ArcStatus {
    guard(|| {
        let (p, m) = lift(interchange::from_str(text(json)?))?;
        put(out, boxed(&p, m))
    })
}

/// # Safety
/// `m` must be null or a morphism handle.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_morphism_free(m: *mut ArcMorphism) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// `upper ∘ lower`.
///
/// # Safety
/// Pointers must be valid; `out` receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_compose(
    upper: *const ArcMorphism,
    lower: *const ArcMorphism,
    out: *mut *mut ArcMorphism,
) -> ArcStatus {
    guard(|| {
        let (u, l) = (handle(upper)?, handle(lower)?);
        same(u, l)?;
        let c = lift(u.pres.compose(&u.m, &l.m))?;
        put(out, boxed(&u.pres, c))
    })
}

/// `left ⊗ right`.
///
/// # Safety
/// Pointers must be valid; `out` receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_tensor(
    left: *const ArcMorphism,
    right: *const ArcMorphism,
    out: *mut *mut ArcMorphism,
) -> ArcStatus {
    guard(|| {
        let (a, b) = (handle(left)?, handle(right)?);
        same(a, b)?;
        let t = lift(a.pres.tensor(&a.m, &b.m))?;
        put(out, boxed(&a.pres, t))
    })
}

/// `a + b`.
///
/// # Safety
/// Pointers must be valid; `out` receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_add(a: *const ArcMorphism, b: *const ArcMorphism, out: *mut *mut ArcMorphism) -> ArcStatus {
    guard(|| {
        let (a, b) = (handle(a)?, handle(b)?);
        same(a, b)?;
        let s = lift(a.pres.add(&a.m, &b.m))?;
        put(out, boxed(&a.pres, s))
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_equal(a: *const ArcMorphism, b: *const ArcMorphism, out: *mut bool) -> ArcStatus {
    guard(|| {
        let (a, b) = (handle(a)?, handle(b)?);
        same(a, b)?;
        let eq = lift(a.pres.equal(&a.m, &b.m))?;
        put(out, eq)
    })
}

/// Source and target tensor powers.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_morphism_arity(m: *const ArcMorphism, n: *mut usize, target: *mut usize) -> ArcStatus {
    guard(|| {
        let m = handle(m)?;
        put(n, m.m.n)?;
        put(target, m.m.m)
    })
}

/// Number of basis terms.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_morphism_terms(m: *const ArcMorphism, out: *mut usize) -> ArcStatus {
    guard(|| put(out, handle(m)?.m.len()))
}

/// The normal form as an expression; free with [`arcdiag_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_morphism_print(m: *const ArcMorphism, out: *mut *mut c_char) -> ArcStatus {
    guard(|| {
        let m = handle(m)?;
        put(out, c_string(print(&m.pres, &m.m)))
    })
}

/// The interchange JSON; free with [`arcdiag_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_morphism_to_json(m: *const ArcMorphism, out: *mut *mut c_char) -> ArcStatus {
    guard(|| {
        let m = handle(m)?;
        put(out, c_string(interchange::to_string(&m.pres, &m.m)))
    })
}

/// Number of partial bijections between `n` and `m` points, saturated at
/// `u64::MAX`.
#[no_mangle]
pub extern "C" fn arcdiag_count_partial_bijections(n: usize, m: usize) -> u64 {
    u64::try_from(arcdiag::basis::count_partial_bijections(n, m)).unwrap_or(u64::MAX)
}

/// Checks the splitting of `X^k` for the presentation's preset.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_verify_iso_pair(pres: *const ArcPresentation, k: usize, out: *mut bool) -> ArcStatus {
    guard(|| {
        let p = &handle(pres)?.0;
        let r = lift(verify_iso_pair(p, k))?;
        put(out, r.holds())
    })
}

/// The class of `X^k` as a `"p/q"` string; free with [`arcdiag_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn arcdiag_k0_class(pres: *const ArcPresentation, k: u32, out: *mut *mut c_char) -> ArcStatus {
    guard(|| {
        let p = &handle(pres)?.0;
        let c = lift(k0_class_of_power(p, k))?;
        put(out, c_string(c.to_string()))
    })
}
