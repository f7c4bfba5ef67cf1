//! C ABI over the quintic library.
//!
//! Rings and polynomials are opaque heap handles released with their
//! `_free` functions. Every fallible call returns a [`QuinticStatus`];
//! the message of the most recent failure on the calling thread is
//! available from [`quintic_last_error`]. Structured results are returned
//! as JSON strings owned by the caller and released with
//! [`quintic_string_free`].

use quintic::error::Error;
use quintic::formparse::{parse_element, parse_univariate};
use quintic::galois::{group_label, resolvent_two_roots, Reducible};
use quintic::invariants::{absolute_invariants, invariants};
use quintic::poly::UniPoly;
use quintic::reduction::{certify_same_field, reduce_extension, InvariantsJson};
use quintic::rings::{is_square, PrimeField, RationalField, RationalFunctionField, RingDescriptor};
use quintic::templates::{specialize, TemplateId};
use quintic::with_field;
use serde_json::json;
use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuinticStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Polynomial or element text did not parse.
    Parse = 3,
    /// Invalid ring selection (characteristic, parameter, mismatched rings).
    Ring = 4,
    /// The computation is undefined for the input (repeated roots, A = 0, ...).
    Math = 5,
    /// Internal failure, including a caught panic.
    Internal = 6,
}

/// Coefficient field handle.
pub struct QuinticRing {
    desc: RingDescriptor,
}

/// Univariate polynomial handle.
pub struct QuinticPoly {
    poly: AnyPoly,
}

#[derive(Clone)]
enum AnyPoly {
    Q(UniPoly<RationalField>),
    Fp(UniPoly<PrimeField>),
    Qc(UniPoly<RationalFunctionField<RationalField>>),
    Fpc(UniPoly<RationalFunctionField<PrimeField>>),
}

trait Wrap: Reducible {
    fn wrap(p: UniPoly<Self>) -> AnyPoly;
}

impl Wrap for RationalField {
    fn wrap(p: UniPoly<Self>) -> AnyPoly {
        AnyPoly::Q(p)
    }
}
impl Wrap for PrimeField {
    fn wrap(p: UniPoly<Self>) -> AnyPoly {
        AnyPoly::Fp(p)
    }
}
impl Wrap for RationalFunctionField<RationalField> {
    fn wrap(p: UniPoly<Self>) -> AnyPoly {
        AnyPoly::Qc(p)
    }
}
impl Wrap for RationalFunctionField<PrimeField> {
    fn wrap(p: UniPoly<Self>) -> AnyPoly {
        AnyPoly::Fpc(p)
    }
}

macro_rules! on_poly {
    ($p:expr, $g:ident => $body:expr) => {
        match $p {
            AnyPoly::Q($g) => $body,
            AnyPoly::Fp($g) => $body,
            AnyPoly::Qc($g) => $body,
            AnyPoly::Fpc($g) => $body,
        }
    };
}

struct Failure {
    status: QuinticStatus,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Syntax { .. } | Error::DivisionUnsupported { .. } | Error::UnknownSymbol(_) | Error::UnboundSymbol(_) => {
                QuinticStatus::Parse
            }
            Error::NotPrime(_)
            | Error::ExcludedCharacteristic(_)
            | Error::NestedFunctionField
            | Error::InvalidParameter(_)
            | Error::WrongRing(_)
            | Error::Usage(_) => QuinticStatus::Ring,
            Error::Internal(_) | Error::Construction(_) | Error::Cache(_) => QuinticStatus::Internal,
            _ => QuinticStatus::Math,
        };
        Failure { status, message: e.to_string() }
    }
}

fn fail(status: QuinticStatus, message: impl Into<String>) -> Failure {
    Failure { status, message: message.into() }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).expect("no interior nul"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> QuinticStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(None);
            QuinticStatus::Ok
        }
        Ok(Err(e)) => {
            set_last_error(Some(e.message));
            e.status
        }
        Err(_) => {
            set_last_error(Some("panic inside the quintic library".into()));
            QuinticStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(QuinticStatus::NullArgument, format!("{name} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(QuinticStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| fail(QuinticStatus::NullArgument, format!("{name} is null")))
}

unsafe fn out_arg<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| fail(QuinticStatus::NullArgument, format!("{name} is null")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

fn poly_handle(poly: AnyPoly) -> *mut QuinticPoly {
    Box::into_raw(Box::new(QuinticPoly { poly }))
}

/// Message of the last failed call on this thread, or NULL after a
/// successful call. The pointer stays valid until the next call on the
/// same thread; do not free it.
#[no_mangle]
pub extern "C" fn quintic_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn quintic_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a ring: `ring` is "q" or "fp"; `p` is the characteristic for
/// "fp" and must be 0 for "q"; `param` names the parameter of
/// a rational function field, or is NULL.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn quintic_ring_new(
    ring: *const c_char,
    p: u64,
    param: *const c_char,
    out: *mut *mut QuinticRing,
) -> QuinticStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let ring = str_arg(ring, "ring")?;
        let param = if param.is_null() { None } else { Some(str_arg(param, "param")?) };
        let p = (p != 0).then_some(p);
        let desc = RingDescriptor::from_flags(ring, p, param)?;
        *out = Box::into_raw(Box::new(QuinticRing { desc }));
        Ok(())
    })
}

/// # Safety
/// `ring` must come from [`quintic_ring_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn quintic_ring_free(ring: *mut QuinticRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// The ring descriptor as JSON.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn quintic_ring_json(ring: *const QuinticRing, out: *mut *mut c_char) -> QuinticStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let ring = ref_arg(ring, "ring")?;
        *out = into_c_string(serde_json::to_string(&ring.desc).expect("serializable"));
        Ok(())
    })
}

/// Parses a univariate polynomial in `var` over `ring`.
///
/// # Safety
/// `ring` must be a live handle, strings NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn quintic_poly_parse(
    ring: *const QuinticRing,
    text: *const c_char,
    var: *const c_char,
    out: *mut *mut QuinticPoly,
) -> QuinticStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let ring = ref_arg(ring, "ring")?;
        let text = str_arg(text, "text")?;
        let var = str_arg(var, "var")?;
        let poly = with_field!(&ring.desc, f => Wrap::wrap(parse_univariate(text, &f, var)?));
        *out = poly_handle(poly);
        Ok(())
    })
}

/// # Safety
/// `poly` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn quintic_poly_free(poly: *mut QuinticPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Canonical text of a polynomial (re-parses to the same value).
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn quintic_poly_to_string(poly: *const QuinticPoly, out: *mut *mut c_char) -> QuinticStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let poly = ref_arg(poly, "poly")?;
        *out = into_c_string(on_poly!(&poly.poly, g => g.to_string()));
        Ok(())
    })
}

/// `{"A","B","C","Delta","M","delta","q"}` as exact strings; delta and q
/// are null when A or M vanishes.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn quintic_invariants_json(poly: *const QuinticPoly, out: *mut *mut c_char) -> QuinticStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let poly = ref_arg(poly, "poly")?;
        let v = on_poly!(&poly.poly, g => {
            let inv = invariants(g)?;
            let abs = absolute_invariants(&inv).ok();
            let f = g.field();
            let j = InvariantsJson::new(&inv);
            json!({
                "A": j.a, "B": j.b, "C": j.c, "Delta": j.delta, "M": j.m,
                "delta": abs.as_ref().map(|a| quintic::rings::Ring::format(f, &a.delta)),
                "q": abs.as_ref().map(|a| quintic::rings::Ring::format(f, &a.q)),
            })
        });
        *out = into_c_string(v.to_string());
        Ok(())
    })
}

/// Full reduction certificate as JSON, with Galois evidence attached.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn quintic_reduce_json(poly: *const QuinticPoly, out: *mut *mut c_char) -> QuinticStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let poly = ref_arg(poly, "poly")?;
        let s = on_poly!(&poly.poly, g => {
            let mut cert = reduce_extension(g)?;
            cert.galois = group_label(&cert.input).ok();
            serde_json::to_string(&cert.to_json()).expect("serializable")
        });
        *out = into_c_string(s);
        Ok(())
    })
}

/// Galois group label with its evidence record, as JSON.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn quintic_group_label_json(poly: *const QuinticPoly, out: *mut *mut c_char) -> QuinticStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let poly = ref_arg(poly, "poly")?;
        let s = on_poly!(&poly.poly, g => serde_json::to_string(&group_label(g)?).expect("serializable"));
        *out = into_c_string(s);
        Ok(())
    })
}

/// `{"disc": ..., "square_root": ... | null}`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn quintic_discriminant_json(poly: *const QuinticPoly, out: *mut *mut c_char) -> QuinticStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let poly = ref_arg(poly, "poly")?;
        let v = on_poly!(&poly.poly, g => {
            let f = g.field();
            let d = g.discriminant()?;
            let w = is_square(f, &d);
            json!({
                "disc": quintic::rings::Ring::format(f, &d),
                "square_root": w.map(|w| quintic::rings::Ring::format(f, &w)),
            })
        });
        *out = into_c_string(v.to_string());
        Ok(())
    })
}

/// Degree-10 resolvent of sums of two roots of a quintic.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn quintic_resolvent2(poly: *const QuinticPoly, out: *mut *mut QuinticPoly) -> QuinticStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let poly = ref_arg(poly, "poly")?;
        let r = on_poly!(&poly.poly, g => Wrap::wrap(resolvent_two_roots(g)?));
        *out = poly_handle(r);
        Ok(())
    })
}

/// Sets `*out` to 1 when `g` and `h` are certified to define the same
/// stem field, else 0. Both must be over the same ring.
///
/// # Safety
/// `g`, `h` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn quintic_certify_same_field(
    g: *const QuinticPoly,
    h: *const QuinticPoly,
    out: *mut c_int,
) -> QuinticStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let (g, h) = (ref_arg(g, "g")?, ref_arg(h, "h")?);
        let same = match (&g.poly, &h.poly) {
            (AnyPoly::Q(a), AnyPoly::Q(b)) if a.field() == b.field() => certify_same_field(a, b),
            (AnyPoly::Fp(a), AnyPoly::Fp(b)) if a.field() == b.field() => certify_same_field(a, b),
            (AnyPoly::Qc(a), AnyPoly::Qc(b)) if a.field() == b.field() => certify_same_field(a, b),
            (AnyPoly::Fpc(a), AnyPoly::Fpc(b)) if a.field() == b.field() => certify_same_field(a, b),
            _ => return Err(fail(QuinticStatus::Ring, "polynomials are over different rings")),
        };
        *out = same as c_int;
        Ok(())
    })
}

/// Specializes a generic polynomial ("P1_S5", "P2_S5", "P1_A5", "P2_A5")
/// at the bindings of a JSON object mapping symbols to element strings,
/// e.g. `{"d": "3", "q": "5*(c-1)/(2*c+5)"}`.
///
/// # Safety
/// `ring` must be a live handle, strings NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn quintic_specialize(
    ring: *const QuinticRing,
    template: *const c_char,
    bindings_json: *const c_char,
    monic: c_int,
    out: *mut *mut QuinticPoly,
) -> QuinticStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let ring = ref_arg(ring, "ring")?;
        let id: TemplateId = str_arg(template, "template")?.parse()?;
        let bindings = str_arg(bindings_json, "bindings_json")?;
        let map: serde_json::Map<String, serde_json::Value> =
            serde_json::from_str(bindings).map_err(|e| fail(QuinticStatus::Parse, format!("bindings: {e}")))?;
        let mut pairs = Vec::new();
        for (k, v) in &map {
            let text = v.as_str().ok_or_else(|| fail(QuinticStatus::Parse, format!("binding '{k}' is not a string")))?;
            pairs.push((k.clone(), text.to_string()));
        }
        let poly = with_field!(&ring.desc, f => {
            let mut values = Vec::new();
            for (k, text) in &pairs {
                values.push((k.as_str(), parse_element(text, &f)?));
            }
            Wrap::wrap(specialize(id, &f, &values, monic != 0)?)
        });
        *out = poly_handle(poly);
        Ok(())
    })
}
