//! C ABI over `lie_poisson`.
//!
//! Objects are opaque heap handles released with their `*_free` function.
//! Every fallible call returns an [`LpStatus`]; on failure the message is
//! available from [`lp_last_error_message`] on the same thread. Strings
//! returned through out-parameters are owned by the caller and released with
//! [`lp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lie_poisson::algebra::{cartan_splitting, lower_right_sl2_basis, make_splitting, parse_structure_constants, Family, LieAlgebra, Splitting};
use lie_poisson::cli::config::default_form;
use lie_poisson::invariants::{trace_power_invariants, InvariantSet};
use lie_poisson::poisson::poisson_bracket_capped;
use lie_poisson::poly::Poly;
use lie_poisson::rank_lab::{b_of, index_of};
use lie_poisson::subalgebra::{criterion_verdict, generate_z_capped, generate_ztilde, pairwise_bracket_report, GeneratedSubalgebra, Verdict};
use lie_poisson::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidDimension = 3,
    Unsupported = 4,
    NotSubalgebra = 5,
    DegenerateRestriction = 6,
    Parse = 7,
    CapExceeded = 8,
    Internal = 9,
    Panic = 10,
}

/// Same numbering as the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpVerdict {
    Commutative = 0,
    NotCommutative = 2,
    Undecided = 3,
}

impl From<Verdict> for LpVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Commutative => LpVerdict::Commutative,
            Verdict::NotCommutative => LpVerdict::NotCommutative,
            Verdict::Undecided => LpVerdict::Undecided,
        }
    }
}

pub struct LpAlgebra(LieAlgebra);
pub struct LpSplitting(Splitting);
pub struct LpInvariants(InvariantSet);
pub struct LpSubalgebra(GeneratedSubalgebra);
pub struct LpPoly(Poly);

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> LpStatus {
    match e {
        Error::InvalidDimension(_) | Error::DimensionMismatch { .. } => LpStatus::InvalidDimension,
        Error::InvalidParameter(_) | Error::LinearlyDependent | Error::Precondition(_) | Error::NotCentral { .. } => {
            LpStatus::InvalidArgument
        }
        Error::Unsupported(_) => LpStatus::Unsupported,
        Error::NotSubalgebra(_) | Error::NotStable(_) => LpStatus::NotSubalgebra,
        Error::DegenerateRestriction => LpStatus::DegenerateRestriction,
        Error::Parse(_) | Error::Io(_) => LpStatus::Parse,
        Error::TermCapExceeded { .. } => LpStatus::CapExceeded,
        Error::Singular(_) | Error::Internal(_) => LpStatus::Internal,
    }
}

struct Fail(LpStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(LpStatus::NullPointer, format!("{what} is null"))
}

/// Run `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            LpStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside lie_poisson".into());
            LpStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(LpStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| Fail(LpStatus::Internal, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_value<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = value;
    Ok(())
}

unsafe fn free<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

fn same_algebra(a: &LieAlgebra, b: &LieAlgebra) -> Result<(), Fail> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: b.dim() }.into());
    }
    Ok(())
}

/// Message of the last failed call on this thread, or null. Free with `lp_string_free`.
#[no_mangle]
pub extern "C" fn lp_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match e.borrow().as_ref() {
        Some(m) => CString::new(m.replace('\0', " ")).map(CString::into_raw).unwrap_or(ptr::null_mut()),
        None => ptr::null_mut(),
    })
}

/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `name` is `glN` or `slN`.
///
/// # Safety
/// `name` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_algebra_classical(name: *const c_char, out: *mut *mut LpAlgebra) -> LpStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        let fam = Family::parse(name).ok_or_else(|| Fail(LpStatus::InvalidArgument, format!("unknown algebra {name}")))?;
        put(out, LpAlgebra(fam.build()?))
    })
}

/// # Safety
/// `path` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_algebra_from_structure_file(path: *const c_char, out: *mut *mut LpAlgebra) -> LpStatus {
    guard(|| {
        let path = read_str(path, "path")?;
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
        put(out, LpAlgebra(parse_structure_constants(&text)?))
    })
}

/// Dimension, or 0 for a null handle.
///
/// # Safety
/// `g` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lp_algebra_dim(g: *const LpAlgebra) -> usize {
    g.as_ref().map_or(0, |g| g.0.dim())
}

/// Index from `trials` seeded points in `[-bound, bound]`.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_algebra_index(g: *const LpAlgebra, trials: usize, seed: u64, bound: i64, out: *mut usize) -> LpStatus {
    guard(|| {
        let g = deref(g, "algebra")?;
        if bound < 1 {
            return Err(Fail(LpStatus::InvalidArgument, "bound must be at least 1".into()));
        }
        put_value(out, index_of(&g.0, trials, seed, bound))
    })
}

/// `(dim + index) / 2`.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_algebra_b(g: *const LpAlgebra, index: usize, out: *mut usize) -> LpStatus {
    guard(|| put_value(out, b_of(&deref(g, "algebra")?.0, index)?))
}

/// # Safety
/// `g` is null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lp_algebra_free(g: *mut LpAlgebra) {
    free(g)
}

/// Diagonal Cartan subalgebra of `gl_n` or `sl_n`.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_splitting_cartan(g: *const LpAlgebra, out: *mut *mut LpSplitting) -> LpStatus {
    guard(|| put(out, LpSplitting(cartan_splitting(&deref(g, "algebra")?.0)?)))
}

/// `sl_2` in the lower-right 2x2 block.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_splitting_lower_right_sl2(g: *const LpAlgebra, out: *mut *mut LpSplitting) -> LpStatus {
    guard(|| {
        let g = &deref(g, "algebra")?.0;
        let form = default_form(g)?;
        put(out, LpSplitting(make_splitting(g, &form, lower_right_sl2_basis(g)?)?))
    })
}

/// # Safety
/// `s` is null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lp_splitting_free(s: *mut LpSplitting) {
    free(s)
}

/// `tr X^k` for `k = 1..n` (`2..n` for `sl_n`).
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_invariants_trace_powers(g: *const LpAlgebra, out: *mut *mut LpInvariants) -> LpStatus {
    guard(|| put(out, LpInvariants(trace_power_invariants(&deref(g, "algebra")?.0)?)))
}

/// Number of generators, or 0 for a null handle.
///
/// # Safety
/// `inv` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lp_invariants_len(inv: *const LpInvariants) -> usize {
    inv.as_ref().map_or(0, |i| i.0.len())
}

/// Canonical text of generator `i`.
///
/// # Safety
/// `inv` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_invariants_get_poly_text(inv: *const LpInvariants, i: usize, out: *mut *mut c_char) -> LpStatus {
    guard(|| {
        let inv = &deref(inv, "invariants")?.0;
        let p = inv.gens().get(i).ok_or_else(|| Fail(LpStatus::InvalidArgument, format!("index {i} out of range")))?;
        put_string(out, p.to_string())
    })
}

/// # Safety
/// `inv` is null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lp_invariants_free(inv: *mut LpInvariants) {
    free(inv)
}

/// All nonzero bihomogeneous components of the invariants.
///
/// # Safety
/// `inv`, `split` are live handles over the same algebra; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_subalgebra_z(
    inv: *const LpInvariants,
    split: *const LpSplitting,
    term_cap: usize,
    out: *mut *mut LpSubalgebra,
) -> LpStatus {
    guard(|| {
        let (inv, split) = (&deref(inv, "invariants")?.0, &deref(split, "splitting")?.0);
        same_algebra(inv.algebra(), split.algebra())?;
        put(out, LpSubalgebra(generate_z_capped(inv, split, term_cap)?))
    })
}

/// `Z` with the pure-Cartan components replaced by a basis of `t`; needs a Cartan splitting.
///
/// # Safety
/// `inv`, `split` are live handles over the same algebra; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_subalgebra_ztilde(inv: *const LpInvariants, split: *const LpSplitting, out: *mut *mut LpSubalgebra) -> LpStatus {
    guard(|| {
        let (inv, split) = (&deref(inv, "invariants")?.0, &deref(split, "splitting")?.0);
        same_algebra(inv.algebra(), split.algebra())?;
        put(out, LpSubalgebra(generate_ztilde(inv, split)?))
    })
}

/// Number of generators, or 0 for a null handle.
///
/// # Safety
/// `sub` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lp_subalgebra_len(sub: *const LpSubalgebra) -> usize {
    sub.as_ref().map_or(0, |s| s.0.len())
}

/// Exhaustive pairwise brackets of the generators.
///
/// # Safety
/// `sub` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_subalgebra_pair_report(sub: *const LpSubalgebra, term_cap: usize, seed: u64, out: *mut LpVerdict) -> LpStatus {
    guard(|| {
        let sub = &deref(sub, "subalgebra")?.0;
        put_value(out, pairwise_bracket_report(sub, term_cap, seed).verdict.into())
    })
}

/// # Safety
/// `sub` is null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lp_subalgebra_free(sub: *mut LpSubalgebra) {
    free(sub)
}

/// Commutativity of `Z` decided through the criterion polynomials.
///
/// # Safety
/// `inv`, `split` are live handles over the same algebra; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_criterion_verdict(
    inv: *const LpInvariants,
    split: *const LpSplitting,
    term_cap: usize,
    seed: u64,
    out: *mut LpVerdict,
) -> LpStatus {
    guard(|| {
        let (inv, split) = (&deref(inv, "invariants")?.0, &deref(split, "splitting")?.0);
        same_algebra(inv.algebra(), split.algebra())?;
        put_value(out, criterion_verdict(inv, split, term_cap, seed, &[]).verdict.into())
    })
}

/// Parse text such as `2*x[0]^2 - x[1]*x[2]` in `nvars` variables.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_poly_parse(text: *const c_char, nvars: usize, out: *mut *mut LpPoly) -> LpStatus {
    guard(|| put(out, LpPoly(Poly::parse(read_str(text, "text")?, nvars)?)))
}

/// # Safety
/// `p` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_poly_to_string(p: *const LpPoly, out: *mut *mut c_char) -> LpStatus {
    guard(|| put_string(out, deref(p, "polynomial")?.0.to_string()))
}

/// Lie-Poisson bracket `{a, b}` on the dual of `g`.
///
/// # Safety
/// All handles are live; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lp_poly_bracket(
    g: *const LpAlgebra,
    a: *const LpPoly,
    b: *const LpPoly,
    term_cap: usize,
    out: *mut *mut LpPoly,
) -> LpStatus {
    guard(|| {
        let g = &deref(g, "algebra")?.0;
        let (a, b) = (&deref(a, "a")?.0, &deref(b, "b")?.0);
        put(out, LpPoly(poisson_bracket_capped(g, a, b, term_cap)?))
    })
}

/// # Safety
/// `p` is null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lp_poly_free(p: *mut LpPoly) {
    free(p)
}
