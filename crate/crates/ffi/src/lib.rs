//! C interface to leibkit.
//!
//! Every function returns a [`LeibkitStatus`]. On failure the message is
//! available from [`leibkit_last_error`] until the next call on the same
//! thread. Handles are created by `*_from_json` or `*_builtin` and released
//! by the matching `*_free`. Strings returned through `char **` are released
//! with [`leibkit_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use clap::Parser;
use leibkit::cli::{self, Cli};
use leibkit::digroup::{decompose, enumerate_digroups, FiniteDigroup};
use leibkit::io::{self, AlgebraFile, DigroupFile, ModelFile, RackFile};
use leibkit::leibniz::{find_splitting, LeibnizAlgebra};
use leibkit::lierack::{builtin_model, differentiate, DiffOptions, LinearLieGroupModel};
use leibkit::rack::FiniteRack;
use leibkit::{fixtures, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeibkitStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Dimension = 4,
    /// Input violates an axiom or a precondition.
    Axiom = 5,
    Numeric = 6,
    Cap = 7,
    UnknownBuiltin = 8,
    Io = 9,
    Panic = 10,
}

/// Leibniz algebra over the rationals.
pub struct LeibkitAlgebra {
    inner: LeibnizAlgebra,
}

pub struct LeibkitDigroup {
    inner: FiniteDigroup,
}

pub struct LeibkitRack {
    inner: FiniteRack,
}

/// Linear Lie rack model with float matrices.
pub struct LeibkitModel {
    inner: LinearLieGroupModel,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> LeibkitStatus {
    match err {
        Error::Parse(_) | Error::Json(_) => LeibkitStatus::Parse,
        Error::Dimension(_) => LeibkitStatus::Dimension,
        Error::Singular | Error::Model(_) | Error::NotRealizable(_) => LeibkitStatus::Numeric,
        Error::Cap(_) => LeibkitStatus::Cap,
        Error::UnknownBuiltin(_) => LeibkitStatus::UnknownBuiltin,
        Error::Io(_) => LeibkitStatus::Io,
        _ => LeibkitStatus::Axiom,
    }
}

enum Fail {
    Status(LeibkitStatus, String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LeibkitStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LeibkitStatus::Ok
        }
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(&msg);
            s
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("panic inside leibkit");
            LeibkitStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Status(LeibkitStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Status(LeibkitStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail::Status(LeibkitStatus::NullPointer, format!("{what} is null")))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| Fail::Status(LeibkitStatus::NullPointer, format!("{what} is null")))
}

fn unknown(name: &str) -> Fail {
    Fail::Lib(Error::UnknownBuiltin(name.to_string()))
}

/// Message for the last failing call on this thread; empty after success.
/// The pointer stays valid until the next leibkit call on this thread.
#[no_mangle]
pub extern "C" fn leibkit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static version string.
#[no_mangle]
pub extern "C" fn leibkit_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn leibkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn new_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

// Algebras.

/// Parses an algebra file (JSON text).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_algebra_from_json(json: *const c_char, out: *mut *mut LeibkitAlgebra) -> LeibkitStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let out = out_arg(out, "out")?;
        let g = io::parse::<AlgebraFile>(text)?.to_algebra()?;
        *out = Box::into_raw(Box::new(LeibkitAlgebra { inner: g }));
        Ok(())
    })
}

/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_algebra_builtin(name: *const c_char, out: *mut *mut LeibkitAlgebra) -> LeibkitStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let out = out_arg(out, "out")?;
        let g = fixtures::leibniz(name).ok_or_else(|| unknown(name))?;
        *out = Box::into_raw(Box::new(LeibkitAlgebra { inner: g }));
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn leibkit_algebra_free(g: *mut LeibkitAlgebra) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn leibkit_algebra_dim(g: *const LeibkitAlgebra, out: *mut usize) -> LeibkitStatus {
    guard(|| {
        *out_arg(out, "out")? = ref_arg(g, "algebra")?.inner.dim();
        Ok(())
    })
}

/// Number of basis triples violating the Leibniz identity.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn leibkit_algebra_check(g: *const LeibkitAlgebra, violations: *mut usize) -> LeibkitStatus {
    guard(|| {
        *out_arg(violations, "violations")? = ref_arg(g, "algebra")?.inner.check_leibniz().violations.len();
        Ok(())
    })
}

/// Dimensions of the squares ideal and of ker(ad).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn leibkit_algebra_ideals(
    g: *const LeibkitAlgebra,
    squares_dim: *mut usize,
    ker_ad_dim: *mut usize,
) -> LeibkitStatus {
    guard(|| {
        let g = &ref_arg(g, "algebra")?.inner;
        let s = out_arg(squares_dim, "squares_dim")?;
        let k = out_arg(ker_ad_dim, "ker_ad_dim")?;
        *s = g.squares_ideal()?.dim();
        *k = g.ker_ad().dim();
        Ok(())
    })
}

/// Whether a complementary Lie subalgebra exists over the squares ideal
/// (`over_ker_ad = false`) or over ker(ad) (`true`).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn leibkit_algebra_splits(
    g: *const LeibkitAlgebra,
    over_ker_ad: bool,
    out: *mut bool,
) -> LeibkitStatus {
    guard(|| {
        let g = &ref_arg(g, "algebra")?.inner;
        let out = out_arg(out, "out")?;
        let e = if over_ker_ad { g.ker_ad() } else { g.squares_ideal()? };
        *out = find_splitting(g, &e)?.is_some();
        Ok(())
    })
}

// Digroups.

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_digroup_from_json(json: *const c_char, out: *mut *mut LeibkitDigroup) -> LeibkitStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let out = out_arg(out, "out")?;
        let g = io::parse::<DigroupFile>(text)?.to_digroup()?;
        *out = Box::into_raw(Box::new(LeibkitDigroup { inner: g }));
        Ok(())
    })
}

/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_digroup_builtin(name: *const c_char, out: *mut *mut LeibkitDigroup) -> LeibkitStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let out = out_arg(out, "out")?;
        let g = fixtures::digroup(name).ok_or_else(|| unknown(name))?;
        *out = Box::into_raw(Box::new(LeibkitDigroup { inner: g }));
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn leibkit_digroup_free(g: *mut LeibkitDigroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn leibkit_digroup_size(g: *const LeibkitDigroup, out: *mut usize) -> LeibkitStatus {
    guard(|| {
        *out_arg(out, "out")? = ref_arg(g, "digroup")?.inner.size();
        Ok(())
    })
}

/// Number of violated instances of G1–G6.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn leibkit_digroup_check(g: *const LeibkitDigroup, violations: *mut usize) -> LeibkitStatus {
    guard(|| {
        *out_arg(violations, "violations")? = ref_arg(g, "digroup")?.inner.check().violations.len();
        Ok(())
    })
}

/// Sizes of the bar-unit set `E` and the inverse group `J`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn leibkit_digroup_decompose(
    g: *const LeibkitDigroup,
    e_size: *mut usize,
    j_size: *mut usize,
) -> LeibkitStatus {
    guard(|| {
        let g = &ref_arg(g, "digroup")?.inner;
        let e = out_arg(e_size, "e_size")?;
        let j = out_arg(j_size, "j_size")?;
        let d = decompose(g)?;
        *e = d.bar_units.len();
        *j = d.inverse_group.elements.len();
        Ok(())
    })
}

/// Number of digroups of `order` up to isomorphism.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_enumerate_digroups(order: usize, out: *mut usize) -> LeibkitStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = enumerate_digroups(order)?.classes.len();
        Ok(())
    })
}

// Racks.

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_rack_from_json(json: *const c_char, out: *mut *mut LeibkitRack) -> LeibkitStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let out = out_arg(out, "out")?;
        let q = io::parse::<RackFile>(text)?.to_rack()?;
        *out = Box::into_raw(Box::new(LeibkitRack { inner: q }));
        Ok(())
    })
}

/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_rack_builtin(name: *const c_char, out: *mut *mut LeibkitRack) -> LeibkitStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let out = out_arg(out, "out")?;
        let q = fixtures::rack(name).ok_or_else(|| unknown(name))?;
        *out = Box::into_raw(Box::new(LeibkitRack { inner: q }));
        Ok(())
    })
}

/// # Safety
/// `q` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn leibkit_rack_free(q: *mut LeibkitRack) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Number of violated rack axiom instances.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn leibkit_rack_check(q: *const LeibkitRack, violations: *mut usize) -> LeibkitStatus {
    guard(|| {
        let q = &ref_arg(q, "rack")?.inner;
        let out = out_arg(violations, "violations")?;
        *out = q.check_with_cap(leibkit::rack::DEFAULT_SIZE_CAP)?.violations.len();
        Ok(())
    })
}

// Models.

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_model_from_json(json: *const c_char, out: *mut *mut LeibkitModel) -> LeibkitStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let out = out_arg(out, "out")?;
        let m = io::parse::<ModelFile>(text)?.to_model()?;
        *out = Box::into_raw(Box::new(LeibkitModel { inner: m }));
        Ok(())
    })
}

/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_model_builtin(name: *const c_char, out: *mut *mut LeibkitModel) -> LeibkitStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let out = out_arg(out, "out")?;
        *out = Box::into_raw(Box::new(LeibkitModel { inner: builtin_model(name)? }));
        Ok(())
    })
}

/// # Safety
/// `m` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn leibkit_model_free(m: *mut LeibkitModel) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Max deviation of the recovered bracket from `Xv + [X, Y]` and max
/// error of the finite-difference `Φ`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn leibkit_model_diff(
    m: *const LeibkitModel,
    seed: u64,
    bracket_deviation: *mut f64,
    phi_residual: *mut f64,
) -> LeibkitStatus {
    guard(|| {
        let m = &ref_arg(m, "model")?.inner;
        let b = out_arg(bracket_deviation, "bracket_deviation")?;
        let p = out_arg(phi_residual, "phi_residual")?;
        let s = differentiate(m, &DiffOptions { seed, ..DiffOptions::default() })?;
        *b = s.bracket_deviation;
        *p = s.phi_residual;
        Ok(())
    })
}

// Command line.

/// Runs a command-line invocation (without the program name) and returns
/// the JSON report and the exit code the binary would use. Argument errors
/// give status `Parse` and exit code 2.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_run(
    argv: *const *const c_char,
    argc: usize,
    report_json: *mut *mut c_char,
    exit_code: *mut i32,
) -> LeibkitStatus {
    guard(|| {
        let json_out = out_arg(report_json, "report_json")?;
        let code = out_arg(exit_code, "exit_code")?;
        *json_out = ptr::null_mut();
        *code = 2;
        if argc > 0 && argv.is_null() {
            return Err(Fail::Status(LeibkitStatus::NullPointer, "argv is null".into()));
        }
        let mut args = vec!["leibkit".to_string()];
        for i in 0..argc {
            args.push(str_arg(*argv.add(i), "argument")?.to_string());
        }
        let parsed = Cli::try_parse_from(&args).map_err(|e| Fail::Status(LeibkitStatus::Parse, e.to_string()))?;
        match cli::run(&parsed) {
            Ok(report) => {
                *code = cli::exit_code(&report);
                *json_out = new_string(report.to_json()?);
                Ok(())
            }
            Err(e) => {
                *code = cli::exit_code_for(&e);
                Err(Fail::Lib(e))
            }
        }
    })
}
