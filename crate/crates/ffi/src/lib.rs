//! C ABI for `hardy-conj`.
//!
//! Conjugations and symbols are opaque handles owned by the caller and
//! released with their `_free` function. Every fallible call returns an
//! [`HcStatus`]; on failure, [`hc_last_error`] describes the cause for the
//! calling thread. Complex arrays are `HcComplex` values, matrices row-major.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use hardy_conj::toeplitz::default_window;
use hardy_conj::{
    build_c_alpha, build_c_lambda, build_c_zeta, build_from_unitary, build_j, build_toeplitz,
    check_entrywise_condition, check_ko_lee, check_zeta_condition, random_unitary, symmetry_residual, verify_conjugation,
    AlphaSeq, AntilinearOp, CoeffVector, Complex64, Error, LaurentSymbol, LinearOp,
    UnimodularSeq,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HcComplex {
    pub re: f64,
    pub im: f64,
}

impl From<HcComplex> for Complex64 {
    fn from(z: HcComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

impl From<Complex64> for HcComplex {
    fn from(z: Complex64) -> Self {
        HcComplex { re: z.re, im: z.im }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    NotUnimodular = 4,
    NotUnitary = 5,
    NotDiagonal = 6,
    SequenceTooShort = 7,
    Panic = 99,
}

impl From<&Error> for HcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::DimensionMismatch { .. } | Error::EmptyDimension | Error::InvalidWindow { .. } => {
                HcStatus::DimensionMismatch
            }
            Error::NotUnimodular { .. } => HcStatus::NotUnimodular,
            Error::NotUnitary { .. } => HcStatus::NotUnitary,
            Error::NotDiagonal { .. } => HcStatus::NotDiagonal,
            Error::SequenceTooShort { .. } => HcStatus::SequenceTooShort,
            _ => HcStatus::InvalidArgument,
        }
    }
}

/// Axiom certificate, see `verify_conjugation`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HcConjugationCert {
    pub isometry_residual: f64,
    pub involution_residual: f64,
    pub a_unitarity_residual: f64,
    pub a_symmetry_residual: f64,
    pub passed: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HcConditionCheck {
    pub holds: bool,
    pub max_violation: f64,
}

/// Opaque conjugation handle.
pub struct HcConjugation(AntilinearOp);

/// Opaque Laurent symbol handle.
pub struct HcSymbol(LaurentSymbol);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// Message for the last failed call on this thread, or NULL. The pointer stays
/// valid until the next `hc_*` call on the same thread.
#[no_mangle]
pub extern "C" fn hc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |s| s.as_ptr())
    })
}

enum Failure {
    Null,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> HcStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HcStatus::Ok,
        Ok(Err(Failure::Null)) => {
            set_last_error("null pointer argument".into());
            HcStatus::NullPointer
        }
        Ok(Err(Failure::Lib(e))) => {
            set_last_error(e.to_string());
            HcStatus::from(&e)
        }
        Err(_) => {
            set_last_error("internal panic".into());
            HcStatus::Panic
        }
    }
}

unsafe fn complex_slice<'a>(data: *const HcComplex, len: usize) -> Result<&'a [HcComplex], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(Failure::Null);
    }
    Ok(slice::from_raw_parts(data, len))
}

fn to_complex(values: &[HcComplex]) -> Vec<Complex64> {
    values.iter().map(|&z| z.into()).collect()
}

unsafe fn emit<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null);
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn conj_ref<'a>(c: *const HcConjugation) -> Result<&'a AntilinearOp, Failure> {
    c.as_ref().map(|c| &c.0).ok_or(Failure::Null)
}

unsafe fn symbol_ref<'a>(s: *const HcSymbol) -> Result<&'a LaurentSymbol, Failure> {
    s.as_ref().map(|s| &s.0).ok_or(Failure::Null)
}

/// The canonical conjugation `J` on dimension `n`.
#[no_mangle]
pub unsafe extern "C" fn hc_conjugation_j(n: usize, out: *mut *mut HcConjugation) -> HcStatus {
    guard(|| emit(out, HcConjugation(build_j(n)?)))
}

/// `C_λ` on dimension `n`; `λ` must be unimodular.
#[no_mangle]
pub unsafe extern "C" fn hc_conjugation_lambda(
    lambda: HcComplex,
    n: usize,
    out: *mut *mut HcConjugation,
) -> HcStatus {
    guard(|| emit(out, HcConjugation(build_c_lambda(lambda.into(), n)?)))
}

/// `C_α` from `α_0..α_{len-1}`.
#[no_mangle]
pub unsafe extern "C" fn hc_conjugation_alpha(
    alpha: *const HcComplex,
    len: usize,
    out: *mut *mut HcConjugation,
) -> HcStatus {
    guard(|| {
        let alpha = AlphaSeq::new(to_complex(complex_slice(alpha, len)?))?;
        emit(out, HcConjugation(build_c_alpha(&alpha)?))
    })
}

/// `C_ζ` from `ζ_1..ζ_len`; the dimension is `len + 1`.
#[no_mangle]
pub unsafe extern "C" fn hc_conjugation_zeta(
    zeta: *const HcComplex,
    len: usize,
    out: *mut *mut HcConjugation,
) -> HcStatus {
    guard(|| {
        let zeta = UnimodularSeq::new(to_complex(complex_slice(zeta, len)?))?;
        emit(out, HcConjugation(build_c_zeta(&zeta)?))
    })
}

/// `U*JU` for a row-major `n×n` unitary `U`.
#[no_mangle]
pub unsafe extern "C" fn hc_conjugation_from_unitary(
    unitary: *const HcComplex,
    n: usize,
    out: *mut *mut HcConjugation,
) -> HcStatus {
    guard(|| {
        let len = n
            .checked_mul(n)
            .ok_or_else(|| Error::InvalidArgument(format!("dimension {n} too large")))?;
        let entries = to_complex(complex_slice(unitary, len)?);
        let u = LinearOp::new(n, entries)?;
        emit(out, HcConjugation(build_from_unitary(&u)?))
    })
}

/// `U*JU` for the seeded random unitary of dimension `n`.
#[no_mangle]
pub unsafe extern "C" fn hc_conjugation_random_unitary(
    n: usize,
    seed: u64,
    out: *mut *mut HcConjugation,
) -> HcStatus {
    guard(|| emit(out, HcConjugation(build_from_unitary(&random_unitary(n, seed)?)?)))
}

/// Dimension of the conjugation, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn hc_conjugation_dim(c: *const HcConjugation) -> usize {
    c.as_ref().map_or(0, |c| c.0.dim())
}

/// Writes `C f` into `output`; both arrays hold `len` entries, `len` must
/// equal the dimension.
#[no_mangle]
pub unsafe extern "C" fn hc_conjugation_apply(
    c: *const HcConjugation,
    input: *const HcComplex,
    len: usize,
    output: *mut HcComplex,
) -> HcStatus {
    guard(|| {
        let op = conj_ref(c)?;
        let f = CoeffVector::new(to_complex(complex_slice(input, len)?))?;
        let out = op.apply(&f)?;
        if output.is_null() {
            return Err(Failure::Null);
        }
        let dst = slice::from_raw_parts_mut(output, len);
        for (d, s) in dst.iter_mut().zip(out.coeffs()) {
            *d = (*s).into();
        }
        Ok(())
    })
}

/// Copies the row-major A-factor into `output`, which must hold `len = n*n`
/// entries.
#[no_mangle]
pub unsafe extern "C" fn hc_conjugation_a_factor(
    c: *const HcConjugation,
    output: *mut HcComplex,
    len: usize,
) -> HcStatus {
    guard(|| {
        let a = conj_ref(c)?.a_factor();
        if len != a.entries().len() {
            return Err(Error::DimensionMismatch {
                expected: a.entries().len(),
                got: len,
            }
            .into());
        }
        if output.is_null() {
            return Err(Failure::Null);
        }
        let dst = slice::from_raw_parts_mut(output, len);
        for (d, s) in dst.iter_mut().zip(a.entries()) {
            *d = (*s).into();
        }
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hc_conjugation_verify(
    c: *const HcConjugation,
    trials: usize,
    tol: f64,
    seed: u64,
    out: *mut HcConjugationCert,
) -> HcStatus {
    guard(|| {
        let op = conj_ref(c)?;
        let out = out.as_mut().ok_or(Failure::Null)?;
        let cert = verify_conjugation(op, trials, tol, seed);
        *out = HcConjugationCert {
            isometry_residual: cert.isometry_residual,
            involution_residual: cert.involution_residual,
            a_unitarity_residual: cert.a_unitarity_residual,
            a_symmetry_residual: cert.a_symmetry_residual,
            passed: cert.passed,
        };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hc_conjugation_free(c: *mut HcConjugation) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Symbol of band `band` from `2*band + 1` coefficients `φ̂(-band)..φ̂(band)`.
#[no_mangle]
pub unsafe extern "C" fn hc_symbol_new(
    band: usize,
    coeffs: *const HcComplex,
    out: *mut *mut HcSymbol,
) -> HcStatus {
    guard(|| {
        let values = complex_slice(coeffs, 2 * band + 1)?;
        let pairs: Vec<(i64, Complex64)> = values
            .iter()
            .enumerate()
            .map(|(i, &z)| (i as i64 - band as i64, z.into()))
            .collect();
        emit(out, HcSymbol(LaurentSymbol::from_pairs(band, &pairs)?))
    })
}

#[no_mangle]
pub unsafe extern "C" fn hc_symbol_free(s: *mut HcSymbol) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Frobenius norm of the leading `window×window` block of `A·conj(T) − T^H·A`
/// with `T` the section of `symbol` at the conjugation's dimension. A `window`
/// of 0 selects the truncation-free default.
#[no_mangle]
pub unsafe extern "C" fn hc_symmetry_residual(
    c: *const HcConjugation,
    symbol: *const HcSymbol,
    window: usize,
    out: *mut f64,
) -> HcStatus {
    guard(|| {
        let op = conj_ref(c)?;
        let phi = symbol_ref(symbol)?;
        let out = out.as_mut().ok_or(Failure::Null)?;
        let section = build_toeplitz(phi, op.dim())?;
        let window = if window == 0 {
            default_window(op, phi.band())
        } else {
            window
        };
        *out = symmetry_residual(op, &section, window)?;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hc_check_ko_lee(
    symbol: *const HcSymbol,
    lambda: HcComplex,
    tol: f64,
    out: *mut HcConditionCheck,
) -> HcStatus {
    guard(|| {
        let phi = symbol_ref(symbol)?;
        let out = out.as_mut().ok_or(Failure::Null)?;
        let r = check_ko_lee(phi, lambda.into(), tol)?;
        *out = HcConditionCheck {
            holds: r.holds,
            max_violation: r.max_violation,
        };
        Ok(())
    })
}

/// One-sided `C_ζ` criterion with `ζ_1..ζ_len`.
#[no_mangle]
pub unsafe extern "C" fn hc_check_zeta_condition(
    symbol: *const HcSymbol,
    zeta: *const HcComplex,
    len: usize,
    tol: f64,
    out: *mut HcConditionCheck,
) -> HcStatus {
    guard(|| {
        let phi = symbol_ref(symbol)?;
        let zeta = UnimodularSeq::new(to_complex(complex_slice(zeta, len)?))?;
        let out = out.as_mut().ok_or(Failure::Null)?;
        let r = check_zeta_condition(phi, &zeta, tol)?;
        *out = HcConditionCheck {
            holds: r.holds,
            max_violation: r.max_violation,
        };
        Ok(())
    })
}

/// Two-index `C_ζ` criterion on the `n×n` section, `ζ_1..ζ_len` with
/// `len ≥ n - 1`.
#[no_mangle]
pub unsafe extern "C" fn hc_check_entrywise_condition(
    symbol: *const HcSymbol,
    zeta: *const HcComplex,
    len: usize,
    n: usize,
    tol: f64,
    out: *mut HcConditionCheck,
) -> HcStatus {
    guard(|| {
        let phi = symbol_ref(symbol)?;
        let zeta = UnimodularSeq::new(to_complex(complex_slice(zeta, len)?))?;
        let out = out.as_mut().ok_or(Failure::Null)?;
        let r = check_entrywise_condition(phi, &zeta, n, tol)?;
        *out = HcConditionCheck {
            holds: r.holds,
            max_violation: r.max_violation,
        };
        Ok(())
    })
}
