//! Conjugations on finite sections of the Hardy space H² and complex
//! symmetric Toeplitz operators.
//!
//! Elements of H² are modelled by their first `N` Taylor coefficients in the
//! monomial basis `z^0, ..., z^{N-1}`. A conjugation is stored in its `A·J`
//! form: `J` conjugates coefficients entrywise and `A` is an `N×N` complex
//! matrix, so `C f = A · conj(f)`.
//!
//! Modules:
//! - [`hardy`]: coefficient vectors, dense linear operators, antilinear operators.
//! - [`conjugations`]: constructors for `J`, `C_λ`, `C_α`, `C_ζ`, `U*JU`, and
//!   the axiom certificate.
//! - [`toeplitz`]: Laurent symbols, Toeplitz sections, symmetry residuals,
//!   coefficient criteria, and the randomized explorer.
//! - [`io`]: JSON interchange formats and the command implementations behind
//!   the `hardy-conj` binary.

pub mod conjugations;
pub mod error;
pub mod hardy;
pub mod io;
pub mod rng;
pub mod toeplitz;

pub use num_complex::Complex64;

pub use conjugations::{
    build_c_alpha, build_c_lambda, build_c_zeta, build_from_unitary, build_j,
    coefficient_matrix, factor_diagonal, random_unitary, verify_conjugation, AlphaSeq,
    ConjugationCert, UnimodularSeq,
};
pub use error::{Error, Result};
pub use hardy::{AntilinearOp, CoeffVector, LinearOp};
pub use toeplitz::{
    build_toeplitz, check_entrywise_condition, check_ko_lee, check_zeta_condition,
    explore_problem, fourier_coefficients, generate_symmetric_symbol, symmetry_residual,
    ConditionCheck, ExplorationRecord, ExploreMode, LaurentSymbol, SymmetryReport,
    ToeplitzSection,
};

/// Default absolute tolerance for identities on unit-scale data.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Tolerance on `|z| = 1` accepted when constructing unimodular inputs.
pub const UNIMODULAR_TOL: f64 = 1e-12;
