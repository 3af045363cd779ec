//! JSON formats and the command implementations used by the `hardy-conj`
//! binary.
//!
//! Exit codes: 0 when a command ran and its verdict is positive, 1 when it
//! ran and the verdict is negative, 2 on input or usage errors.

pub mod commands;
pub mod json;

pub use commands::{
    check_conjugation, check_symmetry, explore, gen_symbol, parse_json_arg, CommandOutcome,
    ExitStatus,
};
pub use json::{
    CoeffEntry, ConjugationSpec, JsonComplex, ReportFile, SeqSpec, SymbolFile, SCHEMA_VERSION,
};
