use std::collections::BTreeMap;
use std::io::Write;

use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde_json::json;

use crate::conjugations::verify_conjugation;
use crate::error::{Error, Result};
use crate::io::json::{CoeffEntry, ConjugationSpec, ReportFile, SeqSpec, SymbolFile, SCHEMA_VERSION};
use crate::toeplitz::{
    analyze_symmetry, explore_trial, generate_symmetric_symbol, ExploreMode, ExploreSummary,
};
use crate::rng;

/// Process exit status of the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Positive = 0,
    Negative = 1,
    InputError = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutcome {
    pub report: ReportFile,
    pub positive: bool,
}

impl CommandOutcome {
    pub fn exit_status(&self) -> ExitStatus {
        if self.positive {
            ExitStatus::Positive
        } else {
            ExitStatus::Negative
        }
    }
}

fn to_value<T: serde::Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("report types serialize")
}

fn report(command: &str, inputs: serde_json::Value, results: serde_json::Value) -> ReportFile {
    ReportFile {
        schema_version: SCHEMA_VERSION,
        command: command.to_string(),
        inputs,
        results,
        runtime_ms: None,
    }
}

/// Parses a JSON argument given inline, or from a file when it starts with `@`.
pub fn parse_json_arg<T: DeserializeOwned>(arg: &str) -> Result<T> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| Error::InvalidArgument(format!("bad JSON: {e}")))
}

/// Builds the conjugation and certifies the axioms. Positive iff the
/// certificate passed.
pub fn check_conjugation(
    spec: &ConjugationSpec,
    dim: usize,
    tol: f64,
    trials: usize,
    seed: u64,
) -> Result<CommandOutcome> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let op = spec.build(dim)?;
    let cert = verify_conjugation(&op, trials, tol, seed);
    let inputs = json!({
        "conjugation": to_value(spec),
        "n": dim,
        "tol": tol,
        "trials": trials,
        "seed": seed,
    });
    Ok(CommandOutcome {
        positive: cert.passed,
        report: report("check-conjugation", inputs, json!({ "certificate": to_value(&cert) })),
    })
}

/// Residual oracle and coefficient criteria for `T_φ` against a conjugation.
/// Positive iff the residual certifies `CT = T*C`.
pub fn check_symmetry(
    symbol: &SymbolFile,
    spec: &ConjugationSpec,
    dim: usize,
    tol: f64,
) -> Result<CommandOutcome> {
    let phi = symbol.to_symbol()?;
    if phi.band() + 1 > dim {
        return Err(Error::BandTooLarge {
            band: phi.band(),
            dim,
        });
    }
    let op = spec.build(dim)?;
    let result = analyze_symmetry(&op, &phi, tol)?;
    let inputs = json!({
        "symbol": to_value(symbol),
        "conjugation": to_value(spec),
        "n": dim,
        "tol": tol,
    });
    Ok(CommandOutcome {
        positive: result.symmetric,
        report: report(
            "check-symmetry",
            inputs,
            json!({ "report": to_value(&result), "agree": result.agree() }),
        ),
    })
}

/// Completes a one-sided list of coefficients (`n ≥ 1`) to a `C_ζ`-symmetric
/// symbol via `φ̂(−n) = φ̂(n) ζ_n^{2n}`.
pub fn gen_symbol(onesided: &[CoeffEntry], constant: Complex64, zeta: &SeqSpec) -> Result<SymbolFile> {
    let mut map = BTreeMap::new();
    for e in onesided {
        if e.n < 1 {
            return Err(Error::InvalidArgument(format!(
                "one-sided coefficient index {} must be at least 1",
                e.n
            )));
        }
        if map.insert(e.n as usize, Complex64::new(e.re, e.im)).is_some() {
            return Err(Error::DuplicateIndex { n: e.n });
        }
    }
    let band = map.keys().next_back().copied().unwrap_or(0);
    let zeta = zeta.to_zeta(band + 1)?;
    let symbol = generate_symmetric_symbol(&map, constant, &zeta)?;
    Ok(SymbolFile::from_symbol(&symbol))
}

/// Runs the explorer, streaming one JSON record per line into `sink`.
/// Positive iff the two-index criterion matched the residual in every trial.
#[allow(clippy::too_many_arguments)]
pub fn explore<W: Write>(
    trials: usize,
    dim: usize,
    band: usize,
    seed: u64,
    mode: ExploreMode,
    tol: f64,
    sink: &mut W,
) -> Result<CommandOutcome> {
    if band == 0 || band >= dim {
        return Err(Error::BandTooLarge { band, dim });
    }
    let io_err = |e: std::io::Error| Error::InvalidArgument(format!("cannot write records: {e}"));
    let mut summary = ExploreSummary::default();
    for i in 0..trials {
        let rec = explore_trial(i, rng::trial_seed(seed, i as u64), dim, band, mode, tol)?;
        serde_json::to_writer(&mut *sink, &rec).map_err(|e| io_err(e.into()))?;
        sink.write_all(b"\n").map_err(io_err)?;
        summary.push(&rec);
    }
    sink.flush().map_err(io_err)?;

    let inputs = json!({
        "trials": trials,
        "n": dim,
        "band": band,
        "seed": seed,
        "mode": to_value(&mode),
        "tol": tol,
    });
    let results = json!({
        "summary": to_value(&summary),
        "one_sided_agreement_rate": summary.one_sided_agreement_rate(),
    });
    Ok(CommandOutcome {
        positive: summary.entrywise_disagreements == 0,
        report: report("explore", inputs, results),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::json::JsonComplex;

    #[test]
    fn check_conjugation_verdicts() {
        let lambda_one = ConjugationSpec::Lambda {
            lambda: JsonComplex::Cartesian { re: 1.0, im: 0.0 },
        };
        let out = check_conjugation(&lambda_one, 16, 1e-10, 20, 1).unwrap();
        assert!(out.positive);
        assert_eq!(out.exit_status().code(), 0);
        assert!(check_conjugation(&lambda_one, 16, 1e-10, 0, 1).is_err());
        let bad = ConjugationSpec::Lambda {
            lambda: JsonComplex::Cartesian { re: 2.0, im: 0.0 },
        };
        assert!(check_conjugation(&bad, 4, 1e-10, 5, 1).is_err());
    }

    #[test]
    fn gen_symbol_examples() {
        let zeta = SeqSpec::Values(vec![JsonComplex::Cartesian { re: 0.0, im: 1.0 }]);
        let file = gen_symbol(&[CoeffEntry { n: 1, re: 1.0, im: 0.0 }], Complex64::new(0.0, 0.0), &zeta).unwrap();
        let minus_one = file.coeffs.iter().find(|e| e.n == -1).unwrap();
        assert_eq!((minus_one.re, minus_one.im), (-1.0, 0.0));

        let file = gen_symbol(&[], Complex64::new(3.0, 0.0), &SeqSpec::Thetas(vec![])).unwrap();
        assert_eq!(file.band, 0);
        assert_eq!(file.coeffs, vec![CoeffEntry { n: 0, re: 3.0, im: 0.0 }]);

        let short = gen_symbol(&[CoeffEntry { n: 3, re: 1.0, im: 0.0 }], Complex64::new(0.0, 0.0), &zeta);
        assert!(matches!(short, Err(Error::SequenceTooShort { .. })));
        let zero_index = gen_symbol(&[CoeffEntry { n: 0, re: 1.0, im: 0.0 }], Complex64::new(0.0, 0.0), &zeta);
        assert!(zero_index.is_err());
    }

    #[test]
    fn explore_rejects_bad_band() {
        let mut sink = Vec::new();
        assert!(explore(1, 4, 4, 0, ExploreMode::RandomZeta, 1e-10, &mut sink).is_err());
        assert!(sink.is_empty());
    }

    #[test]
    fn parse_json_arg_inline_and_file() {
        let spec: ConjugationSpec = parse_json_arg(r#"{"kind":"j"}"#).unwrap();
        assert_eq!(spec, ConjugationSpec::J);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        std::fs::write(&path, r#"{"kind":"unitary-seed","seed":3}"#).unwrap();
        let spec: ConjugationSpec = parse_json_arg(&format!("@{}", path.display())).unwrap();
        assert_eq!(spec, ConjugationSpec::UnitarySeed { seed: 3 });
        assert!(parse_json_arg::<ConjugationSpec>("{").is_err());
        assert!(parse_json_arg::<ConjugationSpec>("@/nonexistent/x.json").is_err());
    }
}
