//! Stable JSON interchange formats, `schema_version = 1`.
//!
//! Complex numbers are `{"re": .., "im": ..}`; inputs may also use
//! `{"theta": t}` for `e^{it}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::conjugations::{
    build_c_alpha, build_c_lambda, build_c_zeta, build_from_unitary, build_j, random_unitary,
    AlphaSeq, UnimodularSeq,
};
use crate::error::{Error, Result};
use crate::hardy::AntilinearOp;
use crate::toeplitz::LaurentSymbol;

pub const SCHEMA_VERSION: u32 = 1;

/// A complex number as written in JSON.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonComplex {
    Cartesian { re: f64, im: f64 },
    Polar { theta: f64 },
}

impl JsonComplex {
    pub fn value(self) -> Complex64 {
        match self {
            JsonComplex::Cartesian { re, im } => Complex64::new(re, im),
            JsonComplex::Polar { theta } => Complex64::from_polar(1.0, theta),
        }
    }
}

impl From<Complex64> for JsonComplex {
    fn from(z: Complex64) -> Self {
        JsonComplex::Cartesian { re: z.re, im: z.im }
    }
}

/// A unimodular sequence, explicit or generated from angles.
///
/// For `ζ` the first listed entry is `ζ_1`; for `α` it is `α_0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeqSpec {
    Values(Vec<JsonComplex>),
    /// Every entry equal to `e^{iθ}`.
    ConstantTheta(f64),
    /// Entry `e^{iθ}` per listed angle.
    Thetas(Vec<f64>),
    /// `ζ_n = conj(e^{iθ_n/(2n)})`, so that `C_ζ = C_α` with `α_n = e^{iθ_n}`.
    /// Only meaningful for `ζ`.
    AlphaThetas(Vec<f64>),
}

impl SeqSpec {
    fn values(&self, count: usize, offset: usize) -> Result<Vec<Complex64>> {
        let take = |len: usize| -> Result<()> {
            if len < count {
                Err(Error::SequenceTooShort {
                    needed: count,
                    available: len,
                })
            } else {
                Ok(())
            }
        };
        match self {
            SeqSpec::Values(v) => {
                take(v.len())?;
                Ok(v[..count].iter().map(|z| z.value()).collect())
            }
            SeqSpec::ConstantTheta(t) => Ok(vec![Complex64::from_polar(1.0, *t); count]),
            SeqSpec::Thetas(t) => {
                take(t.len())?;
                Ok(t[..count].iter().map(|&a| Complex64::from_polar(1.0, a)).collect())
            }
            SeqSpec::AlphaThetas(t) => {
                if offset != 1 {
                    return Err(Error::InvalidArgument(
                        "alpha_thetas generates a zeta sequence, not alpha".into(),
                    ));
                }
                take(t.len())?;
                Ok(UnimodularSeq::from_alpha_angles(&t[..count]).values().to_vec())
            }
        }
    }

    /// `ζ_1, ..., ζ_{dim-1}`.
    pub fn to_zeta(&self, dim: usize) -> Result<UnimodularSeq> {
        UnimodularSeq::new(self.values(dim.saturating_sub(1), 1)?)
    }

    /// `α_0, ..., α_{dim-1}`.
    pub fn to_alpha(&self, dim: usize) -> Result<AlphaSeq> {
        AlphaSeq::new(self.values(dim, 0)?)
    }
}

/// Which conjugation to build.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ConjugationSpec {
    J,
    Lambda { lambda: JsonComplex },
    Alpha { alpha: SeqSpec },
    Zeta { zeta: SeqSpec },
    /// `U*JU` with `U = random_unitary(N, seed)`.
    UnitarySeed { seed: u64 },
}

impl ConjugationSpec {
    pub fn build(&self, dim: usize) -> Result<AntilinearOp> {
        match self {
            ConjugationSpec::J => build_j(dim),
            ConjugationSpec::Lambda { lambda } => build_c_lambda(lambda.value(), dim),
            ConjugationSpec::Alpha { alpha } => build_c_alpha(&alpha.to_alpha(dim)?),
            ConjugationSpec::Zeta { zeta } => {
                if dim == 0 {
                    return Err(Error::EmptyDimension);
                }
                build_c_zeta(&zeta.to_zeta(dim)?)
            }
            ConjugationSpec::UnitarySeed { seed } => build_from_unitary(&random_unitary(dim, *seed)?),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub n: i64,
    pub re: f64,
    pub im: f64,
}

/// On-disk Laurent symbol.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymbolFile {
    pub schema_version: u32,
    pub band: usize,
    pub coeffs: Vec<CoeffEntry>,
}

impl SymbolFile {
    /// Lists every `n` in `-M..=M`, in increasing order.
    pub fn from_symbol(symbol: &LaurentSymbol) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            band: symbol.band(),
            coeffs: symbol
                .pairs()
                .map(|(n, z)| CoeffEntry { n, re: z.re, im: z.im })
                .collect(),
        }
    }

    pub fn to_symbol(&self) -> Result<LaurentSymbol> {
        check_schema(self.schema_version)?;
        let pairs: Vec<(i64, Complex64)> = self
            .coeffs
            .iter()
            .map(|e| (e.n, Complex64::new(e.re, e.im)))
            .collect();
        LaurentSymbol::from_pairs(self.band, &pairs)
    }
}

pub fn check_schema(version: u32) -> Result<()> {
    if version == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "unsupported schema_version {version}, expected {SCHEMA_VERSION}"
        )))
    }
}

/// Output of every command: the inputs that reproduce it, and the results.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema_version: u32,
    pub command: String,
    pub inputs: serde_json::Value,
    pub results: serde_json::Value,
    /// Wall-clock time; only present when requested, since it breaks
    /// byte-for-byte reproducibility.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}
