//! Band-limited Laurent symbols, finite Toeplitz sections, and the
//! `C`-symmetry tests for them.
//!
//! `T` is `C`-symmetric when `CT = T*C`. With `C = A·J` this reads
//! `A·conj(T) = T^H·A`, which is what [`symmetry_residual`] measures. The
//! coefficient criteria ([`check_ko_lee`], [`check_zeta_condition`],
//! [`check_entrywise_condition`]) are checked against that residual.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::conjugations::{build_c_lambda, build_c_zeta, build_from_unitary, random_unitary, UnimodularSeq};
use crate::error::{Error, Result};
use crate::hardy::{AntilinearOp, LinearOp};
use crate::rng::{self, SeededRng};
use crate::UNIMODULAR_TOL;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Trigonometric polynomial `φ(z) = Σ_{|n| ≤ M} φ̂(n) z^n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LaurentSymbol {
    band: usize,
    /// `coeffs[n + band]` is `φ̂(n)`.
    coeffs: Vec<Complex64>,
}

impl LaurentSymbol {
    pub fn zeros(band: usize) -> Self {
        Self {
            band,
            coeffs: vec![ZERO; 2 * band + 1],
        }
    }

    pub fn constant(value: Complex64) -> Self {
        Self {
            band: 0,
            coeffs: vec![value],
        }
    }

    /// Builds a symbol from `(n, φ̂(n))` pairs; unlisted indices are zero.
    pub fn from_pairs(band: usize, pairs: &[(i64, Complex64)]) -> Result<Self> {
        let mut symbol = Self::zeros(band);
        let mut seen = std::collections::BTreeSet::new();
        for &(n, value) in pairs {
            if n.unsigned_abs() as usize > band {
                return Err(Error::OutOfBand { n, band });
            }
            if !seen.insert(n) {
                return Err(Error::DuplicateIndex { n });
            }
            if !value.re.is_finite() || !value.im.is_finite() {
                return Err(Error::NonFinite {
                    index: (n + band as i64) as usize,
                });
            }
            symbol.coeffs[(n + band as i64) as usize] = value;
        }
        Ok(symbol)
    }

    pub fn band(&self) -> usize {
        self.band
    }

    /// `φ̂(n)`, zero outside the band.
    #[inline]
    pub fn coeff(&self, n: i64) -> Complex64 {
        if n.unsigned_abs() as usize > self.band {
            ZERO
        } else {
            self.coeffs[(n + self.band as i64) as usize]
        }
    }

    /// `(n, φ̂(n))` for every `n` in `-M..=M`.
    pub fn pairs(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let band = self.band as i64;
        (-band..=band).map(move |n| (n, self.coeff(n)))
    }

    /// Copy with `φ̂(n)` replaced. `n` must lie in the band.
    pub fn with_coeff(&self, n: i64, value: Complex64) -> Result<Self> {
        if n.unsigned_abs() as usize > self.band {
            return Err(Error::OutOfBand { n, band: self.band });
        }
        let mut out = self.clone();
        out.coeffs[(n + self.band as i64) as usize] = value;
        Ok(out)
    }

    /// `φ(e^{2πik/K})` for `k = 0..K`.
    pub fn sample(&self, samples: usize) -> Vec<Complex64> {
        (0..samples)
            .map(|k| {
                self.pairs()
                    .map(|(n, c)| c * grid_phase(k as i64 * n, samples))
                    .sum()
            })
            .collect()
    }
}

/// `e^{2πi m / K}` with the exponent reduced mod `K` first.
fn grid_phase(m: i64, samples: usize) -> Complex64 {
    let r = m.rem_euclid(samples as i64) as f64;
    Complex64::from_polar(1.0, 2.0 * PI * r / samples as f64)
}

/// `φ̂(n) = (1/K) Σ_k samples_k e^{-2πikn/K}` for `|n| ≤ band`.
///
/// Exact for trigonometric polynomials of degree at most `band` as long as
/// `K ≥ 2·band + 1`; fewer samples alias and are rejected.
pub fn fourier_coefficients(samples: &[Complex64], band: usize) -> Result<LaurentSymbol> {
    let k = samples.len();
    let needed = 2 * band + 1;
    if k < needed {
        return Err(Error::Aliasing {
            samples: k,
            band,
            needed,
        });
    }
    let scale = 1.0 / k as f64;
    let mut symbol = LaurentSymbol::zeros(band);
    for (slot, n) in (-(band as i64)..=band as i64).enumerate() {
        let sum: Complex64 = samples
            .iter()
            .enumerate()
            .map(|(idx, s)| s * grid_phase(-(idx as i64) * n, k))
            .sum();
        symbol.coeffs[slot] = sum * scale;
    }
    Ok(symbol)
}

/// Leading `N×N` block of the Toeplitz matrix of a band-limited symbol.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToeplitzSection {
    matrix: LinearOp,
    source_band: usize,
}

impl ToeplitzSection {
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &LinearOp {
        &self.matrix
    }

    pub fn source_band(&self) -> usize {
        self.source_band
    }
}

/// `T_{jk} = φ̂(j − k)` for `0 ≤ j, k < N`.
pub fn build_toeplitz(symbol: &LaurentSymbol, dim: usize) -> Result<ToeplitzSection> {
    let matrix = LinearOp::from_fn(dim, |j, k| symbol.coeff(j as i64 - k as i64))?;
    Ok(ToeplitzSection {
        matrix,
        source_band: symbol.band(),
    })
}

/// Frobenius norm of the leading `window × window` block of
/// `A·conj(T) − T^H·A`.
pub fn symmetry_residual(op: &AntilinearOp, section: &ToeplitzSection, window: usize) -> Result<f64> {
    let n = op.dim();
    if section.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: section.dim(),
        });
    }
    if window == 0 || window > n {
        return Err(Error::InvalidWindow { window, dim: n });
    }
    let a = op.a_factor();
    let t = section.matrix();
    let mut sum = 0.0;
    for j in 0..window {
        for k in 0..window {
            let mut r = ZERO;
            for l in 0..n {
                r += a.get(j, l) * t.get(l, k).conj() - t.get(l, j).conj() * a.get(l, k);
            }
            sum += r.norm_sqr();
        }
    }
    Ok(sum.sqrt())
}

/// Window on which the residual is free of truncation effects: `N` for a
/// diagonal A-factor, `N − M − B` otherwise, where `B` is the bandwidth of
/// `A` at threshold `1e-12`. Never less than 1.
pub fn default_window(op: &AntilinearOp, band: usize) -> usize {
    let n = op.dim();
    let b = op.a_factor().bandwidth(1e-12);
    if b == 0 {
        n
    } else {
        n.saturating_sub(band + b).max(1)
    }
}

/// Verdict of a coefficient criterion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditionCheck {
    pub holds: bool,
    pub max_violation: f64,
}

impl ConditionCheck {
    fn from_violation(max_violation: f64, tol: f64) -> Self {
        Self {
            holds: max_violation <= tol,
            max_violation,
        }
    }
}

fn check_unimodular(lambda: Complex64) -> Result<()> {
    let modulus = lambda.norm();
    if (modulus - 1.0).abs() > UNIMODULAR_TOL {
        return Err(Error::NotUnimodular {
            what: "lambda",
            index: 0,
            modulus,
        });
    }
    Ok(())
}

/// `φ̂(n) λ^n = φ̂(−n)` for all `n`; scanning `0 ≤ n ≤ M` covers the negative
/// indices too since `|λ| = 1`.
pub fn check_ko_lee(symbol: &LaurentSymbol, lambda: Complex64, tol: f64) -> Result<ConditionCheck> {
    check_unimodular(lambda)?;
    let lambda = lambda / lambda.norm();
    let mut worst: f64 = 0.0;
    let mut power = Complex64::new(1.0, 0.0);
    for n in 0..=symbol.band() as i64 {
        let v = (symbol.coeff(n) * power - symbol.coeff(-n)).norm();
        worst = worst.max(v);
        power *= lambda;
    }
    Ok(ConditionCheck::from_violation(worst, tol))
}

/// One-sided criterion `φ̂(n) ζ_n^{2n} = φ̂(−n)` for `0 ≤ n ≤ M`.
pub fn check_zeta_condition(symbol: &LaurentSymbol, zeta: &UnimodularSeq, tol: f64) -> Result<ConditionCheck> {
    let band = symbol.band();
    if zeta.max_index() < band {
        return Err(Error::SequenceTooShort {
            needed: band,
            available: zeta.max_index(),
        });
    }
    let mut worst: f64 = 0.0;
    for n in 0..=band {
        let p = zeta.double_power(n)?;
        let v = (symbol.coeff(n as i64) * p - symbol.coeff(-(n as i64))).norm();
        worst = worst.max(v);
    }
    Ok(ConditionCheck::from_violation(worst, tol))
}

/// Two-index criterion on the `N×N` section for `C_ζ`:
/// `φ̂(j−k) ζ_j^{2j} = ζ_k^{2k} φ̂(k−j)` for all `0 ≤ j, k < N`.
pub fn check_entrywise_condition(
    symbol: &LaurentSymbol,
    zeta: &UnimodularSeq,
    dim: usize,
    tol: f64,
) -> Result<ConditionCheck> {
    let need = dim.saturating_sub(1);
    if zeta.max_index() < need {
        return Err(Error::SequenceTooShort {
            needed: need,
            available: zeta.max_index(),
        });
    }
    let powers = (0..dim)
        .map(|n| zeta.double_power(n))
        .collect::<Result<Vec<_>>>()?;
    Ok(entrywise_from_powers(symbol, &powers, tol))
}

/// `powers[n]` plays the role of `ζ_n^{2n}`, i.e. `conj(d_n)` for a diagonal
/// A-factor `diag(d)`.
fn entrywise_from_powers(symbol: &LaurentSymbol, powers: &[Complex64], tol: f64) -> ConditionCheck {
    let dim = powers.len();
    let band = symbol.band();
    let mut worst: f64 = 0.0;
    for j in 0..dim {
        let lo = j.saturating_sub(band);
        let hi = (j + band + 1).min(dim);
        for k in lo..hi {
            let d = j as i64 - k as i64;
            let v = (symbol.coeff(d) * powers[j] - powers[k] * symbol.coeff(-d)).norm();
            worst = worst.max(v);
        }
    }
    ConditionCheck::from_violation(worst, tol)
}

/// One-sided criterion for a diagonal A-factor: the `(n, 0)` entries of the
/// two-index criterion, `φ̂(n) conj(d_n) = φ̂(−n) conj(d_0)`.
fn one_sided_from_powers(symbol: &LaurentSymbol, powers: &[Complex64], tol: f64) -> Result<ConditionCheck> {
    let band = symbol.band();
    if powers.len() <= band {
        return Err(Error::BandTooLarge {
            band,
            dim: powers.len(),
        });
    }
    let mut worst: f64 = 0.0;
    for n in 0..=band {
        let v = (symbol.coeff(n as i64) * powers[n] - symbol.coeff(-(n as i64)) * powers[0]).norm();
        worst = worst.max(v);
    }
    Ok(ConditionCheck::from_violation(worst, tol))
}

/// Builds the symbol with `φ̂(−n) = φ̂(n) ζ_n^{2n}` from its non-negative half.
/// Keys of `onesided` must be `≥ 1`; the band is the largest key.
pub fn generate_symmetric_symbol(
    onesided: &BTreeMap<usize, Complex64>,
    constant: Complex64,
    zeta: &UnimodularSeq,
) -> Result<LaurentSymbol> {
    if onesided.contains_key(&0) {
        return Err(Error::InvalidArgument(
            "one-sided coefficients start at n = 1; pass the constant term separately".into(),
        ));
    }
    let band = onesided.keys().next_back().copied().unwrap_or(0);
    if zeta.max_index() < band {
        return Err(Error::SequenceTooShort {
            needed: band,
            available: zeta.max_index(),
        });
    }
    let mut pairs = vec![(0i64, constant)];
    for (&n, &value) in onesided {
        pairs.push((n as i64, value));
        pairs.push((-(n as i64), value * zeta.double_power(n)?));
    }
    LaurentSymbol::from_pairs(band, &pairs)
}

/// A criterion verdict next to the residual verdict.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriterionVerdict {
    pub holds: bool,
    pub max_violation: f64,
    /// `(residual ≤ tol) == holds`.
    pub agrees_with_residual: bool,
}

/// Residual oracle result together with whichever coefficient criteria apply.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub dim: usize,
    pub window: usize,
    pub tol: f64,
    pub residual: f64,
    /// `residual ≤ tol`.
    pub symmetric: bool,
    /// The one-sided criterion `φ̂(n) ζ_n^{2n} = φ̂(−n)` (Ko–Lee for `C_λ`).
    pub one_sided: Option<CriterionVerdict>,
    /// The two-index criterion over the whole section.
    pub entrywise: Option<CriterionVerdict>,
}

impl SymmetryReport {
    pub fn new(
        dim: usize,
        window: usize,
        tol: f64,
        residual: f64,
        one_sided: Option<ConditionCheck>,
        entrywise: Option<ConditionCheck>,
    ) -> Self {
        let symmetric = residual <= tol;
        let verdict = |c: ConditionCheck| CriterionVerdict {
            holds: c.holds,
            max_violation: c.max_violation,
            agrees_with_residual: c.holds == symmetric,
        };
        Self {
            dim,
            window,
            tol,
            residual,
            symmetric,
            one_sided: one_sided.map(verdict),
            entrywise: entrywise.map(verdict),
        }
    }

    /// Whether the one-sided criterion matched the residual; `None` when no
    /// coefficient criterion exists for the conjugation.
    pub fn agree(&self) -> Option<bool> {
        self.one_sided.map(|v| v.agrees_with_residual)
    }
}

/// Runs the residual oracle for `T_φ` on `N×N` and, for diagonal
/// conjugations, both coefficient criteria.
pub fn analyze_symmetry(
    op: &AntilinearOp,
    symbol: &LaurentSymbol,
    tol: f64,
) -> Result<SymmetryReport> {
    let dim = op.dim();
    if symbol.band() >= dim {
        return Err(Error::BandTooLarge {
            band: symbol.band(),
            dim,
        });
    }
    let section = build_toeplitz(symbol, dim)?;
    let window = default_window(op, symbol.band());
    let residual = symmetry_residual(op, &section, window)?;
    let (one_sided, entrywise) = if op.is_diagonal(0.0) {
        let powers: Vec<Complex64> = op.a_factor().diag_entries().iter().map(|d| d.conj()).collect();
        (
            Some(one_sided_from_powers(symbol, &powers, tol)?),
            Some(entrywise_from_powers(symbol, &powers, tol)),
        )
    } else {
        (None, None)
    };
    Ok(SymmetryReport::new(dim, window, tol, residual, one_sided, entrywise))
}

/// How [`explore_problem`] draws the conjugation for each trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExploreMode {
    /// Constant `ζ = e^{iθ/2}`, i.e. `C_λ` with `λ = e^{iθ}`.
    ConstantZeta,
    /// Non-constant `ζ`: either independent uniform angles or
    /// `ζ_n = e^{iθ/2} e^{iπ k_n / n}` with random integers `k_n`.
    RandomZeta,
    /// `C = U*JU` for a dense random unitary; residual only.
    RandomUnitary,
}

/// How the symbol of a trial was drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbolKind {
    /// Independent complex Gaussians scaled by `1/(1+|n|)`.
    Random,
    /// Random non-negative half, negative half from [`generate_symmetric_symbol`].
    Generated,
    /// A generated symbol with `φ̂(−n)` moved by 0.1 for one `n ≥ 1`.
    Perturbed,
}

/// One probe of the explorer; `seed` alone regenerates it via [`explore_trial`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExplorationRecord {
    pub trial: usize,
    pub seed: u64,
    pub mode: ExploreMode,
    pub symbol_kind: SymbolKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<UnimodularSeq>,
    pub symbol: LaurentSymbol,
    pub report: SymmetryReport,
}

/// Magnitude of the perturbation applied to [`SymbolKind::Perturbed`] symbols.
pub const PERTURBATION: f64 = 0.1;

fn random_symbol(rng: &mut SeededRng, band: usize) -> LaurentSymbol {
    let pairs: Vec<(i64, Complex64)> = (-(band as i64)..=band as i64)
        .map(|n| (n, rng::complex_gaussian(rng) / (1.0 + n.unsigned_abs() as f64)))
        .collect();
    LaurentSymbol::from_pairs(band, &pairs).expect("indices within band")
}

fn random_onesided(rng: &mut SeededRng, band: usize) -> (BTreeMap<usize, Complex64>, Complex64) {
    let constant = rng::complex_gaussian(rng);
    let onesided = (1..=band)
        .map(|n| (n, rng::complex_gaussian(rng) / (1.0 + n as f64)))
        .collect();
    (onesided, constant)
}

fn draw_zeta(rng: &mut SeededRng, mode: ExploreMode, dim: usize) -> UnimodularSeq {
    match mode {
        ExploreMode::ConstantZeta => UnimodularSeq::constant(rng::angle(rng) / 2.0, dim),
        _ => {
            if rng.random_bool(0.5) {
                let angles: Vec<f64> = (1..dim).map(|_| rng::angle(rng)).collect();
                UnimodularSeq::from_angles(&angles)
            } else {
                // ζ_n^{2n} = e^{inθ} for every n, yet ζ is not constant
                let half = rng::angle(rng) / 2.0;
                let angles: Vec<f64> = (1..dim)
                    .map(|n| {
                        let k = rng.random_range(0..2 * n as i64) as f64;
                        half + PI * k / n as f64
                    })
                    .collect();
                UnimodularSeq::from_angles(&angles)
            }
        }
    }
}

fn draw_symbol(
    rng: &mut SeededRng,
    band: usize,
    zeta: Option<&UnimodularSeq>,
) -> (SymbolKind, LaurentSymbol) {
    let Some(zeta) = zeta else {
        return (SymbolKind::Random, random_symbol(rng, band));
    };
    match rng.random_range(0..3u8) {
        0 => (SymbolKind::Random, random_symbol(rng, band)),
        pick => {
            let (onesided, constant) = random_onesided(rng, band);
            let symbol = generate_symmetric_symbol(&onesided, constant, zeta)
                .expect("zeta covers the band");
            if pick == 1 {
                (SymbolKind::Generated, symbol)
            } else {
                let n = rng.random_range(1..=band as i64);
                let shift = Complex64::from_polar(PERTURBATION, rng::angle(rng));
                let moved = symbol
                    .with_coeff(-n, symbol.coeff(-n) + shift)
                    .expect("index within band");
                (SymbolKind::Perturbed, moved)
            }
        }
    }
}

/// Regenerates and evaluates a single explorer trial from its seed.
pub fn explore_trial(
    trial: usize,
    seed: u64,
    dim: usize,
    band: usize,
    mode: ExploreMode,
    tol: f64,
) -> Result<ExplorationRecord> {
    if band == 0 || band >= dim {
        return Err(Error::BandTooLarge { band, dim });
    }
    let mut rng = rng::seeded(seed);
    match mode {
        ExploreMode::ConstantZeta | ExploreMode::RandomZeta => {
            let zeta = draw_zeta(&mut rng, mode, dim);
            let (symbol_kind, symbol) = draw_symbol(&mut rng, band, Some(&zeta));
            let op = build_c_zeta(&zeta)?;
            let section = build_toeplitz(&symbol, dim)?;
            let residual = symmetry_residual(&op, &section, dim)?;
            let one_sided = if mode == ExploreMode::ConstantZeta {
                // C_ζ with constant ζ = e^{iθ/2} is C_λ with λ = ζ²
                let lambda = zeta.get(1).expect("dim > band ≥ 1").powu(2);
                check_ko_lee(&symbol, lambda, tol)?
            } else {
                check_zeta_condition(&symbol, &zeta, tol)?
            };
            let entrywise = check_entrywise_condition(&symbol, &zeta, dim, tol)?;
            let report = SymmetryReport::new(dim, dim, tol, residual, Some(one_sided), Some(entrywise));
            Ok(ExplorationRecord {
                trial,
                seed,
                mode,
                symbol_kind,
                zeta: Some(zeta),
                symbol,
                report,
            })
        }
        ExploreMode::RandomUnitary => {
            let unitary = random_unitary(dim, rng.random())?;
            let op = build_from_unitary(&unitary)?;
            let (symbol_kind, symbol) = draw_symbol(&mut rng, band, None);
            let section = build_toeplitz(&symbol, dim)?;
            let residual = symmetry_residual(&op, &section, dim)?;
            let report = SymmetryReport::new(dim, dim, tol, residual, None, None);
            Ok(ExplorationRecord {
                trial,
                seed,
                mode,
                symbol_kind,
                zeta: None,
                symbol,
                report,
            })
        }
    }
}

/// Runs `trials` independent probes; trial `i` uses seed `trial_seed(seed, i)`.
pub fn explore_problem(
    trials: usize,
    dim: usize,
    band: usize,
    seed: u64,
    mode: ExploreMode,
    tol: f64,
) -> Result<Vec<ExplorationRecord>> {
    (0..trials)
        .map(|i| explore_trial(i, rng::trial_seed(seed, i as u64), dim, band, mode, tol))
        .collect()
}

/// Aggregate counts over explorer records.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ExploreSummary {
    pub trials: usize,
    pub symmetric: usize,
    pub one_sided_agreements: usize,
    pub one_sided_disagreements: usize,
    pub entrywise_agreements: usize,
    pub entrywise_disagreements: usize,
    /// Largest residual among trials whose one-sided criterion holds.
    pub max_residual_when_condition_holds: Option<f64>,
    /// Largest residual among trials whose two-index criterion holds.
    pub max_residual_when_entrywise_holds: Option<f64>,
    /// Seeds of trials where the one-sided criterion and the residual disagree.
    pub disagreement_seeds: Vec<u64>,
}

impl ExploreSummary {
    pub fn from_records(records: &[ExplorationRecord]) -> Self {
        let mut s = Self::default();
        for rec in records {
            s.push(rec);
        }
        s
    }

    pub fn push(&mut self, rec: &ExplorationRecord) {
        let r = &rec.report;
        self.trials += 1;
        self.symmetric += r.symmetric as usize;
        if let Some(v) = r.one_sided {
            if v.agrees_with_residual {
                self.one_sided_agreements += 1;
            } else {
                self.one_sided_disagreements += 1;
                self.disagreement_seeds.push(rec.seed);
            }
            if v.holds {
                let m = self.max_residual_when_condition_holds.get_or_insert(0.0);
                *m = m.max(r.residual);
            }
        }
        if let Some(v) = r.entrywise {
            if v.agrees_with_residual {
                self.entrywise_agreements += 1;
            } else {
                self.entrywise_disagreements += 1;
            }
            if v.holds {
                let m = self.max_residual_when_entrywise_holds.get_or_insert(0.0);
                *m = m.max(r.residual);
            }
        }
    }

    /// Fraction of trials with a one-sided verdict that matched the residual.
    pub fn one_sided_agreement_rate(&self) -> Option<f64> {
        let total = self.one_sided_agreements + self.one_sided_disagreements;
        (total > 0).then(|| self.one_sided_agreements as f64 / total as f64)
    }
}

/// `C_λ` plus the matching constant `ζ = λ^{1/2}`, for callers that want both
/// the Ko–Lee and the entrywise criterion for the same operator.
pub fn c_lambda_with_zeta(lambda: Complex64, dim: usize) -> Result<(AntilinearOp, UnimodularSeq)> {
    let op = build_c_lambda(lambda, dim)?;
    Ok((op, UnimodularSeq::constant(lambda.arg() / 2.0, dim)))
}
