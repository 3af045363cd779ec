//! Conjugation families on truncated H² and the axiom certificate.
//!
//! A conjugation is an antilinear `C` that is isometric (`⟨Cf, Cg⟩ = ⟨g, f⟩`)
//! and involutive (`C² = I`). Writing `C = A·J`, both axioms hold exactly when
//! `A` is unitary and equal to its own transpose.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hardy::{inner_product, AntilinearOp, LinearOp};
use crate::rng;
use crate::{DEFAULT_TOL, UNIMODULAR_TOL};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Accepted unitarity residual for inputs to [`build_from_unitary`].
pub const UNITARY_INPUT_TOL: f64 = 1e-8;

fn normalize_unimodular(
    what: &'static str,
    offset: usize,
    values: Vec<Complex64>,
) -> Result<Vec<Complex64>> {
    values
        .into_iter()
        .enumerate()
        .map(|(i, z)| {
            let modulus = z.norm();
            if !modulus.is_finite() || (modulus - 1.0).abs() > UNIMODULAR_TOL {
                Err(Error::NotUnimodular {
                    what,
                    index: i + offset,
                    modulus,
                })
            } else {
                Ok(z / modulus)
            }
        })
        .collect()
}

fn unimodular_pow(z: Complex64, k: usize) -> Complex64 {
    if k == 0 {
        return ONE;
    }
    z.powu(k as u32)
}

/// `ζ_1, ..., ζ_{N-1}` with `|ζ_j| = 1`. Index 0 is not stored; the `n = 0`
/// factor `ζ_0^0` is always 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnimodularSeq {
    values: Vec<Complex64>,
}

impl UnimodularSeq {
    /// `values[j - 1]` is `ζ_j`. Entries are renormalized to modulus exactly 1.
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        Ok(Self {
            values: normalize_unimodular("zeta", 1, values)?,
        })
    }

    /// `ζ_j = e^{i angles[j-1]}`.
    pub fn from_angles(angles: &[f64]) -> Self {
        Self {
            values: angles.iter().map(|&t| Complex64::from_polar(1.0, t)).collect(),
        }
    }

    /// Constant `ζ_j = e^{i angle}` for `j = 1..dim-1`.
    pub fn constant(angle: f64, dim: usize) -> Self {
        Self::from_angles(&vec![angle; dim.saturating_sub(1)])
    }

    /// `ζ_n = conj(e^{i θ_n / (2n)})`, the sequence whose `C_ζ` is `C_α` with
    /// `α_n = e^{i θ_n}`. `thetas[n-1]` is `θ_n`.
    pub fn from_alpha_angles(thetas: &[f64]) -> Self {
        Self {
            values: thetas
                .iter()
                .enumerate()
                .map(|(i, &t)| Complex64::from_polar(1.0, t / (2.0 * (i + 1) as f64)).conj())
                .collect(),
        }
    }

    /// Truncation dimension `N`, one more than the number of stored entries.
    pub fn dim(&self) -> usize {
        self.values.len() + 1
    }

    /// Largest index `n` for which `ζ_n` is defined.
    pub fn max_index(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// `ζ_n` for `n ≥ 1`.
    pub fn get(&self, n: usize) -> Option<Complex64> {
        n.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    /// `ζ_n^{2n}`, with the `n = 0` term equal to 1.
    pub fn double_power(&self, n: usize) -> Result<Complex64> {
        if n == 0 {
            return Ok(ONE);
        }
        let z = self.get(n).ok_or(Error::SequenceTooShort {
            needed: n,
            available: self.max_index(),
        })?;
        Ok(unimodular_pow(z, 2 * n))
    }

    /// `ζ_n^n`, with the `n = 0` term equal to 1.
    pub fn power(&self, n: usize) -> Result<Complex64> {
        if n == 0 {
            return Ok(ONE);
        }
        let z = self.get(n).ok_or(Error::SequenceTooShort {
            needed: n,
            available: self.max_index(),
        })?;
        Ok(unimodular_pow(z, n))
    }

    /// The first `dim - 1` entries.
    pub fn truncated(&self, dim: usize) -> Result<Self> {
        let need = dim.saturating_sub(1);
        if need > self.values.len() {
            return Err(Error::SequenceTooShort {
                needed: need,
                available: self.values.len(),
            });
        }
        Ok(Self {
            values: self.values[..need].to_vec(),
        })
    }
}

/// `α_0, ..., α_{N-1}` with `|α_m| = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaSeq {
    values: Vec<Complex64>,
}

impl AlphaSeq {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyDimension);
        }
        Ok(Self {
            values: normalize_unimodular("alpha", 0, values)?,
        })
    }

    /// `α_m = e^{i angles[m]}`.
    pub fn from_angles(angles: &[f64]) -> Result<Self> {
        Self::new(angles.iter().map(|&t| Complex64::from_polar(1.0, t)).collect())
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

/// Outcome of checking the conjugation axioms on an antilinear operator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjugationCert {
    pub dim: usize,
    pub trials: usize,
    pub tol: f64,
    /// Max of `|⟨Cf, Cg⟩ − ⟨g, f⟩|` over sampled unit vectors.
    pub isometry_residual: f64,
    /// Max of `‖C(Cf) − f‖ / ‖f‖` over sampled vectors.
    pub involution_residual: f64,
    /// `‖A*A − I‖_F`.
    pub a_unitarity_residual: f64,
    /// `‖A − A^T‖_F`.
    pub a_symmetry_residual: f64,
    pub passed: bool,
}

impl ConjugationCert {
    pub fn isometric(&self) -> bool {
        self.isometry_residual <= self.tol
    }

    pub fn involutive(&self) -> bool {
        self.involution_residual <= self.tol
    }
}

/// The canonical conjugation `J f(z) = conj(f(conj z))`: conjugate every
/// Taylor coefficient.
pub fn build_j(dim: usize) -> Result<AntilinearOp> {
    Ok(AntilinearOp::new(LinearOp::identity(dim)?))
}

/// `C_λ`: `a_n ↦ conj(a_n) conj(λ^n)`.
pub fn build_c_lambda(lambda: Complex64, dim: usize) -> Result<AntilinearOp> {
    let lambda = normalize_unimodular("lambda", 0, vec![lambda])?[0];
    let diag: Vec<Complex64> = (0..dim).map(|n| unimodular_pow(lambda, n).conj()).collect();
    Ok(AntilinearOp::new(LinearOp::diagonal(&diag)?))
}

/// `C_α`: `a_n ↦ conj(a_n) α_n`.
pub fn build_c_alpha(alpha: &AlphaSeq) -> Result<AntilinearOp> {
    Ok(AntilinearOp::new(LinearOp::diagonal(alpha.values())?))
}

/// `C_ζ`: `a_n ↦ conj(a_n) conj(ζ_n^{2n})`, the `n = 0` factor being 1.
pub fn build_c_zeta(zeta: &UnimodularSeq) -> Result<AntilinearOp> {
    let diag = (0..zeta.dim())
        .map(|n| zeta.double_power(n).map(|p| p.conj()))
        .collect::<Result<Vec<_>>>()?;
    Ok(AntilinearOp::new(LinearOp::diagonal(&diag)?))
}

/// The diagonal unitary `U z^n = (ζ_n z)^n`. Its columns are the
/// orthonormal basis `1, ζ_1 z, ζ_2² z², ...`.
pub fn basis_unitary(zeta: &UnimodularSeq) -> Result<LinearOp> {
    let diag = (0..zeta.dim())
        .map(|n| zeta.power(n))
        .collect::<Result<Vec<_>>>()?;
    LinearOp::diagonal(&diag)
}

/// `C = U* J U` for unitary `U`. The returned A-factor is `U^H · conj(U)`.
pub fn build_from_unitary(unitary: &LinearOp) -> Result<AntilinearOp> {
    let residual = unitary.unitarity_residual();
    if residual.is_nan() || residual > UNITARY_INPUT_TOL {
        return Err(Error::NotUnitary { residual });
    }
    let a = unitary.adjoint().matmul(&unitary.conj())?;
    Ok(AntilinearOp::new(a))
}

/// The matrix `B` with `B_{mn} = b_m^{(n)}`, where `C(Σ a_n z^n) = Σ_n Σ_m
/// conj(a_n) b_m^{(n)} z^m`. Column `n` is `A z^n`, so `B` is the A-factor.
pub fn coefficient_matrix(op: &AntilinearOp) -> LinearOp {
    op.a_factor().clone()
}

/// Checks both conjugation axioms on `op`.
///
/// The matrix residuals decide the verdict together with the sampled
/// residuals; `trials` unit-vector pairs are drawn from `seed`.
pub fn verify_conjugation(op: &AntilinearOp, trials: usize, tol: f64, seed: u64) -> ConjugationCert {
    let dim = op.dim();
    let trials = trials.max(1);
    let mut rng = rng::seeded(seed);

    let mut isometry_residual: f64 = 0.0;
    let mut involution_residual: f64 = 0.0;
    for _ in 0..trials {
        let f = rng::unit_vector(&mut rng, dim);
        let g = rng::unit_vector(&mut rng, dim);
        let cf = op.apply(&f).expect("dimension matches");
        let cg = op.apply(&g).expect("dimension matches");
        let lhs = inner_product(&cf, &cg).expect("dimension matches");
        let rhs = inner_product(&g, &f).expect("dimension matches");
        isometry_residual = isometry_residual.max((lhs - rhs).norm());

        let ccf = op.apply(&cf).expect("dimension matches");
        let err = ccf.sub(&f).expect("dimension matches").norm() / f.norm();
        involution_residual = involution_residual.max(err);
    }

    let a = op.a_factor();
    let a_unitarity_residual = a.unitarity_residual();
    let a_symmetry_residual = a.transpose_asymmetry();
    let passed = [
        isometry_residual,
        involution_residual,
        a_unitarity_residual,
        a_symmetry_residual,
    ]
    .iter()
    .all(|&r| r <= tol);

    ConjugationCert {
        dim,
        trials,
        tol,
        isometry_residual,
        involution_residual,
        a_unitarity_residual,
        a_symmetry_residual,
        passed,
    }
}

/// For a diagonal conjugation `C = diag(d)·J`, returns the diagonal unitary
/// `U` with `U_nn = sqrt(conj(d_n))` (principal branch), so that
/// `build_from_unitary(U)` gives back `C`.
pub fn factor_diagonal(op: &AntilinearOp) -> Result<LinearOp> {
    let a = op.a_factor();
    let off_diagonal = a.off_diagonal_norm();
    if off_diagonal > DEFAULT_TOL {
        return Err(Error::NotDiagonal { off_diagonal });
    }
    let diag = a.diag_entries();
    for (index, d) in diag.iter().enumerate() {
        let modulus = d.norm();
        if (modulus - 1.0).abs() > DEFAULT_TOL {
            return Err(Error::NotUnimodular {
                what: "diagonal entry",
                index,
                modulus,
            });
        }
    }
    let roots: Vec<Complex64> = diag
        .iter()
        .map(|d| Complex64::from_polar(1.0, d.conj().arg() / 2.0))
        .collect();
    LinearOp::diagonal(&roots)
}

/// Orthonormalizes the columns of a standard complex Gaussian matrix by
/// modified Gram–Schmidt with one re-orthogonalization pass.
pub fn random_unitary(dim: usize, seed: u64) -> Result<LinearOp> {
    if dim == 0 {
        return Err(Error::EmptyDimension);
    }
    let mut rng = rng::seeded(seed);
    // columns[k][j] is entry (j, k)
    let mut columns: Vec<Vec<Complex64>> = (0..dim)
        .map(|_| (0..dim).map(|_| rng::complex_gaussian(&mut rng)).collect())
        .collect();

    for k in 0..dim {
        let (done, rest) = columns.split_at_mut(k);
        let col = &mut rest[0];
        for _pass in 0..2 {
            for q in done.iter() {
                let proj: Complex64 = q.iter().zip(col.iter()).map(|(a, b)| a.conj() * b).sum();
                for (c, a) in col.iter_mut().zip(q) {
                    *c -= proj * a;
                }
            }
        }
        let norm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for c in col.iter_mut() {
            *c /= norm;
        }
    }
    LinearOp::from_fn(dim, |j, k| columns[k][j])
}

fn random_unitary_2x2(seed: u64) -> [[Complex64; 2]; 2] {
    let u = random_unitary(2, seed).expect("dimension 2");
    [[u.get(0, 0), u.get(0, 1)], [u.get(1, 0), u.get(1, 1)]]
}

/// Unitary of bandwidth at most 2: two staggered layers of 2×2 unitary
/// blocks. Block `b` of each layer depends only on `(seed, layer, b)`, so the
/// leading block of the matrix is the same for every `dim` that contains it.
pub fn banded_unitary(dim: usize, seed: u64) -> Result<LinearOp> {
    let layer = |offset: usize, tag: u64| -> Result<LinearOp> {
        let mut m = LinearOp::identity(dim)?.entries().to_vec();
        let mut start = offset;
        let mut block = 0u64;
        while start + 1 < dim {
            let u = random_unitary_2x2(rng::trial_seed(seed ^ tag, block));
            for r in 0..2 {
                for c in 0..2 {
                    m[(start + r) * dim + start + c] = u[r][c];
                }
            }
            start += 2;
            block += 1;
        }
        LinearOp::new(dim, m)
    };
    let even = layer(0, 0x5eed_0000)?;
    let odd = layer(1, 0x5eed_0001)?;
    odd.matmul(&even)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    use crate::hardy::CoeffVector;

    const ZERO: Complex64 = Complex64::new(0.0, 0.0);

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn v(xs: &[Complex64]) -> CoeffVector {
        CoeffVector::new(xs.to_vec()).unwrap()
    }

    fn max_entry_diff(a: &LinearOp, b: &LinearOp) -> f64 {
        a.entries()
            .iter()
            .zip(b.entries())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn j_conjugates_entrywise() {
        let j = build_j(2).unwrap();
        assert_eq!(
            j.apply(&v(&[c(1.0, 1.0), c(2.0, 0.0)])).unwrap().coeffs(),
            &[c(1.0, -1.0), c(2.0, 0.0)]
        );
        let mut r = rng::seeded(11);
        for _ in 0..100 {
            let f = rng::gaussian_vector(&mut r, 6);
            let jj = build_j(6).unwrap();
            assert_eq!(jj.apply(&jj.apply(&f).unwrap()).unwrap(), f);
        }
        for n in 0..4 {
            let e = CoeffVector::monomial(n, 4).unwrap();
            assert_eq!(build_j(4).unwrap().apply(&e).unwrap(), e);
        }
        assert_eq!(build_j(0), Err(Error::EmptyDimension));
    }

    #[test]
    fn c_lambda_examples() {
        assert_eq!(build_c_lambda(ONE, 5).unwrap(), build_j(5).unwrap());
        let f = v(&[ONE, ONE, ONE]);
        let out = build_c_lambda(-ONE, 3).unwrap().apply(&f).unwrap();
        assert_eq!(out.coeffs(), &[ONE, -ONE, ONE]);
        let e1 = CoeffVector::monomial(1, 3).unwrap();
        let out = build_c_lambda(c(0.0, 1.0), 3).unwrap().apply(&e1).unwrap();
        assert_eq!(out.coeffs(), &[ZERO, c(0.0, -1.0), ZERO]);
        assert!(matches!(
            build_c_lambda(c(1.1, 0.0), 3),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn c_alpha_examples() {
        let lambda = Complex64::from_polar(1.0, 0.7);
        let alpha = AlphaSeq::new((0..6).map(|n| lambda.powu(n).conj()).collect()).unwrap();
        let diff = max_entry_diff(
            build_c_alpha(&alpha).unwrap().a_factor(),
            build_c_lambda(lambda, 6).unwrap().a_factor(),
        );
        assert!(diff < 1e-14);
        let ones = AlphaSeq::new(vec![ONE; 4]).unwrap();
        assert_eq!(build_c_alpha(&ones).unwrap(), build_j(4).unwrap());
        let alpha = AlphaSeq::new(vec![ONE, -ONE]).unwrap();
        let out = build_c_alpha(&alpha).unwrap().apply(&v(&[c(0.0, 1.0), c(0.0, 1.0)])).unwrap();
        assert_eq!(out.coeffs(), &[c(0.0, -1.0), c(0.0, 1.0)]);
        assert_eq!(
            AlphaSeq::new(vec![ONE, c(0.5, 0.0)]),
            Err(Error::NotUnimodular {
                what: "alpha",
                index: 1,
                modulus: 0.5
            })
        );
    }

    #[test]
    fn c_zeta_examples() {
        // constant ζ = e^{iπ/2} is C_{e^{iπ}}: d_n = (-1)^n
        let zeta = UnimodularSeq::constant(PI / 2.0, 6);
        let cz = build_c_zeta(&zeta).unwrap();
        for n in 0..6 {
            let expected = if n % 2 == 0 { ONE } else { -ONE };
            assert!((cz.a_factor().get(n, n) - expected).norm() < 1e-14);
        }
        let thetas = [0.3, -1.2, 2.5, 0.9];
        let zeta = UnimodularSeq::from_alpha_angles(&thetas);
        let mut angles = vec![0.0];
        angles.extend_from_slice(&thetas);
        let alpha = AlphaSeq::from_angles(&angles).unwrap();
        let diff = max_entry_diff(
            build_c_zeta(&zeta).unwrap().a_factor(),
            build_c_alpha(&alpha).unwrap().a_factor(),
        );
        assert!(diff < 1e-12);
        assert_eq!(
            build_c_zeta(&UnimodularSeq::new(vec![ONE; 4]).unwrap()).unwrap(),
            build_j(5).unwrap()
        );
        assert_eq!(
            UnimodularSeq::new(vec![ONE, c(0.0, 2.0)]),
            Err(Error::NotUnimodular {
                what: "zeta",
                index: 2,
                modulus: 2.0
            })
        );
    }

    #[test]
    fn unimodular_inputs_are_renormalized() {
        let z = c(1.0 + 5e-13, 0.0);
        let seq = UnimodularSeq::new(vec![z]).unwrap();
        assert_eq!(seq.get(1).unwrap().norm(), 1.0);
        assert_eq!(seq.get(0), None);
        assert_eq!(seq.double_power(0).unwrap(), ONE);
        assert!(seq.double_power(2).is_err());
    }

    #[test]
    fn from_unitary_reproduces_c_zeta() {
        let zeta = UnimodularSeq::from_angles(&[0.4, -2.0, 1.3, 3.0, -0.1]);
        let u = basis_unitary(&zeta).unwrap();
        let c = build_from_unitary(&u).unwrap();
        let diff = max_entry_diff(c.a_factor(), build_c_zeta(&zeta).unwrap().a_factor());
        assert!(diff < 1e-14);
        assert_eq!(
            build_from_unitary(&LinearOp::identity(4).unwrap()).unwrap(),
            build_j(4).unwrap()
        );
    }

    #[test]
    fn from_unitary_matches_direct_composition() {
        let u = random_unitary(12, 5).unwrap();
        let c = build_from_unitary(&u).unwrap();
        let mut r = rng::seeded(8);
        for _ in 0..10 {
            let f = rng::unit_vector(&mut r, 12);
            let direct = u.adjoint().apply(&u.apply(&f).unwrap().conj()).unwrap();
            let via = c.apply(&f).unwrap();
            assert!(via.sub(&direct).unwrap().norm() < 1e-10);
        }
        assert!(verify_conjugation(&c, 50, 1e-10, 1).passed);
    }

    #[test]
    fn from_unitary_rejects_non_unitary() {
        let m = LinearOp::diagonal(&[ONE, c(2.0, 0.0)]).unwrap();
        match build_from_unitary(&m) {
            Err(Error::NotUnitary { residual }) => assert!((residual - 3.0).abs() < 1e-12),
            other => panic!("expected NotUnitary, got {other:?}"),
        }
    }

    #[test]
    fn coefficient_matrix_examples() {
        let theta = 0.83;
        let lambda = Complex64::from_polar(1.0, theta);
        let b = coefficient_matrix(&build_c_lambda(lambda, 8).unwrap());
        assert!(b.off_diagonal_norm() == 0.0);
        for n in 0..8 {
            let expected = Complex64::from_polar(1.0, n as f64 * theta).conj();
            assert!((b.get(n, n) - expected).norm() < 1e-14);
        }
        let thetas = [1.0, 2.0, -0.5];
        let b = coefficient_matrix(&build_c_zeta(&UnimodularSeq::from_alpha_angles(&thetas)).unwrap());
        for (i, t) in thetas.iter().enumerate() {
            assert!((b.get(i + 1, i + 1) - Complex64::from_polar(1.0, *t)).norm() < 1e-12);
        }
        assert_eq!(
            coefficient_matrix(&build_j(3).unwrap()),
            LinearOp::identity(3).unwrap()
        );
    }

    #[test]
    fn verify_passes_for_zeta_and_fails_for_planted() {
        let zeta = UnimodularSeq::from_angles(&[0.1, 2.2, -1.7, 0.6, 2.9, -3.0, 1.1]);
        let cert = verify_conjugation(&build_c_zeta(&zeta).unwrap(), 100, 1e-10, 4);
        assert!(cert.passed, "{cert:?}");

        let two = AntilinearOp::new(LinearOp::diagonal(&[c(2.0, 0.0)]).unwrap());
        let cert = verify_conjugation(&two, 20, 1e-10, 4);
        assert!(!cert.passed);
        assert!(!cert.isometric());
        assert!(cert.a_unitarity_residual > 1.0);

        let rot = AntilinearOp::new(LinearOp::from_rows(&[vec![ZERO, ONE], vec![-ONE, ZERO]]).unwrap());
        let cert = verify_conjugation(&rot, 20, 1e-10, 4);
        assert!(!cert.passed);
        assert!(!cert.involutive());
        assert!(cert.a_symmetry_residual > 1.0);
        assert!(cert.a_unitarity_residual < 1e-14);
        assert!(cert.isometric());
    }

    #[test]
    fn factor_diagonal_examples() {
        let theta = 0.3;
        let c_lambda = build_c_lambda(Complex64::from_polar(1.0, theta), 8).unwrap();
        let u = factor_diagonal(&c_lambda).unwrap();
        for n in 0..8 {
            let expected = Complex64::from_polar(1.0, n as f64 * theta / 2.0);
            assert!((u.get(n, n) - expected).norm() < 1e-14);
        }
        assert_eq!(
            factor_diagonal(&build_j(3).unwrap()).unwrap(),
            LinearOp::identity(3).unwrap()
        );
        let dense = build_from_unitary(&random_unitary(4, 2).unwrap()).unwrap();
        assert!(matches!(factor_diagonal(&dense), Err(Error::NotDiagonal { .. })));
        let scaled = AntilinearOp::new(LinearOp::diagonal(&[ONE, c(0.5, 0.0)]).unwrap());
        assert!(matches!(
            factor_diagonal(&scaled),
            Err(Error::NotUnimodular { index: 1, .. })
        ));
    }

    #[test]
    fn random_unitary_examples() {
        let u = random_unitary(1, 9).unwrap();
        assert!((u.get(0, 0).norm() - 1.0).abs() < 1e-14);
        assert_eq!(random_unitary(16, 3).unwrap(), random_unitary(16, 3).unwrap());
        assert_ne!(random_unitary(16, 3).unwrap(), random_unitary(16, 4).unwrap());
        for seed in 0..20 {
            assert!(random_unitary(64, seed).unwrap().unitarity_residual() <= 1e-10);
        }
    }

    #[test]
    fn banded_unitary_is_unitary_and_prefix_stable() {
        let small = banded_unitary(10, 3).unwrap();
        let large = banded_unitary(20, 3).unwrap();
        assert!(small.unitarity_residual() < 1e-12);
        assert!(small.bandwidth(1e-12) <= 2);
        for j in 0..8 {
            for k in 0..8 {
                assert_eq!(small.get(j, k), large.get(j, k));
            }
        }
    }
}
