//! Coefficient-space model of truncated H².
//!
//! Everything here is an immutable value; operations return new values.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn check_finite(values: &[Complex64]) -> Result<()> {
    match values.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
        Some(index) => Err(Error::NonFinite { index }),
        None => Ok(()),
    }
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

/// Taylor coefficients `a_0, ..., a_{N-1}` of a truncated element of H².
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffVector {
    coeffs: Vec<Complex64>,
}

impl CoeffVector {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyDimension);
        }
        check_finite(&coeffs)?;
        Ok(Self { coeffs })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            coeffs: vec![ZERO; dim.max(1)],
        }
    }

    /// The monomial `z^n` in dimension `dim`.
    pub fn monomial(n: usize, dim: usize) -> Result<Self> {
        if n >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: n + 1,
            });
        }
        let mut coeffs = vec![ZERO; dim];
        coeffs[n] = ONE;
        Ok(Self { coeffs })
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Entrywise complex conjugate; this is `J` in coefficient space.
    pub fn conj(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, alpha: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|z| alpha * z).collect(),
        }
    }

    /// `alpha * self + beta * other`.
    pub fn combine(&self, alpha: Complex64, other: &Self, beta: Complex64) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| alpha * a + beta * b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(ONE, other, -ONE)
    }
}

/// `⟨f, g⟩ = Σ f_n · conj(g_n)`, linear in the first slot.
pub fn inner_product(f: &CoeffVector, g: &CoeffVector) -> Result<Complex64> {
    check_dim(f.dim(), g.dim())?;
    Ok(f.coeffs
        .iter()
        .zip(&g.coeffs)
        .map(|(a, b)| a * b.conj())
        .sum())
}

/// Dense `N×N` complex matrix acting on coefficients in the monomial basis.
///
/// Entries are stored row-major; `get(j, k)` is the coefficient of `z^j` in
/// the image of `z^k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearOp {
    dim: usize,
    entries: Vec<Complex64>,
}

impl LinearOp {
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        check_dim(dim * dim, entries.len())?;
        check_finite(&entries)?;
        Ok(Self { dim, entries })
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            check_dim(dim, row.len())?;
            entries.extend_from_slice(row);
        }
        Self::new(dim, entries)
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        let mut entries = Vec::with_capacity(dim * dim);
        for j in 0..dim {
            for k in 0..dim {
                entries.push(f(j, k));
            }
        }
        Self::new(dim, entries)
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::from_fn(dim, |j, k| if j == k { ONE } else { ZERO })
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::from_fn(dim, |_, _| ZERO)
    }

    pub fn diagonal(diag: &[Complex64]) -> Result<Self> {
        Self::from_fn(diag.len(), |j, k| if j == k { diag[j] } else { ZERO })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn row(&self, row: usize) -> &[Complex64] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn column(&self, col: usize) -> CoeffVector {
        CoeffVector {
            coeffs: (0..self.dim).map(|j| self.get(j, col)).collect(),
        }
    }

    pub fn diag_entries(&self) -> Vec<Complex64> {
        (0..self.dim).map(|j| self.get(j, j)).collect()
    }

    fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().copied().map(f).collect(),
        }
    }

    /// Entrywise conjugate (not the adjoint).
    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                entries.push(self.get(k, j));
            }
        }
        Self { dim: n, entries }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn apply(&self, f: &CoeffVector) -> Result<CoeffVector> {
        check_dim(self.dim, f.dim())?;
        let coeffs = (0..self.dim)
            .map(|j| {
                self.row(j)
                    .iter()
                    .zip(&f.coeffs)
                    .map(|(a, x)| a * x)
                    .sum()
            })
            .collect();
        Ok(CoeffVector { coeffs })
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        check_dim(self.dim, rhs.dim)?;
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for j in 0..n {
            let out = &mut entries[j * n..(j + 1) * n];
            for (l, a) in self.row(j).iter().enumerate() {
                if *a == ZERO {
                    continue;
                }
                for (o, b) in out.iter_mut().zip(rhs.row(l)) {
                    *o += a * b;
                }
            }
        }
        Ok(Self { dim: n, entries })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        check_dim(self.dim, rhs.dim)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius norm of the leading `window × window` block.
    pub fn leading_block_norm(&self, window: usize) -> f64 {
        let w = window.min(self.dim);
        (0..w)
            .map(|j| self.row(j)[..w].iter().map(|z| z.norm_sqr()).sum::<f64>())
            .sum::<f64>()
            .sqrt()
    }

    /// `‖U*U − I‖_F`.
    pub fn unitarity_residual(&self) -> f64 {
        let gram = self
            .adjoint()
            .matmul(self)
            .expect("adjoint has matching dimension");
        let mut sum = 0.0;
        for j in 0..self.dim {
            for k in 0..self.dim {
                let target = if j == k { ONE } else { ZERO };
                sum += (gram.get(j, k) - target).norm_sqr();
            }
        }
        sum.sqrt()
    }

    /// `‖A − A^T‖_F`.
    pub fn transpose_asymmetry(&self) -> f64 {
        let mut sum = 0.0;
        for j in 0..self.dim {
            for k in 0..self.dim {
                sum += (self.get(j, k) - self.get(k, j)).norm_sqr();
            }
        }
        sum.sqrt()
    }

    /// Frobenius norm of everything off the main diagonal.
    pub fn off_diagonal_norm(&self) -> f64 {
        self.bandwidth_mass(0)
    }

    fn bandwidth_mass(&self, band: usize) -> f64 {
        let mut sum = 0.0;
        for j in 0..self.dim {
            for k in 0..self.dim {
                if j.abs_diff(k) > band {
                    sum += self.get(j, k).norm_sqr();
                }
            }
        }
        sum.sqrt()
    }

    /// Smallest `B` such that every entry with `|j − k| > B` has modulus below `tol`.
    pub fn bandwidth(&self, tol: f64) -> usize {
        let mut band = 0;
        for j in 0..self.dim {
            for k in 0..self.dim {
                if self.get(j, k).norm() >= tol {
                    band = band.max(j.abs_diff(k));
                }
            }
        }
        band
    }
}

/// Applies a linear operator: `T f`.
pub fn apply_linear(op: &LinearOp, f: &CoeffVector) -> Result<CoeffVector> {
    op.apply(f)
}

pub fn adjoint(op: &LinearOp) -> LinearOp {
    op.adjoint()
}

pub fn frobenius_norm(op: &LinearOp) -> f64 {
    op.frobenius_norm()
}

/// An antilinear operator in `A·J` form: `C f = A · conj(f)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AntilinearOp {
    a_factor: LinearOp,
}

impl AntilinearOp {
    pub fn new(a_factor: LinearOp) -> Self {
        Self { a_factor }
    }

    pub fn dim(&self) -> usize {
        self.a_factor.dim()
    }

    pub fn a_factor(&self) -> &LinearOp {
        &self.a_factor
    }

    pub fn into_a_factor(self) -> LinearOp {
        self.a_factor
    }

    pub fn apply(&self, f: &CoeffVector) -> Result<CoeffVector> {
        self.a_factor.apply(&f.conj())
    }

    /// The linear operator `C ∘ C = A · conj(A)`.
    pub fn square(&self) -> LinearOp {
        self.a_factor
            .matmul(&self.a_factor.conj())
            .expect("factor is square")
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        self.a_factor.off_diagonal_norm() <= tol
    }
}

/// Applies `C` to `f`: `A · conj(f)`.
pub fn apply_antilinear(op: &AntilinearOp, f: &CoeffVector) -> Result<CoeffVector> {
    op.apply(f)
}
