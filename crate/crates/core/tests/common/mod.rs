//! Oracles shared by the integration tests. None of them go through the
//! library's residual or section code paths.

#![allow(dead_code)]

use std::f64::consts::PI;

use hardy_conj::hardy::inner_product;
use hardy_conj::{AntilinearOp, CoeffVector, Complex64, LaurentSymbol, LinearOp, ToeplitzSection};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    // Box–Muller, independent of the library's sampler
    let u1: f64 = rng.random::<f64>().max(1e-300);
    let u2: f64 = rng.random();
    let r = (-2.0 * u1.ln()).sqrt();
    Complex64::new(r * (2.0 * PI * u2).cos(), r * (2.0 * PI * u2).sin())
}

pub fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> CoeffVector {
    CoeffVector::new((0..dim).map(|_| gaussian(rng)).collect()).unwrap()
}

pub fn random_symbol(rng: &mut ChaCha8Rng, band: usize) -> LaurentSymbol {
    let pairs: Vec<(i64, Complex64)> = (-(band as i64)..=band as i64)
        .map(|n| (n, gaussian(rng)))
        .collect();
    LaurentSymbol::from_pairs(band, &pairs).unwrap()
}

/// `P(φ f)` truncated to `dim` coefficients, by direct convolution of
/// Laurent coefficients with Taylor coefficients.
pub fn multiply_then_project(symbol: &LaurentSymbol, f: &[Complex64], dim: usize) -> Vec<Complex64> {
    let band = symbol.band() as i64;
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for (m, slot) in out.iter_mut().enumerate() {
        for (k, fk) in f.iter().enumerate() {
            let n = m as i64 - k as i64;
            if n.abs() <= band {
                *slot += symbol.coeff(n) * fk;
            }
        }
    }
    out
}

/// `φ(e^{iθ}) = Σ φ̂(n) e^{inθ}` evaluated term by term.
pub fn evaluate_symbol(symbol: &LaurentSymbol, theta: f64) -> Complex64 {
    symbol
        .pairs()
        .map(|(n, c)| c * Complex64::from_polar(1.0, n as f64 * theta))
        .sum()
}

/// `‖CT − T*C‖_F` assembled column by column from `C(T e_k) − T*(C e_k)`,
/// using only operator application.
pub fn brute_force_residual(op: &AntilinearOp, section: &ToeplitzSection) -> f64 {
    let n = op.dim();
    let t = section.matrix();
    let t_star = t.adjoint();
    let mut sum = 0.0;
    for k in 0..n {
        let e = CoeffVector::monomial(k, n).unwrap();
        let lhs = op.apply(&t.apply(&e).unwrap()).unwrap();
        let rhs = t_star.apply(&op.apply(&e).unwrap()).unwrap();
        sum += lhs.sub(&rhs).unwrap().norm().powi(2);
    }
    sum.sqrt()
}

/// Isometry defect `|⟨Cf, Cg⟩ − ⟨g, f⟩|`.
pub fn isometry_defect(op: &AntilinearOp, f: &CoeffVector, g: &CoeffVector) -> f64 {
    let lhs = inner_product(&op.apply(f).unwrap(), &op.apply(g).unwrap()).unwrap();
    let rhs = inner_product(g, f).unwrap();
    (lhs - rhs).norm()
}

pub fn max_abs_diff(a: &LinearOp, b: &LinearOp) -> f64 {
    a.entries()
        .iter()
        .zip(b.entries())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
