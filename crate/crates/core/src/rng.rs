//! Seeded random inputs. Every generator is a value derived from a `u64`
//! seed; nothing here holds shared state.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::hardy::CoeffVector;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed for trial `index` of a run started with `seed` (splitmix64 finalizer).
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Standard complex Gaussian: real and imaginary parts independent `N(0, 1)`.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Angle uniform on `[-π, π)`.
pub fn angle<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.random_range(-PI..PI)
}

pub fn unimodular<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(1.0, angle(rng))
}

pub fn gaussian_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> CoeffVector {
    CoeffVector::new((0..dim).map(|_| complex_gaussian(rng)).collect())
        .expect("gaussian samples are finite")
}

/// Gaussian vector rescaled to unit norm.
pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> CoeffVector {
    loop {
        let v = gaussian_vector(rng, dim);
        let norm = v.norm();
        if norm > 0.0 {
            return v.scale(Complex64::new(1.0 / norm, 0.0));
        }
    }
}
