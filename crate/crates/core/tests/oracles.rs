mod common;

use std::collections::BTreeMap;
use std::f64::consts::PI;

use common::*;
use rand::Rng;
use hardy_conj::conjugations::{banded_unitary, basis_unitary};
use hardy_conj::toeplitz::{analyze_symmetry, default_window};
use hardy_conj::{
    build_c_lambda, build_c_zeta, build_from_unitary, build_j, build_toeplitz,
    check_entrywise_condition, check_ko_lee, check_zeta_condition, fourier_coefficients,
    generate_symmetric_symbol, random_unitary, symmetry_residual, Complex64, LaurentSymbol,
    UnimodularSeq,
};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[test]
fn toeplitz_section_matches_convolution_on_interior() {
    let mut r = rng(100);
    for trial in 0..50 {
        let band = 1 + trial % 6;
        let dim = 20;
        let symbol = random_symbol(&mut r, band);
        let section = build_toeplitz(&symbol, dim).unwrap();
        let interior = dim - band;
        let mut f: Vec<Complex64> = (0..interior).map(|_| gaussian(&mut r)).collect();
        let expected = multiply_then_project(&symbol, &f, interior);
        f.resize(dim, Complex64::new(0.0, 0.0));
        let got = section
            .matrix()
            .apply(&hardy_conj::CoeffVector::new(f).unwrap())
            .unwrap();
        for (g, e) in got.coeffs().iter().zip(&expected) {
            assert!((g - e).norm() < 1e-12);
        }
    }
}

#[test]
fn toeplitz_section_is_diagonal_constant_and_banded() {
    let mut r = rng(101);
    let symbol = random_symbol(&mut r, 3);
    let t = build_toeplitz(&symbol, 12).unwrap();
    for j in 0..12usize {
        for k in 0..12usize {
            if j.abs_diff(k) > 3 {
                assert_eq!(t.matrix().get(j, k), Complex64::new(0.0, 0.0));
            }
            if j + 1 < 12 && k + 1 < 12 {
                assert_eq!(t.matrix().get(j, k), t.matrix().get(j + 1, k + 1));
            }
        }
    }
}

#[test]
fn fourier_coefficients_invert_pointwise_evaluation() {
    let mut r = rng(102);
    for band in 0..7 {
        let symbol = random_symbol(&mut r, band);
        for samples in [2 * band + 1, 2 * band + 2, 64] {
            let values: Vec<Complex64> = (0..samples)
                .map(|k| evaluate_symbol(&symbol, 2.0 * PI * k as f64 / samples as f64))
                .collect();
            let back = fourier_coefficients(&values, band).unwrap();
            for (n, c) in symbol.pairs() {
                assert!((back.coeff(n) - c).norm() < 1e-12, "band {band} K {samples} n {n}");
            }
        }
    }
}

#[test]
fn residual_agrees_with_operator_application() {
    let mut r = rng(103);
    for seed in 0..10 {
        let dim = 10;
        let symbol = random_symbol(&mut r, 3);
        let section = build_toeplitz(&symbol, dim).unwrap();
        let ops = [
            build_j(dim).unwrap(),
            build_c_lambda(Complex64::from_polar(1.0, 0.4 * seed as f64), dim).unwrap(),
            build_from_unitary(&random_unitary(dim, seed).unwrap()).unwrap(),
        ];
        for op in &ops {
            let fast = symmetry_residual(op, &section, dim).unwrap();
            let slow = brute_force_residual(op, &section);
            assert!((fast - slow).abs() < 1e-11 * (1.0 + slow));
        }
    }
}

#[test]
fn residual_example_violating_ko_lee() {
    // φ̂(1) = φ̂(-1) = 1 against C_i; the brute-force residual is frozen below
    let symbol = LaurentSymbol::from_pairs(1, &[(1, ONE), (-1, ONE)]).unwrap();
    let op = build_c_lambda(I, 16).unwrap();
    let section = build_toeplitz(&symbol, 16).unwrap();
    let slow = brute_force_residual(&op, &section);
    // 30 off-diagonal entries, each of modulus |1 - i| = √2
    assert!((slow - 60f64.sqrt()).abs() < 1e-12);
    let fast = symmetry_residual(&op, &section, 16).unwrap();
    assert!((fast - slow).abs() < 1e-12);
    assert!(fast >= 0.5);
}

#[test]
fn zeta_basis_unitary_is_unitary() {
    let mut r = rng(104);
    for dim in [2, 9, 64] {
        let angles: Vec<f64> = (1..dim).map(|_| r.random_range(-PI..PI)).collect();
        let u = basis_unitary(&UnimodularSeq::from_angles(&angles)).unwrap();
        assert!(u.unitarity_residual() <= 1e-12);
    }
}

#[test]
fn consistency_degeneration_for_constant_zeta() {
    let mut r = rng(105);
    for _ in 0..100 {
        let theta: f64 = r.random_range(-PI..PI);
        let dim = 24;
        let zeta = UnimodularSeq::constant(theta / 2.0, dim);
        let lambda = Complex64::from_polar(1.0, theta);
        let symbol = if r.random_bool(0.5) {
            random_symbol(&mut r, 4)
        } else {
            let onesided: BTreeMap<usize, Complex64> = (1..=4).map(|n| (n, gaussian(&mut r))).collect();
            generate_symmetric_symbol(&onesided, gaussian(&mut r), &zeta).unwrap()
        };
        let a = check_zeta_condition(&symbol, &zeta, 1e-10).unwrap().holds;
        let b = check_entrywise_condition(&symbol, &zeta, dim, 1e-10).unwrap().holds;
        let c = check_ko_lee(&symbol, lambda, 1e-10).unwrap().holds;
        assert!(a == b && b == c);
    }
}

#[test]
fn generated_symbols_have_exact_residual_when_entrywise_holds() {
    let mut r = rng(106);
    let mut seen = 0;
    for _ in 0..200 {
        let dim = 16;
        // multiplicative ζ_n^{2n} = e^{inθ} with non-constant ζ
        let half: f64 = r.random_range(-PI..PI) / 2.0;
        let angles: Vec<f64> = (1..dim)
            .map(|n| half + PI * r.random_range(0..2 * n) as f64 / n as f64)
            .collect();
        let zeta = UnimodularSeq::from_angles(&angles);
        let onesided: BTreeMap<usize, Complex64> = (1..=3).map(|n| (n, gaussian(&mut r))).collect();
        let symbol = generate_symmetric_symbol(&onesided, gaussian(&mut r), &zeta).unwrap();
        let entry = check_entrywise_condition(&symbol, &zeta, dim, 1e-10).unwrap();
        if entry.holds {
            seen += 1;
            let t = build_toeplitz(&symbol, dim).unwrap();
            let res = symmetry_residual(&build_c_zeta(&zeta).unwrap(), &t, dim).unwrap();
            assert!(res <= 1e-12, "residual {res}");
        }
    }
    assert!(seen > 100);
}

#[test]
fn one_sided_condition_is_not_sufficient_for_generic_zeta() {
    // ζ_1 = 1, ζ_2 = e^{iπ/8}: the one-sided condition holds for the generated
    // symbol, but entry (2, 1) needs ζ_2^4 φ̂(1) = ζ_1^2 φ̂(-1).
    let zeta = UnimodularSeq::from_angles(&[0.0, PI / 8.0, 0.0]);
    let symbol = generate_symmetric_symbol(&BTreeMap::from([(1, ONE)]), ONE, &zeta).unwrap();
    assert!(check_zeta_condition(&symbol, &zeta, 1e-10).unwrap().holds);
    let entry = check_entrywise_condition(&symbol, &zeta, 4, 1e-10).unwrap();
    assert!(!entry.holds);
    // |e^{iπ/2} - 1| = √2
    assert!((entry.max_violation - 2f64.sqrt()).abs() < 1e-12);
    let report = analyze_symmetry(&build_c_zeta(&zeta).unwrap(), &symbol, 1e-10).unwrap();
    assert!(!report.symmetric);
    assert_eq!(report.agree(), Some(false));
    assert!(report.entrywise.unwrap().agrees_with_residual);
}

#[test]
fn banded_conjugation_residual_is_truncation_stable() {
    let mut r = rng(107);
    for seed in 0..5 {
        let band = 3;
        let symbol = random_symbol(&mut r, band);
        let small = build_from_unitary(&banded_unitary(24, seed).unwrap()).unwrap();
        let large = build_from_unitary(&banded_unitary(48, seed).unwrap()).unwrap();
        let window = default_window(&small, band);
        let b = small.a_factor().bandwidth(1e-12);
        assert!(b > 0 && b <= 4);
        assert_eq!(window, 24 - band - b);
        let res_small = symmetry_residual(&small, &build_toeplitz(&symbol, 24).unwrap(), window).unwrap();
        let res_large = symmetry_residual(&large, &build_toeplitz(&symbol, 48).unwrap(), window).unwrap();
        assert!((res_small - res_large).abs() <= 1e-10);
    }
}

#[test]
fn ko_lee_violation_lower_bounds_residual() {
    let mut r = rng(108);
    for _ in 0..50 {
        let lambda = Complex64::from_polar(1.0, r.random_range(-PI..PI));
        let band = r.random_range(1..=8usize);
        let zeta = UnimodularSeq::constant(lambda.arg() / 2.0, band + 1);
        let onesided: BTreeMap<usize, Complex64> = (1..=band).map(|n| (n, gaussian(&mut r))).collect();
        let symbol = generate_symmetric_symbol(&onesided, gaussian(&mut r), &zeta).unwrap();
        let n = r.random_range(1..=band as i64);
        let moved = symbol.with_coeff(-n, symbol.coeff(-n) + 0.1).unwrap();
        let t = build_toeplitz(&moved, 64).unwrap();
        let res = symmetry_residual(&build_c_lambda(lambda, 64).unwrap(), &t, 64).unwrap();
        let k = check_ko_lee(&moved, lambda, 1e-10).unwrap();
        assert!(!k.holds && res >= 0.1);
        assert!((k.max_violation - 0.1).abs() < 1e-12);
    }
}
