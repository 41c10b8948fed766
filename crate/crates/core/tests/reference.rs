// SPDX-License-Identifier: Apache-2.0

//! Library routines against independently written reference computations.

mod common;

use mtz_core::combinatorics::{
    c, h, sigma_partial, stirling1_unsigned, symmetrization_identity_check, StirlingRow,
};
use mtz_core::constants::{pi_const, zeta_int};
use mtz_core::oracle::{brute_force, brute_force_exact, orbit_reduced_exact, sigma_sum_eval};
use mtz_core::{closed_form, BigFloat, WeightVector};
use num_bigint::BigUint;
use num_traits::ToPrimitive;

#[test]
fn even_zeta_from_bernoulli() {
    let digits = 50;
    let pi = pi_const(digits + 5);
    let tol = BigFloat::parse("1e-45", digits).unwrap();
    for k in 1..=5 {
        let exact =
            BigFloat::from_rational(&common::zeta_even_over_pi_power(k), digits + 5).mul(&pi.powi(2 * k));
        let z = zeta_int(2 * k as u32, digits).unwrap();
        assert!(z.rel_diff(&exact) < tol, "k={k}");
    }
}

#[test]
fn pochhammer_square_coefficients() {
    for s in 0..=60 {
        let sq = common::poly_square(&common::rising_factorial_coeffs(s));
        for (n, coeff) in sq.iter().enumerate() {
            assert_eq!(c(n, s), *coeff, "n={n} s={s}");
        }
    }
}

#[test]
fn stirling_matches_rising_factorial() {
    for s in 0..=30 {
        let poly = common::rising_factorial_coeffs(s);
        for (k, coeff) in poly.iter().enumerate() {
            assert_eq!(stirling1_unsigned(s, k), *coeff);
        }
    }
}

#[test]
fn row_sums_are_factorials() {
    let mut fact = BigUint::from(1u32);
    for row in StirlingRow::rows().take(201) {
        if row.index() > 0 {
            fact *= row.index();
        }
        assert_eq!(row.row_sum(), fact, "s={}", row.index());
    }
}

#[test]
fn symmetrization_exhaustive() {
    for s in 0..=40 {
        for n in 0..=2 * s {
            assert!(symmetrization_identity_check(n, s), "n={n} s={s}");
        }
    }
}

#[test]
fn harmonic_sums_equal_composition_sums() {
    for s in 1..=12 {
        for n in 1..=s {
            assert_eq!(h(n, s), common::composition_sum(n, s), "n={n} s={s}");
        }
    }
}

#[test]
fn stirling_zeta_series_converges() {
    // Σ_{s≤S} ⦋s,p⦌/(s·s!) increases towards ζ(p+1)
    for p in 1..=5usize {
        let target = zeta_int(p as u32 + 1, 30).unwrap().to_f64();
        let mut fact = BigUint::from(1u32);
        let mut acc = 0.0f64;
        let mut errors = vec![];
        for row in StirlingRow::rows().skip(1).take(400) {
            let s = row.index();
            fact *= s;
            let ratio = num_rational::BigRational::new(row.entry(p).into(), (fact.clone() * s).into());
            acc += ratio.to_f64().unwrap();
            if [100, 200, 400].contains(&s) {
                errors.push(target - acc);
            }
        }
        assert!(
            errors.windows(2).all(|w| 0.0 < w[1] && w[1] < w[0]),
            "p={p}: {errors:?}"
        );
        assert!(errors[2] < 0.7 * errors[0], "p={p}: {errors:?}");
    }
}

#[test]
fn sigma_one_one_double_sum() {
    // σ(1,1) = Σ_s (1/s)·2H_{s-1}/s
    let terms = 5000u64;
    let mut acc = 0.0f64;
    let mut harmonic = 0.0f64;
    for s in 1..=terms {
        let sf = s as f64;
        acc += 2.0 * harmonic / (sf * sf);
        harmonic += 1.0 / sf;
    }
    let v = sigma_partial(1, 1, terms, 30).unwrap().to_f64();
    assert!((v - acc).abs() < 1e-12 * acc);
    let two_zeta3 = 2.0 * zeta_int(3, 30).unwrap().to_f64();
    assert!(v < two_zeta3 && two_zeta3 - v < 5e-3);
}

#[test]
fn sign_orbits_exact() {
    for (n, m) in [(2, 30), (3, 30), (4, 8)] {
        let w = WeightVector::ones(n).unwrap();
        assert_eq!(
            brute_force_exact(&w, m).unwrap(),
            orbit_reduced_exact(&w, m).unwrap(),
            "n={n}"
        );
    }
    let w = WeightVector::new(vec![2, 1, 3]).unwrap();
    assert_eq!(
        brute_force_exact(&w, 12).unwrap(),
        orbit_reduced_exact(&w, 12).unwrap()
    );
}

#[test]
fn two_oracles_approach_closed_form_from_below() {
    for n in 2..=5 {
        let exact = closed_form(n).eval_numeric(30).unwrap().to_f64();
        let sigma = sigma_sum_eval(n, 200_000, 30).unwrap().to_f64();
        let cutoff = [0, 0, 4000, 300, 40, 20][n];
        let lattice = brute_force(&WeightVector::ones(n).unwrap(), cutoff)
            .unwrap()
            .value
            .to_f64();
        assert!(sigma < exact && lattice < exact, "n={n}");
        assert!((exact - sigma) / exact < 0.05, "n={n}: sigma {sigma} vs {exact}");
        assert!(
            (exact - lattice) / exact < 0.7,
            "n={n}: lattice {lattice} vs {exact}"
        );
    }
}
