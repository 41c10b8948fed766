// SPDX-License-Identifier: Apache-2.0

//! Reference tables and independent reference implementations shared by the
//! integration tests and the acceptance runner.

#![allow(dead_code)]

use mtz_core::{Monomial, ZbarPolynomial, ZetaPolynomial};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// (n, factor, [(monomial, coefficient)])
pub type Table = &'static [(usize, i64, &'static [(&'static [u32], i64)])];

/// ζ̄ₙ = factor · Σ coeff · Π ζ(args), n = 1..=10.
pub const CLOSED_FORMS: Table = &[
    (1, 1, &[]),
    (2, 2, &[(&[2], 1)]),
    (3, 12, &[(&[3], 1)]),
    (4, 12, &[(&[2, 2], 1), (&[4], 7)]),
    (5, 240, &[(&[2, 3], 1), (&[5], 3)]),
    (
        6,
        120,
        &[(&[2, 2, 2], 1), (&[3, 3], 12), (&[2, 4], 21), (&[6], 62)],
    ),
    (
        7,
        5040,
        &[(&[2, 2, 3], 1), (&[3, 4], 7), (&[2, 5], 6), (&[7], 18)],
    ),
    (
        8,
        1680,
        &[
            (&[2, 2, 2, 2], 1),
            (&[2, 3, 3], 48),
            (&[2, 2, 4], 42),
            (&[4, 4], 147),
            (&[3, 5], 288),
            (&[2, 6], 248),
            (&[8], 762),
        ],
    ),
    (
        9,
        120960,
        &[
            (&[2, 2, 2, 3], 1),
            (&[3, 3, 3], 4),
            (&[2, 3, 4], 21),
            (&[2, 2, 5], 9),
            (&[4, 5], 63),
            (&[3, 6], 62),
            (&[2, 7], 54),
            (&[9], 170),
        ],
    ),
    (
        10,
        30240,
        &[
            (&[2, 2, 2, 2, 2], 1),
            (&[2, 2, 3, 3], 120),
            (&[2, 2, 2, 4], 70),
            (&[3, 3, 4], 840),
            (&[2, 4, 4], 735),
            (&[2, 3, 5], 1440),
            (&[5, 5], 2160),
            (&[2, 2, 6], 620),
            (&[4, 6], 4340),
            (&[3, 7], 4320),
            (&[2, 8], 3810),
            (&[10], 12264),
        ],
    ),
];

/// scale · ζ(n) = Σ coeff · Π ζ̄(args), n = 2..=10.
pub const INVERSIONS: Table = &[
    (2, 2, &[(&[2], 1)]),
    (3, 12, &[(&[3], 1)]),
    (4, 84, &[(&[4], 1), (&[2, 2], -3)]),
    (5, 720, &[(&[5], 1), (&[2, 3], -10)]),
    (
        6,
        7440,
        &[(&[6], 1), (&[2, 4], -15), (&[3, 3], -10), (&[2, 2, 2], 30)],
    ),
    (
        7,
        90720,
        &[(&[7], 1), (&[2, 5], -21), (&[3, 4], -35), (&[2, 2, 3], 210)],
    ),
    (
        8,
        1280160,
        &[
            (&[8], 1),
            (&[2, 6], -28),
            (&[3, 5], -56),
            (&[4, 4], -35),
            (&[2, 2, 4], 420),
            (&[2, 3, 3], 560),
            (&[2, 2, 2, 2], -630),
        ],
    ),
    (
        9,
        20563200,
        &[
            (&[9], 1),
            (&[2, 7], -36),
            (&[3, 6], -84),
            (&[4, 5], -126),
            (&[2, 2, 5], 756),
            (&[3, 3, 3], 560),
            (&[2, 2, 2, 3], -7560),
            (&[2, 3, 4], 2520),
        ],
    ),
    (
        10,
        370863360,
        &[
            (&[10], 1),
            (&[2, 8], -45),
            (&[3, 7], -120),
            (&[4, 6], -210),
            (&[2, 2, 6], 1260),
            (&[5, 5], -126),
            (&[2, 4, 4], 3150),
            (&[3, 3, 4], 4200),
            (&[2, 2, 2, 4], -18900),
            (&[2, 2, 3, 3], -37800),
            (&[2, 2, 2, 2, 2], 22680),
            (&[2, 3, 5], 5040),
        ],
    ),
];

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn golden_closed_form(n: usize) -> ZetaPolynomial {
    let (_, factor, terms) = CLOSED_FORMS.iter().find(|e| e.0 == n).expect("tabulated n");
    ZetaPolynomial::from_terms(
        terms
            .iter()
            .map(|(a, c)| (Monomial::new(a.to_vec()), int(factor * c))),
    )
}

pub fn golden_inversion(n: usize) -> (BigRational, ZbarPolynomial) {
    let (_, scale, terms) = INVERSIONS.iter().find(|e| e.0 == n).expect("tabulated n");
    let rhs = ZbarPolynomial::from_terms(terms.iter().map(|(a, c)| (Monomial::new(a.to_vec()), int(*c))));
    (int(*scale), rhs)
}

/// Bernoulli numbers B₀ … B_n (B₁ = -1/2) from Σ_{j<m+1} C(m+1,j) B_j = 0.
pub fn bernoulli(n: usize) -> Vec<BigRational> {
    let mut b = vec![BigRational::one()];
    for m in 1..=n {
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (j, bj) in b.iter().enumerate() {
            acc += bj * BigRational::from_integer(binom.clone());
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// ζ(2k)/π^(2k) = (-1)^(k+1) B_{2k} 2^(2k-1) / (2k)!
pub fn zeta_even_over_pi_power(k: usize) -> BigRational {
    let b = bernoulli(2 * k)[2 * k].clone();
    let fact: BigInt = (1..=2 * k as u64).map(BigInt::from).product();
    let val = b * BigRational::new(BigInt::one() << (2 * k - 1), fact);
    if k.is_multiple_of(2) {
        -val
    } else {
        val
    }
}

/// Coefficients of (x)_s = x(x+1)⋯(x+s-1) by multiplying the linear factors.
pub fn rising_factorial_coeffs(s: usize) -> Vec<BigUint> {
    let mut poly = vec![BigUint::one()];
    for j in 0..s {
        let mut next = vec![BigUint::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] += c * BigUint::from(j);
        }
        poly = next;
    }
    poly
}

pub fn poly_square(p: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); 2 * p.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in p.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Σ over ordered compositions s = a₁ + … + a_k with all aᵢ ≥ 1 of 1/(a₁⋯a_k).
pub fn composition_sum(k: usize, s: usize) -> BigRational {
    fn rec(k: usize, s: usize) -> BigRational {
        if k == 0 {
            return if s == 0 {
                BigRational::one()
            } else {
                BigRational::zero()
            };
        }
        (1..=s.saturating_sub(k - 1))
            .map(|a| rec(k - 1, s - a) / BigRational::from_integer(BigInt::from(a)))
            .fold(BigRational::zero(), |x, y| x + y)
    }
    rec(k, s)
}
