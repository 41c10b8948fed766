// SPDX-License-Identifier: Apache-2.0

//! Truncated power series over the zeta algebra and the closed form of ζ̄ₙ.
//!
//! The generating function of ζ̄ₙ/n! is Γ(1-2x)/Γ(1-x)², whose logarithm is
//!
//! ```text
//! f(x) = Σ_{k≥2} (2^k - 2) ζ(k)/k · x^k
//! ```
//!
//! (the Euler-Mascheroni terms cancel, so f has no constant or linear term).
//! ζ̄ₙ is therefore n! times the x^n coefficient of exp f, which equals the
//! complete Bell polynomial Bₙ(f'(0), …, f⁽ⁿ⁾(0)). Both routes are
//! implemented: [`series_exp`] uses the derivative recurrence G' = F'G and
//! [`closed_form`] uses the Bell recurrence, so each checks the other.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{Basis, EtaPolynomial, Polynomial, Zeta, ZetaPolynomial};
use crate::constants::gamma_int;
use crate::Error;

/// Coefficients of x⁰ … x^order; the order never grows implicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries<B: Basis = Zeta> {
    coeffs: Vec<Polynomial<B>>,
}

impl<B: Basis> FormalSeries<B> {
    /// Series with the given coefficients; an empty list means the zero
    /// series of order 0.
    pub fn new(mut coeffs: Vec<Polynomial<B>>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Polynomial::zero());
        }
        FormalSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        FormalSeries {
            coeffs: vec![Polynomial::zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Polynomial<B> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Polynomial<B>] {
        &self.coeffs
    }
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn two_pow_minus_two(k: usize) -> BigInt {
    (BigInt::one() << k) - 2
}

/// f(x) = ln Γ(1-2x) - 2 ln Γ(1-x) truncated at x^order.
pub fn f_series(order: usize) -> FormalSeries {
    let coeffs = (0..=order)
        .map(|k| {
            if k < 2 {
                ZetaPolynomial::zero()
            } else {
                ZetaPolynomial::var(k as u32).scale(&BigRational::new(two_pow_minus_two(k), BigInt::from(k)))
            }
        })
        .collect();
    FormalSeries { coeffs }
}

/// exp(F) to the order of `f`, via n·Gₙ = Σ_{k=1}^{n} k·Fₖ·G_{n-k}.
pub fn series_exp<B: Basis>(f: &FormalSeries<B>) -> Result<FormalSeries<B>, Error> {
    if !f.coeffs[0].is_zero() {
        return Err(Error::NonZeroConstantTerm);
    }
    let order = f.order();
    let mut g: Vec<Polynomial<B>> = Vec::with_capacity(order + 1);
    g.push(Polynomial::one());
    for n in 1..=order {
        let mut acc = Polynomial::zero();
        for k in 1..=n {
            if f.coeffs[k].is_zero() {
                continue;
            }
            let t = &f.coeffs[k] * &g[n - k];
            acc = &acc + &t.scale(&int(k as u64));
        }
        g.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(n))));
    }
    Ok(FormalSeries { coeffs: g })
}

/// B₀ … Bₙ for arguments `c[0] = c₁, c[1] = c₂, …`, via
/// B_{m+1} = Σ_{k=0}^{m} C(m,k)·B_{m-k}·c_{k+1}.
///
/// Panics if fewer than `n` arguments are supplied.
pub fn bell_sequence<B: Basis>(c: &[Polynomial<B>], n: usize) -> Vec<Polynomial<B>> {
    assert!(c.len() >= n, "need {n} Bell arguments, got {}", c.len());
    let mut b: Vec<Polynomial<B>> = Vec::with_capacity(n + 1);
    b.push(Polynomial::one());
    for m in 0..n {
        let mut acc = Polynomial::zero();
        for k in 0..=m {
            if c[k].is_zero() || b[m - k].is_zero() {
                continue;
            }
            let coef = int(binomial(BigInt::from(m), BigInt::from(k)));
            acc = &acc + &(&b[m - k] * &c[k]).scale(&coef);
        }
        b.push(acc);
    }
    b
}

/// Complete exponential Bell polynomial Bₙ(c₁, …, cₙ).
pub fn bell_complete<B: Basis>(c: &[Polynomial<B>], n: usize) -> Polynomial<B> {
    bell_sequence(c, n).pop().expect("non-empty sequence")
}

/// f⁽ᵏ⁾(0): zero for k = 1, (2^k - 2)·Γ(k)·ζ(k) for k ≥ 2.
pub fn f_derivative_at_zero(k: usize) -> ZetaPolynomial {
    if k < 2 {
        return ZetaPolynomial::zero();
    }
    let gamma = BigInt::from(gamma_int(k as i64).expect("k >= 2"));
    ZetaPolynomial::var(k as u32).scale(&int(two_pow_minus_two(k) * gamma))
}

fn derivative_arguments(n: usize) -> Vec<ZetaPolynomial> {
    (1..=n).map(f_derivative_at_zero).collect()
}

/// ζ̄ₙ as an exact polynomial in zeta values (B₀ = 1 for n = 0).
pub fn closed_form(n: usize) -> ZetaPolynomial {
    bell_complete(&derivative_arguments(n), n)
}

/// ζ̄₀ … ζ̄_{n_max} in a single Bell recurrence.
pub fn closed_forms(n_max: usize) -> Vec<ZetaPolynomial> {
    bell_sequence(&derivative_arguments(n_max), n_max)
}

/// n!·[xⁿ] exp(f(x)), the series-exponential route to ζ̄ₙ.
pub fn closed_form_via_exp(n: usize) -> ZetaPolynomial {
    let g = series_exp(&f_series(n)).expect("f has no constant term");
    let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
    g.coeff(n).scale(&int(fact))
}

/// ζ̄ₙ = Bₙ(0, 2²Γ(2)η(2), …, 2ⁿΓ(n)η(n)) over eta values.
pub fn closed_form_eta(n: usize) -> EtaPolynomial {
    let args: Vec<EtaPolynomial> = (1..=n)
        .map(|k| {
            if k < 2 {
                EtaPolynomial::zero()
            } else {
                let gamma = BigInt::from(gamma_int(k as i64).expect("k >= 2"));
                EtaPolynomial::var(k as u32).scale(&int((BigInt::one() << k) * gamma))
            }
        })
        .collect();
    bell_complete(&args, n)
}

/// Substitutes η(k) = (1 - 2^(1-k))·ζ(k).
pub fn eta_to_zeta(p: &EtaPolynomial) -> ZetaPolynomial {
    p.substitute(|k| {
        let pow = BigInt::one() << (k - 1);
        let factor = BigRational::new(&pow - 1, pow);
        ZetaPolynomial::var(k).scale(&factor)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    fn q(n: i64) -> BigRational {
        int(n)
    }

    fn zp(terms: &[(&[u32], i64)]) -> ZetaPolynomial {
        ZetaPolynomial::from_terms(terms.iter().map(|(a, c)| (Monomial::new(a.to_vec()), q(*c))))
    }

    #[test]
    fn f_series_coefficients() {
        let f = f_series(6);
        assert_eq!(f.order(), 6);
        assert!(f.coeff(0).is_zero());
        assert!(f.coeff(1).is_zero());
        assert_eq!(*f.coeff(2), zp(&[(&[2], 1)]));
        assert_eq!(*f.coeff(3), zp(&[(&[3], 2)]));
        assert_eq!(
            *f.coeff(4),
            ZetaPolynomial::var(4).scale(&BigRational::new(7.into(), 2.into()))
        );
    }

    #[test]
    fn exp_basics() {
        let one = series_exp(&FormalSeries::<Zeta>::zero(4)).unwrap();
        assert_eq!(*one.coeff(0), ZetaPolynomial::one());
        assert!((1..=4).all(|k| one.coeff(k).is_zero()));

        let mut cs = vec![ZetaPolynomial::zero(); 5];
        cs[2] = ZetaPolynomial::var(2);
        let g = series_exp(&FormalSeries::new(cs)).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(*g.coeff(4), ZetaPolynomial::term(Monomial::new(vec![2, 2]), half));
        assert!(g.coeff(3).is_zero());

        let bad = FormalSeries::new(vec![ZetaPolynomial::one(), ZetaPolynomial::zero()]);
        assert!(matches!(series_exp(&bad), Err(Error::NonZeroConstantTerm)));
    }

    #[test]
    fn exp_of_f_at_four() {
        assert_eq!(closed_form_via_exp(4), zp(&[(&[2, 2], 12), (&[4], 84)]));
    }

    #[test]
    fn bell_small_cases() {
        let c1 = ZetaPolynomial::var(5);
        assert_eq!(bell_complete(std::slice::from_ref(&c1), 1), c1);
        let c = vec![
            ZetaPolynomial::zero(),
            ZetaPolynomial::var(2),
            ZetaPolynomial::var(3),
        ];
        assert_eq!(bell_complete(&c, 3), ZetaPolynomial::var(3));
        let c = vec![ZetaPolynomial::zero(), zp(&[(&[2], 2)])];
        assert_eq!(bell_complete(&c, 2), zp(&[(&[2], 2)]));
    }

    #[test]
    fn bell_three_general() {
        // B₃ = c₁³ + 3c₁c₂ + c₃ with distinct indeterminates
        let c = vec![
            ZetaPolynomial::var(2),
            ZetaPolynomial::var(3),
            ZetaPolynomial::var(4),
        ];
        assert_eq!(
            bell_complete(&c, 3),
            zp(&[(&[2, 2, 2], 1), (&[2, 3], 3), (&[4], 1)])
        );
    }

    #[test]
    fn closed_form_examples() {
        assert!(closed_form(1).is_zero());
        assert_eq!(closed_form(2), zp(&[(&[2], 2)]));
        assert_eq!(closed_form(3), zp(&[(&[3], 12)]));
        let z6 = zp(&[(&[2, 2, 2], 1), (&[3, 3], 12), (&[2, 4], 21), (&[6], 62)]).scale_int(120);
        assert_eq!(closed_form(6), z6);
        assert_eq!(closed_form(6).len(), 4);
    }

    #[test]
    fn derivatives() {
        assert!(f_derivative_at_zero(1).is_zero());
        assert_eq!(f_derivative_at_zero(2), zp(&[(&[2], 2)]));
        assert_eq!(f_derivative_at_zero(3), zp(&[(&[3], 12)]));
    }

    #[test]
    fn eta_forms() {
        assert!(closed_form_eta(1).is_zero());
        assert_eq!(closed_form_eta(2), EtaPolynomial::var(2).scale_int(4));
        assert_eq!(closed_form_eta(3), EtaPolynomial::var(3).scale_int(16));
        assert_eq!(eta_to_zeta(&closed_form_eta(2)), zp(&[(&[2], 2)]));
        assert_eq!(eta_to_zeta(&closed_form_eta(3)), zp(&[(&[3], 12)]));
        for n in 1..=12 {
            assert_eq!(eta_to_zeta(&closed_form_eta(n)), closed_form(n), "n={n}");
        }
    }

    #[test]
    fn batch_matches_single() {
        let all = closed_forms(9);
        for (n, p) in all.iter().enumerate() {
            assert_eq!(*p, closed_form(n));
        }
    }
}
