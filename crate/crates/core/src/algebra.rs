// SPDX-License-Identifier: Apache-2.0

//! Exact polynomial algebra over zeta values at integer arguments.
//!
//! A [`Monomial`] is a multiset of integer arguments, e.g. `[2, 2, 4]` for
//! ζ(2)²ζ(4). A [`Polynomial`] maps monomials to exact rational coefficients
//! and never stores a zero coefficient, so the zero polynomial is the empty
//! map and structural equality is mathematical equality.
//!
//! The same machinery is reused for three families of indeterminates: zeta
//! values, Dirichlet eta values and the symmetrized values ζ̄ₖ themselves
//! (the latter appear on the right-hand side of inversion identities). The
//! family is a type parameter so the three cannot be mixed by accident.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bigfloat::BigFloat;
use crate::{constants, series, Error};

/// A family of indeterminates indexed by integers ≥ 2.
pub trait Basis: Copy + Clone + fmt::Debug + Default + PartialEq + Eq + 'static {
    /// Symbol used by the plain-text renderer, e.g. `z` gives `z(3)`.
    const SYMBOL: &'static str;

    /// Numeric value of the indeterminate with index `k`.
    fn value(k: u32, digits: usize) -> Result<BigFloat, Error>;

    /// Order in which terms are printed.
    fn render_order(a: &Monomial, b: &Monomial) -> Ordering {
        a.cmp(b)
    }
}

/// Riemann zeta values ζ(k).
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct Zeta;

/// Dirichlet eta values η(k).
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct Eta;

/// Symmetrized Mordell-Tornheim values ζ̄ₖ = ζ̄ₖ(1, …, 1).
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct ZetaBar;

impl Basis for Zeta {
    const SYMBOL: &'static str = "z";

    fn value(k: u32, digits: usize) -> Result<BigFloat, Error> {
        constants::zeta_int(k, digits)
    }
}

impl Basis for Eta {
    const SYMBOL: &'static str = "eta";

    fn value(k: u32, digits: usize) -> Result<BigFloat, Error> {
        constants::eta_int(k, digits)
    }
}

impl Basis for ZetaBar {
    const SYMBOL: &'static str = "zbar";

    fn value(k: u32, digits: usize) -> Result<BigFloat, Error> {
        series::closed_form(k as usize).eval_numeric(digits)
    }

    // single factors first, then products of decreasing leading index
    fn render_order(a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| b.cmp(a))
    }
}

pub type ZetaPolynomial = Polynomial<Zeta>;
pub type EtaPolynomial = Polynomial<Eta>;
pub type ZbarPolynomial = Polynomial<ZetaBar>;
pub type ZetaMonomial = Monomial;

/// Sorted multiset of integer arguments; empty means the constant monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    args: Vec<u32>,
}

impl Monomial {
    pub fn new(mut args: Vec<u32>) -> Self {
        args.sort_unstable();
        Monomial { args }
    }

    pub fn constant() -> Self {
        Monomial { args: Vec::new() }
    }

    pub fn single(k: u32) -> Self {
        Monomial { args: vec![k] }
    }

    pub fn args(&self) -> &[u32] {
        &self.args
    }

    pub fn weight(&self) -> u32 {
        self.args.iter().sum()
    }

    pub fn degree(&self) -> usize {
        self.args.len()
    }

    pub fn is_constant(&self) -> bool {
        self.args.is_empty()
    }

    /// Multiset union.
    pub fn product(&self, other: &Monomial) -> Monomial {
        let mut args = Vec::with_capacity(self.args.len() + other.args.len());
        let (mut i, mut j) = (0, 0);
        while i < self.args.len() && j < other.args.len() {
            if self.args[i] <= other.args[j] {
                args.push(self.args[i]);
                i += 1;
            } else {
                args.push(other.args[j]);
                j += 1;
            }
        }
        args.extend_from_slice(&self.args[i..]);
        args.extend_from_slice(&other.args[j..]);
        Monomial { args }
    }

    /// `(index, exponent)` pairs in ascending index order.
    pub fn powers(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &a in &self.args {
            match out.last_mut() {
                Some((k, e)) if *k == a => *e += 1,
                _ => out.push((a, 1)),
            }
        }
        out
    }
}

/// Lexicographic on the arguments read from the largest down, so that
/// ζ(2)³ζ(4) < ζ(3)²ζ(4) < ζ(2)ζ(4)² < ζ(3)ζ(5).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.args.iter().rev().cmp(other.args.iter().rev())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<B: Basis> {
    terms: BTreeMap<Monomial, BigRational>,
    basis: PhantomData<B>,
}

impl<B: Basis> Default for Polynomial<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Basis> Polynomial<B> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
            basis: PhantomData,
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::constant(), c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// The indeterminate with index `k`, coefficient one.
    pub fn var(k: u32) -> Self {
        Self::term(Monomial::single(k), BigRational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c·m` in place, pruning the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
            basis: PhantomData,
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// True iff every stored monomial has weight exactly `n`.
    pub fn is_homogeneous(&self, n: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == n)
    }

    /// True iff every coefficient is a non-negative integer.
    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Replaces each indeterminate `k` by the polynomial `image(k)`.
    pub fn substitute<C: Basis, F>(&self, mut image: F) -> Polynomial<C>
    where
        F: FnMut(u32) -> Polynomial<C>,
    {
        let mut cache: BTreeMap<u32, Polynomial<C>> = BTreeMap::new();
        let mut out = Polynomial::<C>::zero();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::<C>::constant(c.clone());
            for &k in m.args() {
                let img = cache.entry(k).or_insert_with(|| image(k));
                prod = &prod * &*img;
            }
            out = &out + &prod;
        }
        out
    }

    /// Reinterprets the same monomials over another family of indeterminates.
    pub fn relabel<C: Basis>(&self) -> Polynomial<C> {
        Polynomial {
            terms: self.terms.clone(),
            basis: PhantomData,
        }
    }

    /// Σ coeff · Π value(arg), evaluated at `digits` decimal digits.
    pub fn eval_numeric(&self, digits: usize) -> Result<BigFloat, Error> {
        if digits < 10 {
            return Err(Error::Precision { digits, min: 10 });
        }
        let work = digits + 5;
        let mut values: BTreeMap<u32, BigFloat> = BTreeMap::new();
        let mut total = BigFloat::zero(work);
        for (m, c) in &self.terms {
            let mut prod = BigFloat::from_rational(c, work);
            for &k in m.args() {
                if k < 2 {
                    return Err(Error::ZetaArgument(k as i64));
                }
                if let std::collections::btree_map::Entry::Vacant(slot) = values.entry(k) {
                    slot.insert(B::value(k, work)?);
                }
                prod = &prod * &values[&k];
            }
            total = &total + &prod;
        }
        Ok(total.with_digits(digits))
    }

    /// Positive rational `g` such that every coefficient divided by `g` is an
    /// integer and the integers have gcd one. One for the zero polynomial.
    pub fn content(&self) -> BigRational {
        use num_integer::Integer;
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            BigRational::one()
        } else {
            BigRational::new(num, den)
        }
    }

    /// Terms in printing order.
    pub fn ordered_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| B::render_order(a.0, b.0));
        v
    }
}

fn render_monomial<B: Basis>(m: &Monomial) -> String {
    m.powers()
        .iter()
        .map(|&(k, e)| {
            if e == 1 {
                format!("{}({})", B::SYMBOL, k)
            } else {
                format!("{}({})^{}", B::SYMBOL, k, e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Plain-text form: `240*z(2)*z(3) + 720*z(5)`; the zero polynomial is `0`.
impl<B: Basis> fmt::Display for Polynomial<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.ordered_terms().into_iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_constant() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                f.write_str(&render_monomial::<B>(m))?;
            } else {
                write!(f, "{}*{}", mag, render_monomial::<B>(m))?;
            }
        }
        Ok(())
    }
}

impl<B: Basis> Add<&Polynomial<B>> for &Polynomial<B> {
    type Output = Polynomial<B>;
    fn add(self, rhs: &Polynomial<B>) -> Polynomial<B> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<B: Basis> Sub<&Polynomial<B>> for &Polynomial<B> {
    type Output = Polynomial<B>;
    fn sub(self, rhs: &Polynomial<B>) -> Polynomial<B> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<B: Basis> Mul<&Polynomial<B>> for &Polynomial<B> {
    type Output = Polynomial<B>;
    fn mul(self, rhs: &Polynomial<B>) -> Polynomial<B> {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.product(mb), ca * cb);
            }
        }
        out
    }
}

impl<B: Basis> Neg for &Polynomial<B> {
    type Output = Polynomial<B>;
    fn neg(self) -> Polynomial<B> {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
            basis: PhantomData,
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl<B: Basis> $tr<Polynomial<B>> for Polynomial<B> {
            type Output = Polynomial<B>;
            fn $method(self, rhs: Polynomial<B>) -> Polynomial<B> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn zp(terms: &[(&[u32], i64)]) -> ZetaPolynomial {
        ZetaPolynomial::from_terms(terms.iter().map(|(a, c)| (Monomial::new(a.to_vec()), q(*c))))
    }

    #[test]
    fn add_prunes_cancellation() {
        assert!((&zp(&[(&[2], 1)]) + &zp(&[(&[2], -1)])).is_zero());
        let sum = &zp(&[(&[2], 1)]) + &zp(&[(&[4], 7)]);
        assert_eq!(sum.len(), 2);
        assert_eq!(sum.coeff(&Monomial::single(4)), q(7));
    }

    #[test]
    fn depth_four_value_from_parts() {
        let z4 = &zp(&[(&[2, 2], 12)]) + &zp(&[(&[4], 84)]);
        assert_eq!(z4.to_string(), "12*z(2)^2 + 84*z(4)");
    }

    #[test]
    fn multiplication() {
        assert_eq!(&zp(&[(&[2], 2)]) * &zp(&[(&[2], 2)]), zp(&[(&[2, 2], 4)]));
        assert_eq!(&zp(&[(&[2], 1)]) * &zp(&[(&[3], 1)]), zp(&[(&[2, 3], 1)]));
    }

    #[test]
    fn monomial_canonical_order() {
        let a = Monomial::new(vec![4, 2, 2]);
        let b = Monomial::new(vec![2, 4, 2]);
        assert_eq!(a, b);
        assert_eq!(a.args(), &[2, 2, 4]);
        assert_eq!(a.weight(), 8);
        assert_eq!(a.powers(), vec![(2, 2), (4, 1)]);
        let mut ms = [
            Monomial::new(vec![4, 4, 2]),
            Monomial::new(vec![5, 5]),
            Monomial::new(vec![4, 3, 3]),
            Monomial::new(vec![2, 2, 2, 4]),
        ];
        ms.sort();
        let rendered: Vec<_> = ms.iter().map(|m| m.args().to_vec()).collect();
        assert_eq!(
            rendered,
            vec![vec![2, 2, 2, 4], vec![3, 3, 4], vec![2, 4, 4], vec![5, 5]]
        );
    }

    #[test]
    fn homogeneity() {
        let z4 = zp(&[(&[2, 2], 12), (&[4], 84)]);
        assert!(z4.is_homogeneous(4));
        assert!(!zp(&[(&[2], 1), (&[3], 1)]).is_homogeneous(2));
        assert!(ZetaPolynomial::zero().is_homogeneous(7));
    }

    #[test]
    fn display_signs_and_rationals() {
        let p = ZetaPolynomial::from_terms([
            (Monomial::single(3), q(-1)),
            (Monomial::new(vec![2, 2]), BigRational::new(1.into(), 2.into())),
            (Monomial::constant(), q(5)),
        ]);
        assert_eq!(p.to_string(), "5 + 1/2*z(2)^2 - z(3)");
        assert_eq!(ZetaPolynomial::zero().to_string(), "0");
        let zb =
            ZbarPolynomial::from_terms([(Monomial::new(vec![2, 2]), q(-3)), (Monomial::single(4), q(1))]);
        assert_eq!(zb.to_string(), "zbar(4) - 3*zbar(2)^2");
    }

    #[test]
    fn numeric_evaluation() {
        let two_z2 = zp(&[(&[2], 2)]);
        let v = two_z2.eval_numeric(30).unwrap();
        assert!(v.to_sci_string(18).starts_with("3.2898681336964528"));
        assert!(ZetaPolynomial::zero().eval_numeric(30).unwrap().is_zero());
        assert!(matches!(
            zp(&[(&[1], 1)]).eval_numeric(30),
            Err(Error::ZetaArgument(1))
        ));
        assert!(matches!(two_z2.eval_numeric(5), Err(Error::Precision { .. })));
    }

    #[test]
    fn content_extracts_common_factor() {
        let z4 = zp(&[(&[2, 2], 12), (&[4], 84)]);
        assert_eq!(z4.content(), q(12));
    }

    #[test]
    fn substitution_into_other_basis() {
        // ζ(2) -> ζ̄₂/2 applied to 12ζ(2)²
        let p = zp(&[(&[2, 2], 12)]);
        let img = p.substitute(|k| ZbarPolynomial::var(k).scale(&BigRational::new(1.into(), 2.into())));
        assert_eq!(img.to_string(), "3*zbar(2)^2");
    }

    fn arb_poly() -> impl Strategy<Value = ZetaPolynomial> {
        let mono = prop::collection::vec(2u32..6, 0..3);
        prop::collection::vec((mono, -5i64..6, 1i64..4), 0..4).prop_map(|ts| {
            ZetaPolynomial::from_terms(
                ts.into_iter()
                    .map(|(a, n, d)| (Monomial::new(a), BigRational::new(n.into(), d.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert!(a.iter().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn monomial_insertion_order(mut args in prop::collection::vec(2u32..9, 0..6), seed in 0usize..100) {
            let m1 = Monomial::new(args.clone());
            let len = args.len().max(1);
            args.rotate_left(seed % len);
            args.reverse();
            prop_assert_eq!(m1, Monomial::new(args));
        }
    }

    #[test]
    fn evaluation_is_multiplicative() {
        let a = zp(&[(&[2], 3), (&[3], -1)]);
        let b = zp(&[(&[2, 3], 2), (&[5], 1), (&[], 1)]);
        let digits = 30;
        let lhs = (&a * &b).eval_numeric(digits).unwrap();
        let rhs = &a.eval_numeric(digits).unwrap() * &b.eval_numeric(digits).unwrap();
        let tol = BigFloat::parse("1e-22", digits).unwrap();
        assert!(lhs.rel_diff(&rhs) < tol);
    }
}
