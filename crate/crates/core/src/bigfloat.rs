// SPDX-License-Identifier: Apache-2.0

//! Arbitrary-precision reals carrying a decimal working precision.
//!
//! [`BigFloat`] wraps a binary multi-precision float. The working precision is
//! stated in decimal digits and mapped to a binary mantissa with a few guard
//! digits on top, so a value advertised at `d` digits is accurate to at least
//! `d - 5` digits after a moderate amount of arithmetic.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat as Raw, Consts, RoundingMode, Sign, Word};
use num_bigint::{BigInt, BigUint, Sign as IntSign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Working precision used when a caller does not choose one.
pub const DEFAULT_DIGITS: usize = 50;

/// Extra decimal digits carried beyond the advertised precision.
const GUARD_DIGITS: usize = 10;

const RM: RoundingMode = RoundingMode::ToEven;
const WORD_BYTES: usize = std::mem::size_of::<Word>();

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache allocation"));
}

/// Number of mantissa bits backing a decimal precision of `digits`.
pub fn bits_for_digits(digits: usize) -> usize {
    let bits = ((digits + GUARD_DIGITS) as f64 * std::f64::consts::LOG2_10).ceil() as usize;
    bits.div_ceil(64) * 64
}

#[derive(Clone, Debug)]
pub struct BigFloat {
    raw: Raw,
    digits: usize,
}

fn uint_to_words(m: &BigUint) -> Vec<Word> {
    let mut bytes = m.to_bytes_le();
    bytes.resize(bytes.len().div_ceil(WORD_BYTES) * WORD_BYTES, 0);
    bytes
        .chunks_exact(WORD_BYTES)
        .map(|c| Word::from_le_bytes(c.try_into().expect("word-sized chunk")))
        .collect()
}

fn words_to_uint(words: &[Word]) -> BigUint {
    let bytes: Vec<u8> = words.iter().flat_map(|w| w.to_le_bytes()).collect();
    BigUint::from_bytes_le(&bytes)
}

impl BigFloat {
    fn wrap(raw: Raw, digits: usize) -> Self {
        BigFloat { raw, digits }
    }

    pub fn zero(digits: usize) -> Self {
        Self::wrap(Raw::from_u8(0, bits_for_digits(digits)), digits)
    }

    pub fn one(digits: usize) -> Self {
        Self::wrap(Raw::from_u8(1, bits_for_digits(digits)), digits)
    }

    pub fn from_f64(x: f64, digits: usize) -> Self {
        Self::wrap(Raw::from_f64(x, bits_for_digits(digits)), digits)
    }

    pub fn from_u64(x: u64, digits: usize) -> Self {
        Self::wrap(Raw::from_u64(x, bits_for_digits(digits)), digits)
    }

    pub fn from_i64(x: i64, digits: usize) -> Self {
        Self::wrap(Raw::from_i64(x, bits_for_digits(digits)), digits)
    }

    /// Rounds an arbitrary-precision integer to the working precision.
    pub fn from_bigint(x: &BigInt, digits: usize) -> Self {
        if x.is_zero() {
            return Self::zero(digits);
        }
        let words = uint_to_words(x.magnitude());
        let sign = if x.sign() == IntSign::Minus {
            Sign::Neg
        } else {
            Sign::Pos
        };
        let exact_bits = words.len() * WORD_BYTES * 8;
        let mut raw = Raw::from_words(&words, sign, exact_bits as i32);
        raw.set_precision(bits_for_digits(digits), RM)
            .expect("precision within range");
        Self::wrap(raw, digits)
    }

    pub fn from_biguint(x: &BigUint, digits: usize) -> Self {
        Self::from_bigint(&BigInt::from(x.clone()), digits)
    }

    pub fn from_rational(x: &BigRational, digits: usize) -> Self {
        let num = Self::from_bigint(x.numer(), digits);
        let den = Self::from_bigint(x.denom(), digits);
        num.div(&den)
    }

    /// Parses a decimal literal such as `0.25` or `-1.5e3`.
    pub fn parse(text: &str, digits: usize) -> Option<Self> {
        let raw = CONSTS.with(|cc| {
            Raw::parse(
                text.trim(),
                astro_float::Radix::Dec,
                bits_for_digits(digits),
                RM,
                &mut cc.borrow_mut(),
            )
        });
        if raw.is_nan() || raw.is_inf() {
            None
        } else {
            Some(Self::wrap(raw, digits))
        }
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    /// Re-rounds to a different working precision.
    pub fn with_digits(&self, digits: usize) -> Self {
        let mut raw = self.raw.clone();
        raw.set_precision(bits_for_digits(digits), RM)
            .expect("precision within range");
        Self::wrap(raw, digits)
    }

    fn joint(&self, other: &Self) -> (usize, usize) {
        let d = self.digits.max(other.digits);
        (d, bits_for_digits(d))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (d, p) = self.joint(other);
        Self::wrap(self.raw.add(&other.raw, p, RM), d)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (d, p) = self.joint(other);
        Self::wrap(self.raw.sub(&other.raw, p, RM), d)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (d, p) = self.joint(other);
        Self::wrap(self.raw.mul(&other.raw, p, RM), d)
    }

    pub fn div(&self, other: &Self) -> Self {
        let (d, p) = self.joint(other);
        Self::wrap(self.raw.div(&other.raw, p, RM), d)
    }

    pub fn mul_u64(&self, k: u64) -> Self {
        self.mul(&Self::from_u64(k, self.digits))
    }

    pub fn div_u64(&self, k: u64) -> Self {
        self.div(&Self::from_u64(k, self.digits))
    }

    pub fn powi(&self, n: usize) -> Self {
        Self::wrap(self.raw.powi(n, bits_for_digits(self.digits), RM), self.digits)
    }

    pub fn exp(&self) -> Self {
        let p = bits_for_digits(self.digits);
        let raw = CONSTS.with(|cc| self.raw.exp(p, RM, &mut cc.borrow_mut()));
        Self::wrap(raw, self.digits)
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.raw.abs(), self.digits)
    }

    pub fn is_zero(&self) -> bool {
        self.raw.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.raw.is_zero() && self.raw.is_negative()
    }

    /// Finite values only; NaN and infinities are never produced by this crate.
    pub fn is_finite(&self) -> bool {
        !(self.raw.is_nan() || self.raw.is_inf())
    }

    /// `|self - other| / |other|`, or `|self|` when `other` is zero.
    pub fn rel_diff(&self, other: &Self) -> Self {
        let diff = self.sub(other).abs();
        if other.is_zero() {
            diff
        } else {
            diff.div(&other.abs())
        }
    }

    /// Exact value of the binary representation.
    pub fn to_rational(&self) -> BigRational {
        let Some((words, _, sign, exponent, _)) = self.raw.as_raw_parts() else {
            return BigRational::zero();
        };
        if self.raw.is_zero() {
            return BigRational::zero();
        }
        let mantissa = BigInt::from(words_to_uint(words));
        let shift = exponent as i64 - (words.len() * WORD_BYTES * 8) as i64;
        let two = BigInt::from(2u8);
        let mut value = if shift >= 0 {
            BigRational::from_integer(mantissa * num_traits::pow(two, shift as usize))
        } else {
            BigRational::new(mantissa, num_traits::pow(two, (-shift) as usize))
        };
        if sign == Sign::Neg {
            value = -value;
        }
        value
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// Scientific notation with `sig` significant digits, e.g. `1.1828e9`.
    pub fn to_sci_string(&self, sig: usize) -> String {
        let sig = sig.max(1);
        let q = self.to_rational();
        if q.is_zero() {
            return "0".to_string();
        }
        let negative = q.is_negative();
        let q = q.abs();
        let ten = BigInt::from(10u8);
        // floor(log10 q), corrected after an f64 estimate
        let mut e10 = q.to_f64().map(|f| f.log10().floor() as i64).unwrap_or(0);
        let pow10 = |e: i64| -> BigRational {
            if e >= 0 {
                BigRational::from_integer(num_traits::pow(ten.clone(), e as usize))
            } else {
                BigRational::new(BigInt::one(), num_traits::pow(ten.clone(), (-e) as usize))
            }
        };
        while q < pow10(e10) {
            e10 -= 1;
        }
        while q >= pow10(e10 + 1) {
            e10 += 1;
        }
        let scaled = &q * pow10(sig as i64 - 1 - e10);
        let mut mant = scaled.round().to_integer();
        if mant >= num_traits::pow(ten.clone(), sig) {
            mant /= &ten;
            e10 += 1;
        }
        let digits = mant.to_string();
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&digits[..1]);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push('e');
        out.push_str(&e10.to_string());
        out
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(self.digits);
        f.write_str(&self.to_sci_string(sig))
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.raw == other.raw
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.raw.partial_cmp(&other.raw)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                BigFloat::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat::wrap(self.raw.clone().neg(), self.digits)
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        -&self
    }
}
