// SPDX-License-Identifier: Apache-2.0

//! High-precision constants: ζ(k) and η(k) at integer arguments, π and Γ at
//! positive integers.
//!
//! η(k) is summed with the Borwein-Cohen-Villegas-Zagier acceleration of the
//! alternating series, whose error after `n` terms is bounded by a constant
//! times (3 + √8)^(-n). Every value is computed at two depths and the two
//! must agree to the requested precision before it is accepted. ζ(k) follows
//! from η(k) = (1 - 2^(1-k)) ζ(k).
//!
//! Results are memoized per `(k, digits)`; the cache is guarded by a mutex and
//! the values are deterministic, so interleaving never changes a result.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bigfloat::BigFloat;
use crate::Error;

/// Extra terms used by the second, confirming evaluation.
const CONFIRM_EXTRA_TERMS: usize = 12;

type Cache<K> = OnceLock<Mutex<HashMap<K, BigFloat>>>;

static ETA_CACHE: Cache<(u32, usize)> = OnceLock::new();
static PI_CACHE: Cache<usize> = OnceLock::new();
type WeightTable = HashMap<(usize, usize), Arc<Vec<BigFloat>>>;
static WEIGHTS_CACHE: OnceLock<Mutex<WeightTable>> = OnceLock::new();

fn cached<K, F>(cache: &Cache<K>, key: K, compute: F) -> Result<BigFloat, Error>
where
    K: std::hash::Hash + Eq + Copy,
    F: FnOnce() -> Result<BigFloat, Error>,
{
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().expect("constant cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let value = compute()?;
    map.lock()
        .expect("constant cache poisoned")
        .entry(key)
        .or_insert_with(|| value.clone());
    Ok(value)
}

/// Number of accelerated terms sufficient for `digits` decimal digits.
fn depth_for(digits: usize) -> usize {
    // log(10) / log(3 + sqrt 8) ≈ 1.3063
    ((digits + 10) as f64 * 1.3063).ceil() as usize + 4
}

/// Weights `(d_j - d_n) / d_n` for j = 0..n of the accelerated alternating sum.
fn acceleration_weights(n: usize, digits: usize) -> Arc<Vec<BigFloat>> {
    let cache = WEIGHTS_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(w) = cache.lock().expect("weight cache poisoned").get(&(n, digits)) {
        return w.clone();
    }
    // d_j = n Σ_{i≤j} (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut term = BigRational::one();
    let mut acc = term.clone();
    let mut d = Vec::with_capacity(n + 1);
    d.push(acc.clone());
    for i in 0..n {
        let num = BigInt::from(2 * (n + i) * (n - i));
        let den = BigInt::from((2 * i + 1) * (i + 1));
        term *= BigRational::new(num, den);
        acc += &term;
        d.push(acc.clone());
    }
    let dn = d[n].clone();
    let weights: Vec<BigFloat> = d[..n]
        .iter()
        .map(|dj| BigFloat::from_rational(&((dj - &dn) / &dn), digits))
        .collect();
    let weights = Arc::new(weights);
    cache
        .lock()
        .expect("weight cache poisoned")
        .insert((n, digits), weights.clone());
    weights
}

fn eta_accelerated(k: u32, digits: usize, depth: usize) -> BigFloat {
    let weights = acceleration_weights(depth, digits);
    let mut sum = BigFloat::zero(digits);
    for (j, w) in weights.iter().enumerate() {
        let denom = BigFloat::from_u64(j as u64 + 1, digits).powi(k as usize);
        let t = w.div(&denom);
        sum = if j % 2 == 0 { sum.add(&t) } else { sum.sub(&t) };
    }
    -sum
}

/// Dirichlet eta η(k) for integer k ≥ 2.
pub fn eta_int(k: u32, digits: usize) -> Result<BigFloat, Error> {
    if k < 2 {
        return Err(Error::ZetaArgument(k as i64));
    }
    cached(&ETA_CACHE, (k, digits), || {
        let work = digits + 5;
        let n = depth_for(digits);
        let first = eta_accelerated(k, work, n);
        let second = eta_accelerated(k, work, n + CONFIRM_EXTRA_TERMS);
        let tol = BigFloat::one(work).div(&BigFloat::from_u64(10, work).powi(digits));
        if first.rel_diff(&second) > tol {
            return Err(Error::SelfCheck { k, digits });
        }
        Ok(second.with_digits(digits))
    })
}

/// Riemann zeta ζ(k) for integer k ≥ 2.
pub fn zeta_int(k: u32, digits: usize) -> Result<BigFloat, Error> {
    let eta = eta_int(k, digits)?;
    let one = BigFloat::one(digits);
    let half_power = one.div(&BigFloat::from_u64(2, digits).powi(k as usize - 1));
    Ok(eta.div(&one.sub(&half_power)))
}

/// π via Machin's formula π = 16 atan(1/5) − 4 atan(1/239) in fixed point.
pub fn pi_const(digits: usize) -> BigFloat {
    cached(&PI_CACHE, digits, || {
        let bits = crate::bigfloat::bits_for_digits(digits) as u32 + 32;
        let scale = BigInt::one() << bits;
        let pi = atan_inv(16, 5, &scale) - atan_inv(4, 239, &scale);
        Ok(BigFloat::from_rational(&BigRational::new(pi, scale), digits))
    })
    .expect("pi never fails")
}

/// `mult · atan(1/x) · scale`, truncated.
fn atan_inv(mult: u64, x: u64, scale: &BigInt) -> BigInt {
    let x2 = BigInt::from(x * x);
    let mut power = scale * BigInt::from(mult) / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let t = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += t;
        } else {
            sum -= t;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// Γ(k) = (k-1)! exactly, for k ≥ 1.
pub fn gamma_int(k: i64) -> Result<BigUint, Error> {
    if k < 1 {
        return Err(Error::GammaArgument(k));
    }
    Ok((1..k as u64).fold(BigUint::one(), |acc, j| acc * j))
}
