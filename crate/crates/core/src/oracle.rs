// SPDX-License-Identifier: Apache-2.0

//! Numerical ground truth for ζ̄ₙ(w₁, …, wₙ).
//!
//! [`brute_force`] truncates the defining lattice sum to a box: the first
//! n-1 coordinates range over [-M, M] \ {0} and the last one is fixed by the
//! constraint. All summands are positive, so every truncation is a lower
//! bound and grows with M. [`sigma_sum_eval`] sums the sign-signature
//! decomposition ζ̄ₙ = 2 Σₚ C(n-1,p) σ(p, n-1-p) instead, whose terms decay
//! like polylog(s)/s².
//!
//! Parallel work is split on the outermost coordinate (or on fixed chunks of
//! s) and reduced in index order with compensated sums, so results do not
//! depend on the number of threads.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bigfloat::{BigFloat, DEFAULT_DIGITS};
use crate::combinatorics::{sum_over_harmonic, HarmonicState};
use crate::constants::zeta_int;
use crate::summation::{map_ordered, Compensated};
use crate::Error;

/// Largest depth and cutoff accepted by the exact rational lattice sums.
pub const EXACT_MAX_DEPTH: usize = 4;
pub const EXACT_MAX_CUTOFF: u64 = 30;

/// Exponents (w₁, …, wₙ), each at least one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(w: Vec<u32>) -> Result<Self, Error> {
        if w.is_empty() || w.contains(&0) {
            return Err(Error::Weights);
        }
        Ok(WeightVector(w))
    }

    /// (1, …, 1) of depth `n`.
    pub fn ones(n: usize) -> Result<Self, Error> {
        Self::new(vec![1; n])
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.0
    }
}

/// A truncated lattice sum. `value` never exceeds the infinite sum.
#[derive(Clone, Debug)]
pub struct OracleResult {
    pub value: BigFloat,
    pub cutoff: u64,
    pub terms_summed: u64,
    pub lower_bound: bool,
}

fn inverse_powers(limit: u64, w: u32) -> Vec<f64> {
    let mut t = vec![0.0; limit as usize + 1];
    for (a, slot) in t.iter_mut().enumerate().skip(1) {
        *slot = (a as f64).powi(w as i32).recip();
    }
    t
}

struct BoxSum<'a> {
    cutoff: i64,
    free: &'a [Vec<f64>],
    dependent: &'a [f64],
}

impl BoxSum<'_> {
    fn walk(&self, level: usize, prod: f64, sum: i64, acc: &mut Compensated, count: &mut u64) {
        let m = self.cutoff;
        let table = &self.free[level];
        if level + 1 == self.free.len() {
            let mut local = 0.0;
            for a in (-m..=m).filter(|&a| a != 0) {
                let t = sum + a;
                if t != 0 {
                    local +=
                        prod * table[a.unsigned_abs() as usize] * self.dependent[t.unsigned_abs() as usize];
                    *count += 1;
                }
            }
            acc.add(local);
        } else {
            for a in (-m..=m).filter(|&a| a != 0) {
                self.walk(
                    level + 1,
                    prod * table[a.unsigned_abs() as usize],
                    sum + a,
                    acc,
                    count,
                );
            }
        }
    }
}

/// Box-truncated lattice sum with cutoff M ≥ 1.
pub fn brute_force(w: &WeightVector, cutoff: u64) -> Result<OracleResult, Error> {
    if cutoff < 1 {
        return Err(Error::Cutoff);
    }
    let n = w.depth();
    if n == 1 {
        return Ok(OracleResult {
            value: BigFloat::zero(DEFAULT_DIGITS),
            cutoff,
            terms_summed: 0,
            lower_bound: true,
        });
    }
    let free: Vec<Vec<f64>> = w.weights()[..n - 1]
        .iter()
        .map(|&wk| inverse_powers(cutoff, wk))
        .collect();
    let dependent = inverse_powers((n as u64 - 1) * cutoff, w.weights()[n - 1]);
    let m = cutoff as i64;
    let outer: Vec<i64> = (-m..=m).filter(|&a| a != 0).collect();
    let walker = BoxSum {
        cutoff: m,
        free: &free,
        dependent: &dependent,
    };
    let partials = map_ordered(outer.len(), |i| {
        let a = outer[i];
        let mut acc = Compensated::default();
        let mut count = 0u64;
        let prod = free[0][a.unsigned_abs() as usize];
        if n == 2 {
            acc.add(prod * dependent[a.unsigned_abs() as usize]);
            count += 1;
        } else {
            walker.walk(1, prod, a, &mut acc, &mut count);
        }
        (acc, count)
    });
    let mut total = Compensated::default();
    let mut terms = 0;
    for (acc, count) in &partials {
        total.merge(acc);
        terms += count;
    }
    Ok(OracleResult {
        value: BigFloat::from_f64(total.value(), DEFAULT_DIGITS),
        cutoff,
        terms_summed: terms,
        lower_bound: true,
    })
}

/// Box-truncated sums at several ascending cutoffs.
pub fn brute_force_curve(w: &WeightVector, cutoffs: &[u64]) -> Result<Vec<OracleResult>, Error> {
    cutoffs.iter().map(|&m| brute_force(w, m)).collect()
}

fn check_exact_limits(w: &WeightVector, cutoff: u64) -> Result<(), Error> {
    if cutoff < 1 {
        return Err(Error::Cutoff);
    }
    if w.depth() > EXACT_MAX_DEPTH || cutoff > EXACT_MAX_CUTOFF {
        return Err(Error::ExactModeLimits {
            max_depth: EXACT_MAX_DEPTH,
            max_cutoff: EXACT_MAX_CUTOFF,
        });
    }
    Ok(())
}

fn exact_term(w: &[u32], tuple: &[i64], t: i64) -> BigRational {
    let mut den = BigInt::one();
    for (&a, &wk) in tuple.iter().zip(w) {
        den *= num_traits::pow(BigInt::from(a.unsigned_abs()), wk as usize);
    }
    den *= num_traits::pow(BigInt::from(t.unsigned_abs()), w[w.len() - 1] as usize);
    BigRational::new(BigInt::one(), den)
}

fn exact_box_sum(w: &WeightVector, cutoff: u64, first_positive_only: bool) -> BigRational {
    let n = w.depth();
    if n == 1 {
        return BigRational::zero();
    }
    let m = cutoff as i64;
    let mut tuple = vec![0i64; n - 1];
    let mut total = BigRational::zero();
    fn rec(level: usize, m: i64, lo_first: i64, tuple: &mut Vec<i64>, w: &[u32], total: &mut BigRational) {
        if level == tuple.len() {
            let t: i64 = tuple.iter().sum();
            if t != 0 {
                *total += exact_term(w, tuple, t);
            }
            return;
        }
        let lo = if level == 0 { lo_first } else { -m };
        for a in (lo..=m).filter(|&a| a != 0) {
            tuple[level] = a;
            rec(level + 1, m, lo_first, tuple, w, total);
        }
    }
    let lo_first = if first_positive_only { 1 } else { -m };
    rec(0, m, lo_first, &mut tuple, w.weights(), &mut total);
    total
}

/// Exact rational value of the box-truncated sum (depth ≤ 4, cutoff ≤ 30).
pub fn brute_force_exact(w: &WeightVector, cutoff: u64) -> Result<BigRational, Error> {
    check_exact_limits(w, cutoff)?;
    Ok(exact_box_sum(w, cutoff, false))
}

/// The same box sum taken over one representative per orbit of the global
/// sign flip a ↦ -a (first coordinate positive), times the orbit size 2.
pub fn orbit_reduced_exact(w: &WeightVector, cutoff: u64) -> Result<BigRational, Error> {
    check_exact_limits(w, cutoff)?;
    Ok(exact_box_sum(w, cutoff, true) * BigRational::from_integer(2.into()))
}

fn binomial_f64(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn signature_term(n: usize, binom: &[f64], st: &HarmonicState) -> f64 {
    (1..n).map(|p| binom[p] * st.h(p) * st.h(n - p)).sum()
}

/// 2·Σ_{p=0}^{n-1} C(n-1,p)·σ(p, n-1-p) with each σ summed over s ≤ `terms`.
pub fn sigma_sum_eval(n: usize, terms: u64, digits: usize) -> Result<BigFloat, Error> {
    if n < 1 {
        return Err(Error::Argument {
            what: "depth",
            min: 1,
        });
    }
    if terms < 1 {
        return Err(Error::Argument {
            what: "terms",
            min: 1,
        });
    }
    if n == 1 {
        return Ok(BigFloat::zero(digits));
    }
    let binom: Vec<f64> = (0..n).map(|p| binomial_f64(n - 1, p)).collect();
    let value = sum_over_harmonic(n, terms, |st| signature_term(n, &binom, st));
    Ok(BigFloat::from_f64(2.0 * value, digits))
}

/// Values of [`sigma_sum_eval`] at each of the ascending `checkpoints`.
pub fn sigma_sum_partials(n: usize, checkpoints: &[u64]) -> Vec<f64> {
    let last = checkpoints.last().copied().unwrap_or(0);
    let binom: Vec<f64> = (0..n.max(1))
        .map(|p| binomial_f64(n.saturating_sub(1), p))
        .collect();
    let mut state = HarmonicState::new(n.max(1));
    let mut acc = Compensated::default();
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut next = checkpoints.iter().peekable();
    while next.peek().is_some_and(|&&c| c == 0) {
        out.push(0.0);
        next.next();
    }
    for s in 1..=last {
        if n >= 2 {
            acc.add(signature_term(n, &binom, &state));
        }
        state.advance();
        while next.peek().is_some_and(|&&c| c == s) {
            out.push(2.0 * acc.value());
            next.next();
        }
    }
    out
}

/// n!·2^(2n-3)·ζ(2), an upper bound on ζ̄ₙ(w) for every weight vector of
/// depth n ≥ 2; zero for n ≤ 1.
pub fn upper_bound(n: usize, digits: usize) -> Result<BigFloat, Error> {
    if n < 2 {
        return Ok(BigFloat::zero(digits));
    }
    let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
    let scale = fact << (2 * n - 3);
    Ok(BigFloat::from_bigint(&scale, digits).mul(&zeta_int(2, digits)?))
}

/// Both sides of Σ_{s≥0} (x^(s)/s!)² = Γ(1-2x)/Γ(1-x)².
#[derive(Clone, Debug)]
pub struct GaussCheck {
    /// Partial sum over s = 0..=terms.
    pub lhs: BigFloat,
    /// exp(Σ_{k≥2} (2^k - 2) ζ(k) x^k / k), series tail below 10^(5-digits).
    pub rhs: BigFloat,
    pub abs_diff: BigFloat,
    pub terms: u64,
}

fn check_gauss_domain(x: f64) -> Result<(), Error> {
    if !(0.0..0.5).contains(&x) {
        return Err(Error::Domain(x.to_string()));
    }
    Ok(())
}

/// Σ_{s=0}^{S} (x^(s)/s!)² at each ascending checkpoint S, with the
/// Pochhammer ratio built multiplicatively.
pub fn gauss_lhs_partials(x: f64, checkpoints: &[u64]) -> Result<Vec<f64>, Error> {
    check_gauss_domain(x)?;
    let last = checkpoints.last().copied().unwrap_or(0);
    let mut ratio = 1.0f64;
    let mut acc = Compensated::default();
    acc.add(1.0);
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut next = checkpoints.iter().peekable();
    while next.peek().is_some_and(|&&c| c == 0) {
        out.push(acc.value());
        next.next();
    }
    for s in 1..=last {
        ratio *= (x + (s - 1) as f64) / s as f64;
        acc.add(ratio * ratio);
        while next.peek().is_some_and(|&&c| c == s) {
            out.push(acc.value());
            next.next();
        }
    }
    Ok(out)
}

/// exp(f(x)) with f summed until the remaining terms are below 10^(5-digits).
pub fn gauss_rhs(x: &BigFloat, digits: usize) -> Result<BigFloat, Error> {
    let xf = x.to_f64();
    check_gauss_domain(xf)?;
    let work = digits + 5;
    // |term_k| ≤ 2 (2x)^k ζ(2), so the tail after K is below 4 (2x)^(K+1) / (1 - 2x)
    let last = if xf == 0.0 {
        1
    } else {
        let r = 2.0 * xf;
        let target = (5.0 - digits as f64 - 1.0) * std::f64::consts::LN_10 + (1.0 - r).ln() - 4f64.ln();
        ((target / r.ln()).ceil() as usize).max(2)
    };
    let mut exponent = BigFloat::zero(work);
    let x = x.with_digits(work);
    let mut xk = x.mul(&x);
    for k in 2..=last {
        let coeff = BigFloat::from_bigint(&((BigInt::one() << k) - 2), work).div_u64(k as u64);
        exponent = exponent.add(&coeff.mul(&zeta_int(k as u32, work)?).mul(&xk));
        xk = xk.mul(&x);
    }
    Ok(exponent.exp().with_digits(digits))
}

/// Compares the truncated Pochhammer-square series with its Gauss closed form.
pub fn gauss_identity_check(x: &BigFloat, terms: u64, digits: usize) -> Result<GaussCheck, Error> {
    let xf = x.to_f64();
    check_gauss_domain(xf)?;
    let lhs = BigFloat::from_f64(gauss_lhs_partials(xf, &[terms])?[0], digits);
    let rhs = gauss_rhs(x, digits)?;
    let abs_diff = lhs.sub(&rhs).abs();
    Ok(GaussCheck {
        lhs,
        rhs,
        abs_diff,
        terms,
    })
}
