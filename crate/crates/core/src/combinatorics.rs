// SPDX-License-Identifier: Apache-2.0

//! Integer combinatorics behind the sign-signature decomposition: unsigned
//! Stirling numbers of the first kind, the composition sums hₙ(s), the
//! squared-Pochhammer coefficients cₙ(s), partition numbers, and floating
//! partial sums of σ(p, m).

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bigfloat::BigFloat;
use crate::summation::{map_ordered, Compensated};
use crate::Error;

/// Row `s` of the unsigned Stirling triangle, entries ⦋s,0⦌ … ⦋s,s⦌.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingRow {
    s: usize,
    entries: Vec<BigUint>,
}

impl StirlingRow {
    /// Row 0, i.e. `[1]`.
    pub fn first() -> Self {
        StirlingRow {
            s: 0,
            entries: vec![BigUint::one()],
        }
    }

    pub fn new(s: usize) -> Self {
        let mut row = Self::first();
        for _ in 0..s {
            row = row.next();
        }
        row
    }

    /// ⦋s+1,k⦌ = ⦋s,k-1⦌ + s·⦋s,k⦌.
    pub fn next(&self) -> Self {
        let s = self.s;
        let mut entries = vec![BigUint::zero(); s + 2];
        for (k, slot) in entries.iter_mut().enumerate() {
            if k >= 1 {
                *slot += &self.entries[k - 1];
            }
            if k <= s {
                *slot += &self.entries[k] * s;
            }
        }
        StirlingRow { s: s + 1, entries }
    }

    pub fn index(&self) -> usize {
        self.s
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// Zero outside `0..=s`.
    pub fn entry(&self, k: usize) -> BigUint {
        self.entries.get(k).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn row_sum(&self) -> BigUint {
        self.entries.iter().sum()
    }

    /// Coefficients of (x^(s))², the row convolved with itself.
    pub fn self_convolution(&self) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); 2 * self.s + 1];
        for (i, a) in self.entries.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.entries.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        out
    }

    /// Iterator over rows 0, 1, 2, …
    pub fn rows() -> impl Iterator<Item = StirlingRow> {
        std::iter::successors(Some(Self::first()), |r| Some(r.next()))
    }
}

/// Unsigned Stirling number of the first kind ⦋s,k⦌; zero when `k > s`.
pub fn stirling1_unsigned(s: usize, k: usize) -> BigUint {
    if k > s {
        return BigUint::zero();
    }
    StirlingRow::new(s).entry(k)
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, j| acc * j)
}

/// hₙ(s) = n!/s!·⦋s,n⦌, the sum of 1/(l₁⋯lₙ) over compositions of `s` into
/// `n` positive parts.
pub fn h(n: usize, s: usize) -> BigRational {
    if s < n {
        return BigRational::zero();
    }
    let num = factorial(n) * stirling1_unsigned(s, n);
    BigRational::new(BigInt::from(num), BigInt::from(factorial(s)))
}

/// cₙ(s) = Σₚ ⦋s,p⦌⦋s,n-p⦌.
pub fn c(n: usize, s: usize) -> BigUint {
    let row = StirlingRow::new(s);
    (0..=n).map(|p| row.entry(p) * row.entry(n - p)).sum()
}

/// Checks 2·Σₚ (n-p)⦋s,p⦌⦋s,n-p⦌ = n·cₙ(s) exactly.
pub fn symmetrization_identity_check(n: usize, s: usize) -> bool {
    let row = StirlingRow::new(s);
    symmetrization_holds(&row, n)
}

pub(crate) fn symmetrization_holds(row: &StirlingRow, n: usize) -> bool {
    let weighted: BigUint = (0..=n).map(|p| row.entry(p) * row.entry(n - p) * (n - p)).sum();
    let plain: BigUint = (0..=n).map(|p| row.entry(p) * row.entry(n - p)).sum();
    weighted * 2u32 == plain * n
}

/// Number of integer partitions of `n`, by Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> BigUint {
    let mut table: Vec<BigInt> = vec![BigInt::one()];
    for i in 1..=n {
        let mut sum = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut part = table[i - g1].clone();
            if g2 <= i {
                part += &table[i - g2];
            }
            if k % 2 == 1 {
                sum += part;
            } else {
                sum -= part;
            }
        }
        table.push(sum);
    }
    table[n].to_biguint().expect("partition numbers are positive")
}

/// Elementary symmetric functions of {1, 1/2, …, 1/(s-1)} in double
/// precision, which give ⦋s,p⦌ = (s-1)!·e_{p-1} without big integers.
#[derive(Clone, Debug)]
pub struct HarmonicState {
    s: u64,
    esym: Vec<f64>,
    factorials: Vec<f64>,
}

impl HarmonicState {
    /// State at s = 1 (empty set), able to produce h_p for p ≤ `max_p`.
    pub fn new(max_p: usize) -> Self {
        let len = max_p.max(1);
        let mut esym = vec![0.0; len];
        esym[0] = 1.0;
        Self::with_esym(1, esym)
    }

    fn with_esym(s: u64, esym: Vec<f64>) -> Self {
        let mut factorials = vec![1.0; esym.len() + 1];
        for p in 1..factorials.len() {
            factorials[p] = factorials[p - 1] * p as f64;
        }
        HarmonicState { s, esym, factorials }
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn esym(&self) -> &[f64] {
        &self.esym
    }

    /// hₚ(s) at the current s.
    pub fn h(&self, p: usize) -> f64 {
        if p == 0 {
            return 0.0;
        }
        self.factorials[p] * self.esym[p - 1] / self.s as f64
    }

    /// Adds 1/s to the set and moves to s + 1.
    pub fn advance(&mut self) {
        let inv = 1.0 / self.s as f64;
        for k in (1..self.esym.len()).rev() {
            self.esym[k] += self.esym[k - 1] * inv;
        }
        self.s += 1;
    }
}

const CHUNK: u64 = 1 << 16;

/// Σ_{s=1}^{terms} term(state at s), evaluated in fixed-size chunks of s.
///
/// Each chunk first computes its own truncated product Π(1 + x/j); a
/// sequential prefix product then yields the state at every chunk start, and
/// the chunks are summed independently. Chunk boundaries do not depend on the
/// thread count, so neither does the result.
pub(crate) fn sum_over_harmonic<F>(max_p: usize, terms: u64, term: F) -> f64
where
    F: Fn(&HarmonicState) -> f64 + Sync + Send,
{
    let width = max_p.max(1);
    let chunks = terms.div_ceil(CHUNK) as usize;
    let bounds = |c: usize| {
        let a = 1 + c as u64 * CHUNK;
        (a, (a + CHUNK).min(terms + 1))
    };
    let locals = map_ordered(chunks, |c| {
        let (a, b) = bounds(c);
        let mut poly = vec![0.0; width];
        poly[0] = 1.0;
        for j in a..b {
            let inv = 1.0 / j as f64;
            for k in (1..width).rev() {
                poly[k] += poly[k - 1] * inv;
            }
        }
        poly
    });
    let mut starts = Vec::with_capacity(chunks);
    let mut prefix = vec![0.0; width];
    prefix[0] = 1.0;
    for local in &locals {
        starts.push(prefix.clone());
        let mut next = vec![0.0; width];
        for (i, pi) in prefix.iter().enumerate() {
            for (j, lj) in local.iter().enumerate().take(width - i) {
                next[i + j] += pi * lj;
            }
        }
        prefix = next;
    }
    let partials = map_ordered(chunks, |c| {
        let (a, b) = bounds(c);
        let mut state = HarmonicState::with_esym(a, starts[c].clone());
        let mut acc = Compensated::default();
        for _ in a..b {
            acc.add(term(&state));
            state.advance();
        }
        acc
    });
    let mut total = Compensated::default();
    for p in &partials {
        total.merge(p);
    }
    total.value()
}

/// Partial sum Σ_{s=1}^{terms} hₚ(s)·h_{m+1}(s) of σ(p, m).
///
/// The summation runs in compensated double precision (relative error near
/// 1e-13), far below the truncation error of any practical `terms`; the
/// result is returned at `digits` precision.
pub fn sigma_partial(p: usize, m: usize, terms: u64, digits: usize) -> Result<BigFloat, Error> {
    if terms < 1 {
        return Err(Error::Argument {
            what: "terms",
            min: 1,
        });
    }
    if p == 0 {
        return Ok(BigFloat::zero(digits));
    }
    let value = sum_over_harmonic(p.max(m + 1), terms, |st| st.h(p) * st.h(m + 1));
    Ok(BigFloat::from_f64(value, digits))
}

/// Partial sums of σ(p, m) at each of the ascending `checkpoints`, in one pass.
pub fn sigma_partials(p: usize, m: usize, checkpoints: &[u64]) -> Vec<f64> {
    let last = checkpoints.last().copied().unwrap_or(0);
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut state = HarmonicState::new(p.max(m + 1));
    let mut acc = Compensated::default();
    let mut next = checkpoints.iter().peekable();
    while next.peek().is_some_and(|&&c| c == 0) {
        out.push(0.0);
        next.next();
    }
    for s in 1..=last {
        acc.add(state.h(p) * state.h(m + 1));
        state.advance();
        while next.peek().is_some_and(|&&c| c == s) {
            out.push(acc.value());
            next.next();
        }
    }
    out
}
