// SPDX-License-Identifier: Apache-2.0

//! ζ(n) as polynomials in ζ̄₂ … ζ̄ₙ, plus empirical scans over the closed forms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::{Monomial, ZbarPolynomial, ZetaPolynomial};
use crate::bigfloat::BigFloat;
use crate::combinatorics::partition_count;
use crate::constants::pi_const;
use crate::series::closed_forms;
use crate::Error;

/// Default denominator bound and flag threshold for [`pi_rationality_scan`].
pub const SCAN_MAX_DENOMINATOR: u64 = 1_000_000;
pub const SCAN_THRESHOLD_EXP: i32 = -20;

/// scale·ζ(n) = rhs(ζ̄₂, …, ζ̄ₙ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionIdentity {
    pub n: usize,
    pub scale: BigRational,
    pub rhs: ZbarPolynomial,
}

impl InversionIdentity {
    /// Substitutes the closed form of each ζ̄ₖ into `rhs` and compares with
    /// scale·ζ(n) exactly.
    pub fn verify(&self) -> bool {
        let closed = closed_forms(self.n);
        let lhs = ZetaPolynomial::var(self.n as u32).scale(&self.scale);
        self.rhs.substitute(|k| closed[k as usize].clone()) == lhs
    }
}

impl fmt::Display for InversionIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*zeta({}) = {}", self.scale, self.n, self.rhs)
    }
}

/// Identities for n = 2..=n_max. Each closed form is scale·ζ(n) plus
/// products of lower zeta values; those are rewritten with the identities
/// already derived.
pub fn invert(n_max: usize) -> Result<Vec<InversionIdentity>, Error> {
    if n_max < 2 {
        return Err(Error::Argument {
            what: "n_max",
            min: 2,
        });
    }
    let closed = closed_forms(n_max);
    // zeta_in_zbar[k] expresses ζ(k) over ζ̄ values
    let mut zeta_in_zbar: Vec<ZbarPolynomial> = vec![ZbarPolynomial::zero(); n_max + 1];
    let mut out = Vec::with_capacity(n_max - 1);
    for n in 2..=n_max {
        let lead = Monomial::single(n as u32);
        let scale = closed[n].coeff(&lead);
        if scale.is_zero() {
            return Err(Error::Inversion {
                n,
                reason: format!("closed form has no z({n}) term"),
            });
        }
        let mut rest = closed[n].clone();
        rest.add_term(lead, -scale.clone());
        if let Some((m, _)) = rest
            .iter()
            .find(|(m, _)| m.args().iter().any(|&k| k as usize >= n))
        {
            return Err(Error::Inversion {
                n,
                reason: format!("unexpected monomial {:?}", m.args()),
            });
        }
        let lower = rest.substitute(|k| zeta_in_zbar[k as usize].clone());
        let rhs = &ZbarPolynomial::var(n as u32) - &lower;
        zeta_in_zbar[n] = rhs.scale(&scale.recip());
        let identity = InversionIdentity { n, scale, rhs };
        if !identity.verify() {
            return Err(Error::Inversion {
                n,
                reason: "substitution check failed".into(),
            });
        }
        out.push(identity);
    }
    Ok(out)
}

/// Stored monomials of closed_form(n) against p(n) - p(n-1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialCount {
    pub n: usize,
    pub count: u64,
    pub predicted: u64,
    pub matches: bool,
}

/// Monomial counts for n = 1..=n_max. Uses p(0) = 1, so n = 1 predicts 0.
pub fn monomial_counts(n_max: usize) -> Vec<MonomialCount> {
    let closed = closed_forms(n_max);
    (1..=n_max)
        .map(|n| {
            let count = closed[n].len() as u64;
            let predicted = (partition_count(n) - partition_count(n - 1))
                .to_u64()
                .expect("fits in u64");
            MonomialCount {
                n,
                count,
                predicted,
                matches: count == predicted,
            }
        })
        .collect()
}

pub fn conjecture_monomial_count(n: usize) -> MonomialCount {
    if n == 0 {
        // closed_form(0) = 1, p(0) - p(-1) = 1
        return MonomialCount {
            n,
            count: 1,
            predicted: 1,
            matches: true,
        };
    }
    monomial_counts(n)[n - 1]
}

/// Best rational approximation with denominator at most `max_den`, from the
/// continued fraction of `x` and its semiconvergents.
pub fn best_rational(x: &BigRational, max_den: u64) -> BigRational {
    assert!(max_den >= 1);
    let bound = BigInt::from(max_den);
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::from(1));
    let (mut p1, mut q1) = (BigInt::from(1), BigInt::zero());
    let mut rem = x.clone();
    loop {
        let a = rem.floor().to_integer();
        let q2 = &a * &q1 + &q0;
        if q2 > bound {
            let k = (&bound - &q0).div_floor(&q1);
            let semi = BigRational::new(&p0 + &k * &p1, &q0 + &k * &q1);
            let conv = BigRational::new(p1, q1);
            return if (&semi - x).abs() < (&conv - x).abs() {
                semi
            } else {
                conv
            };
        }
        let p2 = &a * &p1 + &p0;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = &rem - BigRational::from_integer(a);
        if frac.is_zero() {
            return BigRational::new(p1, q1);
        }
        rem = frac.recip();
    }
}

#[derive(Clone, Debug)]
pub struct ScanRow {
    pub n: usize,
    /// ζ̄ₙ / πⁿ
    pub ratio: BigFloat,
    pub approximant: BigRational,
    pub residual: BigFloat,
    /// residual below 10⁻²⁰; a heuristic hint, not a proof of rationality
    pub flagged: bool,
}

/// Looks for small-denominator rationals close to ζ̄ₙ/πⁿ, n = 1..=n_max.
pub fn pi_rationality_scan(n_max: usize, digits: usize, max_den: u64) -> Result<Vec<ScanRow>, Error> {
    if n_max < 1 {
        return Err(Error::Argument {
            what: "n_max",
            min: 1,
        });
    }
    if digits < 50 {
        return Err(Error::Precision { digits, min: 50 });
    }
    if max_den < 1 {
        return Err(Error::Argument {
            what: "max_denominator",
            min: 1,
        });
    }
    let work = digits + 10;
    let pi = pi_const(work);
    let threshold = BigFloat::parse(&format!("1e{SCAN_THRESHOLD_EXP}"), work).expect("valid literal");
    let closed = closed_forms(n_max);
    let mut rows = Vec::with_capacity(n_max);
    for (n, form) in closed.iter().enumerate().skip(1) {
        let ratio = form.eval_numeric(work)?.div(&pi.powi(n));
        let approximant = best_rational(&ratio.to_rational(), max_den);
        let residual = ratio.sub(&BigFloat::from_rational(&approximant, work)).abs();
        let flagged = residual < threshold;
        rows.push(ScanRow {
            n,
            ratio: ratio.with_digits(digits),
            approximant,
            residual: residual.with_digits(digits),
            flagged,
        });
    }
    Ok(rows)
}
