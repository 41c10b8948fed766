// SPDX-License-Identifier: Apache-2.0

//! Closed form against the numerical oracles, one row per depth.

use mtz_core::oracle::{brute_force, sigma_sum_eval};
use mtz_core::{closed_form, BigFloat, Error, WeightVector};

/// Depths up to which the box-truncated lattice sum is also run.
pub const BRUTE_FORCE_MAX_DEPTH: usize = 4;

/// Relative gaps (closed - oracle) / closed at the cutoff and at twice it.
#[derive(Clone, Debug)]
pub struct OracleCheck {
    pub value: f64,
    pub gap: f64,
    pub gap_doubled: f64,
}

impl OracleCheck {
    fn new(closed: f64, value: f64, doubled: f64) -> Self {
        let rel = |v: f64| {
            if closed == 0.0 {
                v.abs()
            } else {
                (closed - v) / closed
            }
        };
        OracleCheck {
            value,
            gap: rel(value),
            gap_doubled: rel(doubled),
        }
    }

    /// Below the closed form, within `tol`, and closer at the doubled cutoff.
    pub fn passes(&self, tol: f64) -> bool {
        let shrinks = self.gap_doubled < self.gap || (self.gap == 0.0 && self.gap_doubled == 0.0);
        self.gap >= 0.0 && self.gap_doubled >= 0.0 && self.gap <= tol && shrinks
    }
}

#[derive(Clone, Debug)]
pub struct VerifyRow {
    pub n: usize,
    pub closed: BigFloat,
    pub sigma: OracleCheck,
    pub lattice: Option<OracleCheck>,
    pub pass: bool,
}

pub fn verify(n_max: usize, cutoff: u64, tol: f64, digits: usize) -> Result<Vec<VerifyRow>, Error> {
    if cutoff < 1 {
        return Err(Error::Cutoff);
    }
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let closed = closed_form(n).eval_numeric(digits)?;
        let c = closed.to_f64();
        let sigma = OracleCheck::new(
            c,
            sigma_sum_eval(n, cutoff, digits)?.to_f64(),
            sigma_sum_eval(n, 2 * cutoff, digits)?.to_f64(),
        );
        let lattice = if n <= BRUTE_FORCE_MAX_DEPTH {
            let w = WeightVector::ones(n)?;
            Some(OracleCheck::new(
                c,
                brute_force(&w, cutoff)?.value.to_f64(),
                brute_force(&w, 2 * cutoff)?.value.to_f64(),
            ))
        } else {
            None
        };
        let pass = sigma.passes(tol) && lattice.as_ref().is_none_or(|l| l.passes(tol));
        rows.push(VerifyRow {
            n,
            closed,
            sigma,
            lattice,
            pass,
        });
    }
    Ok(rows)
}
