// SPDX-License-Identifier: Apache-2.0

//! WebAssembly bindings for the static page in `www/`.
//!
//! Curves are returned as flat `[x0, y0, x1, y1, ...]` arrays so the page can
//! read them straight out of a `Float64Array`.

use mtz_core::inversion::invert;
use mtz_core::oracle::{gauss_lhs_partials, gauss_rhs, sigma_sum_partials};
use mtz_core::{closed_form, BigFloat};
use wasm_bindgen::prelude::*;

/// Largest depth offered by the page; closed forms stay small up to here.
pub const MAX_DEPTH: usize = 40;

fn check_depth(n: usize) -> Result<(), JsError> {
    if (1..=MAX_DEPTH).contains(&n) {
        Ok(())
    } else {
        Err(JsError::new(&format!("n must be between 1 and {MAX_DEPTH}")))
    }
}

/// About `points` log-spaced cutoffs from 1 to `max_terms`, ascending and distinct.
pub fn log_checkpoints(max_terms: u32, points: u32) -> Vec<u64> {
    let max = u64::from(max_terms.max(1));
    let points = points.max(2);
    let mut out: Vec<u64> = (0..points)
        .map(|i| (max as f64).powf(f64::from(i) / f64::from(points - 1)).round() as u64)
        .collect();
    out.dedup();
    out
}

/// Closed form of zbar(n) as text, e.g. `12*z(2)^2 + 84*z(4)`.
#[wasm_bindgen]
pub fn closed_form_text(n: usize) -> Result<String, JsError> {
    check_depth(n)?;
    Ok(closed_form(n).to_string())
}

/// Numeric value of the closed form with `sig` significant digits.
#[wasm_bindgen]
pub fn closed_form_value(n: usize, sig: usize) -> Result<String, JsError> {
    check_depth(n)?;
    let v = closed_form(n)
        .eval_numeric(sig.max(10) + 5)
        .map_err(|e| JsError::new(&e.to_string()))?;
    Ok(v.to_sci_string(sig.max(1)))
}

/// Inversion identity for zeta(n), n >= 2.
#[wasm_bindgen]
pub fn inversion_text(n: usize) -> Result<String, JsError> {
    check_depth(n)?;
    if n < 2 {
        return Err(JsError::new("n must be at least 2"));
    }
    let ids = invert(n).map_err(|e| JsError::new(&e.to_string()))?;
    Ok(ids.last().expect("n >= 2").to_string())
}

/// Sigma-decomposition partial sums of zbar(n) against the cutoff S.
#[wasm_bindgen]
pub fn sigma_curve(n: usize, max_terms: u32, points: u32) -> Result<Vec<f64>, JsError> {
    check_depth(n)?;
    let cps = log_checkpoints(max_terms, points);
    let values = sigma_sum_partials(n, &cps);
    Ok(cps.iter().zip(values).flat_map(|(&s, v)| [s as f64, v]).collect())
}

/// |lhs - rhs| of the Pochhammer-square identity against the cutoff S.
#[wasm_bindgen]
pub fn gauss_curve(x: f64, max_terms: u32, points: u32) -> Result<Vec<f64>, JsError> {
    let cps = log_checkpoints(max_terms, points);
    let lhs = gauss_lhs_partials(x, &cps).map_err(|e| JsError::new(&e.to_string()))?;
    let rhs = gauss_rhs(&BigFloat::from_f64(x, 30), 30)
        .map_err(|e| JsError::new(&e.to_string()))?
        .to_f64();
    Ok(cps
        .iter()
        .zip(lhs)
        .flat_map(|(&s, l)| [s as f64, (l - rhs).abs()])
        .collect())
}
