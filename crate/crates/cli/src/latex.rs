// SPDX-License-Identifier: Apache-2.0

//! LaTeX fragments. Polynomials with more than one term are printed with
//! their content pulled out, e.g. `12 \Big( \zeta(2)^2 + 7 \zeta(4) \Big)`.

use mtz_core::{Basis, InversionIdentity, Monomial, Polynomial, ZetaPolynomial};
use num_rational::BigRational;
use num_traits::{One, Signed};

fn zeta_symbol(k: u32) -> String {
    format!("\\zeta({k})")
}

fn zbar_symbol(k: u32) -> String {
    format!("\\overline{{\\zeta}}_{{{k}}}")
}

fn rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

fn monomial(m: &Monomial, symbol: fn(u32) -> String) -> String {
    m.powers()
        .iter()
        .map(|&(k, e)| {
            if e == 1 {
                symbol(k)
            } else {
                format!("{}^{e}", symbol(k))
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn terms<B: Basis>(p: &Polynomial<B>, scale: &BigRational, symbol: fn(u32) -> String) -> String {
    let mut out = String::new();
    for (i, (m, c)) in p.ordered_terms().into_iter().enumerate() {
        let c = c / scale;
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        if m.is_constant() {
            out.push_str(&rational(&mag));
        } else if mag.is_one() {
            out.push_str(&monomial(m, symbol));
        } else {
            out.push_str(&format!("{} {}", rational(&mag), monomial(m, symbol)));
        }
    }
    out
}

fn factored<B: Basis>(p: &Polynomial<B>, symbol: fn(u32) -> String) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let g = p.content();
    if p.len() == 1 || g.is_one() {
        return terms(p, &BigRational::one(), symbol);
    }
    format!("{} \\Big( {} \\Big)", rational(&g), terms(p, &g, symbol))
}

pub fn closed_form(n: usize, p: &ZetaPolynomial) -> String {
    format!("{} = {}", zbar_symbol(n as u32), factored(p, zeta_symbol))
}

pub fn identity(id: &InversionIdentity) -> String {
    format!(
        "{} {} = {}",
        rational(&id.scale),
        zeta_symbol(id.n as u32),
        factored(&id.rhs, zbar_symbol)
    )
}

/// Wraps lines in an `align*` environment, one `&`-aligned row each.
pub fn align(lines: &[String]) -> String {
    let body: Vec<String> = lines.iter().map(|l| format!("& {l}")).collect();
    format!("\\begin{{align*}}\n{}\n\\end{{align*}}", body.join(" \\\\\n"))
}
