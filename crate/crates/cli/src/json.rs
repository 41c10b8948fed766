// SPDX-License-Identifier: Apache-2.0

//! JSON encoding of polynomials and identities.
//!
//! A polynomial is a list of `{"monomial": [k, ...], "num": "..", "den": ".."}`
//! with numerator and denominator as decimal strings.

use mtz_core::{Basis, InversionIdentity, Monomial, Polynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

pub fn rational_to_json(q: &BigRational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

pub fn rational_from_json(v: &Value) -> Option<BigRational> {
    let num: BigInt = v.get("num")?.as_str()?.parse().ok()?;
    let den: BigInt = v.get("den")?.as_str()?.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(num, den))
}

pub fn polynomial_to_json<B: Basis>(p: &Polynomial<B>) -> Value {
    Value::Array(
        p.ordered_terms()
            .into_iter()
            .map(|(m, c)| {
                let mut entry = rational_to_json(c);
                entry["monomial"] = json!(m.args());
                entry
            })
            .collect(),
    )
}

pub fn polynomial_from_json<B: Basis>(v: &Value) -> Option<Polynomial<B>> {
    let mut p = Polynomial::zero();
    for entry in v.as_array()? {
        let args = entry
            .get("monomial")?
            .as_array()?
            .iter()
            .map(|a| a.as_u64().and_then(|k| u32::try_from(k).ok()))
            .collect::<Option<Vec<u32>>>()?;
        p.add_term(Monomial::new(args), rational_from_json(entry)?);
    }
    Some(p)
}

pub fn identity_to_json(id: &InversionIdentity) -> Value {
    json!({ "n": id.n, "scale": rational_to_json(&id.scale), "rhs": polynomial_to_json(&id.rhs) })
}

pub fn identity_from_json(v: &Value) -> Option<InversionIdentity> {
    Some(InversionIdentity {
        n: usize::try_from(v.get("n")?.as_u64()?).ok()?,
        scale: rational_from_json(v.get("scale")?)?,
        rhs: polynomial_from_json(v.get("rhs")?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use mtz_core::closed_form;

    #[test]
    fn schema() {
        let v = polynomial_to_json(&closed_form(4));
        assert_eq!(
            v,
            json!([
                {"monomial": [2, 2], "num": "12", "den": "1"},
                {"monomial": [4], "num": "84", "den": "1"}
            ])
        );
    }

    #[test]
    fn rejects_malformed() {
        assert!(polynomial_from_json::<mtz_core::Zeta>(&json!({"a": 1})).is_none());
        assert!(
            polynomial_from_json::<mtz_core::Zeta>(&json!([{"monomial": [2], "num": "1", "den": "0"}]))
                .is_none()
        );
        assert!(
            polynomial_from_json::<mtz_core::Zeta>(&json!([{"monomial": [-2], "num": "1", "den": "1"}]))
                .is_none()
        );
    }
}
