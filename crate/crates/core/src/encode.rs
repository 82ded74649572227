//! Canonical JSON encodings shared by the library and the CLI. Maps are
//! emitted with sorted keys, so identical values serialize identically.

use serde_json::{json, Map, Value};

use crate::algebra::field::{Fq, FqElem};
use crate::algebra::multipoly::MultiPoly;
use crate::algebra::tate::TateSeries;
use crate::algebra::unipoly::UniPoly;
use crate::frobenius::FrobeniusData;

/// F_q element: bare integer when l = 1, digit list otherwise.
pub fn fq_elem_json(field: &Fq, e: FqElem) -> Value {
    if field.l() == 1 {
        json!(field.digits(e)[0])
    } else {
        json!(field.digits(e))
    }
}

/// Ascending coefficient list.
pub fn unipoly_json(p: &UniPoly) -> Value {
    let f = p.field();
    Value::Array(p.coeffs().iter().map(|&c| fq_elem_json(f, c)).collect())
}

/// {"vars": [...], "terms": [{"exps": [...], "coeff": ...}]}
pub fn multipoly_json(p: &MultiPoly) -> Value {
    let f = p.field();
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(e, &c)| {
            json!({
                "exps": e,
                "coeff": fq_elem_json(f, c),
            })
        })
        .collect();
    json!({
        "vars": p.vars().names(),
        "terms": terms,
    })
}

/// {"precision": N, "terms": {"<theta-exponent>": MultiPoly}}
pub fn tate_json(s: &TateSeries) -> Value {
    let mut terms = Map::new();
    for (&e, c) in s.terms() {
        terms.insert(e.to_string(), multipoly_json(c));
    }
    json!({
        "precision": s.precision(),
        "terms": Value::Object(terms),
    })
}

/// {"f":..., "d":..., "r0":..., "cf":..., "e":[...], "Df":[...]}
pub fn frobenius_json(data: &FrobeniusData) -> Value {
    let field = data.f.field();
    json!({
        "f": unipoly_json(&data.f),
        "d": data.d,
        "r0": data.r0,
        "cf": data.cf.map(|c| fq_elem_json(field, c)).unwrap_or(Value::Null),
        "e": data.e.iter().map(unipoly_json).collect::<Vec<_>>(),
        "Df": data.df.iter().map(unipoly_json).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::fq_make;

    #[test]
    fn encodings_are_stable() {
        let f = fq_make(3, 1, None).unwrap();
        let p = UniPoly::from_ints(&f, &[1, 2]);
        assert_eq!(unipoly_json(&p).to_string(), "[1,2]");
        let f4 = fq_make(2, 2, Some(vec![1, 1, 1])).unwrap();
        let u = f4.generator();
        assert_eq!(fq_elem_json(&f4, u).to_string(), "[0,1]");
    }
}
