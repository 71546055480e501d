//! JSON schemas shared by the library and the command line.
//!
//! Integers are written as JSON numbers when they fit in an `i64` and as
//! decimal strings otherwise; both forms are accepted on input. Objects are
//! emitted with sorted keys.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinatorics::Surjection;
use crate::error::{Error, Result};
use crate::homology::HomologyGroup;
use crate::operad::OperadElement;

pub(crate) mod int {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(i64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(v) {
            Ok(small) => Repr::Small(small),
            Err(_) => Repr::Text(v.to_string()),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Small(v) => Ok(BigInt::from(v)),
            Repr::Text(t) => t.parse().map_err(D::Error::custom),
        }
    }
}

pub(crate) mod int_vec {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Wrapped(#[serde(with = "super::int")] BigInt);

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<Wrapped> = v.iter().cloned().map(Wrapped).collect();
        wrapped.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Ok(Vec::<Wrapped>::deserialize(d)?.into_iter().map(|w| w.0).collect())
    }
}

/// An integer in the shared encoding.
pub fn int_to_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

/// A comma-separated sequence such as `1,2,1,2`.
pub fn parse_sequence(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::Malformed(format!("{part:?} is not a sequence entry")))
        })
        .collect()
}

pub fn surjection_to_json(f: &Surjection) -> Value {
    serde_json::to_value(f).expect("serializable")
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    #[serde(with = "int")]
    coeff: BigInt,
    seq: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    arity: usize,
    degree: usize,
    terms: Vec<TermRepr>,
}

/// `{"arity": k, "degree": d, "terms": [{"coeff": c, "seq": [..]}]}`, terms in
/// the order of the surjections.
pub fn element_to_json(e: &OperadElement) -> Value {
    let repr = ElementRepr {
        arity: e.arity(),
        degree: e.degree(),
        terms: e
            .terms()
            .map(|(f, c)| TermRepr {
                coeff: c.clone(),
                seq: f.entries().iter().map(|&x| x as usize).collect(),
            })
            .collect(),
    };
    serde_json::to_value(repr).expect("serializable")
}

/// Degenerate sequences contribute zero; every term must have the stated
/// arity and degree.
pub fn element_from_json(value: &Value) -> Result<OperadElement> {
    let repr: ElementRepr =
        serde_json::from_value(value.clone()).map_err(|e| Error::Malformed(format!("operad element: {e}")))?;
    let mut out = OperadElement::zero(repr.arity, repr.degree);
    for term in repr.terms {
        if term.seq.len() != repr.arity + repr.degree {
            return Err(Error::DegreeMismatch {
                expected: repr.degree,
                found: term.seq.len().saturating_sub(repr.arity),
            });
        }
        let e = OperadElement::from_sequence(&term.seq, repr.arity)?;
        out = out.add(&e.scale(&term.coeff))?;
    }
    Ok(out)
}

/// Per degree `{"degree", "rank", "torsion", "exact"}`.
pub fn homology_to_json(groups: &[HomologyGroup]) -> Value {
    Value::Array(groups.iter().map(|g| serde_json::to_value(g).expect("serializable")).collect())
}

/// Stable text form: sorted keys, two-space indentation, trailing newline.
pub fn to_canonical_string(value: &Value) -> String {
    // serde_json's default map is ordered by key
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// An error as a JSON object for diagnostics.
pub fn error_to_json(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_round_trip() {
        let e = OperadElement::from_sequence(&[1, 2, 3, 1, 2], 3).unwrap().differential();
        let v = element_to_json(&e);
        assert_eq!(element_from_json(&v).unwrap(), e);
        assert_eq!(v["terms"][0]["coeff"], json!(1));
    }

    #[test]
    fn big_coefficients_survive() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let e = OperadElement::from_sequence(&[1, 2], 2).unwrap().scale(&big);
        let v = element_to_json(&e);
        assert_eq!(v["terms"][0]["coeff"], json!("123456789012345678901234567890"));
        assert_eq!(element_from_json(&v).unwrap(), e);
    }

    #[test]
    fn degenerate_terms_vanish() {
        let v = json!({"arity": 2, "degree": 1, "terms": [{"coeff": 3, "seq": [1, 1, 2]}]});
        assert!(element_from_json(&v).unwrap().is_zero());
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_sequence("1,x"), Err(Error::Malformed(_))));
        assert_eq!(parse_sequence(" 1, 2,1 ").unwrap(), vec![1, 2, 1]);
        let v = json!({"arity": 2, "terms": []});
        assert!(matches!(element_from_json(&v), Err(Error::Malformed(_))));
    }

    #[test]
    fn keys_are_sorted() {
        let s = to_canonical_string(&json!({"b": 1, "a": 2}));
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
    }
}
