//! Deterministic JSON encodings for scalars, algebra elements, torus
//! elements, polynomials and modules.
//!
//! Scalars serialize as `{"num": {exp: coeff, ...}, "den": {...}}` where the
//! exponent keys are rational strings in units of `1/ell` (so a key may read
//! `"3/2"` when a genuine half power of `q^{1/ell}` occurs) and coefficients
//! are decimal rational strings.  Every map below is emitted through
//! `serde_json`'s ordered maps, so equal values always produce identical
//! bytes; the CLI relies on this for reproducible output files.

use crate::error::{Error, Result};
use crate::harishchandra::{CharPolynomial, U0Element};
use crate::linalg::SparseMat;
use crate::qfield::{LaurentPoly, QScalar};
use crate::repbuilder::Module;
use crate::rootdata::Weight;
use crate::uqalg::{AlgebraElement, GenSymbol, Word};
use num::{BigRational, Zero};
use serde_json::{json, Map, Value};
use std::str::FromStr;

/// Version tag stamped into every file the CLI writes.
pub const FORMAT: &str = "qcentre/1";

fn poly_to_json(p: &LaurentPoly) -> Value {
    let mut map = Map::new();
    for (exp, coeff) in p.terms() {
        let key = BigRational::new((*exp).into(), 2.into()).to_string();
        map.insert(key, Value::String(coeff.to_string()));
    }
    Value::Object(map)
}

fn poly_from_json(v: &Value) -> Result<LaurentPoly> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("polynomial must be a JSON object".into()))?;
    let mut acc = LaurentPoly::zero();
    for (key, val) in obj {
        let exp: BigRational = BigRational::from_str(key)
            .map_err(|e| Error::Parse(format!("bad exponent {key:?}: {e}")))?;
        let doubled = exp * BigRational::from_integer(2.into());
        if !doubled.is_integer() {
            return Err(Error::NonIntegralExponent(key.clone()));
        }
        let exp_i64: i64 = doubled
            .to_integer()
            .try_into()
            .map_err(|_| Error::Parse(format!("exponent {key:?} out of range")))?;
        let cs = val
            .as_str()
            .ok_or_else(|| Error::Parse("coefficient must be a string".into()))?;
        let coeff = BigRational::from_str(cs)
            .map_err(|e| Error::Parse(format!("bad coefficient {cs:?}: {e}")))?;
        if coeff.is_zero() {
            continue;
        }
        acc = &acc + &LaurentPoly::monomial(exp_i64, coeff);
    }
    Ok(acc)
}

pub fn scalar_to_json(s: &QScalar) -> Value {
    json!({
        "num": poly_to_json(s.numerator()),
        "den": poly_to_json(s.denominator()),
    })
}

pub fn scalar_from_json(v: &Value) -> Result<QScalar> {
    let num = poly_from_json(
        v.get("num")
            .ok_or_else(|| Error::Parse("scalar is missing \"num\"".into()))?,
    )?;
    let den = poly_from_json(
        v.get("den")
            .ok_or_else(|| Error::Parse("scalar is missing \"den\"".into()))?,
    )?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(QScalar::new(num, den))
}

pub fn weight_from_str(s: &str, rank: usize) -> Result<Weight> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("weight {s:?} is not parenthesised")))?;
    let coords: Vec<i64> = inner
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad weight coordinate {c:?}: {e}")))
        })
        .collect::<Result<_>>()?;
    if coords.len() != rank {
        return Err(Error::RankMismatch(s.to_string()));
    }
    Ok(Weight::new(coords))
}

fn symbol_from_str(s: &str, rank: usize) -> Result<GenSymbol> {
    if let Some(rest) = s.strip_prefix("K:") {
        return Ok(GenSymbol::K(weight_from_str(rest, rank)?));
    }
    let (head, idx) = s.split_at(1.min(s.len()));
    let parse_index = |idx: &str| -> Result<usize> {
        let n: usize = idx
            .parse()
            .map_err(|e| Error::Parse(format!("bad generator index in {s:?}: {e}")))?;
        if n == 0 || n > rank {
            return Err(Error::IndexOutOfRange(n, rank));
        }
        Ok(n - 1)
    };
    match head {
        "E" => Ok(GenSymbol::E(parse_index(idx)?)),
        "F" => Ok(GenSymbol::F(parse_index(idx)?)),
        _ => Err(Error::Parse(format!("unknown symbol {s:?}"))),
    }
}

pub fn element_to_json(x: &AlgebraElement) -> Value {
    let mut terms = Vec::new();
    for (word, coeff) in x.terms() {
        let syms: Vec<Value> = word
            .iter()
            .map(|s| Value::String(s.to_string()))
            .collect();
        terms.push(json!({
            "coeff": scalar_to_json(coeff),
            "word": syms,
        }));
    }
    json!({ "terms": terms })
}

/// Parse an element and straighten it through the algebra, so the input
/// words need not be normally ordered.
pub fn element_from_json(alg: &crate::uqalg::Algebra, v: &Value) -> Result<AlgebraElement> {
    let terms = v
        .get("terms")
        .and_then(|t| t.as_array())
        .ok_or_else(|| Error::Parse("element is missing \"terms\" array".into()))?;
    let rank = alg.rank();
    let mut acc = AlgebraElement::zero();
    for term in terms {
        let coeff = scalar_from_json(
            term.get("coeff")
                .ok_or_else(|| Error::Parse("term is missing \"coeff\"".into()))?,
        )?;
        let word_json = term
            .get("word")
            .and_then(|w| w.as_array())
            .ok_or_else(|| Error::Parse("term is missing \"word\" array".into()))?;
        let mut word: Word = Vec::with_capacity(word_json.len());
        for s in word_json {
            let s = s
                .as_str()
                .ok_or_else(|| Error::Parse("word entries must be strings".into()))?;
            word.push(symbol_from_str(s, rank)?);
        }
        let mut prod = AlgebraElement::one().scaled(&coeff);
        for sym in word {
            let letter = AlgebraElement::from_term(vec![sym], QScalar::one());
            prod = alg.multiply(&prod, &letter);
        }
        acc = acc.plus(&prod);
    }
    Ok(acc)
}

pub fn u0_to_json(h: &U0Element) -> Value {
    let mut map = Map::new();
    for (w, c) in h.terms() {
        map.insert(w.to_string(), scalar_to_json(c));
    }
    Value::Object(map)
}

pub fn u0_from_json(v: &Value, rank: usize) -> Result<U0Element> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("torus element must be a JSON object".into()))?;
    let mut h = U0Element::zero();
    for (key, val) in obj {
        h.add_term(weight_from_str(key, rank)?, scalar_from_json(val)?);
    }
    Ok(h)
}

pub fn char_poly_to_json(p: &CharPolynomial) -> Value {
    let mut terms = Vec::new();
    for (exps, coeff) in p.terms() {
        terms.push(json!({
            "exponents": exps,
            "coeff": scalar_to_json(coeff),
        }));
    }
    json!({ "terms": terms })
}

fn matrix_to_json(m: &SparseMat) -> Value {
    let mut entries = Vec::new();
    for j in 0..m.ncols() {
        for (i, v) in m.col(j) {
            entries.push(json!([i, j, scalar_to_json(v)]));
        }
    }
    json!({
        "rows": m.rows(),
        "cols": m.ncols(),
        "entries": entries,
    })
}

pub fn module_to_json(m: &Module) -> Value {
    let weights: Vec<Value> = m
        .weights()
        .iter()
        .map(|w| Value::String(w.to_string()))
        .collect();
    let rank = m.datum().rank();
    let e: Vec<Value> = (0..rank).map(|i| matrix_to_json(m.e_mat(i))).collect();
    let f: Vec<Value> = (0..rank).map(|i| matrix_to_json(m.f_mat(i))).collect();
    json!({
        "type": m.datum().name(),
        "dim": m.dim(),
        "weights": weights,
        "e": e,
        "f": f,
    })
}

/// Stable pretty rendering with a trailing newline, used for all CLI output
/// so that repeated runs are byte-identical.
pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialization cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::CartanDatum;
    use crate::uqalg::Algebra;

    fn alg(name: &str) -> Algebra {
        Algebra::new(CartanDatum::from_name(name).unwrap())
    }

    #[test]
    fn scalar_round_trip() {
        let a1 = alg("A1");
        let samples = [
            QScalar::zero(),
            QScalar::one(),
            QScalar::from_int(-7),
            QScalar::v_pow(3),
            QScalar::from_rational(BigRational::new(22.into(), 7.into())),
            a1.field().q_int(5, 1),
            a1.inv_qi_diff(0).clone(),
        ];
        for s in &samples {
            let v = scalar_to_json(s);
            assert_eq!(&scalar_from_json(&v).unwrap(), s);
        }
    }

    #[test]
    fn exponent_keys_are_in_base_units() {
        // ell = 2 in rank one, so v = q^{1/4} and v^2 has key "1" (one unit
        // of 1/ell), while v^3 needs the fractional key "3/2".
        let v2 = scalar_to_json(&QScalar::v_pow(2));
        assert_eq!(v2["num"]["1"], "1");
        let v3 = scalar_to_json(&QScalar::v_pow(3));
        assert_eq!(v3["num"]["3/2"], "1");
    }

    #[test]
    fn element_round_trip_straightens() {
        let a1 = alg("A1");
        // E then F in the input word: parsing must straighten it to the
        // normally ordered combination, not keep the literal word.
        let v: Value = serde_json::from_str(
            r#"{"terms":[{"coeff":{"num":{"0":"1"},"den":{"0":"1"}},
                 "word":["E1","F1"]}]}"#,
        )
        .unwrap();
        let parsed = element_from_json(&a1, &v).unwrap();
        let expect = a1.multiply(&a1.e(0), &a1.f(0));
        assert_eq!(parsed, expect);
        let round = element_from_json(&a1, &element_to_json(&parsed)).unwrap();
        assert_eq!(round, parsed);
    }

    #[test]
    fn element_json_uses_one_based_labels() {
        let a2 = alg("A2");
        let x = a2.multiply(
            &a2.f(1),
            &a2.k(&Weight::new(vec![-1, 2])),
        );
        let v = element_to_json(&x);
        let word = v["terms"][0]["word"].as_array().unwrap();
        let labels: Vec<&str> = word.iter().map(|s| s.as_str().unwrap()).collect();
        assert_eq!(labels, vec!["F2", "K:(-1,2)"]);
    }

    #[test]
    fn bad_inputs_are_rejected() {
        let a2 = alg("A2");
        for text in [
            r#"{"terms":[{"coeff":{"num":{"0":"1"},"den":{"0":"1"}},"word":["E3"]}]}"#,
            r#"{"terms":[{"coeff":{"num":{"0":"1"},"den":{"0":"1"}},"word":["Q1"]}]}"#,
            r#"{"terms":[{"coeff":{"num":{"0":"1"},"den":{"0":"1"}},"word":["K:(1)"]}]}"#,
            r#"{"terms":[{"coeff":{"num":{"0":"1"},"den":{}},"word":["E1"]}]}"#,
        ] {
            let v: Value = serde_json::from_str(text).unwrap();
            assert!(element_from_json(&a2, &v).is_err());
        }
    }

    #[test]
    fn torus_element_round_trip() {
        let a2 = alg("A2");
        let c = crate::rmatrix::central_element(&a2, &Weight::new(vec![1, 0]), 1, None).unwrap();
        let h = crate::harishchandra::hc_image(a2.datum(), &c).unwrap();
        let v = u0_to_json(&h);
        let back = u0_from_json(&v, 2).unwrap();
        assert_eq!(back.minus(&h).num_terms(), 0);
    }

    #[test]
    fn module_json_shape() {
        let a1 = alg("A1");
        let m = crate::repbuilder::highest_weight_module(&a1, &Weight::new(vec![1])).unwrap();
        let v = module_to_json(&m);
        assert_eq!(v["type"], "A1");
        assert_eq!(v["dim"], 2);
        assert_eq!(v["weights"].as_array().unwrap().len(), 2);
        // One raising and one lowering matrix, each with a single entry.
        assert_eq!(v["e"].as_array().unwrap().len(), 1);
        assert_eq!(v["e"][0]["entries"].as_array().unwrap().len(), 1);
        assert_eq!(v["f"][0]["entries"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn pretty_output_is_stable() {
        let s = QScalar::v_pow(-2);
        let a = pretty(&scalar_to_json(&s));
        let b = pretty(&scalar_to_json(&QScalar::v_pow(-2)));
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
    }
}
