//! JSON encoding of multivectors, forms and structure tensor files.
//!
//! ```json
//! {"signature":[0,6],"kind":"clifford","terms":[{"blade":[1,3,5],"coef":"1/8"}]}
//! ```
//!
//! Terms are written in canonical order. Forms use `[0, n]` as signature.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value as Json;
use thiserror::Error;

use super::expr::{format_coefficient, Kind, Value};
use crate::algebra::{Blade, Multivector, Scalar, Signature};
use crate::exterior::ExteriorForm;
use crate::structures::{G2Structure, SU3Structure, Spin7Structure};

/// Schema violation, located by a field path such as `terms[0].blade`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{path}: {message}")]
pub struct JsonError {
    pub path: String,
    pub message: String,
}

fn fail<T>(path: &str, message: impl Into<String>) -> Result<T, JsonError> {
    Err(JsonError { path: path.to_string(), message: message.into() })
}

#[derive(Serialize)]
struct TermRecord {
    blade: Vec<usize>,
    coef: String,
}

#[derive(Serialize)]
struct ValueRecord {
    signature: [usize; 2],
    kind: &'static str,
    terms: Vec<TermRecord>,
}

fn record<'a>(sig: [usize; 2], kind: Kind, terms: impl Iterator<Item = (Blade, &'a Scalar)>) -> ValueRecord {
    ValueRecord {
        signature: sig,
        kind: kind.name(),
        terms: terms
            .map(|(b, c)| TermRecord { blade: b.indices(), coef: format_coefficient(c) })
            .collect(),
    }
}

fn multivector_record(x: &Multivector) -> ValueRecord {
    let sig = x.signature();
    record([sig.p(), sig.q()], Kind::Clifford, x.iter())
}

fn form_record(x: &ExteriorForm) -> ValueRecord {
    record([0, x.dim()], Kind::Form, x.iter())
}

pub fn multivector_to_json(x: &Multivector) -> String {
    serde_json::to_string(&multivector_record(x)).expect("plain data serializes")
}

pub fn form_to_json(x: &ExteriorForm) -> String {
    serde_json::to_string(&form_record(x)).expect("plain data serializes")
}

pub fn to_json(value: &Value) -> String {
    match value {
        Value::Clifford(x) => multivector_to_json(x),
        Value::Form(x) => form_to_json(x),
    }
}

pub fn from_json(text: &str) -> Result<Value, JsonError> {
    let json: Json = match serde_json::from_str(text) {
        Ok(j) => j,
        Err(e) => return fail("$", format!("invalid JSON: {e}")),
    };
    value_from(&json, "")
}

pub fn multivector_from_json(text: &str) -> Result<Multivector, JsonError> {
    match from_json(text)? {
        Value::Clifford(x) => Ok(x),
        Value::Form(_) => fail("kind", "expected \"clifford\""),
    }
}

pub fn form_from_json(text: &str) -> Result<ExteriorForm, JsonError> {
    match from_json(text)? {
        Value::Form(x) => Ok(x),
        Value::Clifford(_) => fail("kind", "expected \"form\""),
    }
}

fn join(prefix: &str, field: &str) -> String {
    if prefix.is_empty() {
        field.to_string()
    } else {
        format!("{prefix}.{field}")
    }
}

fn parse_usize(v: &Json, path: &str) -> Result<usize, JsonError> {
    match v.as_u64() {
        Some(x) => Ok(x as usize),
        None => fail(path, "expected a nonnegative integer"),
    }
}

fn parse_coef(v: &Json, path: &str) -> Result<Scalar, JsonError> {
    let Some(s) = v.as_str() else {
        return fail(path, "expected a string \"num/den\"");
    };
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    if !digits(num) || !digits(den) {
        return fail(path, format!("malformed rational {s:?}"));
    }
    let num: BigInt = num.parse().expect("digits");
    let den: BigInt = den.parse().expect("digits");
    if den == BigInt::from(0) {
        return fail(path, "zero denominator");
    }
    Ok(Scalar::new(num * sign, den))
}

fn value_from(json: &Json, prefix: &str) -> Result<Value, JsonError> {
    let Some(obj) = json.as_object() else {
        return fail(if prefix.is_empty() { "$" } else { prefix }, "expected an object");
    };
    for key in obj.keys() {
        if !matches!(key.as_str(), "signature" | "kind" | "terms") {
            return fail(&join(prefix, key), "unknown field");
        }
    }

    let sig_path = join(prefix, "signature");
    let Some(sig_arr) = obj.get("signature").and_then(Json::as_array) else {
        return fail(&sig_path, "expected [p, q]");
    };
    if sig_arr.len() != 2 {
        return fail(&sig_path, "expected [p, q]");
    }
    let p = parse_usize(&sig_arr[0], &format!("{sig_path}[0]"))?;
    let q = parse_usize(&sig_arr[1], &format!("{sig_path}[1]"))?;
    let Ok(sig) = Signature::new(p, q) else {
        return fail(&sig_path, format!("need 1 <= p+q <= {}", Signature::MAX_DIM));
    };

    let kind_path = join(prefix, "kind");
    let kind = match obj.get("kind").and_then(Json::as_str) {
        Some("clifford") => Kind::Clifford,
        Some("form") => Kind::Form,
        _ => return fail(&kind_path, "expected \"clifford\" or \"form\""),
    };
    if kind == Kind::Form && p != 0 {
        return fail(&sig_path, "forms use signature [0, n]");
    }

    let terms_path = join(prefix, "terms");
    let Some(items) = obj.get("terms").and_then(Json::as_array) else {
        return fail(&terms_path, "expected an array");
    };
    let mut terms = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let here = format!("{terms_path}[{i}]");
        let Some(t) = item.as_object() else {
            return fail(&here, "expected an object");
        };
        for key in t.keys() {
            if key != "blade" && key != "coef" {
                return fail(&format!("{here}.{key}"), "unknown field");
            }
        }
        let blade_path = format!("{here}.blade");
        let Some(ix) = t.get("blade").and_then(Json::as_array) else {
            return fail(&blade_path, "expected an array of indices");
        };
        let mut indices = Vec::with_capacity(ix.len());
        for (j, v) in ix.iter().enumerate() {
            indices.push(parse_usize(v, &format!("{blade_path}[{j}]"))?);
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return fail(&blade_path, "indices must be strictly increasing");
        }
        if indices.iter().any(|&i| i == 0 || i > sig.dim()) {
            return fail(&blade_path, format!("index out of range 1..={}", sig.dim()));
        }
        let blade = Blade::from_indices(&indices).expect("validated above");
        let Some(coef) = t.get("coef") else {
            return fail(&format!("{here}.coef"), "missing");
        };
        terms.push((blade, parse_coef(coef, &format!("{here}.coef"))?));
    }
    Ok(match kind {
        Kind::Clifford => Value::Clifford(Multivector::from_terms(sig, terms).expect("validated")),
        Kind::Form => Value::Form(ExteriorForm::from_terms(sig.dim(), terms).expect("validated")),
    })
}

fn form_field(obj: &serde_json::Map<String, Json>, key: &str) -> Result<ExteriorForm, JsonError> {
    let Some(v) = obj.get(key) else {
        return fail(key, "missing");
    };
    match value_from(v, key)? {
        Value::Form(f) => Ok(f),
        Value::Clifford(_) => fail(&format!("{key}.kind"), "expected \"form\""),
    }
}

fn object(text: &str) -> Result<serde_json::Map<String, Json>, JsonError> {
    match serde_json::from_str::<Json>(text) {
        Ok(Json::Object(m)) => Ok(m),
        Ok(_) => fail("$", "expected an object"),
        Err(e) => fail("$", format!("invalid JSON: {e}")),
    }
}

fn structure_error(e: crate::error::AlgebraError) -> JsonError {
    JsonError { path: "$".into(), message: e.to_string() }
}

#[derive(Serialize)]
struct Su3Record {
    omega: ValueRecord,
    psi_plus: ValueRecord,
    psi_minus: ValueRecord,
}

/// `{"omega": form, "psi_plus": form, "psi_minus": form}`.
pub fn su3_to_json(s: &SU3Structure) -> String {
    serde_json::to_string(&Su3Record {
        omega: form_record(&s.omega),
        psi_plus: form_record(&s.psi_plus),
        psi_minus: form_record(&s.psi_minus),
    })
    .expect("plain data serializes")
}

pub fn su3_from_json(text: &str) -> Result<SU3Structure, JsonError> {
    let obj = object(text)?;
    SU3Structure::new(
        form_field(&obj, "omega")?,
        form_field(&obj, "psi_plus")?,
        form_field(&obj, "psi_minus")?,
    )
    .map_err(structure_error)
}

#[derive(Serialize)]
struct G2Record {
    phi: ValueRecord,
}

/// `{"phi": form}`.
pub fn g2_to_json(s: &G2Structure) -> String {
    serde_json::to_string(&G2Record { phi: form_record(&s.phi) }).expect("plain data serializes")
}

pub fn g2_from_json(text: &str) -> Result<G2Structure, JsonError> {
    let obj = object(text)?;
    G2Structure::new(form_field(&obj, "phi")?).map_err(structure_error)
}

#[derive(Serialize)]
struct Spin7Record {
    omega4: ValueRecord,
}

/// `{"omega4": form}`.
pub fn spin7_to_json(s: &Spin7Structure) -> String {
    serde_json::to_string(&Spin7Record { omega4: form_record(&s.omega4) })
        .expect("plain data serializes")
}

pub fn spin7_from_json(text: &str) -> Result<Spin7Structure, JsonError> {
    let obj = object(text)?;
    Spin7Structure::new(form_field(&obj, "omega4")?).map_err(structure_error)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{model_g2, model_spin7, model_su3};

    #[test]
    fn scalar_one() {
        let one = Multivector::one(Signature::euclidean(6).unwrap());
        assert_eq!(
            multivector_to_json(&one),
            r#"{"signature":[0,6],"kind":"clifford","terms":[{"blade":[],"coef":"1"}]}"#
        );
    }

    #[test]
    fn model_omega_has_three_records() {
        let json = form_to_json(&model_su3().omega);
        assert_eq!(
            json,
            r#"{"signature":[0,6],"kind":"form","terms":[{"blade":[1,2],"coef":"1"},{"blade":[3,4],"coef":"1"},{"blade":[5,6],"coef":"1"}]}"#
        );
        assert_eq!(form_from_json(&json).unwrap(), model_su3().omega);
    }

    #[test]
    fn malformed_blade_names_its_path() {
        let err = from_json(r#"{"signature":[0,6],"kind":"clifford","terms":[{"blade":[2,1],"coef":"1"}]}"#)
            .unwrap_err();
        assert_eq!(err.path, "terms[0].blade");
    }

    #[test]
    fn schema_errors() {
        let path = |s: &str| from_json(s).unwrap_err().path;
        assert_eq!(path("[1]"), "$");
        assert_eq!(path("not json"), "$");
        assert_eq!(path(r#"{"signature":[0],"kind":"form","terms":[]}"#), "signature");
        assert_eq!(path(r#"{"signature":[0,13],"kind":"form","terms":[]}"#), "signature");
        assert_eq!(path(r#"{"signature":[0,6],"kind":"spinor","terms":[]}"#), "kind");
        assert_eq!(path(r#"{"signature":[0,6],"kind":"form","terms":{}}"#), "terms");
        assert_eq!(
            path(r#"{"signature":[0,6],"kind":"form","terms":[{"blade":[7],"coef":"1"}]}"#),
            "terms[0].blade"
        );
        assert_eq!(
            path(r#"{"signature":[0,6],"kind":"form","terms":[{"blade":[1],"coef":"1/0"}]}"#),
            "terms[0].coef"
        );
        assert_eq!(
            path(r#"{"signature":[0,6],"kind":"form","terms":[{"blade":[1],"coef":2}]}"#),
            "terms[0].coef"
        );
        assert_eq!(
            path(r#"{"signature":[0,6],"kind":"form","terms":[{"blade":[1]}]}"#),
            "terms[0].coef"
        );
        assert_eq!(path(r#"{"signature":[0,6],"kind":"form","terms":[],"x":1}"#), "x");
    }

    #[test]
    fn negative_and_unreduced_coefficients() {
        let v = multivector_from_json(
            r#"{"signature":[1,2],"kind":"clifford","terms":[{"blade":[1],"coef":"-2/4"},{"blade":[1],"coef":"1/2"},{"blade":[3],"coef":"-3"}]}"#,
        )
        .unwrap();
        assert_eq!(v.to_string(), "-3*e3");
        assert_eq!(v.signature(), Signature::new(1, 2).unwrap());
    }

    #[test]
    fn structure_files() {
        let su3 = model_su3();
        assert_eq!(su3_from_json(&su3_to_json(&su3)).unwrap(), su3);
        assert_eq!(g2_from_json(&g2_to_json(&model_g2())).unwrap(), model_g2());
        assert_eq!(spin7_from_json(&spin7_to_json(&model_spin7())).unwrap(), model_spin7());
        assert_eq!(su3_from_json("{}").unwrap_err().path, "omega");
        assert_eq!(su3_from_json("").unwrap_err().path, "$");
        let wrong = g2_to_json(&model_g2()).replace("phi", "omega");
        assert!(su3_from_json(&wrong).is_err());
    }
}
