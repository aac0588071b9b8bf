//! JSON encoding of exact polynomials, models and vector fields.
//!
//! Rationals are `[num, den]` pairs; an integer that does not fit in 53 bits
//! is emitted as (and accepted from) a decimal string.

use super::gaussian::{GaussianRational, Rat};
use super::field::GradedVectorField;
use super::herm::HermPoly;
use super::holo::HoloPoly;
use super::model::ModelHypersurface;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum JsonError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
}

fn parse_err(msg: impl Into<String>) -> JsonError {
    JsonError::Parse(msg.into())
}

const MAX_SAFE: i64 = 1 << 53;

pub fn bigint_to_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) if x.abs() < MAX_SAFE => json!(x),
        _ => json!(v.to_string()),
    }
}

pub fn value_to_bigint(v: &Value) -> Result<BigInt, JsonError> {
    match v {
        Value::Number(n) => {
            if let Some(x) = n.as_i64() {
                Ok(BigInt::from(x))
            } else if let Some(x) = n.as_u64() {
                Ok(BigInt::from(x))
            } else {
                Err(parse_err(format!("expected integer, got {n}")))
            }
        }
        Value::String(s) => BigInt::from_str(s).map_err(|e| parse_err(format!("bad integer string {s:?}: {e}"))),
        other => Err(parse_err(format!("expected integer, got {other}"))),
    }
}

pub fn rat_to_value(r: &Rat) -> Value {
    Value::Array(vec![bigint_to_value(r.numer()), bigint_to_value(r.denom())])
}

pub fn value_to_rat(v: &Value) -> Result<Rat, JsonError> {
    let arr = v.as_array().ok_or_else(|| parse_err("rational must be a [num, den] array"))?;
    if arr.len() != 2 {
        return Err(parse_err("rational must have exactly two entries"));
    }
    let num = value_to_bigint(&arr[0])?;
    let den = value_to_bigint(&arr[1])?;
    if den.is_zero() {
        return Err(parse_err("rational denominator is zero"));
    }
    Ok(Rat::new(num, den))
}

pub fn gaussian_to_value(c: &GaussianRational) -> Value {
    json!({ "re": rat_to_value(&c.re), "im": rat_to_value(&c.im) })
}

pub fn value_to_gaussian(v: &Value) -> Result<GaussianRational, JsonError> {
    let obj = v.as_object().ok_or_else(|| parse_err("complex rational must be an object"))?;
    let re = obj.get("re").map(value_to_rat).transpose()?.unwrap_or_else(Rat::zero);
    let im = obj.get("im").map(value_to_rat).transpose()?.unwrap_or_else(Rat::zero);
    Ok(GaussianRational::new(re, im))
}

fn exps_to_value(e: &[u32]) -> Value {
    Value::Array(e.iter().map(|&x| json!(x)).collect())
}

fn value_to_exps(v: &Value, n: usize, what: &str) -> Result<Vec<u32>, JsonError> {
    let arr = v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array")))?;
    if arr.len() != n {
        return Err(parse_err(format!("{what} must have length {n}, got {}", arr.len())));
    }
    arr.iter()
        .map(|x| {
            x.as_u64()
                .and_then(|u| u32::try_from(u).ok())
                .ok_or_else(|| parse_err(format!("{what} entries must be small nonnegative integers")))
        })
        .collect()
}

pub fn herm_to_value(p: &HermPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|((a, b), c)| {
            json!({
                "alpha": exps_to_value(a),
                "beta": exps_to_value(b),
                "re": rat_to_value(&c.re),
                "im": rat_to_value(&c.im),
            })
        })
        .collect();
    json!({ "n": p.n(), "terms": terms })
}

pub fn value_to_herm(v: &Value) -> Result<HermPoly, JsonError> {
    let obj = v.as_object().ok_or_else(|| parse_err("polynomial must be an object"))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err("polynomial needs a variable count \"n\""))? as usize;
    let mut p = HermPoly::zero(n);
    let terms = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("polynomial needs a \"terms\" array"))?;
    for t in terms {
        let to = t.as_object().ok_or_else(|| parse_err("term must be an object"))?;
        let alpha = value_to_exps(to.get("alpha").ok_or_else(|| parse_err("term missing alpha"))?, n, "alpha")?;
        let beta = value_to_exps(to.get("beta").ok_or_else(|| parse_err("term missing beta"))?, n, "beta")?;
        let re = to.get("re").map(value_to_rat).transpose()?.unwrap_or_else(Rat::zero);
        let im = to.get("im").map(value_to_rat).transpose()?.unwrap_or_else(Rat::zero);
        p.add_term(alpha, beta, GaussianRational::new(re, im));
    }
    Ok(p)
}

pub fn holo_to_value(p: &HoloPoly) -> Value {
    herm_to_value(&p.to_herm())
}

pub fn value_to_holo(v: &Value) -> Result<HoloPoly, JsonError> {
    let herm = value_to_herm(v)?;
    let mut p = HoloPoly::zero(herm.n());
    for ((a, b), c) in herm.terms() {
        if b.iter().any(|&x| x != 0) {
            return Err(JsonError::Invariant(format!(
                "holomorphic polynomial has a conjugate exponent: alpha={a:?} beta={b:?}"
            )));
        }
        p.add_term(a.clone(), c.clone());
    }
    Ok(p)
}

pub fn field_to_value(y: &GradedVectorField) -> Value {
    json!({
        "f": y.f.iter().map(holo_to_value).collect::<Vec<_>>(),
        "f_w": y.f_w_linear.iter().map(gaussian_to_value).collect::<Vec<_>>(),
        "g": holo_to_value(&y.g),
        "g_uses_w": y.g_uses_w,
        "a_scalar": rat_to_value(&y.w_part_scalar),
        "weight": rat_to_value(&y.weight),
    })
}

pub fn value_to_field(v: &Value) -> Result<GradedVectorField, JsonError> {
    let obj = v.as_object().ok_or_else(|| parse_err("vector field must be an object"))?;
    let f: Vec<HoloPoly> = obj
        .get("f")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("vector field needs an \"f\" array"))?
        .iter()
        .map(value_to_holo)
        .collect::<Result<_, _>>()?;
    let n = f.len();
    if n == 0 {
        return Err(parse_err("vector field needs at least one coefficient"));
    }
    if f.iter().any(|p| p.n() != n) {
        return Err(JsonError::Invariant("coefficient variable counts disagree with field length".into()));
    }
    let f_w_linear = match obj.get("f_w") {
        Some(Value::Array(a)) => a.iter().map(value_to_gaussian).collect::<Result<Vec<_>, _>>()?,
        _ => vec![GaussianRational::zero(); n],
    };
    if f_w_linear.len() != n {
        return Err(parse_err("\"f_w\" length must match \"f\""));
    }
    let g = match obj.get("g") {
        Some(gv) => value_to_holo(gv)?,
        None => HoloPoly::zero(n),
    };
    let g_uses_w = obj.get("g_uses_w").and_then(Value::as_bool).unwrap_or(false);
    let w_part_scalar = obj.get("a_scalar").map(value_to_rat).transpose()?.unwrap_or_else(Rat::zero);
    let weight = obj
        .get("weight")
        .map(value_to_rat)
        .transpose()?
        .ok_or_else(|| parse_err("vector field needs a \"weight\""))?;
    Ok(GradedVectorField { f, f_w_linear, g, g_uses_w, w_part_scalar, weight })
}

pub fn model_to_value(m: &ModelHypersurface) -> Value {
    json!({
        "kind": "model",
        "n": m.n(),
        "m": m.degree(),
        "q": herm_to_value(m.q()),
        "allow_pluriharmonic": m.allows_pluriharmonic(),
    })
}

pub fn value_to_model(v: &Value) -> Result<ModelHypersurface, JsonError> {
    let obj = v.as_object().ok_or_else(|| parse_err("model must be an object"))?;
    let n = obj.get("n").and_then(Value::as_u64).ok_or_else(|| parse_err("model needs \"n\""))? as usize;
    let m = obj.get("m").and_then(Value::as_u64).ok_or_else(|| parse_err("model needs \"m\""))? as u32;
    let q = value_to_herm(obj.get("q").ok_or_else(|| parse_err("model needs \"q\""))?)?;
    let allow = obj.get("allow_pluriharmonic").and_then(Value::as_bool).unwrap_or(false);
    ModelHypersurface::with_flags(n, m, q, allow).map_err(|e| JsonError::Invariant(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roundtrip_with_big_integers() {
        let big = BigInt::from_str("123456789012345678901234567890").unwrap();
        let r = Rat::new(big.clone(), BigInt::from(7));
        let v = rat_to_value(&r);
        // numerator exceeds 2^53, so it serialises as a string
        assert!(v[0].is_string());
        assert!(v[1].is_number());
        assert_eq!(value_to_rat(&v).unwrap(), r);
    }

    #[test]
    fn poly_roundtrip() {
        let mut p = HermPoly::zero(2);
        p.add_term(vec![1, 0], vec![0, 1], GaussianRational::from_parts(1, 3, -2, 5));
        p.add_term(vec![0, 1], vec![1, 0], GaussianRational::from_parts(1, 3, 2, 5));
        let v = herm_to_value(&p);
        assert_eq!(value_to_herm(&v).unwrap(), p);
    }

    #[test]
    fn holo_rejects_conjugate_exponents() {
        let v = json!({"n": 1, "terms": [{"alpha": [0], "beta": [1], "re": [1,1], "im": [0,1]}]});
        assert!(matches!(value_to_holo(&v), Err(JsonError::Invariant(_))));
    }
}
