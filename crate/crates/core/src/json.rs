//! JSON encodings.
//!
//! Elements are written as text (`"-42"`, `"x^2+1"`) and read from either
//! strings or JSON integers. Matrices are `{"ring", "rows", "cols",
//! "entries"}` objects; a bare array of rows is also accepted on input.
//! Factorizations are `{"ring", "W", "u", "v"}` or the shorthand
//! `{"W", "elementary": [...]}`; morphisms are `{"source", "target", "f00",
//! "f11"}` or `{"source", "target", "r"}` between elementary objects. A
//! `ring` or `W` given on an outer object is inherited by nested ones.

use serde_json::{json, Value};

use crate::artinian::CyclicDecomposition;
use crate::class::{CriticalData, MfClass};
use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::mf::{elementary_morphism, MatrixFactorization, MfMorphism};
use crate::ring::{Ring, RingElement};
use crate::smith::SmithDecomposition;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// The ring declared on `v`, falling back to `inherited`, then `Z`.
pub fn ring_of(v: &Value, inherited: Option<Ring>) -> Result<Ring> {
    let declared = match v.get("ring") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.parse::<Ring>()?),
        Some(other) => return Err(parse_err(format!("ring must be a string, got {other}"))),
    };
    match (declared, inherited) {
        (Some(a), Some(b)) if a != b => Err(Error::MixedRings(a, b)),
        (Some(a), _) => Ok(a),
        (None, Some(b)) => Ok(b),
        (None, None) => Ok(Ring::Integers),
    }
}

pub fn element_from_value(ring: Ring, v: &Value) -> Result<RingElement> {
    match v {
        Value::String(s) => ring.parse(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => ring.parse(&n.to_string()),
        other => Err(parse_err(format!("expected an element, got {other}"))),
    }
}

pub fn element_to_value(e: &RingElement) -> Value {
    Value::String(e.to_string())
}

fn elements_to_value<'a>(es: impl IntoIterator<Item = &'a RingElement>) -> Value {
    Value::Array(es.into_iter().map(element_to_value).collect())
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| parse_err(format!("missing field `{key}`")))
}

fn usize_field(v: &Value, key: &str) -> Result<Option<usize>> {
    match v.get(key) {
        None => Ok(None),
        Some(x) => x
            .as_u64()
            .map(|n| Some(n as usize))
            .ok_or_else(|| parse_err(format!("`{key}` must be a non-negative integer"))),
    }
}

pub fn matrix_from_value(v: &Value, inherited: Option<Ring>) -> Result<RingMatrix> {
    let (ring, rows_value, rows, cols) = match v {
        Value::Array(_) => (inherited.unwrap_or(Ring::Integers), v, None, None),
        Value::Object(_) => (
            ring_of(v, inherited)?,
            get(v, "entries")?,
            usize_field(v, "rows")?,
            usize_field(v, "cols")?,
        ),
        other => return Err(parse_err(format!("expected a matrix, got {other}"))),
    };
    let row_values = rows_value
        .as_array()
        .ok_or_else(|| parse_err("matrix entries must be an array of rows"))?;
    let mut data = Vec::with_capacity(row_values.len());
    for row in row_values {
        let row = row
            .as_array()
            .ok_or_else(|| parse_err("each matrix row must be an array"))?;
        data.push(
            row.iter()
                .map(|e| element_from_value(ring, e))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let nrows = data.len();
    let ncols = match (cols, data.first()) {
        (Some(c), _) => c,
        (None, Some(first)) => first.len(),
        (None, None) => 0,
    };
    if let Some(r) = rows {
        if r != nrows {
            return Err(Error::Shape(format!("declared {r} rows but found {nrows}")));
        }
    }
    if nrows == 0 && ncols > 0 {
        return Ok(RingMatrix::zeros(ring, 0, ncols));
    }
    RingMatrix::from_rows(ring, ncols, data)
}

pub fn matrix_to_value(m: &RingMatrix) -> Value {
    let entries: Vec<Value> = m.to_rows().iter().map(elements_to_value).collect();
    json!({
        "ring": m.ring().to_string(),
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

/// Reads a factorization, inheriting `ring` and `W` from an outer object.
pub fn factorization_from_value(
    v: &Value,
    inherited_ring: Option<Ring>,
    inherited_w: Option<&RingElement>,
) -> Result<MatrixFactorization> {
    if !v.is_object() {
        return Err(parse_err("a factorization must be a JSON object"));
    }
    let ring = ring_of(v, inherited_ring.or(inherited_w.map(RingElement::ring)))?;
    let w = match v.get("W") {
        Some(w) => element_from_value(ring, w)?,
        None => inherited_w
            .cloned()
            .ok_or_else(|| parse_err("missing field `W`"))?,
    };
    if let Some(list) = v.get("elementary") {
        let vs = list
            .as_array()
            .ok_or_else(|| parse_err("`elementary` must be an array"))?
            .iter()
            .map(|e| element_from_value(ring, e))
            .collect::<Result<Vec<_>>>()?;
        return MatrixFactorization::elementary_sum(&vs, &w);
    }
    let u = matrix_from_value(get(v, "u")?, Some(ring))?;
    let vm = matrix_from_value(get(v, "v")?, Some(ring))?;
    MatrixFactorization::new(u, vm, w)
}

pub fn factorization_to_value(a: &MatrixFactorization) -> Value {
    json!({
        "ring": a.ring().to_string(),
        "W": element_to_value(a.w()),
        "rho": a.rho(),
        "u": matrix_to_value(a.u()),
        "v": matrix_to_value(a.v()),
    })
}

pub fn morphism_from_value(v: &Value, inherited_ring: Option<Ring>) -> Result<MfMorphism> {
    if !v.is_object() {
        return Err(parse_err("a morphism must be a JSON object"));
    }
    let ring = ring_of(v, inherited_ring)?;
    let w = v
        .get("W")
        .map(|w| element_from_value(ring, w))
        .transpose()?;
    let source = factorization_from_value(get(v, "source")?, Some(ring), w.as_ref())?;
    let target = factorization_from_value(get(v, "target")?, Some(ring), w.as_ref())?;
    if let Some(r) = v.get("r") {
        return elementary_morphism(&source, &target, &element_from_value(ring, r)?);
    }
    let f00 = matrix_from_value(get(v, "f00")?, Some(ring))?;
    let f11 = matrix_from_value(get(v, "f11")?, Some(ring))?;
    MfMorphism::new(source, target, f00, f11)
}

pub fn morphism_to_value(f: &MfMorphism) -> Value {
    json!({
        "ring": f.source().ring().to_string(),
        "W": element_to_value(f.source().w()),
        "source": factorization_to_value(f.source()),
        "target": factorization_to_value(f.target()),
        "f00": matrix_to_value(f.f00()),
        "f11": matrix_to_value(f.f11()),
    })
}

pub fn smith_to_value(s: &SmithDecomposition) -> Value {
    json!({
        "ring": s.d.ring().to_string(),
        "rank": s.rank,
        "invariant_factors": elements_to_value(&s.invariant_factors),
        "D": matrix_to_value(&s.d),
        "U": matrix_to_value(&s.u),
        "V": matrix_to_value(&s.v),
    })
}

fn labels_to_value(labels: &[(RingElement, u32)]) -> Value {
    Value::Array(
        labels
            .iter()
            .map(|(p, i)| json!([p.to_string(), i]))
            .collect(),
    )
}

pub fn critical_data_to_value(cd: &CriticalData) -> Value {
    json!({
        "W": element_to_value(&cd.w),
        "unit": element_to_value(&cd.unit),
        "W0": element_to_value(&cd.w0),
        "critical": labels_to_value(&cd.critical),
    })
}

pub fn class_to_value(c: &MfClass) -> Value {
    json!({
        "W": element_to_value(&c.critical_data.w),
        "labels": labels_to_value(&c.labels),
    })
}

/// Reads `{"W", "labels": [["p", i], ...]}`.
pub fn class_from_value(v: &Value, inherited_ring: Option<Ring>) -> Result<MfClass> {
    let ring = ring_of(v, inherited_ring)?;
    let w = element_from_value(ring, get(v, "W")?)?;
    let cd = crate::class::critical_decompose(&w)?;
    let labels = get(v, "labels")?
        .as_array()
        .ok_or_else(|| parse_err("`labels` must be an array"))?
        .iter()
        .map(|l| {
            let pair = l.as_array().filter(|a| a.len() == 2);
            let pair = pair.ok_or_else(|| parse_err("each label is a [prime, size] pair"))?;
            let p = element_from_value(ring, &pair[0])?.canonical();
            let i = pair[1]
                .as_u64()
                .ok_or_else(|| parse_err("label size must be a non-negative integer"))?;
            Ok((p, i as u32))
        })
        .collect::<Result<Vec<_>>>()?;
    MfClass::new(cd, labels)
}

pub fn decomposition_to_value(d: &CyclicDecomposition) -> Value {
    serde_json::to_value(d).expect("plain data serializes")
}
