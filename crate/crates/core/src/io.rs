//! JSON reading and writing of point sets and linear systems.
//!
//! Point sets: `{"dim": n, "points": [[...], ...]}`. Systems:
//! `{"dim": n, "rows": [{"coeffs": [...], "rhs": r, "class": "UTVPI"}, ...]}`
//! where coefficients and right-hand sides are integers or `"p/q"` strings.

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::point::{parse_int, Int, Point, PointSet, Rational};
use crate::system::{parse_rational, Inequality, LinearSystem, SystemClass};

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

fn parse_dim(obj: &Value) -> Result<usize> {
    let dim = field(obj, "dim")?.as_u64().ok_or_else(|| Error::Parse("`dim` must be a positive integer".into()))?;
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    Ok(dim as usize)
}

fn int_value(v: &Value) -> Result<Int> {
    match v {
        Value::Number(n) => parse_int(&n.to_string()),
        Value::String(s) => parse_int(s),
        other => Err(Error::Parse(format!("expected an integer, found {other}"))),
    }
}

fn rational_value(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => Ok(Rational::from_integer(parse_int(&n.to_string())?)),
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("expected an integer or \"p/q\", found {other}"))),
    }
}

pub fn point_set_from_value(v: &Value) -> Result<PointSet> {
    let dim = parse_dim(v)?;
    let rows = field(v, "points")?.as_array().ok_or_else(|| Error::Parse("`points` must be an array".into()))?;
    let mut points = Vec::with_capacity(rows.len());
    for (row, r) in rows.iter().enumerate() {
        let coords = r.as_array().ok_or_else(|| Error::Parse(format!("point {row} is not an array")))?;
        if coords.len() != dim {
            return Err(Error::DimensionMismatch { row, expected: dim, found: coords.len() });
        }
        points.push(Point::new(coords.iter().map(int_value).collect::<Result<_>>()?));
    }
    PointSet::from_points(dim, points)
}

pub fn parse_point_set(text: &str) -> Result<PointSet> {
    point_set_from_value(&serde_json::from_str(text)?)
}

pub fn system_from_value(v: &Value) -> Result<LinearSystem> {
    let dim = parse_dim(v)?;
    let rows = field(v, "rows")?.as_array().ok_or_else(|| Error::Parse("`rows` must be an array".into()))?;
    let mut out = Vec::with_capacity(rows.len());
    for (row, r) in rows.iter().enumerate() {
        let coeffs = field(r, "coeffs")?.as_array().ok_or_else(|| Error::Parse(format!("row {row}: `coeffs` must be an array")))?;
        if coeffs.len() != dim {
            return Err(Error::DimensionMismatch { row, expected: dim, found: coeffs.len() });
        }
        let coeffs = coeffs.iter().map(rational_value).collect::<Result<Vec<_>>>()?;
        let rhs = rational_value(field(r, "rhs")?)?;
        let class = match r.get("class") {
            Some(Value::String(s)) => s.parse::<SystemClass>()?,
            Some(other) => return Err(Error::Parse(format!("row {row}: bad class {other}"))),
            None => SystemClass::General,
        };
        out.push(Inequality::new(coeffs, rhs, class));
    }
    LinearSystem::new(dim, out)
}

pub fn parse_system(text: &str) -> Result<LinearSystem> {
    system_from_value(&serde_json::from_str(text)?)
}

/// Pretty JSON for anything serializable in this crate.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}
