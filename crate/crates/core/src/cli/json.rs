//! JSON encoding of exact data. Rationals are strings `"p/q"` (or plain
//! integers), complex scalars are `[re, im]`, matrices are row-major
//! nested arrays.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{rat_from_f64, IntMatrix, Matrix, RatComplex, RatComplexMatrix, RatMatrix, Rational};

pub const TORUS_SCHEMA: &str = "torus-mirror/torus@1";
pub const BUNDLE_SCHEMA: &str = "torus-mirror/bundle@1";
pub const UNITARIES_SCHEMA: &str = "torus-mirror/unitaries@1";
pub const REPORT_SCHEMA: &str = "torus-mirror/report@1";

fn schema_err(path: &str, message: impl Into<String>) -> Error {
    Error::Schema { path: path.to_string(), message: message.into() }
}

pub fn rat_json(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn complex_json(z: &RatComplex) -> Value {
    json!([rat_json(&z.re), rat_json(&z.im)])
}

pub fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => Value::String(x.to_string()),
    }
}

pub fn matrix_json<T>(m: &Matrix<T>, f: impl Fn(&T) -> Value) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(&f).collect())).collect())
}

pub fn int_matrix_json(m: &IntMatrix) -> Value {
    matrix_json(m, int_json)
}

pub fn rat_matrix_json(m: &RatMatrix) -> Value {
    matrix_json(m, rat_json)
}

pub fn complex_matrix_json(m: &RatComplexMatrix) -> Value {
    matrix_json(m, complex_json)
}

pub fn rat_vec_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat_json).collect())
}

pub fn complex_vec_json(v: &[RatComplex]) -> Value {
    Value::Array(v.iter().map(complex_json).collect())
}

/// Parse a rational. Floats are accepted only when `float_ok`, and are
/// converted to the exact dyadic rational they denote.
pub fn parse_rational(v: &Value, path: &str, float_ok: bool) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational_str(s).ok_or_else(|| schema_err(path, format!("not a rational: {s:?}"))),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                return Ok(Rational::from_integer(i.into()));
            }
            if let Some(u) = n.as_u64() {
                return Ok(Rational::from_integer(u.into()));
            }
            if !float_ok {
                return Err(schema_err(path, "non-integer number in exact mode; use a \"p/q\" string or --float"));
            }
            n.as_f64().and_then(rat_from_f64).ok_or_else(|| schema_err(path, "number is not finite"))
        }
        _ => Err(schema_err(path, "expected a rational (\"p/q\" string or number)")),
    }
}

fn parse_rational_str(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse::<BigInt>().ok()?, b.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn parse_integer(v: &Value, path: &str) -> Result<BigInt> {
    let q = parse_rational(v, path, false)?;
    if !q.is_integer() {
        return Err(schema_err(path, "expected an integer"));
    }
    Ok(q.to_integer())
}

/// `[re, im]`, or a bare real.
pub fn parse_complex(v: &Value, path: &str, float_ok: bool) -> Result<RatComplex> {
    match v {
        Value::Array(parts) => {
            if parts.len() != 2 {
                return Err(schema_err(path, "complex scalar must be [re, im]"));
            }
            Ok(RatComplex::new(
                parse_rational(&parts[0], &format!("{path}[0]"), float_ok)?,
                parse_rational(&parts[1], &format!("{path}[1]"), float_ok)?,
            ))
        }
        _ => Ok(RatComplex::new(parse_rational(v, path, float_ok)?, Rational::zero())),
    }
}

pub fn parse_matrix<T>(v: &Value, path: &str, entry: impl Fn(&Value, &str) -> Result<T>) -> Result<Matrix<T>> {
    let rows = v.as_array().ok_or_else(|| schema_err(path, "expected an array of rows"))?;
    if rows.is_empty() {
        return Err(schema_err(path, "matrix has no rows"));
    }
    let mut out = Vec::new();
    let mut width = None;
    for (i, row) in rows.iter().enumerate() {
        let rp = format!("{path}[{i}]");
        let row = row.as_array().ok_or_else(|| schema_err(&rp, "expected a row array"))?;
        if *width.get_or_insert(row.len()) != row.len() {
            return Err(schema_err(&rp, "ragged row"));
        }
        let parsed: Result<Vec<T>> = row.iter().enumerate().map(|(j, x)| entry(x, &format!("{rp}[{j}]"))).collect();
        out.push(parsed?);
    }
    Ok(Matrix::from_rows(out))
}

pub fn parse_square<T>(v: &Value, path: &str, entry: impl Fn(&Value, &str) -> Result<T>) -> Result<Matrix<T>> {
    let m = parse_matrix(v, path, entry)?;
    if !m.is_square() {
        return Err(schema_err(path, format!("expected a square matrix, got {} x {}", m.rows(), m.cols())));
    }
    Ok(m)
}

fn field<'a>(obj: &'a Value, key: &str) -> Option<&'a Value> {
    obj.get(key).filter(|v| !v.is_null())
}

fn require<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    field(obj, key).ok_or_else(|| schema_err(&format!("$.{key}"), "missing field"))
}

fn check_schema(obj: &Value, expected: &[&str]) -> Result<()> {
    if !obj.is_object() {
        return Err(schema_err("$", "expected a JSON object"));
    }
    if let Some(s) = field(obj, "schema") {
        let s = s.as_str().ok_or_else(|| schema_err("$.schema", "expected a string"))?;
        if !expected.contains(&s) {
            return Err(schema_err("$.schema", format!("unsupported schema {s:?}; expected one of {expected:?}")));
        }
    }
    Ok(())
}

/// A period matrix with an optional prescribed shift.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusInput {
    pub t: RatComplexMatrix,
    pub delta: Option<IntMatrix>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BundleInput {
    pub torus: TorusInput,
    pub r: u64,
    pub a: IntMatrix,
    pub mu: Vec<RatComplex>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UnitariesInput {
    pub r: u64,
    pub a: IntMatrix,
}

fn torus_fields(obj: &Value, float_ok: bool) -> Result<TorusInput> {
    let t = parse_square(require(obj, "T")?, "$.T", |v, p| parse_complex(v, p, float_ok))?;
    let delta = match field(obj, "delta") {
        Some(d) => {
            let d = parse_square(d, "$.delta", parse_integer)?;
            if d.rows() != t.rows() {
                return Err(schema_err("$.delta", "delta and T differ in size"));
            }
            Some(d)
        }
        None => None,
    };
    Ok(TorusInput { t, delta })
}

fn parse_r(obj: &Value) -> Result<u64> {
    let r = parse_integer(require(obj, "r")?, "$.r")?;
    r.to_u64().filter(|&r| r >= 1).ok_or_else(|| schema_err("$.r", "r must be a positive integer"))
}

pub fn parse_torus(obj: &Value, float_ok: bool) -> Result<TorusInput> {
    check_schema(obj, &[TORUS_SCHEMA, BUNDLE_SCHEMA])?;
    torus_fields(obj, float_ok)
}

pub fn parse_bundle(obj: &Value, float_ok: bool) -> Result<BundleInput> {
    check_schema(obj, &[BUNDLE_SCHEMA])?;
    let torus = torus_fields(obj, float_ok)?;
    let n = torus.t.rows();
    let r = parse_r(obj)?;
    let a = parse_square(require(obj, "A")?, "$.A", parse_integer)?;
    if a.rows() != n {
        return Err(schema_err("$.A", "A and T differ in size"));
    }
    let mu = match field(obj, "mu") {
        Some(Value::Array(xs)) => {
            if xs.len() != n {
                return Err(schema_err("$.mu", format!("expected {n} entries")));
            }
            xs.iter().enumerate().map(|(i, x)| parse_complex(x, &format!("$.mu[{i}]"), float_ok)).collect::<Result<_>>()?
        }
        Some(_) => return Err(schema_err("$.mu", "expected an array")),
        None => vec![RatComplex::zero(); n],
    };
    Ok(BundleInput { torus, r, a, mu })
}

pub fn parse_unitaries(obj: &Value) -> Result<UnitariesInput> {
    check_schema(obj, &[UNITARIES_SCHEMA, BUNDLE_SCHEMA])?;
    Ok(UnitariesInput { r: parse_r(obj)?, a: parse_square(require(obj, "A")?, "$.A", parse_integer)? })
}

pub fn torus_json(t: &RatComplexMatrix, delta: Option<&IntMatrix>) -> Value {
    let mut v = json!({ "schema": TORUS_SCHEMA, "T": complex_matrix_json(t) });
    if let Some(d) = delta {
        v["delta"] = int_matrix_json(d);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{cq, rat};

    #[test]
    fn rationals_round_trip() {
        for x in [rat(3, 4), rat(-7, 1), rat(0, 1)] {
            assert_eq!(parse_rational(&rat_json(&x), "$", false).unwrap(), x);
        }
        assert_eq!(parse_rational(&json!(5), "$", false).unwrap(), rat(5, 1));
        assert_eq!(parse_rational(&json!(0.5), "$", true).unwrap(), rat(1, 2));
        assert!(parse_rational(&json!(0.5), "$", false).is_err());
        assert!(parse_rational(&json!("1/0"), "$", false).is_err());
    }

    #[test]
    fn torus_round_trip() {
        let t = RatComplexMatrix::from_rows(vec![vec![cq(rat(0, 1), rat(1, 1))]]);
        let d = IntMatrix::from_i64(1, 1, &[1]);
        let back = parse_torus(&torus_json(&t, Some(&d)), false).unwrap();
        assert_eq!(back, TorusInput { t, delta: Some(d) });
    }

    #[test]
    fn schema_errors_carry_paths() {
        let bad = json!({ "T": [[[0, 1], [1, 0]], [[0, 1]]] });
        match parse_torus(&bad, false) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "$.T[1]"),
            other => panic!("{other:?}"),
        }
        let bad = json!({ "T": [[[0, 1], "x"]] });
        match parse_torus(&bad, false) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "$.T[0][1]"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_torus(&json!({"schema": "other@9", "T": [[1]]}), false), Err(Error::Schema { .. })));
    }

    #[test]
    fn bundle_defaults_mu_to_zero() {
        let v = json!({ "T": [[[0, 1]]], "r": 2, "A": [[1]] });
        let b = parse_bundle(&v, false).unwrap();
        assert_eq!(b.mu, vec![RatComplex::zero()]);
        assert!(parse_bundle(&json!({ "T": [[[0, 1]]], "r": 0, "A": [[1]] }), false).is_err());
    }
}
