//! JSON encoding helpers.
//!
//! Integers are emitted as JSON numbers when `|x| < 2^53` and as decimal
//! strings otherwise, so every value survives a round trip through an IEEE
//! double. Objects are `serde_json::Map`, which keeps keys sorted.

use num_bigint::BigInt;
use serde_json::Value;

use singlink::IntMatrix;

const SAFE: i64 = 1 << 53;

pub fn int(x: i64) -> Value {
    if x.unsigned_abs() < SAFE as u64 {
        Value::from(x)
    } else {
        Value::from(x.to_string())
    }
}

pub fn wide(x: i128) -> Value {
    match i64::try_from(x) {
        Ok(v) => int(v),
        Err(_) => Value::from(x.to_string()),
    }
}

pub fn big(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => int(v),
        Err(_) => Value::from(x.to_string()),
    }
}

pub fn ints(xs: &[i64]) -> Value {
    Value::Array(xs.iter().map(|&x| int(x)).collect())
}

/// Row-major array of decimal strings.
pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(
        m.rows()
            .map(|row| Value::Array(row.iter().map(|x| Value::from(x.to_string())).collect()))
            .collect(),
    )
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_integers_become_strings() {
        assert_eq!(int(5), Value::from(5));
        assert_eq!(int(-(1 << 53) + 1), Value::from(-(1i64 << 53) + 1));
        assert_eq!(int(1 << 53), Value::from("9007199254740992"));
        assert_eq!(wide(1i128 << 70), Value::from("1180591620717411303424"));
        assert_eq!(big(&BigInt::from(-7)), Value::from(-7));
    }

    #[test]
    fn keys_are_sorted() {
        let v = serde_json::json!({"zeta": 1, "alpha": 2, "mid": {"b": 1, "a": 2}});
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"alpha":2,"mid":{"a":2,"b":1},"zeta":1}"#
        );
    }
}
