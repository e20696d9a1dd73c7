//! Matrix JSON format: `{"rows": r, "cols": c, "entries": [[...], ...]}` with
//! rational entries as `"p/q"` strings and polynomial entries as term lists.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::Matrix;
use crate::error::{Error, Result};
use crate::poly::MPoly;
use crate::scalar::{parse_q, q_to_string, Scalar, Q};

/// Entry types that have a JSON encoding inside the matrix format.
pub trait JsonEntry: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;
}

impl JsonEntry for Q {
    fn to_json(&self) -> Value {
        Value::String(q_to_string(self))
    }

    fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::String(s) => parse_q(s),
            other => Err(Error::Parse(format!("expected a \"p/q\" string, found {other}"))),
        }
    }
}

impl JsonEntry for MPoly {
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }

    fn from_json(value: &Value) -> Result<Self> {
        MPoly::deserialize(value).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Nested vectors of rationals, encoded as nested arrays of `"p/q"` strings.
pub trait RationalTree: Sized {
    fn to_value(&self) -> Value;
    fn from_value(value: &Value) -> Result<Self>;
}

impl RationalTree for Q {
    fn to_value(&self) -> Value {
        self.to_json()
    }

    fn from_value(value: &Value) -> Result<Self> {
        Q::from_json(value)
    }
}

impl<T: RationalTree> RationalTree for Vec<T> {
    fn to_value(&self) -> Value {
        Value::Array(self.iter().map(RationalTree::to_value).collect())
    }

    fn from_value(value: &Value) -> Result<Self> {
        match value {
            Value::Array(items) => items.iter().map(T::from_value).collect(),
            other => Err(Error::Parse(format!("expected an array, found {other}"))),
        }
    }
}

/// For `#[serde(with = "rational")]` on fields holding rationals.
pub mod rational {
    use super::*;

    pub fn serialize<T: RationalTree, S: Serializer>(value: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
        value.to_value().serialize(s)
    }

    pub fn deserialize<'de, T: RationalTree, D: Deserializer<'de>>(d: D) -> std::result::Result<T, D::Error> {
        let value = Value::deserialize(d)?;
        T::from_value(&value).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Value>>,
}

impl<T: JsonEntry> Matrix<T> {
    pub fn to_json(&self) -> Value {
        let raw = RawMatrix {
            rows: self.rows(),
            cols: self.cols(),
            entries: (0..self.rows())
                .map(|i| self.row(i).iter().map(JsonEntry::to_json).collect())
                .collect(),
        };
        serde_json::to_value(raw).expect("matrix serializes")
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let raw = RawMatrix::deserialize(value).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(Error::Parse(format!(
                "entries do not form a {}x{} array",
                raw.rows, raw.cols
            )));
        }
        let data = raw
            .entries
            .iter()
            .flatten()
            .map(T::from_json)
            .collect::<Result<Vec<T>>>()?;
        Matrix::from_vec(raw.rows, raw.cols, data)
    }
}

impl<T: JsonEntry> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de, T: JsonEntry> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = Value::deserialize(deserializer)?;
        Matrix::from_json(&value).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};

    #[test]
    fn rational_roundtrip() {
        let m = Matrix::from_rows(vec![vec![qf(1, 2), q(-3)], vec![q(0), qf(7, 5)]]).unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"{"cols":2,"entries":[["1/2","-3/1"],["0/1","7/5"]],"rows":2}"#);
        let back: Matrix<Q> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn polynomial_roundtrip() {
        let t = MPoly::var(0);
        let m = Matrix::from_rows(vec![vec![&t * &t, MPoly::constant(qf(1, 3))]]).unwrap();
        let text = serde_json::to_string(&m).unwrap();
        let back: Matrix<MPoly> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn malformed_rejected() {
        for bad in [
            r#"{"rows":2,"cols":1,"entries":[["1/1"]]}"#,
            r#"{"rows":1,"cols":1,"entries":[["1/0"]]}"#,
            r#"{"rows":1,"cols":1,"entries":[[1]]}"#,
            r#"{"rows":1,"cols":1,"entries":[["x"]],"extra":0}"#,
        ] {
            assert!(serde_json::from_str::<Matrix<Q>>(bad).is_err(), "{bad}");
        }
    }
}
