//! JSON helpers for exact integers.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serializer};
use serde_json::{Number, Value};

use crate::error::{Error, Result};

pub(crate) fn exact_number(value: &BigInt) -> Number {
    value
        .to_string()
        .parse()
        .expect("decimal integer is a valid JSON number")
}

/// Reads an integer given either as a JSON number or as a decimal string.
pub(crate) fn integer_from_value(value: &Value) -> Result<BigInt> {
    match value {
        Value::Number(n) => parse_integer(&n.to_string()),
        Value::String(s) => parse_integer(s.trim()),
        other => Err(Error::InvalidInteger(other.to_string())),
    }
}

pub(crate) fn parse_integer(token: &str) -> Result<BigInt> {
    token
        .parse()
        .map_err(|_| Error::InvalidInteger(token.to_string()))
}

pub(crate) mod bigint_string {
    use super::*;

    pub fn serialize<S: Serializer>(value: &BigInt, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> std::result::Result<BigInt, D::Error> {
        let value = Value::deserialize(deserializer)?;
        integer_from_value(&value).map_err(serde::de::Error::custom)
    }
}

pub(crate) mod bigint_string_vec {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[BigInt], serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(values.iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Vec<BigInt>, D::Error> {
        let values = Vec::<Value>::deserialize(deserializer)?;
        values
            .iter()
            .map(integer_from_value)
            .collect::<Result<_>>()
            .map_err(serde::de::Error::custom)
    }
}

pub(crate) mod bigint_number {
    use super::*;

    pub fn serialize<S: Serializer>(value: &BigInt, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serde::Serialize::serialize(&exact_number(value), serializer)
    }
}
