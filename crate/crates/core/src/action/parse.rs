use num_bigint::BigInt;
use serde_json::Value;

use super::TorusAction;
use crate::error::{Error, Result};
use crate::json::{integer_from_value, parse_integer};
use crate::matrix::IntMatrix;

/// Parses a weight matrix from whitespace-separated rows (one per line) or
/// from JSON `{"rows": [[int, ...], ...]}`.
///
/// JSON entries may be numbers or decimal strings. A JSON matrix without rows
/// (the trivial torus) must say how many circles it acts on via `"cols"`.
pub fn parse_action(text: &str) -> Result<TorusAction> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        parse_json(trimmed)
    } else {
        parse_text(text)
    }
}

fn parse_text(text: &str) -> Result<TorusAction> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let row = line
            .split_whitespace()
            .map(parse_integer)
            .collect::<Result<Vec<_>>>()?;
        push_row(&mut rows, row)?;
    }
    build(rows, 0)
}

fn parse_json(text: &str) -> Result<TorusAction> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let rows_value = value
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("expected an object with a \"rows\" array".into()))?;
    let mut rows = Vec::with_capacity(rows_value.len());
    for (i, row) in rows_value.iter().enumerate() {
        let entries = row
            .as_array()
            .ok_or_else(|| Error::Json(format!("row {i} is not an array")))?;
        let row = entries.iter().map(integer_from_value).collect::<Result<Vec<_>>>()?;
        push_row(&mut rows, row)?;
    }
    let cols = match value.get("cols") {
        None => 0,
        Some(c) => {
            let cols = c
                .as_u64()
                .ok_or_else(|| Error::Json("\"cols\" must be a nonnegative integer".into()))?
                as usize;
            if let Some(first) = rows.first() {
                if first.len() != cols {
                    return Err(Error::RaggedRows {
                        row: 0,
                        expected: cols,
                        found: first.len(),
                    });
                }
            }
            cols
        }
    };
    build(rows, cols)
}

fn push_row(rows: &mut Vec<Vec<BigInt>>, row: Vec<BigInt>) -> Result<()> {
    if let Some(first) = rows.first() {
        if first.len() != row.len() {
            return Err(Error::RaggedRows {
                row: rows.len(),
                expected: first.len(),
                found: row.len(),
            });
        }
    }
    rows.push(row);
    Ok(())
}

fn build(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<TorusAction> {
    TorusAction::new(IntMatrix::from_rows(rows, cols))
}
