//! Matrix moves that leave the quotient space unchanged up to isometry, and
//! a canonicalization built from them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::TorusAction;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    SwapRows { a: usize, b: usize },
    SwapCols { a: usize, b: usize },
    NegateRow { row: usize },
    NegateCol { col: usize },
    /// `row[target] += factor * row[source]`
    AddRowMultiple {
        source: usize,
        target: usize,
        #[serde(with = "crate::json::bigint_string")]
        factor: BigInt,
    },
}

impl Move {
    pub fn add_row_multiple(source: usize, target: usize, factor: impl Into<BigInt>) -> Self {
        Move::AddRowMultiple {
            source,
            target,
            factor: factor.into(),
        }
    }

    pub fn apply_to(&self, m: &mut IntMatrix) -> Result<()> {
        let row = |i: usize| check(i, m.rows(), "row");
        let col = |j: usize| check(j, m.cols(), "column");
        match *self {
            Move::SwapRows { a, b } => {
                row(a)?;
                row(b)?;
                m.swap_rows(a, b);
            }
            Move::SwapCols { a, b } => {
                col(a)?;
                col(b)?;
                m.swap_cols(a, b);
            }
            Move::NegateRow { row: i } => {
                row(i)?;
                m.negate_row(i);
            }
            Move::NegateCol { col: j } => {
                col(j)?;
                m.negate_col(j);
            }
            Move::AddRowMultiple {
                source,
                target,
                ref factor,
            } => {
                row(source)?;
                row(target)?;
                if source == target {
                    return Err(Error::SameRow(source));
                }
                m.add_row_multiple(source, target, factor);
            }
        }
        Ok(())
    }

    /// Where column `j` ends up after this move.
    pub fn permute_column(&self, j: usize) -> usize {
        match *self {
            Move::SwapCols { a, b } if j == a => b,
            Move::SwapCols { a, b } if j == b => a,
            _ => j,
        }
    }
}

fn check(index: usize, size: usize, what: &'static str) -> Result<()> {
    if index < size {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { what, index, size })
    }
}

/// Row-reduces to Hermite normal form using only row moves: pivots positive,
/// entries above a pivot reduced into `[0, pivot)`, zero rows at the bottom.
pub fn hermite_rows(matrix: &IntMatrix) -> (IntMatrix, Vec<Move>) {
    let mut a = matrix.clone();
    let mut log = Vec::new();
    let mut pivot_row = 0;
    for c in 0..a.cols() {
        if pivot_row == a.rows() {
            break;
        }
        loop {
            let smallest = (pivot_row..a.rows())
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&x, &y| a[(x, c)].magnitude().cmp(a[(y, c)].magnitude()).then(x.cmp(&y)));
            let Some(p) = smallest else { break };
            if p != pivot_row {
                a.swap_rows(p, pivot_row);
                log.push(Move::SwapRows { a: p, b: pivot_row });
            }
            let mut done = true;
            for i in pivot_row + 1..a.rows() {
                let q = &a[(i, c)] / &a[(pivot_row, c)];
                if !q.is_zero() {
                    let mv = Move::add_row_multiple(pivot_row, i, -q);
                    mv.apply_to(&mut a).expect("indices in range");
                    log.push(mv);
                }
                done &= a[(i, c)].is_zero();
            }
            if done {
                break;
            }
        }
        if a[(pivot_row, c)].is_zero() {
            continue;
        }
        if a[(pivot_row, c)].is_negative() {
            a.negate_row(pivot_row);
            log.push(Move::NegateRow { row: pivot_row });
        }
        let pivot = a[(pivot_row, c)].clone();
        for i in 0..pivot_row {
            let q = a[(i, c)].div_floor(&pivot);
            if !q.is_zero() {
                let mv = Move::add_row_multiple(pivot_row, i, -q);
                mv.apply_to(&mut a).expect("indices in range");
                log.push(mv);
            }
        }
        pivot_row += 1;
    }
    (a, log)
}

/// One logged step of [`canonicalize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalStep {
    DivideRow { row: usize, by: BigInt },
    Move(Move),
}

/// Row divisions serialize like moves, as `{"move": "divide_row", ...}`.
impl Serialize for CanonicalStep {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        match self {
            CanonicalStep::DivideRow { row, by } => {
                let mut s = serializer.serialize_struct("CanonicalStep", 3)?;
                s.serialize_field("move", "divide_row")?;
                s.serialize_field("row", row)?;
                s.serialize_field("by", &by.to_string())?;
                s.end()
            }
            CanonicalStep::Move(m) => m.serialize(serializer),
        }
    }
}

/// Alternates row-gcd division and Hermite normal form until no row has a
/// common factor, then for a single row makes the weights positive and
/// sorts them descending.
///
/// This is canonical only up to row moves; column moves other than the
/// rank-one normalization are not applied.
pub fn canonicalize(action: &TorusAction) -> (TorusAction, Vec<CanonicalStep>) {
    let mut steps = Vec::new();
    let mut current = action.clone();
    // Hermite reduction can expose new common row factors; repeat until none.
    let mut m = loop {
        let (reduced, divisions) = current.reduce_rows_logged();
        let divided = !divisions.is_empty();
        steps.extend(divisions.into_iter().map(|(row, by)| CanonicalStep::DivideRow { row, by }));
        let (h, moves) = hermite_rows(reduced.matrix());
        steps.extend(moves.into_iter().map(CanonicalStep::Move));
        current = TorusAction { matrix: h };
        if !divided && current.reduce_rows_logged().1.is_empty() {
            break current.matrix;
        }
    };

    if m.rows() == 1 {
        for j in 0..m.cols() {
            if m[(0, j)].is_negative() {
                m.negate_col(j);
                steps.push(CanonicalStep::Move(Move::NegateCol { col: j }));
            }
        }
        for k in 0..m.cols() {
            let largest = (k..m.cols())
                .max_by(|&x, &y| m[(0, x)].cmp(&m[(0, y)]).then(y.cmp(&x)))
                .expect("nonempty range");
            if largest != k {
                m.swap_cols(k, largest);
                steps.push(CanonicalStep::Move(Move::SwapCols { a: k, b: largest }));
            }
        }
    }
    (TorusAction { matrix: m }, steps)
}
