//! Dense integer matrices with exact, fraction-free rank computation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// A dense row-major matrix of arbitrary-precision integers.
///
/// Zero-row matrices are allowed and still remember their column count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of equal length. `cols` is only consulted
    /// when `rows` is empty.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let cols = rows.first().map_or(cols, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self[(i, j)].is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Submatrix on the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                m[(i, k)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self {
            rows: rows.len(),
            cols: self.cols,
            data: rows.iter().flat_map(|&i| self.row(i).to_vec()).collect(),
        }
    }

    pub fn remove_row(&self, row: usize) -> Self {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| i != row).collect();
        self.select_rows(&keep)
    }

    pub fn remove_column(&self, col: usize) -> Self {
        let keep: Vec<usize> = (0..self.cols).filter(|&j| j != col).collect();
        self.select_columns(&keep)
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    m[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        m
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self[(i, j)];
            *v = -std::mem::take(v);
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = &mut self[(i, j)];
            *v = -std::mem::take(v);
        }
    }

    /// `row[dst] += factor * row[src]`
    pub fn add_row_multiple(&mut self, src: usize, dst: usize, factor: &BigInt) {
        debug_assert_ne!(src, dst);
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = factor * &self[(src, j)];
            self[(dst, j)] += delta;
        }
    }

    /// `col[dst] += factor * col[src]`
    pub fn add_col_multiple(&mut self, src: usize, dst: usize, factor: &BigInt) {
        debug_assert_ne!(src, dst);
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = factor * &self[(i, src)];
            self[(i, dst)] += delta;
        }
    }

    pub fn divide_row(&mut self, i: usize, divisor: &BigInt) {
        for j in 0..self.cols {
            let v = &mut self[(i, j)];
            debug_assert!((&*v % divisor).is_zero());
            *v = &*v / divisor;
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let all: Vec<usize> = (0..self.cols).collect();
        self.column_rank(&all)
    }

    /// Rank over the rationals of the given columns.
    pub fn column_rank(&self, cols: &[usize]) -> usize {
        if let Some(small) = self.to_i64_entries() {
            if let Some(r) = bareiss_rank_i128(&small, self.rows, self.cols, cols) {
                return r;
            }
        }
        bareiss_rank_big(self, cols)
    }

    /// Row-major copy of the entries if every one fits in an `i64`.
    pub fn to_i64_entries(&self) -> Option<Vec<i64>> {
        self.data.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Determinant of a square matrix by fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.row_vecs();
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

/// Fraction-free elimination over `i128`; `None` on overflow.
///
/// Every intermediate entry is a minor of the input, so the divisions by the
/// previous pivot are exact.
pub(crate) fn bareiss_rank_i128(
    data: &[i64],
    rows: usize,
    stride: usize,
    cols: &[usize],
) -> Option<usize> {
    let k = cols.len();
    let mut a: Vec<i128> = Vec::with_capacity(rows * k);
    for i in 0..rows {
        for &j in cols {
            a.push(data[i * stride + j] as i128);
        }
    }
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..k {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| a[i * k + c] != 0) else {
            continue;
        };
        if p != rank {
            for j in 0..k {
                a.swap(p * k + j, rank * k + j);
            }
        }
        let pivot = a[rank * k + c];
        for i in rank + 1..rows {
            let lead = a[i * k + c];
            for j in c + 1..k {
                let v = pivot
                    .checked_mul(a[i * k + j])?
                    .checked_sub(lead.checked_mul(a[rank * k + j])?)?;
                a[i * k + j] = v / prev;
            }
            a[i * k + c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(m: &IntMatrix, cols: &[usize]) -> usize {
    let rows = m.rows();
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| cols.iter().map(|&j| m[(i, j)].clone()).collect())
        .collect();
    let k = cols.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..k {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        for i in rank + 1..rows {
            for j in c + 1..k {
                let v = (&a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Gcd of a slice; zero for the empty or all-zero slice.
pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::zero(), |g, v| g.gcd(v))
        .abs()
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Serializes as `{"rows": [[int, ...], ...]}`, adding `"cols"` only for a
/// matrix without rows. Entries are emitted as exact JSON integers.
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<serde_json::Number>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(crate::json::exact_number).collect())
            .collect();
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("rows", &rows)?;
        if self.rows == 0 {
            map.serialize_entry("cols", &self.cols)?;
        }
        map.end()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_vecs()).finish()
    }
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
