//! Smith normal form over the integers with explicit unimodular transforms.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::matrix::IntMatrix;

/// `left * matrix * right` is diagonal with `diag` on its leading entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    /// Invariant factors, positive and each dividing the next.
    pub diag: Vec<BigInt>,
    pub right: IntMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// Checks every decomposition invariant against the original matrix.
    pub fn verify(&self, matrix: &IntMatrix) -> bool {
        let product = self.left.mul(matrix).mul(&self.right);
        let diagonal_ok = (0..product.rows()).all(|i| {
            (0..product.cols()).all(|j| {
                let expected = if i == j && i < self.diag.len() {
                    self.diag[i].clone()
                } else {
                    BigInt::zero()
                };
                product[(i, j)] == expected
            })
        });
        let chain_ok = self.diag.iter().all(|d| d.is_positive())
            && self.diag.windows(2).all(|w| (&w[1] % &w[0]).is_zero());
        diagonal_ok
            && chain_ok
            && self.left.determinant().abs() == BigInt::from(1)
            && self.right.determinant().abs() == BigInt::from(1)
    }
}

/// Computes the Smith normal form of `matrix`.
///
/// Pivots are the smallest nonzero entry by absolute value in the remaining
/// submatrix, ties broken by lowest (row, column), so the transforms are
/// deterministic.
pub fn smith_normal_form(matrix: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (matrix.rows(), matrix.cols());
    let mut a = matrix.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let mut diag = Vec::new();

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_entry(&a, t) else {
                return SmithDecomposition { left, diag, right };
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let mut clear = true;
            for i in t + 1..rows {
                let q = &a[(i, t)] / &a[(t, t)];
                if !q.is_zero() {
                    let q = -q;
                    a.add_row_multiple(t, i, &q);
                    left.add_row_multiple(t, i, &q);
                }
                clear &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = &a[(t, j)] / &a[(t, t)];
                if !q.is_zero() {
                    let q = -q;
                    a.add_col_multiple(t, j, &q);
                    right.add_col_multiple(t, j, &q);
                }
                clear &= a[(t, j)].is_zero();
            }
            if !clear {
                continue;
            }

            // pivot must divide the rest; otherwise fold the offending row in
            let offending = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(&a[(i, j)] % &a[(t, t)]).is_zero())
            });
            match offending {
                Some(i) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(i, t, &one);
                    left.add_row_multiple(i, t, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
        diag.push(a[(t, t)].clone());
    }
    SmithDecomposition { left, diag, right }
}

fn smallest_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => v.magnitude() < a[b].magnitude(),
            };
            if better {
                best = Some((i, j));
            }
        }
    }
    best
}
