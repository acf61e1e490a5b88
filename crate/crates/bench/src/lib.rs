//! Matrix families shared by the benchmarks.

use torquo::IntMatrix;

/// The single row `[1, 1, ..., 1]`: the uniform matroid `U(1, n)`.
pub fn hopf(n: usize) -> IntMatrix {
    IntMatrix::from_i64_rows(&[&vec![1; n]])
}

/// Moment-curve columns `(1, k, k^2, ..., k^(r-1))` for `k = 1..=n`: every
/// `r` columns are independent, so the column matroid is `U(r, n)`.
pub fn uniform(r: usize, n: usize) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..r)
        .map(|i| (1..=n as i64).map(|k| k.pow(i as u32)).collect())
        .collect();
    to_matrix(rows, n)
}

/// `r` identity columns followed by the all-ones column, repeated in blocks
/// of signed copies; a connected matroid with many parallel classes.
pub fn braided(r: usize, n: usize) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            (0..n)
                .map(|j| match j % (r + 1) {
                    k if k == r => 1 + (j / (r + 1)) as i64 * (i as i64 % 2),
                    k if k == i => 1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    to_matrix(rows, n)
}

fn to_matrix(rows: Vec<Vec<i64>>, n: usize) -> IntMatrix {
    IntMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(Into::into).collect()).collect(), n)
}
