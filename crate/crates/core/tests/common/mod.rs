#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torquo::action::Move;
use torquo::{IntMatrix, RepresentedMatroid, TorusAction};

pub const CORPUS_SEED: u64 = 0x7057_0f1e;
pub const CORPUS_SIZE: usize = 500;

pub fn matrix(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
        cols,
    )
}

pub fn random_matrix(rng: &mut impl Rng, r: usize, n: usize, bound: i64) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..r)
        .map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    matrix(&rows, n)
}

/// The fixed random corpus: `r` in {1, 2, 3}, `n` in 1..=10, entries in [-3, 3].
pub fn corpus() -> Vec<IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..CORPUS_SIZE)
        .map(|_| {
            let r = rng.gen_range(1..=3);
            let n = rng.gen_range(1..=10);
            random_matrix(&mut rng, r, n, 3)
        })
        .collect()
}

pub fn matroid_of(m: &IntMatrix) -> RepresentedMatroid {
    RepresentedMatroid::from_matrix(m.clone()).expect("at most 64 columns")
}

/// Effective actions from the corpus.
pub fn effective_corpus() -> Vec<TorusAction> {
    corpus()
        .into_iter()
        .filter_map(|m| TorusAction::new(m).ok())
        .filter(TorusAction::is_effective)
        .collect()
}

pub fn random_move(rng: &mut impl Rng, r: usize, n: usize) -> Move {
    loop {
        let mv = match rng.gen_range(0..5) {
            0 if r >= 2 => Move::SwapRows {
                a: rng.gen_range(0..r),
                b: rng.gen_range(0..r),
            },
            1 => Move::SwapCols {
                a: rng.gen_range(0..n),
                b: rng.gen_range(0..n),
            },
            2 if r >= 1 => Move::NegateRow { row: rng.gen_range(0..r) },
            3 => Move::NegateCol { col: rng.gen_range(0..n) },
            4 if r >= 2 => {
                let source = rng.gen_range(0..r);
                let target = (source + rng.gen_range(1..r)) % r;
                Move::add_row_multiple(source, target, rng.gen_range(-3i64..=3))
            }
            _ => continue,
        };
        return mv;
    }
}

pub fn random_moves(rng: &mut impl Rng, r: usize, n: usize, len: usize) -> Vec<Move> {
    (0..len).map(|_| random_move(rng, r, n)).collect()
}

/// Matrices with `1..=max_r` rows and `1..=max_n` columns, entries in [-3, 3].
pub fn small_matrix(max_r: usize, max_n: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_r, 1..=max_n).prop_flat_map(|(r, n)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), r)
            .prop_map(move |rows| matrix(&rows, n))
    })
}

/// Block-diagonal sum of two matrices.
pub fn direct_sum(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut rows = Vec::new();
    for i in 0..a.rows() {
        let mut row: Vec<BigInt> = a.row(i).to_vec();
        row.extend(std::iter::repeat_n(BigInt::from(0), b.cols()));
        rows.push(row);
    }
    for i in 0..b.rows() {
        let mut row: Vec<BigInt> = vec![BigInt::from(0); a.cols()];
        row.extend(b.row(i).iter().cloned());
        rows.push(row);
    }
    IntMatrix::from_rows(rows, a.cols() + b.cols())
}
