//! The column matroid of an integer matrix.

mod lattice;
mod oracle;
mod set;

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use num_traits::Zero;

use crate::action::TorusAction;
use crate::error::{Error, Result};
use crate::matrix::{bareiss_rank_i128, IntMatrix};

pub use lattice::{Flat, FlatLattice};
pub use oracle::{Matroid, Minor};
pub use set::{ElementSet, Elements, Subsets, MAX_ELEMENTS};

/// Column matroid of an integer matrix whose columns carry stable labels.
///
/// Labels are the column indices of the matrix the matroid was first built
/// from, so they survive deletion and contraction. Ranks are exact over the
/// rationals and memoized per column subset.
pub struct RepresentedMatroid {
    matrix: IntMatrix,
    /// Label of each column, ascending.
    labels: Vec<usize>,
    contracted: usize,
    small: Option<Vec<i64>>,
    ranks: RwLock<HashMap<ElementSet, usize>>,
}

impl RepresentedMatroid {
    /// Labels the columns `0..n`.
    pub fn from_matrix(matrix: IntMatrix) -> Result<Self> {
        if matrix.cols() > MAX_ELEMENTS {
            return Err(Error::TooManyColumns {
                columns: matrix.cols(),
                max: MAX_ELEMENTS,
            });
        }
        let labels = (0..matrix.cols()).collect();
        Ok(Self::with_labels(matrix, labels, 0))
    }

    pub fn from_action(action: &TorusAction) -> Result<Self> {
        Self::from_matrix(action.matrix().clone())
    }

    fn with_labels(matrix: IntMatrix, labels: Vec<usize>, contracted: usize) -> Self {
        debug_assert_eq!(matrix.cols(), labels.len());
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let small = matrix.to_i64_entries();
        Self {
            matrix,
            labels,
            contracted,
            small,
            ranks: RwLock::new(HashMap::new()),
        }
    }

    /// Current representative matrix; column `k` carries `labels()[k]`.
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Number of contractions performed to reach this minor.
    pub fn contracted_count(&self) -> usize {
        self.contracted
    }

    fn column_of(&self, label: usize) -> Result<usize> {
        self.labels.binary_search(&label).map_err(|_| Error::UnknownLabel(label))
    }

    /// Validates labels and collects them into a set.
    pub fn element_set(&self, labels: &[usize]) -> Result<ElementSet> {
        for &e in labels {
            self.column_of(e)?;
        }
        Ok(labels.iter().copied().collect())
    }

    pub fn rank(&self, labels: &[usize]) -> Result<usize> {
        Ok(self.rank_of(self.element_set(labels)?))
    }

    pub fn closure(&self, labels: &[usize]) -> Result<Flat> {
        let elements = self.closure_of(self.element_set(labels)?);
        Ok(Flat {
            elements,
            rank: self.rank_of(elements),
        })
    }

    pub fn is_circuit(&self, labels: &[usize]) -> Result<bool> {
        Ok(self.is_circuit_set(self.element_set(labels)?))
    }

    /// Removes the column of `e`.
    pub fn delete(&self, e: usize) -> Result<Self> {
        let col = self.column_of(e)?;
        let mut labels = self.labels.clone();
        labels.remove(col);
        Ok(Self::with_labels(self.matrix.remove_column(col), labels, self.contracted))
    }

    /// Row-reduces with the Euclidean algorithm until the column of `e` has a
    /// single nonzero entry (the gcd of the column), then strikes that row and
    /// column. Contracting a loop is the same as deleting it.
    pub fn contract(&self, e: usize) -> Result<Self> {
        let col = self.column_of(e)?;
        if self.matrix.is_zero_column(col) {
            return self.delete(e);
        }
        let mut m = self.matrix.clone();
        let pivot_row = loop {
            let nonzero: Vec<usize> = (0..m.rows()).filter(|&i| !m[(i, col)].is_zero()).collect();
            let p = *nonzero
                .iter()
                .min_by(|&&x, &&y| m[(x, col)].magnitude().cmp(m[(y, col)].magnitude()).then(x.cmp(&y)))
                .expect("column is nonzero");
            if nonzero.len() == 1 {
                break p;
            }
            for &i in &nonzero {
                if i != p {
                    let q = -(&m[(i, col)] / &m[(p, col)]);
                    m.add_row_multiple(p, i, &q);
                }
            }
        };
        let mut labels = self.labels.clone();
        labels.remove(col);
        let m = m.remove_row(pivot_row).remove_column(col);
        Ok(Self::with_labels(m, labels, self.contracted + 1))
    }

    /// Submatrix on the given elements, columns in label order.
    pub fn submatrix(&self, set: ElementSet) -> Result<IntMatrix> {
        let cols = set.iter().map(|e| self.column_of(e)).collect::<Result<Vec<_>>>()?;
        Ok(self.matrix.select_columns(&cols))
    }

    fn compute_rank(&self, set: ElementSet) -> usize {
        let cols: Vec<usize> = set
            .iter()
            .map(|e| self.column_of(e).expect("rank queried outside the ground set"))
            .collect();
        if let Some(small) = &self.small {
            if let Some(r) = bareiss_rank_i128(small, self.matrix.rows(), self.matrix.cols(), &cols) {
                return r;
            }
        }
        self.matrix.column_rank(&cols)
    }
}

impl Matroid for RepresentedMatroid {
    fn ground_set(&self) -> ElementSet {
        self.labels.iter().copied().collect()
    }

    fn rank_of(&self, set: ElementSet) -> usize {
        if set.is_empty() {
            return 0;
        }
        if let Some(&r) = self.ranks.read().expect("rank cache poisoned").get(&set) {
            return r;
        }
        let r = self.compute_rank(set);
        self.ranks.write().expect("rank cache poisoned").insert(set, r);
        r
    }
}

impl Clone for RepresentedMatroid {
    fn clone(&self) -> Self {
        Self::with_labels(self.matrix.clone(), self.labels.clone(), self.contracted)
    }
}

impl fmt::Debug for RepresentedMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RepresentedMatroid")
            .field("matrix", &self.matrix)
            .field("labels", &self.labels)
            .field("contracted", &self.contracted)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matroid(rows: &[&[i64]]) -> RepresentedMatroid {
        RepresentedMatroid::from_matrix(IntMatrix::from_i64_rows(rows)).unwrap()
    }

    fn set(labels: &[usize]) -> ElementSet {
        labels.iter().copied().collect()
    }

    fn u23() -> RepresentedMatroid {
        matroid(&[&[1, 0, 1], &[0, 1, 1]])
    }

    fn identity2() -> RepresentedMatroid {
        matroid(&[&[1, 0], &[0, 1]])
    }

    #[test]
    fn rank_examples() {
        assert_eq!(u23().rank(&[0, 1, 2]).unwrap(), 2);
        assert_eq!(u23().rank(&[]).unwrap(), 0);
        assert_eq!(matroid(&[&[0, 1]]).rank(&[0]).unwrap(), 0);
        assert_eq!(u23().rank(&[5]), Err(Error::UnknownLabel(5)));
    }

    #[test]
    fn loops_and_coloops() {
        let m = matroid(&[&[0, 1, 1]]);
        assert_eq!(m.loops(), set(&[0]));
        assert_eq!(m.coloops(), ElementSet::EMPTY);
        assert_eq!(identity2().coloops(), set(&[0, 1]));
        assert_eq!(u23().loops(), ElementSet::EMPTY);
        assert_eq!(u23().coloops(), ElementSet::EMPTY);
    }

    #[test]
    fn delete_examples() {
        let d = u23().delete(2).unwrap();
        assert_eq!(d.matrix(), &IntMatrix::identity(2));
        assert_eq!(d.coloops(), set(&[0, 1]));
        let d = matroid(&[&[0, 1]]).delete(0).unwrap();
        assert_eq!(d.matrix(), &IntMatrix::from_i64_rows(&[&[1]]));
        assert_eq!(d.labels(), &[1]);
        let empty = matroid(&[&[4]]).delete(0).unwrap();
        assert_eq!(empty.size(), 0);
        assert_eq!(empty.full_rank(), 0);
        assert_eq!(u23().delete(7).unwrap_err(), Error::UnknownLabel(7));
    }

    #[test]
    fn contract_examples() {
        let c = u23().contract(2).unwrap();
        assert_eq!((c.matrix().rows(), c.matrix().cols()), (1, 2));
        assert_eq!(c.labels(), &[0, 1]);
        assert_eq!(c.contracted_count(), 1);
        assert_eq!(c.full_rank(), 1);
        assert!(c.loops().is_empty());
        assert!(c.is_circuit(&[0, 1]).unwrap());

        let m = matroid(&[&[0, 1], &[0, 2]]);
        let by_contract = m.contract(0).unwrap();
        let by_delete = m.delete(0).unwrap();
        assert_eq!(by_contract.matrix(), by_delete.matrix());
        assert_eq!(by_contract.contracted_count(), 0);

        let c = identity2().contract(0).unwrap();
        assert_eq!(c.coloops(), set(&[1]));
    }

    #[test]
    fn contract_uses_column_gcd() {
        // column (4, 6) reduces to a single entry 2
        let m = matroid(&[&[4, 1, 0], &[6, 0, 1]]);
        let c = m.contract(0).unwrap();
        assert_eq!(c.matrix().rows(), 1);
        for a in c.ground_set().subsets() {
            assert_eq!(c.rank_of(a), m.rank_of(a.with(0)) - 1);
        }
    }

    #[test]
    fn closure_examples() {
        assert_eq!(u23().closure(&[0]).unwrap().elements, set(&[0]));
        let f = matroid(&[&[0, 1, 1]]).closure(&[]).unwrap();
        assert_eq!((f.elements, f.rank), (set(&[0]), 0));
        assert_eq!(matroid(&[&[1, 1]]).closure(&[0]).unwrap().elements, set(&[0, 1]));
    }

    #[test]
    fn lattice_examples() {
        let l = u23().flat_lattice();
        assert_eq!(l.len(), 5);
        assert_eq!(l.bottom().elements, ElementSet::EMPTY);
        assert_eq!(l.flats_of_rank(1).count(), 3);
        assert_eq!(l.mobius(), 2);
        assert_eq!(l.upper_covers(0).len(), 3);

        let coloop = matroid(&[&[1]]);
        assert_eq!(coloop.flat_lattice().len(), 2);
        assert_eq!(coloop.mobius(), -1);

        let b2 = identity2().flat_lattice();
        assert_eq!(b2.len(), 4);
        assert_eq!(b2.mobius(), 1);
    }

    #[test]
    fn mobius_signs() {
        assert_eq!(u23().mobius(), 2);
        assert_eq!(matroid(&[&[1]]).mobius(), -1);
        // U_{1,2}: the lattice is a two-element chain
        assert_eq!(matroid(&[&[1, 1]]).mobius(), -1);
        // lattice of a loop-only matroid is a single point
        assert_eq!(matroid(&[&[0, 0]]).mobius(), 1);
    }

    #[test]
    fn circuit_examples() {
        assert_eq!(u23().circuits(), vec![set(&[0, 1, 2])]);
        assert_eq!(matroid(&[&[0, 1]]).circuits(), vec![set(&[0])]);
        assert!(identity2().circuits().is_empty());
        assert!(!u23().is_circuit(&[0, 1]).unwrap());
        assert!(!u23().is_circuit(&[]).unwrap());
    }

    #[test]
    fn component_examples() {
        assert_eq!(matroid(&[&[0, 1, 1]]).components(), vec![set(&[0]), set(&[1, 2])]);
        assert_eq!(u23().components(), vec![set(&[0, 1, 2])]);
        assert_eq!(identity2().components(), vec![set(&[0]), set(&[1])]);
        let blocks = matroid(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(blocks.components(), vec![set(&[0, 1]), set(&[2, 3])]);
    }

    #[test]
    fn order_complex_examples() {
        assert_eq!(u23().order_complex_euler().unwrap(), 2);
        assert_eq!(matroid(&[&[1, 1]]).order_complex_euler().unwrap(), -1);
        assert_eq!(identity2().order_complex_euler().unwrap(), 1);
        assert_eq!(matroid(&[&[0, 0]]).order_complex_euler(), Err(Error::RankZero));
        // U_{2,3} proper part: three isolated vertices
        assert_eq!(u23().flat_lattice().proper_part_face_counts(), vec![3]);
    }

    #[test]
    fn too_many_columns() {
        let wide = IntMatrix::zeros(1, 65);
        assert!(matches!(
            RepresentedMatroid::from_matrix(wide),
            Err(Error::TooManyColumns { columns: 65, .. })
        ));
    }

    #[test]
    fn shared_across_threads() {
        let m = std::sync::Arc::new(matroid(&[&[1, 0, 1, 2], &[0, 1, 1, -1]]));
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let m = m.clone();
                std::thread::spawn(move || m.ground_set().subsets().map(|s| m.rank_of(s)).sum::<usize>())
            })
            .collect();
        let sums: Vec<usize> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(sums.windows(2).all(|w| w[0] == w[1]));
    }
}
