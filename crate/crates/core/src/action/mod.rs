//! Integer weight matrices of diagonalized torus actions on odd spheres.
//!
//! Row `i` of the matrix is the circle `T_i` of the torus, column `j` the
//! invariant circle `S_j` of the sphere, and entry `z_ij` the weight with
//! which `T_i` rotates `S_j`.

mod moves;
mod parse;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{gcd_all, IntMatrix};

pub use moves::{canonicalize, hermite_rows, CanonicalStep, Move};
pub use parse::parse_action;
pub use snf::{smith_normal_form, SmithDecomposition};

/// An `r x n` integer weight matrix with `n >= 1`; `r = 0` is the trivial torus.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct TorusAction {
    matrix: IntMatrix,
}

impl TorusAction {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if matrix.cols() == 0 {
            return Err(Error::NoColumns);
        }
        Ok(Self { matrix })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(IntMatrix::from_i64_rows(rows))
    }

    /// The trivial torus acting on `S^{2n-1}`.
    pub fn trivial(circles: usize) -> Result<Self> {
        Self::new(IntMatrix::zeros(0, circles))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.matrix
    }

    /// Rank `r` of the torus.
    pub fn torus_rank(&self) -> usize {
        self.matrix.rows()
    }

    /// Number `n` of invariant circles; the sphere is `S^{2n-1}`.
    pub fn circles(&self) -> usize {
        self.matrix.cols()
    }

    pub fn smith(&self) -> SmithDecomposition {
        smith_normal_form(&self.matrix)
    }

    /// Effective iff the weight columns generate the whole lattice `Z^r`.
    pub fn effectiveness(&self) -> Effectiveness {
        let kernel = kernel_from_factors(self.torus_rank(), &self.smith().diag);
        Effectiveness {
            effective: kernel.is_trivial(),
            kernel,
        }
    }

    pub fn is_effective(&self) -> bool {
        self.effectiveness().effective
    }

    /// Errors with the kernel when the action is not effective.
    pub fn ensure_effective(&self) -> Result<()> {
        let eff = self.effectiveness();
        if eff.effective {
            Ok(())
        } else {
            Err(Error::NotEffective(eff.kernel))
        }
    }

    /// Divides every row by the gcd of its entries. Zero rows are kept.
    ///
    /// This only removes per-row kernels; the result may still fail
    /// [`TorusAction::is_effective`].
    pub fn reduce_noneffective(&self) -> TorusAction {
        self.reduce_rows_logged().0
    }

    pub(crate) fn reduce_rows_logged(&self) -> (TorusAction, Vec<(usize, BigInt)>) {
        let mut matrix = self.matrix.clone();
        let mut divisions = Vec::new();
        for i in 0..matrix.rows() {
            let g = gcd_all(matrix.row(i));
            if g > BigInt::one() {
                matrix.divide_row(i, &g);
                divisions.push((i, g));
            }
        }
        (TorusAction { matrix }, divisions)
    }

    pub fn apply(&self, mv: &Move) -> Result<TorusAction> {
        let mut matrix = self.matrix.clone();
        mv.apply_to(&mut matrix)?;
        Ok(TorusAction { matrix })
    }

    pub fn apply_all<'a>(&self, moves: impl IntoIterator<Item = &'a Move>) -> Result<TorusAction> {
        let mut matrix = self.matrix.clone();
        for mv in moves {
            mv.apply_to(&mut matrix)?;
        }
        Ok(TorusAction { matrix })
    }

    /// Isotropy of a point on the invariant circle `S_j`.
    pub fn isotropy_of_circle(&self, j: usize) -> Result<IsotropyGroup> {
        self.check_column(j)?;
        let r = self.torus_rank();
        let column = self.matrix.column(j);
        let g = gcd_all(&column);
        if g.is_zero() {
            return Ok(IsotropyGroup::torus(r));
        }
        let finite_factors = if g > BigInt::one() { vec![g] } else { vec![] };
        Ok(IsotropyGroup {
            torus_rank: r - 1,
            finite_factors,
        })
    }

    /// Isotropy of a generic point of the join of the circles in `subset`.
    pub fn isotropy_of_subset(&self, subset: &[usize]) -> Result<IsotropyGroup> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        for &j in subset {
            self.check_column(j)?;
        }
        let sub = self.matrix.select_columns(subset);
        Ok(kernel_from_factors(self.torus_rank(), &smith_normal_form(&sub).diag))
    }

    /// The effective action induced on the coordinate subsphere spanned by
    /// `columns`: the torus acting through its image, with the selected
    /// weights rewritten in a basis of the lattice they generate.
    ///
    /// With `L * Z_B * R = D` the Smith form of the selected columns, the
    /// new weights are the first `k = rank` rows of `L * Z_B`, row `i`
    /// divided by `d_i`. Their columns generate `Z^k`.
    pub fn restrict_to_columns(&self, columns: &[usize]) -> Result<TorusAction> {
        if columns.is_empty() {
            return Err(Error::EmptySubset);
        }
        for &j in columns {
            self.check_column(j)?;
        }
        let sub = self.matrix.select_columns(columns);
        let snf = smith_normal_form(&sub);
        let k = snf.rank();
        let rows: Vec<usize> = (0..k).collect();
        let mut weights = snf.left.mul(&sub).select_rows(&rows);
        for (i, d) in snf.diag.iter().enumerate() {
            weights.divide_row(i, d);
        }
        TorusAction::new(weights)
    }

    fn check_column(&self, j: usize) -> Result<()> {
        if j >= self.circles() {
            return Err(Error::IndexOutOfRange {
                what: "column",
                index: j,
                size: self.circles(),
            });
        }
        Ok(())
    }
}

fn kernel_from_factors(torus_rank: usize, factors: &[BigInt]) -> IsotropyGroup {
    let mut finite_factors: Vec<BigInt> = factors.iter().filter(|d| **d > BigInt::one()).cloned().collect();
    finite_factors.sort();
    IsotropyGroup {
        torus_rank: torus_rank - factors.len(),
        finite_factors,
    }
}

impl fmt::Debug for TorusAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TorusAction({:?})", self.matrix)
    }
}

impl fmt::Display for TorusAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

/// A closed subgroup of a torus: `T^k x Z_{d_1} x ... x Z_{d_m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IsotropyGroup {
    pub torus_rank: usize,
    /// Orders of the cyclic factors, ascending, each at least 2.
    #[serde(with = "crate::json::bigint_string_vec")]
    pub finite_factors: Vec<BigInt>,
}

impl IsotropyGroup {
    pub fn trivial() -> Self {
        Self::torus(0)
    }

    pub fn torus(rank: usize) -> Self {
        Self {
            torus_rank: rank,
            finite_factors: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.torus_rank == 0 && self.finite_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.torus_rank == 0
    }
}

impl fmt::Display for IsotropyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("trivial");
        }
        let mut parts = Vec::new();
        if self.torus_rank > 0 {
            parts.push(format!("T^{}", self.torus_rank));
        }
        parts.extend(self.finite_factors.iter().map(|d| format!("Z_{d}")));
        f.write_str(&parts.join(" x "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Effectiveness {
    pub effective: bool,
    pub kernel: IsotropyGroup,
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn action(rows: &[&[i64]]) -> TorusAction {
        TorusAction::from_i64_rows(rows).unwrap()
    }

    fn group(torus_rank: usize, finite: &[i64]) -> IsotropyGroup {
        IsotropyGroup {
            torus_rank,
            finite_factors: finite.iter().map(|&d| BigInt::from(d)).collect(),
        }
    }

    #[test]
    fn effectiveness_examples() {
        assert!(action(&[&[1, 1]]).is_effective());
        let e = action(&[&[2, 4]]).effectiveness();
        assert!(!e.effective);
        assert_eq!(e.kernel, group(0, &[2]));
        let e = action(&[&[2, 0], &[0, 3]]).effectiveness();
        assert_eq!(e.kernel, group(0, &[6]));
        assert_eq!(e.kernel.to_string(), "Z_6");
    }

    #[test]
    fn zero_rows_and_trivial_torus() {
        let e = action(&[&[1, 1], &[0, 0]]).effectiveness();
        assert!(!e.effective);
        assert_eq!(e.kernel, group(1, &[]));
        let trivial = TorusAction::trivial(2).unwrap();
        assert!(trivial.is_effective());
        assert_eq!(trivial.isotropy_of_circle(1).unwrap(), IsotropyGroup::trivial());
        assert_eq!(trivial.isotropy_of_subset(&[0, 1]).unwrap(), IsotropyGroup::trivial());
    }

    #[test]
    fn no_columns_rejected() {
        assert_eq!(TorusAction::new(IntMatrix::zeros(2, 0)), Err(Error::NoColumns));
    }

    #[test]
    fn row_gcd_reduction() {
        assert_eq!(action(&[&[2, 4]]).reduce_noneffective(), action(&[&[1, 2]]));
        assert_eq!(action(&[&[1, 1]]).reduce_noneffective(), action(&[&[1, 1]]));
        assert_eq!(action(&[&[3, 6, 9]]).reduce_noneffective(), action(&[&[1, 2, 3]]));
        assert_eq!(action(&[&[0, 0], &[4, -6]]).reduce_noneffective(), action(&[&[0, 0], &[2, -3]]));
        let once = action(&[&[6, 4], &[9, 3]]).reduce_noneffective();
        assert_eq!(once.reduce_noneffective(), once);
    }

    #[test]
    fn column_restriction() {
        let z = action(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let left = z.restrict_to_columns(&[0, 1]).unwrap();
        assert_eq!(left.torus_rank(), 1);
        assert!(left.is_effective());
        assert_eq!(left.matrix().row(0), action(&[&[1, 1]]).matrix().row(0));

        // Columns (2,0) and (0,2)... generate 2Z + 2Z; the induced action is
        // effective again on the rescaled lattice.
        let z = action(&[&[2, 0, 2, 1], &[0, 2, 2, 1]]);
        let sub = z.restrict_to_columns(&[0, 1, 2]).unwrap();
        assert_eq!(sub.torus_rank(), 2);
        assert!(sub.is_effective());

        let z = action(&[&[0, 2, 3], &[1, 0, 0]]);
        let loops = action(&[&[0, 1, 1]]).restrict_to_columns(&[0]).unwrap();
        assert_eq!(loops.torus_rank(), 0);
        let w = z.restrict_to_columns(&[1, 2]).unwrap();
        let mut weights: Vec<BigInt> = w.matrix().row(0).iter().map(|v| v.abs()).collect();
        weights.sort();
        assert_eq!(weights, vec![BigInt::from(2), BigInt::from(3)]);
        assert_eq!(z.restrict_to_columns(&[]), Err(Error::EmptySubset));
    }

    #[test]
    fn circle_isotropy() {
        assert_eq!(action(&[&[3, 1, 1]]).isotropy_of_circle(0).unwrap(), group(0, &[3]));
        assert_eq!(action(&[&[1, 0, 1], &[0, 1, 1]]).isotropy_of_circle(2).unwrap(), group(1, &[]));
        assert_eq!(action(&[&[0, 1]]).isotropy_of_circle(0).unwrap(), group(1, &[]));
        assert!(matches!(
            action(&[&[0, 1]]).isotropy_of_circle(2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn subset_isotropy() {
        let u23 = action(&[&[1, 0, 1], &[0, 1, 1]]);
        assert!(u23.isotropy_of_subset(&[0, 1, 2]).unwrap().is_trivial());
        assert!(action(&[&[3, 1, 1]]).isotropy_of_subset(&[1]).unwrap().is_trivial());
        assert_eq!(action(&[&[2, 0], &[0, 3]]).isotropy_of_subset(&[0, 1]).unwrap(), group(0, &[6]));
        assert_eq!(u23.isotropy_of_subset(&[]), Err(Error::EmptySubset));
    }

    #[test]
    fn subset_isotropy_agrees_with_circle_isotropy() {
        let z = action(&[&[2, 0, 3, 6], &[4, 1, 0, 3]]);
        for j in 0..z.circles() {
            assert_eq!(z.isotropy_of_subset(&[j]).unwrap(), z.isotropy_of_circle(j).unwrap());
        }
    }
}
