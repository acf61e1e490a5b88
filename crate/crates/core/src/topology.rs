//! Homology of the orbit space and of its singular set.
//!
//! For an effective action with matroid `M` of rank `r` on `n` elements the
//! reduced Poincare polynomial of `X = S^(2n-1) / T^r` is
//! `t^(r-1) T(M; 0, t^2)`, and the singular set (points with infinite
//! isotropy) has reduced Poincare polynomial
//! `t^(r-2) [T(M; 1, t^2) - T(M; 0, t^2)]`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::action::TorusAction;
use crate::error::{Error, Result};
use crate::matroid::{Flat, Matroid, RepresentedMatroid};
use crate::tutte::{self, tutte_one_t_squared, tutte_zero_t_squared, BivariatePolynomial, UnivariatePolynomial};

/// Reduced integral homology of a space, which is always free here.
///
/// The empty space is kept apart from the point: its reduced Poincare
/// polynomial would be `t^(-1)`, which is what makes joins with it behave.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReducedHomology {
    Empty,
    Polynomial(UnivariatePolynomial),
}

impl ReducedHomology {
    pub fn is_empty_space(&self) -> bool {
        matches!(self, Self::Empty)
    }

    pub fn polynomial(&self) -> Option<&UnivariatePolynomial> {
        match self {
            Self::Empty => None,
            Self::Polynomial(p) => Some(p),
        }
    }

    /// Join `A * B`, with `P(A * B) = t P(A) P(B)`.
    pub fn join(&self, other: &Self) -> Self {
        Laurent::from(self)
            .mul(&Laurent::from(other))
            .shift(1)
            .into_homology()
            .expect("join of spaces has no negative degrees below -1")
    }

    /// The sphere `S^d`, with `S^(-1)` the empty space.
    pub fn sphere(d: i64) -> Self {
        match u32::try_from(d) {
            Ok(d) => Self::Polynomial(UnivariatePolynomial::monomial(d, 1)),
            Err(_) if d == -1 => Self::Empty,
            Err(_) => panic!("sphere of dimension {d}"),
        }
    }
}

impl fmt::Display for ReducedHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => f.write_str("empty"),
            Self::Polynomial(p) => p.fmt(f),
        }
    }
}

/// `{"empty": true}` or `{"empty": false, "terms": [...]}`.
impl Serialize for ReducedHomology {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Self::Empty => {
                let mut s = serializer.serialize_struct("ReducedHomology", 1)?;
                s.serialize_field("empty", &true)?;
                s.end()
            }
            Self::Polynomial(p) => {
                #[derive(Serialize)]
                struct Term<'a> {
                    e: u32,
                    #[serde(serialize_with = "crate::json::bigint_string::serialize")]
                    c: &'a BigInt,
                }
                let terms: Vec<Term> = p.terms().map(|(e, c)| Term { e, c }).collect();
                let mut s = serializer.serialize_struct("ReducedHomology", 2)?;
                s.serialize_field("empty", &false)?;
                s.serialize_field("terms", &terms)?;
                s.end()
            }
        }
    }
}

/// Finite Laurent polynomial, used only to let `t^(-1)` stand for the empty
/// space while summing and joining.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Laurent(BTreeMap<i64, BigInt>);

impl Laurent {
    fn from_polynomial(p: &UnivariatePolynomial, shift: i64) -> Self {
        Self(p.terms().map(|(e, c)| (i64::from(e) + shift, c.clone())).collect())
    }

    fn shift(&self, k: i64) -> Self {
        Self(self.0.iter().map(|(&e, c)| (e + k, c.clone())).collect())
    }

    fn add_assign(&mut self, other: &Self) {
        for (&e, c) in &other.0 {
            let entry = self.0.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                self.0.remove(&e);
            }
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&a, c) in &self.0 {
            for (&b, d) in &other.0 {
                out.add_assign(&Self(BTreeMap::from([(a + b, c * d)])));
            }
        }
        out
    }

    fn is_empty_marker(&self) -> bool {
        self.0.len() == 1 && self.0.get(&-1).is_some_and(One::is_one)
    }

    fn into_homology(self) -> Option<ReducedHomology> {
        if self.is_empty_marker() {
            return Some(ReducedHomology::Empty);
        }
        let terms = self
            .0
            .into_iter()
            .map(|(e, c)| u32::try_from(e).ok().map(|e| (e, c)))
            .collect::<Option<Vec<_>>>()?;
        Some(ReducedHomology::Polynomial(UnivariatePolynomial::from_terms(terms)))
    }
}

impl From<&ReducedHomology> for Laurent {
    fn from(h: &ReducedHomology) -> Self {
        match h {
            ReducedHomology::Empty => Laurent(BTreeMap::from([(-1, BigInt::one())])),
            ReducedHomology::Polynomial(p) => Laurent::from_polynomial(p, 0),
        }
    }
}

/// `t^(r(M)-1) T(M; 0, t^2)`: the reduced homology of the quotient whose
/// matroid is `M`. The empty matroid gives the empty space.
pub fn matroid_quotient_homology<M: Matroid + ?Sized>(m: &M) -> ReducedHomology {
    quotient_homology_from(&tutte::tutte(m), m.full_rank())
}

fn quotient_homology_from(t: &BivariatePolynomial, rank: usize) -> ReducedHomology {
    Laurent::from_polynomial(&tutte_zero_t_squared(t), rank as i64 - 1)
        .into_homology()
        .expect("T(M;0,y) is divisible by y^|E| when r = 0")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiNumber {
    pub degree: u32,
    #[serde(serialize_with = "crate::json::bigint_number::serialize")]
    pub rank: BigInt,
}

/// Homological summary of `X = S^(2n-1) / T^r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientSummary {
    /// `2n - 1 - r`
    #[serde(rename = "dim")]
    pub dimension: usize,
    /// Reduced Poincare polynomial.
    pub poincare: UnivariatePolynomial,
    /// Reduced Betti numbers in nonzero degrees.
    pub betti: Vec<BettiNumber>,
    pub simply_connected: bool,
    /// The integral homology is always free.
    pub torsion_free: bool,
}

/// Reduced Poincare polynomial and related facts for an effective action.
pub fn poincare_quotient(action: &TorusAction) -> Result<QuotientSummary> {
    action.ensure_effective()?;
    let m = RepresentedMatroid::from_action(action)?;
    let poincare = match matroid_quotient_homology(&m) {
        ReducedHomology::Polynomial(p) => p,
        ReducedHomology::Empty => return Err(Error::Invariant("quotient of a nonempty sphere is empty".into())),
    };
    let betti = poincare
        .terms()
        .map(|(degree, rank)| BettiNumber {
            degree,
            rank: rank.clone(),
        })
        .collect();
    Ok(QuotientSummary {
        dimension: 2 * action.circles() - 1 - action.torus_rank(),
        poincare,
        betti,
        simply_connected: is_simply_connected(action),
        torsion_free: true,
    })
}

/// `X` is simply connected for `n >= 2`. With one circle it is `S^1` when the
/// torus is trivial and a point otherwise.
pub fn is_simply_connected(action: &TorusAction) -> bool {
    action.circles() >= 2 || action.torus_rank() >= 1
}

fn singular_laurent(t: &BivariatePolynomial, rank: usize) -> Laurent {
    let bracket = &tutte_one_t_squared(t) - &tutte_zero_t_squared(t);
    Laurent::from_polynomial(&bracket, rank as i64 - 2)
}

/// Reduced homology of the singular set, the image of all points with
/// infinite isotropy.
///
/// It is empty for the trivial torus, and for a rank-one action without zero
/// weights (every isotropy group is finite).
pub fn poincare_singular(action: &TorusAction) -> Result<ReducedHomology> {
    action.ensure_effective()?;
    let m = RepresentedMatroid::from_action(action)?;
    singular_homology(&m)
}

/// Singular-set homology straight from the matroid.
pub fn singular_homology<M: Matroid + ?Sized>(m: &M) -> Result<ReducedHomology> {
    let r = m.full_rank();
    if r == 0 {
        return Ok(ReducedHomology::Empty);
    }
    singular_laurent(&tutte::tutte(m), r)
        .into_homology()
        .ok_or_else(|| Error::Invariant("singular-set polynomial has a negative degree".into()))
}

/// One term `X_F * (wedge of mu S^(r - r(F) - 2))` of the homotopy type of
/// the singular set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WedgeSummand {
    pub flat: Flat,
    /// `T(M/F; 1, 0)`, the absolute Möbius value of the interval `[F, E]`.
    #[serde(serialize_with = "crate::json::bigint_number::serialize")]
    pub multiplicity: BigInt,
    /// `r - r(F) - 2`; `-1` is the empty sphere.
    pub sphere_dim: i64,
    /// Homology of `X_F`, the quotient of the subsphere on `F`.
    pub flat_quotient: ReducedHomology,
}

impl WedgeSummand {
    /// Homology of this summand: `X_F` joined with a wedge of spheres.
    /// A wedge of zero spheres is a point, and the join with a point is a
    /// cone.
    pub fn homology(&self) -> ReducedHomology {
        if self.multiplicity.is_zero() {
            return ReducedHomology::Polynomial(UnivariatePolynomial::zero());
        }
        let spheres = match ReducedHomology::sphere(self.sphere_dim) {
            ReducedHomology::Polynomial(p) => ReducedHomology::Polynomial(&p * &self.multiplicity),
            ReducedHomology::Empty => ReducedHomology::Empty,
        };
        self.flat_quotient.join(&spheres)
    }
}

/// The wedge decomposition of the singular set over all flats `F != E`, in
/// lattice order (rank, then elements).
pub fn singular_wedge(action: &TorusAction) -> Result<Vec<WedgeSummand>> {
    action.ensure_effective()?;
    let m = RepresentedMatroid::from_action(action)?;
    Ok(wedge_summands(&m))
}

pub fn wedge_summands<M: Matroid + ?Sized>(m: &M) -> Vec<WedgeSummand> {
    let r = m.full_rank();
    let lattice = m.flat_lattice();
    let ground = m.ground_set();
    lattice
        .flats()
        .iter()
        .filter(|f| f.elements != ground)
        .map(|&flat| {
            let quotient = m.contract_set(flat.elements);
            WedgeSummand {
                flat,
                multiplicity: tutte::tutte(&quotient).evaluate(&BigInt::one(), &BigInt::zero()),
                sphere_dim: r as i64 - flat.rank as i64 - 2,
                flat_quotient: matroid_quotient_homology(&m.restrict(flat.elements)),
            }
        })
        .collect()
}

/// Sums the homology of the summands of a wedge. A summand that is the empty
/// space contributes `t^(-1)`, exactly as in the closed formula; the result
/// is the empty space only when the single summand is.
pub fn wedge_homology(summands: &[WedgeSummand]) -> Option<ReducedHomology> {
    wedge_laurent(summands).into_homology()
}

fn wedge_laurent(summands: &[WedgeSummand]) -> Laurent {
    let mut total = Laurent::default();
    for s in summands {
        total.add_assign(&Laurent::from(&s.homology()));
    }
    total
}

/// Checks that the wedge decomposition reproduces the closed formula
/// `t^(r-2) [T(1,t^2) - T(0,t^2)]` term by term.
pub fn wedge_matches_formula<M: Matroid + ?Sized>(m: &M) -> bool {
    let summands = wedge_summands(m);
    let formula = singular_laurent(&tutte::tutte(m), m.full_rank());
    wedge_laurent(&summands) == formula
}

/// A stratum of the singular set: the image of the subsphere on a
/// hyperplane `H`, of dimension `2|H| - r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub hyperplane: Flat,
    pub dim: usize,
}

/// One stratum per nonempty hyperplane.
pub fn singular_strata(action: &TorusAction) -> Result<Vec<Stratum>> {
    action.ensure_effective()?;
    let m = RepresentedMatroid::from_action(action)?;
    Ok(strata(&m))
}

pub fn strata<M: Matroid + ?Sized>(m: &M) -> Vec<Stratum> {
    let r = m.full_rank();
    if r == 0 {
        return Vec::new();
    }
    m.flat_lattice()
        .hyperplanes()
        .into_iter()
        .filter(|h| !h.elements.is_empty())
        .map(|h| Stratum {
            hyperplane: h,
            dim: 2 * h.elements.len() - r,
        })
        .collect()
}

/// Both sides of `T(M;1,t^2) = sum over flats F of T(M/F;1,0) T(M|F;0,t^2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Convolution {
    pub lhs: UnivariatePolynomial,
    pub rhs: UnivariatePolynomial,
}

impl Convolution {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn convolution<M: Matroid + ?Sized>(m: &M) -> Convolution {
    let lhs = tutte_one_t_squared(&tutte::tutte(m));
    let (one, zero) = (BigInt::one(), BigInt::zero());
    let rhs = m
        .flat_lattice()
        .flats()
        .iter()
        .map(|f| {
            let mu = tutte::tutte(&m.contract_set(f.elements)).evaluate(&one, &zero);
            &tutte_zero_t_squared(&tutte::tutte(&m.restrict(f.elements))) * &mu
        })
        .sum();
    Convolution { lhs, rhs }
}

pub fn convolution_check<M: Matroid + ?Sized>(m: &M) -> bool {
    convolution(m).holds()
}
