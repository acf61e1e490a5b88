//! What the quotient is: a point, a circle, a cone, a sphere, a complex
//! projective space, or not a manifold.
//!
//! The decision runs on the column matroid. Loops and components turn into
//! joins, coloops into cones, circuits into spheres. A connected rank-one
//! factor is a weighted projective space, a manifold exactly for the weights
//! `(a, ..., a, 1)`. Every other factor fails Poincare duality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::action::TorusAction;
use crate::error::{Error, Result};
use crate::matroid::{ElementSet, Matroid, RepresentedMatroid};
use crate::topology::{poincare_quotient, QuotientSummary};
use crate::tutte::{self, UnivariatePolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Point,
    Circle,
    /// Contractible; no manifold claim is made.
    Cone,
    Sphere(usize),
    /// `CP^k`, by complex dimension.
    ComplexProjective(usize),
    /// A join whose manifold status is not settled by the available facts.
    JoinOfFactors,
    NotManifold,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Point => f.write_str("Point"),
            Verdict::Circle => f.write_str("Circle"),
            Verdict::Cone => f.write_str("Cone"),
            Verdict::Sphere(d) => write!(f, "Sphere({d})"),
            Verdict::ComplexProjective(k) => write!(f, "ComplexProjective({k})"),
            Verdict::JoinOfFactors => f.write_str("JoinOfFactors"),
            Verdict::NotManifold => f.write_str("NotManifold"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Why a quotient is not a manifold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// Betti numbers are not symmetric about the middle dimension.
    Duality {
        degree: u32,
        #[serde(serialize_with = "crate::json::bigint_number::serialize")]
        betti: BigInt,
        dual_degree: u32,
        #[serde(serialize_with = "crate::json::bigint_number::serialize")]
        dual_betti: BigInt,
    },
    /// Normalized rank-one weights not of the form `(a, ..., a, 1)`.
    Weights {
        #[serde(serialize_with = "crate::json::bigint_string::serialize")]
        witness: BigInt,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    /// Real dimension of the quotient.
    pub dim: usize,
    pub factors: Vec<Factor>,
    pub evidence: Vec<String>,
    pub homology: QuotientSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<Obstruction>,
}

/// A join factor, on a block of columns of the original matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub columns: ElementSet,
    #[serde(flatten)]
    pub classification: Classification,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorRole {
    /// A zero column: the invariant circle joins in as `S^1`.
    Loop,
    Circuit,
    /// Connected, rank one, more than two columns.
    RankOne,
    Other,
}

/// A block of the join decomposition with its own effective action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinFactor {
    pub columns: ElementSet,
    pub action: TorusAction,
    pub role: FactorRole,
}

/// Splits `X` into the join of the quotients over the connected components
/// of the matroid.
pub fn join_decomposition(action: &TorusAction) -> Result<Vec<JoinFactor>> {
    action.ensure_effective()?;
    let m = RepresentedMatroid::from_action(action)?;
    m.components()
        .into_iter()
        .map(|block| {
            let sub = action.restrict_to_columns(&block.to_vec())?;
            let role = if m.is_loop(block.first().expect("nonempty block")) {
                FactorRole::Loop
            } else if m.is_circuit_set(block) {
                FactorRole::Circuit
            } else if m.rank_of(block) == 1 {
                FactorRole::RankOne
            } else {
                FactorRole::Other
            };
            Ok(JoinFactor {
                columns: block,
                action: sub,
                role,
            })
        })
        .collect()
}

/// The two independent tests for being a direct sum of circuits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereTest {
    /// Every component is a circuit.
    pub structural: bool,
    /// `T(M; 0, t) = t^(n - r)`.
    pub tutte: bool,
}

pub fn sphere_test<M: Matroid + ?Sized>(m: &M) -> SphereTest {
    let t0 = tutte::tutte(m).substitute_x(&BigInt::zero());
    SphereTest {
        structural: m.is_direct_sum_of_circuits(),
        tutte: t0 == UnivariatePolynomial::monomial((m.size() - m.full_rank()) as u32, 1),
    }
}

/// True iff `X` is an integral homology sphere, i.e. the matroid is a direct
/// sum of circuits. Disagreement between the structural and the polynomial
/// test is reported as an invariant failure.
pub fn is_homology_sphere(action: &TorusAction) -> Result<bool> {
    action.ensure_effective()?;
    let test = sphere_test(&RepresentedMatroid::from_action(action)?);
    if test.structural != test.tutte {
        return Err(Error::Invariant(format!(
            "circuit test says {}, Tutte test says {}",
            test.structural, test.tutte
        )));
    }
    Ok(test.structural)
}

/// First degree `k` with `b_k != b_(d-k)`, in unreduced Betti numbers.
pub fn duality_obstruction(summary: &QuotientSummary) -> Option<Obstruction> {
    let d = summary.dimension as u32;
    let betti = |k: u32| {
        let reduced = summary.poincare.coefficient(k);
        if k == 0 {
            reduced + 1
        } else {
            reduced
        }
    };
    (0..=d / 2).find_map(|k| {
        let (b, dual) = (betti(k), betti(d - k));
        (b != dual).then(|| Obstruction::Duality {
            degree: k,
            betti: b,
            dual_degree: d - k,
            dual_betti: dual,
        })
    })
}

fn sphere_name(d: usize) -> String {
    format!("S^{d}")
}

fn weight_list(w: &[BigInt]) -> String {
    let items: Vec<String> = w.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

/// Classifies `S^(2n-1) / S^1` for the weights `a_1, ..., a_n`.
///
/// Weights are divided by their gcd, made positive, and sorted descending.
/// Two weights give `S^2`; `(a, ..., a, 1)` gives `CP^(n-1)`; anything else
/// is not a manifold, with the first weight breaking the pattern as witness.
pub fn classify_rank_one(weights: &[BigInt]) -> Result<Classification> {
    if weights.is_empty() {
        return Err(Error::NoColumns);
    }
    if let Some(index) = weights.iter().position(Zero::is_zero) {
        return Err(Error::ZeroWeight { index });
    }
    let g = weights.iter().fold(BigInt::zero(), |g, w| g.gcd(w));
    let mut a: Vec<BigInt> = weights.iter().map(|w| (w / &g).abs()).collect();
    a.sort_by(|x, y| y.cmp(x));
    let n = a.len();
    let action = TorusAction::new(crate::matrix::IntMatrix::from_rows(vec![a.clone()], n))?;
    let homology = poincare_quotient(&action)?;

    let mut evidence = Vec::new();
    if !g.is_one() || weights.iter().any(Signed::is_negative) || a.as_slice() != weights {
        evidence.push(format!(
            "weights {} normalized to {} by row division, sign changes and column swaps",
            weight_list(weights),
            weight_list(&a)
        ));
    }
    let (verdict, obstruction) = match n {
        1 => {
            evidence.push("one circle modulo a circle: a point".into());
            (Verdict::Point, None)
        }
        2 => {
            evidence.push("two weights: the quotient is homeomorphic to CP^1 = S^2".into());
            (Verdict::Sphere(2), None)
        }
        _ if a[..n - 1].iter().all(|w| *w == a[0]) && a[n - 1].is_one() => {
            evidence.push(format!(
                "weights a_1 = ... = a_{} = {} and a_{} = 1: homeomorphic to complex projective space of complex dimension {} (real dimension {})",
                n - 1,
                a[0],
                n,
                n - 1,
                2 * (n - 1)
            ));
            (Verdict::ComplexProjective(n - 1), None)
        }
        _ => {
            let witness = if a[..n - 1].iter().all(|w| *w == a[0]) {
                evidence.push(format!("a_1 = ... = a_{} but a_{} = {} is not 1", n - 1, n, a[n - 1]));
                a[n - 1].clone()
            } else {
                let k = a.iter().position(|w| *w != a[0]).expect("weights differ");
                evidence.push(format!("a_1 = {} differs from a_{} = {}", a[0], k + 1, a[k]));
                a[0].clone()
            };
            evidence.push(format!(
                "weighted projective space with weights {}: the link of the singular point with isotropy Z_{} is not a homology sphere, so the quotient is not a manifold",
                weight_list(&a),
                witness
            ));
            (Verdict::NotManifold, Some(Obstruction::Weights { witness }))
        }
    };
    Ok(Classification {
        verdict,
        dim: homology.dimension,
        factors: Vec::new(),
        evidence,
        homology,
        obstruction,
    })
}

/// As [`classify_rank_one`], for an action given as a one-row matrix.
pub fn classify_rank_one_action(action: &TorusAction) -> Result<Classification> {
    if action.torus_rank() != 1 {
        return Err(Error::NotRankOne(action.torus_rank()));
    }
    classify_rank_one(action.matrix().row(0))
}

fn leaf(verdict: Verdict, homology: QuotientSummary, evidence: Vec<String>, obstruction: Option<Obstruction>) -> Classification {
    Classification {
        verdict,
        dim: homology.dimension,
        factors: Vec::new(),
        evidence,
        homology,
        obstruction,
    }
}

/// Classifies a connected, coloop-free factor.
fn classify_connected(action: &TorusAction, role: FactorRole) -> Result<Classification> {
    let homology = poincare_quotient(action)?;
    let (n, r) = (action.circles(), action.torus_rank());
    match role {
        FactorRole::Loop => Ok(leaf(
            Verdict::Sphere(1),
            homology,
            vec!["a zero weight: the fixed circle joins in as S^1".into()],
            None,
        )),
        FactorRole::Circuit => {
            let d = 2 * n - 1 - r;
            Ok(leaf(
                Verdict::Sphere(d),
                homology,
                vec![format!("a circuit of {n} elements and rank {r}: the quotient is {}", sphere_name(d))],
                None,
            ))
        }
        FactorRole::RankOne => classify_rank_one_action(action),
        FactorRole::Other => {
            let mut evidence = vec![format!(
                "connected, coloop-free, rank {r}, not a circuit and not rank one: T(M;0,t^2) = {} is not t^{}",
                tutte::tutte_zero_t_squared(&tutte::tutte(&RepresentedMatroid::from_action(action)?)),
                2 * (n - r)
            )];
            match duality_obstruction(&homology) {
                Some(o) => {
                    evidence.push(duality_message(&o, homology.dimension));
                    Ok(leaf(Verdict::NotManifold, homology, evidence, Some(o)))
                }
                None => {
                    evidence.push("Betti numbers are symmetric; manifold status not determined".into());
                    Ok(leaf(Verdict::JoinOfFactors, homology, evidence, None))
                }
            }
        }
    }
}

fn duality_message(o: &Obstruction, dim: usize) -> String {
    match o {
        Obstruction::Duality {
            degree,
            betti,
            dual_degree,
            dual_betti,
        } => format!(
            "Poincare duality fails in dimension {dim}: b_{degree} = {betti} but b_{dual_degree} = {dual_betti}"
        ),
        Obstruction::Weights { witness } => format!("weight criterion fails at {witness}"),
    }
}

/// Classifies the quotient of an effective action.
pub fn classify(action: &TorusAction) -> Result<Classification> {
    action.ensure_effective()?;
    let homology = poincare_quotient(action)?;
    let (n, r) = (action.circles(), action.torus_rank());

    if n == 1 {
        return Ok(if r == 0 {
            leaf(Verdict::Circle, homology, vec!["one circle, trivial torus: the circle S^1".into()], None)
        } else {
            leaf(Verdict::Point, homology, vec!["one circle, rank-one torus: a point".into()], None)
        });
    }

    let m = RepresentedMatroid::from_action(action)?;
    let coloops = m.coloops();
    if !coloops.is_empty() {
        let e = coloops.first().expect("nonempty");
        return Ok(leaf(
            Verdict::Cone,
            homology,
            vec![format!(
                "e{} is a coloop: the quotient is a cone, hence contractible (manifold-with-boundary status not examined)",
                e + 1
            )],
            None,
        ));
    }

    let blocks = join_decomposition(action)?;
    let mut evidence = Vec::new();
    if blocks.len() > 1 {
        let names: Vec<String> = blocks.iter().map(|b| b.columns.to_string()).collect();
        evidence.push(format!(
            "the matroid splits into components {}: the quotient is their join",
            names.join(", ")
        ));
    }
    let mut factors = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let c = classify_connected(&b.action, b.role)?;
        factors.push(Factor {
            columns: b.columns,
            classification: c,
        });
    }

    let test = sphere_test(&m);
    if test.structural != test.tutte {
        return Err(Error::Invariant(format!(
            "circuit test says {}, Tutte test says {}",
            test.structural, test.tutte
        )));
    }

    if factors.len() == 1 {
        let mut only = factors.pop().expect("one factor").classification;
        evidence.append(&mut only.evidence);
        if test.structural {
            evidence.push(format!("T(M;0,t) = t^{} confirms a homology sphere", n - r));
        }
        only.evidence = evidence;
        only.homology = homology;
        return Ok(only);
    }

    let dim = homology.dimension;
    if test.structural {
        let names: Vec<String> = factors
            .iter()
            .map(|f| sphere_name(f.classification.dim))
            .collect();
        evidence.push(format!("join of spheres {} = {}", names.join(" * "), sphere_name(dim)));
        evidence.push(format!("T(M;0,t) = t^{} confirms a homology sphere", n - r));
        return Ok(Classification {
            verdict: Verdict::Sphere(dim),
            dim,
            factors,
            evidence,
            homology,
            obstruction: None,
        });
    }

    let failing = factors
        .iter()
        .find(|f| f.classification.verdict == Verdict::NotManifold);
    let obstruction = duality_obstruction(&homology);
    let (verdict, obstruction) = match (&obstruction, failing) {
        (Some(o), _) => {
            evidence.push(duality_message(o, dim));
            (Verdict::NotManifold, obstruction)
        }
        (None, Some(f)) => {
            evidence.push(format!(
                "factor on {} is not a manifold, so neither is the join",
                f.columns
            ));
            (Verdict::NotManifold, f.classification.obstruction.clone())
        }
        (None, None) => {
            evidence.push("Betti numbers of the join are symmetric; manifold status not determined".into());
            (Verdict::JoinOfFactors, None)
        }
    };
    Ok(Classification {
        verdict,
        dim,
        factors,
        evidence,
        homology,
        obstruction,
    })
}
