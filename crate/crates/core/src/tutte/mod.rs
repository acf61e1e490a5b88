//! Tutte polynomials of matroids, by memoized deletion-contraction and by the
//! corank-nullity subset expansion.

mod poly;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matroid::{ElementSet, Matroid, Minor};

pub use poly::{BivariatePolynomial, UnivariatePolynomial};

/// Largest ground set the subset expansion accepts unless told otherwise.
pub const DEFAULT_ORACLE_LIMIT: usize = 20;

/// Counters from one deletion-contraction run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TutteStats {
    /// Minors whose polynomial was computed.
    pub evaluated: usize,
    /// Lookups answered from the memo.
    pub memo_hits: usize,
}

/// Memoized deletion-contraction over minors of one fixed matroid.
///
/// Each minor is named by its (retained, contracted) pair, so two paths to
/// the same minor share one cache entry without any isomorphism test.
struct Engine<'a, M: ?Sized> {
    base: &'a M,
    memo: HashMap<(ElementSet, ElementSet), BivariatePolynomial>,
    stats: TutteStats,
}

impl<'a, M: Matroid + ?Sized> Engine<'a, M> {
    fn new(base: &'a M) -> Self {
        Self {
            base,
            memo: HashMap::new(),
            stats: TutteStats::default(),
        }
    }

    fn eval(&mut self, retained: ElementSet, contracted: ElementSet) -> BivariatePolynomial {
        if retained.is_empty() {
            return BivariatePolynomial::one();
        }
        if let Some(p) = self.memo.get(&(retained, contracted)) {
            self.stats.memo_hits += 1;
            return p.clone();
        }
        self.stats.evaluated += 1;

        let minor = Minor::new(self.base, retained, contracted);
        let loops = minor.loops();
        let coloops = minor.coloops();
        let mut result = BivariatePolynomial::monomial(coloops.len() as u32, loops.len() as u32, 1);
        let rest = retained.difference(loops).difference(coloops);

        if !rest.is_empty() {
            let core = Minor::new(self.base, rest, contracted);
            let components = core.components();
            if components.len() > 1 {
                for c in components {
                    result = &result * &self.eval(c, contracted);
                }
            } else {
                let e = rest.first().expect("nonempty");
                let deleted = self.eval(rest.without(e), contracted);
                let contracted = self.eval(rest.without(e), contracted.with(e));
                result = &result * &(&deleted + &contracted);
            }
        }

        self.memo.insert((retained, contracted), result.clone());
        result
    }
}

/// The Tutte polynomial by deletion-contraction.
///
/// Loops and coloops are stripped first, a disconnected matroid is split into
/// its components, and otherwise the smallest remaining element is deleted
/// and contracted. The empty matroid gives 1.
pub fn tutte<M: Matroid + ?Sized>(m: &M) -> BivariatePolynomial {
    tutte_with_stats(m).0
}

pub fn tutte_with_stats<M: Matroid + ?Sized>(m: &M) -> (BivariatePolynomial, TutteStats) {
    let mut engine = Engine::new(m);
    let p = engine.eval(m.ground_set(), ElementSet::EMPTY);
    (p, engine.stats)
}

/// The Tutte polynomial from the corank-nullity expansion
/// `sum over A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))`.
///
/// Visits all `2^n` subsets; refuses ground sets above [`DEFAULT_ORACLE_LIMIT`].
pub fn tutte_oracle<M: Matroid + ?Sized>(m: &M) -> Result<BivariatePolynomial> {
    tutte_oracle_with_limit(m, DEFAULT_ORACLE_LIMIT)
}

pub fn tutte_oracle_with_limit<M: Matroid + ?Sized>(m: &M, limit: usize) -> Result<BivariatePolynomial> {
    let n = m.size();
    if n > limit {
        return Err(Error::GroundSetTooLarge { size: n, limit });
    }
    let full = m.full_rank();
    let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
    for a in m.ground_set().subsets() {
        let r = m.rank_of(a);
        *counts.entry(((full - r) as u32, (a.len() - r) as u32)).or_default() += 1;
    }
    let mut total = BivariatePolynomial::zero();
    for ((corank, nullity), count) in counts {
        let term = BivariatePolynomial::shifted_monomial(corank, nullity);
        total = &total + &(&term * &BigInt::from(count));
    }
    Ok(total)
}

/// `T(M; x0, y0)`
pub fn tutte_at<M: Matroid + ?Sized>(m: &M, x0: i64, y0: i64) -> BigInt {
    tutte(m).evaluate(&BigInt::from(x0), &BigInt::from(y0))
}

/// `T(M; 0, t^2)`, the specialization the quotient homology is built from.
pub fn tutte_zero_t_squared(t: &BivariatePolynomial) -> UnivariatePolynomial {
    t.substitute_x(&BigInt::from(0)).substitute_t_squared()
}

/// `T(M; 1, t^2)`
pub fn tutte_one_t_squared(t: &BivariatePolynomial) -> UnivariatePolynomial {
    t.substitute_x(&BigInt::one()).substitute_t_squared()
}

/// Checks the shape `T(M;0,t^2) = t^(2k) + b_(k-1) t^(2k-2) + ... + b_1 t^2`
/// with `k = n - r`, expected of every coloop-free matroid: leading
/// coefficient 1, nonnegative coefficients, only even exponents, no constant
/// term unless `k = 0`, and nonzero coefficients forming an unbroken run
/// downward from the top.
pub fn has_coloop_free_shape(p: &UnivariatePolynomial, n: usize, r: usize) -> bool {
    let Some(k) = n.checked_sub(r) else {
        return false;
    };
    let top = 2 * k as u32;
    if p.degree() != Some(top) || !p.leading_coefficient().is_some_and(One::is_one) {
        return false;
    }
    if !p.has_nonnegative_coefficients() || p.terms().any(|(e, _)| e % 2 == 1) {
        return false;
    }
    let lowest = p.lowest_degree().expect("nonzero");
    if k > 0 && lowest == 0 {
        return false;
    }
    let run = (top - lowest) / 2 + 1;
    p.terms().count() as u32 == run
}
