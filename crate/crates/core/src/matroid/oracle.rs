//! Matroid algorithms written against a rank oracle, so they apply equally to
//! represented matroids and to minor views of them.

use super::lattice::FlatLattice;
use super::set::ElementSet;
use crate::error::{Error, Result};

/// A matroid given by its ground set and rank function.
///
/// Implementors supply [`Matroid::ground_set`] and [`Matroid::rank_of`]; the
/// rest is derived. `rank_of` is only ever called on subsets of the ground set.
pub trait Matroid {
    fn ground_set(&self) -> ElementSet;

    fn rank_of(&self, set: ElementSet) -> usize;

    fn size(&self) -> usize {
        self.ground_set().len()
    }

    fn full_rank(&self) -> usize {
        self.rank_of(self.ground_set())
    }

    fn is_independent(&self, set: ElementSet) -> bool {
        self.rank_of(set) == set.len()
    }

    fn is_loop(&self, e: usize) -> bool {
        self.rank_of(ElementSet::singleton(e)) == 0
    }

    fn is_coloop(&self, e: usize) -> bool {
        let ground = self.ground_set();
        self.rank_of(ground.without(e)) + 1 == self.rank_of(ground)
    }

    fn loops(&self) -> ElementSet {
        self.ground_set().iter().filter(|&e| self.is_loop(e)).collect()
    }

    fn coloops(&self) -> ElementSet {
        self.ground_set().iter().filter(|&e| self.is_coloop(e)).collect()
    }

    /// `{e : r(A + e) = r(A)}`
    fn closure_of(&self, set: ElementSet) -> ElementSet {
        let r = self.rank_of(set);
        self.ground_set()
            .iter()
            .filter(|&e| set.contains(e) || self.rank_of(set.with(e)) == r)
            .collect()
    }

    fn is_flat(&self, set: ElementSet) -> bool {
        self.closure_of(set) == set
    }

    /// Lexicographically first basis.
    fn greedy_basis(&self) -> ElementSet {
        let mut basis = ElementSet::EMPTY;
        for e in self.ground_set() {
            if self.is_independent(basis.with(e)) {
                basis.insert(e);
            }
        }
        basis
    }

    /// Minimal dependent: `r(A) = |A| - 1` and every `A - e` independent.
    fn is_circuit_set(&self, set: ElementSet) -> bool {
        let k = set.len();
        k > 0 && self.rank_of(set) + 1 == k && set.iter().all(|e| self.rank_of(set.without(e)) + 1 == k)
    }

    /// All circuits, by scanning every subset of the ground set.
    fn circuits(&self) -> Vec<ElementSet> {
        let mut found: Vec<ElementSet> = self
            .ground_set()
            .subsets()
            .filter(|&s| self.is_circuit_set(s))
            .collect();
        found.sort_by_key(|s| (s.len(), s.bits()));
        found
    }

    /// The finest partition of the ground set with additive rank.
    ///
    /// Elements are linked through the fundamental circuits of the greedy
    /// basis; loops and coloops come out as singletons.
    fn components(&self) -> Vec<ElementSet> {
        let ground = self.ground_set();
        let labels = ground.to_vec();
        let index = |e: usize| labels.binary_search(&e).expect("element of ground set");
        let mut parent: Vec<usize> = (0..labels.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }

        let basis = self.greedy_basis();
        let k = basis.len();
        for e in ground.difference(basis) {
            if self.is_loop(e) {
                continue;
            }
            for b in basis {
                if self.rank_of(basis.without(b).with(e)) == k {
                    let (x, y) = (find(&mut parent, index(e)), find(&mut parent, index(b)));
                    parent[x] = y;
                }
            }
        }

        let mut classes: Vec<ElementSet> = Vec::new();
        let mut root_class: Vec<Option<usize>> = vec![None; labels.len()];
        for (i, &e) in labels.iter().enumerate() {
            let root = find(&mut parent, i);
            match root_class[root] {
                Some(c) => classes[c].insert(e),
                None => {
                    root_class[root] = Some(classes.len());
                    classes.push(ElementSet::singleton(e));
                }
            }
        }
        classes
    }

    fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True iff every connected component is a circuit.
    fn is_direct_sum_of_circuits(&self) -> bool {
        self.components().into_iter().all(|c| self.is_circuit_set(c))
    }

    fn flat_lattice(&self) -> FlatLattice {
        FlatLattice::build(self)
    }

    /// Signed Möbius value `mu(closure of empty set, E)` of the lattice of flats.
    fn mobius(&self) -> i64 {
        self.flat_lattice().mobius()
    }

    /// Reduced Euler characteristic of the order complex of the proper part
    /// of the lattice of flats.
    fn order_complex_euler(&self) -> Result<i64> {
        if self.full_rank() == 0 {
            return Err(Error::RankZero);
        }
        Ok(self.flat_lattice().proper_part_reduced_euler())
    }

    /// Restriction `M | set`.
    fn restrict(&self, set: ElementSet) -> Minor<'_, Self> {
        Minor::new(self, set, ElementSet::EMPTY)
    }

    /// Contraction `M / set`.
    fn contract_set(&self, set: ElementSet) -> Minor<'_, Self> {
        Minor::new(self, self.ground_set().difference(set), set)
    }

    /// `M / contracted`, restricted to `retained`.
    fn minor(&self, retained: ElementSet, contracted: ElementSet) -> Minor<'_, Self> {
        Minor::new(self, retained, contracted)
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_set(&self) -> ElementSet {
        (**self).ground_set()
    }

    fn rank_of(&self, set: ElementSet) -> usize {
        (**self).rank_of(set)
    }
}

/// The minor `(M / contracted) | retained`, evaluated through the rank
/// function of `M`: `r'(A) = r(A + contracted) - r(contracted)`.
///
/// A minor is determined by the pair (retained, contracted) regardless of
/// the order in which elements were deleted or contracted.
pub struct Minor<'a, M: ?Sized> {
    base: &'a M,
    retained: ElementSet,
    contracted: ElementSet,
    contracted_rank: usize,
}

impl<'a, M: Matroid + ?Sized> Minor<'a, M> {
    pub fn new(base: &'a M, retained: ElementSet, contracted: ElementSet) -> Self {
        let ground = base.ground_set();
        assert!(
            retained.is_subset(ground) && contracted.is_subset(ground) && retained.is_disjoint(contracted),
            "minor sets must be disjoint subsets of the ground set"
        );
        Self {
            base,
            retained,
            contracted,
            contracted_rank: base.rank_of(contracted),
        }
    }

    pub fn retained(&self) -> ElementSet {
        self.retained
    }

    pub fn contracted(&self) -> ElementSet {
        self.contracted
    }

    pub fn base(&self) -> &'a M {
        self.base
    }
}

impl<M: Matroid + ?Sized> Matroid for Minor<'_, M> {
    fn ground_set(&self) -> ElementSet {
        self.retained
    }

    fn rank_of(&self, set: ElementSet) -> usize {
        debug_assert!(set.is_subset(self.retained));
        self.base.rank_of(set.union(self.contracted)) - self.contracted_rank
    }
}
