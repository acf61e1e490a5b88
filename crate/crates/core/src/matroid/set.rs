use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest ground set representable by an [`ElementSet`].
pub const MAX_ELEMENTS: usize = 64;

/// A subset of the ground-set labels `0..64`, as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`
    pub fn first_n(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        assert!(e < MAX_ELEMENTS);
        ElementSet(1 << e)
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    #[must_use]
    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | Self::singleton(e).0)
    }

    #[must_use]
    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !Self::singleton(e).0)
    }

    pub fn insert(&mut self, e: usize) {
        *self = self.with(e);
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Every subset of `self`, starting from the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(ElementSet::EMPTY, ElementSet::with)
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let current = self.next?;
        // standard submask walk: (current - universe) & universe enumerates upward
        let following = current.wrapping_sub(self.universe) & self.universe;
        self.next = (following != 0).then_some(following);
        Some(ElementSet(current))
    }
}

/// Prints labels one-based, as `{e1, e3}`.
impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.iter().map(|e| format!("e{}", e + 1)).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Serializes as the ascending list of zero-based labels.
impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = labels.iter().find(|&&e| e >= MAX_ELEMENTS) {
            return Err(serde::de::Error::custom(format!("label {bad} out of range")));
        }
        Ok(labels.into_iter().collect())
    }
}
