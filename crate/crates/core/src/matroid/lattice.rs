//! The lattice of flats, its Möbius function, and the order complex of its
//! proper part.

use std::collections::HashMap;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use super::oracle::Matroid;
use super::set::ElementSet;

/// A closed set together with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Flat {
    pub elements: ElementSet,
    pub rank: usize,
}

#[derive(Debug, Clone)]
pub struct FlatLattice {
    /// Sorted by rank, then by element bitmask.
    flats: Vec<Flat>,
    /// `upper_covers[i]` lists the flats covering `flats[i]`.
    upper_covers: Vec<Vec<usize>>,
    mobius_from_bottom: Vec<i64>,
}

impl FlatLattice {
    /// Generates flats rank by rank: every flat of rank `k + 1` is the closure
    /// of `F + e` for some flat `F` of rank `k` and `e` outside `F`.
    pub fn build<M: Matroid + ?Sized>(m: &M) -> Self {
        let ground = m.ground_set();
        let bottom = m.closure_of(ElementSet::EMPTY);
        let mut levels: Vec<Vec<ElementSet>> = vec![vec![bottom]];
        let mut edges: Vec<(ElementSet, ElementSet)> = Vec::new();
        loop {
            let current = levels.last().expect("at least one level");
            let mut next: Vec<ElementSet> = Vec::new();
            let mut seen: HashMap<ElementSet, ()> = HashMap::new();
            for &f in current {
                let mut remaining = ground.difference(f);
                while let Some(e) = remaining.first() {
                    let g = m.closure_of(f.with(e));
                    // elements of g - f all give the same cover
                    remaining = remaining.difference(g);
                    edges.push((f, g));
                    if seen.insert(g, ()).is_none() {
                        next.push(g);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }

        let mut flats: Vec<Flat> = levels
            .iter()
            .enumerate()
            .flat_map(|(rank, level)| level.iter().map(move |&elements| Flat { elements, rank }))
            .collect();
        flats.sort_by_key(|f| (f.rank, f.elements.bits()));
        let index: HashMap<ElementSet, usize> = flats.iter().enumerate().map(|(i, f)| (f.elements, i)).collect();
        let mut upper_covers = vec![Vec::new(); flats.len()];
        for (f, g) in edges {
            upper_covers[index[&f]].push(index[&g]);
        }
        for covers in &mut upper_covers {
            covers.sort_unstable();
            covers.dedup();
        }

        let mut mobius_from_bottom = vec![0i64; flats.len()];
        mobius_from_bottom[0] = 1;
        for i in 1..flats.len() {
            let below: i64 = (0..i)
                .filter(|&j| flats[j].elements.is_proper_subset(flats[i].elements))
                .map(|j| mobius_from_bottom[j])
                .sum();
            mobius_from_bottom[i] = -below;
        }

        FlatLattice {
            flats,
            upper_covers,
            mobius_from_bottom,
        }
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn bottom(&self) -> Flat {
        self.flats[0]
    }

    pub fn top(&self) -> Flat {
        *self.flats.last().expect("lattice has a top")
    }

    pub fn rank(&self) -> usize {
        self.top().rank
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    pub fn index_of(&self, elements: ElementSet) -> Option<usize> {
        self.flats.iter().position(|f| f.elements == elements)
    }

    /// `mu(bottom, flats[i])`
    pub fn mobius_from_bottom(&self, i: usize) -> i64 {
        self.mobius_from_bottom[i]
    }

    /// `mu(bottom, top)`
    pub fn mobius(&self) -> i64 {
        *self.mobius_from_bottom.last().expect("lattice has a top")
    }

    pub fn flats_of_rank(&self, rank: usize) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(move |f| f.rank == rank)
    }

    /// Flats of rank `r - 1`; empty when the matroid has rank zero.
    pub fn hyperplanes(&self) -> Vec<Flat> {
        match self.rank().checked_sub(1) {
            Some(k) => self.flats_of_rank(k).copied().collect(),
            None => Vec::new(),
        }
    }

    /// Number of chains with `k + 1` elements in the proper part (bottom and
    /// top removed), for `k = 0, 1, ...`; entry `k` counts the `k`-faces of the
    /// order complex.
    pub fn proper_part_face_counts(&self) -> Vec<u128> {
        let last = self.flats.len() - 1;
        if last == 0 {
            return Vec::new();
        }
        let proper: Vec<usize> = (1..last).collect();
        // ending[x][k]: chains of k + 1 elements whose largest element is x
        let mut ending: Vec<Vec<u128>> = Vec::with_capacity(proper.len());
        for (xi, &x) in proper.iter().enumerate() {
            let mut counts = vec![1u128];
            for (yi, &y) in proper[..xi].iter().enumerate() {
                if self.flats[y].elements.is_proper_subset(self.flats[x].elements) {
                    for (k, &c) in ending[yi].iter().enumerate() {
                        if counts.len() <= k + 1 {
                            counts.resize(k + 2, 0);
                        }
                        counts[k + 1] += c;
                    }
                }
            }
            ending.push(counts);
        }
        let mut faces: Vec<u128> = Vec::new();
        for counts in &ending {
            if faces.len() < counts.len() {
                faces.resize(counts.len(), 0);
            }
            for (k, &c) in counts.iter().enumerate() {
                faces[k] += c;
            }
        }
        faces
    }

    /// `sum_{i >= -1} (-1)^i f_i`, counting the empty face as `f_{-1} = 1`.
    pub fn proper_part_reduced_euler(&self) -> i64 {
        self.proper_part_face_counts()
            .iter()
            .enumerate()
            .fold(-1i128, |acc, (k, &f)| if k % 2 == 0 { acc + f as i128 } else { acc - f as i128 }) as i64
    }
}

/// Serializes as a list of `{elements, rank, mobius}` records.
impl Serialize for FlatLattice {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            elements: ElementSet,
            rank: usize,
            mobius: i64,
        }
        let mut seq = serializer.serialize_seq(Some(self.flats.len()))?;
        for (f, &mobius) in self.flats.iter().zip(&self.mobius_from_bottom) {
            seq.serialize_element(&Entry {
                elements: f.elements,
                rank: f.rank,
                mobius,
            })?;
        }
        seq.end()
    }
}
