use std::fmt;

use fixedbitset::FixedBitSet;

use super::Elem;

/// A set of group elements, stored as a bitset over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: FixedBitSet,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Subset {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        Subset { bits }
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(n: usize, elems: I) -> Self {
        let mut s = Subset::empty(n);
        for e in elems {
            s.insert(e);
        }
        s
    }

    /// Size of the ambient group.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.bits.contains(e)
    }

    /// Panics if `e` is outside the universe.
    pub fn insert(&mut self, e: Elem) -> bool {
        assert!(e < self.bits.len(), "element {e} outside universe");
        !self.bits.put(e)
    }

    pub fn remove(&mut self, e: Elem) {
        self.bits.set(e, false);
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Subset { bits }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Subset { bits }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Subset { bits }
    }

    pub fn first(&self) -> Option<Elem> {
        self.bits.minimum()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
