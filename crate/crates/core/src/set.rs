use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of the elements `0..order` of a fixed semigroup.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        ElementSet {
            bits: FixedBitSet::with_capacity(order),
        }
    }

    pub fn full(order: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(order);
        bits.insert_range(..);
        ElementSet { bits }
    }

    pub fn singleton(order: usize, x: usize) -> Self {
        let mut s = Self::empty(order);
        s.insert(x);
        s
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(order: usize, elements: I) -> Self {
        let mut s = Self::empty(order);
        for x in elements {
            s.insert(x);
        }
        s
    }

    /// Builds the set whose members are the one bits of `mask` (bit `i` is element `i`).
    pub fn from_mask(order: usize, mask: u64) -> Self {
        debug_assert!(order <= 64);
        Self::from_elements(order, (0..order).filter(|&i| mask >> i & 1 == 1))
    }

    /// The bit pattern of the set; only meaningful for orders up to 64.
    pub fn to_mask(&self) -> u64 {
        debug_assert!(self.order() <= 64);
        self.iter().fold(0u64, |m, i| m | 1 << i)
    }

    pub fn order(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.order()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    /// Inserts `x`, returning true if it was absent.
    pub fn insert(&mut self, x: usize) -> bool {
        !self.bits.put(x)
    }

    pub fn remove(&mut self, x: usize) {
        self.bits.set(x, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElementSet { bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElementSet { bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ElementSet { bits }
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        ElementSet { bits }
    }

    pub fn union_with(&mut self, other: &Self) {
        self.bits.union_with(&other.bits);
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Orders sets by their bit pattern read as a binary number with
    /// element 0 as the least significant bit.
    pub fn cmp_bit_pattern(&self, other: &Self) -> Ordering {
        let a: Vec<usize> = self.iter().collect();
        let b: Vec<usize> = other.iter().collect();
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                return x.cmp(y);
            }
        }
        a.len().cmp(&b.len())
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl serde::Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = ElementSet::from_elements(5, [0, 2, 4]);
        let b = ElementSet::from_elements(5, [2, 3]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.union(&b).to_vec(), vec![0, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.complement().to_vec(), vec![1, 3]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 4]);
        assert!(ElementSet::full(5).is_full());
        assert_eq!(a.to_string(), "{0, 2, 4}");
    }

    #[test]
    fn bit_pattern_order() {
        for m1 in 0..32u64 {
            for m2 in 0..32u64 {
                let a = ElementSet::from_mask(5, m1);
                let b = ElementSet::from_mask(5, m2);
                assert_eq!(a.cmp_bit_pattern(&b), m1.cmp(&m2));
                assert_eq!(a.to_mask(), m1);
            }
        }
    }
}
