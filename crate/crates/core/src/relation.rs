//! Binary relations over elements and partitions of the element set.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;
use crate::set::ElementSet;

/// An `n×n` boolean matrix; row `x` holds `{y : x R y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryRelation {
    rows: Vec<ElementSet>,
}

impl BinaryRelation {
    pub fn from_rows(rows: Vec<ElementSet>) -> Self {
        debug_assert!(rows.iter().all(|r| r.order() == rows.len()));
        BinaryRelation { rows }
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let rows = (0..order)
            .map(|x| ElementSet::from_elements(order, (0..order).filter(|&y| f(x, y))))
            .collect();
        BinaryRelation { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn row(&self, x: usize) -> &ElementSet {
        &self.rows[x]
    }

    pub fn column(&self, y: usize) -> ElementSet {
        ElementSet::from_elements(self.order(), (0..self.order()).filter(|&x| self.get(x, y)))
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|x| self.rows[x].iter().map(move |y| (x, y)))
            .collect()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.order()).all(|x| self.get(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.order()).all(|x| self.rows[x].iter().all(|y| self.rows[y].is_subset(&self.rows[x])))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs().into_iter().all(|(x, y)| x == y || !self.get(y, x))
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    /// Covering pairs `x < y` with nothing strictly between: the transitive
    /// reduction of a partial order.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs()
            .into_iter()
            .filter(|&(x, y)| {
                x != y
                    && !(0..self.order())
                        .any(|z| z != x && z != y && self.get(x, z) && self.get(z, y))
            })
            .collect()
    }
}

/// Equivalence classes over `0..order`, numbered by their smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<ElementSet>,
}

impl Partition {
    /// Builds a partition from arbitrary block labels, one per element.
    pub fn from_labels<L: PartialEq>(labels: &[L]) -> Self {
        let n = labels.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<ElementSet> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = ElementSet::empty(n);
            for y in x..n {
                if labels[y] == labels[x] {
                    class_of[y] = id;
                    members.insert(y);
                }
            }
            classes.push(members);
        }
        Partition { class_of, classes }
    }

    pub fn discrete(order: usize) -> Self {
        Partition::from_labels(&(0..order).collect::<Vec<_>>())
    }

    pub fn full(order: usize) -> Self {
        Partition::from_labels(&vec![0; order])
    }

    pub fn order(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_of
    }

    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn same_class(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn is_discrete(&self) -> bool {
        self.num_classes() == self.order()
    }

    /// The intersection of two equivalence relations.
    pub fn meet(&self, other: &Partition) -> Partition {
        let pairs: Vec<(usize, usize)> = (0..self.order())
            .map(|x| (self.class_of[x], other.class_of[x]))
            .collect();
        Partition::from_labels(&pairs)
    }

    /// Returns a witness `(x, y, a)` with `x ~ y` whose products with `a`
    /// on one side fall in different classes, or `None` for a congruence.
    pub fn congruence_violation(&self, s: &Semigroup) -> Option<(usize, usize, usize)> {
        for class in &self.classes {
            let Some(rep) = class.first() else { continue };
            for y in class.iter().skip(1) {
                for a in s.elements() {
                    if !self.same_class(s.mul(a, rep), s.mul(a, y))
                        || !self.same_class(s.mul(rep, a), s.mul(y, a))
                    {
                        return Some((rep, y, a));
                    }
                }
            }
        }
        None
    }

    pub fn is_congruence(&self, s: &Semigroup) -> bool {
        self.congruence_violation(s).is_none()
    }

    pub fn ensure_congruence(&self, s: &Semigroup) -> Result<()> {
        match self.congruence_violation(s) {
            Some((x, y, a)) => Err(Error::NotACongruence { x, y, a }),
            None => Ok(()),
        }
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.classes.iter())
    }
}
