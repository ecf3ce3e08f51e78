//! Finite semigroups given by Cayley tables, and their elementary algebra:
//! products of subsets, the monoid `X¹`, monogenic subsemigroups,
//! idempotents, H-classes and maximal subgroups.
//!
//! Elements are the dense indices `0..order`; labels are display metadata.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// A finite semigroup stored as a row-major Cayley table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Semigroup {
    order: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// A factor drawn from `X¹`: either an element of `X` or the adjoined identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    One,
    Elem(usize),
}

impl Factor {
    /// Every factor of `X¹` in scan order: the identity first, then `0..order`.
    pub fn all(order: usize) -> impl Iterator<Item = Factor> + Clone {
        std::iter::once(Factor::One).chain((0..order).map(Factor::Elem))
    }
}

impl serde::Serialize for Factor {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Factor::One => ser.serialize_str("ONE"),
            Factor::Elem(x) => ser.serialize_u64(*x as u64),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::One => write!(f, "ONE"),
            Factor::Elem(x) => write!(f, "{x}"),
        }
    }
}

/// Validates a table and returns the semigroup it defines.
///
/// Out-of-range entries are reported before associativity is checked; the
/// reported non-associative triple is the lexicographically first one.
pub fn validate(order: usize, rows: &[Vec<usize>]) -> Result<Semigroup> {
    if order == 0 {
        return Err(Error::EmptySemigroup);
    }
    if rows.len() != order {
        return Err(Error::BadRowCount {
            expected: order,
            found: rows.len(),
        });
    }
    let mut table = Vec::with_capacity(order * order);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != order {
            return Err(Error::BadShape {
                expected: order,
                row: i,
                found: row.len(),
            });
        }
        for (j, &value) in row.iter().enumerate() {
            if value >= order {
                return Err(Error::EntryOutOfRange { i, j, value, order });
            }
        }
        table.extend_from_slice(row);
    }
    let s = Semigroup {
        order,
        table,
        labels: None,
    };
    if let Some((i, j, k)) = s.first_non_associative() {
        return Err(Error::NonAssociative { i, j, k });
    }
    Ok(s)
}

impl Semigroup {
    /// Builds and validates the semigroup with `i·j = f(i, j)`.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..order)
            .map(|i| (0..order).map(|j| f(i, j)).collect())
            .collect();
        validate(order, &rows)
    }

    /// Wraps a flat table known to be associative and in range.
    pub(crate) fn from_table_unchecked(order: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let s = Semigroup {
            order,
            table,
            labels: None,
        };
        debug_assert!(s.first_non_associative().is_none());
        s
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::Parse(format!(
                "expected {} labels, got {}",
                self.order,
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    /// `a·x·b` with the identity factors of `X¹` omitted.
    pub fn sandwich(&self, a: Factor, x: usize, b: Factor) -> usize {
        let left = match a {
            Factor::One => x,
            Factor::Elem(a) => self.mul(a, x),
        };
        match b {
            Factor::One => left,
            Factor::Elem(b) => self.mul(left, b),
        }
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label when present, its index otherwise.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Resolves a label or a decimal index to an element.
    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == name) {
                return Some(i);
            }
        }
        name.parse::<usize>().ok().filter(|&i| i < self.order)
    }

    pub fn format_set(&self, set: &ElementSet) -> String {
        let names: Vec<String> = set.iter().map(|x| self.label(x)).collect();
        format!("{{{}}}", names.join(", "))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn first_non_associative(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| (i + 1..n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn is_band(&self) -> bool {
        (0..self.order).all(|x| self.mul(x, x) == x)
    }

    pub fn is_semilattice(&self) -> bool {
        self.is_band() && self.is_commutative()
    }

    pub fn is_subsemigroup(&self, set: &ElementSet) -> bool {
        set.iter()
            .all(|x| set.iter().all(|y| set.contains(self.mul(x, y))))
    }

    /// The zero element, if any (`xz = zx = z` for all `x`).
    pub fn zero(&self) -> Option<usize> {
        (0..self.order).find(|&z| (0..self.order).all(|x| self.mul(x, z) == z && self.mul(z, x) == z))
    }

    pub fn identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.mul(x, e) == x && self.mul(e, x) == x))
    }

    /// Restricts the operation to a nonempty subsemigroup, renumbering its
    /// members in ascending order.
    pub fn restrict(&self, set: &ElementSet) -> Result<Restriction> {
        if set.is_empty() {
            return Err(Error::EmptySemigroup);
        }
        if !self.is_subsemigroup(set) {
            return Err(Error::PreconditionNotMet(
                "set is not closed under the operation".into(),
            ));
        }
        let embedding = set.to_vec();
        let mut local = vec![usize::MAX; self.order];
        for (i, &x) in embedding.iter().enumerate() {
            local[x] = i;
        }
        let m = embedding.len();
        let mut table = Vec::with_capacity(m * m);
        for &x in &embedding {
            for &y in &embedding {
                table.push(local[self.mul(x, y)]);
            }
        }
        let mut semigroup = Semigroup::from_table_unchecked(m, table);
        if let Some(labels) = &self.labels {
            semigroup.labels = Some(embedding.iter().map(|&x| labels[x].clone()).collect());
        }
        Ok(Restriction {
            semigroup,
            embedding,
            local,
        })
    }
}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semigroup")
            .field("order", &self.order)
            .field("table", &self.rows())
            .finish()
    }
}

/// A subsemigroup materialized as a semigroup in its own right.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub semigroup: Semigroup,
    /// `embedding[i]` is the parent element behind local element `i`.
    pub embedding: Vec<usize>,
    local: Vec<usize>,
}

impl Restriction {
    pub fn to_parent(&self, i: usize) -> usize {
        self.embedding[i]
    }

    pub fn from_parent(&self, x: usize) -> Option<usize> {
        self.local.get(x).copied().filter(|&i| i != usize::MAX)
    }

    pub fn lift(&self, set: &ElementSet, parent_order: usize) -> ElementSet {
        ElementSet::from_elements(parent_order, set.iter().map(|i| self.embedding[i]))
    }
}

/// `X¹`: the base semigroup with a fresh identity at index `base.order()`.
#[derive(Clone, Debug)]
pub struct AdjoinedSemigroup {
    pub base: Semigroup,
    pub result: Semigroup,
}

impl AdjoinedSemigroup {
    pub fn identity(&self) -> usize {
        self.base.order()
    }
}

/// Adjoins a new identity, even when the base already has one.
pub fn adjoin_identity(s: &Semigroup) -> AdjoinedSemigroup {
    let n = s.order();
    let one = n;
    let m = n + 1;
    let mut table = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            table.push(if i == one {
                j
            } else if j == one {
                i
            } else {
                s.mul(i, j)
            });
        }
    }
    let mut result = Semigroup::from_table_unchecked(m, table);
    if let Some(labels) = s.labels() {
        let mut l = labels.to_vec();
        l.push("1".into());
        result.labels = Some(l);
    }
    AdjoinedSemigroup {
        base: s.clone(),
        result,
    }
}

/// `AB = {ab : a ∈ A, b ∈ B}`.
pub fn product_sets(s: &Semigroup, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(s.order());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(s.mul(x, y));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Monogenic {
    pub set: ElementSet,
    /// Least `i` such that `x^i = x^(i+p)` for some `p ≥ 1`.
    pub index: usize,
    pub period: usize,
}

/// The monogenic subsemigroup `{x, x², …}` with its index and period.
pub fn monogenic(s: &Semigroup, x: usize) -> Monogenic {
    let mut exponent_of: HashMap<usize, usize> = HashMap::new();
    let mut set = ElementSet::empty(s.order());
    let mut power = x;
    let mut k = 1;
    loop {
        if let Some(&first) = exponent_of.get(&power) {
            return Monogenic {
                set,
                index: first,
                period: k - first,
            };
        }
        exponent_of.insert(power, k);
        set.insert(power);
        power = s.mul(power, x);
        k += 1;
    }
}

/// `E(X)`.
pub fn idempotents(s: &Semigroup) -> ElementSet {
    ElementSet::from_elements(s.order(), s.elements().filter(|&x| s.mul(x, x) == x))
}

/// `xX¹ = {x} ∪ xX`.
pub fn principal_right_ideal(s: &Semigroup, x: usize) -> ElementSet {
    let mut out = ElementSet::from_elements(s.order(), s.row(x).iter().copied());
    out.insert(x);
    out
}

/// `X¹x = {x} ∪ Xx`.
pub fn principal_left_ideal(s: &Semigroup, x: usize) -> ElementSet {
    let mut out = ElementSet::from_elements(s.order(), s.elements().map(|a| s.mul(a, x)));
    out.insert(x);
    out
}

/// `X¹xX¹ = {x} ∪ xX ∪ Xx ∪ XxX`.
pub fn principal_two_sided_ideal(s: &Semigroup, x: usize) -> ElementSet {
    let mut out = principal_left_ideal(s, x);
    for a in principal_left_ideal(s, x).iter() {
        for &ab in s.row(a) {
            out.insert(ab);
        }
    }
    out
}

/// `XxX` (no identity adjoined).
pub fn strict_two_sided_ideal(s: &Semigroup, x: usize) -> ElementSet {
    let mut out = ElementSet::empty(s.order());
    for a in s.elements() {
        let ax = s.mul(a, x);
        for &axb in s.row(ax) {
            out.insert(axb);
        }
    }
    out
}

/// The H-class of `a`, computed from equality of principal one-sided ideals over `X¹`.
pub fn h_class(s: &Semigroup, a: usize) -> ElementSet {
    let right_a = principal_right_ideal(s, a);
    let left_a = principal_left_ideal(s, a);
    ElementSet::from_elements(
        s.order(),
        s.elements().filter(|&x| {
            principal_right_ideal(s, x) == right_a && principal_left_ideal(s, x) == left_a
        }),
    )
}

/// `H_e` for an idempotent `e`.
///
/// Panics if the computed H-class fails the group axioms, which would mean
/// the H-class computation itself is broken.
pub fn maximal_subgroup(s: &Semigroup, e: usize) -> Result<ElementSet> {
    if e >= s.order() {
        return Err(Error::ElementOutOfRange(e));
    }
    if s.mul(e, e) != e {
        return Err(Error::NotIdempotent(e));
    }
    let h = h_class(s, e);
    assert!(h.contains(e), "H_e must contain e");
    assert!(s.is_subsemigroup(&h), "H_e is not closed");
    for g in h.iter() {
        assert!(
            s.mul(e, g) == g && s.mul(g, e) == g,
            "e is not an identity of H_e"
        );
        assert!(
            h.iter().any(|k| s.mul(g, k) == e && s.mul(k, g) == e),
            "element {g} of H_e has no inverse"
        );
    }
    Ok(h)
}
