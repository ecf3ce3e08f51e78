//! The binary quasiorder `x ≲ y` (every homomorphism to the two-element
//! semilattice sends `x` below `y`), computed without enumerating
//! homomorphisms.
//!
//! The upper class `⇑x` is the least fixed point of
//!
//! ```text
//! ⇑₀x = {x},    ⇑ₙ₊₁x = { y : X¹yX¹ ∩ (⇑ₙx)² ≠ ∅ }
//! ```
//!
//! which is the smallest prime coideal containing `x`. The induced
//! equivalence `⇕` is the least semilattice congruence, and the quotient by
//! it is a semilattice.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::relation::{BinaryRelation, Partition};
use crate::semigroup::{principal_two_sided_ideal, product_sets, Factor, Semigroup};
use crate::set::ElementSet;

/// Principal two-sided ideals `X¹yX¹` for every `y`, computed once and
/// shared by all upper-class iterations on the same semigroup.
#[derive(Clone, Debug)]
pub struct IdealCache {
    ideals: Vec<ElementSet>,
}

impl IdealCache {
    pub fn new(s: &Semigroup) -> Self {
        IdealCache {
            ideals: s.elements().map(|y| principal_two_sided_ideal(s, y)).collect(),
        }
    }

    pub fn ideal(&self, y: usize) -> &ElementSet {
        &self.ideals[y]
    }
}

/// `{y : X¹yX¹ ∩ A² ≠ ∅}`.
pub fn up_step(s: &Semigroup, a: &ElementSet) -> ElementSet {
    up_step_cached(s, &IdealCache::new(s), a)
}

fn up_step_cached(s: &Semigroup, cache: &IdealCache, a: &ElementSet) -> ElementSet {
    let squares = product_sets(s, a, a);
    ElementSet::from_elements(
        s.order(),
        s.elements().filter(|&y| cache.ideal(y).intersects(&squares)),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpClass {
    pub set: ElementSet,
    /// `⇑₀x ⊆ ⇑₁x ⊆ …` up to and including the first stage equal to its successor.
    pub stages: Vec<ElementSet>,
}

impl UpClass {
    /// The first stage containing `y`.
    pub fn entry_stage(&self, y: usize) -> Option<usize> {
        self.stages.iter().position(|st| st.contains(y))
    }

    /// `⇑ₙx`, which is the final set once `n` passes the last recorded stage.
    pub fn stage(&self, n: usize) -> &ElementSet {
        self.stages.get(n).unwrap_or(&self.set)
    }
}

/// `⇑x` together with its stage sequence.
pub fn up_class(s: &Semigroup, x: usize) -> UpClass {
    up_class_cached(s, &IdealCache::new(s), x)
}

pub fn up_class_cached(s: &Semigroup, cache: &IdealCache, x: usize) -> UpClass {
    let mut stages = vec![ElementSet::singleton(s.order(), x)];
    loop {
        let last = stages.last().expect("nonempty");
        let next = up_step_cached(s, cache, last);
        debug_assert!(last.is_subset(&next));
        if &next == last {
            break;
        }
        stages.push(next);
    }
    let set = stages.last().expect("nonempty").clone();
    debug_assert!(crate::ideals::is_prime_coideal(s, &set) && set.contains(x));
    UpClass { set, stages }
}

/// How an element entered the upper class: `a·y·b = u·v` with `u`, `v`
/// in the previous stage.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sandwich {
    pub a: Factor,
    pub b: Factor,
    pub u: usize,
    pub v: usize,
}

/// An upper class with, for each member other than `x`, the first
/// [`Sandwich`] found in scan order (ascending `a`, `b`, `u`, `v`, with the
/// adjoined identity before every element).
#[derive(Clone, Debug)]
pub struct UpClassTrace {
    pub class: UpClass,
    pub entry: Vec<Option<usize>>,
    pub via: Vec<Option<Sandwich>>,
}

pub fn up_class_traced(s: &Semigroup, x: usize) -> UpClassTrace {
    let class = up_class(s, x);
    let n = s.order();
    let mut entry = vec![None; n];
    let mut via = vec![None; n];
    entry[x] = Some(0);
    for k in 1..class.stages.len() {
        let prev = &class.stages[k - 1];
        // first factorization of each product of the previous stage
        let mut factor_of: Vec<Option<(usize, usize)>> = vec![None; n];
        for u in prev.iter() {
            for v in prev.iter() {
                let p = s.mul(u, v);
                if factor_of[p].is_none() {
                    factor_of[p] = Some((u, v));
                }
            }
        }
        for y in class.stages[k].difference(prev).iter() {
            entry[y] = Some(k);
            via[y] = Factor::all(n)
                .flat_map(|a| Factor::all(n).map(move |b| (a, b)))
                .find_map(|(a, b)| {
                    factor_of[s.sandwich(a, y, b)].map(|(u, v)| Sandwich { a, b, u, v })
                });
            debug_assert!(via[y].is_some());
        }
    }
    UpClassTrace { class, entry, via }
}

/// `x ≲ y ⇔ y ∈ ⇑x`, one upper class per row.
pub fn binary_quasiorder(s: &Semigroup) -> BinaryRelation {
    binary_quasiorder_with(s, Exec::Sequential)
}

pub fn binary_quasiorder_with(s: &Semigroup, exec: Exec) -> BinaryRelation {
    let cache = IdealCache::new(s);
    let rows = exec.map_range(0..s.order(), |x| up_class_cached(s, &cache, x).set);
    BinaryRelation::from_rows(rows)
}

/// `⇓x = {y : y ≲ x}`.
pub fn down_class(s: &Semigroup, x: usize) -> ElementSet {
    let out = binary_quasiorder(s).column(x);
    debug_assert!(s.is_subsemigroup(&out));
    out
}

/// `⇕x = ⇑x ∩ ⇓x`.
pub fn two_class(s: &Semigroup, x: usize) -> ElementSet {
    let q = binary_quasiorder(s);
    q.row(x).intersection(&q.column(x))
}

/// The partition of `s` into `⇕`-classes.
pub fn two_class_partition(q: &BinaryRelation) -> Partition {
    let n = q.order();
    let labels: Vec<ElementSet> = (0..n).map(|x| q.row(x).intersection(&q.column(x))).collect();
    Partition::from_labels(&labels)
}

/// The least semilattice congruence, realized as the `⇕` partition.
pub fn least_semilattice_congruence(s: &Semigroup) -> Partition {
    least_semilattice_congruence_with(s, Exec::Sequential)
}

pub fn least_semilattice_congruence_with(s: &Semigroup, exec: Exec) -> Partition {
    let p = two_class_partition(&binary_quasiorder_with(s, exec));
    debug_assert!(p.is_congruence(s));
    debug_assert!(quotient(s, &p).map(|q| q.quotient.is_semilattice()).unwrap_or(false));
    p
}

/// A quotient semigroup `X/≈` with its projection. Class `i` of the
/// partition is quotient element `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub quotient: Semigroup,
    pub projection: Vec<usize>,
}

pub fn quotient(s: &Semigroup, p: &Partition) -> Result<Quotient> {
    if p.order() != s.order() {
        return Err(Error::PreconditionNotMet("partition order differs from semigroup order".into()));
    }
    p.ensure_congruence(s)?;
    let m = p.num_classes();
    let reps: Vec<usize> = p.classes().iter().map(|c| c.first().expect("nonempty class")).collect();
    let mut table = Vec::with_capacity(m * m);
    for &x in &reps {
        for &y in &reps {
            table.push(p.class_of(s.mul(x, y)));
        }
    }
    Ok(Quotient {
        quotient: Semigroup::from_table_unchecked(m, table),
        projection: p.class_ids().to_vec(),
    })
}

/// The quotient by a congruence the caller expects to be a semilattice congruence.
pub fn quotient_semilattice(s: &Semigroup, p: &Partition) -> Result<Quotient> {
    let q = quotient(s, p)?;
    if !q.quotient.is_semilattice() {
        return Err(Error::NotASemilattice);
    }
    Ok(q)
}

/// `x ≤ y ⇔ xy = x` on a semilattice.
pub fn natural_order(l: &Semigroup) -> Result<BinaryRelation> {
    if !l.is_semilattice() {
        return Err(Error::NotASemilattice);
    }
    let r = BinaryRelation::from_fn(l.order(), |x, y| l.mul(x, y) == x);
    debug_assert!(r.is_partial_order());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_elements(n, xs.iter().copied())
    }

    #[test]
    fn up_step_examples() {
        let c3 = catalog::chain_semilattice(3).unwrap();
        assert_eq!(up_step(&c3, &set(3, &[1])), set(3, &[1, 2]));
        let z2 = catalog::cyclic_group(2).unwrap();
        assert_eq!(up_step(&z2, &set(2, &[0])), set(2, &[0, 1]));
        let n2 = catalog::null_semigroup(2).unwrap();
        assert_eq!(up_step(&n2, &set(2, &[1])), set(2, &[0, 1]));
    }

    #[test]
    fn up_class_examples() {
        let c3 = catalog::chain_semilattice(3).unwrap();
        let u = up_class(&c3, 1);
        assert_eq!(u.set, set(3, &[1, 2]));
        assert_eq!(u.stages, vec![set(3, &[1]), set(3, &[1, 2])]);
        assert_eq!(up_class(&catalog::left_zero(2).unwrap(), 0).set, set(2, &[0, 1]));
        let gz = catalog::group_with_zero(2).unwrap();
        assert_eq!(up_class(&gz, 2).set, set(3, &[0, 1, 2]));
        assert_eq!(up_class(&gz, 0).set, set(3, &[0, 1]));
    }

    #[test]
    fn quasiorder_examples() {
        let two = catalog::chain_semilattice(2).unwrap();
        let q = binary_quasiorder(&two);
        assert!(q.get(0, 1) && !q.get(1, 0));
        let z2 = catalog::cyclic_group(2).unwrap();
        assert_eq!(binary_quasiorder(&z2).pairs().len(), 4);
        let c3 = catalog::chain_semilattice(3).unwrap();
        assert_eq!(binary_quasiorder(&c3), BinaryRelation::from_fn(3, |x, y| x <= y));
        assert_eq!(binary_quasiorder_with(&c3, Exec::Parallel), binary_quasiorder(&c3));
    }

    #[test]
    fn down_and_two_class_examples() {
        let c3 = catalog::chain_semilattice(3).unwrap();
        assert_eq!(down_class(&c3, 1), set(3, &[0, 1]));
        assert_eq!(two_class(&c3, 1), set(3, &[1]));
        let z2 = catalog::cyclic_group(2).unwrap();
        assert_eq!(down_class(&z2, 0), set(2, &[0, 1]));
        assert_eq!(two_class(&z2, 0), set(2, &[0, 1]));
        let two = catalog::chain_semilattice(2).unwrap();
        assert_eq!(down_class(&two, 1), set(2, &[0, 1]));
        let gz = catalog::group_with_zero(2).unwrap();
        assert_eq!(two_class(&gz, 0), set(3, &[0, 1]));
        assert_eq!(two_class(&gz, 2), set(3, &[2]));
    }

    #[test]
    fn congruence_examples() {
        let gz = catalog::group_with_zero(2).unwrap();
        assert_eq!(least_semilattice_congruence(&gz), Partition::from_labels(&[0, 0, 1]));
        let diamond = catalog::direct_product(
            &catalog::chain_semilattice(2).unwrap(),
            &catalog::chain_semilattice(2).unwrap(),
        );
        assert!(least_semilattice_congruence(&diamond).is_discrete());
        assert_eq!(least_semilattice_congruence(&catalog::left_zero(2).unwrap()), Partition::full(2));
    }

    #[test]
    fn quotient_examples() {
        let gz = catalog::group_with_zero(2).unwrap();
        let q = quotient_semilattice(&gz, &least_semilattice_congruence(&gz)).unwrap();
        // class 0 = {e, a} is the top, class 1 = {0} the bottom
        assert_eq!(q.quotient.rows(), vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(q.projection, vec![0, 0, 1]);

        let c3 = catalog::chain_semilattice(3).unwrap();
        assert_eq!(quotient(&c3, &Partition::full(3)).unwrap().quotient.order(), 1);
        let l2 = catalog::left_zero(2).unwrap();
        assert_eq!(quotient(&l2, &Partition::discrete(2)).unwrap().quotient, l2);
        assert!(matches!(
            quotient(&c3, &Partition::from_labels(&[0, 1, 0])),
            Err(Error::NotACongruence { .. })
        ));
        assert_eq!(quotient_semilattice(&l2, &Partition::discrete(2)), Err(Error::NotASemilattice));
    }

    #[test]
    fn natural_order_examples() {
        let two = catalog::chain_semilattice(2).unwrap();
        assert_eq!(natural_order(&two).unwrap().pairs(), vec![(0, 0), (0, 1), (1, 1)]);
        let c3 = catalog::chain_semilattice(3).unwrap();
        assert_eq!(natural_order(&c3).unwrap(), BinaryRelation::from_fn(3, |x, y| x <= y));
        let c2 = catalog::chain_semilattice(2).unwrap();
        let diamond = catalog::direct_product(&c2, &c2);
        // (i,j) has index 2i + j; product order is componentwise
        let expected = BinaryRelation::from_fn(4, |x, y| x / 2 <= y / 2 && x % 2 <= y % 2);
        assert_eq!(natural_order(&diamond).unwrap(), expected);
        assert_eq!(natural_order(&catalog::left_zero(2).unwrap()), Err(Error::NotASemilattice));
    }

    #[test]
    fn traced_entries() {
        let n2 = catalog::null_semigroup(2).unwrap();
        let t = up_class_traced(&n2, 1);
        assert_eq!(t.entry, vec![Some(1), Some(0)]);
        assert_eq!(
            t.via[0],
            Some(Sandwich {
                a: Factor::One,
                b: Factor::One,
                u: 1,
                v: 1
            })
        );
    }
}
