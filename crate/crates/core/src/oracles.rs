//! Brute-force reference implementations.
//!
//! Nothing here goes through the upper-class iteration, principal ideals,
//! subset products or the partition type: these routines read the Cayley
//! table directly and enumerate subsets and set partitions on their own.

use crate::error::{Error, Result};
use crate::relation::{BinaryRelation, Partition};
use crate::semigroup::Semigroup;
use crate::set::ElementSet;

/// Every subset `A` with `uv ∈ A ⇔ u ∈ A ∧ v ∈ A`, as bit masks, by testing
/// all `2^n` subsets.
fn prime_coideal_masks(s: &Semigroup, bound: usize) -> Result<Vec<u64>> {
    let n = s.order();
    if n > bound.min(63) {
        return Err(Error::OrderTooLargeForExhaustive { order: n, bound: bound.min(63) });
    }
    let mut out = Vec::new();
    for mask in 0..(1u64 << n) {
        let has = |e: usize| mask >> e & 1 == 1;
        if (0..n).all(|u| (0..n).all(|v| has(s.mul(u, v)) == (has(u) && has(v)))) {
            out.push(mask);
        }
    }
    Ok(out)
}

/// `⋂ {A prime coideal : x ∈ A}`.
pub fn oracle_up_class(s: &Semigroup, x: usize, bound: usize) -> Result<ElementSet> {
    if x >= s.order() {
        return Err(Error::ElementOutOfRange(x));
    }
    let masks = prime_coideal_masks(s, bound)?;
    let meet = masks.iter().filter(|&&m| m >> x & 1 == 1).fold(u64::MAX, |acc, &m| acc & m);
    Ok(ElementSet::from_mask(s.order(), meet))
}

/// `x ≲ y` iff every prime coideal containing `x` contains `y`.
pub fn oracle_quasiorder(s: &Semigroup, bound: usize) -> Result<BinaryRelation> {
    let masks = prime_coideal_masks(s, bound)?;
    Ok(BinaryRelation::from_fn(s.order(), |x, y| {
        masks.iter().all(|&m| m >> x & 1 == 0 || m >> y & 1 == 1)
    }))
}

/// Every set partition of `0..n`, each as a block label per element,
/// generated by inserting elements one at a time into an existing block or
/// a fresh one.
fn all_set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn place(k: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<usize>>) {
        if k == n {
            let mut label = vec![0; n];
            for (b, block) in blocks.iter().enumerate() {
                for &x in block {
                    label[x] = b;
                }
            }
            out.push(label);
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(k);
            place(k + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![k]);
        place(k + 1, n, blocks, out);
        blocks.pop();
    }
    place(0, n, &mut blocks, &mut out);
    out
}

/// Congruence with semilattice quotient: compatible with multiplication on
/// both sides, and every `xy ~ yx`, `xx ~ x`.
fn is_semilattice_congruence(s: &Semigroup, label: &[usize]) -> bool {
    let n = s.order();
    for x in 0..n {
        for y in 0..n {
            if label[x] == label[y] {
                for a in 0..n {
                    if label[s.mul(a, x)] != label[s.mul(a, y)] || label[s.mul(x, a)] != label[s.mul(y, a)] {
                        return false;
                    }
                }
            }
            if label[s.mul(x, y)] != label[s.mul(y, x)] {
                return false;
            }
        }
        if label[s.mul(x, x)] != label[x] {
            return false;
        }
    }
    true
}

/// The intersection of all semilattice congruences.
///
/// Panics if that intersection is not itself a semilattice congruence.
pub fn oracle_least_semilattice_congruence(s: &Semigroup, bound: usize) -> Result<Partition> {
    let n = s.order();
    if n > bound {
        return Err(Error::OrderTooLargeForExhaustive { order: n, bound });
    }
    // equivalence as an n×n matrix, starting from X×X
    let mut related = vec![true; n * n];
    for label in all_set_partitions(n) {
        if is_semilattice_congruence(s, &label) {
            for x in 0..n {
                for y in 0..n {
                    if label[x] != label[y] {
                        related[x * n + y] = false;
                    }
                }
            }
        }
    }
    let label: Vec<usize> = (0..n)
        .map(|x| (0..n).find(|&y| related[x * n + y]).expect("reflexive"))
        .collect();
    assert!(
        is_semilattice_congruence(s, &label),
        "the intersection of semilattice congruences is not one"
    );
    Ok(Partition::from_labels(&label))
}

/// Counts associative tables of order `n` by testing all `n^(n²)` of them.
pub fn naive_semigroup_count(n: usize) -> Result<usize> {
    if n == 0 || n > 3 {
        return Err(Error::ParameterOutOfRange("naive count supports 1 <= n <= 3".into()));
    }
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut table = vec![0usize; cells];
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        for cell in table.iter_mut() {
            *cell = c % n;
            c /= n;
        }
        let m = |x: usize, y: usize| table[x * n + y];
        let assoc = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| m(m(i, j), k) == m(i, m(j, k)))));
        if assoc {
            count += 1;
        }
    }
    Ok(count)
}
