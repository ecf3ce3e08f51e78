//! Ideals, prime ideals and prime coideals, and exhaustive enumeration of
//! prime coideals.
//!
//! A set `A` is a prime coideal exactly when its characteristic function is
//! a homomorphism to `{0,1}`, so enumerating prime coideals enumerates those
//! homomorphisms. `∅` and `X` always qualify.

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::semigroup::Semigroup;
use crate::set::ElementSet;

/// Default order bound for subset enumeration.
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 24;

/// `IX ∪ XI ⊆ I`.
pub fn is_ideal(s: &Semigroup, i: &ElementSet) -> bool {
    i.iter()
        .all(|x| s.elements().all(|a| i.contains(s.mul(x, a)) && i.contains(s.mul(a, x))))
}

/// An ideal whose complement is a subsemigroup.
pub fn is_prime_ideal(s: &Semigroup, i: &ElementSet) -> bool {
    is_ideal(s, i) && s.is_subsemigroup(&i.complement())
}

/// `uv ∈ A ⇔ (u ∈ A ∧ v ∈ A)` for all `u, v`.
pub fn is_prime_coideal(s: &Semigroup, a: &ElementSet) -> bool {
    s.elements().all(|u| {
        s.elements()
            .all(|v| a.contains(s.mul(u, v)) == (a.contains(u) && a.contains(v)))
    })
}

fn check_bound(s: &Semigroup, bound: usize) -> Result<()> {
    if s.order() > bound || s.order() > 63 {
        return Err(Error::OrderTooLargeForExhaustive {
            order: s.order(),
            bound: bound.min(63),
        });
    }
    Ok(())
}

fn mask_is_prime_coideal(s: &Semigroup, mask: u64) -> bool {
    let n = s.order();
    for u in 0..n {
        let in_u = mask >> u & 1 == 1;
        let row = s.row(u);
        for (v, &uv) in row.iter().enumerate() {
            let in_v = mask >> v & 1 == 1;
            if (mask >> uv & 1 == 1) != (in_u && in_v) {
                return false;
            }
        }
    }
    true
}

/// All prime coideals, in ascending bit-pattern order.
pub fn enumerate_prime_coideals(s: &Semigroup, bound: usize) -> Result<Vec<ElementSet>> {
    enumerate_prime_coideals_with(s, bound, Exec::Sequential)
}

pub fn enumerate_prime_coideals_with(s: &Semigroup, bound: usize, exec: Exec) -> Result<Vec<ElementSet>> {
    check_bound(s, bound)?;
    let n = s.order();
    let total = 1u64 << n;
    let masks = exec.flat_map_chunks(total, 1 << 12, |range| {
        range.filter(|&m| mask_is_prime_coideal(s, m)).collect()
    });
    Ok(masks.into_iter().map(|m| ElementSet::from_mask(n, m)).collect())
}

/// The intersection of all prime coideals containing `x`.
pub fn smallest_prime_coideal_containing(s: &Semigroup, x: usize, bound: usize) -> Result<ElementSet> {
    if x >= s.order() {
        return Err(Error::ElementOutOfRange(x));
    }
    let family = enumerate_prime_coideals(s, bound)?;
    Ok(family
        .iter()
        .filter(|a| a.contains(x))
        .fold(ElementSet::full(s.order()), |acc, a| acc.intersection(a)))
}
