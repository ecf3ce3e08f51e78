//! Decision procedures for structural classes of finite semigroups, and
//! the checks tying upper classes to the duo, viable and unipotent cases.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals;
use crate::quasiorder::{up_class, up_class_cached, IdealCache};
use crate::relation::Partition;
use crate::semigroup::{
    h_class, idempotents, monogenic, principal_two_sided_ideal, product_sets, strict_two_sided_ideal,
    Semigroup,
};
use crate::set::ElementSet;

/// Default order bound for congruence enumeration (Bell(8) = 4140 partitions).
pub const DEFAULT_CONGRUENCE_BOUND: usize = 8;

/// Every homomorphism to `{0,1}` is constant: `⇑x = X` for every `x`.
pub fn is_two_trivial(s: &Semigroup) -> bool {
    let cache = IdealCache::new(s);
    s.elements().all(|x| up_class_cached(s, &cache, x).set.is_full())
}

/// The same property through prime ideals: every nonempty prime ideal is
/// all of `X`. Enumerates subsets, so it is bounded like the coideal oracle.
pub fn is_two_trivial_by_prime_ideals(s: &Semigroup, bound: usize) -> Result<bool> {
    let n = s.order();
    if n > bound || n > 63 {
        return Err(Error::OrderTooLargeForExhaustive {
            order: n,
            bound: bound.min(63),
        });
    }
    let full = (1u64 << n) - 1;
    Ok((1..full).all(|m| !ideals::is_prime_ideal(s, &ElementSet::from_mask(n, m))))
}

/// For all `x, y` some power of `x` lies in `XyX`.
pub fn is_archimedean(s: &Semigroup) -> bool {
    let powers: Vec<ElementSet> = s.elements().map(|x| monogenic(s, x).set).collect();
    s.elements().all(|y| {
        let xyx = strict_two_sided_ideal(s, y);
        powers.iter().all(|p| p.intersects(&xyx))
    })
}

/// `aX = Xa` for every `a`.
pub fn is_duo(s: &Semigroup) -> bool {
    s.elements().all(|a| {
        let right = ElementSet::from_elements(s.order(), s.elements().map(|x| s.mul(a, x)));
        let left = ElementSet::from_elements(s.order(), s.elements().map(|x| s.mul(x, a)));
        right == left
    })
}

/// Whenever `xy` and `yx` are both idempotent, `xy = yx`.
pub fn is_viable(s: &Semigroup) -> bool {
    let e = idempotents(s);
    s.elements().all(|x| {
        s.elements().all(|y| {
            let (xy, yx) = (s.mul(x, y), s.mul(y, x));
            !(e.contains(xy) && e.contains(yx)) || xy == yx
        })
    })
}

pub fn is_unipotent(s: &Semigroup) -> bool {
    idempotents(s).len() == 1
}

/// Every principal ideal `X¹xX¹` is all of `X`.
pub fn is_simple(s: &Semigroup) -> bool {
    s.elements().all(|x| principal_two_sided_ideal(s, x).is_full())
}

/// Has a zero `z`, `XX ≠ {z}`, and every principal ideal is `{z}` or `X`.
pub fn is_zero_simple(s: &Semigroup) -> bool {
    let Some(z) = s.zero() else { return false };
    let all = ElementSet::full(s.order());
    let zero = ElementSet::singleton(s.order(), z);
    if product_sets(s, &all, &all) == zero {
        return false;
    }
    s.elements().all(|x| {
        let j = principal_two_sided_ideal(s, x);
        j == zero || j.is_full()
    })
}

/// `Z(X)`.
pub fn center(s: &Semigroup) -> ElementSet {
    ElementSet::from_elements(
        s.order(),
        s.elements().filter(|&z| s.elements().all(|x| s.mul(x, z) == s.mul(z, x))),
    )
}

/// All congruences, in restricted-growth-string order of their class labels.
pub fn enumerate_congruences(s: &Semigroup, bound: usize) -> Result<Vec<Partition>> {
    if s.order() > bound {
        return Err(Error::OrderTooLargeForExhaustive {
            order: s.order(),
            bound,
        });
    }
    let n = s.order();
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let p = Partition::from_labels(&rgs);
        if p.is_congruence(s) {
            out.push(p);
        }
        if !next_rgs(&mut rgs) {
            break;
        }
    }
    Ok(out)
}

/// Advances a restricted growth string (`a[0] = 0`, `a[i] ≤ 1 + max(a[..i])`).
fn next_rgs(a: &mut [usize]) -> bool {
    for i in (1..a.len()).rev() {
        let max_prefix = a[..i].iter().copied().max().unwrap_or(0);
        if a[i] <= max_prefix {
            a[i] += 1;
            for v in &mut a[i + 1..] {
                *v = 0;
            }
            return true;
        }
    }
    false
}

/// Only `Δ` and `X×X` are congruences.
pub fn is_congruence_free(s: &Semigroup, bound: usize) -> Result<bool> {
    let count = enumerate_congruences(s, bound)?.len();
    Ok(if s.order() == 1 { count == 1 } else { count == 2 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnipotentReport {
    pub idempotent: usize,
    pub h_e_is_ideal: bool,
    pub e_central: bool,
}

/// For a unipotent semigroup with only constant maps to `{0,1}`: whether
/// `H_e` is an ideal and `e` is central.
pub fn check_unipotent_structure(s: &Semigroup) -> Result<UnipotentReport> {
    let e = idempotents(s);
    if e.len() != 1 {
        return Err(Error::PreconditionNotMet("semigroup is not unipotent".into()));
    }
    if !is_two_trivial(s) {
        return Err(Error::PreconditionNotMet("semigroup is not two-trivial".into()));
    }
    let idempotent = e.first().expect("one idempotent");
    let h = h_class(s, idempotent);
    Ok(UnipotentReport {
        idempotent,
        h_e_is_ideal: ideals::is_ideal(s, &h),
        e_central: center(s).contains(idempotent),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpclassComparison {
    pub candidate: ElementSet,
    pub up_class: ElementSet,
    pub agrees: bool,
}

/// On a viable semigroup, compares `{x : e ∈ X¹xX¹}` with `⇑e`.
pub fn check_viable_upclass(s: &Semigroup, e: usize) -> Result<UpclassComparison> {
    if e >= s.order() {
        return Err(Error::ElementOutOfRange(e));
    }
    if !is_viable(s) {
        return Err(Error::PreconditionNotMet("semigroup is not viable".into()));
    }
    if s.mul(e, e) != e {
        return Err(Error::PreconditionNotMet(format!("{e} is not an idempotent")));
    }
    let candidate = ElementSet::from_elements(
        s.order(),
        s.elements().filter(|&x| principal_two_sided_ideal(s, x).contains(e)),
    );
    Ok(compare(candidate, up_class(s, e).set))
}

/// On a duo semigroup, compares `{x : a^ℕ ∩ XxX ≠ ∅}` with `⇑a`.
pub fn check_duo_upclass(s: &Semigroup, a: usize) -> Result<UpclassComparison> {
    if a >= s.order() {
        return Err(Error::ElementOutOfRange(a));
    }
    if !is_duo(s) {
        return Err(Error::PreconditionNotMet("semigroup is not duo".into()));
    }
    let powers = monogenic(s, a).set;
    let candidate = ElementSet::from_elements(
        s.order(),
        s.elements().filter(|&x| strict_two_sided_ideal(s, x).intersects(&powers)),
    );
    Ok(compare(candidate, up_class(s, a).set))
}

fn compare(candidate: ElementSet, up_class: ElementSet) -> UpclassComparison {
    let agrees = candidate == up_class;
    UpclassComparison {
        candidate,
        up_class,
        agrees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_elements(n, xs.iter().copied())
    }

    fn z2() -> Semigroup {
        catalog::cyclic_group(2).unwrap()
    }
    fn l2() -> Semigroup {
        catalog::left_zero(2).unwrap()
    }
    fn n2() -> Semigroup {
        catalog::null_semigroup(2).unwrap()
    }
    fn two() -> Semigroup {
        catalog::chain_semilattice(2).unwrap()
    }
    fn c3() -> Semigroup {
        catalog::chain_semilattice(3).unwrap()
    }
    fn gz() -> Semigroup {
        catalog::group_with_zero(2).unwrap()
    }

    #[test]
    fn two_trivial_examples() {
        assert!(is_two_trivial(&z2()));
        assert!(is_two_trivial(&l2()));
        assert!(!is_two_trivial(&two()));
        for s in [z2(), l2(), two(), c3(), gz(), n2()] {
            assert_eq!(is_two_trivial(&s), is_two_trivial_by_prime_ideals(&s, 24).unwrap());
        }
    }

    #[test]
    fn archimedean_examples() {
        assert!(is_archimedean(&n2()));
        assert!(!is_archimedean(&c3()));
        assert!(is_archimedean(&z2()));
    }

    #[test]
    fn duo_examples() {
        assert!(is_duo(&c3()) && is_duo(&n2()) && is_duo(&gz()));
        assert!(!is_duo(&l2()));
        assert!(is_duo(&z2()));
        assert!(is_duo(&catalog::symmetric_group(3).unwrap()));
    }

    #[test]
    fn viable_examples() {
        assert!(is_viable(&c3()) && is_viable(&z2()));
        assert!(!is_viable(&l2()));
        assert!(is_viable(&gz()));
    }

    #[test]
    fn unipotent_examples() {
        assert!(is_unipotent(&z2()));
        assert!(is_unipotent(&n2()));
        assert!(!is_unipotent(&two()));
    }

    #[test]
    fn simple_examples() {
        assert!(is_simple(&z2()));
        assert!(is_simple(&l2()));
        assert!(!is_simple(&n2()));
    }

    #[test]
    fn zero_simple_examples() {
        assert!(is_zero_simple(&gz()));
        assert!(!is_zero_simple(&n2()));
        assert!(!is_zero_simple(&z2()));
        assert!(!is_zero_simple(&catalog::null_semigroup(1).unwrap()));
    }

    #[test]
    fn congruence_examples() {
        for s in [z2(), c3(), gz(), l2()] {
            let cs = enumerate_congruences(&s, 8).unwrap();
            assert!(cs.contains(&Partition::discrete(s.order())));
            assert!(cs.contains(&Partition::full(s.order())));
        }
        assert_eq!(enumerate_congruences(&z2(), 8).unwrap().len(), 2);
        let cs = enumerate_congruences(&c3(), 8).unwrap();
        assert_eq!(
            cs,
            vec![
                Partition::full(3),
                Partition::from_labels(&[0, 0, 1]),
                Partition::from_labels(&[0, 1, 1]),
                Partition::discrete(3),
            ]
        );
        assert!(matches!(
            enumerate_congruences(&catalog::left_zero(9).unwrap(), 8),
            Err(Error::OrderTooLargeForExhaustive { .. })
        ));
    }

    #[test]
    fn rgs_counts_are_bell_numbers() {
        for (n, bell) in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)] {
            let mut a = vec![0; n];
            let mut count = 1;
            while next_rgs(&mut a) {
                count += 1;
            }
            assert_eq!(count, bell);
        }
    }

    #[test]
    fn congruence_free_examples() {
        assert!(is_congruence_free(&z2(), 8).unwrap());
        assert!(is_congruence_free(&two(), 8).unwrap());
        assert!(!is_congruence_free(&c3(), 8).unwrap());
        assert!(is_congruence_free(&catalog::null_semigroup(1).unwrap(), 8).unwrap());
    }

    #[test]
    fn center_examples() {
        assert!(center(&c3()).is_full());
        assert!(center(&l2()).is_empty());
        assert!(center(&gz()).is_full());
    }

    #[test]
    fn unipotent_structure_examples() {
        let ok = |s: &Semigroup| {
            let r = check_unipotent_structure(s).unwrap();
            r.h_e_is_ideal && r.e_central
        };
        assert!(ok(&z2()));
        assert!(ok(&n2()));
        assert!(ok(&catalog::monogenic(2, 2).unwrap()));
        assert!(matches!(check_unipotent_structure(&two()), Err(Error::PreconditionNotMet(_))));
        assert!(matches!(check_unipotent_structure(&gz()), Err(Error::PreconditionNotMet(_))));
    }

    #[test]
    fn viable_upclass_examples() {
        let r = check_viable_upclass(&gz(), 0).unwrap();
        assert_eq!(r.candidate, set(3, &[0, 1]));
        assert!(r.agrees);
        let r = check_viable_upclass(&c3(), 1).unwrap();
        assert_eq!(r.candidate, set(3, &[1, 2]));
        assert!(r.agrees);
        let diamond = catalog::direct_product(&two(), &two());
        for e in 0..4 {
            assert!(check_viable_upclass(&diamond, e).unwrap().agrees);
        }
        assert!(check_viable_upclass(&l2(), 0).is_err());
        assert!(check_viable_upclass(&z2(), 1).is_err());
    }

    #[test]
    fn duo_upclass_examples() {
        let r = check_duo_upclass(&n2(), 1).unwrap();
        assert_eq!(r.candidate, set(2, &[0, 1]));
        assert!(r.agrees);
        let r = check_duo_upclass(&c3(), 1).unwrap();
        assert_eq!(r.candidate, set(3, &[1, 2]));
        assert!(r.agrees);
        let r = check_duo_upclass(&z2(), 0).unwrap();
        assert_eq!(r.candidate, set(2, &[0, 1]));
        assert!(r.agrees);
        assert!(check_duo_upclass(&l2(), 0).is_err());
    }
}
