//! Law checks shared by the property tests and the acceptance suite. Each
//! returns a list of human-readable violations; empty means the law holds.

#![allow(dead_code)]

use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use twoclass::homs::{extend_hom, preimage_of_subsemilattice, SurjectionOntoSemilattice, TwoValuedHom};
use twoclass::ideals::enumerate_prime_coideals;
use twoclass::predicates::{
    check_duo_upclass, check_unipotent_structure, check_viable_upclass, is_archimedean, is_duo, is_two_trivial,
    is_unipotent, is_viable,
};
use twoclass::quasiorder::{binary_quasiorder, least_semilattice_congruence, quotient_semilattice, up_class};
use twoclass::relation::BinaryRelation;
use twoclass::semigroup::idempotents;
use twoclass::{catalog, ElementSet, Semigroup};

/// The four clauses on the quasiorder matrix.
pub fn quasi2_violations(s: &Semigroup) -> Vec<String> {
    let q = binary_quasiorder(s);
    quasi2_violations_of(s, &q)
}

pub fn quasi2_violations_of(s: &Semigroup, q: &BinaryRelation) -> Vec<String> {
    let mut v = Vec::new();
    for x in s.elements() {
        for y in s.elements() {
            if q.get(x, y) {
                for a in s.elements() {
                    if !q.get(s.mul(a, x), s.mul(a, y)) || !q.get(s.mul(x, a), s.mul(y, a)) {
                        v.push(format!("(1) x={x} y={y} a={a}"));
                    }
                }
            }
            let (xy, yx) = (s.mul(x, y), s.mul(y, x));
            if !q.get(xy, yx) || !q.get(yx, xy) {
                v.push(format!("(2) x={x} y={y}"));
            }
            if !q.get(xy, x) || !q.get(xy, y) {
                v.push(format!("(4) x={x} y={y}"));
            }
        }
        let xx = s.mul(x, x);
        if !q.get(x, xx) || !q.get(xx, x) {
            v.push(format!("(3) x={x}"));
        }
    }
    v
}

/// Every ⇕-class is a `2`-trivial subsemigroup; the quotient is a
/// semilattice with discrete ⇕-partition.
pub fn tamura_violations(s: &Semigroup) -> Vec<String> {
    let mut v = Vec::new();
    let p = least_semilattice_congruence(s);
    for class in p.classes() {
        match s.restrict(class) {
            Ok(r) if is_two_trivial(&r.semigroup) => {}
            Ok(_) => v.push(format!("class {class} is not two-trivial")),
            Err(e) => v.push(format!("class {class} is not a subsemigroup: {e}")),
        }
    }
    match quotient_semilattice(s, &p) {
        Ok(q) => {
            if !least_semilattice_congruence(&q.quotient).is_discrete() {
                v.push("quotient has a nondiscrete two-class partition".into());
            }
        }
        Err(e) => v.push(format!("quotient: {e}")),
    }
    v
}

/// Runs the extension for one `(T, f)` and checks the result independently.
pub fn extension_case(
    s: &Semigroup,
    pi: &SurjectionOntoSemilattice,
    t: &ElementSet,
    ones: &ElementSet,
) -> Option<String> {
    let pre = match preimage_of_subsemilattice(pi, t) {
        Ok(p) => p,
        Err(e) => return Some(format!("T={t}: {e}")),
    };
    let f = match TwoValuedHom::new(s, pre, |x| ones.contains(x)) {
        Ok(f) => f,
        Err(e) => return Some(format!("T={t} f={ones}: {e}")),
    };
    let result = catch_unwind(AssertUnwindSafe(|| extend_hom(pi, t, &f)));
    match result {
        Ok(Ok(big)) => {
            if !big.domain().is_full() {
                Some(format!("T={t} f={ones}: extension is not total"))
            } else if big.ensure_homomorphism(s).is_err() {
                Some(format!("T={t} f={ones}: extension is not a homomorphism"))
            } else if !big.extends(&f) {
                Some(format!("T={t} f={ones}: extension does not restrict to f"))
            } else {
                None
            }
        }
        Ok(Err(e)) => Some(format!("T={t} f={ones}: {e}")),
        Err(_) => Some(format!("T={t} f={ones}: panicked")),
    }
}

/// The `{0,1}` homomorphisms on a subsemigroup, as their sets of ones,
/// from the prime coideals of the restriction.
pub fn homs_on(s: &Semigroup, domain: &ElementSet) -> Vec<ElementSet> {
    let r = s.restrict(domain).expect("preimage is a subsemigroup");
    enumerate_prime_coideals(&r.semigroup, 24)
        .expect("preimage within bound")
        .iter()
        .map(|a| r.lift(a, s.order()))
        .collect()
}

/// Every nonempty subsemilattice `T` of the quotient and every hom on
/// `π⁻¹[T]`. Returns the case count and the violations; semigroups with a
/// one-element quotient contribute no cases.
pub fn extension_exhaustive(s: &Semigroup) -> (usize, Vec<String>) {
    let pi = SurjectionOntoSemilattice::onto_semilattice_quotient(s);
    let m = pi.target().order();
    if m < 2 {
        return (0, Vec::new());
    }
    let mut cases = 0;
    let mut v = Vec::new();
    for mask in 1..(1u64 << m) {
        let t = ElementSet::from_mask(m, mask);
        if !pi.target().is_subsemigroup(&t) {
            continue;
        }
        let pre = preimage_of_subsemilattice(&pi, &t).expect("subsemilattice");
        for ones in homs_on(s, &pre) {
            cases += 1;
            v.extend(extension_case(s, &pi, &t, &ones));
        }
    }
    (cases, v)
}

/// One random `(T, f)` on `s`, or `None` when the quotient is trivial.
pub fn extension_random(s: &Semigroup, rng: &mut ChaCha8Rng) -> Option<Option<String>> {
    let pi = SurjectionOntoSemilattice::onto_semilattice_quotient(s);
    let target = pi.target();
    let m = target.order();
    if m < 2 {
        return None;
    }
    // close a random nonempty seed set under the product
    let mut t = ElementSet::empty(m);
    t.insert(rng.gen_range(0..m));
    for y in 0..m {
        if rng.gen_bool(0.4) {
            t.insert(y);
        }
    }
    loop {
        let mut grown = t.clone();
        for a in t.iter() {
            for b in t.iter() {
                grown.insert(target.mul(a, b));
            }
        }
        if grown == t {
            break;
        }
        t = grown;
    }
    let pre = preimage_of_subsemilattice(&pi, &t).ok()?;
    let homs = homs_on(s, &pre);
    let ones = homs.choose(rng).expect("constant homs exist");
    Some(extension_case(s, &pi, &t, ones))
}

/// On a duo semigroup: the upper-class description agrees for every
/// element, and Archimedean coincides with `2`-triviality.
pub fn duo_violations(s: &Semigroup) -> Vec<String> {
    let mut v = Vec::new();
    if !is_duo(s) {
        return vec!["not duo".into()];
    }
    for a in s.elements() {
        match check_duo_upclass(s, a) {
            Ok(c) if c.agrees => {}
            Ok(c) => v.push(format!("a={a}: candidate {} upclass {}", c.candidate, c.up_class)),
            Err(e) => v.push(format!("a={a}: {e}")),
        }
    }
    if is_archimedean(s) != is_two_trivial(s) {
        v.push(format!(
            "archimedean={} two_trivial={}",
            is_archimedean(s),
            is_two_trivial(s)
        ));
    }
    v
}

/// On a viable semigroup: the upper-class description agrees at every
/// idempotent and each ⇕-class holds at most one idempotent.
pub fn viable_violations(s: &Semigroup) -> Vec<String> {
    let mut v = Vec::new();
    if !is_viable(s) {
        return vec!["not viable".into()];
    }
    let es = idempotents(s);
    for e in es.iter() {
        match check_viable_upclass(s, e) {
            Ok(c) if c.agrees => {}
            Ok(c) => v.push(format!("e={e}: candidate {} upclass {}", c.candidate, c.up_class)),
            Err(err) => v.push(format!("e={e}: {err}")),
        }
    }
    for class in least_semilattice_congruence(s).classes() {
        if class.intersection(&es).len() > 1 {
            v.push(format!("class {class} has several idempotents"));
        }
    }
    v
}

/// On a unipotent `2`-trivial semigroup: `H_e` is an ideal and `e` central.
pub fn unipotent_violations(s: &Semigroup) -> Vec<String> {
    if !(is_unipotent(s) && is_two_trivial(s)) {
        return vec!["precondition".into()];
    }
    match check_unipotent_structure(s) {
        Ok(r) if r.h_e_is_ideal && r.e_central => Vec::new(),
        Ok(r) => vec![format!("{r:?}")],
        Err(e) => vec![e.to_string()],
    }
}

/// `⇑x`, the oracle intersection and the smallest prime coideal coincide.
pub fn coideal_agreement_violations(s: &Semigroup) -> Vec<String> {
    let mut v = Vec::new();
    for x in s.elements() {
        let fast = up_class(s, x).set;
        let oracle = twoclass::oracles::oracle_up_class(s, x, 24).expect("within bound");
        let smallest = twoclass::ideals::smallest_prime_coideal_containing(s, x, 24).expect("within bound");
        if fast != oracle || fast != smallest {
            v.push(format!("x={x}: fast {fast} oracle {oracle} smallest {smallest}"));
        }
    }
    v
}

/// Duo samples beyond the commutative ones: groups, groups times
/// commutative semigroups, groups with zero.
pub fn duo_samples() -> Vec<Semigroup> {
    let s3 = catalog::symmetric_group(3).unwrap();
    let mut out = vec![s3.clone(), catalog::group_with_zero(4).unwrap(), catalog::adjoin_zero(&s3)];
    let commutative: Vec<Semigroup> = catalog::random_corpus(7, 400, 2)
        .into_iter()
        .filter(Semigroup::is_commutative)
        .collect();
    for c in commutative.iter().take(12) {
        out.push(catalog::direct_product(&s3, c));
    }
    out.push(catalog::direct_product(&catalog::cyclic_group(3).unwrap(), &catalog::chain_semilattice(3).unwrap()));
    out.push(catalog::direct_product(&catalog::group_with_zero(2).unwrap(), &catalog::monogenic(2, 2).unwrap()));
    out
}
