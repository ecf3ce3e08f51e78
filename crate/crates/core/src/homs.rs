//! Homomorphisms into the two-element semilattice `{0,1}` and their
//! extension along a surjection onto a semilattice.
//!
//! Given a surjective homomorphism `π: X → Y` onto a semilattice, a
//! nonempty subsemilattice `T ⊆ Y`, and a homomorphism `f: π⁻¹[T] → {0,1}`,
//! the map
//!
//! ```text
//! F(x) = 1  iff  ∃ z ∈ π⁻¹[T] with π(xz) ∈ T and f(xz) = 1
//! ```
//!
//! is a homomorphism on all of `X` that restricts to `f`.

use crate::error::{Error, Result};
use crate::quasiorder::{least_semilattice_congruence, quotient_semilattice};
use crate::semigroup::Semigroup;
use crate::set::ElementSet;

/// A `{0,1}`-valued homomorphism on a subsemigroup of some semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoValuedHom {
    domain: ElementSet,
    /// Indexed by parent element; `None` outside the domain.
    assignment: Vec<Option<bool>>,
}

impl TwoValuedHom {
    /// Checks closure of the domain and multiplicativity of `value`.
    pub fn new(s: &Semigroup, domain: ElementSet, value: impl Fn(usize) -> bool) -> Result<Self> {
        if !s.is_subsemigroup(&domain) {
            return Err(Error::PreconditionNotMet("hom domain is not a subsemigroup".into()));
        }
        let mut assignment = vec![None; s.order()];
        for x in domain.iter() {
            assignment[x] = Some(value(x));
        }
        let h = TwoValuedHom { domain, assignment };
        h.ensure_homomorphism(s)?;
        Ok(h)
    }

    pub fn domain(&self) -> &ElementSet {
        &self.domain
    }

    pub fn value(&self, x: usize) -> Option<bool> {
        self.assignment.get(x).copied().flatten()
    }

    /// `{x : h(x) = 1}`.
    pub fn ones(&self) -> ElementSet {
        ElementSet::from_elements(
            self.assignment.len(),
            self.domain.iter().filter(|&x| self.assignment[x] == Some(true)),
        )
    }

    pub fn is_constant(&self) -> bool {
        let ones = self.ones().len();
        ones == 0 || ones == self.domain.len()
    }

    pub fn ensure_homomorphism(&self, s: &Semigroup) -> Result<()> {
        for u in self.domain.iter() {
            for v in self.domain.iter() {
                let uv = s.mul(u, v);
                let lhs = self.value(uv);
                let rhs = Some(self.value(u) == Some(true) && self.value(v) == Some(true));
                if lhs != rhs {
                    return Err(Error::NotAHomomorphism { u, v });
                }
            }
        }
        Ok(())
    }

    /// Agreement with `other` on `other`'s domain.
    pub fn extends(&self, other: &TwoValuedHom) -> bool {
        other.domain.iter().all(|x| self.value(x) == other.value(x))
    }
}

/// `χ_A` on all of `s`.
pub fn hom_from_coideal(s: &Semigroup, a: &ElementSet) -> Result<TwoValuedHom> {
    if !crate::ideals::is_prime_coideal(s, a) {
        return Err(Error::NotAPrimeCoideal);
    }
    TwoValuedHom::new(s, ElementSet::full(s.order()), |x| a.contains(x))
}

/// A surjective homomorphism from a semigroup onto a semilattice.
#[derive(Clone, Debug)]
pub struct SurjectionOntoSemilattice {
    source: Semigroup,
    target: Semigroup,
    map: Vec<usize>,
}

impl SurjectionOntoSemilattice {
    pub fn new(source: Semigroup, target: Semigroup, map: Vec<usize>) -> Result<Self> {
        if !target.is_semilattice() {
            return Err(Error::NotASurjection("target is not a semilattice".into()));
        }
        if map.len() != source.order() || map.iter().any(|&y| y >= target.order()) {
            return Err(Error::NotASurjection("map has the wrong shape".into()));
        }
        let mut hit = ElementSet::empty(target.order());
        for &y in &map {
            hit.insert(y);
        }
        if !hit.is_full() {
            return Err(Error::NotASurjection("map is not onto".into()));
        }
        for u in source.elements() {
            for v in source.elements() {
                if map[source.mul(u, v)] != target.mul(map[u], map[v]) {
                    return Err(Error::NotASurjection(format!("not multiplicative at ({u},{v})")));
                }
            }
        }
        Ok(SurjectionOntoSemilattice { source, target, map })
    }

    /// The identity map of a semilattice.
    pub fn identity(l: &Semigroup) -> Result<Self> {
        Self::new(l.clone(), l.clone(), l.elements().collect())
    }

    /// The projection onto the quotient by the least semilattice congruence.
    pub fn onto_semilattice_quotient(s: &Semigroup) -> Self {
        let q = quotient_semilattice(s, &least_semilattice_congruence(s))
            .expect("the two-class partition is a semilattice congruence");
        Self::new(s.clone(), q.quotient, q.projection).expect("quotient projection is a surjection")
    }

    pub fn source(&self) -> &Semigroup {
        &self.source
    }

    pub fn target(&self) -> &Semigroup {
        &self.target
    }

    pub fn image(&self, x: usize) -> usize {
        self.map[x]
    }
}

/// `π⁻¹[T]` for a nonempty subsemilattice `T` of the target.
pub fn preimage_of_subsemilattice(pi: &SurjectionOntoSemilattice, t: &ElementSet) -> Result<ElementSet> {
    if t.is_empty() || t.order() != pi.target.order() || !pi.target.is_subsemigroup(t) {
        return Err(Error::NotASubsemilattice);
    }
    Ok(ElementSet::from_elements(
        pi.source.order(),
        pi.source.elements().filter(|&x| t.contains(pi.map[x])),
    ))
}

/// Extends `f` from `π⁻¹[T]` to all of the source.
///
/// Panics if the extension fails to be a homomorphism extending `f`; the
/// construction guarantees both.
pub fn extend_hom(pi: &SurjectionOntoSemilattice, t: &ElementSet, f: &TwoValuedHom) -> Result<TwoValuedHom> {
    let s = &pi.source;
    let preimage = preimage_of_subsemilattice(pi, t)?;
    if f.domain() != &preimage {
        return Err(Error::DomainMismatch);
    }
    f.ensure_homomorphism(s)?;
    let extended = TwoValuedHom::new(s, ElementSet::full(s.order()), |x| {
        preimage.iter().any(|z| {
            let xz = s.mul(x, z);
            t.contains(pi.map[xz]) && f.value(xz) == Some(true)
        })
    })
    .expect("the extension is a homomorphism");
    assert!(extended.extends(f), "the extension does not restrict to f");
    Ok(extended)
}
