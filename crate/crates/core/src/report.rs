//! Analysis reports shared by the text and JSON outputs of the CLI.
//!
//! Elements are reported by display name (label or index). Quotient
//! elements are class numbers: class `i` is the `i`-th ⇕-class in order of
//! smallest member.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::predicates;
use crate::quasiorder::{binary_quasiorder, natural_order, quotient_semilattice, two_class_partition, up_class};
use crate::semigroup::{idempotents, Semigroup};
use crate::set::ElementSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateFlags {
    pub two_trivial: bool,
    pub archimedean: bool,
    pub duo: bool,
    pub viable: bool,
    pub unipotent: bool,
    pub simple: bool,
    pub zero_simple: bool,
    /// `None` when the order exceeds the congruence bound.
    pub congruence_free: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub order: usize,
    pub elements: Vec<String>,
    pub idempotents: Vec<String>,
    pub center: Vec<String>,
    pub predicates: PredicateFlags,
    pub two_classes: Vec<Vec<String>>,
    pub quotient_table: Vec<Vec<usize>>,
    /// Covering pairs `(lower, upper)` of the quotient's natural order.
    pub hasse: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpclassReport {
    pub x: String,
    /// `⇑₀x, ⇑₁x, …` up to the first stable stage.
    pub stages: Vec<Vec<String>>,
    pub upclass: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub class: Vec<String>,
    pub subsemigroup: bool,
    pub two_trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecomposeReport {
    pub classes: Vec<ClassVerdict>,
    pub quotient_table: Vec<Vec<usize>>,
    pub quotient_is_semilattice: bool,
    /// Whether the quotient's own ⇕-partition is discrete.
    pub quotient_reduced: bool,
    /// Every class is a `2`-trivial subsemigroup and the quotient is a
    /// reduced semilattice.
    pub tamura_holds: bool,
}

fn names(s: &Semigroup, set: &ElementSet) -> Vec<String> {
    set.iter().map(|x| s.label(x)).collect()
}

pub fn analyze(s: &Semigroup, congruence_bound: usize) -> Result<AnalyzeReport> {
    let partition = two_class_partition(&binary_quasiorder(s));
    let q = quotient_semilattice(s, &partition)?;
    let hasse = natural_order(&q.quotient)?.covering_pairs();
    let congruence_free = predicates::is_congruence_free(s, congruence_bound).ok();
    Ok(AnalyzeReport {
        order: s.order(),
        elements: s.elements().map(|x| s.label(x)).collect(),
        idempotents: names(s, &idempotents(s)),
        center: names(s, &predicates::center(s)),
        predicates: PredicateFlags {
            two_trivial: predicates::is_two_trivial(s),
            archimedean: predicates::is_archimedean(s),
            duo: predicates::is_duo(s),
            viable: predicates::is_viable(s),
            unipotent: predicates::is_unipotent(s),
            simple: predicates::is_simple(s),
            zero_simple: predicates::is_zero_simple(s),
            congruence_free,
        },
        two_classes: partition.classes().iter().map(|c| names(s, c)).collect(),
        quotient_table: q.quotient.rows(),
        hasse,
    })
}

pub fn upclass(s: &Semigroup, x: usize) -> UpclassReport {
    let u = up_class(s, x);
    UpclassReport {
        x: s.label(x),
        stages: u.stages.iter().map(|st| names(s, st)).collect(),
        upclass: names(s, &u.set),
    }
}

pub fn decompose(s: &Semigroup) -> Result<DecomposeReport> {
    let partition = two_class_partition(&binary_quasiorder(s));
    let q = crate::quasiorder::quotient(s, &partition)?;
    let classes: Vec<ClassVerdict> = partition
        .classes()
        .iter()
        .map(|c| {
            let restricted = s.restrict(c).ok();
            ClassVerdict {
                class: names(s, c),
                subsemigroup: restricted.is_some(),
                two_trivial: restricted.map(|r| predicates::is_two_trivial(&r.semigroup)).unwrap_or(false),
            }
        })
        .collect();
    let quotient_is_semilattice = q.quotient.is_semilattice();
    let quotient_reduced = two_class_partition(&binary_quasiorder(&q.quotient)).is_discrete();
    let tamura_holds = quotient_is_semilattice
        && quotient_reduced
        && classes.iter().all(|c| c.subsemigroup && c.two_trivial);
    Ok(DecomposeReport {
        classes,
        quotient_table: q.quotient.rows(),
        quotient_is_semilattice,
        quotient_reduced,
        tamura_holds,
    })
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn table_lines(out: &mut String, table: &[Vec<usize>]) {
    for row in table {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
}

impl AnalyzeReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let p = &self.predicates;
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "elements: {}", braces(&self.elements));
        let _ = writeln!(out, "idempotents: {}", braces(&self.idempotents));
        let _ = writeln!(out, "center: {}", braces(&self.center));
        let _ = writeln!(out, "two-trivial: {}", flag(p.two_trivial));
        let _ = writeln!(out, "archimedean: {}", flag(p.archimedean));
        let _ = writeln!(out, "duo: {}", flag(p.duo));
        let _ = writeln!(out, "viable: {}", flag(p.viable));
        let _ = writeln!(out, "unipotent: {}", flag(p.unipotent));
        let _ = writeln!(out, "simple: {}", flag(p.simple));
        let _ = writeln!(out, "zero-simple: {}", flag(p.zero_simple));
        let cf = p.congruence_free.map_or("beyond bound", flag);
        let _ = writeln!(out, "congruence-free: {cf}");
        let classes: Vec<String> = self.two_classes.iter().map(|c| braces(c)).collect();
        let _ = writeln!(out, "two-classes: {}", classes.join(" "));
        let _ = writeln!(out, "quotient table:");
        table_lines(&mut out, &self.quotient_table);
        let pairs: Vec<String> = self.hasse.iter().map(|(a, b)| format!("{a}<{b}")).collect();
        let _ = writeln!(out, "hasse: {}", pairs.join(" "));
        out
    }
}

impl UpclassReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (n, st) in self.stages.iter().enumerate() {
            let _ = writeln!(out, "stage {n}: {}", braces(st));
        }
        let _ = writeln!(out, "upclass({}): {}", self.x, braces(&self.upclass));
        out
    }
}

impl DecomposeReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.classes.iter().enumerate() {
            let _ = writeln!(
                out,
                "class {i}: {} subsemigroup={} two-trivial={}",
                braces(&c.class),
                flag(c.subsemigroup),
                flag(c.two_trivial)
            );
        }
        let _ = writeln!(out, "quotient table:");
        table_lines(&mut out, &self.quotient_table);
        let _ = writeln!(out, "quotient is semilattice: {}", flag(self.quotient_is_semilattice));
        let _ = writeln!(out, "quotient reduced: {}", flag(self.quotient_reduced));
        let _ = writeln!(out, "tamura: {}", if self.tamura_holds { "holds" } else { "FAILS" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn group_with_zero_report() {
        let gz = catalog::group_with_zero(2)
            .unwrap()
            .with_labels(vec!["e".into(), "a".into(), "0".into()])
            .unwrap();
        let r = analyze(&gz, 8).unwrap();
        assert_eq!(r.two_classes, vec![vec!["e".to_string(), "a".into()], vec!["0".into()]]);
        assert_eq!(r.quotient_table, vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(r.hasse, vec![(1, 0)]);
        assert_eq!(r.idempotents, vec!["e".to_string(), "0".into()]);
        assert!(!r.predicates.two_trivial);
        assert_eq!(r.predicates.congruence_free, Some(false));
        let text = r.to_text();
        assert!(text.contains("two-classes: {e, a} {0}"));
        assert!(text.contains("hasse: 1<0"));
    }

    #[test]
    fn congruence_free_beyond_bound() {
        let c = catalog::chain_semilattice(9).unwrap();
        assert_eq!(analyze(&c, 8).unwrap().predicates.congruence_free, None);
    }

    #[test]
    fn upclass_stages() {
        let n2 = catalog::null_semigroup(2).unwrap();
        let r = upclass(&n2, 1);
        assert_eq!(r.stages, vec![vec!["1".to_string()], vec!["0".into(), "1".into()]]);
        assert_eq!(r.to_text(), "stage 0: {1}\nstage 1: {0, 1}\nupclass(1): {0, 1}\n");
    }

    #[test]
    fn decomposition_holds() {
        for s in crate::sweep::family_corpus(6) {
            let d = decompose(&s.1).unwrap();
            assert!(d.tamura_holds, "{}", s.0);
        }
    }
}
