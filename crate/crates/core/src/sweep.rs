//! Corpus sweeps comparing the fast algorithms against the brute-force
//! oracles.

use std::fmt;

use serde::Serialize;

use crate::catalog;
use crate::error::Result;
use crate::oracles;
use crate::par::Exec;
use crate::quasiorder::{binary_quasiorder, least_semilattice_congruence, up_class};
use crate::semigroup::Semigroup;

/// Which computation to compare against its oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleCheck {
    Upclass,
    Quasiorder,
    Congruence,
}

impl OracleCheck {
    pub const ALL: [OracleCheck; 3] = [OracleCheck::Upclass, OracleCheck::Quasiorder, OracleCheck::Congruence];
}

impl fmt::Display for OracleCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleCheck::Upclass => "upclass",
            OracleCheck::Quasiorder => "quasiorder",
            OracleCheck::Congruence => "congruence",
        })
    }
}

/// Oracle order bounds: subset enumeration and partition enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub subsets: usize,
    pub congruence: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            subsets: 20,
            congruence: crate::predicates::DEFAULT_CONGRUENCE_BOUND,
        }
    }
}

/// Compares one check on one semigroup. `Ok(None)` means agreement,
/// `Ok(Some(diff))` a human-readable description of the first difference.
pub fn compare(s: &Semigroup, check: OracleCheck, bounds: Bounds) -> Result<Option<String>> {
    match check {
        OracleCheck::Upclass => {
            for x in s.elements() {
                let fast = up_class(s, x).set;
                let slow = oracles::oracle_up_class(s, x, bounds.subsets)?;
                if fast != slow {
                    return Ok(Some(format!(
                        "upclass of {}: fast {} oracle {}",
                        s.label(x),
                        s.format_set(&fast),
                        s.format_set(&slow)
                    )));
                }
            }
            Ok(None)
        }
        OracleCheck::Quasiorder => {
            let fast = binary_quasiorder(s);
            let slow = oracles::oracle_quasiorder(s, bounds.subsets)?;
            for x in s.elements() {
                for y in s.elements() {
                    if fast.get(x, y) != slow.get(x, y) {
                        return Ok(Some(format!(
                            "pair ({}, {}): fast {} oracle {}",
                            s.label(x),
                            s.label(y),
                            fast.get(x, y),
                            slow.get(x, y)
                        )));
                    }
                }
            }
            Ok(None)
        }
        OracleCheck::Congruence => {
            let fast = least_semilattice_congruence(s);
            let slow = oracles::oracle_least_semilattice_congruence(s, bounds.congruence)?;
            if fast != slow {
                let show = |p: &crate::relation::Partition| {
                    p.classes().iter().map(|c| s.format_set(c)).collect::<Vec<_>>().join(" ")
                };
                return Ok(Some(format!("partition: fast {} oracle {}", show(&fast), show(&slow))));
            }
            Ok(None)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub member: String,
    pub check: OracleCheck,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    /// Number of (semigroup, check) comparisons run.
    pub compared: usize,
    /// Comparisons skipped because the semigroup exceeded an oracle bound.
    pub skipped: usize,
    pub disagreements: Vec<Disagreement>,
}

impl SweepReport {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Runs every check on every member. Members beyond an oracle bound are
/// counted as skipped for that check.
pub fn sweep(corpus: &[(String, Semigroup)], checks: &[OracleCheck], bounds: Bounds, exec: Exec) -> SweepReport {
    let per_member = exec.map(corpus, |(name, s)| {
        let mut local = SweepReport::default();
        for &check in checks {
            match compare(s, check, bounds) {
                Ok(None) => local.compared += 1,
                Ok(Some(detail)) => {
                    local.compared += 1;
                    local.disagreements.push(Disagreement {
                        member: name.clone(),
                        check,
                        detail,
                    });
                }
                Err(_) => local.skipped += 1,
            }
        }
        local
    });
    per_member.into_iter().fold(SweepReport::default(), |mut acc, r| {
        acc.compared += r.compared;
        acc.skipped += r.skipped;
        acc.disagreements.extend(r.disagreements);
        acc
    })
}

/// Every labeled semigroup of orders `1..=max_order`, named `n<order>#<k>`.
pub fn exhaustive_corpus(max_order: usize, exec: Exec) -> Result<Vec<(String, Semigroup)>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        let all = catalog::enumerate_all_semigroups_with(n, exec)?;
        out.extend(all.into_iter().enumerate().map(|(k, s)| (format!("n{n}#{k}"), s)));
    }
    Ok(out)
}

/// Catalog family members with order at most `max_order`, with their
/// constructor calls as names. Deterministic.
pub fn family_corpus(max_order: usize) -> Vec<(String, Semigroup)> {
    let mut out: Vec<(String, Semigroup)> = Vec::new();
    let mut push = |name: String, s: Result<Semigroup>| {
        if let Ok(s) = s {
            if s.order() <= max_order {
                out.push((name, s));
            }
        }
    };
    for n in 1..=max_order {
        push(format!("left_zero({n})"), catalog::left_zero(n));
        push(format!("right_zero({n})"), catalog::right_zero(n));
        push(format!("null_semigroup({n})"), catalog::null_semigroup(n));
        push(format!("cyclic_group({n})"), catalog::cyclic_group(n));
        push(format!("chain_semilattice({n})"), catalog::chain_semilattice(n));
        push(format!("group_with_zero({n})"), catalog::group_with_zero(n));
    }
    for p in 1..=max_order {
        for q in 1..=max_order / p {
            push(format!("rectangular_band({p},{q})"), catalog::rectangular_band(p, q));
        }
    }
    for index in 1..=max_order {
        for period in 1..=max_order + 1 - index {
            push(format!("monogenic({index},{period})"), catalog::monogenic(index, period));
        }
    }
    for k in 1..=3 {
        push(format!("full_transformation_monoid({k})"), catalog::full_transformation_monoid(k));
        push(format!("symmetric_group({k})"), catalog::symmetric_group(k));
    }
    let small = [
        ("chain_semilattice(2)", catalog::chain_semilattice(2)),
        ("cyclic_group(2)", catalog::cyclic_group(2)),
        ("left_zero(2)", catalog::left_zero(2)),
        ("null_semigroup(2)", catalog::null_semigroup(2)),
        ("group_with_zero(2)", catalog::group_with_zero(2)),
        ("monogenic(2,2)", catalog::monogenic(2, 2)),
        ("cyclic_group(3)", catalog::cyclic_group(3)),
    ];
    for (i, (a_name, a)) in small.iter().enumerate() {
        for (b_name, b) in &small[i..] {
            let (a, b) = (a.as_ref().expect("catalog"), b.as_ref().expect("catalog"));
            push(format!("direct_product({a_name},{b_name})"), Ok(catalog::direct_product(a, b)));
        }
        push(format!("adjoin_zero({a_name})"), Ok(catalog::adjoin_zero(a.as_ref().expect("catalog"))));
    }
    for seed in 0..16 {
        push(
            format!("random_transformation_subsemigroup(3,2,{seed})"),
            catalog::random_transformation_subsemigroup(3, 2, seed),
        );
    }
    out
}
