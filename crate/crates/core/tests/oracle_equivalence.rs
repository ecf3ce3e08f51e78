use twoclass::sweep::{compare, family_corpus, sweep, Bounds, OracleCheck};
use twoclass::{catalog, Exec};

#[test]
fn coideal_oracles_on_families_up_to_twelve() {
    let corpus = family_corpus(12);
    let r = sweep(&corpus, &[OracleCheck::Upclass, OracleCheck::Quasiorder], Bounds::default(), Exec::Parallel);
    assert!(r.agrees(), "{:?}", r.disagreements);
    assert_eq!(r.skipped, 0);
    assert_eq!(r.compared, 2 * corpus.len());
}

#[test]
fn congruence_oracle_on_families_up_to_eight() {
    let corpus = family_corpus(8);
    let r = sweep(&corpus, &[OracleCheck::Congruence], Bounds::default(), Exec::Parallel);
    assert!(r.agrees(), "{:?}", r.disagreements);
    assert_eq!(r.skipped, 0);
}

#[test]
fn random_corpus_agrees() {
    let corpus: Vec<_> = catalog::random_corpus(11, 150, 8)
        .into_iter()
        .enumerate()
        .map(|(i, s)| (format!("random#{i}"), s))
        .collect();
    let seq = sweep(&corpus, &OracleCheck::ALL, Bounds::default(), Exec::Sequential);
    assert!(seq.agrees(), "{:?}", seq.disagreements);
    assert_eq!(seq, sweep(&corpus, &OracleCheck::ALL, Bounds::default(), Exec::Parallel));
}

#[test]
fn larger_orders_and_bounds() {
    let s = catalog::direct_product(
        &catalog::chain_semilattice(4).unwrap(),
        &catalog::group_with_zero(3).unwrap(),
    );
    assert_eq!(s.order(), 16);
    let bounds = Bounds::default();
    assert_eq!(compare(&s, OracleCheck::Quasiorder, bounds).unwrap(), None);
    assert_eq!(compare(&s, OracleCheck::Upclass, bounds).unwrap(), None);
    assert!(compare(&s, OracleCheck::Congruence, bounds).is_err());
    // order 27 is beyond the default subset bound
    let t3 = catalog::full_transformation_monoid(3).unwrap();
    assert!(compare(&t3, OracleCheck::Quasiorder, bounds).is_err());
}
