use proptest::prelude::*;

use twoclass::quasiorder::up_class;
use twoclass::sweep::{exhaustive_corpus, family_corpus};
use twoclass::witness::{build_witness, verify_witness, WitnessTree};
use twoclass::{catalog, Error, Exec};

#[test]
fn complete_for_order_three() {
    for (name, s) in exhaustive_corpus(3, Exec::Sequential).unwrap() {
        for x in s.elements() {
            let up = up_class(&s, x);
            for y in s.elements() {
                match build_witness(&s, x, y) {
                    Ok(w) => {
                        assert!(up.set.contains(y), "{name}");
                        assert_eq!(Some(w.depth), up.entry_stage(y));
                        assert!(verify_witness(&s, &w).unwrap(), "{name} ({x},{y})");
                    }
                    Err(Error::NotAbove { .. }) => assert!(!up.set.contains(y), "{name}"),
                    Err(e) => panic!("{name}: {e}"),
                }
            }
        }
    }
}

#[test]
fn families_and_text_round_trip() {
    for (name, s) in family_corpus(10) {
        for x in s.elements() {
            for y in up_class(&s, x).set.iter() {
                let w = build_witness(&s, x, y).unwrap();
                assert!(verify_witness(&s, &w).unwrap(), "{name}");
                let text = w.to_text();
                let back = WitnessTree::parse(&text).unwrap();
                assert_eq!(back, w);
                assert_eq!(back.to_text(), text);
            }
        }
    }
}

#[test]
fn golden_null_semigroup() {
    let n2 = catalog::null_semigroup(2).unwrap();
    let w = build_witness(&n2, 1, 0).unwrap();
    assert_eq!(
        w.to_text(),
        "witness(depth=1, x=1, y=0)\n\
         node(s=, x=0, y=0, a=ONE, b=ONE)\n\
         node(s=0, x=1, y=1, a=ONE, b=ONE)\n\
         node(s=1, x=1, y=1, a=ONE, b=ONE)\n"
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_semigroups(seed in any::<u64>(), max in 2usize..=12) {
        let s = catalog::random_corpus(seed, 1, max).remove(0);
        for x in s.elements() {
            let up = up_class(&s, x);
            for y in s.elements() {
                let built = build_witness(&s, x, y);
                prop_assert_eq!(built.is_ok(), up.set.contains(y));
                if let Ok(w) = built {
                    prop_assert!(verify_witness(&s, &w).unwrap());
                    prop_assert!(w.depth < s.order().max(1) + 1);
                }
            }
        }
    }
}
