use num_bigint::BigUint;

use ict_core::groups::{enumerate_transversals, make_alt, make_dihedral, make_sym, Caps};
use ict_core::oracle::{
    census_left_loops, classify_by_conjugation, classify_by_table_iso, count_blocks, induced_table,
    left_right_agreement, render_dump, same_partition, subgroup_transversals, LoopTable,
};

fn u(v: u64) -> BigUint {
    BigUint::from(v)
}

#[test]
fn table_classes_of_small_pairs() {
    let caps = Caps::default();
    let a4 = make_alt(4, &caps).unwrap();
    let r = classify_by_table_iso(&a4, &caps).unwrap();
    assert_eq!((r.class_count.clone(), r.total.clone()), (u(7), u(27)));
    assert_eq!(r.class_sizes.iter().sum::<BigUint>(), u(27));
    let s4 = make_sym(4, &caps).unwrap();
    let r = classify_by_conjugation(&s4, &caps).unwrap();
    assert_eq!((r.class_count.clone(), r.total.clone()), (u(44), u(216)));
    assert_eq!(r.class_sizes.iter().sum::<BigUint>(), u(216));
}

#[test]
fn sym3_has_four_tables_in_three_classes() {
    let caps = Caps::default();
    let s3 = make_sym(3, &caps).unwrap();
    let tables: Vec<LoopTable> = enumerate_transversals(&s3, &caps)
        .unwrap()
        .map(|t| induced_table(&s3, &t))
        .collect();
    assert_eq!(tables.len(), 4);
    assert!(tables.iter().all(|t| t.check_invariants().is_ok()));
    assert_eq!(classify_by_conjugation(&s3, &caps).unwrap().class_count, u(3));
}

#[test]
fn census_is_in_bijection_with_sym_transversals_at_order_four() {
    let caps = Caps::default();
    let census = census_left_loops(4, &caps).unwrap();
    assert_eq!(census.total, u(216));
    let s4 = make_sym(4, &caps).unwrap();
    let mut from_pair: Vec<LoopTable> = enumerate_transversals(&s4, &caps)
        .unwrap()
        .map(|t| induced_table(&s4, &t))
        .collect();
    from_pair.sort();
    from_pair.dedup();
    assert_eq!(from_pair.len(), 216, "distinct transversals give distinct tables");
    assert_eq!(census.class_count, u(44));
}

#[test]
fn class_size_distribution_is_reported() {
    let caps = Caps::default();
    let r = census_left_loops(4, &caps).unwrap();
    let dist = r.size_distribution();
    let total: BigUint = dist.iter().map(|(s, k)| s * BigUint::from(*k)).sum();
    assert_eq!(total, u(216));
    assert_eq!(dist.iter().map(|(_, k)| k).sum::<usize>(), 44);
}

#[test]
fn subgroup_transversals_of_small_pairs() {
    let caps = Caps::default();
    let d5 = make_dihedral(5, &caps).unwrap();
    assert_eq!(subgroup_transversals(&d5, &caps).unwrap().len(), 1);
    let d6 = make_dihedral(6, &caps).unwrap();
    let subs = subgroup_transversals(&d6, &caps).unwrap();
    assert_eq!(subs.len(), 2);
    assert!(subs.iter().any(|t| t.member(2).order() == 6));
    let s4 = make_sym(4, &caps).unwrap();
    let regular = subgroup_transversals(&s4, &caps).unwrap();
    assert_eq!(regular.len(), 4);
}

#[test]
fn non_generating_dihedral_transversals_are_subgroups() {
    let caps = Caps::default();
    for n in 3..=8 {
        let pair = make_dihedral(n, &caps).unwrap();
        let non_gen: Vec<_> = enumerate_transversals(&pair, &caps)
            .unwrap()
            .filter(|t| !ict_core::groups::generates(&pair, t))
            .collect();
        let subs = subgroup_transversals(&pair, &caps).unwrap();
        assert_eq!(non_gen, subs, "n={n}");
        let classes = classify_by_conjugation(&pair, &caps).unwrap();
        let space = pair.space();
        let labels: Vec<u32> = subs
            .iter()
            .map(|t| classes.labels[space.index_of(t) as usize])
            .collect();
        let mut distinct = labels.clone();
        distinct.dedup();
        assert_eq!(distinct.len(), labels.len(), "n={n}");
    }
}

#[test]
fn left_right_on_sym4() {
    let caps = Caps::default();
    let s4 = make_sym(4, &caps).unwrap();
    let r = left_right_agreement(&s4, &caps).unwrap();
    assert!(r.agrees());
    assert_eq!(r.right_count, u(44));
}

#[test]
fn dump_has_one_block_per_class() {
    let caps = Caps::default();
    let d4 = make_dihedral(4, &caps).unwrap();
    let r = classify_by_table_iso(&d4, &caps).unwrap();
    let text = render_dump(&r);
    assert_eq!(count_blocks(&text), 6);
    assert!(text.starts_with("class 1\nsize "));
    let again = classify_by_conjugation(&d4, &caps).unwrap();
    assert!(same_partition(&r.labels, &again.labels));
}

#[test]
fn caps_are_named() {
    let caps = Caps {
        max_relabelings: 10,
        ..Caps::default()
    };
    let s5 = make_sym(5, &caps).unwrap();
    let err = classify_by_conjugation(&s5, &caps).unwrap_err();
    assert!(err.to_string().contains("max_relabelings"));
}
