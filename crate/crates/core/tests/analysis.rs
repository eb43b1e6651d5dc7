use std::sync::OnceLock;

use matroid_census::analysis::{
    dukes_prefix_check, erectible_census, lemma2_values, logconvex_check, logconvex_threshold, plp_evaluate, plp_scan,
    slc_sufficient_check, slc_sufficient_threshold, thm1_values, threshold_report, LogConvexItem,
};
use matroid_census::bigcomb::BigCount;
use matroid_census::enumerate::{build_tables, enumerate_matroids, CountTable, EnumConfig};
use matroid_census::matroid::Matroid;

fn tables() -> &'static CountTable {
    static TABLE: OnceLock<CountTable> = OnceLock::new();
    TABLE.get_or_init(|| build_tables(7, &EnumConfig::default()).unwrap())
}

#[test]
fn closed_forms_equal_enumeration() {
    for n in 2..=7 {
        let mut r = thm1_values(n).unwrap();
        r.attach_table(tables());
        assert!(r.all_match(), "n = {n}: {r:?}");
        if n >= 5 {
            let mut r = lemma2_values(n).unwrap();
            r.attach_table(tables());
            assert!(r.all_match(), "n = {n}: {r:?}");
        }
    }
}

#[test]
fn prefix_chains_hold() {
    for n in 6..=7 {
        let report = dukes_prefix_check(tables(), n).unwrap();
        assert_eq!(report.chains.len(), 6);
        assert!(report.all_hold(), "{report}");
    }
    let six = dukes_prefix_check(tables(), 6).unwrap();
    let first: Vec<String> = six.chains[0].values.iter().map(|(_, v)| v.to_string()).collect();
    assert_eq!(first, ["1", "63", "813", "2053"]);
    assert!(dukes_prefix_check(&CountTable::new(), 6).is_err());
}

#[test]
fn closed_form_items_hold_from_threshold_to_200() {
    use LogConvexItem::*;
    for (item, from) in [(II, 9), (V, 11), (VI, 8)] {
        assert_eq!(logconvex_threshold(item, 5..=200).unwrap(), Some(from), "item ({item})");
        assert!(!logconvex_check(item, from - 1).unwrap());
    }
}

#[test]
fn sufficient_condition_is_monotone() {
    assert_eq!(slc_sufficient_threshold(false, 3..=200).unwrap(), Some(94));
    assert!(!slc_sufficient_check(93, false).unwrap());
    assert_eq!(slc_sufficient_threshold(true, 3..=200).unwrap(), Some(67));
}

#[test]
fn threshold_report_flags_item_one() {
    let rows = threshold_report(200).unwrap();
    let one = &rows[0];
    assert_eq!((one.claimed, one.empirical), (4, Some(11)));
    assert!(!one.agrees());
    assert!(rows[1..].iter().all(|r| r.agrees()), "{rows:?}");
}

#[test]
fn plp_over_all_simple_rank_four() {
    let cfg = EnumConfig::default();
    let expected = [(5, 16), (6, 337), (7, 18700)];
    for (n, count) in expected {
        let r = plp_scan(n, &cfg).unwrap();
        assert_eq!(r.scanned, count);
        assert!(r.passed(), "{r}");
        // Only the uniform matroid has every 3-set as a plane.
        assert_eq!((r.equality_cases, r.trivial_plane_cases), (1, 1));
    }
}

#[test]
fn plp_equality_is_the_uniform_matroid() {
    for m in enumerate_matroids(6, 4, 2, &EnumConfig::default()).unwrap() {
        let v = plp_evaluate(&m).unwrap();
        assert_eq!(v.equality, m == Matroid::uniform(4, 6));
    }
}

#[test]
fn erectible_census_is_bounded() {
    let cfg = EnumConfig::default();
    for (n, rank3, rank4) in [(4, 5u32, 1u32), (5, 31, 16), (6, 352, 337)] {
        let e = erectible_census(n, &cfg).unwrap();
        assert_eq!(e.simple_rank3, BigCount::from(rank3));
        assert_eq!(e.simple_rank4, BigCount::from(rank4));
        assert!(e.consistent(), "{e}");
    }
    assert!(erectible_census(7, &cfg).is_err());
}
