use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use matroid_census::bigcomb::BigCount;
use matroid_census::matroid::{validate_bases, SubsetWord};
use matroid_census::paving::{
    complete_to_paving, completion_partition, is_d_partition, u_set, u_size_recursive, PavingBound,
};

#[test]
fn recursion_matches_listing() {
    for n in [7, 15] {
        for r in 3..=n {
            let listed = u_set(r, n).unwrap().len();
            assert_eq!(
                u_size_recursive(r, n).unwrap(),
                BigCount::from(listed),
                "r = {r}, n = {n}"
            );
        }
    }
    for r in 3..=5 {
        assert_eq!(
            u_size_recursive(r, 31).unwrap(),
            BigCount::from(u_set(r, 31).unwrap().len())
        );
    }
}

#[test]
fn family_members_meet_in_at_most_r_minus_two() {
    for r in 3..=7 {
        let u = u_set(r, 15).unwrap();
        assert!(u.max_pairwise_intersection().is_none_or(|m| m <= r - 2), "r = {r}");
    }
}

#[test]
fn all_128_completions_are_distinct_paving_matroids() {
    let u = u_set(3, 7).unwrap();
    let lines = u.members();
    assert_eq!(lines.len(), 7);
    let mut seen = BTreeSet::new();
    for mask in 0u32..128 {
        let v: Vec<SubsetWord> = (0..7).filter(|i| mask >> i & 1 == 1).map(|i| lines[i]).collect();
        let m = complete_to_paving(&v, 3, 7).unwrap();
        assert!(validate_bases(7, m.bases()));
        let class = m.classify();
        assert!(class.paving && m.rank() == 3);
        assert!(is_d_partition(&completion_partition(&v, 3, 7).unwrap()));
        assert!(seen.insert(m));
    }
    assert_eq!(seen.len(), 128);
}

#[test]
fn completion_is_injective_on_random_pairs() {
    let u = u_set(4, 15).unwrap();
    let members = u.members();
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let pick = |rng: &mut ChaCha8Rng| -> Vec<SubsetWord> {
        members.iter().copied().filter(|_| rng.random_bool(0.5)).collect()
    };
    for i in 0..1000 {
        let a = pick(&mut rng);
        let b = pick(&mut rng);
        let (ma, mb) = (
            complete_to_paving(&a, 4, 15).unwrap(),
            complete_to_paving(&b, 4, 15).unwrap(),
        );
        assert_eq!(a == b, ma == mb);
        if i < 1 {
            assert!(validate_bases(15, ma.bases()));
            assert!(ma.classify().paving);
        }
    }
}

#[test]
fn bound_is_below_published_paving_counts() {
    // Rank-4 paving matroids on 7 elements: 6149 labeled, 18 up to isomorphism.
    let b = PavingBound::new(7, 4).unwrap();
    assert_eq!(b.to_string(), "2^(35/14)");
    assert!(b.labeled_exceeded_by(&BigCount::from(6149u32)));
    assert!(b.noniso_exceeded_by(&BigCount::from(18u32)).unwrap());
    assert!(!b.labeled_exceeded_by(&BigCount::from(5u32)));
}

#[test]
fn rejects_non_members() {
    let bad = SubsetWord::from_elements([1, 2, 4]);
    assert!(complete_to_paving(&[bad], 3, 7).is_err());
    assert!(u_size_recursive(3, 8).is_err());
}
