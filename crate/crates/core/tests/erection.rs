use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use matroid_census::enumerate::{enumerate_matroids, EnumConfig};
use matroid_census::erection::{
    erections, expand, free_erection, is_erection, knuth_random_matroid, knuth_with_injections, refine,
    refine_randomized, RandomPolicy, SetFamily,
};
use matroid_census::matroid::{from_flats, validate_bases, Matroid, SubsetWord};

/// A level of a random matroid, expanded, plus a few random supersets of its members.
fn random_instance(n: usize, rng: &mut ChaCha8Rng) -> (SetFamily, SetFamily) {
    loop {
        let m = knuth_random_matroid(n, &RandomPolicy::geometric(rng.random())).unwrap();
        if m.rank() == 0 {
            continue;
        }
        let lattice = m.flat_lattice();
        let level = &lattice.levels()[rng.random_range(0..m.rank())];
        let previous = SetFamily::new(n, level.iter().copied());
        let full = SubsetWord::full(n).bits();
        let mut members = expand(&previous).members().to_vec();
        for _ in 0..rng.random_range(0..4) {
            let base = level[rng.random_range(0..level.len())];
            let extra = rng.random::<u32>() & full & !base.bits();
            if extra != 0 {
                members.push(SubsetWord::from_bits(base.bits() | extra));
            }
        }
        return (SetFamily::new(n, members), previous);
    }
}

#[test]
fn refine_is_confluent() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut merged = 0;
    for n in 1..=7 {
        for _ in 0..200 {
            let (family, previous) = random_instance(n, &mut rng);
            let fixed = refine(&family, &previous);
            merged += (fixed != family) as usize;
            for _ in 0..20 {
                assert_eq!(refine_randomized(&family, &previous, &mut rng), fixed);
            }
        }
    }
    assert!(merged > 200, "only {merged} instances needed any merging");
}

#[test]
fn seeded_random_matroids_are_valid() {
    for run in 0..1000u64 {
        let n = 1 + (run % 7) as usize;
        let m = knuth_random_matroid(n, &RandomPolicy::geometric(run)).unwrap();
        assert!(validate_bases(n, m.bases()), "seed {run}");
        m.flat_lattice().validate().unwrap();
        assert_eq!(m, knuth_random_matroid(n, &RandomPolicy::geometric(run)).unwrap());
    }
}

#[test]
fn targeted_injection_reaches_every_loopless_matroid() {
    let cfg = EnumConfig::default();
    for n in 1..=4 {
        for r in 1..=n {
            for target in enumerate_matroids(n, r, 1, &cfg).unwrap() {
                let levels = target.flat_lattice().into_levels();
                let lattice = knuth_with_injections(n, |rank, _| levels[rank + 1].clone()).unwrap();
                assert_eq!(from_flats(&lattice).unwrap(), target);
            }
        }
    }
}

#[test]
fn erections_partition_the_next_rank() {
    // Every simple rank-4 matroid truncates to exactly one simple rank-3 matroid.
    let cfg = EnumConfig::default();
    for n in 4..=6 {
        let mut ups: Vec<Matroid> = enumerate_matroids(n, 3, 2, &cfg)
            .unwrap()
            .iter()
            .flat_map(|m| {
                let e = erections(m);
                for u in &e {
                    assert!(is_erection(u, m).unwrap());
                }
                e
            })
            .collect();
        ups.sort();
        let mut rank4 = enumerate_matroids(n, 4, 2, &cfg).unwrap();
        rank4.sort();
        assert_eq!(ups, rank4, "n = {n}");
    }
}

#[test]
fn free_erection_is_an_erection() {
    let cfg = EnumConfig::default();
    for m in enumerate_matroids(6, 3, 2, &cfg).unwrap() {
        match free_erection(&m).matroid() {
            Some(f) => assert!(erections(&m).contains(f)),
            None => assert!(erections(&m).is_empty()),
        }
    }
    assert!(erections(&Matroid::fano()).is_empty());
}
