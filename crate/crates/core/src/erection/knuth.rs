use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{expand, refine, SetFamily};
use crate::error::{Error, Result};
use crate::matroid::{from_flats, FlatLattice, Matroid, SubsetWord};

/// How many random sets are injected at each level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountDistribution {
    /// Never inject: the algorithm builds the free matroid.
    Zero,
    /// Number of failures before the first success of a `p = 1/2` coin.
    GeometricHalf,
    /// Exactly `k` sets per level.
    Fixed(usize),
}

/// The random step of Knuth's algorithm, fully pinned by a seed.
///
/// Each injected set is a uniformly chosen member of the current level plus a
/// uniform nonempty subset of that member's complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomPolicy {
    pub seed: u64,
    pub count: CountDistribution,
}

impl RandomPolicy {
    pub fn geometric(seed: u64) -> RandomPolicy {
        RandomPolicy {
            seed,
            count: CountDistribution::GeometricHalf,
        }
    }

    pub fn none(seed: u64) -> RandomPolicy {
        RandomPolicy {
            seed,
            count: CountDistribution::Zero,
        }
    }

    /// `<name>:<params>` as written into output metadata.
    pub fn descriptor(&self) -> String {
        self.to_string()
    }

    fn draw(&self, rng: &mut ChaCha8Rng, level: &[SubsetWord], full: SubsetWord) -> Vec<SubsetWord> {
        let count = match self.count {
            CountDistribution::Zero => 0,
            CountDistribution::Fixed(k) => k,
            CountDistribution::GeometricHalf => {
                let mut k = 0;
                while rng.random_bool(0.5) {
                    k += 1;
                }
                k
            }
        };
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let base = level[rng.random_range(0..level.len())];
            let complement = full.difference(base).bits();
            let extra = loop {
                let candidate = rng.random::<u32>() & complement;
                if candidate != 0 {
                    break candidate;
                }
            };
            out.push(SubsetWord::from_bits(base.bits() | extra));
        }
        out
    }
}

impl fmt::Display for RandomPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.count {
            CountDistribution::Zero => write!(f, "none:count=0"),
            CountDistribution::GeometricHalf => write!(f, "geometric:p=1/2,superset=member+nonempty-complement-subset"),
            CountDistribution::Fixed(k) => write!(f, "fixed:count={k},superset=member+nonempty-complement-subset"),
        }
    }
}

/// Runs the level-by-level construction, asking `inject` for the random sets
/// added on top of each level (`level_rank`, current level).
///
/// Injected sets must properly contain some member of the level they are
/// added to.
pub fn knuth_with_injections<F>(n: usize, mut inject: F) -> Result<FlatLattice>
where
    F: FnMut(usize, &[SubsetWord]) -> Vec<SubsetWord>,
{
    if n == 0 {
        return Err(Error::InvalidArgument(
            "the algorithm needs a nonempty ground set".into(),
        ));
    }
    let full = SubsetWord::full(n);
    let mut levels = vec![vec![SubsetWord::EMPTY]];
    loop {
        let rank = levels.len() - 1;
        let current = SetFamily::new(n, levels[rank].iter().copied());
        let extra = inject(rank, &levels[rank]);
        for w in &extra {
            if !w.fits(n) || !levels[rank].iter().any(|m| m.is_subset_of(*w) && m != w) {
                return Err(Error::InvalidArgument(format!(
                    "injected set {w} does not properly contain a member of level {rank}"
                )));
            }
        }
        let mut candidates = expand(&current).members().to_vec();
        candidates.extend(extra);
        let next = refine(&SetFamily::new(n, candidates), &current);
        if next.contains(full) {
            levels.push(vec![full]);
            break;
        }
        levels.push(next.members().to_vec());
    }
    FlatLattice::new(n, levels)
}

/// Knuth's random matroid on `{1..n}` under `policy`.
pub fn knuth_random_matroid(n: usize, policy: &RandomPolicy) -> Result<Matroid> {
    let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
    let full = SubsetWord::full(n);
    let lattice = knuth_with_injections(n, |_, level| policy.draw(&mut rng, level, full))?;
    from_flats(&lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::validate_bases;

    #[test]
    fn no_injection_builds_free_matroid() {
        for n in 1..=5 {
            assert_eq!(
                knuth_random_matroid(n, &RandomPolicy::none(0)).unwrap(),
                Matroid::free(n)
            );
        }
    }

    #[test]
    fn seeded_runs_are_valid_and_repeatable() {
        for seed in 0..50 {
            let p = RandomPolicy::geometric(seed);
            let a = knuth_random_matroid(5, &p).unwrap();
            assert!(validate_bases(5, a.bases()));
            a.flat_lattice().validate().unwrap();
            assert_eq!(a, knuth_random_matroid(5, &p).unwrap());
        }
    }

    #[test]
    fn bad_injection_is_rejected() {
        let err = knuth_with_injections(3, |_, _| vec![SubsetWord::EMPTY]);
        assert!(err.is_err());
        assert!(knuth_with_injections(0, |_, _| vec![]).is_err());
    }
}
