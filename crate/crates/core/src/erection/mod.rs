//! Knuth's set-family operators (Expand, Refine and the random injection
//! step), erections of a matroid, and the free erection.
//!
//! Parameter convention: `erections(m)` and `free_erection(m)` return
//! matroids one rank above `m`; `is_erection(upper, lower)` asks whether
//! `upper` truncates to `lower`.

mod knuth;
pub(crate) mod search;

pub use knuth::{knuth_random_matroid, knuth_with_injections, CountDistribution, RandomPolicy};

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::matroid::{down_closure, from_flats, FlatLattice, Matroid, SubsetWord};
use search::{expand_words, hyperplane_families};

/// Sorted duplicate-free collection of subsets of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    members: Vec<SubsetWord>,
}

impl SetFamily {
    pub fn new(n: usize, members: impl IntoIterator<Item = SubsetWord>) -> SetFamily {
        let mut members: Vec<_> = members.into_iter().collect();
        assert!(members.iter().all(|m| m.fits(n)), "member outside the ground set");
        members.sort_unstable();
        members.dedup();
        SetFamily { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[SubsetWord] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: SubsetWord) -> bool {
        self.members.binary_search(&w).is_ok()
    }

    fn bits(&self) -> Vec<u32> {
        self.members.iter().map(|w| w.bits()).collect()
    }
}

/// `{A + a : A in T, a not in A}`.
pub fn expand(family: &SetFamily) -> SetFamily {
    let words = expand_words(family.n, &family.bits());
    SetFamily {
        n: family.n,
        members: words.into_iter().map(SubsetWord::from_bits).collect(),
    }
}

/// Merges offending pairs until every pairwise intersection lies in some
/// member of `previous`. Pairs are scanned smallest word first.
pub fn refine(family: &SetFamily, previous: &SetFamily) -> SetFamily {
    let under = down_closure(family.n, previous.bits());
    let mut current: BTreeSet<u32> = family.bits().into_iter().collect();
    'restart: loop {
        let words: Vec<u32> = current.iter().copied().collect();
        for (i, &a) in words.iter().enumerate() {
            for &b in &words[i + 1..] {
                if !under[(a & b) as usize] {
                    current.remove(&a);
                    current.remove(&b);
                    current.insert(a | b);
                    continue 'restart;
                }
            }
        }
        break;
    }
    SetFamily {
        n: family.n,
        members: current.into_iter().map(SubsetWord::from_bits).collect(),
    }
}

/// The replacement rule applied to a uniformly random offending pair each step.
pub fn refine_randomized<R: Rng + ?Sized>(family: &SetFamily, previous: &SetFamily, rng: &mut R) -> SetFamily {
    let under = down_closure(family.n, previous.bits());
    let mut current: Vec<u32> = family.bits();
    loop {
        let mut offending = Vec::new();
        for i in 0..current.len() {
            for j in i + 1..current.len() {
                if !under[(current[i] & current[j]) as usize] {
                    offending.push((i, j));
                }
            }
        }
        if offending.is_empty() {
            break;
        }
        let (i, j) = offending[rng.random_range(0..offending.len())];
        let merged = current[i] | current[j];
        current.swap_remove(j);
        current.swap_remove(i);
        if !current.contains(&merged) {
            current.push(merged);
        }
    }
    SetFamily::new(family.n, current.into_iter().map(SubsetWord::from_bits))
}

/// Result of the free erection: either a genuine rank-up matroid or the
/// trivial marker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeErection {
    Trivial,
    Erected(Matroid),
}

impl FreeErection {
    pub fn is_trivial(&self) -> bool {
        matches!(self, FreeErection::Trivial)
    }

    pub fn matroid(&self) -> Option<&Matroid> {
        match self {
            FreeErection::Trivial => None,
            FreeErection::Erected(m) => Some(m),
        }
    }
}

fn with_new_level(m: &Matroid, level: Vec<SubsetWord>) -> Matroid {
    let mut levels = m.flat_lattice().into_levels();
    let top = levels.pop().expect("lattice has a top level");
    levels.push(level);
    levels.push(top);
    let lattice = FlatLattice::new(m.n(), levels).expect("erection search produced an invalid level");
    from_flats(&lattice).expect("validated lattice")
}

/// `Refine(Expand(hyperplanes), hyperplanes)`; trivial when that is `{S}`.
pub fn free_erection(m: &Matroid) -> FreeErection {
    if m.rank() == 0 {
        // The only flat is the ground set; the free erection makes nothing a loop.
        return if m.n() == 0 {
            FreeErection::Trivial
        } else {
            FreeErection::Erected(Matroid::uniform(1, m.n()))
        };
    }
    let lattice = m.flat_lattice();
    let hyper = SetFamily::new(m.n(), lattice.hyperplanes().unwrap().iter().copied());
    let level = refine(&expand(&hyper), &hyper);
    if level.members() == [m.ground_set()] {
        FreeErection::Trivial
    } else {
        FreeErection::Erected(with_new_level(m, level.members))
    }
}

/// Every matroid of rank `r + 1` whose rank-`r` truncation is `m`, the
/// trivial erection excluded, in ascending basis-family order.
pub fn erections(m: &Matroid) -> Vec<Matroid> {
    let n = m.n();
    let mut out: Vec<Matroid> = if m.rank() == 0 {
        // Truncating a rank-1 matroid to rank 0 forgets its loop set.
        (0..(1u32 << n) - 1)
            .map(|loops| {
                let bases = (1..=n)
                    .map(|e| SubsetWord::EMPTY.with(e))
                    .filter(|b| b.bits() & loops == 0)
                    .collect();
                Matroid::from_sorted_bases(n, bases)
            })
            .collect()
    } else {
        let lattice = m.flat_lattice();
        let lower: Vec<u32> = lattice.hyperplanes().unwrap().iter().map(|w| w.bits()).collect();
        hyperplane_families(n, &lower)
            .into_iter()
            .map(|family| with_new_level(m, family.into_iter().map(SubsetWord::from_bits).collect()))
            .collect()
    };
    out.sort();
    out
}

/// Whether `upper` is an erection of `lower`.
pub fn is_erection(upper: &Matroid, lower: &Matroid) -> Result<bool> {
    if upper.n() != lower.n() || upper.rank() != lower.rank() + 1 {
        return Err(Error::InvalidArgument(format!(
            "erection needs equal ground sets and a rank gap of one, got ranks {} and {}",
            upper.rank(),
            lower.rank()
        )));
    }
    if lower.rank() == 0 {
        return Ok(true);
    }
    Ok(upper.truncate(lower.rank())? == *lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::k_subsets;

    fn set(elems: &[usize]) -> SubsetWord {
        SubsetWord::from_elements(elems.iter().copied())
    }

    fn fano_lines() -> SetFamily {
        SetFamily::new(7, Matroid::fano().flats_of_rank(2))
    }

    #[test]
    fn expand_examples() {
        let t = SetFamily::new(3, [set(&[1]), set(&[2])]);
        assert_eq!(expand(&t).members(), &[set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]);
        assert!(expand(&SetFamily::new(3, [SubsetWord::full(3)])).is_empty());
        // Seven lines times four outside points, no collisions.
        let e = expand(&fano_lines());
        assert_eq!(e.len(), 28);
        assert!(e.members().iter().all(|w| w.len() == 4));
    }

    #[test]
    fn refine_examples() {
        let singles = SetFamily::new(4, k_subsets(4, 1));
        let t = SetFamily::new(4, [set(&[1, 2, 3]), set(&[1, 2, 4])]);
        assert_eq!(refine(&t, &singles).members(), &[set(&[1, 2, 3, 4])]);
        let ok = SetFamily::new(4, [set(&[1, 2]), set(&[1, 3]), set(&[3, 4])]);
        assert_eq!(refine(&ok, &singles), ok);
        let lines = fano_lines();
        assert_eq!(refine(&expand(&lines), &lines).members(), &[SubsetWord::full(7)]);
    }

    #[test]
    fn free_erection_examples() {
        assert_eq!(
            free_erection(&Matroid::uniform(2, 3)),
            FreeErection::Erected(Matroid::free(3))
        );
        assert_eq!(
            free_erection(&Matroid::uniform(3, 4)),
            FreeErection::Erected(Matroid::free(4))
        );
        assert!(free_erection(&Matroid::fano()).is_trivial());
    }

    #[test]
    fn erection_examples() {
        assert_eq!(erections(&Matroid::uniform(2, 3)), vec![Matroid::free(3)]);
        assert!(erections(&Matroid::fano()).is_empty());
        assert!(erections(&Matroid::free(4)).is_empty());
        // Rank 0 on two elements: three rank-1 matroids.
        assert_eq!(erections(&Matroid::uniform(0, 2)).len(), 3);
    }

    #[test]
    fn is_erection_examples() {
        assert!(is_erection(&Matroid::free(3), &Matroid::uniform(2, 3)).unwrap());
        assert!(is_erection(&Matroid::uniform(4, 5), &Matroid::uniform(2, 5)).is_err());
        let parallel = Matroid::new(4, k_subsets(4, 2).into_iter().filter(|w| *w != set(&[1, 2])).collect()).unwrap();
        assert!(!is_erection(&Matroid::uniform(3, 4), &parallel).unwrap());
    }

    #[test]
    fn erections_truncate_back() {
        let f = Matroid::fano().truncate(2).unwrap();
        let ups = erections(&f);
        assert!(!ups.is_empty());
        for n in &ups {
            assert_eq!(n.truncate(2).unwrap(), f);
        }
    }
}
