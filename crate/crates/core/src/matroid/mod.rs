//! The matroid kernel: basis and flat representations, the axioms as
//! executable validators, rank and closure, duality, restriction, truncation
//! and the nested class predicates.

mod class;
mod lattice;
mod subset;
mod text;

pub use class::MatroidClass;
pub use lattice::{from_flats, FlatLattice};
pub use subset::{k_subsets, Elements, SubsetWord};
pub use text::{parse_matroid, write_matroid};

use num_bigint::BigUint;

use crate::bigcomb::BigCount;
use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_N: usize = 16;

/// A matroid given by its ground-set size and sorted basis family.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<SubsetWord>,
}

/// Marks every subset of every word in `words`; indexable by subset bits.
pub(crate) fn down_closure(n: usize, words: impl IntoIterator<Item = u32>) -> Vec<bool> {
    let mut table = vec![false; 1usize << n];
    for w in words {
        table[w as usize] = true;
    }
    for bit in 0..n {
        let b = 1usize << bit;
        for mask in 0..table.len() {
            if mask & b != 0 && table[mask] {
                table[mask ^ b] = true;
            }
        }
    }
    table
}

/// Basis-exchange check over every ordered pair of the family.
///
/// The family must be nonempty and duplicate-free; members must fit in `n`.
pub fn validate_bases(n: usize, family: &[SubsetWord]) -> bool {
    exchange_violation(n, family).is_none()
}

/// First witness `(X, Y, x)` of a failed exchange, or a popcount mismatch
/// reported with `x = 0`.
pub(crate) fn exchange_violation(n: usize, family: &[SubsetWord]) -> Option<(SubsetWord, SubsetWord, usize)> {
    let first = *family.first()?;
    let r = first.len();
    if let Some(bad) = family.iter().find(|b| b.len() != r || !b.fits(n)) {
        return Some((*bad, first, 0));
    }
    let mut is_basis = vec![false; 1usize << n];
    for b in family {
        is_basis[b.bits() as usize] = true;
    }
    for &x_set in family {
        for &y_set in family {
            let only_x = x_set.bits() & !y_set.bits();
            if only_x == 0 {
                continue;
            }
            let only_y = y_set.bits() & !x_set.bits();
            for x in SubsetWord::from_bits(only_x).elements() {
                let base = x_set.bits() & !(1 << (x - 1));
                let ok = SubsetWord::from_bits(only_y)
                    .elements()
                    .any(|y| is_basis[(base | 1 << (y - 1)) as usize]);
                if !ok {
                    return Some((x_set, y_set, x));
                }
            }
        }
    }
    None
}

impl Matroid {
    /// Builds a matroid from a basis family, validating every axiom.
    pub fn new(n: usize, bases: Vec<SubsetWord>) -> Result<Matroid> {
        if n > MAX_N {
            return Err(Error::InputTooLarge {
                what: "ground set",
                value: n,
                max: MAX_N,
            });
        }
        if bases.is_empty() {
            return Err(Error::NotAMatroid("empty basis family".into()));
        }
        let mut bases = bases;
        bases.sort_unstable();
        if let Some(pair) = bases.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::NotAMatroid(format!("duplicate basis {}", pair[0])));
        }
        if let Some((x_set, y_set, x)) = exchange_violation(n, &bases) {
            let reason = if x == 0 {
                format!("basis {x_set} has the wrong size or leaves the ground set")
            } else {
                format!("no exchange for {x} out of {x_set} towards {y_set}")
            };
            return Err(Error::NotAMatroid(reason));
        }
        let rank = bases[0].len();
        Ok(Matroid { n, rank, bases })
    }

    /// Trusted constructor: `bases` must be sorted, duplicate-free and valid.
    pub(crate) fn from_sorted_bases(n: usize, bases: Vec<SubsetWord>) -> Matroid {
        debug_assert!(bases.windows(2).all(|p| p[0] < p[1]));
        debug_assert!(validate_bases(n, &bases));
        let rank = bases[0].len();
        Matroid { n, rank, bases }
    }

    /// `U_{r,n}`: every `r`-subset is a basis.
    pub fn uniform(r: usize, n: usize) -> Matroid {
        assert!(r <= n && n <= MAX_N, "U_{{{r},{n}}} is out of range");
        Matroid::from_sorted_bases(n, k_subsets(n, r))
    }

    /// The free matroid `U_{n,n}`.
    pub fn free(n: usize) -> Matroid {
        Matroid::uniform(n, n)
    }

    /// The Fano plane on `{1..7}`, lines being the triples whose labels XOR to zero.
    pub fn fano() -> Matroid {
        let bases = k_subsets(7, 3)
            .into_iter()
            .filter(|w| w.elements().fold(0, |acc, e| acc ^ e) != 0)
            .collect();
        Matroid::from_sorted_bases(7, bases)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[SubsetWord] {
        &self.bases
    }

    pub fn ground_set(&self) -> SubsetWord {
        SubsetWord::full(self.n)
    }

    pub fn is_basis(&self, set: SubsetWord) -> bool {
        self.bases.binary_search(&set).is_ok()
    }

    /// True iff `set` lies inside some basis.
    pub fn independent(&self, set: SubsetWord) -> bool {
        self.bases.iter().any(|b| set.is_subset_of(*b))
    }

    /// Rank of `set`, computed greedily.
    pub fn subset_rank(&self, set: SubsetWord) -> usize {
        let mut indep = SubsetWord::EMPTY;
        for e in set.elements() {
            let grown = indep.with(e);
            if self.independent(grown) {
                indep = grown;
            }
        }
        indep.len()
    }

    /// Smallest flat containing `set`.
    pub fn closure(&self, set: SubsetWord) -> SubsetWord {
        let r = self.subset_rank(set);
        let mut closed = set;
        for e in self.ground_set().difference(set).elements() {
            if self.subset_rank(set.with(e)) == r {
                closed = closed.with(e);
            }
        }
        closed
    }

    /// Rank of every subset, indexed by subset bits.
    pub fn rank_table(&self) -> Vec<u8> {
        let indep = down_closure(self.n, self.bases.iter().map(|b| b.bits()));
        let mut rank = vec![0u8; indep.len()];
        for mask in 1..indep.len() {
            rank[mask] = if indep[mask] {
                mask.count_ones() as u8
            } else {
                let mut best = 0;
                let mut rest = mask;
                while rest != 0 {
                    let low = rest & rest.wrapping_neg();
                    best = best.max(rank[mask ^ low]);
                    rest ^= low;
                }
                best
            };
        }
        rank
    }

    /// All flats grouped by rank.
    pub fn flat_lattice(&self) -> FlatLattice {
        let rank = self.rank_table();
        let full = self.ground_set().bits() as usize;
        let mut levels = vec![Vec::new(); self.rank + 1];
        for mask in 0..rank.len() {
            let r = rank[mask];
            let mut outside = full & !mask;
            let mut is_flat = true;
            while outside != 0 {
                let low = outside & outside.wrapping_neg();
                if rank[mask | low] == r {
                    is_flat = false;
                    break;
                }
                outside ^= low;
            }
            if is_flat {
                levels[r as usize].push(SubsetWord::from_bits(mask as u32));
            }
        }
        FlatLattice::from_levels_unchecked(self.n, levels)
    }

    /// Rank-`k` flats in ascending word order.
    pub fn flats_of_rank(&self, k: usize) -> Vec<SubsetWord> {
        assert!(k <= self.rank, "flat rank {k} exceeds matroid rank {}", self.rank);
        self.flat_lattice().levels()[k].clone()
    }

    /// Whitney number of the second kind `W_k`.
    pub fn whitney(&self, k: usize) -> BigCount {
        BigUint::from(self.flats_of_rank(k).len())
    }

    /// Matroid whose bases are the complements of these bases.
    pub fn dual(&self) -> Matroid {
        let full = self.ground_set();
        let mut bases: Vec<_> = self.bases.iter().map(|b| full.difference(*b)).collect();
        bases.sort_unstable();
        Matroid::from_sorted_bases(self.n, bases)
    }

    /// `M|X`, re-indexed onto `{1..|X|}` preserving element order.
    pub fn restriction(&self, set: SubsetWord) -> Matroid {
        assert!(set.fits(self.n), "restriction set leaves the ground set");
        let r = self.subset_rank(set);
        let members: Vec<usize> = set.elements().collect();
        let compress = |w: SubsetWord| {
            SubsetWord::from_elements(
                members
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| w.contains(e))
                    .map(|(i, _)| i + 1),
            )
        };
        let mut bases: Vec<_> = self
            .bases
            .iter()
            .map(|b| b.intersection(set))
            .filter(|b| b.len() == r)
            .map(compress)
            .collect();
        bases.sort_unstable();
        bases.dedup();
        Matroid::from_sorted_bases(members.len(), bases)
    }

    /// The rank-`k` truncation: bases are the independent `k`-sets.
    pub fn truncate(&self, k: usize) -> Result<Matroid> {
        if k == 0 || k > self.rank {
            return Err(Error::InvalidArgument(format!(
                "truncation rank {k} must lie in 1..={}",
                self.rank
            )));
        }
        if k == self.rank {
            return Ok(self.clone());
        }
        let indep = down_closure(self.n, self.bases.iter().map(|b| b.bits()));
        let bases = k_subsets(self.n, k)
            .into_iter()
            .filter(|w| indep[w.bits() as usize])
            .collect();
        Ok(Matroid::from_sorted_bases(self.n, bases))
    }

    /// Largest `k <= rank` such that every `k`-subset is independent.
    pub fn k_level(&self) -> usize {
        let indep = down_closure(self.n, self.bases.iter().map(|b| b.bits()));
        let mut level = 0;
        for k in 1..=self.rank {
            if k_subsets(self.n, k).iter().all(|w| indep[w.bits() as usize]) {
                level = k;
            } else {
                break;
            }
        }
        level
    }

    pub fn classify(&self) -> MatroidClass {
        MatroidClass::of(self)
    }

    /// Image under `perm`, where element `i` (1-based) maps to `perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Matroid {
        assert_eq!(perm.len(), self.n);
        let mut bases: Vec<_> = self
            .bases
            .iter()
            .map(|b| SubsetWord::from_elements(b.elements().map(|e| perm[e - 1])))
            .collect();
        bases.sort_unstable();
        Matroid::from_sorted_bases(self.n, bases)
    }
}
