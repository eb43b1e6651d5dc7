//! XOR-closed families and the paving-matroid lower bound.
//!
//! For `n = 2^m - 1`, `U(r, n)` is the family of `r`-subsets of `{1..n}`
//! whose labels XOR to zero. Distinct members meet in at most `r - 2`
//! elements, so any subfamily completes to the hyperplanes of a rank-`r`
//! paving matroid, giving at least `2^|U(r, n)|` of them.

use std::fmt;

use num_traits::{One, ToPrimitive, Zero};

use crate::bigcomb::{binomial, factorial, pow2, BigCount, MAX_ARG};
use crate::error::{Error, Result};
use crate::matroid::{k_subsets, Matroid, SubsetWord, MAX_N};

/// Largest ground set whose XOR family can be listed member by member.
pub const MAX_LISTED_N: usize = 31;
/// Cap on `C(n, r)` for listing, which keeps `n = 31` to `r <= 5`.
const MAX_LISTED_SUBSETS: u64 = 200_000;

/// Recovers `m` from `n = 2^m - 1`, `m >= 2`.
pub fn mersenne_exponent(n: usize) -> Result<u32> {
    if n >= 3 && (n + 1).is_power_of_two() {
        Ok((n + 1).trailing_zeros())
    } else {
        Err(Error::InvalidArgument(format!(
            "n = {n} is not of the form 2^m - 1 with m >= 2"
        )))
    }
}

fn check_params(r: usize, n: usize) -> Result<()> {
    mersenne_exponent(n)?;
    if n > MAX_ARG {
        return Err(Error::InputTooLarge {
            what: "XOR family ground set",
            value: n,
            max: MAX_ARG,
        });
    }
    if r < 3 || r > n {
        return Err(Error::InvalidArgument(format!(
            "need 3 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    Ok(())
}

fn xor_of(w: SubsetWord) -> usize {
    w.elements().fold(0, |acc, e| acc ^ e)
}

/// The `r`-subsets of `{1..n}` whose labels XOR to zero, in word order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XorFamily {
    n: usize,
    r: usize,
    members: Vec<SubsetWord>,
}

impl XorFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
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

    /// Largest intersection between two distinct members.
    pub fn max_pairwise_intersection(&self) -> Option<usize> {
        let mut best = None;
        for (i, a) in self.members.iter().enumerate() {
            for b in &self.members[i + 1..] {
                let s = a.intersection(*b).len();
                best = Some(best.map_or(s, |x: usize| x.max(s)));
            }
        }
        best
    }
}

/// Lists `U(r, n)` by checking every `r`-subset.
pub fn u_set(r: usize, n: usize) -> Result<XorFamily> {
    check_params(r, n)?;
    let subsets = binomial(n as u64, r as i64);
    if n > MAX_LISTED_N || subsets > BigCount::from(MAX_LISTED_SUBSETS) {
        return Err(Error::InputTooLarge {
            what: "r-subsets to scan",
            value: subsets.to_usize().unwrap_or(usize::MAX),
            max: MAX_LISTED_SUBSETS as usize,
        });
    }
    let members = k_subsets(n, r).into_iter().filter(|w| xor_of(*w) == 0).collect();
    Ok(XorFamily { n, r, members })
}

/// `|U(r, n)|` from the recursion
/// `(r+1) U(r+1) = C(n, r) - U(r) - (n-r+1) U(r-1)`, started at
/// `U(3) = C(n,3)/(n-2)` and `U(4) = C(n,4)/(n-2)`.
pub fn u_size_recursive(r: usize, n: usize) -> Result<BigCount> {
    check_params(r, n)?;
    let exact = |num: BigCount, den: BigCount, what: &str| -> Result<BigCount> {
        if (&num % &den).is_zero() {
            Ok(num / den)
        } else {
            Err(Error::Internal(format!("{what} is not an exact division for n = {n}")))
        }
    };
    let n_big = BigCount::from(n);
    let mut prev = exact(binomial(n as u64, 3), BigCount::from(n - 2), "initial value U(3)")?;
    if r == 3 {
        return Ok(prev);
    }
    let mut cur = exact(binomial(n as u64, 4), BigCount::from(n - 2), "initial value U(4)")?;
    for s in 4..r {
        // s is the current size; build U(s + 1).
        let subtract = &cur + (&n_big - BigCount::from(s) + BigCount::one()) * &prev;
        let total = binomial(n as u64, s as i64);
        if subtract > total {
            return Err(Error::Internal(format!("recursion went negative at r = {}", s + 1)));
        }
        let next = exact(total - subtract, BigCount::from(s + 1), "recursion step")?;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `2^|U(r, n)|`.
pub fn lower_bound(r: usize, n: usize) -> Result<BigCount> {
    Ok(pow2(lower_bound_exponent(r, n)?))
}

/// `|U(r, n)|` as a machine integer, the exponent of [`lower_bound`].
pub fn lower_bound_exponent(r: usize, n: usize) -> Result<usize> {
    let size = u_size_recursive(r, n)?;
    size.to_usize().ok_or(Error::InputTooLarge {
        what: "bound exponent",
        value: usize::MAX,
        max: usize::MAX,
    })
}

/// A family of blocks meant to cover every `d`-subset exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPartition {
    pub n: usize,
    pub d: usize,
    pub blocks: Vec<SubsetWord>,
}

impl DPartition {
    pub fn new(n: usize, d: usize, blocks: impl IntoIterator<Item = SubsetWord>) -> DPartition {
        let mut blocks: Vec<_> = blocks.into_iter().collect();
        blocks.sort_unstable();
        DPartition { n, d, blocks }
    }

    /// Whether the only block is the ground set.
    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == 1 && self.blocks[0] == SubsetWord::full(self.n)
    }
}

/// Every block has at least `d` elements and every `d`-subset lies in exactly
/// one block.
///
/// Checked without listing `d`-subsets: no `d`-subset lies in two blocks iff
/// blocks pairwise meet in fewer than `d` elements, and then every `d`-subset
/// is covered iff the blocks' `d`-subset counts add up to `C(n, d)`.
pub fn is_d_partition(p: &DPartition) -> bool {
    if p.n > 32 || p.blocks.iter().any(|b| !b.fits(p.n) || b.len() < p.d) {
        return false;
    }
    for (i, a) in p.blocks.iter().enumerate() {
        if p.blocks[i + 1..].iter().any(|b| a.intersection(*b).len() >= p.d) {
            return false;
        }
    }
    let covered: BigCount = p.blocks.iter().map(|b| binomial(b.len() as u64, p.d as i64)).sum();
    covered == binomial(p.n as u64, p.d as i64)
}

fn check_subfamily(v: &[SubsetWord], r: usize, n: usize) -> Result<()> {
    check_params(r, n)?;
    if n > MAX_N {
        return Err(Error::InputTooLarge {
            what: "matroid ground set",
            value: n,
            max: MAX_N,
        });
    }
    for (i, w) in v.iter().enumerate() {
        if !w.fits(n) || w.len() != r || xor_of(*w) != 0 {
            return Err(Error::InvalidArgument(format!("{w} is not a member of U({r}, {n})")));
        }
        if v[..i].contains(w) {
            return Err(Error::InvalidArgument(format!("{w} appears twice")));
        }
    }
    Ok(())
}

/// The `(r-1)`-partition made of `v` plus every `(r-1)`-set lying in no
/// member of `v`.
pub fn completion_partition(v: &[SubsetWord], r: usize, n: usize) -> Result<DPartition> {
    check_subfamily(v, r, n)?;
    let extra = k_subsets(n, r - 1)
        .into_iter()
        .filter(|s| !v.iter().any(|b| s.is_subset_of(*b)));
    Ok(DPartition::new(n, r - 1, v.iter().copied().chain(extra)))
}

/// The rank-`r` paving matroid whose hyperplanes are the completion of `v`.
///
/// Bases are the `r`-sets in no block, which are the `r`-sets outside `v`.
pub fn complete_to_paving(v: &[SubsetWord], r: usize, n: usize) -> Result<Matroid> {
    check_subfamily(v, r, n)?;
    let mut chosen = v.to_vec();
    chosen.sort_unstable();
    let bases = k_subsets(n, r)
        .into_iter()
        .filter(|w| chosen.binary_search(w).is_err())
        .collect();
    Ok(Matroid::from_sorted_bases(n, bases))
}

/// The lower bound `2^(C(n,r) / 2n)` on rank-`r` paving matroids, and its
/// isomorphism-class version with an extra `1/n!`, compared exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PavingBound {
    pub n: usize,
    pub r: usize,
    /// Exponent numerator `C(n, r)`; the denominator is `2n`.
    pub exponent_num: BigCount,
}

impl PavingBound {
    pub fn new(n: usize, r: usize) -> Result<PavingBound> {
        if n == 0 || n > MAX_ARG {
            return Err(Error::InvalidArgument(format!(
                "bound needs 1 <= n <= {MAX_ARG}, got {n}"
            )));
        }
        Ok(PavingBound {
            n,
            r,
            exponent_num: binomial(n as u64, r as i64),
        })
    }

    pub fn exponent_den(&self) -> usize {
        2 * self.n
    }

    /// The exponent when it is an integer.
    pub fn integral_exponent(&self) -> Option<BigCount> {
        let den = BigCount::from(self.exponent_den());
        (&self.exponent_num % &den).is_zero().then(|| &self.exponent_num / den)
    }

    fn exceeds(&self, scaled: BigCount) -> bool {
        // scaled > 2^(C/2n)  <=>  scaled^(2n) > 2^C
        let e = self.exponent_num.to_usize().expect("exponent fits in memory");
        num_traits::pow(scaled, self.exponent_den()) > pow2(e)
    }

    /// `count > 2^(C(n,r) / 2n)`.
    pub fn labeled_exceeded_by(&self, count: &BigCount) -> bool {
        self.exceeds(count.clone())
    }

    /// `count > 2^(C(n,r) / 2n) / n!`.
    pub fn noniso_exceeded_by(&self, count: &BigCount) -> Result<bool> {
        Ok(self.exceeds(count * factorial(self.n)?))
    }
}

impl fmt::Display for PavingBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.integral_exponent() {
            Some(e) => write!(f, "2^{e}"),
            None => write!(f, "2^({}/{})", self.exponent_num, self.exponent_den()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(elems: &[usize]) -> SubsetWord {
        SubsetWord::from_elements(elems.iter().copied())
    }

    #[test]
    fn fano_lines_are_the_rank_three_family() {
        let u = u_set(3, 7).unwrap();
        let lines = [
            [1, 2, 3],
            [1, 4, 5],
            [1, 6, 7],
            [2, 4, 6],
            [2, 5, 7],
            [3, 4, 7],
            [3, 5, 6],
        ];
        assert_eq!(u.len(), 7);
        for l in lines {
            assert!(u.contains(set(&l)));
        }
        assert!(u_set(5, 7).unwrap().is_empty());
        assert_eq!(u_set(4, 7).unwrap().len(), 7);
    }

    #[test]
    fn recursion_values() {
        assert_eq!(u_size_recursive(3, 7).unwrap(), BigCount::from(7u32));
        assert_eq!(u_size_recursive(5, 7).unwrap(), BigCount::from(0u32));
        assert_eq!(u_size_recursive(4, 15).unwrap(), BigCount::from(105u32));
        assert_eq!(u_size_recursive(5, 15).unwrap(), BigCount::from(168u32));
        assert_eq!(lower_bound(4, 7).unwrap(), BigCount::from(128u32));
        assert_eq!(lower_bound(4, 15).unwrap(), pow2(105));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(u_set(3, 8).is_err());
        assert!(u_set(2, 7).is_err());
        assert!(u_set(3, 1).is_err());
        assert!(u_size_recursive(8, 7).is_err());
        assert!(u_set(10, 31).is_err());
        assert_eq!(mersenne_exponent(15).unwrap(), 4);
    }

    #[test]
    fn d_partition_examples() {
        let fano = DPartition::new(7, 2, u_set(3, 7).unwrap().members().iter().copied());
        assert!(is_d_partition(&fano));
        for d in 0..=5 {
            let trivial = DPartition::new(5, d, [SubsetWord::full(5)]);
            assert!(is_d_partition(&trivial));
            assert!(trivial.is_trivial());
        }
        assert!(!is_d_partition(&DPartition::new(
            5,
            2,
            [set(&[1, 2, 3]), set(&[3, 4, 5])]
        )));
        // Overlap in a pair.
        assert!(!is_d_partition(&DPartition::new(
            4,
            2,
            [set(&[1, 2, 3]), set(&[1, 2, 4]), set(&[3, 4])]
        )));
    }

    #[test]
    fn completion_examples() {
        assert_eq!(complete_to_paving(&[], 3, 7).unwrap(), Matroid::uniform(3, 7));
        let lines = u_set(3, 7).unwrap();
        assert_eq!(complete_to_paving(lines.members(), 3, 7).unwrap(), Matroid::fano());
        let p = completion_partition(&lines.members()[..2], 3, 7).unwrap();
        assert!(is_d_partition(&p));
        assert!(complete_to_paving(&[set(&[1, 2, 4])], 3, 7).is_err());
        assert!(complete_to_paving(&[set(&[1, 2, 3]), set(&[1, 2, 3])], 3, 7).is_err());
    }

    #[test]
    fn paving_bound_comparisons() {
        // C(7,4)/14 = 35/14 is fractional: 6149 > 2^2.5.
        let b = PavingBound::new(7, 4).unwrap();
        assert!(b.integral_exponent().is_none());
        assert!(b.labeled_exceeded_by(&BigCount::from(6149u32)));
        assert!(!b.labeled_exceeded_by(&BigCount::from(5u32)));
        assert!(b.labeled_exceeded_by(&BigCount::from(6u32)));
        assert!(b.noniso_exceeded_by(&BigCount::from(1u32)).unwrap());
        assert_eq!(b.to_string(), "2^(35/14)");
        assert_eq!(PavingBound::new(8, 4).unwrap().to_string(), "2^(70/16)");
    }
}
