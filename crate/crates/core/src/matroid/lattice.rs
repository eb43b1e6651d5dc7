use super::{down_closure, k_subsets, Matroid, SubsetWord, MAX_N};
use crate::error::{Error, Result};

/// Flats of a matroid grouped by rank, `levels[k]` holding `F_k`.
///
/// The top level is always the single full ground set and the bottom level is
/// the single loop set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlatLattice {
    n: usize,
    levels: Vec<Vec<SubsetWord>>,
}

impl FlatLattice {
    /// Checks the level structure and the cover-partition axiom.
    pub fn new(n: usize, levels: Vec<Vec<SubsetWord>>) -> Result<FlatLattice> {
        let lattice = FlatLattice { n, levels };
        lattice.validate()?;
        Ok(lattice)
    }

    pub(crate) fn from_levels_unchecked(n: usize, levels: Vec<Vec<SubsetWord>>) -> FlatLattice {
        FlatLattice { n, levels }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[Vec<SubsetWord>] {
        &self.levels
    }

    pub fn into_levels(self) -> Vec<Vec<SubsetWord>> {
        self.levels
    }

    /// Hyperplanes, or `None` for rank 0.
    pub fn hyperplanes(&self) -> Option<&[SubsetWord]> {
        let r = self.rank();
        (r > 0).then(|| self.levels[r - 1].as_slice())
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let fail = |level: usize, flat: SubsetWord, reason: &str| Error::FlatAxiom {
            level,
            flat: flat.to_string(),
            reason: reason.to_string(),
        };
        if n > MAX_N {
            return Err(Error::InputTooLarge {
                what: "ground set",
                value: n,
                max: MAX_N,
            });
        }
        let full = SubsetWord::full(n);
        let Some(top) = self.levels.last() else {
            return Err(fail(0, full, "lattice has no levels"));
        };
        let r = self.levels.len() - 1;
        if top.as_slice() != [full] {
            return Err(fail(r, full, "top level must be exactly the ground set"));
        }
        if self.levels[0].len() != 1 {
            return Err(fail(0, SubsetWord::EMPTY, "level 0 must hold exactly the loop set"));
        }
        for (i, level) in self.levels.iter().enumerate() {
            for pair in level.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(fail(i, pair[1], "level is not sorted and duplicate-free"));
                }
            }
            for (a_idx, &a) in level.iter().enumerate() {
                if !a.fits(n) {
                    return Err(fail(i, a, "flat leaves the ground set"));
                }
                if i < r && a == full {
                    return Err(fail(i, a, "ground set below the top level"));
                }
                if let Some(&b) = level[a_idx + 1..]
                    .iter()
                    .find(|b| a.is_subset_of(**b) || b.is_subset_of(a))
                {
                    return Err(fail(i, b, &format!("comparable with {a} on the same level")));
                }
            }
        }
        for i in 0..r {
            let upper = &self.levels[i + 1];
            for &x in upper {
                if !self.levels[i].iter().any(|f| f.is_subset_of(x) && *f != x) {
                    return Err(fail(i + 1, x, "contains no flat of the level below"));
                }
            }
            for &f in &self.levels[i] {
                let mut covered = SubsetWord::EMPTY;
                for &x in upper.iter().filter(|x| f.is_subset_of(**x) && **x != f) {
                    let block = x.difference(f);
                    if !block.intersection(covered).is_empty() {
                        return Err(fail(i, f, &format!("covers overlap at {x}")));
                    }
                    covered = covered.union(block);
                }
                if covered != full.difference(f) {
                    return Err(fail(i, f, "covers do not exhaust the complement"));
                }
            }
        }
        Ok(())
    }
}

/// The unique matroid whose flats are the levels of `lattice`.
///
/// Bases are the `r`-sets lying in no hyperplane.
pub fn from_flats(lattice: &FlatLattice) -> Result<Matroid> {
    lattice.validate()?;
    Ok(from_flats_unchecked(lattice.n, &lattice.levels))
}

/// `levels` must already satisfy the lattice invariants; the top level may be omitted.
pub(crate) fn from_flats_unchecked(n: usize, levels: &[Vec<SubsetWord>]) -> Matroid {
    let full = SubsetWord::full(n);
    let r = if levels.last().is_some_and(|l| l.as_slice() == [full]) {
        levels.len() - 1
    } else {
        levels.len()
    };
    if r == 0 {
        return Matroid::from_sorted_bases(n, vec![SubsetWord::EMPTY]);
    }
    let under = down_closure(n, levels[r - 1].iter().map(|w| w.bits()));
    let bases = k_subsets(n, r)
        .into_iter()
        .filter(|w| !under[w.bits() as usize])
        .collect();
    Matroid::from_sorted_bases(n, bases)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(elems: &[usize]) -> SubsetWord {
        SubsetWord::from_elements(elems.iter().copied())
    }

    #[test]
    fn boolean_lattice_is_free() {
        let levels = (0..=3).map(|k| k_subsets(3, k)).collect();
        let l = FlatLattice::new(3, levels).unwrap();
        assert_eq!(from_flats(&l).unwrap(), Matroid::free(3));
    }

    #[test]
    fn parallel_pair_lattice() {
        let l = FlatLattice::new(
            4,
            vec![
                vec![SubsetWord::EMPTY],
                vec![set(&[1, 2]), set(&[3]), set(&[4])],
                vec![SubsetWord::full(4)],
            ],
        )
        .unwrap();
        let m = from_flats(&l).unwrap();
        assert_eq!(m.rank(), 2);
        assert!(!m.independent(set(&[1, 2])));
        assert!(m.independent(set(&[1, 3])));
        assert_eq!(m.flat_lattice(), l);
    }

    #[test]
    fn fano_lattice_round_trip() {
        let f = Matroid::fano();
        let l = f.flat_lattice();
        l.validate().unwrap();
        assert_eq!(l.levels()[1].len(), 7);
        assert_eq!(l.levels()[2].len(), 7);
        assert_eq!(from_flats(&l).unwrap(), f);
    }

    #[test]
    fn rejects_broken_partition() {
        // Lines {1,2,3} and {1,2,4} overlap beyond a point.
        let mut levels: Vec<Vec<SubsetWord>> = vec![vec![SubsetWord::EMPTY], k_subsets(4, 1)];
        levels.push(vec![set(&[1, 2, 3]), set(&[1, 2, 4]), set(&[3, 4])]);
        levels.push(vec![SubsetWord::full(4)]);
        let err = FlatLattice::new(4, levels).unwrap_err();
        match err {
            Error::FlatAxiom { level, .. } => assert_eq!(level, 1),
            other => panic!("unexpected {other:?}"),
        }
        // Missing coverage.
        let levels = vec![
            vec![SubsetWord::EMPTY],
            vec![set(&[1]), set(&[2])],
            vec![SubsetWord::full(3)],
        ];
        assert!(FlatLattice::new(3, levels).is_err());
        // Wrong top.
        let levels = vec![vec![SubsetWord::EMPTY], vec![set(&[1, 2])]];
        assert!(FlatLattice::new(3, levels).is_err());
    }
}
