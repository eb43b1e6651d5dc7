use std::fmt;

/// A subset of a small ground set packed into a machine word.
///
/// Element `i` (1-based) lives at bit `i - 1`. The ground-set size is carried
/// by whoever owns the word; no bit at or above that size is ever set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetWord(u32);

impl SubsetWord {
    pub const EMPTY: SubsetWord = SubsetWord(0);

    pub const fn from_bits(bits: u32) -> Self {
        SubsetWord(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The whole ground set `{1, ..., n}`.
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            SubsetWord(u32::MAX)
        } else {
            SubsetWord((1u32 << n) - 1)
        }
    }

    /// Builds a word from 1-based element labels.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut bits = 0u32;
        for e in elements {
            assert!((1..=32).contains(&e), "element {e} out of range");
            bits |= 1 << (e - 1);
        }
        SubsetWord(bits)
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, element: usize) -> bool {
        element >= 1 && element <= 32 && self.0 & (1 << (element - 1)) != 0
    }

    pub const fn is_subset_of(self, other: SubsetWord) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: SubsetWord) -> Self {
        SubsetWord(self.0 | other.0)
    }

    pub const fn intersection(self, other: SubsetWord) -> Self {
        SubsetWord(self.0 & other.0)
    }

    pub const fn difference(self, other: SubsetWord) -> Self {
        SubsetWord(self.0 & !other.0)
    }

    pub const fn with(self, element: usize) -> Self {
        SubsetWord(self.0 | (1 << (element - 1)))
    }

    pub const fn without(self, element: usize) -> Self {
        SubsetWord(self.0 & !(1 << (element - 1)))
    }

    /// 1-based elements in ascending order.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// True when no bit at or above `n` is set.
    pub const fn fits(self, n: usize) -> bool {
        n >= 32 || self.0 >> n == 0
    }
}

impl fmt::Display for SubsetWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over the 1-based elements of a [`SubsetWord`].
#[derive(Clone, Debug)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let low = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(low + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Elements {}

/// All `k`-subsets of an `n`-set in ascending word order.
pub fn k_subsets(n: usize, k: usize) -> Vec<SubsetWord> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![SubsetWord::EMPTY];
    }
    let mut out = Vec::new();
    let limit: u64 = 1u64 << n;
    // Gosper's hack.
    let mut w: u64 = (1u64 << k) - 1;
    while w < limit {
        out.push(SubsetWord(w as u32));
        let c = w & w.wrapping_neg();
        let r = w + c;
        w = (((r ^ w) >> 2) / c) | r;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements_round_trip() {
        let w = SubsetWord::from_elements([1, 3, 7]);
        assert_eq!(w.bits(), 0b100_0101);
        assert_eq!(w.elements().collect::<Vec<_>>(), vec![1, 3, 7]);
        assert_eq!(w.len(), 3);
        assert!(w.contains(3) && !w.contains(2));
        assert_eq!(w.to_string(), "{1,3,7}");
        assert!(w.fits(7) && !w.fits(6));
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(7, 3).len(), 35);
        assert_eq!(k_subsets(4, 0), vec![SubsetWord::EMPTY]);
        assert_eq!(k_subsets(3, 4).len(), 0);
        let all = k_subsets(5, 2);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        assert!(all.iter().all(|w| w.len() == 2 && w.fits(5)));
        assert_eq!(k_subsets(16, 16), vec![SubsetWord::full(16)]);
    }
}
