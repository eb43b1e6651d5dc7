//! Canonical forms for isomorphism rejection.
//!
//! A canonical form is the least sorted basis-word list over the relabelings
//! reached by individualization-refinement: elements are colored by their
//! incidence with the flats, colors are refined until stable, and ties are
//! broken by individualizing each element of the first non-singleton cell in
//! turn. Every step depends only on the isomorphism class, so equal codes
//! mean isomorphic matroids and vice versa. Automorphisms found along the way
//! prune sibling branches that lie in one orbit.
//!
//! [`canonical_form_bruteforce`] minimizes over all `n!` relabelings and is
//! kept as a test oracle for small ground sets.

use crate::matroid::{Matroid, SubsetWord};

/// Isomorphism-class fingerprint of a matroid.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    rank: u8,
    code: Vec<u32>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    /// Sorted basis words of the canonical relabeling.
    pub fn code(&self) -> &[u32] {
        &self.code
    }

    pub(crate) fn from_code(n: usize, rank: usize, code: Vec<u32>) -> CanonicalForm {
        CanonicalForm {
            n: n as u8,
            rank: rank as u8,
            code,
        }
    }

    /// The canonically labeled representative.
    pub fn to_matroid(&self) -> Matroid {
        Matroid::from_sorted_bases(self.n(), self.code.iter().map(|&w| SubsetWord::from_bits(w)).collect())
    }
}

/// Canonical form of `m`.
pub fn canonical_form(m: &Matroid) -> CanonicalForm {
    let lattice = m.flat_lattice();
    let levels: Vec<Vec<u32>> = lattice.levels()[..m.rank()]
        .iter()
        .map(|l| l.iter().map(|w| w.bits()).collect())
        .collect();
    let bases: Vec<u32> = m.bases().iter().map(|b| b.bits()).collect();
    canonical_from_parts(m.n(), m.rank(), &bases, &levels)
}

/// Canonical form from raw words: `levels` are the proper flat levels
/// `F_0..F_{r-1}`.
pub(crate) fn canonical_from_parts(n: usize, rank: usize, bases: &[u32], levels: &[Vec<u32>]) -> CanonicalForm {
    let mut search = Search {
        n,
        bases,
        levels,
        best: None,
        automorphisms: Vec::new(),
    };
    let colors = search.refine(vec![0; n]);
    search.descend(colors, &mut Vec::new());
    let (code, _) = search.best.expect("search reaches at least one leaf");
    CanonicalForm {
        n: n as u8,
        rank: rank as u8,
        code,
    }
}

struct Search<'a> {
    n: usize,
    bases: &'a [u32],
    levels: &'a [Vec<u32>],
    best: Option<(Vec<u32>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

fn mix(mut x: u64) -> u64 {
    // splitmix64 finalizer
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn dense_ranks<T: Ord + Clone>(keys: &[T]) -> (Vec<u32>, usize) {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let ranks = keys.iter().map(|k| sorted.binary_search(k).unwrap() as u32).collect();
    (ranks, sorted.len())
}

impl Search<'_> {
    /// Colors elements by their flat incidences until the partition is stable.
    ///
    /// Flat and element signatures are multiset hashes of invariant data, so
    /// a collision can only merge cells, never break equivariance.
    fn refine(&self, colors: Vec<u32>) -> Vec<u32> {
        let n = self.n;
        let (mut colors, mut count) = dense_ranks(&colors);
        let mut element_hash = vec![0u64; n];
        loop {
            element_hash.iter_mut().for_each(|h| *h = 0);
            for (lvl, level) in self.levels.iter().enumerate() {
                for &f in level {
                    let mut h = mix(lvl as u64 + 1);
                    let mut rest = f;
                    while rest != 0 {
                        let e = rest.trailing_zeros() as usize;
                        h = h.wrapping_add(mix(u64::from(colors[e]) ^ 0x5bd1_e995));
                        rest &= rest - 1;
                    }
                    let h = mix(h);
                    let mut rest = f;
                    while rest != 0 {
                        let e = rest.trailing_zeros() as usize;
                        element_hash[e] = element_hash[e].wrapping_add(h);
                        rest &= rest - 1;
                    }
                }
            }
            let keys: Vec<(u32, u64)> = (0..n).map(|e| (colors[e], element_hash[e])).collect();
            let (next, next_count) = dense_ranks(&keys);
            colors = next;
            if next_count == count {
                return colors;
            }
            count = next_count;
        }
    }

    fn leaf_code(&self, colors: &[u32]) -> Vec<u32> {
        let mut code: Vec<u32> = self
            .bases
            .iter()
            .map(|&b| {
                let mut out = 0u32;
                let mut rest = b;
                while rest != 0 {
                    let e = rest.trailing_zeros() as usize;
                    out |= 1 << colors[e];
                    rest &= rest - 1;
                }
                out
            })
            .collect();
        code.sort_unstable();
        code
    }

    fn descend(&mut self, colors: Vec<u32>, prefix: &mut Vec<usize>) {
        let n = self.n;
        let mut cell_sizes = vec![0usize; n.max(1)];
        for &c in &colors {
            cell_sizes[c as usize] += 1;
        }
        let Some(target) = (0..n).find(|&c| cell_sizes[c] > 1) else {
            self.leaf(&colors);
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&e| colors[e] as usize == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let split: Vec<u32> = (0..n)
                .map(|e| colors[e] * 2 + u32::from(colors[e] as usize == target && e != v))
                .collect();
            let refined = self.refine(split);
            prefix.push(v);
            self.descend(refined, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let code = self.leaf_code(colors);
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        match &self.best {
            None => self.best = Some((code, perm)),
            Some((best_code, best_perm)) => {
                if code == *best_code {
                    // best_perm^-1 . perm maps the matroid onto itself.
                    let mut inverse = vec![0usize; self.n];
                    for (e, &p) in best_perm.iter().enumerate() {
                        inverse[p] = e;
                    }
                    let auto: Vec<usize> = perm.iter().map(|&p| inverse[p]).collect();
                    if auto.iter().enumerate().any(|(i, &j)| i != j) {
                        self.automorphisms.push(auto);
                    }
                } else if code < *best_code {
                    self.best = Some((code, perm));
                }
            }
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the known
    /// automorphisms that fix the current prefix pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        let mut any = false;
        for g in &self.automorphisms {
            if prefix.iter().all(|&p| g[p] == p) {
                any = true;
                for x in 0..self.n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, g[x]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }
}

fn relabeled_code(bases: &[u32], perm: &[usize]) -> Vec<u32> {
    let mut code: Vec<u32> = bases
        .iter()
        .map(|&b| {
            let mut out = 0u32;
            for (e, &p) in perm.iter().enumerate() {
                if b >> e & 1 == 1 {
                    out |= 1 << p;
                }
            }
            out
        })
        .collect();
    code.sort_unstable();
    code
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    // Heap's algorithm.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Least sorted basis-word list over all `n!` relabelings.
pub fn canonical_form_bruteforce(m: &Matroid) -> CanonicalForm {
    let bases: Vec<u32> = m.bases().iter().map(|b| b.bits()).collect();
    let mut best: Option<Vec<u32>> = None;
    for_each_permutation(m.n(), |perm| {
        let code = relabeled_code(&bases, perm);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    });
    CanonicalForm {
        n: m.n() as u8,
        rank: m.rank() as u8,
        code: best.unwrap(),
    }
}

/// `|Aut(M)|` by checking all `n!` relabelings.
pub fn automorphism_count_bruteforce(m: &Matroid) -> u64 {
    let bases: Vec<u32> = m.bases().iter().map(|b| b.bits()).collect();
    let mut count = 0;
    for_each_permutation(m.n(), |perm| {
        if relabeled_code(&bases, perm) == bases {
            count += 1;
        }
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::k_subsets;

    #[test]
    fn uniform_is_relabeling_invariant() {
        let u = Matroid::uniform(2, 4);
        let f = canonical_form(&u);
        assert_eq!(f, canonical_form(&u.relabel(&[3, 1, 4, 2])));
        assert_eq!(f.to_matroid(), u);
    }

    #[test]
    fn fano_relabelings_agree() {
        let fano = Matroid::fano();
        let base = canonical_form(&fano);
        for perm in [[2, 3, 1, 5, 4, 7, 6], [7, 6, 5, 4, 3, 2, 1], [1, 2, 4, 3, 5, 7, 6]] {
            assert_eq!(canonical_form(&fano.relabel(&perm)), base);
        }
        assert_eq!(automorphism_count_bruteforce(&fano), 168);
        // Non-Fano: drop one line from the dependent triples.
        let nonfano_bases: Vec<_> = k_subsets(7, 3)
            .into_iter()
            .filter(|w| *w == SubsetWord::from_elements([3, 5, 6]) || !fano_line(*w))
            .collect();
        let nonfano = Matroid::new(7, nonfano_bases).unwrap();
        assert_ne!(canonical_form(&nonfano), base);
    }

    fn fano_line(w: SubsetWord) -> bool {
        w.elements().fold(0, |acc, e| acc ^ e) == 0
    }

    #[test]
    fn permutations_are_exhaustive() {
        let mut seen = std::collections::HashSet::new();
        for_each_permutation(5, |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 120);
    }

    #[test]
    fn brute_force_agrees_on_small_cases() {
        let a = Matroid::new(
            4,
            vec![SubsetWord::from_elements([1, 3]), SubsetWord::from_elements([2, 3])],
        )
        .unwrap();
        let b = a.relabel(&[4, 2, 3, 1]);
        assert_eq!(canonical_form_bruteforce(&a), canonical_form_bruteforce(&b));
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_eq!(automorphism_count_bruteforce(&Matroid::uniform(2, 4)), 24);
    }
}
