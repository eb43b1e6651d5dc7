//! Exhaustive search for the hyperplane families that can sit on top of a
//! given level of flats.
//!
//! Given the current top proper level `lower` (the rank-`(r-1)` flats of a
//! rank-`r` matroid), a family `H` of proper subsets is a valid new level iff
//! every one-element extension `C + x` (`C` in `lower`) lies in some member of
//! `H`, and every pairwise intersection of members lies inside a member of
//! `lower`. Those two conditions are exactly the cover-partition axiom for the
//! new level. Each family is produced once: the member covering the smallest
//! uncovered extension is chosen at every step.

use crate::matroid::down_closure;

pub(crate) struct HyperplaneSearch {
    full: u32,
    lower: Vec<u32>,
    expand: Vec<u32>,
    under_lower: Vec<bool>,
    /// Flats of the matroid being erected: intersections of `lower` members.
    flat: Vec<bool>,
    covered: Vec<bool>,
    chosen: Vec<u32>,
}

/// Sorted, deduplicated one-element extensions of `family` inside `{0..n}`.
pub(crate) fn expand_words(n: usize, family: &[u32]) -> Vec<u32> {
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut out = Vec::with_capacity(family.len() * n);
    for &a in family {
        let mut outside = full & !a;
        while outside != 0 {
            let low = outside & outside.wrapping_neg();
            out.push(a | low);
            outside ^= low;
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

impl HyperplaneSearch {
    pub(crate) fn new(n: usize, lower: &[u32]) -> Self {
        let expand = expand_words(n, lower);
        let covered = vec![false; expand.len()];
        HyperplaneSearch {
            full: (1u32 << n) - 1,
            lower: lower.to_vec(),
            under_lower: down_closure(n, lower.iter().copied()),
            flat: intersection_closure(n, lower),
            expand,
            covered,
            chosen: Vec::new(),
        }
    }

    /// Calls `visit` once per valid family, members in discovery order.
    pub(crate) fn run(&mut self, visit: &mut dyn FnMut(&[u32])) {
        self.step(0, visit);
    }

    fn step(&mut self, from: usize, visit: &mut dyn FnMut(&[u32])) {
        let Some(i) = (from..self.expand.len()).find(|&j| !self.covered[j]) else {
            if !self.chosen.is_empty() {
                visit(&self.chosen);
            }
            return;
        };
        let seed = self.expand[i];
        let free = self.full & !seed;
        let mut sub = 0u32;
        loop {
            let candidate = seed | sub;
            if candidate != self.full && self.meets_flats(candidate) && self.compatible(candidate) {
                let mut newly = Vec::new();
                for j in i..self.expand.len() {
                    if !self.covered[j] && self.expand[j] & !candidate == 0 {
                        self.covered[j] = true;
                        newly.push(j);
                    }
                }
                self.chosen.push(candidate);
                self.step(i + 1, visit);
                self.chosen.pop();
                for j in newly {
                    self.covered[j] = false;
                }
            }
            if sub == free {
                break;
            }
            sub = (sub.wrapping_sub(free)) & free;
        }
    }

    /// A new hyperplane meets every old flat in a flat.
    fn meets_flats(&self, candidate: u32) -> bool {
        self.lower.iter().all(|&f| self.flat[(candidate & f) as usize])
    }

    fn compatible(&self, candidate: u32) -> bool {
        self.chosen.iter().all(|&y| self.under_lower[(candidate & y) as usize])
    }
}

fn intersection_closure(n: usize, lower: &[u32]) -> Vec<bool> {
    let mut flat = vec![false; 1 << n];
    let mut stack: Vec<u32> = lower.to_vec();
    for &f in lower {
        flat[f as usize] = true;
    }
    while let Some(a) = stack.pop() {
        for &f in lower {
            let meet = (a & f) as usize;
            if !flat[meet] {
                flat[meet] = true;
                stack.push(meet as u32);
            }
        }
    }
    flat
}

/// All valid new levels over `lower`, each sorted, in discovery order.
pub(crate) fn hyperplane_families(n: usize, lower: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    HyperplaneSearch::new(n, lower).run(&mut |family| {
        let mut f = family.to_vec();
        f.sort_unstable();
        out.push(f);
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bell(n: usize) -> usize {
        // Small Bell triangle for the oracle.
        let mut row = vec![1usize];
        for _ in 0..n {
            let mut next = vec![*row.last().unwrap()];
            for v in &row {
                next.push(next.last().unwrap() + v);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn rank_one_erections_are_set_partitions() {
        // Over F_0 = {empty}, new levels are partitions with at least two blocks.
        for n in 1..=6 {
            assert_eq!(hyperplane_families(n, &[0]).len(), bell(n) - 1, "n = {n}");
        }
    }

    #[test]
    fn free_matroid_has_no_erection() {
        let lower: Vec<u32> = (0..4).map(|i| 0b1111 & !(1 << i)).collect();
        assert!(hyperplane_families(4, &lower).is_empty());
    }

    #[test]
    fn expand_example() {
        assert_eq!(expand_words(3, &[0b001, 0b010]), vec![0b011, 0b101, 0b110]);
        assert!(expand_words(3, &[0b111]).is_empty());
    }
}
