//! The erection tree.
//!
//! The root is the rank-0 matroid. Its children are the rank-1 matroids, one
//! per loop set, and every deeper node's children are its erections. Since a
//! matroid has exactly one truncation one rank down, every labeled matroid
//! sits at exactly one node.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::erection::search::hyperplane_families;
use crate::error::{Error, Result};
use crate::matroid::{down_closure, k_subsets, Matroid, SubsetWord};

/// Nodes above this rank are expanded sequentially.
const PARALLEL_DEPTH: usize = 4;
const PROGRESS_EVERY: u64 = 1 << 20;

/// A node stores its proper flat levels `F_0..F_{r-1}` as raw words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Node {
    pub(crate) levels: Vec<Vec<u32>>,
}

impl Node {
    pub(crate) fn root() -> Node {
        Node { levels: Vec::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.levels.len()
    }

    /// Largest `k <= r` with every rank-`(k-1)` flat of size `k - 1`, which is
    /// the largest `k` with every `k`-set independent.
    pub(crate) fn k_level(&self) -> usize {
        self.levels
            .iter()
            .enumerate()
            .take_while(|(j, level)| level.iter().all(|f| f.count_ones() as usize == *j))
            .count()
    }

    /// Whether every `k`-set is independent in this node and all its
    /// descendants. Only meaningful once `rank >= k`.
    pub(crate) fn keeps_level(&self, k: usize) -> bool {
        k == 0 || self.levels[k - 1].iter().all(|f| f.count_ones() as usize == k - 1)
    }

    pub(crate) fn children(&self, n: usize) -> Vec<Node> {
        match self.levels.last() {
            None => {
                let full = (1u32 << n) - 1;
                (0..full)
                    .map(|loops| Node {
                        levels: vec![vec![loops]],
                    })
                    .collect()
            }
            Some(top) => hyperplane_families(n, top)
                .into_iter()
                .map(|family| {
                    let mut levels = self.levels.clone();
                    levels.push(family);
                    Node { levels }
                })
                .collect(),
        }
    }

    /// Sorted basis words.
    pub(crate) fn bases(&self, n: usize) -> Vec<u32> {
        let r = self.rank();
        if r == 0 {
            return vec![0];
        }
        let under = down_closure(n, self.levels[r - 1].iter().copied());
        k_subsets(n, r)
            .into_iter()
            .map(|w| w.bits())
            .filter(|&w| !under[w as usize])
            .collect()
    }

    pub(crate) fn matroid(&self, n: usize) -> Matroid {
        Matroid::from_sorted_bases(n, self.bases(n).into_iter().map(SubsetWord::from_bits).collect())
    }
}

/// Per-subtree accumulator; merging must be associative.
pub(crate) trait Accumulator: Default + Send {
    fn merge(&mut self, other: Self);
}

impl<T: Send> Accumulator for Vec<T> {
    fn merge(&mut self, other: Self) {
        self.extend(other);
    }
}

impl Accumulator for u64 {
    fn merge(&mut self, other: Self) {
        *self += other;
    }
}

/// Depth-first walk bounded by rank, with optional class pruning and a node
/// budget shared across threads.
pub(crate) struct Walker {
    pub(crate) n: usize,
    pub(crate) max_rank: usize,
    /// Drop subtrees whose `min_k`-sets are not all independent.
    pub(crate) min_k: usize,
    pub(crate) budget: Option<u64>,
    pub(crate) nodes: AtomicU64,
}

impl Walker {
    pub(crate) fn new(n: usize, max_rank: usize, min_k: usize, budget: Option<u64>) -> Walker {
        Walker {
            n,
            max_rank,
            min_k,
            budget,
            nodes: AtomicU64::new(0),
        }
    }

    pub(crate) fn tick(&self) -> Result<()> {
        let seen = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(budget) = self.budget {
            if seen > budget {
                return Err(Error::BudgetExceeded { budget });
            }
        }
        if seen % PROGRESS_EVERY == 0 {
            log::info!("n = {}: {} nodes visited", self.n, seen);
        }
        Ok(())
    }

    pub(crate) fn admits(&self, node: &Node) -> bool {
        node.rank() < self.min_k || node.keeps_level(self.min_k)
    }

    /// Visits `node` and its subtree; results of parallel branches merge in
    /// tree order.
    pub(crate) fn walk<A, V>(&self, node: &Node, visit: &V) -> Result<A>
    where
        A: Accumulator,
        V: Fn(&Node, &mut A) + Sync,
    {
        self.tick()?;
        let mut acc = A::default();
        visit(node, &mut acc);
        if node.rank() >= self.max_rank {
            return Ok(acc);
        }
        let children: Vec<Node> = node.children(self.n).into_iter().filter(|c| self.admits(c)).collect();
        if node.rank() < PARALLEL_DEPTH {
            let sub = children
                .par_iter()
                .map(|c| self.walk(c, visit))
                .try_reduce(A::default, |mut a, b| {
                    a.merge(b);
                    Ok(a)
                })?;
            acc.merge(sub);
        } else {
            for c in &children {
                acc.merge(self.walk(c, visit)?);
            }
        }
        Ok(acc)
    }

    pub(crate) fn visited(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_children_are_loop_sets() {
        assert_eq!(Node::root().children(3).len(), 7);
        assert!(Node::root().children(0).is_empty());
        assert_eq!(Node::root().bases(3), vec![0]);
    }

    #[test]
    fn k_level_reads_flat_sizes() {
        let free3 = Node {
            levels: vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]],
        };
        assert_eq!(free3.k_level(), 3);
        assert_eq!(free3.matroid(3), Matroid::free(3));
        let with_loop = Node { levels: vec![vec![1]] };
        assert_eq!(with_loop.k_level(), 0);
        let parallel = Node {
            levels: vec![vec![0], vec![3, 4, 8]],
        };
        assert_eq!(parallel.k_level(), 1);
        assert!(!parallel.keeps_level(2));
    }

    #[test]
    fn walk_counts_all_nodes() {
        // Labeled matroids on three elements: 1 + 7 + 7 + 1.
        let w = Walker::new(3, 3, 0, None);
        let total: u64 = w.walk(&Node::root(), &|_, acc: &mut u64| *acc += 1).unwrap();
        assert_eq!(total, 16);
        let w = Walker::new(3, 3, 0, Some(5));
        assert!(matches!(
            w.walk(&Node::root(), &|_, acc: &mut u64| *acc += 1),
            Err(Error::BudgetExceeded { budget: 5 })
        ));
    }
}
