//! Exhaustive generation of matroids on up to eight elements, isomorphism
//! rejection, and the published count tables.
//!
//! Generation walks the erection tree: every matroid is reached from its
//! truncation by adding one level of flats that satisfies the
//! cover-partition axiom. Output order and all counts are independent of the
//! worker count.

mod canonical;
mod census;
mod crossval;
mod expected;
mod table;
pub(crate) mod tree;

pub use canonical::{automorphism_count_bruteforce, canonical_form, canonical_form_bruteforce, CanonicalForm};
pub use census::{census, Census};
pub use crossval::{cross_validate, CrossValidation, IdentityCheck, Relation};
pub use expected::{expected_count, expected_total, EXPECTED_MAX_N};
pub use table::{stored_classes, CountTable, Iso, Mismatch, TableKind};

use std::path::PathBuf;

use crate::bigcomb::BigCount;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use canonical::canonical_from_parts;
use tree::{Node, Walker};

/// Largest ground set the enumerator accepts.
pub const MAX_ENUM_N: usize = 8;
/// Largest ground set built without the long-run flag.
pub const DEFAULT_MAX_N: usize = 7;

/// Resource and parallelism settings shared by every enumeration entry point.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumConfig {
    /// Worker threads; 0 uses the rayon default.
    pub workers: usize,
    /// Abort with [`Error::BudgetExceeded`] after this many tree nodes.
    pub node_budget: Option<u64>,
    /// Allow the full eight-element enumeration.
    pub long_run: bool,
    /// Append-only progress file for resumable censuses.
    pub checkpoint: Option<PathBuf>,
}

impl EnumConfig {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.node_budget = Some(budget);
        self
    }

    pub fn with_long_run(mut self, long_run: bool) -> Self {
        self.long_run = long_run;
        self
    }

    pub fn with_checkpoint(mut self, path: impl Into<PathBuf>) -> Self {
        self.checkpoint = Some(path.into());
        self
    }

    /// Rejects ground sets past the cap, and rank-4-and-up work on eight
    /// elements unless the long-run flag is set.
    pub(crate) fn check_size(&self, n: usize, max_rank: usize) -> Result<()> {
        if n > MAX_ENUM_N {
            return Err(Error::InputTooLarge {
                what: "enumeration ground set",
                value: n,
                max: MAX_ENUM_N,
            });
        }
        if n > DEFAULT_MAX_N && max_rank >= 4 && !self.long_run {
            return Err(Error::InvalidArgument(format!(
                "n = {n} up to rank {max_rank} is a long run; enable the long-run flag"
            )));
        }
        Ok(())
    }

    pub(crate) fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> Result<R> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        Ok(pool.install(f))
    }
}

fn check_args(n: usize, r: usize, k: usize) -> Result<()> {
    if k > r || r > n {
        return Err(Error::InvalidArgument(format!(
            "need k <= r <= n, got n = {n}, r = {r}, k = {k}"
        )));
    }
    Ok(())
}

fn fold<A, V>(n: usize, r: usize, k: usize, config: &EnumConfig, visit: V) -> Result<A>
where
    A: tree::Accumulator,
    V: Fn(&Node, &mut A) + Sync + Send,
{
    check_args(n, r, k)?;
    config.check_size(n, r)?;
    config.install(|| {
        let walker = Walker::new(n, r, k, config.node_budget);
        walker.walk(&Node::root(), &|node: &Node, acc: &mut A| {
            if node.rank() == r {
                visit(node, acc);
            }
        })
    })?
}

/// Every matroid of rank `r` on `{1..n}` whose `k`-sets are all independent,
/// in tree order.
pub fn enumerate_matroids(n: usize, r: usize, k: usize, config: &EnumConfig) -> Result<Vec<Matroid>> {
    fold(n, r, k, config, |node, acc: &mut Vec<Matroid>| {
        acc.push(node.matroid(n))
    })
}

/// Streams the same matroids as [`enumerate_matroids`] into `hook` without
/// collecting them. The hook may run on several threads at once.
pub fn visit_matroids<F>(n: usize, r: usize, k: usize, config: &EnumConfig, hook: F) -> Result<()>
where
    F: Fn(&Matroid) + Sync + Send,
{
    fold(n, r, k, config, |node, _: &mut u64| hook(&node.matroid(n))).map(|_| ())
}

pub fn count_labeled(n: usize, r: usize, k: usize, config: &EnumConfig) -> Result<BigCount> {
    fold(n, r, k, config, |_, acc: &mut u64| *acc += 1).map(BigCount::from)
}

pub fn count_nonisomorphic(n: usize, r: usize, k: usize, config: &EnumConfig) -> Result<BigCount> {
    let forms: Vec<CanonicalForm> = fold(n, r, k, config, |node, acc: &mut Vec<CanonicalForm>| {
        acc.push(canonical_from_parts(n, r, &node.bases(n), &node.levels))
    })?;
    let distinct: std::collections::BTreeSet<_> = forms.into_iter().collect();
    Ok(BigCount::from(distinct.len()))
}

/// All stored counts for `n <= max_n`.
pub fn build_tables(max_n: usize, config: &EnumConfig) -> Result<CountTable> {
    let mut table = CountTable::new();
    for n in 0..=max_n {
        let c = census(n, config)?;
        log::info!("n = {n}: {} labeled matroids", c.total_labeled());
        table.add_census(&c);
    }
    Ok(table)
}
