use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::bigcomb::BigCount;

use super::census::Census;
use super::expected::{expected_count, EXPECTED_MAX_N};

/// Whether a count is over labeled matroids or isomorphism classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Iso {
    Labeled,
    Nonisomorphic,
}

impl Iso {
    pub fn label(self) -> &'static str {
        match self {
            Iso::Labeled => "labeled",
            Iso::Nonisomorphic => "nonisomorphic",
        }
    }
}

impl fmt::Display for Iso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The eight published tables.
///
/// The paving tables start at rank 2 and their rank-2 row counts simple
/// paving matroids, so their class is `max(2, r - 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TableKind {
    AllLabeled,
    AllNoniso,
    LooplessLabeled,
    LooplessNoniso,
    SimpleLabeled,
    SimpleNoniso,
    PavingLabeled,
    PavingNoniso,
}

impl TableKind {
    pub const ALL: [TableKind; 8] = [
        TableKind::AllLabeled,
        TableKind::AllNoniso,
        TableKind::LooplessLabeled,
        TableKind::LooplessNoniso,
        TableKind::SimpleLabeled,
        TableKind::SimpleNoniso,
        TableKind::PavingLabeled,
        TableKind::PavingNoniso,
    ];

    pub fn iso(self) -> Iso {
        match self {
            TableKind::AllLabeled
            | TableKind::LooplessLabeled
            | TableKind::SimpleLabeled
            | TableKind::PavingLabeled => Iso::Labeled,
            _ => Iso::Nonisomorphic,
        }
    }

    /// Independence class used for rank `r`.
    pub fn class(self, r: usize) -> usize {
        match self {
            TableKind::AllLabeled | TableKind::AllNoniso => 0,
            TableKind::LooplessLabeled | TableKind::LooplessNoniso => 1,
            TableKind::SimpleLabeled | TableKind::SimpleNoniso => 2,
            TableKind::PavingLabeled | TableKind::PavingNoniso => r.saturating_sub(1).max(2),
        }
    }

    /// Smallest rank (and ground-set size) the table lists.
    pub fn first_rank(self) -> usize {
        match self {
            TableKind::AllLabeled | TableKind::AllNoniso => 0,
            TableKind::LooplessLabeled | TableKind::LooplessNoniso => 1,
            _ => 2,
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            TableKind::AllLabeled => "All matroids, labeled (k = 0)",
            TableKind::AllNoniso => "All matroids, non-isomorphic (k = 0)",
            TableKind::LooplessLabeled => "Loopless matroids, labeled (k = 1)",
            TableKind::LooplessNoniso => "Loopless matroids, non-isomorphic (k = 1)",
            TableKind::SimpleLabeled => "Simple matroids, labeled (k = 2)",
            TableKind::SimpleNoniso => "Simple matroids, non-isomorphic (k = 2)",
            TableKind::PavingLabeled => "Paving matroids, labeled (k = r - 1)",
            TableKind::PavingNoniso => "Paving matroids, non-isomorphic (k = r - 1)",
        }
    }
}

/// Exact counts keyed by `(n, r, k, iso)`, where class `k` means every
/// `k`-set is independent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    entries: BTreeMap<(usize, usize, usize, Iso), BigCount>,
}

/// One disagreement with the published tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub kind: TableKind,
    pub n: usize,
    pub r: usize,
    pub expected: u64,
    pub actual: Option<BigCount>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let actual = self.actual.as_ref().map_or("missing".to_string(), |a| a.to_string());
        write!(
            f,
            "{}: n = {}, r = {}: expected {}, got {}",
            self.kind.title(),
            self.n,
            self.r,
            self.expected,
            actual
        )
    }
}

/// Classes stored for rank `r`.
pub fn stored_classes(r: usize) -> Vec<usize> {
    let mut ks: Vec<usize> = [0, 1, 2, r.saturating_sub(1), r]
        .into_iter()
        .filter(|&k| k <= r)
        .collect();
    ks.sort_unstable();
    ks.dedup();
    ks
}

impl CountTable {
    pub fn new() -> CountTable {
        CountTable::default()
    }

    pub fn insert(&mut self, n: usize, r: usize, k: usize, iso: Iso, count: BigCount) {
        self.entries.insert((n, r, k, iso), count);
    }

    pub fn get(&self, n: usize, r: usize, k: usize, iso: Iso) -> Option<&BigCount> {
        self.entries.get(&(n, r, k, iso))
    }

    /// Entries in `(n, r, k, iso)` order.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize, Iso), &BigCount)> {
        self.entries.iter()
    }

    pub fn max_n(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    pub fn contains_n(&self, n: usize) -> bool {
        self.entries.keys().any(|k| k.0 == n)
    }

    /// Records every stored class of one ground-set size.
    pub fn add_census(&mut self, census: &Census) {
        let n = census.n();
        for r in 0..=n {
            for k in stored_classes(r) {
                self.insert(n, r, k, Iso::Labeled, BigCount::from(census.labeled(r, k)));
                self.insert(n, r, k, Iso::Nonisomorphic, BigCount::from(census.nonisomorphic(r, k)));
            }
        }
    }

    pub fn cell(&self, kind: TableKind, n: usize, r: usize) -> Option<&BigCount> {
        if r < kind.first_rank() || r > n {
            return None;
        }
        self.get(n, r, kind.class(r), kind.iso())
    }

    /// Column total of `kind`, if every cell of the column is present.
    pub fn total(&self, kind: TableKind, n: usize) -> Option<BigCount> {
        if n < kind.first_rank() {
            return None;
        }
        (kind.first_rank()..=n).map(|r| self.cell(kind, n, r).cloned()).sum()
    }

    /// Cells for `n <= max_n` that differ from the published tables.
    pub fn mismatches(&self, max_n: usize) -> Vec<Mismatch> {
        let mut out = Vec::new();
        for kind in TableKind::ALL {
            for n in kind.first_rank()..=max_n.min(EXPECTED_MAX_N) {
                for r in kind.first_rank()..=n {
                    let expected = expected_count(kind, n, r).expect("published cell");
                    let actual = self.cell(kind, n, r);
                    if actual != Some(&BigCount::from(expected)) {
                        out.push(Mismatch {
                            kind,
                            n,
                            r,
                            expected,
                            actual: actual.cloned(),
                        });
                    }
                }
            }
        }
        out
    }

    /// `n,r,k,iso,count` rows in key order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,r,k,iso,count\n");
        for ((n, r, k, iso), count) in &self.entries {
            writeln!(out, "{n},{r},{k},{iso},{count}").unwrap();
        }
        out
    }

    /// One table in the published layout: rows `r`, columns `n`, then totals.
    pub fn to_markdown_table(&self, kind: TableKind) -> String {
        let Some(max_n) = self.max_n() else {
            return String::new();
        };
        let first = kind.first_rank();
        if max_n < first {
            return String::new();
        }
        let ns: Vec<usize> = (first..=max_n).filter(|&n| self.contains_n(n)).collect();
        let mut out = format!("### {}\n\n| r \\ n |", kind.title());
        for n in &ns {
            write!(out, " {n} |").unwrap();
        }
        out.push_str("\n|---|");
        out.push_str(&"---:|".repeat(ns.len()));
        out.push('\n');
        for r in first..=max_n {
            write!(out, "| {r} |").unwrap();
            for &n in &ns {
                match self.cell(kind, n, r) {
                    Some(c) => write!(out, " {c} |").unwrap(),
                    None => out.push_str("  |"),
                }
            }
            out.push('\n');
        }
        out.push_str("| Total |");
        for &n in &ns {
            match self.total(kind, n) {
                Some(t) => write!(out, " {t} |").unwrap(),
                None => out.push_str("  |"),
            }
        }
        out.push('\n');
        out
    }

    /// All eight tables.
    pub fn to_markdown(&self) -> String {
        TableKind::ALL
            .iter()
            .map(|&k| self.to_markdown_table(k))
            .collect::<Vec<_>>()
            .join("\n")
    }
}
