use std::fmt;

use num_traits::One;

use crate::bigcomb::{bell, binomial, partition_count, partition_prefix_sum, pow2, BigCount};
use crate::enumerate::{expected_count, CountTable, Iso, TableKind, EXPECTED_MAX_N};
use crate::error::{Error, Result};

/// The closed forms for low ranks and for ranks `n - 1`, `n - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    /// `NI M_0^1 = n`
    NiRank1,
    /// `NI M_0^2 = p(1) + ... + p(n) - n`
    NiRank2,
    /// `M_0^1 = 2^n - 1`
    Rank1,
    /// `M_0^2 = b(n+1) - 2^n`
    Rank2,
    /// `M_1^2 = b(n) - 1`
    LooplessRank2,
    /// `NI M_1^2 = p(n) - 1`
    NiLooplessRank2,
    /// `M_2^{n-1} = 2^n - 1 - C(n+1, 2)`
    SimpleCorank1,
    /// `NI M_2^{n-1} = n - 2`
    NiSimpleCorank1,
    /// `M_2^{n-2} = b(n+1) + C(n+3,4) + 2C(n+1,4) - 2^n - C(n+1,2) 2^{n-1}`
    SimpleCorank2,
    /// `NI M_2^{n-2} = p(1) + ... + p(n) + 6 - 4n`
    NiSimpleCorank2,
}

impl Formula {
    pub const LOW_RANK: [Formula; 6] = [
        Formula::NiRank1,
        Formula::NiRank2,
        Formula::Rank1,
        Formula::Rank2,
        Formula::LooplessRank2,
        Formula::NiLooplessRank2,
    ];
    pub const HIGH_RANK: [Formula; 4] = [
        Formula::SimpleCorank1,
        Formula::NiSimpleCorank1,
        Formula::SimpleCorank2,
        Formula::NiSimpleCorank2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Formula::NiRank1 => "thm1.ni_m0_r1",
            Formula::NiRank2 => "thm1.ni_m0_r2",
            Formula::Rank1 => "thm1.m0_r1",
            Formula::Rank2 => "thm1.m0_r2",
            Formula::LooplessRank2 => "thm1.m1_r2",
            Formula::NiLooplessRank2 => "thm1.ni_m1_r2",
            Formula::SimpleCorank1 => "lemma2.m2_rn-1",
            Formula::NiSimpleCorank1 => "lemma2.ni_m2_rn-1",
            Formula::SimpleCorank2 => "lemma2.m2_rn-2",
            Formula::NiSimpleCorank2 => "lemma2.ni_m2_rn-2",
        }
    }

    /// Smallest `n` the formula is stated for.
    pub fn min_n(self) -> usize {
        if Formula::LOW_RANK.contains(&self) {
            2
        } else {
            5
        }
    }

    /// The `(r, k, iso)` cell the formula counts.
    pub fn cell(self, n: usize) -> (usize, usize, Iso) {
        use Iso::*;
        match self {
            Formula::NiRank1 => (1, 0, Nonisomorphic),
            Formula::NiRank2 => (2, 0, Nonisomorphic),
            Formula::Rank1 => (1, 0, Labeled),
            Formula::Rank2 => (2, 0, Labeled),
            Formula::LooplessRank2 => (2, 1, Labeled),
            Formula::NiLooplessRank2 => (2, 1, Nonisomorphic),
            Formula::SimpleCorank1 => (n - 1, 2, Labeled),
            Formula::NiSimpleCorank1 => (n - 1, 2, Nonisomorphic),
            Formula::SimpleCorank2 => (n - 2, 2, Labeled),
            Formula::NiSimpleCorank2 => (n - 2, 2, Nonisomorphic),
        }
    }

    /// The formula's value at `n`.
    pub fn evaluate(self, n: usize) -> Result<BigCount> {
        if n < self.min_n() {
            return Err(Error::InvalidArgument(format!(
                "{} needs n >= {}, got {n}",
                self.id(),
                self.min_n()
            )));
        }
        let big = |x: usize| BigCount::from(x);
        let c = |a: usize, b: i64| binomial(a as u64, b);
        Ok(match self {
            Formula::NiRank1 => big(n),
            Formula::NiRank2 => partition_prefix_sum(n)? - big(n),
            Formula::Rank1 => pow2(n) - BigCount::one(),
            Formula::Rank2 => bell(n + 1)? - pow2(n),
            Formula::LooplessRank2 => bell(n)? - BigCount::one(),
            Formula::NiLooplessRank2 => partition_count(n)? - BigCount::one(),
            Formula::SimpleCorank1 => pow2(n) - BigCount::one() - c(n + 1, 2),
            Formula::NiSimpleCorank1 => big(n - 2),
            Formula::SimpleCorank2 => {
                bell(n + 1)? + c(n + 3, 4) + big(2) * c(n + 1, 4) - pow2(n) - c(n + 1, 2) * pow2(n - 1)
            }
            Formula::NiSimpleCorank2 => partition_prefix_sum(n)? + big(6) - big(4 * n),
        })
    }

    /// The published table entry for this formula at `n`, if `n <= 8`.
    pub fn published(self, n: usize) -> Option<BigCount> {
        let (r, k, iso) = self.cell(n);
        let kind = match (k, iso) {
            (0, Iso::Labeled) => TableKind::AllLabeled,
            (0, Iso::Nonisomorphic) => TableKind::AllNoniso,
            (1, Iso::Labeled) => TableKind::LooplessLabeled,
            (1, Iso::Nonisomorphic) => TableKind::LooplessNoniso,
            (_, Iso::Labeled) => TableKind::SimpleLabeled,
            (_, Iso::Nonisomorphic) => TableKind::SimpleNoniso,
        };
        (n <= EXPECTED_MAX_N)
            .then(|| expected_count(kind, n, r))
            .flatten()
            .map(BigCount::from)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Where a comparison value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Enumerated,
    Published,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Enumerated => "enumerated",
            Source::Published => "published",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormRow {
    pub formula: Formula,
    pub predicted: BigCount,
    pub observed: Option<(BigCount, Source)>,
}

impl ClosedFormRow {
    /// `None` until a comparison value is attached.
    pub fn matches(&self) -> Option<bool> {
        self.observed.as_ref().map(|(v, _)| *v == self.predicted)
    }
}

/// Predicted values at one `n`, optionally paired with counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormReport {
    pub n: usize,
    pub rows: Vec<ClosedFormRow>,
}

impl ClosedFormReport {
    fn new(n: usize, formulas: &[Formula]) -> Result<ClosedFormReport> {
        let rows = formulas
            .iter()
            .map(|&f| {
                Ok(ClosedFormRow {
                    formula: f,
                    predicted: f.evaluate(n)?,
                    observed: None,
                })
            })
            .collect::<Result<_>>()?;
        Ok(ClosedFormReport { n, rows })
    }

    /// Attaches enumerated counts from `table` where it has them.
    pub fn attach_table(&mut self, table: &CountTable) {
        for row in &mut self.rows {
            let (r, k, iso) = row.formula.cell(self.n);
            if let Some(v) = table.get(self.n, r, k, iso) {
                row.observed = Some((v.clone(), Source::Enumerated));
            }
        }
    }

    /// Attaches published values to rows that have nothing yet.
    pub fn attach_published(&mut self) {
        for row in &mut self.rows {
            if row.observed.is_none() {
                row.observed = row.formula.published(self.n).map(|v| (v, Source::Published));
            }
        }
    }

    /// True iff every row has a value and all match.
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches() == Some(true))
    }
}

/// All six low-rank closed forms at `n >= 2`.
pub fn thm1_values(n: usize) -> Result<ClosedFormReport> {
    ClosedFormReport::new(n, &Formula::LOW_RANK)
}

/// The four rank `n - 1` and `n - 2` simple-matroid closed forms at `n >= 5`.
pub fn lemma2_values(n: usize) -> Result<ClosedFormReport> {
    ClosedFormReport::new(n, &Formula::HIGH_RANK)
}
