use std::fmt;
use std::ops::RangeInclusive;

use num_traits::{One, Pow};

use crate::bigcomb::{bell, factorial, partition_count, pow2, BigCount};
use crate::error::{Error, Result};

use super::formulas::Formula;

/// The six log-convexity inequalities `a_{k-1} a_{k+1} > a_k^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LogConvexItem {
    /// `|M_0^0| |M_0^2| > |M_0^1|^2`
    I,
    /// `|NI M_0^0| |NI M_0^2| > |NI M_0^1|^2`
    II,
    /// `|M_1^1| |M_1^3| > |M_1^2|^2`, only through [`slc_sufficient_check`]
    III,
    /// `|NI M_1^1| |NI M_1^3| > |NI M_1^2|^2`, only through [`slc_sufficient_check`]
    IV,
    /// `|M_2^{n-2}| |M_2^n| > |M_2^{n-1}|^2`
    V,
    /// `|NI M_2^{n-2}| |NI M_2^n| > |NI M_2^{n-1}|^2`
    VI,
}

impl LogConvexItem {
    pub const ALL: [LogConvexItem; 6] = [
        LogConvexItem::I,
        LogConvexItem::II,
        LogConvexItem::III,
        LogConvexItem::IV,
        LogConvexItem::V,
        LogConvexItem::VI,
    ];

    /// The `n` from which the inequality is claimed to hold.
    pub fn claimed_threshold(self) -> usize {
        match self {
            LogConvexItem::I => 4,
            LogConvexItem::II => 9,
            LogConvexItem::III => 94,
            LogConvexItem::IV => 67,
            LogConvexItem::V => 11,
            LogConvexItem::VI => 8,
        }
    }

    fn min_n(self) -> usize {
        match self {
            LogConvexItem::I | LogConvexItem::II => 2,
            LogConvexItem::III | LogConvexItem::IV => 3,
            LogConvexItem::V | LogConvexItem::VI => 5,
        }
    }

    pub fn parse(s: &str) -> Option<LogConvexItem> {
        Some(match s.to_ascii_lowercase().as_str() {
            "i" => LogConvexItem::I,
            "ii" => LogConvexItem::II,
            "iii" => LogConvexItem::III,
            "iv" => LogConvexItem::IV,
            "v" => LogConvexItem::V,
            "vi" => LogConvexItem::VI,
            _ => return None,
        })
    }
}

impl fmt::Display for LogConvexItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LogConvexItem::I => "i",
            LogConvexItem::II => "ii",
            LogConvexItem::III => "iii",
            LogConvexItem::IV => "iv",
            LogConvexItem::V => "v",
            LogConvexItem::VI => "vi",
        })
    }
}

/// Both sides `(a_{k-1} a_{k+1}, a_k^2)` of a closed-form item at `n`.
pub fn logconvex_sides(item: LogConvexItem, n: usize) -> Result<(BigCount, BigCount)> {
    if n < item.min_n() {
        return Err(Error::InvalidArgument(format!(
            "item ({item}) needs n >= {}, got {n}",
            item.min_n()
        )));
    }
    // The outer terms M_0^0 and M_2^n are both 1.
    let (outer, middle) = match item {
        LogConvexItem::I => (Formula::Rank2, Formula::Rank1),
        LogConvexItem::II => (Formula::NiRank2, Formula::NiRank1),
        LogConvexItem::V => (Formula::SimpleCorank2, Formula::SimpleCorank1),
        LogConvexItem::VI => (Formula::NiSimpleCorank2, Formula::NiSimpleCorank1),
        LogConvexItem::III | LogConvexItem::IV => {
            return Err(Error::InvalidArgument(format!(
                "item ({item}) has no closed form; use slc_sufficient_check"
            )))
        }
    };
    let m = middle.evaluate(n)?;
    Ok((outer.evaluate(n)?, &m * &m))
}

/// Exact verdict of a closed-form item at `n`. Items (iii) and (iv) are rejected.
pub fn logconvex_check(item: LogConvexItem, n: usize) -> Result<bool> {
    let (lhs, rhs) = logconvex_sides(item, n)?;
    Ok(lhs > rhs)
}

/// The sufficient condition used for items (iii) and (iv).
///
/// Labeled: `2^((n-1)(n-2)) > (b(n) - 1)^24`.
/// Isomorphism classes: `2^((n-1)(n-2)) > (n! (p(n) - 1)^2)^12`.
pub fn slc_sufficient_check(n: usize, iso: bool) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "sufficient check needs n >= 3, got {n}"
        )));
    }
    let lhs = pow2((n - 1) * (n - 2));
    let rhs: BigCount = if iso {
        let p = partition_count(n)? - BigCount::one();
        (factorial(n)? * &p * &p).pow(12u32)
    } else {
        (bell(n)? - BigCount::one()).pow(24u32)
    };
    Ok(lhs > rhs)
}

/// Verdict for any item: exact for closed-form items, sufficient condition for (iii)/(iv).
pub fn item_verdict(item: LogConvexItem, n: usize) -> Result<bool> {
    match item {
        LogConvexItem::III => slc_sufficient_check(n, false),
        LogConvexItem::IV => slc_sufficient_check(n, true),
        _ => logconvex_check(item, n),
    }
}

/// Smallest `n` in `range` from which `holds` is true for every larger `n` in the range.
fn scan(range: RangeInclusive<usize>, holds: impl Fn(usize) -> Result<bool>) -> Result<Option<usize>> {
    let mut first = None;
    for n in range.rev() {
        if !holds(n)? {
            break;
        }
        first = Some(n);
    }
    Ok(first)
}

/// Empirical threshold of a closed-form item over `range`.
pub fn logconvex_threshold(item: LogConvexItem, range: RangeInclusive<usize>) -> Result<Option<usize>> {
    scan(range, |n| logconvex_check(item, n))
}

/// Empirical threshold of the sufficient condition over `range`.
pub fn slc_sufficient_threshold(iso: bool, range: RangeInclusive<usize>) -> Result<Option<usize>> {
    scan(range, |n| slc_sufficient_check(n, iso))
}

/// One line of a threshold report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdRow {
    pub item: LogConvexItem,
    pub claimed: usize,
    pub empirical: Option<usize>,
    /// True when the value is from the sufficient condition, not the inequality itself.
    pub sufficient_only: bool,
}

impl ThresholdRow {
    pub fn agrees(&self) -> bool {
        self.empirical == Some(self.claimed)
    }
}

/// Claimed and computed thresholds for all six items, scanned up to `max_n`.
pub fn threshold_report(max_n: usize) -> Result<Vec<ThresholdRow>> {
    LogConvexItem::ALL
        .iter()
        .map(|&item| {
            let lo = item.min_n();
            let empirical = scan(lo..=max_n.max(lo), |n| item_verdict(item, n))?;
            Ok(ThresholdRow {
                item,
                claimed: item.claimed_threshold(),
                empirical,
                sufficient_only: matches!(item, LogConvexItem::III | LogConvexItem::IV),
            })
        })
        .collect()
}
