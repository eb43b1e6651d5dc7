use std::fmt;

use crate::bigcomb::BigCount;
use crate::enumerate::{CountTable, Iso};
use crate::error::{Error, Result};

/// One non-decreasing chain `|X^a| <= |X^{a+1}| <= ... <= |X^b|` at fixed `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixChain {
    pub k: usize,
    pub iso: Iso,
    /// `(r, count)` in increasing `r`.
    pub values: Vec<(usize, BigCount)>,
}

impl PrefixChain {
    pub fn holds(&self) -> bool {
        self.values.windows(2).all(|w| w[0].1 <= w[1].1)
    }
}

impl fmt::Display for PrefixChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<_> = self.values.iter().map(|(_, v)| v.to_string()).collect();
        let verdict = if self.holds() { "pass" } else { "FAIL" };
        write!(f, "{verdict} k={} {}: {}", self.k, self.iso, body.join(" <= "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixReport {
    pub n: usize,
    pub chains: Vec<PrefixChain>,
}

impl PrefixReport {
    pub fn all_hold(&self) -> bool {
        self.chains.iter().all(PrefixChain::holds)
    }
}

impl fmt::Display for PrefixReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.chains {
            writeln!(f, "n={} {c}", self.n)?;
        }
        Ok(())
    }
}

/// Checks the six increasing prefixes (ranks `k..=3` for `k = 0, 1, 2`, labeled
/// and up to isomorphism) against the counts in `table` at `n`.
pub fn dukes_prefix_check(table: &CountTable, n: usize) -> Result<PrefixReport> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("prefix chains need n >= 3, got {n}")));
    }
    let mut chains = Vec::new();
    for k in 0..=2 {
        for iso in [Iso::Labeled, Iso::Nonisomorphic] {
            let values = (k..=3)
                .map(|r| {
                    table
                        .get(n, r, k, iso)
                        .cloned()
                        .map(|v| (r, v))
                        .ok_or_else(|| Error::InvalidArgument(format!("table lacks n={n} r={r} k={k} {iso}")))
                })
                .collect::<Result<_>>()?;
            chains.push(PrefixChain { k, iso, values });
        }
    }
    Ok(PrefixReport { n, chains })
}
