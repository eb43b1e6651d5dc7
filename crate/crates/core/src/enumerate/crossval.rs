use std::fmt;

use crate::bigcomb::{binomial, stirling2, BigCount};

use super::table::{CountTable, Iso};

/// Which relation a check instance belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// All matroids from loopless ones by choosing the loop set.
    Binomial,
    /// Loopless matroids from simple ones by choosing the parallel classes.
    Stirling,
    /// Isomorphism classes from loopless ones by the number of loops.
    IsoSum,
    /// A class that holds exactly one matroid.
    Unit,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Binomial => "binomial",
            Relation::Stirling => "stirling",
            Relation::IsoSum => "iso-sum",
            Relation::Unit => "unit",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub relation: Relation,
    pub n: usize,
    pub r: usize,
    pub lhs: BigCount,
    pub rhs: BigCount,
    /// Which unit class, for [`Relation::Unit`].
    pub what: String,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{verdict} {} n={} r={}", self.relation, self.n, self.r)?;
        if !self.what.is_empty() {
            write!(f, " {}", self.what)?;
        }
        write!(f, ": {} = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossValidation {
    pub checks: Vec<IdentityCheck>,
}

impl CrossValidation {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for CrossValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Checks the loop/parallel-class relations and unit classes on every
/// `(n, r)` the table fully covers.
pub fn cross_validate(table: &CountTable) -> CrossValidation {
    let mut checks = Vec::new();
    let Some(max_n) = table.max_n() else {
        return CrossValidation { checks };
    };
    let cell = |n: usize, r: usize, k: usize, iso: Iso| table.get(n, r, k, iso).cloned();
    let mut push = |relation, n, r, lhs: Option<BigCount>, rhs: Option<BigCount>, what: &str| {
        if let (Some(lhs), Some(rhs)) = (lhs, rhs) {
            checks.push(IdentityCheck {
                relation,
                n,
                r,
                lhs,
                rhs,
                what: what.to_string(),
            });
        }
    };
    for n in 0..=max_n {
        for r in 0..=n {
            if r >= 1 {
                let rhs: Option<BigCount> = (r..=n)
                    .map(|i| cell(i, r, 1, Iso::Labeled).map(|c| binomial(n as u64, i as i64) * c))
                    .sum();
                push(Relation::Binomial, n, r, cell(n, r, 0, Iso::Labeled), rhs, "");
                let rhs: Option<BigCount> = (r..=n).map(|i| cell(i, r, 1, Iso::Nonisomorphic)).sum();
                push(Relation::IsoSum, n, r, cell(n, r, 0, Iso::Nonisomorphic), rhs, "");
            }
            if r >= 2 {
                let rhs: Option<BigCount> = (r..=n)
                    .map(|i| {
                        let s = stirling2(n, i).ok()?;
                        cell(i, r, 2, Iso::Labeled).map(|c| s * c)
                    })
                    .sum();
                push(Relation::Stirling, n, r, cell(n, r, 1, Iso::Labeled), rhs, "");
            }
        }
        let one = Some(BigCount::from(1u32));
        for iso in [Iso::Labeled, Iso::Nonisomorphic] {
            push(
                Relation::Unit,
                n,
                0,
                cell(n, 0, 0, iso),
                one.clone(),
                &format!("k=0 {iso}"),
            );
            if n >= 1 {
                push(
                    Relation::Unit,
                    n,
                    1,
                    cell(n, 1, 1, iso),
                    one.clone(),
                    &format!("k=1 {iso}"),
                );
            }
            if n >= 2 {
                push(
                    Relation::Unit,
                    n,
                    n,
                    cell(n, n, 2, iso),
                    one.clone(),
                    &format!("k=2 {iso}"),
                );
            }
        }
    }
    CrossValidation { checks }
}
