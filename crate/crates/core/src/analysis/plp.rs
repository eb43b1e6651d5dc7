use std::collections::BTreeSet;
use std::fmt;

use crate::bigcomb::{binomial, BigCount};
use crate::enumerate::{canonical_form, enumerate_matroids, CanonicalForm, EnumConfig};
use crate::erection::{erections, free_erection, FreeErection};
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// Outcome of the points-lines-planes inequality
/// `W2^2 >= 3(W1 - 1) / (2(W1 - 2)) * W1 * W3` on one simple rank-4 matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlpVerdict {
    pub w1: BigCount,
    pub w2: BigCount,
    pub w3: BigCount,
    /// `W2^2`
    pub lhs: BigCount,
    /// `3 (W1 - 1) W1 W3`
    pub rhs_num: BigCount,
    /// `2 (W1 - 2)`
    pub rhs_den: BigCount,
    pub holds: bool,
    pub equality: bool,
    /// Every 3-subset is a plane.
    pub all_planes_trivial: bool,
}

impl fmt::Display for PlpVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.equality {
            "="
        } else if self.holds {
            ">"
        } else {
            "<"
        };
        write!(
            f,
            "W=({}, {}, {}): {} * {} {op} {}",
            self.w1, self.w2, self.w3, self.lhs, self.rhs_den, self.rhs_num
        )
    }
}

/// Evaluates the inequality in exact integers.
pub fn plp_evaluate(m: &Matroid) -> Result<PlpVerdict> {
    if m.rank() != 4 {
        return Err(Error::InvalidArgument(format!(
            "PLP needs rank 4, got rank {}",
            m.rank()
        )));
    }
    if !m.classify().simple {
        return Err(Error::InvalidArgument("PLP needs a simple matroid".into()));
    }
    let lattice = m.flat_lattice();
    let levels = lattice.levels();
    let w = |k: usize| levels[k].len();
    let (w1, w2, w3) = (w(1), w(2), w(3));
    // A simple rank-4 matroid has at least four points.
    debug_assert!(w1 >= 4);
    let big = BigCount::from;
    let lhs = big(w2) * big(w2);
    let rhs_num = big(3 * (w1 - 1)) * big(w1) * big(w3);
    let rhs_den = big(2 * (w1 - 2));
    let scaled = &lhs * &rhs_den;
    let all_planes_trivial = levels[3].iter().all(|p| p.len() == 3) && big(w3) == binomial(m.n() as u64, 3);
    Ok(PlpVerdict {
        w1: big(w1),
        w2: big(w2),
        w3: big(w3),
        holds: scaled >= rhs_num,
        equality: scaled == rhs_num,
        lhs,
        rhs_num,
        rhs_den,
        all_planes_trivial,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlpScanReport {
    pub n: usize,
    pub scanned: u64,
    /// Canonical forms of violating matroids, sorted.
    pub violations: Vec<CanonicalForm>,
    pub equality_cases: u64,
    pub trivial_plane_cases: u64,
    /// Matroids where equality and the all-3-subsets condition disagree.
    pub equality_mismatches: Vec<CanonicalForm>,
}

impl PlpScanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.equality_mismatches.is_empty()
    }
}

impl fmt::Display for PlpScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} scanned={} violations={} equality={} trivial_planes={} equality_mismatches={}",
            self.n,
            self.scanned,
            self.violations.len(),
            self.equality_cases,
            self.trivial_plane_cases,
            self.equality_mismatches.len()
        )
    }
}

/// Largest `n` for the desk-scale scans over simple rank-4 matroids.
pub const PLP_MAX_N: usize = 7;
/// Largest `n` for the erection scans.
pub const DOMINANCE_MAX_N: usize = 6;

fn check_n(n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::InputTooLarge {
            what: "n",
            value: n,
            max,
        });
    }
    Ok(())
}

/// Evaluates the inequality on every simple rank-4 matroid on `n <= 7` elements.
pub fn plp_scan(n: usize, config: &EnumConfig) -> Result<PlpScanReport> {
    check_n(n, PLP_MAX_N)?;
    let mut report = PlpScanReport {
        n,
        scanned: 0,
        violations: Vec::new(),
        equality_cases: 0,
        trivial_plane_cases: 0,
        equality_mismatches: Vec::new(),
    };
    if n < 4 {
        return Ok(report);
    }
    for m in enumerate_matroids(n, 4, 2, config)? {
        let v = plp_evaluate(&m)?;
        report.scanned += 1;
        report.equality_cases += v.equality as u64;
        report.trivial_plane_cases += v.all_planes_trivial as u64;
        if !v.holds {
            report.violations.push(canonical_form(&m));
        }
        if v.equality != v.all_planes_trivial {
            report.equality_mismatches.push(canonical_form(&m));
        }
    }
    report.violations.sort();
    report.equality_mismatches.sort();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominanceReport {
    pub n: usize,
    pub rank3_checked: u64,
    pub erections_checked: u64,
    /// `(M, N)` with `W3(N) > W3(Free(M))`, or with erections but a trivial free erection.
    pub violations: Vec<(Matroid, Matroid)>,
    pub rank4_checked: u64,
    /// Simple rank-4 matroids with `2 W3 > W2^2`.
    pub plane_bound_violations: Vec<Matroid>,
}

impl DominanceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.plane_bound_violations.is_empty()
    }
}

impl fmt::Display for DominanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} rank3={} erections={} violations={} rank4={} plane_bound_violations={}",
            self.n,
            self.rank3_checked,
            self.erections_checked,
            self.violations.len(),
            self.rank4_checked,
            self.plane_bound_violations.len()
        )
    }
}

/// Checks that the free erection has the most planes among all erections of
/// each simple rank-3 matroid on `n <= 6` elements, and `W3 <= W2^2 / 2` on
/// every simple rank-4 matroid.
pub fn dominance_scan(n: usize, config: &EnumConfig) -> Result<DominanceReport> {
    check_n(n, DOMINANCE_MAX_N)?;
    let mut report = DominanceReport {
        n,
        rank3_checked: 0,
        erections_checked: 0,
        violations: Vec::new(),
        rank4_checked: 0,
        plane_bound_violations: Vec::new(),
    };
    if n >= 3 {
        for m in enumerate_matroids(n, 3, 2, config)? {
            report.rank3_checked += 1;
            let free = free_erection(&m);
            let bound = free.matroid().map(|f| f.flats_of_rank(3).len());
            for e in erections(&m) {
                report.erections_checked += 1;
                if bound.is_none_or(|b| e.flats_of_rank(3).len() > b) {
                    report.violations.push((m.clone(), e));
                }
            }
        }
    }
    if n >= 4 {
        for m in enumerate_matroids(n, 4, 2, config)? {
            report.rank4_checked += 1;
            let lattice = m.flat_lattice();
            let (w2, w3) = (lattice.levels()[2].len(), lattice.levels()[3].len());
            if 2 * w3 > w2 * w2 {
                report.plane_bound_violations.push(m);
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErectibleCensus {
    pub n: usize,
    /// `|M_2^3(S_n)|`
    pub simple_rank3: BigCount,
    /// Simple rank-3 matroids whose free erection is nontrivial.
    pub erectible: BigCount,
    /// Distinct free erections among them.
    pub distinct_free: BigCount,
    /// `|M_2^4(S_n)|`
    pub simple_rank4: BigCount,
}

impl ErectibleCensus {
    /// `distinct_free / simple_rank4` as an exact fraction, unreduced.
    pub fn ratio(&self) -> (BigCount, BigCount) {
        (self.distinct_free.clone(), self.simple_rank4.clone())
    }

    /// Free images never outnumber their sources or their target class.
    pub fn consistent(&self) -> bool {
        self.distinct_free <= self.erectible
            && self.erectible <= self.simple_rank3
            && self.distinct_free <= self.simple_rank4
    }
}

impl fmt::Display for ErectibleCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} simple_rank3={} erectible={} distinct_free={} simple_rank4={} ratio={}/{}",
            self.n,
            self.simple_rank3,
            self.erectible,
            self.distinct_free,
            self.simple_rank4,
            self.distinct_free,
            self.simple_rank4
        )
    }
}

/// Counts free erections of simple rank-3 matroids on `n <= 6` elements.
pub fn erectible_census(n: usize, config: &EnumConfig) -> Result<ErectibleCensus> {
    check_n(n, DOMINANCE_MAX_N)?;
    let rank3 = if n >= 3 {
        enumerate_matroids(n, 3, 2, config)?
    } else {
        Vec::new()
    };
    let mut erectible = 0usize;
    let mut images = BTreeSet::new();
    for m in &rank3 {
        if let FreeErection::Erected(f) = free_erection(m) {
            erectible += 1;
            images.insert(f);
        }
    }
    let simple_rank4 = if n >= 4 {
        enumerate_matroids(n, 4, 2, config)?.len()
    } else {
        0
    };
    Ok(ErectibleCensus {
        n,
        simple_rank3: BigCount::from(rank3.len()),
        erectible: BigCount::from(erectible),
        distinct_free: BigCount::from(images.len()),
        simple_rank4: BigCount::from(simple_rank4),
    })
}
