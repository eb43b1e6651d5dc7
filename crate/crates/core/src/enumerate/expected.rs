//! Published counts for `n <= 8`, used to self-check generated tables.
//!
//! Row `r` of each table lists the counts for `n = max(r, first_n)..=8`.

use super::table::TableKind;

const ALL_LABELED: &[&[u64]] = &[
    &[1, 1, 1, 1, 1, 1, 1, 1, 1],
    &[1, 3, 7, 15, 31, 63, 127, 255],
    &[1, 7, 36, 171, 813, 4012, 20891],
    &[1, 15, 171, 2053, 33442, 1022217],
    &[1, 31, 813, 33442, 8520812],
    &[1, 63, 4012, 1022217],
    &[1, 127, 20891],
    &[1, 255],
    &[1],
];
const ALL_LABELED_TOTAL: &[u64] = &[1, 2, 5, 16, 68, 406, 3807, 75164, 10607540];

const ALL_NONISO: &[&[u64]] = &[
    &[1, 1, 1, 1, 1, 1, 1, 1, 1],
    &[1, 2, 3, 4, 5, 6, 7, 8],
    &[1, 3, 7, 13, 23, 37, 58],
    &[1, 4, 13, 38, 108, 325],
    &[1, 5, 23, 108, 940],
    &[1, 6, 37, 325],
    &[1, 7, 58],
    &[1, 8],
    &[1],
];
const ALL_NONISO_TOTAL: &[u64] = &[1, 2, 4, 8, 17, 38, 98, 306, 1724];

const LOOPLESS_LABELED: &[&[u64]] = &[
    &[1, 1, 1, 1, 1, 1, 1, 1],
    &[1, 4, 14, 51, 202, 876, 4139],
    &[1, 11, 106, 1232, 22172, 803583],
    &[1, 26, 642, 28367, 8274374],
    &[1, 57, 3592, 991829],
    &[1, 120, 19903],
    &[1, 247],
    &[1],
];
// The n = 5 total is printed as 165; its cells and the loop-set relation
// both give 185.
const LOOPLESS_LABELED_TOTAL: &[u64] = &[1, 2, 6, 27, 185, 2135, 55129, 10094077];

const LOOPLESS_NONISO: &[&[u64]] = &[
    &[1, 1, 1, 1, 1, 1, 1, 1],
    &[1, 2, 4, 6, 10, 14, 21],
    &[1, 3, 9, 25, 70, 217],
    &[1, 4, 18, 85, 832],
    &[1, 5, 31, 288],
    &[1, 6, 51],
    &[1, 7],
    &[1],
];
const LOOPLESS_NONISO_TOTAL: &[u64] = &[1, 2, 4, 9, 21, 60, 208, 1418];

const SIMPLE_LABELED: &[&[u64]] = &[
    &[1, 1, 1, 1, 1, 1, 1],
    &[1, 5, 31, 352, 8389, 433038],
    &[1, 16, 337, 18700, 7642631],
    &[1, 42, 2570, 907647],
    &[1, 99, 16865],
    &[1, 219],
    &[1],
];
const SIMPLE_LABELED_TOTAL: &[u64] = &[1, 2, 7, 49, 733, 29760, 9000402];

const SIMPLE_NONISO: &[&[u64]] = &[
    &[1, 1, 1, 1, 1, 1, 1],
    &[1, 2, 4, 9, 23, 68],
    &[1, 3, 11, 49, 617],
    &[1, 4, 22, 217],
    &[1, 5, 40],
    &[1, 6],
    &[1],
];
const SIMPLE_NONISO_TOTAL: &[u64] = &[1, 2, 4, 9, 26, 101, 950];

const PAVING_LABELED: &[&[u64]] = &[
    &[1, 1, 1, 1, 1, 1, 1],
    &[1, 5, 31, 352, 8389, 433038],
    &[1, 6, 82, 6149, 4464328],
    &[1, 7, 239, 239173],
    &[1, 8, 772],
    &[1, 9],
    &[1],
];
const PAVING_LABELED_TOTAL: &[u64] = &[1, 2, 7, 39, 443, 14787, 5137322];

const PAVING_NONISO: &[&[u64]] = &[
    &[1, 1, 1, 1, 1, 1, 1],
    &[1, 2, 4, 9, 23, 68],
    &[1, 2, 5, 18, 322],
    &[1, 2, 5, 39],
    &[1, 2, 6],
    &[1, 2],
    &[1],
];
const PAVING_NONISO_TOTAL: &[u64] = &[1, 2, 4, 8, 18, 50, 439];

fn data(kind: TableKind) -> (&'static [&'static [u64]], &'static [u64]) {
    match kind {
        TableKind::AllLabeled => (ALL_LABELED, ALL_LABELED_TOTAL),
        TableKind::AllNoniso => (ALL_NONISO, ALL_NONISO_TOTAL),
        TableKind::LooplessLabeled => (LOOPLESS_LABELED, LOOPLESS_LABELED_TOTAL),
        TableKind::LooplessNoniso => (LOOPLESS_NONISO, LOOPLESS_NONISO_TOTAL),
        TableKind::SimpleLabeled => (SIMPLE_LABELED, SIMPLE_LABELED_TOTAL),
        TableKind::SimpleNoniso => (SIMPLE_NONISO, SIMPLE_NONISO_TOTAL),
        TableKind::PavingLabeled => (PAVING_LABELED, PAVING_LABELED_TOTAL),
        TableKind::PavingNoniso => (PAVING_NONISO, PAVING_NONISO_TOTAL),
    }
}

/// Largest `n` covered by the published tables.
pub const EXPECTED_MAX_N: usize = 8;

/// Published entry of `kind` at `(n, r)`, if the table has that cell.
pub fn expected_count(kind: TableKind, n: usize, r: usize) -> Option<u64> {
    let first = kind.first_rank();
    if r < first || r > n || n > EXPECTED_MAX_N {
        return None;
    }
    let (rows, _) = data(kind);
    rows[r - first].get(n - r).copied()
}

/// Published column total of `kind` at `n`.
pub fn expected_total(kind: TableKind, n: usize) -> Option<u64> {
    let (_, totals) = data(kind);
    n.checked_sub(kind.first_rank()).and_then(|i| totals.get(i)).copied()
}
