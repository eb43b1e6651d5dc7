//! Exact integer combinatorics: binomials, factorials, Bell numbers, integer
//! partition counts and Stirling numbers of the second kind.
//!
//! Every sequence is memoized behind a mutex so repeated queries (the
//! log-convexity scans ask for `bell(200)` and `p(200)` over and over) are
//! cheap, and concurrent callers see a consistent table.

use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact unbounded nonnegative integer used for every count.
pub type BigCount = BigUint;

/// Largest argument accepted by the memoized sequences.
pub const MAX_ARG: usize = 10_000;

fn check_cap(what: &'static str, n: usize) -> Result<()> {
    if n > MAX_ARG {
        Err(Error::InputTooLarge {
            what,
            value: n,
            max: MAX_ARG,
        })
    } else {
        Ok(())
    }
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigCount {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // acc = C(n - k + i - 1, i - 1); the product below is divisible by i.
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `2^e` as a big integer.
pub fn pow2(e: usize) -> BigCount {
    BigUint::one() << e
}

static FACTORIALS: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// `n!`.
pub fn factorial(n: usize) -> Result<BigCount> {
    check_cap("factorial", n)?;
    let mut memo = FACTORIALS.lock().expect("factorial memo poisoned");
    if memo.is_empty() {
        memo.push(BigUint::one());
    }
    while memo.len() <= n {
        let next = memo.last().unwrap() * memo.len();
        memo.push(next);
    }
    Ok(memo[n].clone())
}

struct BellMemo {
    values: Vec<BigUint>,
    // Last completed row of the Bell triangle; its first entry is the latest value.
    row: Vec<BigUint>,
}

static BELL: Mutex<BellMemo> = Mutex::new(BellMemo {
    values: Vec::new(),
    row: Vec::new(),
});

/// The Bell number `b(n)`: the number of set partitions of an `n`-set.
pub fn bell(n: usize) -> Result<BigCount> {
    check_cap("bell", n)?;
    let mut memo = BELL.lock().expect("bell memo poisoned");
    if memo.values.is_empty() {
        memo.values.push(BigUint::one());
        memo.row = vec![BigUint::one()];
    }
    while memo.values.len() <= n {
        let prev = std::mem::take(&mut memo.row);
        let mut next = Vec::with_capacity(prev.len() + 1);
        next.push(prev.last().unwrap().clone());
        for above in &prev {
            let v = next.last().unwrap() + above;
            next.push(v);
        }
        memo.values.push(next[0].clone());
        memo.row = next;
    }
    Ok(memo.values[n].clone())
}

static PARTITIONS: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// `p(n)`, the number of integer partitions of `n`.
pub fn partition_count(n: usize) -> Result<BigCount> {
    check_cap("partition_count", n)?;
    let mut memo = PARTITIONS.lock().expect("partition memo poisoned");
    if memo.is_empty() {
        memo.push(BigUint::one());
    }
    while memo.len() <= n {
        let m = memo.len();
        // Euler's pentagonal number recurrence, positive and negative parts
        // accumulated separately to stay in unsigned arithmetic.
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let target = if k % 2 == 1 { &mut plus } else { &mut minus };
            *target += &memo[m - g1];
            if g2 <= m {
                *target += &memo[m - g2];
            }
            k += 1;
        }
        memo.push(plus - minus);
    }
    Ok(memo[n].clone())
}

/// `p(1) + ... + p(n)`.
pub fn partition_prefix_sum(n: usize) -> Result<BigCount> {
    check_cap("partition_prefix_sum", n)?;
    let mut total = BigUint::zero();
    for i in 1..=n {
        total += partition_count(i)?;
    }
    Ok(total)
}

static STIRLING: Mutex<Vec<Vec<BigUint>>> = Mutex::new(Vec::new());

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> Result<BigCount> {
    check_cap("stirling2", n)?;
    if k > n {
        return Ok(BigUint::zero());
    }
    let mut rows = STIRLING.lock().expect("stirling memo poisoned");
    if rows.is_empty() {
        rows.push(vec![BigUint::one()]);
    }
    while rows.len() <= n {
        let m = rows.len();
        let prev = &rows[m - 1];
        let mut row = vec![BigUint::zero(); m + 1];
        for j in 1..=m {
            let mut v = if j < prev.len() { &prev[j] * j } else { BigUint::zero() };
            v += &prev[j - 1];
            row[j] = v;
        }
        rows.push(row);
    }
    Ok(rows[n][k].clone())
}
