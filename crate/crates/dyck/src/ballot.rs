//! Ballot numbers: the triangular table f(i,j) counting monotone lattice
//! paths from (0,0) to (i,j) that never cross the diagonal, built from
//!
//! ```text
//! f(i,0) = 1
//! f(i,j) = f(i-1,j) + f(i,j-1)   for 1 <= j < i
//! f(i,i) = f(i,i-1)
//! f(i,j) = 0                     for j > i
//! ```
//!
//! The diagonal carries the Catalan numbers, `f(n,n) = C_n`, and the table
//! drives ranking and unranking. Three independent routes to C_n are
//! provided for cross-checking: the table, the closed form
//! `binom(2n,n)/(n+1)`, and an alternating sum over earlier Catalan numbers.
//!
//! All counts are u64 with checked arithmetic; anything that would exceed
//! 64 bits reports [`Error::Overflow`] instead of wrapping. C_36 is the
//! largest Catalan number that fits.

use crate::error::{Error, Result};

/// Dense triangle of the path counts f(i,j) for 0 <= j <= i <= n_max.
///
/// Immutable after construction; queries are O(1). Entries above the
/// diagonal are implicitly zero.
#[derive(Debug, Clone)]
pub struct BallotTable {
    n_max: usize,
    entries: Vec<u64>,
}

impl BallotTable {
    /// Builds the triangle row by row. Fails with `Overflow` once an entry
    /// exceeds u64, which first happens for `n_max >= 37`.
    pub fn new(n_max: usize) -> Result<Self> {
        let mut entries: Vec<u64> = Vec::with_capacity((n_max + 1) * (n_max + 2) / 2);
        for i in 0..=n_max {
            entries.push(1); // f(i,0)
            for j in 1..=i {
                let value = if j < i {
                    let above = entries[index(i - 1, j)];
                    let left = entries[index(i, j - 1)];
                    above.checked_add(left).ok_or(Error::Overflow)?
                } else {
                    entries[index(i, i - 1)]
                };
                entries.push(value);
            }
        }
        Ok(BallotTable { n_max, entries })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// f(i,j), with 0 for the region above the diagonal (j > i).
    pub fn get(&self, i: usize, j: usize) -> Result<u64> {
        if i > self.n_max {
            return Err(Error::RowOutOfRange {
                row: i,
                n_max: self.n_max,
            });
        }
        Ok(if j > i { 0 } else { self.entries[index(i, j)] })
    }

    /// In-triangle lookup for callers that have already checked the row.
    pub(crate) fn at(&self, i: usize, j: usize) -> u64 {
        debug_assert!(i <= self.n_max);
        if j > i {
            0
        } else {
            self.entries[index(i, j)]
        }
    }
}

fn index(i: usize, j: usize) -> usize {
    i * (i + 1) / 2 + j
}

/// The nth Catalan number read off the table: C_n = f(n, n-1) for n >= 1,
/// and C_0 = 1.
pub fn catalan(n: usize) -> Result<u64> {
    if n == 0 {
        return Ok(1);
    }
    let table = BallotTable::new(n)?;
    Ok(table.at(n, n - 1))
}

/// The closed form binom(2n,n)/(n+1), used as an independent check on the
/// table route. Intermediates are u128; the result must fit u64.
pub fn catalan_closed_form(n: usize) -> Result<u64> {
    let b = binomial_wide(2 * n, n)?;
    let c = b / (n as u128 + 1);
    u64::try_from(c).map_err(|_| Error::Overflow)
}

/// The (n+1)th Catalan number from the alternating recurrence
///
/// ```text
/// C_{n+1} = 1 + sum_{k>=0} (-1)^k binom(n-k, k+1) C_{n-k}
/// ```
///
/// where `n_plus_1 >= 1` and terms vanish once k+1 > n-k. The needed
/// Catalan numbers come from one ballot table, and the sum runs in a
/// signed 128-bit accumulator before converting back to u64.
pub fn catalan_alternating(n_plus_1: usize) -> Result<u64> {
    assert!(n_plus_1 >= 1, "the alternating recurrence needs input >= 1");
    let n = n_plus_1 - 1;
    if n == 0 {
        return Ok(1);
    }
    let table = BallotTable::new(n)?;
    let mut acc: i128 = 1;
    // binom(n-k, k+1) vanishes once k+1 > n-k, i.e. past k = (n-1)/2
    for k in 0..=(n - 1) / 2 {
        let coeff = binomial(n - k, k + 1)? as i128;
        let cat = table.at(n - k, n - k) as i128;
        let term = coeff.checked_mul(cat).ok_or(Error::Overflow)?;
        acc = if k % 2 == 0 {
            acc.checked_add(term)
        } else {
            acc.checked_sub(term)
        }
        .ok_or(Error::Overflow)?;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow)
}

/// f(n, n-k) evaluated without the table, via the alternating identity
///
/// ```text
/// f(n, n-k) = sum_i (-1)^i binom(k-i, i) C_{n-i}
/// ```
///
/// with 0 <= k <= n; the binomial convention truncates the sum at
/// i > k/2. Cross-checked against [`BallotTable::get`] in the tests.
pub fn ballot_via_catalan(n: usize, k: usize) -> Result<u64> {
    assert!(k <= n, "ballot_via_catalan requires k <= n");
    let table = BallotTable::new(n)?;
    let mut acc: i128 = 0;
    // binom(k-i, i) vanishes once i > k-i, i.e. past i = k/2
    for i in 0..=k / 2 {
        let coeff = binomial(k - i, i)? as i128;
        let cat = table.at(n - i, n - i) as i128;
        let term = coeff.checked_mul(cat).ok_or(Error::Overflow)?;
        acc = if i % 2 == 0 {
            acc.checked_add(term)
        } else {
            acc.checked_sub(term)
        }
        .ok_or(Error::Overflow)?;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow)
}

/// binom(a,b) with the convention binom(a,b) = 0 for b > a and
/// binom(a,0) = 1. Computed in u128 and checked down to u64.
pub fn binomial(a: usize, b: usize) -> Result<u64> {
    u64::try_from(binomial_wide(a, b)?).map_err(|_| Error::Overflow)
}

fn binomial_wide(a: usize, b: usize) -> Result<u128> {
    if b > a {
        return Ok(0);
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 1..=b {
        // acc is binom(a-b+i-1, i-1) here, so the division is exact
        acc = acc
            .checked_mul((a - b + i) as u128)
            .ok_or(Error::Overflow)?
            / i as u128;
    }
    Ok(acc)
}
