//! Ranking and unranking of Dyck words under reverse-lexicographic order,
//! as a bijection between position vectors and 1..=C_n.
//!
//! The rank of `b_1..b_n` counts, for each index i, how far b_i sits above
//! its floor c_i = max(b_{i-1}+1, 2i): every step from c_i to b_i - 1
//! contributes f(n-i, n+i-j) completions. Unranking inverts this by greedy
//! subtraction. Both take the ballot table explicitly so one table can be
//! shared across many queries.
//!
//! Lexicographic ranks are the complement C_n + 1 - nr, since the
//! reverse-lexicographic enumeration is the exact reversal of the
//! lexicographic one.

use crate::ballot::BallotTable;
use crate::error::{Error, Result};
use crate::position::PositionVector;
use crate::word::DyckWord;

fn require_covers(table: &BallotTable, n: usize) -> Result<()> {
    if table.n_max() < n {
        return Err(Error::TableTooSmall {
            needed: n,
            n_max: table.n_max(),
        });
    }
    Ok(())
}

/// 1-based index of `p` in the reverse-lexicographic enumeration of all
/// position vectors of its semilength.
pub fn rank(p: &PositionVector, table: &BallotTable) -> Result<u64> {
    let n = p.semilength();
    require_covers(table, n)?;
    let b = p.positions();
    let mut nr: u64 = 1;
    // floor c_i = max(b_{i-1}+1, 2i), with c_1 = 2; the loop stops at n-1
    // because b_n = 2n is forced
    let mut floor = 2usize;
    for i in 1..n {
        for j in floor..b[i - 1] {
            nr = nr
                .checked_add(table.at(n - i, n + i - j))
                .ok_or(Error::Overflow)?;
        }
        floor = (b[i - 1] + 1).max(2 * (i + 1));
    }
    Ok(nr)
}

/// The subtraction sequence performed by [`unrank_traced`]: the starting
/// value `rank - 1` and each table entry subtracted from it, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnrankTrace {
    pub start: u64,
    pub subtracted: Vec<u64>,
}

/// Position vector at 1-based `rank` in reverse-lexicographic order.
pub fn unrank(rank: u64, n: usize, table: &BallotTable) -> Result<PositionVector> {
    unrank_traced(rank, n, table).map(|(p, _)| p)
}

/// [`unrank`] plus the trace of subtracted table entries, for inspecting
/// the arithmetic (e.g. rank 93 at n = 6 resolves as 92-42-42-5-2-1).
pub fn unrank_traced(rank: u64, n: usize, table: &BallotTable) -> Result<(PositionVector, UnrankTrace)> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    require_covers(table, n)?;
    let max = table.at(n, n);
    if rank < 1 || rank > max {
        return Err(Error::RankOutOfRange { rank, max });
    }
    let mut nr = rank - 1;
    let mut trace = UnrankTrace {
        start: nr,
        subtracted: Vec::new(),
    };
    let mut positions = Vec::with_capacity(n);
    let mut prev = 0usize;
    for i in 1..=n {
        let mut b = (prev + 1).max(2 * i);
        let mut j = n + i - b;
        while nr >= table.at(n - i, j) && b < n + i {
            let f = table.at(n - i, j);
            nr -= f;
            trace.subtracted.push(f);
            b += 1;
            j -= 1;
        }
        positions.push(b);
        prev = b;
    }
    debug_assert_eq!(nr, 0, "a rank within [1, C_n] is fully consumed");
    let p = PositionVector::new(positions, n).expect("unranking yields a valid vector");
    Ok((p, trace))
}

/// Reverse-lexicographic rank of a word: [`rank`] composed with
/// [`PositionVector::from_word`].
pub fn rank_word(word: &DyckWord, table: &BallotTable) -> Result<u64> {
    rank(&PositionVector::from_word(word), table)
}

/// 1-based index of a word in ascending lexicographic order, via the
/// complement C_n + 1 - nr.
pub fn lex_rank(word: &DyckWord, table: &BallotTable) -> Result<u64> {
    let n = word.semilength();
    require_covers(table, n)?;
    let nr = rank_word(word, table)?;
    Ok(table.at(n, n) + 1 - nr)
}

/// Word at 1-based `rank` in ascending lexicographic order.
pub fn lex_unrank(rank: u64, n: usize, table: &BallotTable) -> Result<DyckWord> {
    require_covers(table, n)?;
    let max = table.at(n, n);
    if rank < 1 || rank > max {
        return Err(Error::RankOutOfRange { rank, max });
    }
    let p = unrank(max + 1 - rank, n, table)?;
    Ok(p.to_word())
}
