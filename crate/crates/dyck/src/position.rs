//! Position-vector representation: a Dyck word of semilength n is determined
//! by the 1-based positions `b_1 < b_2 < .. < b_n` of its 1s, and those
//! positions are exactly the strictly increasing vectors with
//! `2i <= b_i <= n+i`. The upper bound forces `b_n = 2n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::DyckWord;

/// The 1-based positions of the 1s in a Dyck word of semilength n.
///
/// Validated on construction: strictly increasing with `2i <= b_i <= n+i`
/// for every index. Ordering is lexicographic on the positions, which is the
/// order [`crate::generate::revlex_positions`] emits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositionVector {
    positions: Vec<usize>,
}

impl PositionVector {
    /// Checks `positions` against an expected semilength `n`.
    ///
    /// Reports the first violation: a length mismatch, a bound violation
    /// `b_i` outside `[2i, n+i]`, or a non-increasing step.
    pub fn new(positions: Vec<usize>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        if positions.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: positions.len(),
            });
        }
        let mut prev = 0usize;
        for (idx, &b) in positions.iter().enumerate() {
            let i = idx + 1;
            let (lo, hi) = (2 * i, n + i);
            if b < lo || b > hi {
                return Err(Error::BoundViolation {
                    index: i,
                    value: b,
                    lo,
                    hi,
                });
            }
            if b <= prev {
                return Err(Error::NotIncreasing {
                    index: i,
                    prev,
                    value: b,
                });
            }
            prev = b;
        }
        Ok(PositionVector { positions })
    }

    /// Reads off the 1 positions of a word; the inverse of [`Self::to_word`].
    pub fn from_word(word: &DyckWord) -> Self {
        let positions = word
            .bits()
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            .map(|(idx, _)| idx + 1)
            .collect();
        // the word invariants are exactly the position invariants
        PositionVector { positions }
    }

    /// Builds the word of length 2n with 1s at these positions.
    pub fn to_word(&self) -> DyckWord {
        let n = self.semilength();
        let mut bits = vec![0u8; 2 * n];
        for &b in &self.positions {
            bits[b - 1] = 1;
        }
        DyckWord::new(bits).expect("position invariants guarantee a Dyck word")
    }

    pub fn semilength(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }
}

impl fmt::Display for PositionVector {
    /// Space-separated decimals, e.g. `2 4 7 8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, b) in self.positions.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}
