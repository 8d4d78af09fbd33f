//! Exhaustive Dyck-word generation in three orders, each as a resumable
//! pull-based iterator so callers can take prefixes without paying for the
//! full C_n enumeration:
//!
//! - [`lex_words`]: ascending lexicographic order (0 < 1), from 0^n 1^n up
//!   to (01)^n. Grows a prefix, appending 0 whenever fewer than n zeros are
//!   placed and deferring the legal 1-branches on a stack of O(n) frames.
//! - [`revlex_positions`]: reverse-lexicographic order over position
//!   vectors, starting from b_i = 2i. The successor scans i = n-1 down to 1,
//!   bumps the first b_i < n+i and resets the tail to its floor
//!   max(b_{j-1}+1, 2j). Mapping through [`PositionVector::to_word`] yields
//!   exactly the reverse of the lexicographic word order.
//! - [`swap_words`]: starts from (01)^n; each emitted word is derived from
//!   an earlier one by rewriting its first `10` (at or after a scan cursor)
//!   to `01`, then the derived word is scanned from just left of the
//!   rewrite. Depth-first over these rewrites, matching the recursive
//!   formulation with an explicit stack holding one frame per emitted word.
//!
//! Every order yields each of the C_n words exactly once.

use crate::position::PositionVector;
use crate::word::DyckWord;

/// All Dyck words of semilength `n` in ascending lexicographic order.
///
/// Panics if `n` is 0; there is no Dyck word of semilength 0.
pub fn lex_words(n: usize) -> LexDyckWords {
    assert!(n >= 1, "semilength must be >= 1");
    LexDyckWords {
        n,
        buf: vec![0],
        zeros: 1,
        ones: 0,
        pending: Vec::new(),
        fresh: true,
    }
}

/// A deferred 1-branch: truncate the buffer to `len - 1` symbols, append a
/// 1, and resume with the recorded counts.
struct LexFrame {
    len: usize,
    zeros: usize,
    ones: usize,
}

pub struct LexDyckWords {
    n: usize,
    buf: Vec<u8>,
    zeros: usize,
    ones: usize,
    pending: Vec<LexFrame>,
    fresh: bool,
}

impl Iterator for LexDyckWords {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        if self.fresh {
            self.fresh = false; // descend from the seeded prefix "0"
        } else {
            let frame = self.pending.pop()?;
            self.buf.truncate(frame.len - 1);
            self.buf.push(1);
            self.zeros = frame.zeros;
            self.ones = frame.ones;
        }
        while self.buf.len() < 2 * self.n {
            if self.zeros < self.n {
                // a 1 is also legal here iff it keeps the prefix dominant
                if self.ones < self.n && self.zeros > self.ones {
                    self.pending.push(LexFrame {
                        len: self.buf.len() + 1,
                        zeros: self.zeros,
                        ones: self.ones + 1,
                    });
                }
                self.buf.push(0);
                self.zeros += 1;
            } else {
                self.buf.push(1);
                self.ones += 1;
            }
        }
        Some(DyckWord::new(self.buf.clone()).expect("generator emits valid words"))
    }
}

/// All position vectors of semilength `n` in reverse-lexicographic word
/// order (ascending lexicographic order of the vectors themselves).
///
/// Panics if `n` is 0.
pub fn revlex_positions(n: usize) -> RevlexPositions {
    assert!(n >= 1, "semilength must be >= 1");
    RevlexPositions {
        n,
        current: (1..=n).map(|i| 2 * i).collect(),
        done: false,
    }
}

pub struct RevlexPositions {
    n: usize,
    current: Vec<usize>, // current[idx] = b_{idx+1}; b_n stays 2n
    done: bool,
}

impl RevlexPositions {
    /// Advances to the successor; false when the run is exhausted.
    fn step(&mut self) -> bool {
        let n = self.n;
        // scan i = n-1 down to 1 (1-based) for the first b_i < n+i
        for idx in (0..n.saturating_sub(1)).rev() {
            let i = idx + 1;
            if self.current[idx] < n + i {
                self.current[idx] += 1;
                for jdx in idx + 1..n - 1 {
                    let j = jdx + 1;
                    self.current[jdx] = (self.current[jdx - 1] + 1).max(2 * j);
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for RevlexPositions {
    type Item = PositionVector;

    fn next(&mut self) -> Option<PositionVector> {
        if self.done {
            return None;
        }
        let out = PositionVector::new(self.current.clone(), self.n)
            .expect("generator emits valid position vectors");
        if !self.step() {
            self.done = true;
        }
        Some(out)
    }
}

/// All Dyck words of semilength `n` in the adjacent-swap order: (01)^n
/// first, then depth-first rewrites of `10` into `01`.
///
/// Panics if `n` is 0.
pub fn swap_words(n: usize) -> SwapDyckWords {
    assert!(n >= 1, "semilength must be >= 1");
    let seed: Vec<u8> = (0..2 * n).map(|i| (i % 2) as u8).collect();
    SwapDyckWords {
        n,
        stack: vec![ScanFrame {
            word: seed.clone(),
            from: 1,
        }],
        seed: Some(DyckWord::new(seed).expect("(01)^n is a Dyck word")),
    }
}

/// A word still being scanned for `10` occurrences at 1-based positions
/// >= `from`.
struct ScanFrame {
    word: Vec<u8>,
    from: usize,
}

pub struct SwapDyckWords {
    n: usize,
    stack: Vec<ScanFrame>,
    seed: Option<DyckWord>,
}

/// First 1-based position j >= from with word[j] = 1, word[j+1] = 0.
fn first_ten(word: &[u8], from: usize) -> Option<usize> {
    (from..word.len())
        .find(|&j| word[j - 1] == 1 && word[j] == 0)
}

impl Iterator for SwapDyckWords {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        if let Some(seed) = self.seed.take() {
            return Some(seed);
        }
        while let Some(top) = self.stack.last_mut() {
            let found = if top.from < 2 * self.n {
                first_ten(&top.word, top.from)
            } else {
                None
            };
            let Some(j) = found else {
                self.stack.pop();
                continue;
            };
            top.from = j + 2; // resume the scan of this word past the pair
            let mut derived = top.word.clone();
            derived[j - 1] = 0;
            derived[j] = 1;
            // the rewrite may create a new 10 one step to the left
            self.stack.push(ScanFrame {
                word: derived.clone(),
                from: j - 1,
            });
            return Some(DyckWord::new(derived).expect("a 10 -> 01 rewrite preserves the prefix property"));
        }
        None
    }
}
