//! The word representation: binary sequences over {0, 1} and the Dyck
//! prefix property.
//!
//! A word `x_1 x_2 .. x_2n` is a Dyck word when every prefix contains at
//! least as many 0s as 1s and the full word balances exactly. The running
//! difference (valuation) assigns +1 to each 0 and -1 to each 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Running height of a binary sequence: +1 per 0, -1 per 1.
///
/// Total on any sequence of 0/1 symbols; the empty sequence has valuation 0.
pub fn valuation(bits: &[u8]) -> i64 {
    debug_assert!(bits.iter().all(|&b| b <= 1));
    bits.iter().map(|&b| if b == 0 { 1i64 } else { -1 }).sum()
}

/// True iff `bits` has even length, no prefix with negative valuation, and
/// total valuation zero.
///
/// The empty sequence is vacuously balanced and accepted here; [`DyckWord`]
/// itself requires semilength >= 1.
pub fn is_dyck(bits: &[u8]) -> bool {
    debug_assert!(bits.iter().all(|&b| b <= 1));
    let mut height = 0i64;
    for &b in bits {
        height += if b == 0 { 1 } else { -1 };
        if height < 0 {
            return false;
        }
    }
    height == 0 && bits.len() % 2 == 0
}

/// A validated Dyck word of semilength n >= 1, stored as 2n bytes with
/// values 0 and 1.
///
/// Construction always validates, so every value of this type satisfies the
/// prefix property. Symbol positions are 1-based in the documentation and in
/// error messages; storage is 0-based.
///
/// The derived ordering is lexicographic with 0 < 1, so `sort` puts words in
/// the same order as [`crate::generate::lex_words`] emits them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckWord {
    bits: Vec<u8>,
}

impl DyckWord {
    /// Validates `bits` (values must be 0/1) and wraps it.
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyWord);
        }
        if bits.len() % 2 != 0 {
            return Err(Error::OddLength(bits.len()));
        }
        if let Some(pos) = bits.iter().position(|&b| b > 1) {
            return Err(Error::InvalidSymbol { position: pos + 1 });
        }
        let mut height = 0i64;
        for (idx, &b) in bits.iter().enumerate() {
            height += if b == 0 { 1 } else { -1 };
            if height < 0 {
                return Err(Error::NegativePrefix { prefix_len: idx + 1 });
            }
        }
        if height != 0 {
            let ones = bits.iter().filter(|&&b| b == 1).count();
            return Err(Error::Unbalanced {
                zeros: bits.len() - ones,
                ones,
            });
        }
        Ok(DyckWord { bits })
    }

    /// Number of 1s (= number of 0s); the word has length `2 * semilength()`.
    pub fn semilength(&self) -> usize {
        self.bits.len() / 2
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = parse_bits(s)?;
        DyckWord::new(bits)
    }
}

/// Parses an ASCII string over {'0','1'} into a bit vector.
pub fn parse_bits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .enumerate()
        .map(|(idx, c)| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Error::InvalidSymbol { position: idx + 1 }),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&[]), 0);
        assert_eq!(valuation(&parse_bits("01010011").unwrap()), 0);
        assert_eq!(valuation(&parse_bits("0001").unwrap()), 2);
    }

    #[test]
    fn valuation_steps_by_one() {
        let bits = parse_bits("0010101101").unwrap();
        let mut prev = 0;
        for i in 1..=bits.len() {
            let v = valuation(&bits[..i]);
            assert_eq!((v - prev).abs(), 1);
            prev = v;
        }
    }

    #[test]
    fn is_dyck_examples() {
        assert!(is_dyck(&parse_bits("01010011").unwrap()));
        assert!(!is_dyck(&parse_bits("10").unwrap()));
        assert!(is_dyck(&parse_bits("0101").unwrap()));
        // vacuous case; DyckWord::new still rejects it
        assert!(is_dyck(&[]));
        assert!(!is_dyck(&parse_bits("010").unwrap()));
        assert!(!is_dyck(&parse_bits("0110").unwrap()));
    }

    #[test]
    fn construction_validates() {
        assert!("01010011".parse::<DyckWord>().is_ok());
        assert_eq!("".parse::<DyckWord>(), Err(Error::EmptyWord));
        assert_eq!("010".parse::<DyckWord>(), Err(Error::OddLength(3)));
        assert_eq!(
            "10".parse::<DyckWord>(),
            Err(Error::NegativePrefix { prefix_len: 1 })
        );
        assert_eq!(
            "0100".parse::<DyckWord>(),
            Err(Error::Unbalanced { zeros: 3, ones: 1 })
        );
        assert_eq!(
            "01x1".parse::<DyckWord>(),
            Err(Error::InvalidSymbol { position: 3 })
        );
        assert_eq!(
            DyckWord::new(vec![0, 2, 1, 1]),
            Err(Error::InvalidSymbol { position: 2 })
        );
    }

    #[test]
    fn display_round_trips() {
        let w: DyckWord = "00110101".parse().unwrap();
        assert_eq!(w.to_string(), "00110101");
        assert_eq!(w.semilength(), 4);
    }

    #[test]
    fn ordering_is_lexicographic() {
        let a: DyckWord = "00001111".parse().unwrap();
        let b: DyckWord = "01010101".parse().unwrap();
        assert!(a < b);
    }
}
