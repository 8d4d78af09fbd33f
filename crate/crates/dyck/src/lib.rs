//! Dyck words: validated representations, exhaustive generation in three
//! orders, ranking/unranking through ballot numbers, and a bijective codec
//! to binary trees.
//!
//! A Dyck word of semilength n is a binary word of length 2n in which every
//! prefix has at least as many 0s as 1s; there are C_n of them (the Catalan
//! numbers). The crate works with two interchangeable representations, the
//! word itself ([`DyckWord`]) and the 1-based positions of its 1s
//! ([`PositionVector`]), and keeps both validated at construction.
//!
//! ```
//! use dyck::{BallotTable, DyckWord, PositionVector, lex_words, rank_word, unrank};
//!
//! let table = BallotTable::new(10).unwrap();
//! let word: DyckWord = "01010011".parse().unwrap();
//! assert_eq!(PositionVector::from_word(&word).positions(), &[2, 4, 7, 8]);
//!
//! // 1-based rank under reverse-lexicographic order, and back
//! let nr = rank_word(&word, &table).unwrap();
//! assert_eq!(unrank(nr, 4, &table).unwrap().to_word(), word);
//!
//! // ascending enumeration
//! let first = lex_words(4).next().unwrap();
//! assert_eq!(first.to_string(), "00001111");
//! ```
//!
//! Counts are u64 with checked arithmetic throughout: C_36 is the largest
//! Catalan number that fits, and anything larger reports
//! [`Error::Overflow`] rather than wrapping. All values are immutable after
//! construction and the generators are independent single-threaded
//! iterators, so everything here can be shared or sent across threads
//! freely.

mod ballot;
mod error;
mod generate;
mod position;
mod ranking;
mod tree;
mod word;

pub use ballot::{
    ballot_via_catalan, binomial, catalan, catalan_alternating, catalan_closed_form, BallotTable,
};
pub use error::{Error, Result};
pub use generate::{lex_words, revlex_positions, swap_words, LexDyckWords, RevlexPositions, SwapDyckWords};
pub use position::PositionVector;
pub use ranking::{lex_rank, lex_unrank, rank, rank_word, unrank, unrank_traced, UnrankTrace};
pub use tree::{enumerate_trees, BinaryTree};
pub use word::{is_dyck, parse_bits, valuation, DyckWord};
