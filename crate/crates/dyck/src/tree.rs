//! Bijection between binary trees on n vertices and Dyck words of
//! semilength n.
//!
//! Encoding wraps a body in `0 .. 1`; the body walks the tree emitting one
//! symbol pair per child edge: `01` for a lone left child, `10` for a lone
//! right child, and `00 .. 11 ..` around the two subtrees when both exist.
//! Decoding strips the outer pair and consumes the rest two symbols at a
//! time, descending along drawn edges and using a stack to return to the
//! vertex whose right subtree a `11` opens.
//!
//! Trees also have a compact text form for the command line:
//! `.` is the empty tree and `(LR)` is a vertex with subtrees L and R, so a
//! single vertex prints as `(..)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::DyckWord;

/// A binary tree: empty, or a vertex with two (possibly empty) subtrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Empty,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    /// A single vertex with no children.
    pub fn leaf() -> Self {
        BinaryTree::Node(Box::new(BinaryTree::Empty), Box::new(BinaryTree::Empty))
    }

    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, BinaryTree::Empty)
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node(l, r) => 1 + l.vertex_count() + r.vertex_count(),
        }
    }

    /// Encodes a non-empty tree as the Dyck word `0 body 1`; the word's
    /// semilength equals the vertex count.
    pub fn encode(&self) -> Result<DyckWord> {
        if self.is_empty() {
            return Err(Error::EmptyTree);
        }
        let mut bits = vec![0u8];
        encode_body(self, &mut bits);
        bits.push(1);
        Ok(DyckWord::new(bits).expect("tree encoding is a Dyck word"))
    }

    /// Decodes any Dyck word back into a tree; inverse of [`Self::encode`].
    pub fn decode(word: &DyckWord) -> BinaryTree {
        let bits = word.bits();
        let inner = &bits[1..bits.len() - 1];
        debug_assert_eq!(inner.len() % 2, 0);
        // arena of (left, right) child slots; 0 is the root
        let mut nodes: Vec<[Option<usize>; 2]> = vec![[None, None]];
        let mut current = 0usize;
        let mut saved: Vec<usize> = Vec::new();
        for pair in inner.chunks_exact(2) {
            let fresh = nodes.len();
            nodes.push([None, None]);
            match pair {
                [0, 1] => nodes[current][0] = Some(fresh),
                [1, 0] => nodes[current][1] = Some(fresh),
                [0, 0] => {
                    saved.push(current);
                    nodes[current][0] = Some(fresh);
                }
                _ => {
                    // 11: the saved vertex becomes current, then takes a
                    // right child; impossible to underflow on a valid word
                    current = saved.pop().expect("11 always pairs with an earlier 00");
                    nodes[current][1] = Some(fresh);
                }
            }
            current = fresh;
        }
        debug_assert!(saved.is_empty(), "stack drains exactly at the end");
        build(&nodes, 0)
    }
}

fn encode_body(tree: &BinaryTree, bits: &mut Vec<u8>) {
    let BinaryTree::Node(left, right) = tree else {
        return;
    };
    match (left.is_empty(), right.is_empty()) {
        (true, true) => {}
        (false, true) => {
            bits.extend_from_slice(&[0, 1]);
            encode_body(left, bits);
        }
        (true, false) => {
            bits.extend_from_slice(&[1, 0]);
            encode_body(right, bits);
        }
        (false, false) => {
            bits.extend_from_slice(&[0, 0]);
            encode_body(left, bits);
            bits.extend_from_slice(&[1, 1]);
            encode_body(right, bits);
        }
    }
}

fn build(nodes: &[[Option<usize>; 2]], idx: usize) -> BinaryTree {
    let make = |slot: Option<usize>| match slot {
        Some(child) => build(nodes, child),
        None => BinaryTree::Empty,
    };
    BinaryTree::node(make(nodes[idx][0]), make(nodes[idx][1]))
}

/// Every binary tree with exactly `n` vertices, each exactly once
/// (C_n trees), by splitting n-1 vertices between the subtrees.
pub fn enumerate_trees(n: usize) -> Vec<BinaryTree> {
    if n == 0 {
        return vec![BinaryTree::Empty];
    }
    let mut out = Vec::new();
    for left_size in 0..n {
        let lefts = enumerate_trees(left_size);
        let rights = enumerate_trees(n - 1 - left_size);
        for left in &lefts {
            for right in &rights {
                out.push(BinaryTree::node(left.clone(), right.clone()));
            }
        }
    }
    out
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Empty => write!(f, "."),
            BinaryTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    /// Parses the grammar `T := "." | "(" T T ")"`, rejecting trailing
    /// input; errors carry the byte offset of the first violation.
    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let (tree, consumed) = parse_at(bytes, 0)?;
        if consumed != bytes.len() {
            return Err(Error::TreeSyntax {
                offset: consumed,
                reason: "trailing input after a complete tree",
            });
        }
        Ok(tree)
    }
}

fn parse_at(bytes: &[u8], at: usize) -> Result<(BinaryTree, usize)> {
    match bytes.get(at) {
        Some(b'.') => Ok((BinaryTree::Empty, at + 1)),
        Some(b'(') => {
            let (left, after_left) = parse_at(bytes, at + 1)?;
            let (right, after_right) = parse_at(bytes, after_left)?;
            match bytes.get(after_right) {
                Some(b')') => Ok((BinaryTree::node(left, right), after_right + 1)),
                _ => Err(Error::TreeSyntax {
                    offset: after_right,
                    reason: "expected ')'",
                }),
            }
        }
        _ => Err(Error::TreeSyntax {
            offset: at,
            reason: "expected '.' or '('",
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ballot::catalan_closed_form;
    use crate::generate::lex_words;

    fn word(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    #[test]
    fn encode_hand_traced() {
        assert_eq!(BinaryTree::leaf().encode().unwrap(), word("01"));
        let left_only = BinaryTree::node(BinaryTree::leaf(), BinaryTree::Empty);
        assert_eq!(left_only.encode().unwrap(), word("0011"));
        let both = BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf());
        assert_eq!(both.encode().unwrap(), word("000111"));
        assert_eq!(BinaryTree::Empty.encode(), Err(Error::EmptyTree));
    }

    #[test]
    fn decode_hand_traced() {
        assert_eq!(BinaryTree::decode(&word("01")), BinaryTree::leaf());
        assert_eq!(
            BinaryTree::decode(&word("0101")),
            BinaryTree::node(BinaryTree::Empty, BinaryTree::leaf())
        );
        assert_eq!(
            BinaryTree::decode(&word("000111")),
            BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf())
        );
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_trees(0), vec![BinaryTree::Empty]);
        assert_eq!(enumerate_trees(3).len(), 5);
        let trees = enumerate_trees(4);
        assert_eq!(trees.len(), 14);
        let words: std::collections::BTreeSet<String> = trees
            .iter()
            .map(|t| t.encode().unwrap().to_string())
            .collect();
        assert_eq!(words.len(), 14);
    }

    #[test]
    fn semilength_equals_vertex_count() {
        for n in 1..=6 {
            for tree in enumerate_trees(n) {
                let encoded = tree.encode().unwrap();
                assert_eq!(encoded.semilength(), tree.vertex_count());
            }
        }
    }

    #[test]
    fn round_trips() {
        for n in 1..=6 {
            for tree in enumerate_trees(n) {
                assert_eq!(BinaryTree::decode(&tree.encode().unwrap()), tree);
            }
            for w in lex_words(n) {
                assert_eq!(BinaryTree::decode(&w).encode().unwrap(), w);
            }
        }
    }

    #[test]
    fn bijection_onto_words() {
        for n in 1..=6 {
            let images: std::collections::BTreeSet<DyckWord> = enumerate_trees(n)
                .iter()
                .map(|t| t.encode().unwrap())
                .collect();
            let all: std::collections::BTreeSet<DyckWord> = lex_words(n).collect();
            assert_eq!(images, all);
            assert_eq!(images.len() as u64, catalan_closed_form(n).unwrap());
        }
    }

    #[test]
    fn text_format() {
        assert_eq!(BinaryTree::leaf().to_string(), "(..)");
        let left_only = BinaryTree::node(BinaryTree::leaf(), BinaryTree::Empty);
        assert_eq!(left_only.to_string(), "((..).)");
        let both = BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf());
        assert_eq!(both.to_string(), "((..)(..))");
        assert_eq!(BinaryTree::Empty.to_string(), ".");
    }

    #[test]
    fn text_parse() {
        assert_eq!("(..)".parse::<BinaryTree>().unwrap(), BinaryTree::leaf());
        assert_eq!(
            "(.(..))".parse::<BinaryTree>().unwrap(),
            BinaryTree::node(BinaryTree::Empty, BinaryTree::leaf())
        );
        assert_eq!(
            "((..".parse::<BinaryTree>(),
            Err(Error::TreeSyntax {
                offset: 4,
                reason: "expected ')'",
            })
        );
        assert_eq!(
            "(..)x".parse::<BinaryTree>(),
            Err(Error::TreeSyntax {
                offset: 4,
                reason: "trailing input after a complete tree",
            })
        );
        for n in 0..=5 {
            for tree in enumerate_trees(n) {
                assert_eq!(tree.to_string().parse::<BinaryTree>().unwrap(), tree);
            }
        }
    }
}
