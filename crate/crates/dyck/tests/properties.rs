//! Cross-module invariants: representation round trips, the position-bound
//! characterization of Dyck words, and randomized rank/codec round trips.

use std::sync::OnceLock;

use itertools::Itertools;
use proptest::prelude::*;

use dyck::{
    is_dyck, lex_words, rank, unrank, valuation, BallotTable, BinaryTree, DyckWord,
    PositionVector,
};

fn table() -> &'static BallotTable {
    static TABLE: OnceLock<BallotTable> = OnceLock::new();
    TABLE.get_or_init(|| BallotTable::new(12).unwrap())
}

#[test]
fn word_position_round_trip_exhaustive() {
    for n in 1..=10 {
        for word in lex_words(n) {
            let positions = PositionVector::from_word(&word);
            assert_eq!(PositionVector::new(positions.positions().to_vec(), n), Ok(positions.clone()));
            assert_eq!(positions.to_word(), word);
        }
    }
}

#[test]
fn position_bounds_characterize_dyck_words() {
    // over all strictly increasing p in [1,2n] with |p| = n: the word with
    // 1s at p is Dyck iff b_i >= 2i for all i, and then b_i <= n+i follows
    for n in 1..=6usize {
        for p in (1..=2 * n).combinations(n) {
            let mut bits = vec![0u8; 2 * n];
            for &b in &p {
                bits[b - 1] = 1;
            }
            let lower_ok = p.iter().enumerate().all(|(idx, &b)| b >= 2 * (idx + 1));
            assert_eq!(is_dyck(&bits), lower_ok, "n={n} p={p:?}");
            if lower_ok {
                assert!(p.iter().enumerate().all(|(idx, &b)| b <= n + idx + 1));
                assert!(PositionVector::new(p.clone(), n).is_ok());
            } else {
                assert!(PositionVector::new(p.clone(), n).is_err());
            }
        }
    }
}

/// An arbitrary Dyck word built from raw coin flips: each flip picks the
/// next symbol when both are legal, and the forced symbol otherwise. This
/// construction is independent of the crate's generators.
fn arbitrary_word() -> impl Strategy<Value = DyckWord> {
    (1usize..=10)
        .prop_flat_map(|n| proptest::collection::vec(any::<bool>(), 2 * n))
        .prop_map(|flips| {
            let n = flips.len() / 2;
            let (mut zeros, mut ones) = (0usize, 0usize);
            let bits: Vec<u8> = flips
                .into_iter()
                .map(|flip| {
                    let can_zero = zeros < n;
                    let can_one = ones < zeros;
                    let bit = match (can_zero, can_one) {
                        (true, true) => u8::from(flip),
                        (true, false) => 0,
                        (false, _) => 1,
                    };
                    if bit == 0 {
                        zeros += 1;
                    } else {
                        ones += 1;
                    }
                    bit
                })
                .collect();
            DyckWord::new(bits).expect("construction preserves the prefix property")
        })
}

proptest! {
    #[test]
    fn prop_word_round_trips_through_positions(word in arbitrary_word()) {
        let positions = PositionVector::from_word(&word);
        prop_assert_eq!(positions.to_word(), word);
    }

    #[test]
    fn prop_prefix_valuations_step_by_one(word in arbitrary_word()) {
        let bits = word.bits();
        let mut prev = 0i64;
        for i in 1..=bits.len() {
            let v = valuation(&bits[..i]);
            prop_assert_eq!((v - prev).abs(), 1);
            prev = v;
        }
        prop_assert_eq!(prev, 0);
    }

    #[test]
    fn prop_rank_unrank_round_trip(word in arbitrary_word()) {
        let n = word.semilength();
        let positions = PositionVector::from_word(&word);
        let nr = rank(&positions, table()).unwrap();
        prop_assert!((1..=table().get(n, n).unwrap()).contains(&nr));
        prop_assert_eq!(unrank(nr, n, table()).unwrap(), positions);
    }

    #[test]
    fn prop_tree_codec_round_trips(word in arbitrary_word()) {
        let tree = BinaryTree::decode(&word);
        prop_assert_eq!(tree.vertex_count(), word.semilength());
        prop_assert_eq!(tree.encode().unwrap(), word);
        let text = tree.to_string();
        prop_assert_eq!(text.parse::<BinaryTree>().unwrap(), tree);
    }
}
