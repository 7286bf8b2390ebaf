//! Fixed-length bitmap with a cumulative popcount index.

use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RankBitmap {
    words: Vec<u64>,
    /// `ranks[w]` = number of set bits in words `0..w`.
    ranks: Vec<u64>,
    len: usize,
}

impl RankBitmap {
    pub(crate) fn from_bools(bits: &[bool]) -> Self {
        let len = bits.len();
        let mut words = alloc::vec![0u64; len.div_ceil(64)];
        for (i, _) in bits.iter().enumerate().filter(|(_, b)| **b) {
            words[i / 64] |= 1 << (i % 64);
        }
        let mut ranks = Vec::with_capacity(words.len() + 1);
        let mut acc = 0u64;
        for w in &words {
            ranks.push(acc);
            acc += u64::from(w.count_ones());
        }
        ranks.push(acc);
        RankBitmap { words, ranks, len }
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Number of set bits in `[0, i]`.
    pub(crate) fn rank_inclusive(&self, i: usize) -> u64 {
        debug_assert!(i < self.len);
        let (w, b) = (i / 64, i % 64);
        let mask = if b == 63 { u64::MAX } else { (1u64 << (b + 1)) - 1 };
        self.ranks[w] + u64::from((self.words[w] & mask).count_ones())
    }

    pub(crate) fn count_ones(&self) -> u64 {
        self.ranks[self.words.len()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn rank_matches_prefix_count(bits in proptest::collection::vec(any::<bool>(), 1..400)) {
            let bm = RankBitmap::from_bools(&bits);
            let mut acc = 0;
            for (i, b) in bits.iter().enumerate() {
                acc += u64::from(*b);
                prop_assert_eq!(bm.get(i), *b);
                prop_assert_eq!(bm.rank_inclusive(i), acc);
            }
            prop_assert_eq!(bm.count_ones(), acc);
        }
    }
}
