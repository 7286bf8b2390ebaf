//! Semigroups whose member runs grow while their gap runs shrink.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::semigroup::NumericalSemigroup;

/// A maximal run `[start, end]` of consecutive members strictly between 0
/// and the conductor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub start: u64,
    pub end: u64,
}

impl Block {
    pub fn len(&self) -> u64 {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Writes S = {0} ⊔ [a₁, b₁] ⊔ … ⊔ [a_r, b_r] ⊔ [c, ∞) and returns the inner
/// runs.
pub fn block_decomposition(s: &NumericalSemigroup) -> Vec<Block> {
    let mut blocks: Vec<Block> = Vec::new();
    let c = s.conductor();
    for x in s.members().filter(|&x| x != 0 && x < c) {
        match blocks.last_mut() {
            Some(b) if b.end + 1 == x => b.end = x,
            _ => blocks.push(Block { start: x, end: x }),
        }
    }
    blocks
}

/// Maximizer of σ on S ∩ [0, c] and its value, for semigroups whose run
/// lengths l₀ ≤ l₁ ≤ … ≤ l_r are nondecreasing and gap lengths
/// g₀ ≥ g₁ ≥ … ≥ g_r nonincreasing (with the run {0} as block 0).
///
/// The maximizer is a_j with j the first inner block with l_j ≥ g_j, or the
/// conductor when there is none, and σ(a_j) = a_j/2 − (l₁ + … + l_{j−1}) − 1.
pub fn monotone_block_maximizer(s: &NumericalSemigroup) -> Result<(u64, HalfInt)> {
    let c = s.conductor();
    if c == 0 {
        return Ok((0, HalfInt::ZERO));
    }
    let mut runs = alloc::vec![Block { start: 0, end: 0 }];
    runs.extend(block_decomposition(s));
    let starts_after: Vec<u64> = runs.iter().skip(1).map(|b| b.start).chain([c]).collect();
    let lens: Vec<u64> = runs.iter().map(Block::len).collect();
    let gaps: Vec<u64> = runs
        .iter()
        .zip(&starts_after)
        .map(|(b, next)| next - b.end - 1)
        .collect();
    if lens.windows(2).any(|w| w[0] > w[1]) || gaps.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotMonotoneBlocks);
    }
    let j = (1..runs.len())
        .find(|&i| lens[i] >= gaps[i])
        .unwrap_or(runs.len());
    let a_j = if j < runs.len() { runs[j].start } else { c };
    let before: u64 = lens[1..j].iter().sum();
    let twice = a_j as i128 - 2 * before as i128 - 2;
    Ok((a_j, HalfInt::from_twice(twice)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn decomposition() {
        let b = block_decomposition(&sg(&[4, 5]));
        assert_eq!(
            b,
            [
                Block { start: 4, end: 5 },
                Block { start: 8, end: 10 }
            ]
        );
    }

    #[test]
    fn maximizers() {
        assert_eq!(monotone_block_maximizer(&sg(&[4, 5])).unwrap(), (4, HalfInt::ONE));
        assert_eq!(
            monotone_block_maximizer(&sg(&[15, 16, 17])).unwrap(),
            (60, HalfInt::from_twice(28))
        );
        assert_eq!(monotone_block_maximizer(&sg(&[2, 3])).unwrap(), (2, HalfInt::ZERO));
        assert_eq!(monotone_block_maximizer(&sg(&[3, 4, 5])).unwrap(), (3, HalfInt::HALF));
        assert_eq!(
            monotone_block_maximizer(&NumericalSemigroup::naturals()).unwrap(),
            (0, HalfInt::ZERO)
        );
    }

    #[test]
    fn rejects_non_monotone() {
        // ⟨5, 7⟩ has gap lengths 4, 1, 2, … which increase.
        assert_eq!(monotone_block_maximizer(&sg(&[5, 7])), Err(Error::NotMonotoneBlocks));
        // ⟨4, 6, 9⟩ = {0, 4, 6, 8, 9, 10, 12, …} is fine: runs 1, 1, 1, 3 and gaps 3, 1, 1, 1.
        assert_eq!(monotone_block_maximizer(&sg(&[4, 6, 9])).unwrap(), (4, HalfInt::ONE));
    }
}
