//! Numerical semigroups and their classical invariants.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::gcd;
use crate::bitmap::RankBitmap;
use crate::error::{Error, Result};

/// A numerical semigroup S ⊆ ℕ, stored as its minimal generating set plus a
/// membership bitmap over `[0, c]`.
///
/// Every integer at or above the conductor is a member, so queries past the
/// bitmap never touch it. Instances are immutable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    members: RankBitmap,
    genus: u64,
    conductor: u64,
    multiplicity: u64,
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`.
    ///
    /// Membership is sieved until a run of `min(gens)` consecutive members is
    /// found; for coprime generators this happens before `min · max`.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        Self::sieve(gens, u64::MAX)
    }

    /// As [`from_generators`](Self::from_generators), but gives up with
    /// [`Error::ConductorTooLarge`] once the conductor is known to exceed `cap`.
    pub fn from_generators_capped(gens: &[u64], cap: u64) -> Result<Self> {
        Self::sieve(gens, cap)
    }

    fn sieve(gens: &[u64], cap: u64) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::invalid("empty generator list"));
        }
        if gens.contains(&0) {
            return Err(Error::invalid("generators must be positive"));
        }
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::NotNumerical { gcd: d });
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let smallest = sorted[0];
        let largest = sorted[sorted.len() - 1];
        let bound = smallest.checked_mul(largest).ok_or(Error::Overflow)?;
        let step = usize::try_from(smallest).map_err(|_| Error::Overflow)?;

        let mut bits = alloc::vec![true];
        let mut run = 1usize;
        let mut x = 0usize;
        while run < step {
            x += 1;
            // A conductor ≤ cap means x never needs to pass cap + step − 1.
            if (x as u64).saturating_sub(step as u64) >= cap {
                return Err(Error::ConductorTooLarge { at_least: x as u64 - step as u64 + 1, cap });
            }
            let member = sorted
                .iter()
                .take_while(|&&g| g as usize <= x)
                .any(|&g| bits[x - g as usize]);
            bits.push(member);
            run = if member { run + 1 } else { 0 };
        }
        // bits[x + 1 - step ..= x] are all members, so the conductor is x + 1 - step.
        let conductor = x + 1 - step;
        debug_assert!(conductor as u64 <= bound);
        bits.truncate(conductor + 1);
        Ok(Self::from_trimmed_bits(bits))
    }

    /// The semigroup whose members below `limit` are given by `member`; every
    /// integer `≥ limit` is taken to be a member.
    ///
    /// Fails with [`Error::InvalidInput`] if the described set does not contain
    /// 0 or is not closed under addition.
    pub fn from_membership(limit: u64, member: impl Fn(u64) -> bool) -> Result<Self> {
        let limit = usize::try_from(limit).map_err(|_| Error::Overflow)?;
        let mut bits: Vec<bool> = (0..limit).map(|x| member(x as u64)).collect();
        bits.push(true);
        if !bits[0] {
            return Err(Error::invalid("0 must be a member"));
        }
        let conductor = bits.iter().rposition(|b| !b).map_or(0, |f| f + 1);
        bits.truncate(conductor + 1);
        let s = Self::from_trimmed_bits(bits);
        let regenerated = Self::from_generators(&s.generators)?;
        if regenerated != s {
            return Err(Error::invalid("set is not closed under addition"));
        }
        Ok(s)
    }

    /// `bits` covers `[0, c]` with `bits[c]` set and `bits[c - 1]` clear.
    fn from_trimmed_bits(bits: Vec<bool>) -> Self {
        let conductor = bits.len() as u64 - 1;
        let members = RankBitmap::from_bools(&bits);
        let genus = conductor + 1 - members.count_ones();
        let multiplicity = if conductor == 0 {
            1
        } else {
            bits.iter().skip(1).position(|&b| b).map_or(conductor, |p| p as u64 + 1)
        };
        let mut s = NumericalSemigroup {
            generators: Vec::new(),
            members,
            genus,
            conductor,
            multiplicity,
        };
        s.generators = s.minimal_generators();
        s
    }

    /// Minimal generators: the multiplicity plus the nonzero Apéry elements
    /// that are not a sum of two nonzero Apéry elements.
    fn minimal_generators(&self) -> Vec<u64> {
        let m = self.multiplicity;
        let ap = self.apery_by_residue(m);
        let in_ap = |d: u64| d != 0 && ap[(d % m) as usize] == d;
        let mut gens: Vec<u64> = ap
            .iter()
            .copied()
            .filter(|&w| w != 0)
            .filter(|&w| !ap.iter().any(|&u| u != 0 && u < w && in_ap(w - u)))
            .collect();
        gens.push(m);
        gens.sort_unstable();
        gens
    }

    fn apery_by_residue(&self, n: u64) -> Vec<u64> {
        (0..n)
            .map(|i| {
                let mut x = i;
                while !self.contains_u(x) {
                    x += n;
                }
                x
            })
            .collect()
    }

    fn contains_u(&self, x: u64) -> bool {
        x >= self.conductor || self.members.get(x as usize)
    }

    /// Minimal generating set, ascending.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Largest gap, or −1 for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Smallest nonzero element (1 for ℕ).
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && self.contains_u(x as u64)
    }

    /// l(x) = |S ∩ [0, x]|.
    pub fn count_up_to(&self, x: i64) -> u64 {
        if x < 0 {
            0
        } else if x as u64 >= self.conductor {
            x as u64 - self.genus + 1
        } else {
            self.members.rank_inclusive(x as usize)
        }
    }

    /// |S ∩ [lo, hi]|, zero for an empty range.
    pub fn count_between(&self, lo: i64, hi: i64) -> u64 {
        if lo > hi {
            0
        } else {
            self.count_up_to(hi) - self.count_up_to(lo - 1)
        }
    }

    /// Members in `[0, c]`, ascending.
    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        (0..=self.conductor).filter(move |&x| self.members.get(x as usize))
    }

    /// Gaps, ascending.
    pub fn gaps(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.conductor).filter(move |&x| !self.members.get(x as usize))
    }

    /// Ap(S, n) = {s ∈ S : s − n ∉ S}, ascending; one element per residue
    /// class mod `n`.
    pub fn apery_set(&self, n: u64) -> Result<Vec<u64>> {
        if n == 0 || !self.contains_u(n) {
            return Err(Error::invalid(alloc::format!(
                "Apéry set needs a positive member, got {n}"
            )));
        }
        let mut ap = self.apery_by_residue(n);
        ap.sort_unstable();
        Ok(ap)
    }

    /// c = 2g.
    pub fn is_symmetric(&self) -> bool {
        self.conductor == 2 * self.genus
    }

    /// No two consecutive members inside `[0, c − 1]`.
    pub fn is_sparse(&self) -> bool {
        let below = self.conductor as usize;
        (1..below).all(|x| !(self.members.get(x - 1) && self.members.get(x)))
    }

    /// φ(x) = F − x on `[0, F]`.
    pub fn phi(&self, x: u64) -> Result<u64> {
        let f = self.frobenius();
        if f < 0 || x > f as u64 {
            return Err(Error::invalid(alloc::format!(
                "φ is defined on [0, F] = [0, {f}], got {x}"
            )));
        }
        Ok(f as u64 - x)
    }

    /// e(S) = m(S).
    pub fn has_max_embedding_dimension(&self) -> bool {
        self.generators.len() as u64 == self.multiplicity
    }

    /// T = {s − m : s ∈ S, s ≠ 0} ∪ {0}, a numerical semigroup exactly when S
    /// has maximal embedding dimension.
    pub fn derived_semigroup(&self) -> Result<NumericalSemigroup> {
        if !self.has_max_embedding_dimension() {
            return Err(Error::NotMaxEmbedding {
                embedding_dimension: self.generators.len(),
                multiplicity: self.multiplicity,
            });
        }
        let m = self.multiplicity;
        Self::from_membership(self.conductor.saturating_sub(m), |t| {
            t == 0 || self.contains_u(t + m)
        })
    }

    /// ℕ itself.
    pub fn naturals() -> Self {
        Self::from_trimmed_bits(alloc::vec![true])
    }

    /// Bitmap length, i.e. `c + 1`.
    pub fn bitmap_len(&self) -> usize {
        self.members.len()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}
