use clifford_core::NumericalSemigroup;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_CONDUCTOR: u64 = 20_000;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Random generator set, divided through by its gcd.
fn random_generators(rng: &mut ChaCha8Rng) -> Vec<u64> {
    let k = rng.gen_range(2..=5);
    let hi = *[12u64, 40, 120, 300].choose(rng).unwrap();
    let mut gens: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=hi)).collect();
    let d = gens.iter().fold(0, |a, &b| gcd(a, b));
    gens.iter_mut().for_each(|x| *x /= d);
    gens
}

/// (m + T) ∪ {0} for a random T and a member m of T; closure needs m ∈ T,
/// and the result always has maximal embedding dimension.
fn random_max_embedding(rng: &mut ChaCha8Rng) -> NumericalSemigroup {
    let t = NumericalSemigroup::from_generators(&random_generators(rng)).unwrap();
    let candidates: Vec<u64> = (2..=t.conductor() + 30).filter(|&x| t.contains(x as i64)).collect();
    let m = *candidates[..candidates.len().min(40)].choose(rng).unwrap();
    NumericalSemigroup::from_membership(t.conductor() + m, |x| x == 0 || (x >= m && t.contains((x - m) as i64)))
        .unwrap()
}

/// Deterministic corpus: mostly random generator sets, with a share of
/// two-generator (hence symmetric) and maximal-embedding instances.
pub fn corpus(n: usize, seed: u64) -> Vec<NumericalSemigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let s = match out.len() % 5 {
            0 => random_max_embedding(&mut rng),
            1 => {
                let (a, b) = (rng.gen_range(2..=140u64), rng.gen_range(2..=140u64));
                let d = gcd(a, b);
                NumericalSemigroup::from_generators(&[a / d, b / d]).unwrap()
            }
            _ => NumericalSemigroup::from_generators(&random_generators(&mut rng)).unwrap(),
        };
        if s.conductor() <= MAX_CONDUCTOR {
            out.push(s);
        }
    }
    out
}
