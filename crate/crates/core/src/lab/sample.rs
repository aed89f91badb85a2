use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::GeneratorId;
use crate::index::ExponentVector;
use crate::pbw::{ModuleVector, TwistedInduced};
use crate::scalar::Scalar;
use crate::zoo::window_generators;

use super::IdentityCase;

fn coefficient(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let a = Scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        let b = if rng.gen_bool(0.25) { Scalar::ratio(rng.gen_range(-2..=2), 1) } else { Scalar::zero() };
        let s = &a + &(&b * &Scalar::i());
        if !s.is_zero() {
            return s;
        }
    }
}

/// `n` nonzero vectors with up to `max_terms` terms supported in `pool`,
/// reproducible from `seed`.
pub fn random_vectors(m: &TwistedInduced, pool: &[ExponentVector], n: usize, max_terms: usize, seed: u64) -> Vec<ModuleVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = m.labels().len();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let k = rng.gen_range(1..=max_terms.min(pool.len()));
        let mut v = m.zero();
        for i in pool.choose_multiple(&mut rng, k) {
            v.add_term(i.clone(), rng.gen_range(0..dim), &coefficient(&mut rng));
        }
        if !v.is_zero() {
            out.push(v);
        }
    }
    out
}

/// `n` pairs of a positive generator and a word over non-positive twisted
/// generators, both with `|index2| <= window`.
pub fn random_identity_cases(n: usize, window: i32, max_len: usize, seed: u64) -> Vec<IdentityCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = window_generators(window);
    let pos: Vec<GeneratorId> = gens.iter().copied().filter(|g| g.degree2() > 0).collect();
    let neg: Vec<GeneratorId> = gens.iter().copied().filter(|g| g.degree2() <= 0).collect();
    (0..n)
        .map(|_| {
            let x = *pos.choose(&mut rng).expect("nonempty window");
            let len = rng.gen_range(0..=max_len);
            let u = (0..len).map(|_| *neg.choose(&mut rng).expect("nonempty window")).collect();
            IdentityCase { x, u }
        })
        .collect()
}
