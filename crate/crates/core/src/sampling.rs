//! Seeded random ideals for property tests and the empirical Artin-Rees checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::polyring::{monomials_of_degree, Polynomial, Ring, Term};

/// Shape of sampled generators.
#[derive(Debug, Clone, Copy)]
pub struct SampleShape {
    pub min_gens: usize,
    pub max_gens: usize,
    /// Weighted degrees of generators.
    pub min_degree: u64,
    pub max_degree: u64,
    /// Coefficients are drawn from `-coeff..=coeff`.
    pub coeff: i64,
    /// Upper bound on terms per generator.
    pub max_terms: usize,
}

impl Default for SampleShape {
    fn default() -> Self {
        SampleShape { min_gens: 1, max_gens: 3, min_degree: 1, max_degree: 4, coeff: 3, max_terms: 3 }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coefficient(rng: &mut ChaCha8Rng, c: i64) -> i64 {
    loop {
        let v = rng.gen_range(-c..=c);
        if v != 0 {
            return v;
        }
    }
}

/// Random homogeneous polynomial of weighted degree `d`, or zero if that degree is
/// empty.
pub fn random_homogeneous(ring: &Ring, d: u64, shape: &SampleShape, rng: &mut ChaCha8Rng) -> Polynomial {
    let base = ring.base();
    let mut mons = monomials_of_degree(base.weights(), d);
    mons.shuffle(rng);
    let k = rng.gen_range(1..=shape.max_terms.max(1)).min(mons.len());
    base.from_terms(
        mons.into_iter()
            .take(k)
            .map(|m| Term::new(base.field().from_i64(coefficient(rng, shape.coeff)), m)),
    )
}

/// Random polynomial with terms of total degree `≤ max_degree`, not necessarily
/// homogeneous.
pub fn random_poly(ring: &Ring, shape: &SampleShape, rng: &mut ChaCha8Rng) -> Polynomial {
    let base = ring.base();
    let ones = vec![1u32; base.nvars()];
    let k = rng.gen_range(1..=shape.max_terms.max(1));
    base.from_terms((0..k).map(|_| {
        let d = rng.gen_range(0..=shape.max_degree);
        let mons = monomials_of_degree(&ones, d);
        let m = mons[rng.gen_range(0..mons.len())].clone();
        Term::new(base.field().from_i64(coefficient(rng, shape.coeff)), m)
    }))
}

/// Ideal with random (inhomogeneous) generators.
pub fn random_ideal(ring: &Ring, shape: &SampleShape, rng: &mut ChaCha8Rng) -> Result<Ideal> {
    let k = rng.gen_range(shape.min_gens..=shape.max_gens);
    Ideal::new(ring, (0..k).map(|_| random_poly(ring, shape, rng)).collect())
}

/// Ideal with random homogeneous generators (possibly the zero ideal if the sampled
/// degrees are empty).
pub fn random_homogeneous_ideal(ring: &Ring, shape: &SampleShape, rng: &mut ChaCha8Rng) -> Result<Ideal> {
    let k = rng.gen_range(shape.min_gens..=shape.max_gens);
    let gens = (0..k)
        .map(|_| {
            let d = rng.gen_range(shape.min_degree..=shape.max_degree);
            random_homogeneous(ring, d, shape, rng)
        })
        .collect();
    Ideal::new(ring, gens)
}

/// `count` pairwise distinct proper m-primary homogeneous ideals, deterministic in
/// `seed`.
pub fn sample_m_primary(ring: &Ring, count: usize, seed: u64, shape: &SampleShape) -> Result<Vec<Ideal>> {
    let mut rng = rng(seed);
    let mut out: Vec<Ideal> = Vec::with_capacity(count);
    let budget = 200 * count.max(1);
    for _ in 0..budget {
        if out.len() == count {
            break;
        }
        let i = random_homogeneous_ideal(ring, shape, &mut rng)?;
        if i.is_zero() || !i.is_m_primary()? {
            continue;
        }
        let mut fresh = true;
        for o in &out {
            if o.equal(&i)? {
                fresh = false;
                break;
            }
        }
        if fresh {
            out.push(i);
        }
    }
    if out.len() < count {
        return Err(Error::ResourceCap(format!(
            "found only {} of {count} m-primary ideals in {budget} draws",
            out.len()
        )));
    }
    Ok(out)
}
