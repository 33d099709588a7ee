use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::polyring::Polynomial;

/// `y ∈ I` with `Iⁿ = y·I^{n-1}`.
#[derive(Debug, Clone)]
pub struct ReductionElement {
    pub y: Polynomial,
    /// 1-based index of the successful candidate.
    pub attempt: usize,
    pub coefficients: Vec<i64>,
}

/// [`find_reduction_element_seeded`] with seed 0.
pub fn find_reduction_element(i: &Ideal, n: u32, attempts: usize) -> Result<Option<ReductionElement>> {
    find_reduction_element_seeded(i, n, attempts, 0)
}

/// Search `y = Σ cᵢgᵢ` over the generators `gᵢ` of an m-primary `I`: first the unit
/// vectors, then pseudorandom `cᵢ ∈ {−2..2}` from a generator seeded by the input and
/// `seed`. Returns `None` once `attempts` candidates have failed.
pub fn find_reduction_element_seeded(
    i: &Ideal,
    n: u32,
    attempts: usize,
    seed: u64,
) -> Result<Option<ReductionElement>> {
    if n == 0 {
        return Err(Error::Argument("reduction exponent must be at least 1".into()));
    }
    if !i.is_m_primary()? {
        return Err(Error::Contract(format!("{i:?} is not m-primary")));
    }
    let base = i.ring().base();
    let gens = i.gens();
    let m = gens.len();
    let target = i.power(n)?;
    let lower = i.power(n - 1)?;

    let mut hasher = DefaultHasher::new();
    i.gens_display().hash(&mut hasher);
    base.vars().hash(&mut hasher);
    n.hash(&mut hasher);
    let mut rng = ChaCha8Rng::seed_from_u64(hasher.finish() ^ seed);

    for attempt in 1..=attempts {
        let coefficients: Vec<i64> = if attempt <= m {
            (0..m).map(|k| i64::from(k + 1 == attempt)).collect()
        } else {
            loop {
                let c: Vec<i64> = (0..m).map(|_| rng.gen_range(-2..=2)).collect();
                if c.iter().any(|&v| v != 0) {
                    break c;
                }
            }
        };
        let mut y = base.zero();
        for (c, g) in coefficients.iter().zip(gens) {
            if *c != 0 {
                y = base.add(&y, &g.scale(&base.field().from_i64(*c)));
            }
        }
        let y = i.ring().reduce(&y);
        if y.is_zero() {
            continue;
        }
        let yi = Ideal::new(i.ring(), vec![y.clone()])?.product(&lower)?;
        if yi.equal(&target)? {
            return Ok(Some(ReductionElement { y, attempt, coefficients }));
        }
    }
    Ok(None)
}
