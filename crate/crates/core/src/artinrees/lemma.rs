use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::polyring::Polynomial;

use super::reltype::reltype;
use super::strong::check_strong_ar;

/// `N₁ ∩ (N₂ + mⁿ) ⊆ (N₁ ∩ N₂) + m^{n-h}N₁` with `m` the graded maximal ideal.
pub fn check_lemma_first(n1: &Ideal, n2: &Ideal, h: u32, n: u32) -> Result<bool> {
    if h >= n {
        return Err(Error::Argument(format!("need h < n, got h = {h}, n = {n}")));
    }
    let m = Ideal::maximal(n1.ring());
    let lhs = n1.intersect(&n2.sum(&m.power(n)?)?)?;
    let rhs = n1.intersect(n2)?.sum(&m.power(n - h)?.product(n1)?)?;
    lhs.is_subset_of(&rhs)
}

/// Least `h < n` for which the inclusion holds at exponent `n`.
pub fn least_lemma_first_h(n1: &Ideal, n2: &Ideal, n: u32) -> Result<Option<u32>> {
    for h in 0..n {
        if check_lemma_first(n1, n2, h, n)? {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Relation type of `I·(R/J)`.
pub fn reltype_modulo(i: &Ideal, j: &Ideal) -> Result<u32> {
    let ibar = i.map_to(&j.quotient_ring()?)?;
    // I ⊆ J: every Tᵢ maps to zero, so the kernel is (T₁..Tₘ), generated in degree 1
    Ok(if ibar.is_zero() { 1 } else { reltype(&ibar)?.reltype })
}

/// Outcome of the relation-type consequence check.
#[derive(Debug, Clone)]
pub struct RelationLemmaCheck {
    /// Relation type of `I·(R/J)`.
    pub reltype: u32,
    pub h: u32,
    pub nmax: u32,
    /// Exponents `n` with `h < n ≤ nmax` at which equality failed, with a witness.
    pub failures: Vec<(u32, Option<Polynomial>)>,
}

impl RelationLemmaCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// With `h ≥ reltype(I·R/J)` (and `h ≥ 1`), `Iⁿ ∩ J = I^{n-h}(I^h ∩ J)` for every `n > h`.
/// Checks every `h < n ≤ nmax`; a failure contradicts a theorem and signals a bug.
pub fn check_relationtype_lemma(i: &Ideal, j: &Ideal, h: u32, nmax: u32) -> Result<RelationLemmaCheck> {
    let rt = reltype_modulo(i, j)?;
    if h < rt.max(1) {
        return Err(Error::Argument(format!(
            "h = {h} is below the relation type {rt} of I modulo J"
        )));
    }
    let mut failures = Vec::new();
    for n in h + 1..=nmax {
        let c = check_strong_ar(i, j, h, n)?;
        if !c.holds {
            failures.push((n, c.witness));
        }
    }
    Ok(RelationLemmaCheck { reltype: rt, h, nmax, failures })
}
