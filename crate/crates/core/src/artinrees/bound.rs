//! Multiplicity, `ℓ(H⁰ₘ(R/J))`, and the dimension-one uniform bound.

use crate::error::{Error, Result};
use crate::groebner::buchberger;
use crate::ideal::Ideal;
use crate::polyring::{monomials_of_degree, Ring};

/// Largest `n` at which `ℓ(R/m^{n+1})` is sampled.
pub const MULTIPLICITY_HORIZON: u32 = 24;

/// `ℓ(R/m^{n+1})`: standard monomials of `Q + m^{n+1}` in the ambient ring. Valid
/// without any grading on `Q`.
fn samuel_length(ring: &Ring, n: u32) -> Result<u64> {
    let base = ring.base();
    let ones = vec![1u32; base.nvars()];
    let mut gens: Vec<_> = ring.quotient_gb().basis().to_vec();
    gens.extend(monomials_of_degree(&ones, n as u64 + 1).into_iter().map(|m| base.monomial(m)));
    let gb = buchberger(base, &gens, ring.config())?;
    Ok((0..=n as u64)
        .map(|d| {
            monomials_of_degree(&ones, d)
                .iter()
                .filter(|m| !gb.lm_divides(m))
                .count() as u64
        })
        .sum())
}

/// Hilbert–Samuel multiplicity of a one-dimensional ring: the first difference of
/// `n ↦ ℓ(R/m^{n+1})` once three consecutive differences agree.
pub fn multiplicity(ring: &Ring) -> Result<u64> {
    if ring.is_zero_ring() {
        return Err(Error::Dimension("the zero ring has no multiplicity".into()));
    }
    let mut lengths = Vec::new();
    for n in 0..=MULTIPLICITY_HORIZON {
        lengths.push(samuel_length(ring, n)?);
        let k = lengths.len();
        if k >= 4 {
            let d = |i: usize| lengths[i] - lengths[i - 1];
            let (a, b, c) = (d(k - 3), d(k - 2), d(k - 1));
            if a == b && b == c {
                if c == 0 {
                    return Err(Error::Dimension("ring has dimension 0".into()));
                }
                return Ok(c);
            }
        }
    }
    Err(Error::Dimension(format!(
        "dimension ≠ 1 or horizon {MULTIPLICITY_HORIZON} too small"
    )))
}

/// `ℓ((J : m^∞)/J)` for a homogeneous `J`.
///
/// If `J : m^∞ = J : mᵏ` then `mᵏ(J : m^∞) ⊆ J`, so the graded pieces of `J` and its
/// saturation agree from degree `max deg(saturation generators) + k·max(weight)` on; the
/// sum below stops there.
pub fn h0_length(j: &Ideal) -> Result<u64> {
    j.check_homogeneous()?;
    let ring = j.ring();
    let (sat, k) = j.saturate_with_steps(&Ideal::maximal(ring))?;
    if k == 0 {
        return Ok(0);
    }
    let base = ring.base();
    let wmax = *base.weights().iter().max().unwrap_or(&1) as u64;
    let top = sat
        .gens()
        .iter()
        .filter_map(|g| base.weighted_degree(g))
        .max()
        .unwrap_or(0)
        + k as u64 * wmax;
    let mut len = 0;
    for d in 0..top {
        len += j.graded_dim(d)? - sat.graded_dim(d)?;
    }
    Ok(len)
}

/// Value of the uniform bound `max{r, ℓ} + ℓ` for the pair `(J, R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoremBound {
    /// `R/J` is Cohen–Macaulay (`ℓ = 0`); `r` is its multiplicity.
    Available { r: u64, ell: u64, bound: u64 },
    /// `R/J` has depth zero; `r` would need a primary decomposition. `e_cm` is the
    /// multiplicity of the Cohen–Macaulay quotient `R/(J : m^∞)`, for information.
    Unavailable { ell: u64, e_cm: u64 },
}

impl TheoremBound {
    pub fn value(&self) -> Option<u64> {
        match self {
            TheoremBound::Available { bound, .. } => Some(*bound),
            TheoremBound::Unavailable { .. } => None,
        }
    }
}

/// Uniform Artin-Rees bound for `(J, R)` with `dim R/J = 1` and `J` homogeneous.
pub fn theorem_bound(j: &Ideal) -> Result<TheoremBound> {
    let ell = h0_length(j)?;
    if ell == 0 {
        let r = multiplicity(&j.quotient_ring()?)?;
        return Ok(TheoremBound::Available { r, ell, bound: r });
    }
    let sat = j.saturate(&Ideal::maximal(j.ring()))?;
    let e_cm = multiplicity(&sat.quotient_ring()?)?;
    Ok(TheoremBound::Unavailable { ell, e_cm })
}
