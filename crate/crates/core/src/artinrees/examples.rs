//! The two dimension-two families on which no uniform Artin-Rees number exists.
//!
//! Both use `Iₙ = (xⁿ, yⁿ, x^{n-1}y + w)` and `J = (z)`, with `w = z` in
//! `k[x,y,z]/(z²)` (deg z = n) and `w = zⁿ` in `k[x,y,z]/(xz)`. In each case
//! `ξ ∈ Iₙⁿ ∩ J` but `ξ ∉ Iₙ(Iₙ^{n-1} ∩ J)`.

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::groebner::GbConfig;
use crate::ideal::Ideal;
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial, Ring, RingPresentation};

/// Outcome of one counterexample verification.
#[derive(Debug, Clone)]
pub struct ExampleVerdict {
    pub n: u32,
    pub ring: Ring,
    pub i: Ideal,
    pub j: Ideal,
    pub xi: Polynomial,
    /// `ξ ∈ Iₙⁿ ∩ J`.
    pub in_lhs: bool,
    /// `ξ ∈ Iₙ(Iₙ^{n-1} ∩ J)`.
    pub in_rhs: bool,
    /// The closed-form expression of `ξ` through `Iₙⁿ` holds exactly in `R`.
    pub identity: bool,
}

impl ExampleVerdict {
    /// Membership, non-membership, and the identity all as claimed.
    pub fn confirmed(&self) -> bool {
        self.in_lhs && !self.in_rhs && self.identity
    }

    pub fn xi_display(&self) -> String {
        self.ring.base().display(&self.xi).to_string()
    }
}

fn xyz(field: Field, weights: Vec<u32>, order: MonomialOrder) -> Result<PolyRing> {
    PolyRing::with_order(field, vec!["x".into(), "y".into(), "z".into()], weights, order)
}

fn mono(r: &PolyRing, e: [u32; 3]) -> Polynomial {
    r.monomial(Monomial::from_exponents(&e))
}

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::Argument(format!("the family starts at n = 2, got {n}")));
    }
    Ok(())
}

/// `R = k[x,y,z]/(z²)` graded by `(1, 1, n)`, `Iₙ = (xⁿ, yⁿ, x^{n-1}y + z)`, `J = (z)`,
/// `ξ = x^{(n-1)²}y^{n-1}z`. Over `𝔽ₚ` the characteristic must exceed `n`, otherwise
/// the coefficient `n` of `ξ` in `(x^{n-1}y + z)ⁿ` may vanish.
pub fn verify_example1(n: u32, field: Field, config: GbConfig) -> Result<ExampleVerdict> {
    check_n(n)?;
    let p = field.characteristic();
    if p != 0 && p <= n as u64 {
        return Err(Error::Contract(format!(
            "characteristic {p} must exceed n = {n} so that n is a unit"
        )));
    }
    let w = vec![1, 1, n];
    let base = xyz(field, w.clone(), MonomialOrder::WeightedGrevlex(w))?;
    let z2 = mono(&base, [0, 0, 2]);
    let ring = RingPresentation::new(base.clone(), vec![z2], config)?;
    let head = base.add(&mono(&base, [n - 1, 1, 0]), &mono(&base, [0, 0, 1]));
    let xi = mono(&base, [(n - 1) * (n - 1), n - 1, 1]);
    // (x^{n-1}y + z)^n - x^{n(n-1)}y^n - n·ξ ≡ 0 mod z²
    let lhs = base.sub(&base.pow(&head, n), &mono(&base, [n * (n - 1), n, 0]));
    let n_xi = xi.scale(&field.from_i64(n as i64));
    let identity = ring.reduce(&base.sub(&lhs, &n_xi)).is_zero();
    let gens = vec![mono(&base, [n, 0, 0]), mono(&base, [0, n, 0]), head];
    finish(n, ring, gens, mono(&base, [0, 0, 1]), xi, identity)
}

/// `R = k[x,y,z]/(xz)` with the standard grading, `Iₙ = (xⁿ, yⁿ, x^{n-1}y + zⁿ)`,
/// `J = (z)`, `ξ = z^{n²}`. Valid in every characteristic: the cross terms of
/// `(x^{n-1}y + zⁿ)ⁿ` all contain `xz`.
pub fn verify_example2(n: u32, field: Field, config: GbConfig) -> Result<ExampleVerdict> {
    check_n(n)?;
    let base = xyz(field, vec![1, 1, 1], MonomialOrder::Grevlex)?;
    let ring = RingPresentation::new(base.clone(), vec![mono(&base, [1, 0, 1])], config)?;
    let head = base.add(&mono(&base, [n - 1, 1, 0]), &mono(&base, [0, 0, n]));
    let xi = mono(&base, [0, 0, n * n]);
    let lhs = base.sub(&base.pow(&head, n), &mono(&base, [n * (n - 1), n, 0]));
    let identity = ring.reduce(&base.sub(&lhs, &xi)).is_zero();
    let gens = vec![mono(&base, [n, 0, 0]), mono(&base, [0, n, 0]), head];
    finish(n, ring, gens, mono(&base, [0, 0, 1]), xi, identity)
}

fn finish(
    n: u32,
    ring: Ring,
    gens: Vec<Polynomial>,
    z: Polynomial,
    xi: Polynomial,
    identity: bool,
) -> Result<ExampleVerdict> {
    let i = Ideal::new(&ring, gens)?;
    let j = Ideal::new(&ring, vec![z])?;
    let in_lhs = i.power(n)?.intersect(&j)?.member(&xi)?;
    let rhs = i.product(&i.power(n - 1)?.intersect(&j)?)?;
    let in_rhs = rhs.member(&xi)?;
    Ok(ExampleVerdict { n, ring, i, j, xi, in_lhs, in_rhs, identity })
}
