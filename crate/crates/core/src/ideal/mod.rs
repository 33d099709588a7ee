//! Ideals of `R = k[x..]/Q`: sums, products, powers, intersections, colons,
//! saturation, membership and equality, graded dimensions, and an independent
//! degree-truncated linear-algebra membership oracle.
//!
//! Every operation lifts generators to the ambient polynomial ring and adjoins `Q`;
//! the reduced Gröbner basis of that lift is the canonical form of the ideal.

mod graded;
mod oracle;

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, eliminate, DivisorSet, GroebnerBasis};
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial, Ring, RingPresentation, Term};

/// Iteration cap for [`Ideal::saturate`].
pub const SATURATION_CAP: usize = 64;

/// An ideal of a ring presentation. Cheap to clone; the Gröbner basis is computed on
/// first use and then shared.
#[derive(Clone)]
pub struct Ideal(Arc<IdealData>);

struct IdealData {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
    powers: Mutex<Vec<Ideal>>,
}

impl Ideal {
    /// Ideal generated by `gens`. Generators are reduced modulo `Q`; zeros and repeated
    /// (up to scalar) generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            ring.base().check(g)?;
        }
        Ok(Ideal::from_gens(ring, gens))
    }

    fn from_gens(ring: &Ring, gens: Vec<Polynomial>) -> Ideal {
        let mut kept: Vec<Polynomial> = Vec::with_capacity(gens.len());
        let mut keys: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens {
            let g = ring.reduce(&g);
            if g.is_zero() {
                continue;
            }
            let key = g.monic();
            if !keys.contains(&key) {
                keys.push(key);
                kept.push(g);
            }
        }
        Ideal(Arc::new(IdealData {
            ring: ring.clone(),
            gens: kept,
            gb: OnceLock::new(),
            powers: Mutex::new(Vec::new()),
        }))
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::from_gens(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::from_gens(ring, vec![ring.base().one()])
    }

    /// The graded maximal ideal `(x_1, …, x_r)`.
    pub fn maximal(ring: &Ring) -> Ideal {
        let b = ring.base();
        Ideal::from_gens(ring, (0..b.nvars()).map(|i| b.var(i)).collect())
    }

    pub fn principal(ring: &Ring, f: Polynomial) -> Result<Ideal> {
        Ideal::new(ring, vec![f])
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    fn base(&self) -> &PolyRing {
        self.0.ring.base()
    }

    /// Generators, as normal forms modulo `Q`.
    pub fn gens(&self) -> &[Polynomial] {
        &self.0.gens
    }

    /// Reduced Gröbner basis of the lifted ideal `gens + Q` in the ambient ring.
    pub fn gb(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.0.gb.get() {
            return Ok(gb);
        }
        let ring = self.ring();
        let mut lifted = self.0.gens.clone();
        lifted.extend_from_slice(ring.quotient_gb().basis());
        let gb = buchberger(ring.base(), &lifted, ring.config())?;
        // first writer wins; all writers computed the same canonical basis
        let _ = self.0.gb.set(gb);
        Ok(self.0.gb.get().unwrap())
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if Arc::ptr_eq(self.ring(), other.ring()) || **self.ring() == **other.ring() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    /// `f ∈ I`, decided by the normal form against the lifted Gröbner basis.
    pub fn member(&self, f: &Polynomial) -> Result<bool> {
        self.base().check(f)?;
        Ok(self.gb()?.contains(f))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        let gb = other.gb()?;
        Ok(self.0.gens.iter().all(|g| gb.contains(g)))
    }

    /// Generators of `self` lying outside `other`.
    pub fn gens_outside(&self, other: &Ideal) -> Result<Vec<Polynomial>> {
        self.same_ring(other)?;
        let gb = other.gb()?;
        Ok(self.0.gens.iter().filter(|g| !gb.contains(g)).cloned().collect())
    }

    /// Equality via identical reduced Gröbner bases of the lifts.
    pub fn equal(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gb()? == other.gb()?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = self.0.gens.clone();
        gens.extend_from_slice(&other.0.gens);
        Ok(Ideal::from_gens(self.ring(), gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let b = self.base();
        let mut gens = Vec::with_capacity(self.0.gens.len() * other.0.gens.len());
        for f in &self.0.gens {
            for g in &other.0.gens {
                gens.push(b.mul(f, g));
            }
        }
        Ok(Ideal::from_gens(self.ring(), gens))
    }

    /// `I^n`; `I^0` is the unit ideal. Lower powers are cached and reused.
    pub fn power(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Ok(Ideal::unit(self.ring()));
        }
        let mut cache = self.0.powers.lock().unwrap();
        if cache.is_empty() {
            cache.push(self.clone());
        }
        while cache.len() < n as usize {
            let next = cache.last().unwrap().product(self)?;
            cache.push(next);
        }
        Ok(cache[n as usize - 1].clone())
    }

    /// `I ∩ J` by eliminating a tag variable `t` from `t·I + (1−t)·J + Q`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let q = self.ring().quotient_gb().basis();
        let mut a = self.0.gens.clone();
        a.extend_from_slice(q);
        let mut b = other.0.gens.clone();
        b.extend_from_slice(q);
        let gens = intersect_lifted(self.ring(), &a, &b)?;
        Ok(Ideal::from_gens(self.ring(), gens))
    }

    /// `(I : f)`. Computed in the ambient ring as `((I + Q) ∩ (f)) / f`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        self.base().check(f)?;
        let f = self.ring().reduce(f);
        if f.is_zero() {
            return Err(Error::Argument("colon by the zero element".into()));
        }
        let mut a = self.0.gens.clone();
        a.extend_from_slice(self.ring().quotient_gb().basis());
        let inter = intersect_lifted(self.ring(), &a, std::slice::from_ref(&f))?;
        let gens = inter
            .iter()
            .map(|g| divide_exact(self.base(), g, &f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::from_gens(self.ring(), gens))
    }

    /// `(I : J) = ⋂ (I : g)` over the generators `g` of `J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut acc = Ideal::unit(self.ring());
        for g in &other.0.gens {
            let c = self.colon(g)?;
            acc = if acc.is_unit()? { c } else { acc.intersect(&c)? };
        }
        Ok(acc)
    }

    /// `(I : J^∞)`, the stable value of iterated colons.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        Ok(self.saturate_with_steps(other)?.0)
    }

    /// Saturation together with the number of colon steps that changed the ideal.
    pub fn saturate_with_steps(&self, other: &Ideal) -> Result<(Ideal, usize)> {
        self.same_ring(other)?;
        let mut k = self.clone();
        for step in 0..SATURATION_CAP {
            let next = k.colon_ideal(other)?;
            if next.is_subset_of(&k)? {
                return Ok((k, step));
            }
            k = next;
        }
        Err(Error::ResourceCap(format!(
            "saturation did not stabilize within {SATURATION_CAP} steps"
        )))
    }

    /// `(I : m^∞) = R`, i.e. `I` contains a power of the graded maximal ideal.
    pub fn is_m_primary(&self) -> Result<bool> {
        if self.is_unit()? {
            return Ok(false);
        }
        self.saturate(&Ideal::maximal(self.ring()))?.is_unit()
    }

    /// All generators and all quotient generators are homogeneous for the ring weights.
    pub fn is_homogeneous(&self) -> bool {
        self.check_homogeneous().is_ok()
    }

    pub(crate) fn check_homogeneous(&self) -> Result<()> {
        let b = self.base();
        for g in self.0.gens.iter().chain(self.ring().quotient()) {
            if !b.is_homogeneous(g) {
                return Err(Error::Contract(format!(
                    "generator `{}` is not homogeneous for weights {:?}",
                    b.display(g),
                    b.weights()
                )));
            }
        }
        Ok(())
    }

    /// `R/I` as a ring presentation on the same variables.
    pub fn quotient_ring(&self) -> Result<Ring> {
        let ring = self.ring();
        let mut q = ring.quotient().to_vec();
        q.extend_from_slice(&self.0.gens);
        RingPresentation::new(ring.base().clone(), q, *ring.config())
    }

    /// The image of this ideal in `target`, a presentation over the same ambient ring.
    pub fn map_to(&self, target: &Ring) -> Result<Ideal> {
        if target.base() != self.base() {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal::from_gens(target, self.0.gens.clone()))
    }

    /// Generators rendered in the session grammar.
    pub fn gens_display(&self) -> Vec<String> {
        self.0
            .gens
            .iter()
            .map(|g| self.base().display(g).to_string())
            .collect()
    }

    pub fn display_gb(&self) -> Result<Vec<String>> {
        let b = self.base();
        Ok(self.gb()?.basis().iter().map(|g| b.display(g).to_string()).collect())
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gens_display().join(", "))
    }
}

/// `⟨a⟩ ∩ ⟨b⟩` in the ambient polynomial ring of `ring`.
fn intersect_lifted(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let base = ring.base();
    if a.iter().all(|p| p.is_zero()) || b.iter().all(|p| p.is_zero()) {
        return Ok(Vec::new());
    }
    let tagged = tag_ring(base)?;
    let n = tagged.nvars();
    let t = Monomial::var(n, 0, 1);
    let one = base.field().one();
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for p in a {
        gens.push(tagged.mul_term(&tagged.shift_in(p, 1), &one, &t));
    }
    for p in b {
        let lifted = tagged.shift_in(p, 1);
        let tp = tagged.mul_term(&lifted, &one, &t);
        gens.push(tagged.sub(&lifted, &tp));
    }
    let gb = buchberger(&tagged, &gens, ring.config())?;
    let el = eliminate(&gb, 1)?;
    debug_assert_eq!(el.ring().order(), base.order());
    Ok(el.basis().to_vec())
}

/// The ambient ring with one tag variable in front, eliminated first.
fn tag_ring(base: &PolyRing) -> Result<PolyRing> {
    let mut vars = vec![fresh_name("_t", base.vars())];
    vars.extend_from_slice(base.vars());
    let mut weights = vec![1];
    weights.extend_from_slice(base.weights());
    PolyRing::with_order(
        base.field(),
        vars,
        weights,
        MonomialOrder::block(1, MonomialOrder::Lex, base.order().clone()),
    )
}

/// `stem`, or `stem` with trailing underscores, avoiding every name in `taken`.
pub(crate) fn fresh_name(stem: &str, taken: &[String]) -> String {
    let mut name = stem.to_string();
    while taken.contains(&name) {
        name.push('_');
    }
    name
}

/// `g / f` in the ambient polynomial ring; fails unless `f` divides `g`.
fn divide_exact(ring: &PolyRing, g: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    let lt = f.leading_term().unwrap();
    let divs = DivisorSet::new([f]);
    let mut rest = g.clone();
    let mut quot: Vec<Term> = Vec::new();
    while let Some(head) = rest.leading_term() {
        if divs.find(&head.mon).is_none() {
            return Err(Error::Internal(format!(
                "`{}` is not divisible by `{}`",
                ring.display(g),
                ring.display(f)
            )));
        }
        let c = head.coeff.checked_div(&lt.coeff)?;
        let u = head.mon.div(&lt.mon).unwrap();
        rest = ring.sub(&rest, &ring.mul_term(f, &c, &u));
        quot.push(Term::new(c, u));
    }
    Ok(ring.from_terms(quot))
}
