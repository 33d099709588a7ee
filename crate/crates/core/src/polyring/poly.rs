use crate::coeff::FieldElement;

use super::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: FieldElement,
    pub mon: Monomial,
}

impl Term {
    pub fn new(coeff: FieldElement, mon: Monomial) -> Term {
        Term { coeff, mon }
    }
}

/// Sparse polynomial: nonzero terms, monomials strictly decreasing in the ring's order.
///
/// The order itself lives in [`super::PolyRing`]; every constructor that has to sort
/// goes through the ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    pub(crate) terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    /// Wrap terms that are already canonical (sorted, merged, nonzero).
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mon)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mon.is_one())
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mon.total_degree()).max()
    }

    /// Maximal weighted degree of a term; `None` stands for the degree of zero (−∞).
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u64> {
        self.terms.iter().map(|t| t.mon.weighted_degree(weights)).max()
    }

    pub fn is_homogeneous(&self, weights: &[u32]) -> bool {
        let mut degs = self.terms.iter().map(|t| t.mon.weighted_degree(weights));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Multiply every coefficient by a nonzero scalar; order is preserved.
    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mon.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(-&t.coeff, t.mon.clone()))
                .collect(),
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.invert().expect("nonzero leading coefficient")),
        }
    }

    /// Variables `0..k` do not occur.
    pub fn avoids_first(&self, k: usize) -> bool {
        self.terms
            .iter()
            .all(|t| t.mon.exponents()[..k].iter().all(|&e| e == 0))
    }
}
