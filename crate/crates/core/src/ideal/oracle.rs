//! Membership by linear algebra in one degree: `f ∈ I` iff `f` lies in the `k`-span of
//! `{u·g : g a generator of I or Q, u a monomial, deg u + deg g = deg f}`. Valid for
//! homogeneous data only, and shares no code with the Gröbner engine beyond
//! polynomial arithmetic.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::polyring::{monomials_of_degree, Monomial, PolyRing, Polynomial};

use super::Ideal;

/// Row-echelon span keyed by pivot (leading) monomial.
struct Echelon<'r> {
    ring: &'r PolyRing,
    rows: HashMap<Monomial, Polynomial>,
}

impl Echelon<'_> {
    /// Reduce `v` against the pivots; returns the residue.
    fn residue(&self, mut v: Polynomial) -> Polynomial {
        while let Some(lt) = v.leading_term() {
            let Some(row) = self.rows.get(&lt.mon) else { break };
            let c = lt.coeff.clone();
            let one = Monomial::one(self.ring.nvars());
            v = self.ring.sub(&v, &self.ring.mul_term(row, &c, &one));
        }
        v
    }

    fn contains(&self, v: Polynomial) -> bool {
        self.residue(v).is_zero()
    }

    fn insert(&mut self, v: Polynomial) {
        let v = self.residue(v);
        if let Some(lm) = v.leading_monomial().cloned() {
            self.rows.insert(lm, v.monic());
        }
    }
}

impl Ideal {
    /// `f ∈ I` by solving the degree-`deg f` linear system directly. `I`, `Q` and `f`
    /// must be homogeneous and `deg f ≤ d`.
    pub fn membership_truncated(&self, f: &Polynomial, d: u64) -> Result<bool> {
        let b = self.ring().base();
        b.check(f)?;
        self.check_homogeneous()?;
        if !b.is_homogeneous(f) {
            return Err(Error::Contract(format!("`{}` is not homogeneous", b.display(f))));
        }
        let Some(e) = b.weighted_degree(f) else {
            return Ok(true);
        };
        if e > d {
            return Err(Error::Contract(format!(
                "degree {e} of `{}` exceeds the truncation bound {d}",
                b.display(f)
            )));
        }
        let mut span = Echelon { ring: b, rows: HashMap::new() };
        let one = b.field().one();
        for g in self.gens().iter().chain(self.ring().quotient()) {
            let Some(dg) = b.weighted_degree(g) else { continue };
            if dg > e {
                continue;
            }
            for u in monomials_of_degree(b.weights(), e - dg) {
                span.insert(b.mul_term(g, &one, &u));
            }
        }
        Ok(span.contains(f.clone()))
    }
}
