use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::coeff::{Field, FieldElement};
use crate::error::{Error, Result};

use super::{Monomial, MonomialOrder, Polynomial, Term};

/// Order selector as written by users; weights turn `Grevlex` into weighted grevlex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
}

/// The ambient polynomial ring `k[x_1..x_r]` with weights and a monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(
        field: Field,
        vars: Vec<String>,
        weights: Option<Vec<u32>>,
        kind: OrderKind,
    ) -> Result<PolyRing> {
        let weights = weights.unwrap_or_else(|| vec![1; vars.len()]);
        let order = match kind {
            OrderKind::Lex => MonomialOrder::Lex,
            OrderKind::Grevlex if weights.iter().all(|&w| w == 1) => MonomialOrder::Grevlex,
            OrderKind::Grevlex => MonomialOrder::WeightedGrevlex(weights.clone()),
        };
        PolyRing::with_order(field, vars, weights, order)
    }

    pub fn with_order(
        field: Field,
        vars: Vec<String>,
        weights: Vec<u32>,
        order: MonomialOrder,
    ) -> Result<PolyRing> {
        if weights.len() != vars.len() {
            return Err(Error::Structural(format!(
                "{} weights for {} variables",
                weights.len(),
                vars.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::Structural("weights must be positive".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Structural(format!("duplicate variable `{v}`")));
            }
        }
        Ok(PolyRing {
            field,
            vars,
            weights,
            order,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Order kind a user would write for this ring; `None` for block orders.
    pub fn order_kind(&self) -> Option<OrderKind> {
        match self.order {
            MonomialOrder::Lex => Some(OrderKind::Lex),
            MonomialOrder::Grevlex | MonomialOrder::WeightedGrevlex(_) => Some(OrderKind::Grevlex),
            MonomialOrder::Block { .. } => None,
        }
    }

    pub fn has_unit_weights(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: FieldElement) -> Polynomial {
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn from_i64(&self, c: i64) -> Polynomial {
        self.constant(self.field.from_i64(c))
    }

    /// The variable `x_i`.
    pub fn var(&self, i: usize) -> Polynomial {
        self.term(self.field.one(), Monomial::var(self.nvars(), i, 1))
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        self.term(self.field.one(), m)
    }

    pub fn term(&self, c: FieldElement, m: Monomial) -> Polynomial {
        debug_assert_eq!(m.nvars(), self.nvars());
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial::from_sorted(vec![Term::new(c, m)])
        }
    }

    /// Canonical polynomial from an arbitrary term list (merges duplicates, drops zeros).
    pub fn from_terms<I>(&self, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = Term>,
    {
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::new();
        for t in terms {
            match acc.get_mut(&t.mon) {
                Some(c) => *c = &*c + &t.coeff,
                None => {
                    acc.insert(t.mon, t.coeff);
                }
            }
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| Term::new(c, m))
            .collect();
        terms.sort_by(|a, b| self.order.cmp(&b.mon, &a.mon));
        Polynomial::from_sorted(terms)
    }

    /// Polynomial from `(coefficient, exponents)` pairs with integer coefficients.
    pub fn from_int_terms(&self, terms: &[(i64, &[u32])]) -> Polynomial {
        self.from_terms(
            terms
                .iter()
                .map(|(c, e)| Term::new(self.field.from_i64(*c), Monomial::from_exponents(e))),
        )
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        self.order.compare(a, b)
    }

    /// Structural check: exponent vectors fit this ring and coefficients lie in its field.
    pub fn check(&self, f: &Polynomial) -> Result<()> {
        for t in f.terms() {
            if t.mon.nvars() != self.nvars() {
                return Err(Error::Structural(format!(
                    "polynomial in {} variables used in a ring with {}",
                    t.mon.nvars(),
                    self.nvars()
                )));
            }
            if !self.field.contains(&t.coeff) {
                return Err(Error::FieldMismatch(format!(
                    "coefficient over {} in a ring over {}",
                    t.coeff.field(),
                    self.field
                )));
            }
        }
        for w in f.terms().windows(2) {
            if self.order.cmp(&w[0].mon, &w[1].mon) != Ordering::Greater {
                return Err(Error::Structural("terms not in decreasing order".into()));
            }
        }
        Ok(())
    }

    fn merge(&self, a: &[Term], b: &[Term], negate_b: bool) -> Polynomial {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let fix = |t: &Term| {
            if negate_b {
                Term::new(-&t.coeff, t.mon.clone())
            } else {
                t.clone()
            }
        };
        while i < a.len() && j < b.len() {
            match self.order.cmp(&a[i].mon, &b[j].mon) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(fix(&b[j]));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b {
                        &a[i].coeff - &b[j].coeff
                    } else {
                        &a[i].coeff + &b[j].coeff
                    };
                    if !c.is_zero() {
                        out.push(Term::new(c, a[i].mon.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(fix));
        Polynomial::from_sorted(out)
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f.terms(), g.terms(), false)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f.terms(), g.terms(), true)
    }

    /// `c * m * f`; order-preserving, so no re-sort.
    pub fn mul_term(&self, f: &Polynomial, c: &FieldElement, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(
            f.terms()
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mon.mul(m)))
                .collect(),
        )
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return Polynomial::zero();
        }
        if f.len() == 1 {
            let t = &f.terms()[0];
            return self.mul_term(g, &t.coeff, &t.mon);
        }
        if g.len() == 1 {
            let t = &g.terms()[0];
            return self.mul_term(f, &t.coeff, &t.mon);
        }
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::with_capacity(f.len() * g.len());
        for a in f.terms() {
            for b in g.terms() {
                let m = a.mon.mul(&b.mon);
                let c = &a.coeff * &b.coeff;
                match acc.get_mut(&m) {
                    Some(x) => *x = &*x + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| Term::new(c, m))
            .collect();
        terms.sort_by(|a, b| self.order.cmp(&b.mon, &a.mon));
        Polynomial::from_sorted(terms)
    }

    /// Checked product: both operands must belong to this ring.
    pub fn poly_mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.mul(f, g))
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        let mut acc = self.one();
        let mut base = f.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn weighted_degree(&self, f: &Polynomial) -> Option<u64> {
        f.weighted_degree(&self.weights)
    }

    pub fn is_homogeneous(&self, f: &Polynomial) -> bool {
        f.is_homogeneous(&self.weights)
    }

    /// Re-express `f` (a polynomial of `from`) in this ring, whose variables are `extra`
    /// new ones followed by the variables of `from`.
    pub fn shift_in(&self, f: &Polynomial, extra: usize) -> Polynomial {
        let mut terms: Vec<Term> = f
            .terms()
            .iter()
            .map(|t| Term::new(t.coeff.clone(), t.mon.shifted(extra)))
            .collect();
        terms.sort_by(|a, b| self.order.cmp(&b.mon, &a.mon));
        Polynomial::from_sorted(terms)
    }

    /// Inverse of [`PolyRing::shift_in`]: drop the first `skip` variables (which must not
    /// occur in `f`) and sort under this ring's order.
    pub fn shift_out(&self, f: &Polynomial, skip: usize) -> Polynomial {
        debug_assert!(f.avoids_first(skip));
        let mut terms: Vec<Term> = f
            .terms()
            .iter()
            .map(|t| Term::new(t.coeff.clone(), t.mon.truncated(skip)))
            .collect();
        terms.sort_by(|a, b| self.order.cmp(&b.mon, &a.mon));
        Polynomial::from_sorted(terms)
    }

    /// Re-sort a polynomial that was built under another order on the same variables.
    pub fn resort(&self, f: &Polynomial) -> Polynomial {
        let mut terms = f.terms().to_vec();
        terms.sort_by(|a, b| self.order.cmp(&b.mon, &a.mon));
        Polynomial::from_sorted(terms)
    }

    /// Printable view of `f` in the session polynomial grammar.
    pub fn display<'a>(&'a self, f: &'a Polynomial) -> PolyDisplay<'a> {
        PolyDisplay { ring: self, poly: f }
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                _ => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

pub struct PolyDisplay<'a> {
    ring: &'a PolyRing,
    poly: &'a Polynomial,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.poly.terms().iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = if neg { -&t.coeff } else { t.coeff.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.mon.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.ring.fmt_monomial(&t.mon))?;
            } else {
                write!(f, "{}*{}", abs, self.ring.fmt_monomial(&t.mon))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring3() -> PolyRing {
        PolyRing::new(
            Field::Rational,
            vec!["x".into(), "y".into(), "z".into()],
            None,
            OrderKind::Grevlex,
        )
        .unwrap()
    }

    #[test]
    fn duplicate_variables_rejected() {
        let r = PolyRing::new(Field::Rational, vec!["x".into(), "x".into()], None, OrderKind::Lex);
        assert!(matches!(r, Err(Error::Structural(_))));
    }

    #[test]
    fn difference_of_squares() {
        let r = ring3();
        let (x, y) = (r.var(0), r.var(1));
        let p = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        assert_eq!(r.display(&p).to_string(), "x^2 - y^2");
        assert!(r.mul(&p, &r.zero()).is_zero());
    }

    #[test]
    fn square_of_binomial_before_reduction() {
        // (xy + z)^2, the n = 2 instance of the first counterexample family
        let r = ring3();
        let f = r.add(&r.mul(&r.var(0), &r.var(1)), &r.var(2));
        let sq = r.mul(&f, &f);
        assert_eq!(r.display(&sq).to_string(), "x^2*y^2 + 2*x*y*z + z^2");
        assert_eq!(r.pow(&f, 2), sq);
    }

    #[test]
    fn weighted_degree_examples() {
        let r = PolyRing::new(
            Field::Rational,
            vec!["x".into(), "y".into(), "z".into()],
            Some(vec![1, 1, 2]),
            OrderKind::Grevlex,
        )
        .unwrap();
        let xi = r.from_int_terms(&[(1, &[1, 1, 1])]);
        assert_eq!(r.weighted_degree(&xi), Some(4));
        assert_eq!(r.weighted_degree(&r.from_i64(5)), Some(0));
        assert_eq!(r.weighted_degree(&r.zero()), None);
    }

    #[test]
    fn mixed_rings_are_structural_errors() {
        let r = ring3();
        let two = PolyRing::new(Field::Rational, vec!["a".into(), "b".into()], None, OrderKind::Lex)
            .unwrap();
        assert!(matches!(r.poly_mul(&r.var(0), &two.var(1)), Err(Error::Structural(_))));
        let f5 = PolyRing::new(
            Field::prime(5).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            None,
            OrderKind::Grevlex,
        )
        .unwrap();
        assert!(matches!(
            r.poly_mul(&r.var(0), &f5.from_i64(2)),
            Err(Error::FieldMismatch(_))
        ));
    }

    #[test]
    fn display_rational_coefficients() {
        let r = ring3();
        let f = r.from_terms([
            Term::new(
                crate::coeff::normalize(3.into(), 2.into()).unwrap(),
                Monomial::from_exponents(&[2, 0, 0]),
            ),
            Term::new(Field::Rational.from_i64(-1), Monomial::one(3)),
        ]);
        assert_eq!(r.display(&f).to_string(), "3/2*x^2 - 1");
    }

    fn small_poly() -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
        proptest::collection::vec((-4i64..5, proptest::collection::vec(0u32..3, 3)), 0..5)
    }

    fn build(r: &PolyRing, t: &[(i64, Vec<u32>)]) -> Polynomial {
        r.from_terms(
            t.iter()
                .map(|(c, e)| Term::new(r.field().from_i64(*c), Monomial::from_exponents(e))),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            let r = ring3();
            let (f, g, h) = (build(&r, &a), build(&r, &b), build(&r, &c));
            prop_assert_eq!(r.add(&r.add(&f, &g), &h), r.add(&f, &r.add(&g, &h)));
            prop_assert_eq!(r.mul(&r.mul(&f, &g), &h), r.mul(&f, &r.mul(&g, &h)));
            prop_assert_eq!(r.mul(&f, &r.add(&g, &h)), r.add(&r.mul(&f, &g), &r.mul(&f, &h)));
            prop_assert_eq!(r.mul(&f, &g), r.mul(&g, &f));
            prop_assert!(r.sub(&f, &f).is_zero());
            prop_assert!(r.check(&r.mul(&f, &g)).is_ok());
        }

        #[test]
        fn canonical_form_ignores_term_order(a in small_poly()) {
            let r = ring3();
            let mut rev = a.clone();
            rev.reverse();
            prop_assert_eq!(build(&r, &a), build(&r, &rev));
        }

        #[test]
        fn leading_term_removal_terminates(a in small_poly()) {
            // strictly descending chains: peeling leading terms ends after len steps
            let r = ring3();
            let mut f = build(&r, &a);
            let n = f.len();
            let mut steps = 0;
            while let Some(t) = f.leading_term().cloned() {
                let lead = r.term(t.coeff, t.mon);
                f = r.sub(&f, &lead);
                steps += 1;
                prop_assert!(steps <= n);
            }
        }
    }
}
