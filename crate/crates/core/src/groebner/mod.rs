//! Normal forms, S-polynomials, Buchberger's algorithm, and elimination.

mod buchberger;
mod reduce;

use serde::{Deserialize, Serialize};

use crate::coeff::{Field, FieldElement};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial};

pub use buchberger::buchberger;
pub(crate) use reduce::DivisorSet;

/// Resource limits for Gröbner computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GbConfig {
    /// Largest total degree a basis element may reach before the computation aborts.
    pub degree_cap: u64,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { degree_cap: 64 }
    }
}

/// A reduced Gröbner basis: monic, minimal, tail-reduced, sorted by increasing
/// leading monomial. Unique for a given ideal, ring, and order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroebnerBasis {
    ring: PolyRing,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub(crate) fn from_reduced(ring: PolyRing, basis: Vec<Polynomial>) -> GroebnerBasis {
        GroebnerBasis { ring, basis }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// The ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().map(|g| g.leading_monomial().unwrap())
    }

    /// Remainder of `f` on division by the basis. No structural checks.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce::reduce(&self.ring, f, &DivisorSet::new(&self.basis), false)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        if self.is_unit() {
            return true;
        }
        reduce::reduce(&self.ring, f, &DivisorSet::new(&self.basis), true).is_zero()
    }

    /// Whether some leading monomial divides `m`.
    pub fn lm_divides(&self, m: &Monomial) -> bool {
        self.leading_monomials().any(|l| l.divides(m))
    }
}

/// Normal form of `f` with respect to `g`: no term of the result is divisible by a
/// leading monomial of `g`, and `f - NF(f)` lies in the ideal.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    g.ring.check(f)?;
    Ok(g.reduce(f))
}

/// `(lcm/LT(f))·f − (lcm/LT(g))·g` over the field.
pub fn s_polynomial(ring: &PolyRing, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::Argument("S-polynomial of the zero polynomial".into()));
    }
    ring.check(f)?;
    ring.check(g)?;
    let (tf, tg) = (f.leading_term().unwrap(), g.leading_term().unwrap());
    let lcm = tf.mon.lcm(&tg.mon);
    let a = ring.mul_term(f, &tf.coeff.invert()?, &lcm.div(&tf.mon).unwrap());
    let b = ring.mul_term(g, &tg.coeff.invert()?, &lcm.div(&tg.mon).unwrap());
    Ok(ring.sub(&a, &b))
}

// Fraction-free S-polynomial: lc(g)·u_f·f − lc(f)·u_g·g (ℚ), field version otherwise.
pub(crate) fn s_poly_scaled(ring: &PolyRing, f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let (tf, tg) = (f.leading_term().unwrap(), g.leading_term().unwrap());
    let uf = lcm.div(&tf.mon).unwrap();
    let ug = lcm.div(&tg.mon).unwrap();
    let (cf, cg): (FieldElement, FieldElement) = match ring.field() {
        Field::Rational => (tg.coeff.clone(), tf.coeff.clone()),
        Field::Prime(_) => (tf.coeff.invert().unwrap(), tg.coeff.invert().unwrap()),
    };
    let a = ring.mul_term(&Polynomial::from_sorted(f.terms()[1..].to_vec()), &cf, &uf);
    let b = ring.mul_term(&Polynomial::from_sorted(g.terms()[1..].to_vec()), &cg, &ug);
    ring.sub(&a, &b)
}

/// Intersection of `⟨G⟩` with the subring on the variables after the first `k`.
///
/// The result lives in the subring: its variables, weights, and the order induced on
/// monomials free of the eliminated block.
pub fn eliminate(g: &GroebnerBasis, k: usize) -> Result<GroebnerBasis> {
    let ring = g.ring();
    let n = ring.nvars();
    if k == 0 {
        return Ok(g.clone());
    }
    if k > n {
        return Err(Error::Argument(format!("cannot eliminate {k} of {n} variables")));
    }
    if !ring.order().eliminates(k, n) {
        return Err(Error::Contract(format!(
            "order {:?} lacks the elimination property for the first {k} variables",
            ring.order()
        )));
    }
    let sub = subring(ring, k)?;
    let basis = g
        .basis()
        .iter()
        .filter(|p| p.avoids_first(k))
        .map(|p| sub.shift_out(p, k))
        .collect();
    Ok(GroebnerBasis::from_reduced(sub, basis))
}

/// Ring on variables `k..` with the restricted order.
pub fn subring(ring: &PolyRing, k: usize) -> Result<PolyRing> {
    let order = restrict_tail(ring.order(), k, ring.nvars());
    PolyRing::with_order(
        ring.field(),
        ring.vars()[k..].to_vec(),
        ring.weights()[k..].to_vec(),
        order,
    )
}

fn restrict_tail(order: &MonomialOrder, k: usize, n: usize) -> MonomialOrder {
    if k == 0 {
        return order.clone();
    }
    match order {
        MonomialOrder::Lex => MonomialOrder::Lex,
        MonomialOrder::Grevlex => MonomialOrder::Grevlex,
        MonomialOrder::WeightedGrevlex(w) => MonomialOrder::WeightedGrevlex(w[k..].to_vec()),
        MonomialOrder::Block { split, head, tail } => {
            if k == *split {
                (**tail).clone()
            } else if k < *split {
                MonomialOrder::block(split - k, restrict_tail(head, k, *split), (**tail).clone())
            } else {
                restrict_tail(tail, k - split, n - split)
            }
        }
    }
}

/// All S-pairs reduce to zero (Buchberger's criterion); used by tests and audits.
pub fn is_groebner(g: &GroebnerBasis) -> bool {
    let ring = g.ring();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let s = s_polynomial(ring, &g.basis[i], &g.basis[j]).unwrap();
            if !g.reduce(&s).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Monic, minimal, and no term of any element reducible by another element.
pub fn is_reduced(g: &GroebnerBasis) -> bool {
    g.basis.iter().enumerate().all(|(i, p)| {
        p.leading_coeff().is_some_and(|c| c.is_one())
            && p.terms().iter().all(|t| {
                g.basis
                    .iter()
                    .enumerate()
                    .all(|(j, q)| i == j || !q.leading_monomial().unwrap().divides(&t.mon))
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::OrderKind;

    fn lex_xy() -> PolyRing {
        PolyRing::new(Field::Rational, vec!["x".into(), "y".into()], None, OrderKind::Lex).unwrap()
    }

    #[test]
    fn s_polynomial_examples() {
        let r = lex_xy();
        let f = r.from_int_terms(&[(1, &[2, 0]), (-1, &[0, 1])]);
        let g = r.from_int_terms(&[(1, &[1, 1]), (-1, &[0, 0])]);
        let s = s_polynomial(&r, &f, &g).unwrap();
        assert_eq!(r.display(&s).to_string(), "x - y^2");
        assert!(s_polynomial(&r, &f, &f).unwrap().is_zero());
        assert!(s_polynomial(&r, &f, &r.zero()).is_err());
        // coprime leading monomials: S(x, y) reduces to 0 by {x, y}
        let gb = buchberger(&r, &[r.var(0), r.var(1)], &GbConfig::default()).unwrap();
        let s = s_polynomial(&r, &r.var(0), &r.var(1)).unwrap();
        assert!(normal_form(&s, &gb).unwrap().is_zero());
    }

    #[test]
    fn buchberger_examples() {
        let r = lex_xy();
        let cfg = GbConfig::default();
        let lin = buchberger(
            &r,
            &[r.add(&r.var(0), &r.var(1)), r.sub(&r.var(0), &r.var(1))],
            &cfg,
        )
        .unwrap();
        assert_eq!(lin.basis(), &[r.var(1), r.var(0)]);

        let f = r.from_int_terms(&[(1, &[2, 0]), (-1, &[0, 1])]);
        let g = r.from_int_terms(&[(1, &[1, 1]), (-1, &[0, 0])]);
        let gb = buchberger(&r, &[f.clone(), g.clone()], &cfg).unwrap();
        let shown: Vec<String> = gb.basis().iter().map(|p| r.display(p).to_string()).collect();
        assert_eq!(shown, vec!["y^3 - 1", "x - y^2"]);
        // oracle: Buchberger's criterion, inputs reduce to zero, outputs lie in the input ideal
        assert!(is_groebner(&gb) && is_reduced(&gb));
        assert!(gb.reduce(&f).is_zero() && gb.reduce(&g).is_zero());
        let input = buchberger(&r, &[f, g], &cfg).unwrap();
        for p in gb.basis() {
            assert!(input.contains(p));
        }

        let single = r.from_int_terms(&[(3, &[1, 1]), (6, &[0, 0])]);
        let gb = buchberger(&r, &[single], &cfg).unwrap();
        assert_eq!(gb.basis(), &[r.from_int_terms(&[(1, &[1, 1]), (2, &[0, 0])])]);

        assert!(buchberger(&r, &[], &cfg).unwrap().is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let r = lex_xy();
        let cfg = GbConfig::default();
        let f = r.from_int_terms(&[(2, &[2, 1]), (1, &[0, 3])]);
        let gb = buchberger(&r, std::slice::from_ref(&f), &cfg).unwrap();
        assert!(normal_form(&f, &gb).unwrap().is_zero());
        let gy = buchberger(&r, &[r.var(1)], &cfg).unwrap();
        assert_eq!(normal_form(&r.var(0), &gy).unwrap(), r.var(0));
        let other = PolyRing::new(Field::Rational, vec!["a".into()], None, OrderKind::Lex).unwrap();
        assert!(normal_form(&other.var(0), &gy).is_err());
    }

    #[test]
    fn degree_cap_aborts() {
        let r = lex_xy();
        let f = r.from_int_terms(&[(1, &[10, 0]), (-1, &[0, 1])]);
        let g = r.from_int_terms(&[(1, &[0, 10]), (-1, &[1, 0])]);
        let err = buchberger(&r, &[f, g], &GbConfig { degree_cap: 20 }).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn elimination_examples() {
        let cfg = GbConfig::default();
        // eliminate y from (x - y^2, y^3 - 1) with lex y > x
        let r = PolyRing::new(Field::Rational, vec!["y".into(), "x".into()], None, OrderKind::Lex)
            .unwrap();
        let gb = buchberger(
            &r,
            &[
                r.from_int_terms(&[(1, &[0, 1]), (-1, &[2, 0])]),
                r.from_int_terms(&[(1, &[3, 0]), (-1, &[0, 0])]),
            ],
            &cfg,
        )
        .unwrap();
        let el = eliminate(&gb, 1).unwrap();
        assert_eq!(el.ring().vars(), &["x".to_string()]);
        let shown: Vec<String> = el.basis().iter().map(|p| el.ring().display(p).to_string()).collect();
        assert_eq!(shown, vec!["x^3 - 1"]);

        // kernel of T -> x t on k[x]: variables (t, T, x), eliminate t
        let r = PolyRing::with_order(
            Field::Rational,
            vec!["t".into(), "T".into(), "x".into()],
            vec![1, 1, 1],
            MonomialOrder::block(1, MonomialOrder::Lex, MonomialOrder::Grevlex),
        )
        .unwrap();
        let gb = buchberger(&r, &[r.from_int_terms(&[(1, &[0, 1, 0]), (-1, &[1, 0, 1])])], &cfg).unwrap();
        assert!(eliminate(&gb, 1).unwrap().is_empty());

        assert_eq!(eliminate(&gb, 0).unwrap(), gb);

        let grevlex = PolyRing::new(Field::Rational, vec!["x".into(), "y".into()], None, OrderKind::Grevlex)
            .unwrap();
        let gb = buchberger(&grevlex, &[grevlex.var(0)], &cfg).unwrap();
        assert!(matches!(eliminate(&gb, 1), Err(Error::Contract(_))));
    }

    #[test]
    fn prime_field_basis() {
        let r = PolyRing::new(
            Field::prime(7).unwrap(),
            vec!["x".into(), "y".into()],
            None,
            OrderKind::Grevlex,
        )
        .unwrap();
        let f = r.from_int_terms(&[(3, &[2, 0]), (1, &[0, 1])]);
        let g = r.from_int_terms(&[(2, &[1, 1]), (5, &[0, 0])]);
        let gb = buchberger(&r, &[f, g], &GbConfig::default()).unwrap();
        assert!(is_groebner(&gb) && is_reduced(&gb));
    }
}
