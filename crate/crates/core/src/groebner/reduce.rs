//! Multivariate division. Two coefficient regimes: exact field division against any
//! divisor list, and a fraction-free variant over ℚ that keeps integer-primitive
//! coefficients and returns the remainder up to a nonzero scalar.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::FieldElement;
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial, Term};

const CONTENT_EVERY: usize = 32;

/// Leading-monomial index for fast divisor lookup.
pub(crate) struct DivisorSet<'a> {
    polys: Vec<&'a Polynomial>,
    masks: Vec<u64>,
}

impl<'a> DivisorSet<'a> {
    pub fn new<I: IntoIterator<Item = &'a Polynomial>>(polys: I) -> DivisorSet<'a> {
        let polys: Vec<&Polynomial> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        let masks = polys
            .iter()
            .map(|p| p.leading_monomial().unwrap().support_mask())
            .collect();
        DivisorSet { polys, masks }
    }

    pub fn find(&self, m: &Monomial) -> Option<&'a Polynomial> {
        let mm = m.support_mask();
        self.polys
            .iter()
            .zip(&self.masks)
            .find(|(p, &mask)| mask & !mm == 0 && p.leading_monomial().unwrap().divides(m))
            .map(|(p, _)| *p)
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

/// `a*p - b*u*g`, with `a` skipped when it is one.
fn lincomb(
    order: &MonomialOrder,
    a: &FieldElement,
    p: &[Term],
    b: &FieldElement,
    u: &Monomial,
    g: &[Term],
) -> Vec<Term> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let scale_p = !a.is_one();
    let (mut i, mut j) = (0, 0);
    let mut gj: Option<Monomial> = g.first().map(|t| t.mon.mul(u));
    let pa = |t: &Term| {
        if scale_p {
            Term::new(&t.coeff * a, t.mon.clone())
        } else {
            t.clone()
        }
    };
    while i < p.len() {
        let Some(gm) = gj.as_ref() else { break };
        match order.cmp(&p[i].mon, gm) {
            Ordering::Greater => {
                out.push(pa(&p[i]));
                i += 1;
            }
            Ordering::Less => {
                out.push(Term::new(-&(&g[j].coeff * b), gj.take().unwrap()));
                j += 1;
                gj = g.get(j).map(|t| t.mon.mul(u));
            }
            Ordering::Equal => {
                let lhs = if scale_p { &p[i].coeff * a } else { p[i].coeff.clone() };
                let c = &lhs - &(&g[j].coeff * b);
                if !c.is_zero() {
                    out.push(Term::new(c, gj.take().unwrap()));
                }
                i += 1;
                j += 1;
                gj = g.get(j).map(|t| t.mon.mul(u));
            }
        }
    }
    out.extend(p[i..].iter().map(pa));
    if let Some(gm) = gj {
        out.push(Term::new(-&(&g[j].coeff * b), gm));
        for t in &g[j + 1..] {
            out.push(Term::new(-&(&t.coeff * b), t.mon.mul(u)));
        }
    }
    out
}

fn integer_part(c: &FieldElement) -> Option<&BigInt> {
    match c {
        FieldElement::Rational(r) if r.denom().is_one() => Some(r.numer()),
        _ => None,
    }
}

fn as_fe(v: BigInt) -> FieldElement {
    FieldElement::Rational(BigRational::from_integer(v))
}

/// Full reduction of `f` by `divs`. With `fraction_free` over ℚ the result is a nonzero
/// scalar multiple of the true remainder, made primitive.
pub(crate) fn reduce(
    ring: &PolyRing,
    f: &Polynomial,
    divs: &DivisorSet<'_>,
    fraction_free: bool,
) -> Polynomial {
    if divs.is_empty() || f.is_zero() {
        return f.clone();
    }
    let order = ring.order();
    let fraction_free = fraction_free && matches!(ring.field(), crate::coeff::Field::Rational);
    let one = ring.field().one();
    let mut p: Vec<Term> = f.terms().to_vec();
    let mut pos = 0;
    let mut rem: Vec<Term> = Vec::new();
    let mut steps = 0usize;
    while pos < p.len() {
        let head = &p[pos];
        match divs.find(&head.mon) {
            None => {
                rem.push(head.clone());
                pos += 1;
            }
            Some(g) => {
                let lt = g.leading_term().unwrap();
                let u = head.mon.div(&lt.mon).unwrap();
                let ff = if fraction_free {
                    integer_part(&lt.coeff).zip(integer_part(&head.coeff))
                } else {
                    None
                };
                match ff {
                    Some((lg, lc)) if !lg.is_one() => {
                        let d = lg.gcd(lc);
                        let a = as_fe(lg / &d);
                        let b = as_fe(lc / &d);
                        p = lincomb(order, &a, &p[pos + 1..], &b, &u, &g.terms()[1..]);
                        if !a.is_one() {
                            for t in rem.iter_mut() {
                                t.coeff = &t.coeff * &a;
                            }
                        }
                    }
                    _ => {
                        let q = head.coeff.checked_div(&lt.coeff).expect("nonzero leading coefficient");
                        p = lincomb(order, &one, &p[pos + 1..], &q, &u, &g.terms()[1..]);
                    }
                }
                pos = 0;
                steps += 1;
                if fraction_free && steps.is_multiple_of(CONTENT_EVERY) {
                    divide_content(&mut rem, &mut p);
                }
            }
        }
    }
    let out = Polynomial::from_sorted(rem);
    if fraction_free {
        primitive(&out)
    } else {
        out
    }
}

fn divide_content(a: &mut [Term], b: &mut [Term]) {
    let mut g = BigInt::zero();
    for t in a.iter().chain(b.iter()) {
        match integer_part(&t.coeff) {
            Some(n) => g = g.gcd(n),
            None => return,
        }
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    let gi = FieldElement::Rational(BigRational::from_integer(g).recip());
    for t in a.iter_mut().chain(b.iter_mut()) {
        t.coeff = &t.coeff * &gi;
    }
}

/// Scale a ℚ-polynomial to coprime integer coefficients with a positive leading
/// coefficient. Other fields: made monic.
pub(crate) fn primitive(f: &Polynomial) -> Polynomial {
    let Some(lc) = f.leading_coeff() else {
        return Polynomial::zero();
    };
    match lc {
        FieldElement::Rational(_) => {
            let mut den = BigInt::one();
            let mut num = BigInt::zero();
            for t in f.terms() {
                let r = t.coeff.as_rational().unwrap();
                den = den.lcm(r.denom());
                num = num.gcd(r.numer());
            }
            let mut s = BigRational::new(den, num);
            if lc.is_negative() {
                s = -s;
            }
            if s.is_one() {
                f.clone()
            } else {
                f.scale(&FieldElement::Rational(s))
            }
        }
        FieldElement::PrimeField { .. } => f.monic(),
    }
}
