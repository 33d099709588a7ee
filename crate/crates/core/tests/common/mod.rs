#![allow(dead_code)]

use arck::{Field, GbConfig, Ideal, OrderKind, PolyRing, Polynomial, Ring, RingPresentation};

pub fn ring(vars: &[&str], weights: Option<Vec<u32>>, quotient: &[&str]) -> Ring {
    ring_over(Field::Rational, vars, weights, quotient)
}

pub fn ring_over(field: Field, vars: &[&str], weights: Option<Vec<u32>>, quotient: &[&str]) -> Ring {
    let base = PolyRing::new(field, vars.iter().map(|v| v.to_string()).collect(), weights, OrderKind::Grevlex)
        .unwrap();
    let q = quotient.iter().map(|s| base.parse(s).unwrap()).collect();
    RingPresentation::new(base, q, GbConfig::default()).unwrap()
}

pub fn poly(r: &Ring, s: &str) -> Polynomial {
    r.base().parse(s).unwrap()
}

pub fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|s| poly(r, s)).collect()).unwrap()
}

pub fn show(r: &Ring, f: &Polynomial) -> String {
    r.base().display(f).to_string()
}

/// `k[x,y]/(x²)`: one-dimensional, Cohen-Macaulay, multiplicity 2.
pub fn double_line() -> Ring {
    ring(&["x", "y"], None, &["x^2"])
}

/// `k[x,y]/(y² − x³)` graded by `(2, 3)` so the cusp equation is homogeneous.
pub fn cusp() -> Ring {
    ring(&["x", "y"], Some(vec![2, 3]), &["y^2 - x^3"])
}

pub mod strategies {
    use arck::polyring::{monomials_of_degree, Term};
    use arck::{Monomial, Polynomial, Ring};
    use proptest::prelude::*;

    /// Raw terms `(coefficient, exponents)` of a polynomial in `nvars` variables with
    /// total degree `≤ max_deg`.
    pub fn raw_poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
        prop::collection::vec(
            (-5i64..=5, prop::collection::vec(0..=max_deg, nvars))
                .prop_filter("degree bound", move |(_, e)| e.iter().sum::<u32>() <= max_deg),
            1..=max_terms,
        )
    }

    pub fn build(r: &Ring, raw: &[(i64, Vec<u32>)]) -> Polynomial {
        let base = r.base();
        base.from_terms(
            raw.iter()
                .map(|(c, e)| Term::new(base.field().from_i64(*c), Monomial::from_exponents(e))),
        )
    }

    /// Raw homogeneous polynomial: a weighted degree in `1..=max_deg` and
    /// `(coefficient, monomial index)` pairs resolved by [`build_homogeneous`].
    pub fn raw_homogeneous(max_deg: u64, max_terms: usize) -> impl Strategy<Value = (u64, Vec<(i64, usize)>)> {
        (1..=max_deg, prop::collection::vec((-4i64..=4, any::<usize>()), 1..=max_terms))
    }

    pub fn build_homogeneous(r: &Ring, raw: &(u64, Vec<(i64, usize)>)) -> Polynomial {
        let base = r.base();
        let mons = monomials_of_degree(base.weights(), raw.0);
        if mons.is_empty() {
            return base.zero();
        }
        base.from_terms(
            raw.1
                .iter()
                .map(|(c, k)| Term::new(base.field().from_i64(*c), mons[k % mons.len()].clone())),
        )
    }
}
