use std::cmp::Ordering;

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, PolyRing, Polynomial};

use super::reduce::{primitive, reduce, DivisorSet};
use super::{GbConfig, GroebnerBasis};

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u64,
}

struct State<'r> {
    ring: &'r PolyRing,
    config: &'r GbConfig,
    polys: Vec<Polynomial>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<'r> State<'r> {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().unwrap()
    }

    fn reduce_active(&self, f: &Polynomial) -> Polynomial {
        let divs = DivisorSet::new(self.active.iter().map(|&i| &self.polys[i]));
        reduce(self.ring, f, &divs, true)
    }

    fn normalize(&self, f: Polynomial) -> Polynomial {
        match self.ring.field() {
            Field::Rational => primitive(&f),
            Field::Prime(_) => f.monic(),
        }
    }

    fn check_cap(&self, f: &Polynomial) -> Result<()> {
        let d = f.total_degree().unwrap_or(0);
        if d > self.config.degree_cap {
            return Err(Error::ResourceCap(format!(
                "Groebner basis element of total degree {d} exceeds cap {}",
                self.config.degree_cap
            )));
        }
        Ok(())
    }

    /// Gebauer–Möller installation of a new basis element.
    fn update(&mut self, h: Polynomial) {
        let hi = self.polys.len();
        self.polys.push(h);
        let h_lm = self.lm(hi).clone();

        let cands: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let lm = self.lm(g);
                (g, h_lm.lcm(lm), h_lm.is_coprime(lm))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, (g, lcm, coprime)) in cands.iter().enumerate() {
            let dominated = cands[k + 1..].iter().any(|(_, l2, _)| l2.divides(lcm))
                || kept.iter().any(|(_, l2, _)| l2.divides(lcm));
            if *coprime || !dominated {
                kept.push((*g, lcm.clone(), *coprime));
            }
        }

        let polys = &self.polys;
        let lm = |i: usize| polys[i].leading_monomial().unwrap();
        self.pairs.retain(|p| {
            !(h_lm.divides(&p.lcm)
                && h_lm.lcm(lm(p.i)) != p.lcm
                && h_lm.lcm(lm(p.j)) != p.lcm)
        });

        for (g, lcm, coprime) in kept {
            if !coprime {
                let degree = lcm.total_degree();
                self.pairs.push(Pair {
                    i: g,
                    j: hi,
                    lcm,
                    degree,
                });
            }
        }

        self.active.retain(|&g| !h_lm.divides(lm(g)));
        self.active.push(hi);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.degree
                    .cmp(&b.degree)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Polynomial {
        super::s_poly_scaled(self.ring, &self.polys[p.i], &self.polys[p.j], &p.lcm)
    }

    fn is_unit(&self) -> bool {
        self.active
            .iter()
            .any(|&i| self.polys[i].leading_monomial().unwrap().is_one())
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under the ring's order.
///
/// Normal selection strategy (smallest lcm degree first) with the product and chain
/// criteria in Gebauer–Möller form. Over ℚ intermediate elements are kept
/// integer-primitive.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial], config: &GbConfig) -> Result<GroebnerBasis> {
    for g in gens {
        ring.check(g)?;
    }
    let mut st = State {
        ring,
        config,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut inputs: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    inputs.sort_by(|a, b| {
        ring.order()
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    for g in inputs {
        st.check_cap(g)?;
        let h = st.reduce_active(g);
        if !h.is_zero() {
            st.check_cap(&h)?;
            let h = st.normalize(h);
            st.update(h);
            if st.is_unit() {
                return Ok(GroebnerBasis::from_reduced(ring.clone(), vec![ring.one()]));
            }
        }
    }
    while let Some(pair) = st.next_pair() {
        let s = st.spoly(&pair);
        let h = st.reduce_active(&s);
        if h.is_zero() {
            continue;
        }
        st.check_cap(&h)?;
        let h = st.normalize(h);
        st.update(h);
        if st.is_unit() {
            return Ok(GroebnerBasis::from_reduced(ring.clone(), vec![ring.one()]));
        }
    }
    let basis: Vec<Polynomial> = st.active.iter().map(|&i| st.polys[i].clone()).collect();
    Ok(GroebnerBasis::from_reduced(ring.clone(), interreduce(ring, basis)))
}

/// Minimal, monic, tail-reduced form of a Gröbner basis, sorted by increasing leading
/// monomial.
pub(crate) fn interreduce(ring: &PolyRing, basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let order = ring.order();
    let mut basis: Vec<Polynomial> = basis.into_iter().filter(|p| !p.is_zero()).collect();
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in basis {
        let lm = p.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|q| q.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(p.monic());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let divs = DivisorSet::new(
            minimal
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, p)| p),
        );
        out.push(reduce(ring, &minimal[k], &divs, false));
    }
    debug_assert!(out.windows(2).all(|w| order.cmp(
        w[0].leading_monomial().unwrap(),
        w[1].leading_monomial().unwrap()
    ) == Ordering::Less));
    out
}
