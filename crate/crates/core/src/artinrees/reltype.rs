//! Relation type through the Rees algebra presentation.
//!
//! For `I = (f₁..fₘ)` the map `R[T₁..Tₘ] → R[t]`, `Tᵢ ↦ fᵢt`, has kernel `L`. `L` is
//! computed by eliminating `t` from the graph ideal `(Tᵢ − t·fᵢ) + Q` and is homogeneous
//! in `T`; the relation type is the least `d` such that `L` is generated in
//! `T`-degrees `≤ d`.

use crate::error::{Error, Result};
use crate::groebner::{buchberger, eliminate, GroebnerBasis};
use crate::ideal::{fresh_name, Ideal};
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial};

#[derive(Debug, Clone)]
pub struct ReltypeReport {
    /// The generators used, after minimization.
    pub gens: Vec<Polynomial>,
    /// `k[T₁..Tₘ, x..]` with a `T`-degree-first block order.
    pub rees_ring: PolyRing,
    /// Reduced Gröbner basis elements of the lifted kernel with `T`-degree ≥ 1.
    pub kernel: Vec<Polynomial>,
    pub reltype: u32,
    /// Kernel elements of `T`-degree `≤ reltype`; together with `Q` they generate `L`.
    pub certificate: Vec<Polynomial>,
}

impl ReltypeReport {
    pub fn t_degree(&self, f: &Polynomial) -> u64 {
        t_degree(f, self.gens.len())
    }

    pub fn display(&self, f: &Polynomial) -> String {
        self.rees_ring.display(f).to_string()
    }
}

fn t_degree(f: &Polynomial, m: usize) -> u64 {
    f.terms()
        .first()
        .map(|t| t.mon.exponents()[..m].iter().map(|&e| e as u64).sum())
        .unwrap_or(0)
}

/// Drop generators lying in the ideal of those kept before them, scanning by
/// increasing degree. For homogeneous ideals the result is a minimal generating set.
pub fn minimize_generators(i: &Ideal) -> Result<Vec<Polynomial>> {
    let base = i.ring().base();
    let mut gens: Vec<Polynomial> = i.gens().to_vec();
    gens.sort_by(|a, b| {
        base.weighted_degree(a)
            .cmp(&base.weighted_degree(b))
            .then_with(|| {
                base.order()
                    .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            })
    });
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in gens {
        let span = Ideal::new(i.ring(), kept.clone())?;
        if !span.member(&g)? {
            kept.push(g);
        }
    }
    Ok(kept)
}

/// Relation type of a nonzero ideal, computed from a minimized generating set.
pub fn reltype(i: &Ideal) -> Result<ReltypeReport> {
    if i.is_zero() {
        return Err(Error::Argument("relation type of the zero ideal".into()));
    }
    let ring = i.ring();
    let base = ring.base();
    let gens = minimize_generators(i)?;
    let m = gens.len();

    let mut taken = base.vars().to_vec();
    let mut tnames = Vec::with_capacity(m);
    for k in 1..=m {
        let name = fresh_name(&format!("T{k}"), &taken);
        taken.push(name.clone());
        tnames.push(name);
    }
    let t = fresh_name("t", &taken);
    let tail = MonomialOrder::block(m, MonomialOrder::Grevlex, base.order().clone());
    let mut vars = vec![t];
    vars.extend(tnames);
    vars.extend_from_slice(base.vars());
    let mut weights = vec![1; m + 1];
    weights.extend_from_slice(base.weights());
    let graph_ring = PolyRing::with_order(
        base.field(),
        vars,
        weights,
        MonomialOrder::block(1, MonomialOrder::Lex, tail),
    )?;

    let one = base.field().one();
    let n = graph_ring.nvars();
    let tvar = Monomial::var(n, 0, 1);
    let mut graph: Vec<Polynomial> = gens
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let tf = graph_ring.mul_term(&graph_ring.shift_in(f, m + 1), &one, &tvar);
            graph_ring.sub(&graph_ring.var(k + 1), &tf)
        })
        .collect();
    graph.extend(ring.quotient_gb().basis().iter().map(|q| graph_ring.shift_in(q, m + 1)));
    let gb = buchberger(&graph_ring, &graph, ring.config())?;
    let lifted = eliminate(&gb, 1)?;
    let rees_ring = lifted.ring().clone();

    let degree_zero: Vec<Polynomial> =
        lifted.basis().iter().filter(|f| t_degree(f, m) == 0).cloned().collect();
    let mut kernel: Vec<Polynomial> =
        lifted.basis().iter().filter(|f| t_degree(f, m) > 0).cloned().collect();
    kernel.sort_by_key(|f| t_degree(f, m));

    let mut degrees: Vec<u64> = kernel.iter().map(|f| t_degree(f, m)).collect();
    degrees.dedup();
    let mut candidates = vec![1u64];
    candidates.extend(degrees.iter().copied().filter(|&d| d > 1));
    let mut reltype = 1u64;
    for &d in &candidates {
        let (low, high): (Vec<&Polynomial>, Vec<&Polynomial>) =
            kernel.iter().partition(|f| t_degree(f, m) <= d);
        if high.is_empty() {
            reltype = d;
            break;
        }
        let mut span: Vec<Polynomial> = degree_zero.clone();
        span.extend(low.into_iter().cloned());
        let low_gb: GroebnerBasis = buchberger(&rees_ring, &span, ring.config())?;
        if high.iter().all(|f| low_gb.contains(f)) {
            reltype = d;
            break;
        }
    }
    let certificate = kernel.iter().filter(|f| t_degree(f, m) <= reltype).cloned().collect();
    Ok(ReltypeReport {
        gens,
        rees_ring,
        kernel,
        reltype: reltype as u32,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::groebner::GbConfig;
    use crate::polyring::{OrderKind, Ring, RingPresentation};

    fn ring(vars: &[&str], weights: Option<Vec<u32>>, quotient: &[&str]) -> Ring {
        let base = PolyRing::new(
            Field::Rational,
            vars.iter().map(|v| v.to_string()).collect(),
            weights,
            OrderKind::Grevlex,
        )
        .unwrap();
        let q = quotient.iter().map(|s| base.parse(s).unwrap()).collect();
        RingPresentation::new(base, q, GbConfig::default()).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| r.base().parse(s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn principal_is_one() {
        let r = ring(&["x", "y"], None, &[]);
        let rep = reltype(&ideal(&r, &["x^2 + y^3"])).unwrap();
        assert!(rep.kernel.is_empty());
        assert_eq!(rep.reltype, 1);
    }

    #[test]
    fn maximal_ideal_of_plane() {
        let r = ring(&["x", "y"], None, &[]);
        let rep = reltype(&ideal(&r, &["x", "y"])).unwrap();
        assert_eq!(rep.reltype, 1);
        assert_eq!(rep.kernel.len(), 1);
        // the single relation is g₂·T₁ − g₁·T₂ for the generator order chosen
        let g: Vec<String> = rep.gens.iter().map(|f| r.base().display(f).to_string()).collect();
        let shown = rep.display(&rep.kernel[0].monic());
        assert_eq!(shown, format!("T1*{} - T2*{}", g[1], g[0]));
    }

    #[test]
    fn square_of_maximal_ideal() {
        let r = ring(&["x", "y"], None, &[]);
        let rep = reltype(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap();
        assert_eq!(rep.reltype, 2);
        // T₁T₃ − T₂² is not generated by the T-linear relations
        let rr = &rep.rees_ring;
        let veronese = rr.parse("T1*T3 - T2^2").unwrap();
        let linear: Vec<Polynomial> =
            rep.kernel.iter().filter(|f| rep.t_degree(f) == 1).cloned().collect();
        let lin_gb = buchberger(rr, &linear, &GbConfig::default()).unwrap();
        assert!(!lin_gb.contains(&veronese));
        let all = buchberger(rr, &rep.kernel, &GbConfig::default()).unwrap();
        assert!(all.contains(&veronese));
    }

    #[test]
    fn permutation_invariant() {
        let r = ring(&["x", "y"], None, &["x^2"]);
        let a = reltype(&ideal(&r, &["y^3", "x*y"])).unwrap();
        let b = reltype(&ideal(&r, &["x*y", "y^3"])).unwrap();
        assert_eq!(a.reltype, b.reltype);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let r = ring(&["x", "y"], None, &[]);
        let i = ideal(&r, &["x", "y", "x^2 + x*y", "y^3"]);
        assert_eq!(minimize_generators(&i).unwrap().len(), 2);
        assert_eq!(reltype(&i).unwrap().reltype, 1);
    }

    #[test]
    fn tag_names_avoid_ring_variables() {
        let r = ring(&["t", "T1"], None, &[]);
        let rep = reltype(&ideal(&r, &["t", "T1"])).unwrap();
        assert_eq!(rep.reltype, 1);
        assert!(rep.rees_ring.vars().iter().any(|v| v == "T1_"));
    }
}
