mod common;

use arck::groebner::{buchberger, is_groebner, is_reduced, normal_form, s_polynomial};
use arck::{Field, GbConfig, Ring};
use proptest::prelude::*;

use common::strategies::{build, raw_poly};
use common::*;

fn rings() -> Vec<Ring> {
    vec![
        ring(&["x", "y", "z"], None, &[]),
        ring_over(Field::prime(7).unwrap(), &["x", "y", "z"], None, &[]),
        ring(&["x", "y"], Some(vec![2, 3]), &[]),
        ring(&["x"], None, &[]),
    ]
}

type Raw = Vec<(i64, Vec<u32>)>;

/// Ring index plus up to three generators of degree ≤ 3 in three variables; unused
/// exponents are dropped for smaller rings.
fn small_ideal() -> impl Strategy<Value = (usize, Vec<Raw>)> {
    (0..4usize, prop::collection::vec(raw_poly(3, 3, 4), 1..=3))
}

fn fit(r: &Ring, raw: &Raw) -> Raw {
    raw.iter().map(|(c, e)| (*c, e[..r.nvars()].to_vec())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduced_basis_is_canonical((k, gens) in small_ideal(), rot in 0..3usize) {
        let rings = rings();
        let r = &rings[k];
        let base = r.base();
        let polys: Vec<_> = gens.iter().map(|g| build(r, &fit(r, g))).collect();
        let g = buchberger(base, &polys, &GbConfig::default()).unwrap();

        prop_assert!(is_reduced(&g));
        prop_assert!(is_groebner(&g));
        for p in g.basis() {
            prop_assert!(p.leading_coeff().unwrap().is_one());
        }
        for (a, p) in g.basis().iter().enumerate() {
            for q in &g.basis()[a + 1..] {
                let s = s_polynomial(base, p, q).unwrap();
                prop_assert!(normal_form(&s, &g).unwrap().is_zero());
            }
        }
        for p in &polys {
            prop_assert!(normal_form(p, &g).unwrap().is_zero());
        }

        let mut permuted = polys.clone();
        permuted.reverse();
        let n = permuted.len();
        permuted.rotate_left(rot % n);
        let g2 = buchberger(base, &permuted, &GbConfig::default()).unwrap();
        prop_assert_eq!(g.basis(), g2.basis());
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(
        (k, gens) in small_ideal(),
        f in raw_poly(3, 4, 5),
        h in raw_poly(3, 4, 5),
        c in 1i64..7,
    ) {
        let rings = rings();
        let r = &rings[k];
        let base = r.base();
        let polys: Vec<_> = gens.iter().map(|g| build(r, &fit(r, g))).collect();
        let g = buchberger(base, &polys, &GbConfig::default()).unwrap();
        let (f, h) = (build(r, &fit(r, &f)), build(r, &fit(r, &h)));
        let nf = |p: &arck::Polynomial| -> arck::Polynomial { normal_form(p, &g).unwrap() };

        let nf_f = nf(&f);
        prop_assert_eq!(nf(&nf_f), nf_f.clone());
        // NF(f + h) = NF(NF(f) + NF(h))
        prop_assert_eq!(nf(&base.add(&f, &h)), nf(&base.add(&nf_f, &nf(&h))));
        // NF(c·f) = c·NF(f)
        let c = base.field().from_i64(c);
        prop_assert_eq!(nf(&f.scale(&c)), nf_f.scale(&c));
        // f − NF(f) lies in the ideal
        prop_assert!(nf(&base.sub(&f, &nf_f)).is_zero());
    }
}
