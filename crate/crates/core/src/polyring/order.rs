use std::cmp::Ordering;

use crate::error::{Error, Result};

use super::Monomial;

/// Monomial orders. All are multiplicative well-orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Weighted degree first, reverse lexicographic tie-break. Weights must be positive.
    WeightedGrevlex(Vec<u32>),
    /// The first `split` variables are compared by `head`; ties are broken on the
    /// remaining variables by `tail`.
    Block {
        split: usize,
        head: Box<MonomialOrder>,
        tail: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn block(split: usize, head: MonomialOrder, tail: MonomialOrder) -> MonomialOrder {
        MonomialOrder::Block {
            split,
            head: Box::new(head),
            tail: Box::new(tail),
        }
    }

    /// Compare two exponent slices of equal length.
    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| revlex(a, b))
            }
            MonomialOrder::WeightedGrevlex(w) => {
                let da: u64 = a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                let db: u64 = b.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                da.cmp(&db).then_with(|| revlex(a, b))
            }
            MonomialOrder::Block { split, head, tail } => head
                .cmp_exps(&a[..*split], &b[..*split])
                .then_with(|| tail.cmp_exps(&a[*split..], &b[*split..])),
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    /// Checked comparison; fails when the variable counts differ.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::Structural(format!(
                "monomials in {} and {} variables",
                a.nvars(),
                b.nvars()
            )));
        }
        Ok(self.cmp(a, b))
    }

    /// Whether every monomial involving one of the first `k` variables exceeds every
    /// monomial free of them.
    pub fn eliminates(&self, k: usize, nvars: usize) -> bool {
        if k == 0 || k >= nvars {
            return true;
        }
        match self {
            MonomialOrder::Lex => true,
            MonomialOrder::Grevlex | MonomialOrder::WeightedGrevlex(_) => false,
            MonomialOrder::Block { split, head, tail } => match k.cmp(split) {
                Ordering::Equal => true,
                Ordering::Less => head.eliminates(k, *split),
                Ordering::Greater => tail.eliminates(k - split, nvars - split),
            },
        }
    }
}

// a > b iff the last nonzero entry of a - b is negative.
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn compare_examples() {
        let x2y = m(&[2, 1]);
        let xy2 = m(&[1, 2]);
        assert_eq!(MonomialOrder::Lex.compare(&x2y, &xy2).unwrap(), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.compare(&x2y, &xy2).unwrap(), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.compare(&x2y, &x2y).unwrap(), Ordering::Equal);
        assert!(MonomialOrder::Lex.compare(&x2y, &m(&[1, 1, 1])).is_err());
    }

    #[test]
    fn grevlex_differs_from_deglex() {
        // x*z^2 vs y^3 in three variables: grevlex says y^3 > x*z^2
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.cmp(&m(&[0, 3, 0]), &m(&[1, 0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn weighted_degree_dominates() {
        let o = MonomialOrder::WeightedGrevlex(vec![1, 1, 3]);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_property_flags() {
        let b = MonomialOrder::block(1, MonomialOrder::Lex, MonomialOrder::Grevlex);
        assert!(b.eliminates(1, 3));
        assert!(!b.eliminates(2, 3));
        assert!(!MonomialOrder::Grevlex.eliminates(1, 3));
        assert!(MonomialOrder::Grevlex.eliminates(0, 3));
        assert!(MonomialOrder::Lex.eliminates(2, 3));
        let nested = MonomialOrder::block(
            1,
            MonomialOrder::Lex,
            MonomialOrder::block(2, MonomialOrder::Grevlex, MonomialOrder::Grevlex),
        );
        assert!(nested.eliminates(3, 5));
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Lex,
            MonomialOrder::Grevlex,
            MonomialOrder::WeightedGrevlex(vec![2, 1, 3]),
            MonomialOrder::block(1, MonomialOrder::Lex, MonomialOrder::Grevlex),
            MonomialOrder::block(2, MonomialOrder::Grevlex, MonomialOrder::WeightedGrevlex(vec![5])),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..6, 3).prop_map(|v| Monomial::from_exponents(&v))
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative_total_well_orders(a in mono(), b in mono(), c in mono()) {
            let one = Monomial::one(3);
            for o in orders() {
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
                prop_assert_ne!(o.cmp(&a, &one), Ordering::Less);
                if o.cmp(&a, &b) == Ordering::Less && o.cmp(&b, &c) == Ordering::Less {
                    prop_assert_eq!(o.cmp(&a, &c), Ordering::Less);
                }
            }
        }
    }
}
