use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::polyring::Polynomial;

/// Result of one strong Artin-Rees instance.
#[derive(Debug, Clone)]
pub struct StrongCheck {
    pub holds: bool,
    /// A generator of `Iⁿ ∩ J` outside `I^{n-h}(I^h ∩ J)` when the instance fails.
    pub witness: Option<Polynomial>,
}

fn check_hn(h: u32, n: u32) -> Result<()> {
    if h > n {
        return Err(Error::Argument(format!("need h ≤ n, got h = {h}, n = {n}")));
    }
    Ok(())
}

/// Compare `lhs = Iⁿ ∩ J` with `rhs`. `rhs ⊆ lhs` always holds; a failure there is an
/// internal error.
fn compare(lhs: &Ideal, rhs: &Ideal) -> Result<StrongCheck> {
    if !rhs.is_subset_of(lhs)? {
        return Err(Error::Internal(
            "I^{n-h}(I^h ∩ J) ⊄ Iⁿ ∩ J; the reverse inclusion must always hold".into(),
        ));
    }
    let witness = lhs.gens_outside(rhs)?.into_iter().next();
    Ok(StrongCheck { holds: witness.is_none(), witness })
}

/// `Iⁿ ∩ J = I^{n-h}(I^h ∩ J)`.
pub fn check_strong_ar(i: &Ideal, j: &Ideal, h: u32, n: u32) -> Result<StrongCheck> {
    check_hn(h, n)?;
    let lhs = i.power(n)?.intersect(j)?;
    let rhs = i.power(n - h)?.product(&i.power(h)?.intersect(j)?)?;
    compare(&lhs, &rhs)
}

/// `Iⁿ ∩ J ⊆ I^{n-h}J`.
pub fn check_weak_ar(i: &Ideal, j: &Ideal, h: u32, n: u32) -> Result<bool> {
    check_hn(h, n)?;
    let lhs = i.power(n)?.intersect(j)?;
    let rhs = i.power(n - h)?.product(j)?;
    lhs.is_subset_of(&rhs)
}

/// One `(n, h)` cell of an Artin-Rees table. `holds` is `None` when a resource cap
/// stopped the computation.
#[derive(Debug, Clone)]
pub struct ArCell {
    pub n: u32,
    pub h: u32,
    pub holds: Option<bool>,
    pub witness: Option<Polynomial>,
}

/// Exhaustive strong Artin-Rees scan over `1 ≤ n ≤ nmax`, `0 ≤ h ≤ n`.
#[derive(Debug, Clone)]
pub struct ArReport {
    pub i: Ideal,
    pub j: Ideal,
    pub nmax: u32,
    /// Cells in `(n, h)` lexicographic order.
    pub cells: Vec<ArCell>,
    /// `minimal[n-1]`: least `h` with the instance true at exponent `n`; `None` if a
    /// capped cell hides it.
    pub minimal: Vec<Option<u32>>,
    /// Least `h` true at every exponent `h ≤ n ≤ nmax`; `None` if undetermined.
    pub uniform: Option<u32>,
    /// No cell hit a resource cap.
    pub complete: bool,
}

impl ArReport {
    pub fn cell(&self, n: u32, h: u32) -> Option<&ArCell> {
        self.cells.iter().find(|c| c.n == n && c.h == h)
    }

    pub fn minimal_at(&self, n: u32) -> Option<u32> {
        self.minimal.get(n.checked_sub(1)? as usize).copied().flatten()
    }

    pub fn failures(&self) -> impl Iterator<Item = &ArCell> {
        self.cells.iter().filter(|c| c.holds == Some(false))
    }
}

/// Fill the `(n, h)` grid. Powers and the intersections `I^h ∩ J` are computed once;
/// the cells then run in parallel and are merged in grid order, so the report does not
/// depend on scheduling.
pub fn find_ar_table(i: &Ideal, j: &Ideal, nmax: u32) -> Result<ArReport> {
    if nmax < 1 {
        return Err(Error::Argument("nmax must be at least 1".into()));
    }
    let powers: Vec<Ideal> = (0..=nmax).map(|k| i.power(k)).collect::<Result<_>>()?;
    let caps: Vec<Result<Ideal>> = powers
        .par_iter()
        .map(|p| {
            let a = p.intersect(j)?;
            a.gb()?;
            Ok(a)
        })
        .collect();
    let grid: Vec<(u32, u32)> = (1..=nmax).flat_map(|n| (0..=n).map(move |h| (n, h))).collect();
    let cells: Vec<ArCell> = grid
        .par_iter()
        .map(|&(n, h)| {
            let mut cell = ArCell { n, h, holds: None, witness: None };
            let run = || -> Result<StrongCheck> {
                let lhs = caps[n as usize].as_ref().map_err(Clone::clone)?;
                if h == n {
                    return Ok(StrongCheck { holds: true, witness: None });
                }
                let ah = caps[h as usize].as_ref().map_err(Clone::clone)?;
                compare(lhs, &powers[(n - h) as usize].product(ah)?)
            };
            match run() {
                Ok(c) => {
                    cell.holds = Some(c.holds);
                    cell.witness = c.witness;
                    Ok(cell)
                }
                Err(e) if e.is_resource() => Ok(cell),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;

    let complete = cells.iter().all(|c| c.holds.is_some());
    let at = |n: u32, h: u32| cells.iter().find(|c| c.n == n && c.h == h).unwrap().holds;
    let mut minimal = Vec::with_capacity(nmax as usize);
    for n in 1..=nmax {
        let mut found = None;
        for h in 0..=n {
            match at(n, h) {
                Some(true) => {
                    found = Some(h);
                    break;
                }
                Some(false) => {}
                None => break,
            }
        }
        // every h' between the minimal h and n must work as well
        if let Some(h0) = found {
            if (h0..=n).any(|h| at(n, h) == Some(false)) {
                return Err(Error::Internal(format!(
                    "Artin-Rees instances at n = {n} are not monotone in h"
                )));
            }
        }
        minimal.push(found);
    }
    let mut uniform = None;
    for h in 0..=nmax {
        let col: Vec<Option<bool>> = (h.max(1)..=nmax).map(|n| at(n, h)).collect();
        if col.iter().all(|c| *c == Some(true)) {
            uniform = Some(h);
            break;
        }
        if col.iter().any(|c| c.is_none()) {
            break;
        }
    }
    Ok(ArReport { i: i.clone(), j: j.clone(), nmax, cells, minimal, uniform, complete })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::groebner::GbConfig;
    use crate::polyring::{OrderKind, PolyRing, Ring, RingPresentation};

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
    fn example1_instance_with_witness() {
        let r = ring(&["x", "y", "z"], Some(vec![1, 1, 2]), &["z^2"]);
        let i = ideal(&r, &["x^2", "y^2", "x*y + z"]);
        let j = ideal(&r, &["z"]);
        let c = check_strong_ar(&i, &j, 1, 2).unwrap();
        assert!(!c.holds);
        let w = c.witness.unwrap();
        assert_eq!(r.base().display(&w.monic()).to_string(), "x*y*z");
        assert!(i.power(2).unwrap().intersect(&j).unwrap().member(&w).unwrap());
    }

    #[test]
    fn zero_j_always_holds() {
        let r = ring(&["x", "y"], None, &[]);
        let i = ideal(&r, &["x^2", "x*y + y^2"]);
        let j = Ideal::zero(&r);
        for n in 0..4 {
            for h in 0..=n {
                assert!(check_strong_ar(&i, &j, h, n).unwrap().holds);
            }
        }
    }

    #[test]
    fn univariate_pair() {
        let r = ring(&["x"], None, &[]);
        let i = ideal(&r, &["x"]);
        let j = ideal(&r, &["x^2"]);
        assert!(check_strong_ar(&i, &j, 2, 3).unwrap().holds);
        let c = check_strong_ar(&i, &j, 1, 3).unwrap();
        assert!(!c.holds);
        assert!(check_weak_ar(&i, &j, 2, 3).unwrap());
        assert!(!check_weak_ar(&i, &j, 1, 3).unwrap());
        assert!(matches!(check_strong_ar(&i, &j, 4, 3), Err(Error::Argument(_))));
        assert!(check_weak_ar(&i, &Ideal::unit(&r), 0, 3).unwrap());

        let t = find_ar_table(&i, &j, 6).unwrap();
        assert!(t.complete);
        assert_eq!(t.uniform, Some(2));
        assert_eq!(t.minimal_at(1), Some(1));
        for n in 2..=6 {
            assert_eq!(t.minimal_at(n), Some(2));
        }
        // strong implies weak on every cell
        for c in &t.cells {
            if c.holds == Some(true) {
                assert!(check_weak_ar(&i, &j, c.h, c.n).unwrap());
            }
        }
    }

    #[test]
    fn equal_pair_is_uniform_one() {
        // h = 0 compares Iⁿ with Iⁿ(I⁰ ∩ I) = Iⁿ⁺¹, which is strictly smaller; h = 1
        // gives I^{n-1}(I ∩ I) = Iⁿ
        let r = ring(&["x", "y"], None, &[]);
        let i = ideal(&r, &["x^2", "y^3"]);
        let t = find_ar_table(&i, &i, 4).unwrap();
        assert_eq!(t.uniform, Some(1));
        assert!(t.minimal.iter().all(|m| *m == Some(1)));
    }

    #[test]
    fn capped_cells_mark_report_incomplete() {
        let base = PolyRing::new(Field::Rational, vec!["x".into(), "y".into()], None, OrderKind::Grevlex)
            .unwrap();
        let r = RingPresentation::new(base, vec![], GbConfig { degree_cap: 5 }).unwrap();
        let i = ideal(&r, &["x", "y"]);
        let j = ideal(&r, &["x*y"]);
        let t = find_ar_table(&i, &j, 5).unwrap();
        assert!(!t.complete);
        assert!(t.cells.iter().any(|c| c.holds.is_none()));
    }
}
