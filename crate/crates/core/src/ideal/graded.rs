use crate::error::Result;
use crate::polyring::{monomials_of_degree, Monomial};

use super::Ideal;

impl Ideal {
    /// Degree-`d` monomials (for the ring weights) outside the leading-monomial ideal of
    /// `I + Q`; a basis of `(R/I)_d`.
    pub fn std_monomials(&self, d: u64) -> Result<Vec<Monomial>> {
        self.check_homogeneous()?;
        let gb = self.gb()?;
        Ok(monomials_of_degree(self.ring().weights(), d)
            .into_iter()
            .filter(|m| !gb.lm_divides(m))
            .collect())
    }

    /// `dim_k (R/I)_d`.
    pub fn graded_dim(&self, d: u64) -> Result<u64> {
        Ok(self.std_monomials(d)?.len() as u64)
    }

    /// Total number of standard monomials, if finite (`R/I` of finite length).
    pub fn colength(&self) -> Result<Option<u64>> {
        let gb = self.gb()?;
        let n = self.ring().nvars();
        // finite iff every variable has a pure power among the leading monomials
        let mut bound = 0u64;
        for i in 0..n {
            let pure = gb
                .leading_monomials()
                .filter(|m| m.exponents().iter().enumerate().all(|(j, &e)| j == i || e == 0))
                .map(|m| m.exponents()[i] as u64)
                .min();
            match pure {
                Some(e) => bound += e,
                None => return Ok(None),
            }
        }
        let ones = vec![1u32; n];
        let mut count = 0u64;
        for d in 0..=bound {
            count += monomials_of_degree(&ones, d)
                .iter()
                .filter(|m| !gb.lm_divides(m))
                .count() as u64;
        }
        Ok(Some(count))
    }
}
