use std::sync::Arc;

use crate::coeff::Field;
use crate::error::Result;
use crate::groebner::{buchberger, GbConfig, GroebnerBasis};

use super::{PolyRing, Polynomial};

/// Shared handle to a ring presentation.
pub type Ring = Arc<RingPresentation>;

/// `R = k[x_1..x_r]/Q`. Elements of `R` are represented by their normal forms modulo
/// the reduced Gröbner basis of `Q`; the graded maximal ideal is `(x_1..x_r) + Q`.
#[derive(Debug)]
pub struct RingPresentation {
    base: PolyRing,
    quotient: Vec<Polynomial>,
    quotient_gb: GroebnerBasis,
    config: GbConfig,
}

impl RingPresentation {
    pub fn new(base: PolyRing, quotient: Vec<Polynomial>, config: GbConfig) -> Result<Ring> {
        for q in &quotient {
            base.check(q)?;
        }
        let quotient_gb = buchberger(&base, &quotient, &config)?;
        Ok(Arc::new(RingPresentation {
            base,
            quotient,
            quotient_gb,
            config,
        }))
    }

    /// The polynomial ring itself (empty quotient).
    pub fn polynomial_ring(base: PolyRing) -> Ring {
        RingPresentation::new(base, Vec::new(), GbConfig::default()).expect("empty quotient")
    }

    pub fn base(&self) -> &PolyRing {
        &self.base
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn nvars(&self) -> usize {
        self.base.nvars()
    }

    pub fn vars(&self) -> &[String] {
        self.base.vars()
    }

    pub fn weights(&self) -> &[u32] {
        self.base.weights()
    }

    /// Quotient generators as given.
    pub fn quotient(&self) -> &[Polynomial] {
        &self.quotient
    }

    pub fn quotient_gb(&self) -> &GroebnerBasis {
        &self.quotient_gb
    }

    pub fn config(&self) -> &GbConfig {
        &self.config
    }

    /// Same presentation with different resource limits.
    pub fn with_config(&self, config: GbConfig) -> Ring {
        Arc::new(RingPresentation {
            base: self.base.clone(),
            quotient: self.quotient.clone(),
            quotient_gb: self.quotient_gb.clone(),
            config,
        })
    }

    /// Canonical representative of `f` modulo `Q`.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.quotient_gb.reduce(f)
    }

    /// `Q` is homogeneous for the ring weights.
    pub fn is_graded(&self) -> bool {
        self.quotient_gb
            .basis()
            .iter()
            .all(|q| self.base.is_homogeneous(q))
    }

    /// The quotient is the zero ideal.
    pub fn is_polynomial_ring(&self) -> bool {
        self.quotient_gb.is_empty()
    }

    pub fn is_zero_ring(&self) -> bool {
        self.quotient_gb.is_unit()
    }
}

impl PartialEq for RingPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.quotient_gb == other.quotient_gb
    }
}

impl Eq for RingPresentation {}
