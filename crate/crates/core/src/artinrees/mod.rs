//! Artin-Rees computations for an ideal pair `(I, J)` of a ring `R = k[x..]/Q`.
//!
//! Strong instance: `Iⁿ ∩ J = I^{n-h}(I^h ∩ J)`. Weak instance: `Iⁿ ∩ J ⊆ I^{n-h}J`.
//! The local ring at the origin is modelled by the graded maximal ideal; every search is
//! finite and reports "none up to the horizon" rather than nonexistence.

mod bound;
mod examples;
mod lemma;
mod reduction;
mod reltype;
mod strong;

pub use bound::{h0_length, multiplicity, theorem_bound, TheoremBound, MULTIPLICITY_HORIZON};
pub use examples::{verify_example1, verify_example2, ExampleVerdict};
pub use lemma::{
    check_lemma_first, check_relationtype_lemma, least_lemma_first_h, reltype_modulo, RelationLemmaCheck,
};
pub use reduction::{find_reduction_element, find_reduction_element_seeded, ReductionElement};
pub use reltype::{minimize_generators, reltype, ReltypeReport};
pub use strong::{check_strong_ar, check_weak_ar, find_ar_table, ArCell, ArReport, StrongCheck};
