//! Gröbner-basis kernel for Artin-Rees questions on ideals of (weighted) graded
//! quotient rings `k[x_1..x_r]/Q` over ℚ or 𝔽ₚ.
//!
//! Layers, bottom up:
//! - [`coeff`]: exact field arithmetic.
//! - [`polyring`]: monomials, orders, sparse polynomials, ring presentations.
//! - [`groebner`]: normal forms, Buchberger, elimination.
//! - [`ideal`]: the ideal calculus plus an independent linear-algebra membership oracle.
//! - [`artinrees`]: Artin-Rees checks and tables, reduction elements, multiplicity,
//!   local-cohomology length bounds, relation type, and the two dimension-two
//!   counterexample families.
//! - [`session`]: the session-file language and task runner behind the `arck` binary.

pub mod artinrees;
pub mod coeff;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod polyring;
pub mod sampling;
pub mod session;

pub use coeff::{Field, FieldElement};
pub use error::{Error, Result};
pub use groebner::{GbConfig, GroebnerBasis};
pub use ideal::Ideal;
pub use polyring::{Monomial, MonomialOrder, OrderKind, PolyRing, Polynomial, Ring, RingPresentation};
