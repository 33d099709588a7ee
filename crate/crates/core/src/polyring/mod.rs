//! Monomials, monomial orders, sparse polynomials, and ring presentations
//! `k[x_1..x_r]/Q` with optional variable weights.

mod monomial;
mod order;
mod poly;
mod presentation;
mod ring;

pub use monomial::{monomials_of_degree, Monomial};
pub use order::MonomialOrder;
pub use poly::{Polynomial, Term};
pub use presentation::{Ring, RingPresentation};
pub use ring::{OrderKind, PolyDisplay, PolyRing};
