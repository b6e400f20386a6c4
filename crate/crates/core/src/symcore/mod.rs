//! Exact arithmetic substrate: rationals, sparse polynomials and series modulo `t^c`.

mod poly;
mod rat;
mod series;

pub use poly::{Monomial, Poly, Var};
pub(crate) use poly::split_signed_terms;
pub use rat::Rat;
pub use series::Series;
