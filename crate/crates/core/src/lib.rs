//! Equations for the moduli of subalgebras of `K[t]/(t^c)` whose order
//! semigroup is a fixed numerical semigroup.

pub mod deceptive;
pub mod error;
pub mod genpoly;
pub mod normalform;
pub mod oracle;
pub mod parse;
pub mod reduction;
pub mod report;
pub mod semigroup;
pub mod symcore;
pub mod variety;

pub use error::{Error, Result};
pub use semigroup::NumericalSemigroup;
