//! Symbolic powers of square-free monomial ideals, splitting maps, clutter
//! covering and packing programs, and homological invariants.

pub mod checks;
pub mod clutter;
pub mod corpus;
pub mod equality;
pub mod error;
pub mod fixtures;
pub mod homology;
pub mod ideal;
pub mod monomial;
pub mod splitting;
pub mod symbolic;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
