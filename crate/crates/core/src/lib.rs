//! Exact Hilbert functions, mixed multiplicities and mixed volumes for
//! monomial data.

pub mod bridge;
pub mod closed_forms;
pub mod count;
pub mod error;
pub mod hilbert;
pub mod job;
pub mod linalg;
pub mod monomial;
pub mod multiplicities;
pub mod poly;
pub mod polytope;
pub mod rational;
pub mod rees;
pub mod suite;

pub use error::{Error, ErrorClass, Result};
pub use monomial::{MonomialIdeal, RingContext};
