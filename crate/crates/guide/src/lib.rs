//! The book chapters, compiled as doc-tests.

#[doc = include_str!("../../../book/src/overview.md")]
pub mod overview {}

#[doc = include_str!("../../../book/src/monomial-ideals.md")]
pub mod monomial_ideals {}

#[doc = include_str!("../../../book/src/hilbert-polynomials.md")]
pub mod hilbert_polynomials {}

#[doc = include_str!("../../../book/src/mixed-multiplicities.md")]
pub mod mixed_multiplicities {}

#[doc = include_str!("../../../book/src/mixed-volumes.md")]
pub mod mixed_volumes {}

#[doc = include_str!("../../../book/src/rees.md")]
pub mod rees {}

#[doc = include_str!("../../../book/src/jobs.md")]
pub mod jobs {}
