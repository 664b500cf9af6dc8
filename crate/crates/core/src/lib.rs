//! Exact calculator for the 2-strand braid group of the Klein bottle and
//! for 2-valued non-split self-maps of the Klein bottle.
//!
//! The layers, bottom up:
//!
//! - [`words`]: freely reduced words in F2(a2, b2);
//! - [`klein`]: normal forms a^m b^n in the Klein-bottle group;
//! - [`braid`]: normal forms w(a2,b2) a1^r b1^s sigma^k in B2(K), with the
//!   semidirect-product action and sigma-pushing multiplication;
//! - [`maps`]: descriptors (alpha_hat, beta_hat) of 2-valued map candidates,
//!   their validation, classification and parameter extraction;
//! - [`lift`]: induced double covers, lift factors and Borsuk-Ulam
//!   classification;
//! - [`nielsen`]: the Nielsen number by the closed formula and by the
//!   coincidence route, which must agree;
//! - [`sweep`]: batch evaluation over fixture grids (rayon behind the
//!   default `parallel` feature, with a sequential fallback);
//! - [`corpus`]: seeded generators used by the verification suites.

pub mod braid;
pub mod corpus;
pub mod error;
pub mod klein;
pub mod lift;
pub mod maps;
pub mod nielsen;
pub mod sweep;
pub mod words;

pub use braid::BraidElem;
pub use error::Error;
pub use klein::KleinElem;
pub use maps::{MapClass, MapDescriptor, MapParams};
pub use words::FreeWord;
