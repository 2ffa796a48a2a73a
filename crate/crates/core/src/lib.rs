//! A finite workbench for the gamoid semantics of intensional type theory.
//!
//! Types are interpreted as *gamoids*: finite groupoids whose objects are
//! strategies on a game and whose arrows are isomorphism strategies. This
//! crate builds that model at desk scale and checks its laws by exhaustion.
//!
//! - [`games`]: finite games, strategies, composition and strategy isos.
//! - [`gamoid`]: gamoids, equality-preserving morphisms and functor search.
//! - [`dependent`]: dependent gamoids, ⊎B, Π̂, Σ̂, Id-gamoids and `ev`.
//! - [`cwf`]: the category-with-families structure and its equations.
//! - [`formers`]: Π, Σ, Id and universes with their substitution laws.
//! - [`intensionality`]: UIP, FunExt, univalence and the intensionality criteria.
//! - [`frontend`]: the model language, suites and reports behind the `gamoid` binary.

pub mod corpus;
pub mod cwf;
pub mod dependent;
pub mod formers;
pub mod frontend;
pub mod error;
pub mod games;
pub mod intensionality;
pub mod gamoid;
pub mod laws;

pub use error::{Error, Result};
