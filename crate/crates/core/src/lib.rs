//! Exact computations inside the pre-Lie operad.
//!
//! The crate models free operads on binary generators by canonical tree
//! tensors, the pre-Lie operad by labelled rooted trees with grafting, and
//! the species of cyclic Lie elements as a presented right Lie-module. All
//! linear algebra is over the rationals.

pub mod cyclic_lie;
pub mod egf;
pub mod error;
pub mod free_operad;
pub mod lie;
pub mod linalg;
pub mod modular;
pub mod perm;
pub mod pl;
pub mod quotient;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{LabelSet, SpeciesVector, Span};
pub use perm::Permutation;
pub use rational::Rational;
