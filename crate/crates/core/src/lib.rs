//! Finite, exhaustively checkable models of simplicial groups, their
//! classifying spaces and the commutativity-graded variants.

pub mod bisimplicial;
pub mod bundle;
pub mod error;
pub mod group;
pub mod homology;
pub mod ordinal;
pub mod sgroup;
pub mod simplicial;
pub mod wbar;

pub use error::{Error, Result};
pub use ordinal::OrdinalMap;
