//! Upper classes, the two-class decomposition and related predicates for
//! finite semigroups given by Cayley tables.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod homs;
pub mod ideals;
pub mod io;
pub mod oracles;
pub mod par;
pub mod predicates;
pub mod quasiorder;
pub mod relation;
pub mod report;
pub mod semigroup;
pub mod set;
pub mod sweep;
pub mod witness;

pub use error::{Error, Result};
pub use par::Exec;
pub use semigroup::{Factor, Semigroup};
pub use set::ElementSet;
