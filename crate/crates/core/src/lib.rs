//! Finite-ring engine for Δ(R), the Jacobson radical and Δ-quasipolarity.
//!
//! Rings are built from the [`descriptor`] DSL by [`constructions`], analysed
//! by [`analysis`], classified by [`classify`] and checked against a corpus by
//! [`harness`].

pub mod analysis;
pub mod bimodule;
pub mod classify;
pub mod constructions;
pub mod descriptor;
pub mod error;
pub mod harness;
pub mod ring;
pub mod set;

pub use constructions::{build, BuildContext};
pub use descriptor::{ConstructionDescriptor, ModuleDescriptor};
pub use error::{Result, RingError};
pub use ring::{FiniteRing, Structure, TableRing, ValidationReport};
pub use set::ElementSet;
