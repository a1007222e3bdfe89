//! Group topologies on finite groups and the lattices they form.
//!
//! On a finite group every group topology is determined by the smallest
//! open set around the identity, which is a normal subgroup; finer
//! topologies have smaller kernels. This crate builds those lattices and
//! checks, exhaustively, the lattice identities and constructions that can
//! be verified at finite scale.

pub mod bitset;
pub mod caps;
pub mod corpus;
pub mod duality;
pub mod error;
pub mod group;
pub mod lattice;
pub mod pontryagin;
pub mod report;
pub mod settop;
pub mod topology;

pub use bitset::ElementSet;
pub use caps::Caps;
pub use error::{Error, Result};
pub use group::{FiniteGroup, SubgroupSet};
pub use lattice::FiniteLattice;
