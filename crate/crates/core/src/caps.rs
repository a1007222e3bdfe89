//! Size limits for the enumerating operations.
//!
//! Every operation that enumerates (subgroups, chains, coatom subsets, ...)
//! refuses inputs above its cap instead of degrading. Caps may be raised,
//! but never above the hard limits below.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest group any constructor will build.
pub const HARD_MAX_ORDER: usize = 512;
/// Largest lattice `FiniteLattice::new` accepts.
pub const HARD_MAX_LATTICE: usize = 20_000;
/// Constructors verify associativity up to this order.
pub const DEFAULT_ASSOC_CHECK_ORDER: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Groups above this order are refused by subgroup enumeration.
    pub enumeration_order: usize,
    /// Loaded tables are checked for associativity up to this order.
    pub associativity_check_order: usize,
    /// Maximal-chain enumeration stops with an error past this count.
    pub chain_count: usize,
    /// Lattice isomorphism search refuses lattices larger than this.
    pub isomorphism_size: usize,
    /// Prodanov lattices enumerate coatom subsets up to this many coatoms.
    pub prodanov_coatoms: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration_order: 64,
            associativity_check_order: DEFAULT_ASSOC_CHECK_ORDER,
            chain_count: 1_000_000,
            isomorphism_size: 64,
            prodanov_coatoms: 20,
        }
    }
}

impl Caps {
    pub fn with_enumeration_order(mut self, order: usize) -> Self {
        self.enumeration_order = order;
        self
    }

    /// Rejects caps that exceed the hard limits.
    pub fn validate(&self) -> Result<()> {
        if self.enumeration_order > HARD_MAX_ORDER {
            return Err(Error::limit(
                "enumeration order cap",
                self.enumeration_order,
                HARD_MAX_ORDER,
            ));
        }
        if self.associativity_check_order > HARD_MAX_ORDER {
            return Err(Error::limit(
                "associativity check cap",
                self.associativity_check_order,
                HARD_MAX_ORDER,
            ));
        }
        if self.isomorphism_size > HARD_MAX_LATTICE {
            return Err(Error::limit(
                "isomorphism size cap",
                self.isomorphism_size,
                HARD_MAX_LATTICE,
            ));
        }
        if self.prodanov_coatoms > 24 {
            return Err(Error::limit("coatom cap", self.prodanov_coatoms, 24));
        }
        Ok(())
    }

    pub(crate) fn check_enumeration(&self, order: usize) -> Result<()> {
        let limit = self.enumeration_order.min(HARD_MAX_ORDER);
        if order > limit {
            return Err(Error::limit("group order for enumeration", order, limit));
        }
        Ok(())
    }
}
