//! Exhaustive checkers for lattice identities. Each returns the
//! lexicographically least witness of failure, or `None`.

use rayon::prelude::*;
use serde::Serialize;

use super::FiniteLattice;

/// A triple `(a, b, c)` violating a three-variable law.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TripleWitness {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// A cover `lower ≺ upper` and an element `c` breaking a covering condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverWitness {
    pub lower: usize,
    pub upper: usize,
    pub c: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BirkhoffWitness {
    pub a: usize,
    pub b: usize,
}

impl FiniteLattice {
    /// Least `(a, b, c)` with `a ≤ c` and `a ∨ (b ∧ c) ≠ (a ∨ b) ∧ c`.
    pub fn modular_witness(&self) -> Option<TripleWitness> {
        let n = self.size();
        (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                let ab = self.join(a, b);
                for c in self.up_set(a).iter() {
                    if self.join(a, self.meet(b, c)) != self.meet(ab, c) {
                        return Some(TripleWitness { a, b, c });
                    }
                }
            }
            None
        })
    }

    pub fn is_modular(&self) -> bool {
        self.modular_witness().is_none()
    }

    /// Least `(a, b, c)` with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
    pub fn distributive_witness(&self) -> Option<TripleWitness> {
        let n = self.size();
        (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                let ab = self.meet(a, b);
                for c in 0..n {
                    if self.meet(a, self.join(b, c)) != self.join(ab, self.meet(a, c)) {
                        return Some(TripleWitness { a, b, c });
                    }
                }
            }
            None
        })
    }

    pub fn is_distributive(&self) -> bool {
        self.distributive_witness().is_none()
    }

    /// Upper covering condition: `b ≺ a` implies `b ∨ c ⪯ a ∨ c`.
    pub fn semimodular_witness(&self) -> Option<CoverWitness> {
        let n = self.size();
        let covers: Vec<(usize, usize)> = self.cover_pairs().collect();
        covers.into_par_iter().find_map_first(|(lower, upper)| {
            (0..n)
                .find(|&c| !self.covers_or_equal(self.join(lower, c), self.join(upper, c)))
                .map(|c| CoverWitness { lower, upper, c })
        })
    }

    pub fn is_semimodular(&self) -> bool {
        self.semimodular_witness().is_none()
    }

    /// Lower covering condition: `b ≺ a` implies `b ∧ c ⪯ a ∧ c`.
    pub fn dually_semimodular_witness(&self) -> Option<CoverWitness> {
        let n = self.size();
        let covers: Vec<(usize, usize)> = self.cover_pairs().collect();
        covers.into_par_iter().find_map_first(|(lower, upper)| {
            (0..n)
                .find(|&c| !self.covers_or_equal(self.meet(lower, c), self.meet(upper, c)))
                .map(|c| CoverWitness { lower, upper, c })
        })
    }

    pub fn is_dually_semimodular(&self) -> bool {
        self.dually_semimodular_witness().is_none()
    }

    /// Birkhoff: if `a` and `b` both cover `a ∧ b`, then both are covered
    /// by `a ∨ b`. Least violating pair `a < b` (by index).
    pub fn birkhoff_witness(&self) -> Option<BirkhoffWitness> {
        let n = self.size();
        (0..n).into_par_iter().find_map_first(|a| {
            (a + 1..n)
                .find(|&b| {
                    let (m, j) = (self.meet(a, b), self.join(a, b));
                    self.covers(m, a)
                        && self.covers(m, b)
                        && !(self.covers(a, j) && self.covers(b, j))
                })
                .map(|b| BirkhoffWitness { a, b })
        })
    }

    pub fn has_birkhoff(&self) -> bool {
        self.birkhoff_witness().is_none()
    }

    /// Dual Birkhoff: if `a ∨ b` covers both `a` and `b`, then both cover
    /// `a ∧ b`.
    pub fn dual_birkhoff_witness(&self) -> Option<BirkhoffWitness> {
        let n = self.size();
        (0..n).into_par_iter().find_map_first(|a| {
            (a + 1..n)
                .find(|&b| {
                    let (m, j) = (self.meet(a, b), self.join(a, b));
                    self.covers(a, j)
                        && self.covers(b, j)
                        && !(self.covers(m, a) && self.covers(m, b))
                })
                .map(|b| BirkhoffWitness { a, b })
        })
    }

    pub fn has_dual_birkhoff(&self) -> bool {
        self.dual_birkhoff_witness().is_none()
    }
}
