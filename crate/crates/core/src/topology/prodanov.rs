//! Meets of sets of maximal non-discrete topologies.
//!
//! With `A_1` the coatoms of `L_G`, every `B ⊆ A_1` gives `τ_B = ⋀B`
//! (`⋀∅` is the discrete topology) and a closure
//! `cl(B) = {τ ∈ A_1 : τ_B ≤ τ}`. The set `P_G` of all `τ_B` carries the
//! join `τ_B ∨_p τ_C = τ_{cl(B) ∩ cl(C)}`. Subsets are coatom bitmasks.

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

use super::TopologyLattice;

/// Closure data for `P_G`, indexed by coatom bitmask.
#[derive(Clone, Debug)]
pub struct ProdanovLattice {
    /// Positions of the coatoms in `L_G`, in index order.
    pub coatoms: Vec<usize>,
    /// `τ_B` for every mask `B`.
    pub meets: Vec<usize>,
    /// `cl(B)` for every mask `B`.
    pub closures: Vec<u32>,
    /// `P_G` as sorted positions in `L_G`.
    pub elements: Vec<usize>,
}

impl ProdanovLattice {
    pub fn new(l: &TopologyLattice, caps: &Caps) -> Result<Self> {
        let lat = l.lattice();
        let coatoms = lat.coatoms();
        let k = coatoms.len();
        if k > caps.prodanov_coatoms {
            return Err(Error::limit(
                "coatoms for subset enumeration",
                k,
                caps.prodanov_coatoms,
            ));
        }
        let count = 1usize << k;
        let mut meets = vec![lat.top(); count];
        for mask in 1..count {
            let low = mask.trailing_zeros() as usize;
            meets[mask] = lat.meet(meets[mask & (mask - 1)], coatoms[low]);
        }
        let closures: Vec<u32> = meets
            .iter()
            .map(|&m| {
                coatoms
                    .iter()
                    .enumerate()
                    .filter(|&(_, &c)| lat.leq(m, c))
                    .fold(0u32, |acc, (i, _)| acc | (1 << i))
            })
            .collect();
        let mut elements = meets.clone();
        elements.sort_unstable();
        elements.dedup();
        Ok(ProdanovLattice {
            coatoms,
            meets,
            closures,
            elements,
        })
    }

    pub fn tau(&self, mask: u32) -> usize {
        self.meets[mask as usize]
    }

    pub fn closure(&self, mask: u32) -> u32 {
        self.closures[mask as usize]
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// `τ_B ∨_p τ_C`.
    pub fn join_p(&self, b: u32, c: u32) -> usize {
        self.tau(self.closure(b) & self.closure(c))
    }

    /// The closed set `B` with `τ_B = x`, for `x ∈ P_G`.
    pub fn closed_set_of(&self, x: usize) -> Option<u32> {
        self.masks()
            .find(|&b| self.closure(b) == b && self.tau(b) == x)
    }

    fn masks(&self) -> impl Iterator<Item = u32> {
        0..self.meets.len() as u32
    }

    /// Extensive, monotone and idempotent on all coatom subsets. Monotone
    /// is checked on one-element extensions, which suffices.
    pub fn is_closure_operator(&self) -> bool {
        let k = self.coatoms.len();
        self.masks().all(|b| {
            let cb = self.closure(b);
            b & !cb == 0
                && self.closure(cb) == cb
                && (0..k).all(|i| cb & !self.closure(b | (1 << i)) == 0)
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NonClosed {
    /// Coatom positions (into `coatoms`) of `B`.
    pub set: Vec<usize>,
    pub closure: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProdanovReport {
    pub order: usize,
    /// Coatom kernels.
    pub coatoms: Vec<Vec<usize>>,
    /// Kernels of the elements of `P_G`.
    pub elements: Vec<Vec<usize>>,
    pub is_sublattice: bool,
    /// `∨_p` agrees with the join of `L_G` on `P_G`.
    pub join_agrees: bool,
    /// For each `k` up to the height: whether every `k`-maximal element
    /// lies in `P_G`.
    pub k_maximal_in_p: Vec<bool>,
    pub closure_operator: bool,
    pub all_closed: bool,
    pub non_closed_count: usize,
    /// The first few `B` with `cl(B) ≠ B`, in mask order.
    pub non_closed: Vec<NonClosed>,
}

const NON_CLOSED_LISTED: usize = 64;

fn bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask & (1 << i) != 0).collect()
}

/// Builds `P_G` for `G` and reports its lattice properties.
pub fn prodanov_lattice(g: &FiniteGroup, caps: &Caps) -> Result<(ProdanovLattice, ProdanovReport)> {
    let l = TopologyLattice::new(g, caps)?;
    let p = ProdanovLattice::new(&l, caps)?;
    let lat = l.lattice();
    let kernel = |i: usize| l.kernel(i).to_vec();

    let closed: Vec<u32> = p.masks().filter(|&b| p.closure(b) == b).collect();
    let mut is_sublattice = true;
    let mut join_agrees = true;
    for &b in &closed {
        for &c in &closed {
            let (x, y) = (p.tau(b), p.tau(c));
            is_sublattice &= p.contains(lat.meet(x, y)) && p.contains(lat.join(x, y));
            join_agrees &= p.join_p(b, c) == lat.join(x, y);
        }
    }
    let k_maximal_in_p = (0..=lat.height())
        .map(|k| lat.k_maximal_elements(k).into_iter().all(|x| p.contains(x)))
        .collect();
    let non_closed: Vec<u32> = p.masks().filter(|&b| p.closure(b) != b).collect();
    let report = ProdanovReport {
        order: g.order(),
        coatoms: p.coatoms.iter().map(|&c| kernel(c)).collect(),
        elements: p.elements.iter().map(|&x| kernel(x)).collect(),
        is_sublattice,
        join_agrees,
        k_maximal_in_p,
        closure_operator: p.is_closure_operator(),
        all_closed: non_closed.is_empty(),
        non_closed_count: non_closed.len(),
        non_closed: non_closed
            .iter()
            .take(NON_CLOSED_LISTED)
            .map(|&b| NonClosed {
                set: bits(b),
                closure: bits(p.closure(b)),
            })
            .collect(),
    };
    Ok((p, report))
}
