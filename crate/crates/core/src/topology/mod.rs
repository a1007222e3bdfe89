//! Group topologies on a finite group and the lattice `L_G` they form.
//!
//! A group topology on a finite group is fixed by its kernel, the smallest
//! open set containing the identity. The kernel is a normal subgroup and
//! the open sets are exactly the unions of its cosets. A finer topology
//! has a smaller kernel, so `L_G` is the normal subgroup lattice turned
//! upside down: the discrete topology (kernel `{e}`) is the top and the
//! anti-discrete one (kernel `G`) the bottom.

mod analyze;
mod prodanov;
mod product;
mod verify;

use std::collections::HashMap;

use rayon::prelude::*;

use crate::bitset::ElementSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{
    all_normal_subgroups, is_normal, product_set, quotient, subgroup_as_group, FiniteGroup,
    GroupHomomorphism, SubgroupSet,
};
use crate::lattice::{to_dot, FiniteLattice};

pub use analyze::{analyze, analyze_lattice, AnalysisReport, ChainReport};
pub use prodanov::{prodanov_lattice, ProdanovLattice, ProdanovReport};
pub use product::{
    decompose_product_topology, verify_product_theorem, Decomposition, DecompositionRoute,
    ProductOutcome,
};
pub use verify::{
    verify_cover_transfer, verify_meet_basis, verify_merzon, verify_quotient_meet,
    verify_restriction_join, verify_saturation_join, verify_semimodular_transfer,
};

/// A group topology, stored as its kernel.
#[derive(Clone, Debug)]
pub struct GroupTopology {
    group: FiniteGroup,
    kernel: SubgroupSet,
}

impl GroupTopology {
    pub fn new(group: &FiniteGroup, kernel: SubgroupSet) -> Result<Self> {
        if !is_normal(group, &kernel)? {
            return Err(Error::InvalidArgument(format!(
                "kernel {:?} is not a normal subgroup",
                kernel.members()
            )));
        }
        Ok(GroupTopology {
            group: group.clone(),
            kernel,
        })
    }

    pub fn discrete(group: &FiniteGroup) -> Self {
        GroupTopology {
            group: group.clone(),
            kernel: SubgroupSet::trivial(group),
        }
    }

    pub fn anti_discrete(group: &FiniteGroup) -> Self {
        GroupTopology {
            group: group.clone(),
            kernel: SubgroupSet::whole(group),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn kernel(&self) -> &SubgroupSet {
        &self.kernel
    }

    pub fn is_discrete(&self) -> bool {
        self.kernel.is_trivial()
    }

    pub fn is_anti_discrete(&self) -> bool {
        self.kernel.size() == self.group.order()
    }

    /// Hausdorff, which on a finite group means discrete.
    pub fn is_hausdorff(&self) -> bool {
        self.is_discrete()
    }

    /// Open sets are the unions of kernel cosets.
    pub fn is_open(&self, set: &ElementSet) -> bool {
        set.universe() == self.group.order()
            && set.iter().all(|x| {
                self.kernel
                    .iter()
                    .all(|k| set.contains(self.group.mul(x, k)))
            })
    }

    /// `self ≤ other`: `other` is finer, i.e. has the smaller kernel.
    pub fn leq(&self, other: &GroupTopology) -> Result<bool> {
        if !self.group.same_as(&other.group) {
            return Err(Error::InvalidArgument(
                "topologies on different groups".into(),
            ));
        }
        Ok(other.kernel.is_subgroup_of(&self.kernel))
    }
}

impl PartialEq for GroupTopology {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.kernel == other.kernel
    }
}

impl Eq for GroupTopology {}

/// Display form of a subset, using element names when the group has them.
pub fn set_label(group: &FiniteGroup, set: &ElementSet) -> String {
    let parts: Vec<String> = set.iter().map(|x| group.name(x)).collect();
    format!("{{{}}}", parts.join(","))
}

/// A subgroup `N` viewed as a group of its own, with index translation.
#[derive(Clone, Debug)]
pub struct SubgroupView {
    pub subgroup: SubgroupSet,
    pub group: FiniteGroup,
    pub inclusion: GroupHomomorphism,
    local: Vec<usize>,
}

impl SubgroupView {
    pub fn new(parent: &FiniteGroup, n: &SubgroupSet) -> Result<Self> {
        let (group, inclusion) = subgroup_as_group(parent, n)?;
        let mut local = vec![usize::MAX; parent.order()];
        for (i, x) in n.iter().enumerate() {
            local[x] = i;
        }
        Ok(SubgroupView {
            subgroup: n.clone(),
            group,
            inclusion,
            local,
        })
    }

    /// `set ∩ N` in the local numbering of `N`.
    pub fn restrict(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.group.order(),
            set.intersection(self.subgroup.members())
                .iter()
                .map(|x| self.local[x]),
        )
    }
}

/// The quotient `G/N` with its projection.
#[derive(Clone, Debug)]
pub struct QuotientView {
    pub normal: SubgroupSet,
    pub group: FiniteGroup,
    pub projection: GroupHomomorphism,
}

impl QuotientView {
    pub fn new(parent: &FiniteGroup, n: &SubgroupSet) -> Result<Self> {
        let (group, projection) = quotient(parent, n)?;
        Ok(QuotientView {
            normal: n.clone(),
            group,
            projection,
        })
    }

    pub fn image(&self, set: &ElementSet) -> ElementSet {
        self.projection.image_of(set)
    }
}

/// `τ|_N`: the subspace topology on the subgroup `N`, as a topology on
/// `N` built as a group. Its kernel is `ker τ ∩ N`.
pub fn restrict(tau: &GroupTopology, n: &SubgroupSet) -> Result<GroupTopology> {
    let view = SubgroupView::new(&tau.group, n)?;
    let kernel = SubgroupSet::new(&view.group, view.restrict(tau.kernel.members()))?;
    GroupTopology::new(&view.group, kernel)
}

/// `τ/N` on `G/N`: its kernel is the image of `ker τ · N`.
pub fn quotient_topology(tau: &GroupTopology, n: &SubgroupSet) -> Result<GroupTopology> {
    let view = QuotientView::new(&tau.group, n)?;
    let kernel = SubgroupSet::new(&view.group, view.image(tau.kernel.members()))?;
    GroupTopology::new(&view.group, kernel)
}

/// `τ*`, the topology with identity neighbourhoods `UN`: kernel `ker τ · N`.
pub fn saturate(tau: &GroupTopology, n: &SubgroupSet) -> Result<GroupTopology> {
    if !is_normal(&tau.group, n)? {
        return Err(Error::InvalidArgument(
            "saturation by a non-normal subgroup".into(),
        ));
    }
    let members = product_set(&tau.group, tau.kernel.members(), n.members());
    GroupTopology::new(&tau.group, SubgroupSet::new(&tau.group, members)?)
}

/// `L_G`: one topology per normal subgroup, ordered by reverse inclusion
/// of kernels. Element `i` of the lattice has kernel `kernels()[i]`, in
/// canonical subgroup order, so index 0 is the discrete topology.
#[derive(Clone, Debug)]
pub struct TopologyLattice {
    group: FiniteGroup,
    kernels: Vec<SubgroupSet>,
    index: HashMap<ElementSet, usize>,
    lattice: FiniteLattice,
}

impl TopologyLattice {
    pub fn new(group: &FiniteGroup, caps: &Caps) -> Result<Self> {
        let kernels = all_normal_subgroups(group, caps)?;
        let labels = kernels
            .iter()
            .map(|k| set_label(group, k.members()))
            .collect();
        let lattice = FiniteLattice::new(labels, |a, b| {
            kernels[b].members().is_subset(kernels[a].members())
        })?;
        let index = kernels
            .iter()
            .enumerate()
            .map(|(i, k)| (k.members().clone(), i))
            .collect();
        let out = TopologyLattice {
            group: group.clone(),
            kernels,
            index,
            lattice,
        };
        out.check_tables()?;
        Ok(out)
    }

    // Join kernels must be intersections. Meet kernels must equal HK; the
    // meet kernel M is a subgroup containing H and K, so it contains HK,
    // and |HK| = |H||K|/|H∩K| pins it down by size.
    fn check_tables(&self) -> Result<()> {
        let n = self.len();
        let bad = (0..n).into_par_iter().find_map_first(|a| {
            let ka = self.kernels[a].members();
            (0..n).find_map(|b| {
                let kb = self.kernels[b].members();
                let meet = self.kernels[self.lattice.meet(a, b)].members();
                let join = self.kernels[self.lattice.join(a, b)].members();
                let inter = ka.intersection(kb);
                let meet_ok = ka.is_subset(meet)
                    && kb.is_subset(meet)
                    && meet.len() * inter.len() == ka.len() * kb.len();
                (!(meet_ok && *join == inter)).then_some((a, b))
            })
        });
        match bad {
            None => Ok(()),
            Some((a, b)) => Err(Error::Precondition(format!(
                "lattice operations disagree with kernel product/intersection at ({a}, {b})"
            ))),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.kernels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kernels.is_empty()
    }

    pub fn kernels(&self) -> &[SubgroupSet] {
        &self.kernels
    }

    pub fn kernel(&self, i: usize) -> &SubgroupSet {
        &self.kernels[i]
    }

    pub fn topology(&self, i: usize) -> GroupTopology {
        GroupTopology {
            group: self.group.clone(),
            kernel: self.kernels[i].clone(),
        }
    }

    pub fn topologies(&self) -> Vec<GroupTopology> {
        (0..self.len()).map(|i| self.topology(i)).collect()
    }

    /// Position of the topology with the given kernel, if that kernel is a
    /// normal subgroup.
    pub fn index_of(&self, kernel: &ElementSet) -> Option<usize> {
        self.index.get(kernel).copied()
    }

    pub fn discrete(&self) -> usize {
        self.lattice.top()
    }

    pub fn anti_discrete(&self) -> usize {
        self.lattice.bottom()
    }

    /// Hasse diagram in DOT, nodes labelled by kernels.
    pub fn to_dot(&self, name: &str) -> String {
        to_dot(&self.lattice, name)
    }
}

/// Shorthand for `TopologyLattice::new`.
pub fn topology_lattice(group: &FiniteGroup, caps: &Caps) -> Result<TopologyLattice> {
    TopologyLattice::new(group, caps)
}
