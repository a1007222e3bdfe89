use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::caps::Caps;
use crate::error::{Error, Result};

use super::{quotient, FiniteGroup};

/// A subgroup, stored as its membership set over the owning group's
/// element indices. Construction verifies the subgroup axioms.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SubgroupSet {
    members: ElementSet,
}

impl SubgroupSet {
    pub fn new(group: &FiniteGroup, members: ElementSet) -> Result<Self> {
        if members.universe() != group.order() {
            return Err(Error::InvalidArgument(format!(
                "membership vector has length {}, group order is {}",
                members.universe(),
                group.order()
            )));
        }
        if !members.contains(group.identity()) {
            return Err(Error::InvalidArgument("subset misses the identity".into()));
        }
        for a in members.iter() {
            if !members.contains(group.inv(a)) {
                return Err(Error::InvalidArgument(format!(
                    "subset is not closed under inverses at {a}"
                )));
            }
            for b in members.iter() {
                if !members.contains(group.mul(a, b)) {
                    return Err(Error::InvalidArgument(format!(
                        "subset is not closed under products at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(SubgroupSet { members })
    }

    pub fn from_indices(group: &FiniteGroup, items: &[usize]) -> Result<Self> {
        if let Some(&bad) = items.iter().find(|&&i| i >= group.order()) {
            return Err(Error::InvalidArgument(format!(
                "element index {bad} out of range"
            )));
        }
        Self::new(
            group,
            ElementSet::from_indices(group.order(), items.iter().copied()),
        )
    }

    pub(crate) fn trusted(members: ElementSet) -> Self {
        SubgroupSet { members }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        SubgroupSet::trusted(ElementSet::singleton(group.order(), group.identity()))
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        SubgroupSet::trusted(ElementSet::full(group.order()))
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn into_members(self) -> ElementSet {
        self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn universe(&self) -> usize {
        self.members.universe()
    }

    pub fn is_subgroup_of(&self, other: &SubgroupSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::trusted(self.members.intersection(&other.members))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }
}

/// Canonical order: by size, then by the sorted member lists.
impl Ord for SubgroupSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

/// Closure of `gens` under multiplication, which in a finite group is the
/// generated subgroup.
fn close(group: &FiniteGroup, gens: &[usize]) -> ElementSet {
    let mut members = ElementSet::singleton(group.order(), group.identity());
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(y) = queue.pop_front() {
        for &g in gens {
            let z = group.mul(y, g);
            if members.insert(z) {
                queue.push_back(z);
            }
        }
    }
    members
}

pub fn subgroup_generated(group: &FiniteGroup, seed: &[usize]) -> Result<SubgroupSet> {
    if let Some(&bad) = seed.iter().find(|&&i| i >= group.order()) {
        return Err(Error::InvalidArgument(format!(
            "element index {bad} out of range"
        )));
    }
    Ok(SubgroupSet::trusted(close(group, seed)))
}

/// Every subgroup, in canonical order.
///
/// Starts from the cyclic subgroups and joins discovered subgroups with
/// cyclic ones until nothing new appears. Every subgroup is a join of
/// cyclic subgroups, so this reaches all of them.
pub fn all_subgroups(group: &FiniteGroup, caps: &Caps) -> Result<Vec<SubgroupSet>> {
    caps.check_enumeration(group.order())?;

    let mut cyclic: Vec<(usize, ElementSet)> = Vec::new();
    let mut seen_cyclic: HashMap<ElementSet, ()> = HashMap::new();
    for x in group.elements() {
        let c = close(group, &[x]);
        if seen_cyclic.insert(c.clone(), ()).is_none() {
            cyclic.push((x, c));
        }
    }

    let mut found: HashMap<ElementSet, Vec<usize>> = HashMap::new();
    let mut queue: VecDeque<ElementSet> = VecDeque::new();
    for (x, c) in &cyclic {
        found.insert(c.clone(), vec![*x]);
        queue.push_back(c.clone());
    }
    while let Some(s) = queue.pop_front() {
        let gens = found[&s].clone();
        for (x, _) in &cyclic {
            if s.contains(*x) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(*x);
            let t = close(group, &next_gens);
            if !found.contains_key(&t) {
                found.insert(t.clone(), next_gens);
                queue.push_back(t);
            }
        }
    }

    let mut out: Vec<SubgroupSet> = found.into_keys().map(SubgroupSet::trusted).collect();
    out.sort();
    Ok(out)
}

fn check_fits(group: &FiniteGroup, h: &SubgroupSet) -> Result<()> {
    if h.universe() != group.order() {
        return Err(Error::InvalidArgument(format!(
            "subgroup of a group of order {} used with a group of order {}",
            h.universe(),
            group.order()
        )));
    }
    Ok(())
}

pub fn is_normal(group: &FiniteGroup, h: &SubgroupSet) -> Result<bool> {
    check_fits(group, h)?;
    Ok(group
        .elements()
        .all(|g| h.iter().all(|x| h.contains(group.conjugate(g, x)))))
}

pub fn all_normal_subgroups(group: &FiniteGroup, caps: &Caps) -> Result<Vec<SubgroupSet>> {
    let all = all_subgroups(group, caps)?;
    Ok(all
        .into_iter()
        .filter(|h| is_normal(group, h).expect("enumerated subgroups fit"))
        .collect())
}

pub fn normalizer(group: &FiniteGroup, h: &SubgroupSet) -> Result<SubgroupSet> {
    check_fits(group, h)?;
    let members = ElementSet::from_indices(
        group.order(),
        group
            .elements()
            .filter(|&g| h.iter().all(|x| h.contains(group.conjugate(g, x)))),
    );
    Ok(SubgroupSet::trusted(members))
}

/// The smallest normal subgroup containing `seed`.
pub fn normal_closure(group: &FiniteGroup, seed: &[usize]) -> Result<SubgroupSet> {
    let mut conjugates: Vec<usize> = Vec::new();
    for &x in seed {
        if x >= group.order() {
            return Err(Error::InvalidArgument(format!(
                "element index {x} out of range"
            )));
        }
        for g in group.elements() {
            conjugates.push(group.conjugate(g, x));
        }
    }
    conjugates.sort_unstable();
    conjugates.dedup();
    subgroup_generated(group, &conjugates)
}

pub fn centralizes(group: &FiniteGroup, x: usize, set: &ElementSet) -> bool {
    set.iter().all(|y| group.mul(x, y) == group.mul(y, x))
}

pub fn center(group: &FiniteGroup) -> SubgroupSet {
    let all = ElementSet::full(group.order());
    SubgroupSet::trusted(ElementSet::from_indices(
        group.order(),
        group.elements().filter(|&x| centralizes(group, x, &all)),
    ))
}

pub fn commutator_subgroup(group: &FiniteGroup) -> SubgroupSet {
    let mut comms: Vec<usize> = Vec::new();
    for x in group.elements() {
        for y in group.elements() {
            comms.push(group.commutator(x, y));
        }
    }
    comms.sort_unstable();
    comms.dedup();
    SubgroupSet::trusted(close(group, &comms))
}

/// The set `{ab : a in A, b in B}`.
pub fn product_set(group: &FiniteGroup, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(group.order());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(group.mul(x, y));
        }
    }
    out
}

/// The upper central series `{e} = Z_0 < Z_1 < ...`, each term the
/// preimage of the center of the quotient by the previous one. Stops when
/// the series reaches the group or stabilizes below it.
pub fn upper_central_series(group: &FiniteGroup) -> Vec<SubgroupSet> {
    let mut series = vec![SubgroupSet::trivial(group)];
    loop {
        let last = series.last().expect("series is non-empty");
        if last.size() == group.order() {
            return series;
        }
        let (q, proj) = quotient(group, last).expect("central series terms are normal");
        let zq = center(&q);
        let next = SubgroupSet::trusted(ElementSet::from_indices(
            group.order(),
            group.elements().filter(|&x| zq.contains(proj.apply(x))),
        ));
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

/// `Some(class)` for nilpotent groups (the trivial group has class 0),
/// `None` otherwise.
pub fn nilpotency_class(group: &FiniteGroup) -> Option<usize> {
    let series = upper_central_series(group);
    let top = series.last().expect("series is non-empty");
    (top.size() == group.order()).then(|| series.len() - 1)
}
