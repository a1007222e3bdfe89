use crate::bitset::ElementSet;
use crate::error::{Error, Result};

use super::{is_normal, FiniteGroup, SubgroupSet};

#[derive(Clone, Debug)]
pub struct GroupHomomorphism {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<usize>,
}

impl GroupHomomorphism {
    /// Checks `map[xy] = map[x] map[y]` for all pairs.
    pub fn new(source: FiniteGroup, target: FiniteGroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::InvalidArgument(format!(
                "map has {} entries for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.order()) {
            return Err(Error::InvalidArgument(format!("image {bad} out of range")));
        }
        if map[source.identity()] != target.identity() {
            return Err(Error::InvalidArgument(
                "identity is not mapped to identity".into(),
            ));
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(Error::InvalidArgument(format!(
                        "map is not multiplicative at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(GroupHomomorphism {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image_of(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.target.order(), set.iter().map(|x| self.map[x]))
    }

    pub fn preimage_of(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.source.order(),
            self.source
                .elements()
                .filter(|&x| set.contains(self.map[x])),
        )
    }

    pub fn kernel(&self) -> SubgroupSet {
        let e = ElementSet::singleton(self.target.order(), self.target.identity());
        SubgroupSet::trusted(self.preimage_of(&e))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }
}

/// The quotient `G/N` with its projection. Cosets are numbered in the
/// order of their least element index, which also serves as representative.
pub fn quotient(group: &FiniteGroup, n: &SubgroupSet) -> Result<(FiniteGroup, GroupHomomorphism)> {
    if !is_normal(group, n)? {
        return Err(Error::InvalidArgument(
            "quotient by a non-normal subgroup".into(),
        ));
    }
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut reps = Vec::new();
    for x in group.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for k in n.iter() {
            coset_of[group.mul(x, k)] = id;
        }
    }
    let names = reps
        .iter()
        .map(|&r| format!("{}N", group.name(r)))
        .collect();
    let q = FiniteGroup::from_fn(reps.len(), Some(names), None, |a, b| {
        coset_of[group.mul(reps[a], reps[b])]
    })?;
    let proj = GroupHomomorphism {
        source: group.clone(),
        target: q.clone(),
        map: coset_of,
    };
    Ok((q, proj))
}

/// The subgroup `H` as a group in its own right, with the inclusion into
/// the parent. Elements keep the parent's index order.
pub fn subgroup_as_group(
    group: &FiniteGroup,
    h: &SubgroupSet,
) -> Result<(FiniteGroup, GroupHomomorphism)> {
    if h.universe() != group.order() {
        return Err(Error::InvalidArgument(
            "subgroup belongs to another group".into(),
        ));
    }
    let elems = h.to_vec();
    let mut local = vec![usize::MAX; group.order()];
    for (i, &x) in elems.iter().enumerate() {
        local[x] = i;
    }
    let names = elems.iter().map(|&x| group.name(x)).collect();
    let sub = FiniteGroup::from_fn(elems.len(), Some(names), None, |a, b| {
        local[group.mul(elems[a], elems[b])]
    })?;
    let inclusion = GroupHomomorphism {
        source: sub.clone(),
        target: group.clone(),
        map: elems,
    };
    Ok((sub, inclusion))
}
