//! Checking a family of identity neighbourhoods against the axioms of a
//! neighbourhood basis for a group topology, and building the topology.
//!
//! The six conditions on a family `B` of subsets containing `e`:
//!
//! 1. each `U` contains some `VV` with `V ∈ B`;
//! 2. each `U` contains some `V⁻¹`;
//! 3. for `x ∈ U`, some `xV ⊆ U`;
//! 4. for `x ∈ G`, some `xVx⁻¹ ⊆ U`;
//! 5. any `U ∩ V` contains some `W ∈ B`;
//! 6. `⋂B = {e}` (Hausdorff).

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{
    all_subgroups, is_normal, normalizer, parse_group, FiniteGroup, GroupJson, SubgroupSet,
};
use crate::report::{CheckReport, Tally, Violation};
use crate::topology::GroupTopology;

#[derive(Clone, Debug)]
pub struct NeighborhoodFamily {
    group: FiniteGroup,
    sets: Vec<ElementSet>,
}

impl NeighborhoodFamily {
    pub fn new(group: &FiniteGroup, sets: Vec<ElementSet>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidArgument("empty neighbourhood family".into()));
        }
        for (i, s) in sets.iter().enumerate() {
            if s.universe() != group.order() {
                return Err(Error::InvalidArgument(format!(
                    "set {i} belongs to another group"
                )));
            }
            if !s.contains(group.identity()) {
                return Err(Error::InvalidArgument(format!(
                    "set {i} does not contain the identity"
                )));
            }
        }
        Ok(NeighborhoodFamily {
            group: group.clone(),
            sets,
        })
    }

    pub fn from_indices(group: &FiniteGroup, sets: &[Vec<usize>]) -> Result<Self> {
        let n = group.order();
        let mut out = Vec::with_capacity(sets.len());
        for s in sets {
            if let Some(&x) = s.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidArgument(format!(
                    "element index {x} out of range"
                )));
            }
            out.push(ElementSet::from_indices(n, s.iter().copied()));
        }
        Self::new(group, out)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn intersection(&self) -> ElementSet {
        self.sets
            .iter()
            .fold(ElementSet::full(self.group.order()), |acc, s| {
                acc.intersection(s)
            })
    }
}

/// Where a condition fails: the family position of `U` (and of `V` for
/// condition 5), and the element `x` for conditions 3 and 4.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionWitness {
    pub set: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub other: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ConditionWitness>,
}

impl Condition {
    fn from(witness: Option<ConditionWitness>) -> Self {
        Condition {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Results for the six conditions, in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub products: Condition,
    pub inverses: Condition,
    pub translates: Condition,
    pub conjugates: Condition,
    pub intersections: Condition,
    pub hausdorff: Condition,
}

impl ConditionReport {
    /// Conditions 1 to 5, those for a neighbourhood basis.
    pub fn is_basis(&self) -> bool {
        [
            &self.products,
            &self.inverses,
            &self.translates,
            &self.conjugates,
            &self.intersections,
        ]
        .iter()
        .all(|c| c.holds)
    }

    pub fn as_array(&self) -> [&Condition; 6] {
        [
            &self.products,
            &self.inverses,
            &self.translates,
            &self.conjugates,
            &self.intersections,
            &self.hausdorff,
        ]
    }
}

fn image(n: usize, set: &ElementSet, f: impl Fn(usize) -> usize) -> ElementSet {
    ElementSet::from_indices(n, set.iter().map(f))
}

/// Evaluates all six conditions; witnesses are the least failing indices.
pub fn check_conditions(b: &NeighborhoodFamily) -> ConditionReport {
    let g = &b.group;
    let n = g.order();
    let sets = &b.sets;
    let squares: Vec<ElementSet> = sets
        .iter()
        .map(|v| crate::group::product_set(g, v, v))
        .collect();
    let inverses: Vec<ElementSet> = sets.iter().map(|v| image(n, v, |y| g.inv(y))).collect();
    let some = |pred: &dyn Fn(usize) -> bool| (0..sets.len()).any(pred);

    let products = (0..sets.len())
        .find(|&u| !some(&|v| squares[v].is_subset(&sets[u])))
        .map(|u| ConditionWitness {
            set: u,
            other: None,
            x: None,
        });
    let inv = (0..sets.len())
        .find(|&u| !some(&|v| inverses[v].is_subset(&sets[u])))
        .map(|u| ConditionWitness {
            set: u,
            other: None,
            x: None,
        });
    let translates = (0..sets.len()).find_map(|u| {
        sets[u]
            .iter()
            .find(|&x| !some(&|v| sets[v].iter().all(|y| sets[u].contains(g.mul(x, y)))))
            .map(|x| ConditionWitness {
                set: u,
                other: None,
                x: Some(x),
            })
    });
    let conjugates = (0..sets.len()).find_map(|u| {
        g.elements()
            .find(|&x| !some(&|v| sets[v].iter().all(|y| sets[u].contains(g.conjugate(x, y)))))
            .map(|x| ConditionWitness {
                set: u,
                other: None,
                x: Some(x),
            })
    });
    let intersections = (0..sets.len()).find_map(|u| {
        (0..sets.len())
            .find(|&v| {
                let meet = sets[u].intersection(&sets[v]);
                !some(&|w| sets[w].is_subset(&meet))
            })
            .map(|v| ConditionWitness {
                set: u,
                other: Some(v),
                x: None,
            })
    });
    let common = b.intersection();
    let hausdorff = common
        .iter()
        .find(|&x| x != g.identity())
        .map(|x| ConditionWitness {
            set: 0,
            other: None,
            x: Some(x),
        });
    ConditionReport {
        products: Condition::from(products),
        inverses: Condition::from(inv),
        translates: Condition::from(translates),
        conjugates: Condition::from(conjugates),
        intersections: Condition::from(intersections),
        hausdorff: Condition::from(hausdorff),
    }
}

/// The topology with neighbourhood basis `B`. Its kernel is `⋂B`, which
/// conditions 1 to 4 force to be a normal subgroup; that is checked, not
/// assumed.
pub fn generate_topology(b: &NeighborhoodFamily) -> Result<GroupTopology> {
    let report = check_conditions(b);
    if !report.is_basis() {
        return Err(Error::Precondition(format!(
            "family is not a neighbourhood basis: {}",
            serde_json::to_string(&report)?
        )));
    }
    let common = b.intersection();
    let kernel = SubgroupSet::new(&b.group, common.clone()).map_err(|_| {
        Error::Precondition(format!(
            "intersection {common:?} of a basis is not a subgroup"
        ))
    })?;
    if !is_normal(&b.group, &kernel)? {
        return Err(Error::Precondition(format!(
            "intersection {common:?} of a basis is not normal"
        )));
    }
    GroupTopology::new(&b.group, kernel)
}

/// A group given by notation (`"D 4"`) or as an inline table.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Notation(String),
    Table(GroupJson),
}

impl GroupRef {
    pub fn resolve(self, caps: &Caps) -> Result<FiniteGroup> {
        match self {
            GroupRef::Notation(s) => parse_group(&s),
            GroupRef::Table(t) => t.into_group_with(caps),
        }
    }
}

/// `{"group": ..., "sets": [[indices], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyJson {
    pub group: GroupRef,
    pub sets: Vec<Vec<usize>>,
}

impl FamilyJson {
    pub fn parse(text: &str, caps: &Caps) -> Result<NeighborhoodFamily> {
        let raw: FamilyJson = serde_json::from_str(text)?;
        let group = raw.group.resolve(caps)?;
        NeighborhoodFamily::from_indices(&group, &raw.sets)
    }
}

/// For every subgroup `H`, the one-set family `{H}`: when `H` is normal it
/// must be a basis regenerating kernel `H`, Hausdorff exactly when `H` is
/// trivial; otherwise the conjugation condition must fail at an element
/// outside the normalizer.
pub fn verify_roundtrip(g: &FiniteGroup, caps: &Caps) -> Result<CheckReport> {
    let mut t = Tally::default();
    for h in all_subgroups(g, caps)? {
        let family = NeighborhoodFamily::new(g, vec![h.members().clone()])?;
        let report = check_conditions(&family);
        let m = h.members();
        if is_normal(g, &h)? {
            let ok = report.is_basis()
                && generate_topology(&family)
                    .map(|t| t.kernel() == &h)
                    .unwrap_or(false)
                && report.hausdorff.holds == h.is_trivial();
            t.check(ok, || {
                Violation::new("normal subgroup does not round-trip", &[m])
            });
        } else {
            let nh = normalizer(g, &h)?;
            let ok = !report.conjugates.holds
                && report
                    .conjugates
                    .witness
                    .as_ref()
                    .and_then(|w| w.x)
                    .is_some_and(|x| !nh.contains(x));
            t.check(ok, || {
                Violation::new("non-normal subgroup passes the conjugation condition", &[m])
            });
        }
    }
    Ok(t.into_report("pontryagin-roundtrip", g.order()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, make_dihedral, make_quaternion, make_symmetric};

    fn family(g: &FiniteGroup, sets: &[&[usize]]) -> NeighborhoodFamily {
        let sets: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        NeighborhoodFamily::from_indices(g, &sets).unwrap()
    }

    #[test]
    fn identity_family_is_discrete() {
        let g = make_symmetric(3).unwrap();
        let b = family(&g, &[&[0]]);
        let r = check_conditions(&b);
        assert!(r.as_array().iter().all(|c| c.holds));
        assert!(generate_topology(&b).unwrap().is_discrete());
    }

    #[test]
    fn whole_group_is_anti_discrete() {
        let g = make_quaternion().unwrap();
        let b = NeighborhoodFamily::new(&g, vec![ElementSet::full(8)]).unwrap();
        let t = generate_topology(&b).unwrap();
        assert!(t.is_anti_discrete());
        assert!(!check_conditions(&b).hausdorff.holds);
    }

    #[test]
    fn non_normal_subgroup_fails_conjugation() {
        let g = make_symmetric(3).unwrap();
        let h = all_subgroups(&g, &Caps::default())
            .unwrap()
            .into_iter()
            .find(|h| h.size() == 2)
            .unwrap();
        let b = NeighborhoodFamily::new(&g, vec![h.members().clone()]).unwrap();
        let r = check_conditions(&b);
        assert!(
            r.products.holds && r.inverses.holds && r.translates.holds && r.intersections.holds
        );
        let x = r.conjugates.witness.as_ref().unwrap().x.unwrap();
        assert!(!normalizer(&g, &h).unwrap().contains(x));
        assert!(matches!(generate_topology(&b), Err(Error::Precondition(_))));
    }

    #[test]
    fn non_subgroup_fails_products() {
        let g = make_cyclic(3).unwrap();
        let b = family(&g, &[&[0, 1]]);
        let r = check_conditions(&b);
        assert!(!r.products.holds);
        assert_eq!(r.products.witness.as_ref().unwrap().set, 0);
        // {0,1}⁻¹ = {0,2}
        assert!(!r.inverses.holds);
        assert!(!r.translates.holds);
    }

    #[test]
    fn alternating_subgroup_family() {
        let g = make_symmetric(3).unwrap();
        let l = crate::topology::topology_lattice(&g, &Caps::default()).unwrap();
        let a3 = l.kernel(1).to_vec();
        let b = NeighborhoodFamily::from_indices(&g, &[a3.clone(), (0..6).collect()]).unwrap();
        assert_eq!(generate_topology(&b).unwrap().kernel().to_vec(), a3);
    }

    #[test]
    fn intersection_condition_reports_pair() {
        // Two lines in Z2 x Z2 without their intersection {e} in the family.
        let g = crate::group::make_elementary_abelian(2, 2).unwrap();
        let b = family(&g, &[&[0, 1], &[0, 2]]);
        let r = check_conditions(&b);
        assert_eq!(
            r.intersections.witness,
            Some(ConditionWitness {
                set: 0,
                other: Some(1),
                x: None
            })
        );
    }

    #[test]
    fn rejects_sets_without_identity() {
        let g = make_cyclic(4).unwrap();
        assert!(NeighborhoodFamily::from_indices(&g, &[vec![1, 2]]).is_err());
        assert!(NeighborhoodFamily::from_indices(&g, &[]).is_err());
        assert!(NeighborhoodFamily::from_indices(&g, &[vec![0, 9]]).is_err());
    }

    #[test]
    fn json_family() {
        let b =
            FamilyJson::parse(r#"{"group": "Z 4", "sets": [[0, 2]]}"#, &Caps::default()).unwrap();
        assert_eq!(generate_topology(&b).unwrap().kernel().to_vec(), vec![0, 2]);
        let inline = r#"{"group": {"order": 2, "table": [[0,1],[1,0]]}, "sets": [[0]]}"#;
        let b = FamilyJson::parse(inline, &Caps::default()).unwrap();
        assert!(generate_topology(&b).unwrap().is_discrete());
    }

    #[test]
    fn roundtrip_small_groups() {
        for g in [
            make_symmetric(3).unwrap(),
            make_dihedral(4).unwrap(),
            make_quaternion().unwrap(),
        ] {
            let r = verify_roundtrip(&g, &Caps::default()).unwrap();
            assert!(r.passed, "{r:#?}");
        }
    }
}
