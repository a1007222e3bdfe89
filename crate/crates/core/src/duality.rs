//! Characters of finite abelian groups and the correspondence between
//! subgroups of the dual and group topologies.
//!
//! Characters take values in `Z(E)`, `E` the exponent of the group. Every
//! homomorphism into the circle from a group of exponent `E` lands in the
//! `E`-torsion of the circle, so this loses nothing.

use std::collections::HashMap;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{all_subgroups, product_set, FiniteGroup, SubgroupSet};
use crate::report::{CheckReport, Tally, Violation};
use crate::topology::TopologyLattice;

/// `G = ⟨g_1⟩ × ... × ⟨g_r⟩` with generator orders non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicDecomposition {
    pub generators: Vec<usize>,
    pub orders: Vec<usize>,
    /// Exponent vector of every element with respect to the generators.
    pub coordinates: Vec<Vec<usize>>,
}

/// Splits off a cyclic factor of largest order modulo what has been split
/// off so far, lifting it to an element of the same order.
pub fn cyclic_decomposition(g: &FiniteGroup) -> Result<CyclicDecomposition> {
    if !g.is_abelian() {
        return Err(Error::InvalidArgument(
            "cyclic decomposition of a non-abelian group".into(),
        ));
    }
    let n = g.order();
    let orders_in_g = g.element_orders();
    let mut span = ElementSet::singleton(n, g.identity());
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    while span.len() < n {
        // order of x modulo the current span
        let rel_order = |x: usize| {
            let mut y = x;
            let mut d = 1;
            while !span.contains(y) {
                y = g.mul(y, x);
                d += 1;
            }
            d
        };
        let (y, d) = g
            .elements()
            .map(|x| (x, rel_order(x)))
            .max_by_key(|&(x, d)| (d, std::cmp::Reverse(x)))
            .expect("group is non-empty");
        let z = span
            .iter()
            .map(|s| g.mul(y, s))
            .filter(|&z| orders_in_g[z] == d)
            .min()
            .ok_or_else(|| {
                Error::Precondition(format!("no lift of order {d} in the coset of {y}"))
            })?;
        span = product_set(g, &span, &cyclic(g, z));
        generators.push(z);
        orders.push(d);
    }

    let mut coordinates = vec![Vec::new(); n];
    let mut seen = 0;
    let total: usize = orders.iter().product();
    for code in 0..total {
        let mut rest = code;
        let mut exps = vec![0; orders.len()];
        for i in (0..orders.len()).rev() {
            exps[i] = rest % orders[i];
            rest /= orders[i];
        }
        let x = generators
            .iter()
            .zip(&exps)
            .fold(g.identity(), |acc, (&gen, &e)| g.mul(acc, g.pow(gen, e)));
        if coordinates[x].is_empty() {
            seen += 1;
        }
        coordinates[x] = exps;
    }
    if seen != n || total != n {
        return Err(Error::Precondition(
            "generators do not give a direct decomposition".into(),
        ));
    }
    Ok(CyclicDecomposition {
        generators,
        orders,
        coordinates,
    })
}

fn cyclic(g: &FiniteGroup, x: usize) -> ElementSet {
    let mut out = ElementSet::singleton(g.order(), g.identity());
    let mut y = x;
    while out.insert(y) {
        y = g.mul(y, x);
    }
    out
}

/// A homomorphism into `Z(modulus)`, as its value table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Character {
    pub modulus: usize,
    pub values: Vec<usize>,
}

impl Character {
    pub fn kernel(&self) -> ElementSet {
        ElementSet::from_indices(
            self.values.len(),
            (0..self.values.len()).filter(|&x| self.values[x] == 0),
        )
    }

    pub fn is_homomorphism(&self, g: &FiniteGroup) -> bool {
        self.values[g.identity()] == 0
            && g.elements().all(|x| {
                g.elements().all(|y| {
                    self.values[g.mul(x, y)] == (self.values[x] + self.values[y]) % self.modulus
                })
            })
    }
}

/// The dual group: all characters under pointwise addition. Character `i`
/// is element `i` of `group`; index 0 is the trivial character.
#[derive(Clone, Debug)]
pub struct DualGroup {
    pub source: FiniteGroup,
    pub decomposition: CyclicDecomposition,
    pub characters: Vec<Character>,
    pub group: FiniteGroup,
}

pub fn dual_group(g: &FiniteGroup) -> Result<DualGroup> {
    let dec = cyclic_decomposition(g)?;
    let modulus = g.exponent();
    let n = g.order();
    let mut characters = Vec::with_capacity(n);
    // characters by their values c_i on the generators, in mixed radix
    // order with c_1 most significant; c_i is a multiple of E / d_i
    for code in 0..n {
        let mut rest = code;
        let mut c = vec![0; dec.orders.len()];
        for i in (0..dec.orders.len()).rev() {
            c[i] = rest % dec.orders[i] * (modulus / dec.orders[i]);
            rest /= dec.orders[i];
        }
        let values = (0..n)
            .map(|x| {
                dec.coordinates[x]
                    .iter()
                    .zip(&c)
                    .map(|(a, ci)| a * ci)
                    .sum::<usize>()
                    % modulus
            })
            .collect();
        let chi = Character { modulus, values };
        if !chi.is_homomorphism(g) {
            return Err(Error::Precondition(format!(
                "character {code} is not a homomorphism"
            )));
        }
        characters.push(chi);
    }
    let position: HashMap<&[usize], usize> = characters
        .iter()
        .enumerate()
        .map(|(i, c)| (c.values.as_slice(), i))
        .collect();
    if position.len() != n {
        return Err(Error::Precondition("characters are not distinct".into()));
    }
    let names = (0..n).map(|i| format!("χ{i}")).collect();
    let table: Vec<usize> = (0..n * n)
        .map(|ij| {
            let (a, b) = (&characters[ij / n], &characters[ij % n]);
            let sum: Vec<usize> = (0..n)
                .map(|x| (a.values[x] + b.values[x]) % modulus)
                .collect();
            position[sum.as_slice()]
        })
        .collect();
    let group = FiniteGroup::from_fn(n, Some(names), None, |a, b| table[a * n + b])?;
    Ok(DualGroup {
        source: g.clone(),
        decomposition: dec,
        characters,
        group,
    })
}

impl DualGroup {
    /// `{x ∈ G : χ(x) = 0 for all χ ∈ H}`, for `H` a subgroup of the dual.
    pub fn annihilator(&self, h: &SubgroupSet) -> Result<SubgroupSet> {
        if h.universe() != self.group.order() {
            return Err(Error::InvalidArgument("not a subgroup of the dual".into()));
        }
        let members = h
            .iter()
            .fold(ElementSet::full(self.source.order()), |acc, c| {
                acc.intersection(&self.characters[c].kernel())
            });
        SubgroupSet::new(&self.source, members)
    }

    /// `{χ : χ(k) = 0 for all k ∈ K}`, for `K` a subgroup of `G`.
    pub fn dual_annihilator(&self, k: &SubgroupSet) -> Result<SubgroupSet> {
        if k.universe() != self.source.order() {
            return Err(Error::InvalidArgument(
                "not a subgroup of the source".into(),
            ));
        }
        let members = ElementSet::from_indices(
            self.group.order(),
            (0..self.characters.len())
                .filter(|&c| k.iter().all(|x| self.characters[c].values[x] == 0)),
        );
        SubgroupSet::new(&self.group, members)
    }
}

#[derive(Clone, Debug)]
pub struct ComfortRoss {
    pub dual: DualGroup,
    /// Subgroups of the dual, in canonical order.
    pub dual_subgroups: Vec<SubgroupSet>,
    /// Position in `L_G` of the topology generated by each dual subgroup.
    pub image: Vec<usize>,
    pub report: CheckReport,
}

/// Maps each subgroup `H` of the dual to the topology with kernel
/// `annihilator(H)` and checks that this is a lattice isomorphism from
/// subgroups under inclusion onto `L_G`. Also checks double annihilators.
pub fn comfort_ross_map(g: &FiniteGroup, caps: &Caps) -> Result<ComfortRoss> {
    let dual = dual_group(g)?;
    let l = TopologyLattice::new(g, caps)?;
    let lat = l.lattice();
    let subs = all_subgroups(&dual.group, caps)?;
    let mut t = Tally::default();

    let mut image = Vec::with_capacity(subs.len());
    for h in &subs {
        let ann = dual.annihilator(h)?;
        let pos = l.index_of(ann.members());
        t.check(pos.is_some(), || {
            Violation::new("annihilator is not a kernel", &[h.members()])
        });
        image.push(pos.unwrap_or(usize::MAX));
    }
    let mut hit = ElementSet::empty(l.len());
    let bijective = subs.len() == l.len() && image.iter().all(|&i| i < l.len() && hit.insert(i));
    t.check(bijective, || {
        Violation::new("map is not a bijection onto L_G", &[])
    });
    if bijective {
        let index: HashMap<&ElementSet, usize> = subs
            .iter()
            .enumerate()
            .map(|(i, h)| (h.members(), i))
            .collect();
        for (i, a) in subs.iter().enumerate() {
            for (j, b) in subs.iter().enumerate() {
                let (x, y) = (image[i], image[j]);
                let sets = [a.members(), b.members()];
                t.check(a.is_subgroup_of(b) == lat.leq(x, y), || {
                    Violation::new("inclusion not mirrored by the order of L_G", &sets)
                });
                let meet = index[&a.members().intersection(b.members())];
                t.check(image[meet] == lat.meet(x, y), || {
                    Violation::new("intersection does not map to the meet", &sets)
                });
                let join = index[&product_set(&dual.group, a.members(), b.members())];
                t.check(image[join] == lat.join(x, y), || {
                    Violation::new("subgroup sum does not map to the join", &sets)
                });
            }
        }
        t.check(image[0] == lat.bottom(), || {
            Violation::new("trivial subgroup is not sent to the bottom", &[])
        });
        let whole = subs.len() - 1;
        t.check(image[whole] == lat.top(), || {
            Violation::new("whole dual is not sent to the top", &[])
        });
    }
    for k in all_subgroups(g, caps)? {
        let back = dual.annihilator(&dual.dual_annihilator(&k)?)?;
        t.check(back == k, || {
            Violation::new("double annihilator differs", &[k.members()])
        });
    }
    Ok(ComfortRoss {
        dual,
        dual_subgroups: subs,
        image,
        report: t.into_report("comfort-ross", g.order()),
    })
}
