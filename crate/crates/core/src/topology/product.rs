//! Topologies on a direct product `H × F` as products of topologies on
//! the factors.
//!
//! When the exponent of `H` is a prime `p` not dividing `|F|`, every
//! kernel `K` splits as `(K ∩ H) × (K ∩ F)`: for `(x, y) ∈ K`, the power
//! `(x, y)^|F| = (x^|F|, e)` lies in `K`, and since `|F|` is prime to the
//! order of `x` a further power recovers `(x, e)`. The same with `p`
//! recovers `(e, y)`. Without coprimality a kernel may be a "diagonal"
//! that meets both factors trivially.

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{gcd, is_prime, FiniteGroup, SubgroupSet};
use crate::lattice::{are_isomorphic, product_lattice};
use crate::report::{CheckReport, Tally, Violation};

use super::{GroupTopology, TopologyLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionRoute {
    /// Factor components recovered by coprime powers.
    CoprimePower,
    /// Components read off directly, no coprimality available.
    Direct,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub tau_h: GroupTopology,
    pub tau_f: GroupTopology,
    pub route: DecompositionRoute,
}

#[derive(Clone, Debug)]
pub enum ProductOutcome {
    Product(Decomposition),
    /// `witness` lies in the kernel but not in `(K ∩ H) × (K ∩ F)`.
    NonProduct {
        witness: usize,
    },
}

impl ProductOutcome {
    pub fn is_product(&self) -> bool {
        matches!(self, ProductOutcome::Product(_))
    }
}

struct Factors<'a> {
    h: &'a FiniteGroup,
    f: &'a FiniteGroup,
}

impl Factors<'_> {
    fn pair(&self, x: usize, y: usize) -> usize {
        x * self.f.order() + y
    }

    fn split(&self, k: usize) -> (usize, usize) {
        (k / self.f.order(), k % self.f.order())
    }

    /// `(N1, N2)` with `N1 × {e} = K ∩ H` and `{e} × N2 = K ∩ F`.
    fn components(&self, kernel: &ElementSet) -> (ElementSet, ElementSet) {
        let (eh, ef) = (self.h.identity(), self.f.identity());
        let n1 = ElementSet::from_indices(
            self.h.order(),
            self.h
                .elements()
                .filter(|&x| kernel.contains(self.pair(x, ef))),
        );
        let n2 = ElementSet::from_indices(
            self.f.order(),
            self.f
                .elements()
                .filter(|&y| kernel.contains(self.pair(eh, y))),
        );
        (n1, n2)
    }

    fn product_set(&self, n1: &ElementSet, n2: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.h.order() * self.f.order());
        for x in n1.iter() {
            for y in n2.iter() {
                out.insert(self.pair(x, y));
            }
        }
        out
    }
}

fn factors_of(g: &FiniteGroup) -> Result<Factors<'_>> {
    let (h, f) = g
        .factors()
        .ok_or_else(|| Error::InvalidArgument("group was not built as a direct product".into()))?;
    Ok(Factors { h, f })
}

/// Whether `H × F` satisfies the coprime hypothesis: `exp(H)` is a prime
/// not dividing `|F|`.
pub fn coprime_hypothesis(g: &FiniteGroup) -> Result<bool> {
    let fs = factors_of(g)?;
    let p = fs.h.exponent();
    Ok(is_prime(p) && gcd(p, fs.f.order()) == 1)
}

/// Splits `τ` on `G = H × F` into topologies on the factors, or returns an
/// element of the kernel that no product kernel can account for.
pub fn decompose_product_topology(g: &FiniteGroup, tau: &GroupTopology) -> Result<ProductOutcome> {
    let fs = factors_of(g)?;
    if !tau.group().same_as(g) {
        return Err(Error::InvalidArgument(
            "topology lives on another group".into(),
        ));
    }
    let kernel = tau.kernel().members();
    let (eh, ef) = (fs.h.identity(), fs.f.identity());
    let m = fs.f.order();
    let p = fs.h.exponent();
    let route = if coprime_hypothesis(g)? {
        DecompositionRoute::CoprimePower
    } else {
        DecompositionRoute::Direct
    };

    if route == DecompositionRoute::CoprimePower {
        for k in kernel.iter() {
            let (x, y) = fs.split(k);
            let w = g.pow(k, m);
            let hx = g.pow(w, fs.h.coprime_witness(x, m)?);
            let v = g.pow(k, p);
            let fy = g.pow(v, fs.f.coprime_witness(y, p)?);
            if hx != fs.pair(x, ef)
                || fy != fs.pair(eh, y)
                || !kernel.contains(hx)
                || !kernel.contains(fy)
            {
                return Ok(ProductOutcome::NonProduct { witness: k });
            }
        }
    }

    let (n1, n2) = fs.components(kernel);
    let split = fs.product_set(&n1, &n2);
    if let Some(w) = kernel.difference(&split).first() {
        return Ok(ProductOutcome::NonProduct { witness: w });
    }
    if route == DecompositionRoute::CoprimePower {
        // {g : g^p ∈ K} must be H × N2: p-th powers kill H and are
        // invertible on F.
        let pre = ElementSet::from_indices(
            g.order(),
            g.elements().filter(|&x| kernel.contains(g.pow(x, p))),
        );
        let expected = fs.product_set(&ElementSet::full(fs.h.order()), &n2);
        let diff = pre.difference(&expected).union(&expected.difference(&pre));
        if let Some(w) = diff.first() {
            return Ok(ProductOutcome::NonProduct { witness: w });
        }
    }
    let tau_h = GroupTopology::new(fs.h, SubgroupSet::new(fs.h, n1)?)?;
    let tau_f = GroupTopology::new(fs.f, SubgroupSet::new(fs.f, n2)?)?;
    Ok(ProductOutcome::Product(Decomposition {
        tau_h,
        tau_f,
        route,
    }))
}

/// Decomposes every topology on `H × F`, checks that `K ↦ (K ∩ H, K ∩ F)`
/// is an isomorphism `L_G → L_H × L_F`, confirms the isomorphism by
/// search, and checks modularity of `L_G`. Non-product topologies are
/// violations only under the coprime hypothesis.
pub fn verify_product_theorem(g: &FiniteGroup, caps: &Caps) -> Result<CheckReport> {
    let fs = factors_of(g)?;
    let coprime = coprime_hypothesis(g)?;
    let l = TopologyLattice::new(g, caps)?;
    let lh = TopologyLattice::new(fs.h, caps)?;
    let lf = TopologyLattice::new(fs.f, caps)?;
    let mut t = Tally::default();

    let mut pairs = Vec::with_capacity(l.len());
    for i in 0..l.len() {
        let outcome = decompose_product_topology(g, &l.topology(i))?;
        let kernel = l.kernel(i).members();
        match outcome {
            ProductOutcome::Product(d) => {
                t.case();
                let a = lh
                    .index_of(d.tau_h.kernel().members())
                    .expect("normal in H");
                let b = lf
                    .index_of(d.tau_f.kernel().members())
                    .expect("normal in F");
                pairs.push(Some(a * lf.len() + b));
            }
            ProductOutcome::NonProduct { witness } => {
                let w = ElementSet::singleton(g.order(), witness);
                t.check(!coprime, || {
                    Violation::new("topology is not a product topology", &[kernel, &w])
                });
                pairs.push(None);
            }
        }
    }

    let prod = product_lattice(lh.lattice(), lf.lattice())?;
    if pairs.iter().all(Option::is_some) {
        let map: Vec<usize> = pairs.into_iter().flatten().collect();
        let mut hit = ElementSet::empty(prod.size());
        let bijective = map.iter().all(|&y| hit.insert(y)) && hit.len() == prod.size();
        let order_iso = (0..l.len())
            .all(|a| (0..l.len()).all(|b| l.lattice().leq(a, b) == prod.leq(map[a], map[b])));
        t.check(bijective && order_iso, || {
            Violation::new("K ↦ (K ∩ H, K ∩ F) is not a lattice isomorphism", &[])
        });
    }
    let iso = are_isomorphic(l.lattice(), &prod, caps.isomorphism_size)?.is_some();
    t.check(iso || !coprime, || {
        Violation::new("L_G is not isomorphic to L_H × L_F", &[])
    });
    let modular = l.lattice().is_modular();
    t.check(modular || !coprime, || {
        Violation::new("L_G is not modular", &[])
    });
    Ok(t.into_report("product-decomposition", g.order()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        direct_product, make_cyclic, make_dihedral, make_elementary_abelian, make_heisenberg,
        make_quaternion,
    };

    #[test]
    fn coprime_products_decompose() {
        let g = direct_product(&make_cyclic(3).unwrap(), &make_quaternion().unwrap()).unwrap();
        assert!(coprime_hypothesis(&g).unwrap());
        let l = TopologyLattice::new(&g, &Caps::default()).unwrap();
        for i in 0..l.len() {
            match decompose_product_topology(&g, &l.topology(i)).unwrap() {
                ProductOutcome::Product(d) => {
                    assert_eq!(d.route, DecompositionRoute::CoprimePower);
                    assert_eq!(
                        d.tau_h.kernel().size() * d.tau_f.kernel().size(),
                        l.kernel(i).size()
                    );
                }
                other => panic!("{other:?}"),
            }
        }
        let r = verify_product_theorem(&g, &Caps::default()).unwrap();
        assert!(r.passed, "{r:#?}");
    }

    #[test]
    fn heisenberg_factor() {
        let g = direct_product(&make_cyclic(3).unwrap(), &make_heisenberg(2).unwrap()).unwrap();
        assert!(verify_product_theorem(&g, &Caps::default()).unwrap().passed);
    }

    #[test]
    fn klein_diagonal_is_not_a_product() {
        let z2 = make_cyclic(2).unwrap();
        let g = direct_product(&z2, &z2).unwrap();
        assert!(!coprime_hypothesis(&g).unwrap());
        let diag = GroupTopology::new(&g, SubgroupSet::from_indices(&g, &[0, 3]).unwrap()).unwrap();
        match decompose_product_topology(&g, &diag).unwrap() {
            ProductOutcome::NonProduct { witness } => assert_eq!(witness, 3),
            other => panic!("{other:?}"),
        }
        // The two axes do split.
        let axis = GroupTopology::new(&g, SubgroupSet::from_indices(&g, &[0, 1]).unwrap()).unwrap();
        let d = decompose_product_topology(&g, &axis).unwrap();
        assert!(d.is_product());
        // Reported, but not a violation, since the hypothesis does not hold.
        let r = verify_product_theorem(&g, &Caps::default()).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn unmarked_group_is_rejected() {
        let g = make_elementary_abelian(2, 2).unwrap();
        let t = GroupTopology::discrete(&g);
        assert!(matches!(
            decompose_product_topology(&g, &t),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn non_prime_exponent_uses_direct_route() {
        let g = direct_product(&make_cyclic(4).unwrap(), &make_cyclic(3).unwrap()).unwrap();
        assert!(!coprime_hypothesis(&g).unwrap());
        let l = TopologyLattice::new(&g, &Caps::default()).unwrap();
        for i in 0..l.len() {
            // Coprime orders force a split even without a prime exponent.
            assert!(decompose_product_topology(&g, &l.topology(i))
                .unwrap()
                .is_product());
        }
        let d4 = make_dihedral(4).unwrap();
        let g = direct_product(&make_cyclic(2).unwrap(), &d4).unwrap();
        let l = TopologyLattice::new(&g, &Caps::default()).unwrap();
        let splits = (0..l.len())
            .filter(|&i| {
                decompose_product_topology(&g, &l.topology(i))
                    .unwrap()
                    .is_product()
            })
            .count();
        assert!(splits < l.len());
    }
}
