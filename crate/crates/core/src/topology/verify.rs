//! Exhaustive sweeps over pairs of topologies and subgroups `N`.
//!
//! Every sweep builds `L_G` once and, per `N`, the lattice of `N` (for
//! restrictions) or of `G/N` (for quotients). Per-`N` work runs in
//! parallel; tallies are merged in subgroup order.

use rayon::prelude::*;

use crate::bitset::ElementSet;
use crate::caps::Caps;
use crate::error::Result;
use crate::group::{all_subgroups, center, product_set, FiniteGroup, SubgroupSet};
use crate::lattice::are_isomorphic;
use crate::report::{CheckReport, Tally, Violation};

use super::{QuotientView, SubgroupView, TopologyLattice};

fn sweep<F>(subs: &[SubgroupSet], f: F) -> Result<Tally>
where
    F: Fn(&SubgroupSet) -> Result<Tally> + Sync + Send,
{
    let parts: Vec<Result<Tally>> = subs.par_iter().map(&f).collect();
    parts
        .into_iter()
        .try_fold(Tally::default(), |acc, t| Ok(acc.merge(t?)))
}

/// Subgroups contained in the center, in canonical order.
pub(crate) fn central_subgroups(g: &FiniteGroup, caps: &Caps) -> Result<Vec<SubgroupSet>> {
    let z = center(g);
    Ok(all_subgroups(g, caps)?
        .into_iter()
        .filter(|h| h.is_subgroup_of(&z))
        .collect())
}

/// Left cosets of `h`, labelled by their least element.
fn coset_partition(g: &FiniteGroup, h: &ElementSet) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.order()];
    for x in g.elements() {
        if label[x] == usize::MAX {
            for k in h.iter() {
                label[g.mul(x, k)] = x;
            }
        }
    }
    label
}

/// Quotient-side data of `L_G` relative to a normal `N`: `G/N`, its
/// lattice, and the position in it of `σ/N` for every `σ`.
struct QuotientSide {
    view: QuotientView,
    lattice: TopologyLattice,
    image: Vec<usize>,
}

impl QuotientSide {
    fn new(l: &TopologyLattice, n: &SubgroupSet, caps: &Caps) -> Result<Self> {
        let view = QuotientView::new(l.group(), n)?;
        let lattice = TopologyLattice::new(&view.group, caps)?;
        let image = l
            .kernels()
            .iter()
            .map(|k| {
                lattice
                    .index_of(&view.image(k.members()))
                    .expect("images of normal subgroups are normal")
            })
            .collect();
        Ok(QuotientSide {
            view,
            lattice,
            image,
        })
    }

    fn of_kernel(&self, k: &ElementSet) -> Option<usize> {
        self.lattice.index_of(&self.view.image(k))
    }
}

/// Restriction-side data: `N` as a group, its lattice, and `σ|_N` for
/// every `σ` (`None` if `ker σ ∩ N` were not normal in `N`).
struct RestrictionSide {
    lattice: TopologyLattice,
    image: Vec<Option<usize>>,
}

impl RestrictionSide {
    fn new(l: &TopologyLattice, n: &SubgroupSet, caps: &Caps) -> Result<Self> {
        let view = SubgroupView::new(l.group(), n)?;
        let lattice = TopologyLattice::new(&view.group, caps)?;
        let image = l
            .kernels()
            .iter()
            .map(|k| lattice.index_of(&view.restrict(k.members())))
            .collect();
        Ok(RestrictionSide { lattice, image })
    }
}

/// Merzon's lemma: if `σ ≤ τ` agree on `N` and on the coset space `G/N`,
/// then `σ = τ`. `N` ranges over all subgroups; for non-normal `N` the
/// quotient data is the partition of `G` into left cosets of `ker·N`.
pub fn verify_merzon(g: &FiniteGroup, caps: &Caps) -> Result<CheckReport> {
    let l = TopologyLattice::new(g, caps)?;
    let subs = all_subgroups(g, caps)?;
    let lat = l.lattice();
    let tally = sweep(&subs, |n| {
        let mut t = Tally::default();
        let parts: Vec<Vec<usize>> = l
            .kernels()
            .iter()
            .map(|k| coset_partition(g, &product_set(g, k.members(), n.members())))
            .collect();
        for a in 0..l.len() {
            for b in lat.up_set(a).iter() {
                let (ka, kb) = (l.kernel(a).members(), l.kernel(b).members());
                let same_sub = ka.intersection(n.members()) == kb.intersection(n.members());
                let same_quot = parts[a] == parts[b];
                t.check(!(same_sub && same_quot) || a == b, || {
                    Violation::new(
                        "comparable topologies agree on N and G/N but differ",
                        &[ka, kb, n.members()],
                    )
                });
            }
        }
        Ok(t)
    })?;
    Ok(tally.into_report("merzon", g.order()))
}

/// `(σ ∨ τ)|_N = σ|_N ∨ τ|_N` for every subgroup `N`.
pub fn verify_restriction_join(g: &FiniteGroup, caps: &Caps) -> Result<CheckReport> {
    let l = TopologyLattice::new(g, caps)?;
    let subs = all_subgroups(g, caps)?;
    let lat = l.lattice();
    let tally = sweep(&subs, |n| {
        let side = RestrictionSide::new(&l, n, caps)?;
        let mut t = Tally::default();
        for a in 0..l.len() {
            for b in 0..l.len() {
                let lhs = side.image[lat.join(a, b)];
                let rhs = match (side.image[a], side.image[b]) {
                    (Some(x), Some(y)) => Some(side.lattice.lattice().join(x, y)),
                    _ => None,
                };
                t.check(lhs.is_some() && lhs == rhs, || {
                    Violation::new(
                        "restriction of the join differs from the join of restrictions",
                        &[l.kernel(a).members(), l.kernel(b).members(), n.members()],
                    )
                });
            }
        }
        Ok(t)
    })?;
    Ok(tally.into_report("restriction-join", g.order()))
}

/// `(σ ∧ τ)/N = σ/N ∧ τ/N` for every normal `N`.
pub fn verify_quotient_meet(g: &FiniteGroup, caps: &Caps) -> Result<CheckReport> {
    let l = TopologyLattice::new(g, caps)?;
    let lat = l.lattice();
    let tally = sweep(l.kernels(), |n| {
        let side = QuotientSide::new(&l, n, caps)?;
        let mut t = Tally::default();
        for a in 0..l.len() {
            for b in 0..l.len() {
                let lhs = side.of_kernel(l.kernel(lat.meet(a, b)).members());
                let rhs = side.lattice.lattice().meet(side.image[a], side.image[b]);
                t.check(lhs == Some(rhs), || {
                    Violation::new(
                        "quotient of the meet differs from the meet of quotients",
                        &[l.kernel(a).members(), l.kernel(b).members(), n.members()],
                    )
                });
            }
        }
        Ok(t)
    })?;
    Ok(tally.into_report("quotient-meet", g.order()))
}

/// `(σ ∨ τ*)/N = σ/N ∨ τ/N`, where `τ*` has kernel `ker τ · N`.
pub fn verify_saturation_join(g: &FiniteGroup, caps: &Caps) -> Result<CheckReport> {
    let l = TopologyLattice::new(g, caps)?;
    let lat = l.lattice();
    let tally = sweep(l.kernels(), |n| {
        let side = QuotientSide::new(&l, n, caps)?;
        let mut t = Tally::default();
        for b in 0..l.len() {
            let star_kernel = product_set(g, l.kernel(b).members(), n.members());
            let star = l.index_of(&star_kernel);
            for a in 0..l.len() {
                let lhs = star.and_then(|s| side.of_kernel(l.kernel(lat.join(a, s)).members()));
                let rhs = side.lattice.lattice().join(side.image[a], side.image[b]);
                t.check(lhs == Some(rhs), || {
                    Violation::new(
                        "(σ ∨ τ*)/N differs from σ/N ∨ τ/N",
                        &[l.kernel(a).members(), l.kernel(b).members(), n.members()],
                    )
                });
            }
        }
        Ok(t)
    })?;
    Ok(tally.into_report("saturation-join", g.order()))
}

/// Cover transfer and the cover characterization.
///
/// For every cover `σ ≺ τ` and normal `N`: `σ/N ⪯ τ/N`. For central `N`
/// additionally `σ|_N ⪯ τ|_N`, and for all `σ ≤ τ`: `σ ≺ τ` exactly when
/// one (and never both) of
/// (a) `σ|_N = τ|_N` and `σ/N ≺ τ/N`,
/// (b) `σ|_N ≺ τ|_N` and `σ/N = τ/N`
/// holds. The same characterization with `⪯` throughout is checked too.
pub fn verify_cover_transfer(g: &FiniteGroup, caps: &Caps) -> Result<CheckReport> {
    let l = TopologyLattice::new(g, caps)?;
    let lat = l.lattice();
    let z = center(g);
    let covers: Vec<(usize, usize)> = lat.cover_pairs().collect();
    let tally = sweep(l.kernels(), |n| {
        let q = QuotientSide::new(&l, n, caps)?;
        let ql = q.lattice.lattice();
        let ker = |i: usize| l.kernel(i).members();
        let mut t = Tally::default();
        for &(lo, hi) in &covers {
            t.check(ql.covers_or_equal(q.image[lo], q.image[hi]), || {
                Violation::new(
                    "cover not preserved by the quotient",
                    &[ker(lo), ker(hi), n.members()],
                )
            });
        }
        if !n.is_subgroup_of(&z) {
            return Ok(t);
        }
        let r = RestrictionSide::new(&l, n, caps)?;
        let rl = r.lattice.lattice();
        let rest = |i: usize| r.image[i].expect("restrictions to central subgroups are normal");
        for &(lo, hi) in &covers {
            t.check(rl.covers_or_equal(rest(lo), rest(hi)), || {
                Violation::new(
                    "cover not preserved by restriction",
                    &[ker(lo), ker(hi), n.members()],
                )
            });
        }
        for s in 0..l.len() {
            for tau in lat.up_set(s).iter() {
                let (rs, rt, qs, qt) = (rest(s), rest(tau), q.image[s], q.image[tau]);
                let a = rs == rt && ql.covers(qs, qt);
                let b = rl.covers(rs, rt) && qs == qt;
                t.check(lat.covers(s, tau) == (a || b) && !(a && b), || {
                    Violation::new(
                        "cover characterization fails",
                        &[ker(s), ker(tau), n.members()],
                    )
                });
                let a = rs == rt && ql.covers_or_equal(qs, qt);
                let b = rl.covers_or_equal(rs, rt) && qs == qt;
                t.check(lat.covers_or_equal(s, tau) == (a || b), || {
                    Violation::new(
                        "weak cover characterization fails",
                        &[ker(s), ker(tau), n.members()],
                    )
                });
            }
        }
        Ok(t)
    })?;
    Ok(tally.into_report("cover-transfer", g.order()))
}

/// For central `N` and `σ/N ≤ τ/N`: the kernel of `σ ∧ τ` is exactly the
/// product set `ker τ · ker σ`.
pub fn verify_meet_basis(g: &FiniteGroup, caps: &Caps) -> Result<CheckReport> {
    let l = TopologyLattice::new(g, caps)?;
    let lat = l.lattice();
    let central = central_subgroups(g, caps)?;
    let tally = sweep(&central, |n| {
        let q = QuotientSide::new(&l, n, caps)?;
        let ql = q.lattice.lattice();
        let mut t = Tally::default();
        for s in 0..l.len() {
            for tau in 0..l.len() {
                if !ql.leq(q.image[s], q.image[tau]) {
                    continue;
                }
                let (ks, kt) = (l.kernel(s).members(), l.kernel(tau).members());
                let meet = l.kernel(lat.meet(s, tau)).members();
                t.check(*meet == product_set(g, kt, ks), || {
                    Violation::new(
                        "meet kernel is not the product of kernels",
                        &[ks, kt, n.members()],
                    )
                });
            }
        }
        Ok(t)
    })?;
    Ok(tally.into_report("meet-basis", g.order()))
}

/// For every central `N`: `L_G` is semimodular iff `L_{G/N}` is, and the
/// interval `[τ_0, τ_N]` maps isomorphically onto `L_{G/N}` by `σ ↦ σ/N`.
pub fn verify_semimodular_transfer(g: &FiniteGroup, caps: &Caps) -> Result<CheckReport> {
    let l = TopologyLattice::new(g, caps)?;
    let lat = l.lattice();
    let semimodular = lat.is_semimodular();
    let central = central_subgroups(g, caps)?;
    let tally = sweep(&central, |n| {
        let q = QuotientSide::new(&l, n, caps)?;
        let ql = q.lattice.lattice();
        let mut t = Tally::default();
        let nm = n.members();
        t.check(semimodular == ql.is_semimodular(), || {
            Violation::new("semimodularity differs between L_G and L_G/N", &[nm])
        });

        let tau_n = l.index_of(nm).expect("central subgroups are normal");
        let elems = lat.interval_elements(lat.bottom(), tau_n)?.to_vec();
        let mapped: Vec<usize> = elems.iter().map(|&x| q.image[x]).collect();
        let mut hit = ElementSet::empty(q.lattice.len());
        let injective = mapped.iter().all(|&y| hit.insert(y));
        let bijective = injective && hit.len() == q.lattice.len();
        let order_iso = (0..elems.len()).all(|i| {
            (0..elems.len()).all(|j| lat.leq(elems[i], elems[j]) == ql.leq(mapped[i], mapped[j]))
        });
        t.check(bijective && order_iso, || {
            Violation::new("σ ↦ σ/N is not an isomorphism [τ_0, τ_N] → L_G/N", &[nm])
        });
        if elems.len() <= caps.isomorphism_size {
            let (sub, _) = crate::lattice::interval(lat, lat.bottom(), tau_n)?;
            let iso = are_isomorphic(&sub, ql, caps.isomorphism_size)?.is_some();
            t.check(iso, || {
                Violation::new("interval [τ_0, τ_N] is not isomorphic to L_G/N", &[nm])
            });
        }
        Ok(t)
    })?;
    Ok(tally.into_report("semimodular-transfer", g.order()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        direct_product, make_cyclic, make_dihedral, make_elementary_abelian, make_heisenberg,
        make_quaternion, make_symmetric,
    };

    fn caps() -> Caps {
        Caps::default()
    }

    fn passes(r: CheckReport) -> CheckReport {
        assert!(r.passed, "{r:#?}");
        assert!(r.cases > 0);
        r
    }

    #[test]
    fn merzon_on_small_groups() {
        for g in [
            make_elementary_abelian(2, 2).unwrap(),
            make_quaternion().unwrap(),
            make_symmetric(3).unwrap(),
            make_dihedral(4).unwrap(),
        ] {
            passes(verify_merzon(&g, &caps()).unwrap());
        }
    }

    #[test]
    fn merzon_counts_every_comparable_pair_per_subgroup() {
        // Z2 x Z2 has 5 subgroups and L is M3: 5 reflexive pairs, bottom
        // below 4 others, 3 atoms below the top.
        let g = make_elementary_abelian(2, 2).unwrap();
        let r = verify_merzon(&g, &caps()).unwrap();
        assert_eq!(r.cases, 5 * (5 + 4 + 3));
    }

    #[test]
    fn identity_sweeps_on_dihedral_four() {
        let g = make_dihedral(4).unwrap();
        passes(verify_restriction_join(&g, &caps()).unwrap());
        passes(verify_quotient_meet(&g, &caps()).unwrap());
        passes(verify_saturation_join(&g, &caps()).unwrap());
    }

    #[test]
    fn saturation_identity_on_z2_z4() {
        let g = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(4).unwrap()).unwrap();
        passes(verify_saturation_join(&g, &caps()).unwrap());
    }

    #[test]
    fn cover_transfer_on_nilpotent_groups() {
        for g in [
            make_quaternion().unwrap(),
            make_heisenberg(3).unwrap(),
            make_elementary_abelian(2, 3).unwrap(),
            make_symmetric(3).unwrap(),
        ] {
            passes(verify_cover_transfer(&g, &caps()).unwrap());
        }
    }

    #[test]
    fn meet_basis_and_semimodular_transfer() {
        for g in [
            make_heisenberg(2).unwrap(),
            make_quaternion().unwrap(),
            make_cyclic(12).unwrap(),
            direct_product(&make_cyclic(3).unwrap(), &make_quaternion().unwrap()).unwrap(),
        ] {
            passes(verify_meet_basis(&g, &caps()).unwrap());
            passes(verify_semimodular_transfer(&g, &caps()).unwrap());
        }
    }

    #[test]
    fn central_subgroups_of_q8() {
        let g = make_quaternion().unwrap();
        let c = central_subgroups(&g, &caps()).unwrap();
        assert_eq!(
            c.iter().map(SubgroupSet::size).collect::<Vec<_>>(),
            vec![1, 2]
        );
    }

    #[test]
    fn coset_partition_labels_by_least_element() {
        let g = make_cyclic(6).unwrap();
        let h = ElementSet::from_indices(6, [0, 3]);
        assert_eq!(coset_partition(&g, &h), vec![0, 1, 2, 0, 1, 2]);
    }
}
