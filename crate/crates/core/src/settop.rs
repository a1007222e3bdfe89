//! All topologies on a set of at most five points.
//!
//! Topologies on a finite set correspond to preorders: the open sets are
//! the up-sets. A family of subsets is stored as a bitmask over the `2^n`
//! subsets (bit `s` set when subset `s` is open), so `n ≤ 5` fits in a
//! `u64`.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::{BirkhoffWitness, FiniteLattice, TripleWitness};
use crate::topology::TopologyLattice;

pub const MAX_POINTS: usize = 5;
/// Largest point count for which the full lattice is built.
pub const MAX_LATTICE_POINTS: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SetTopology {
    n: usize,
    family: u64,
}

fn check_points(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::limit("points", n, limit));
    }
    Ok(())
}

fn full_set(n: usize) -> u32 {
    ((1u64 << n) - 1) as u32
}

impl SetTopology {
    /// Checks that `opens` contains `∅` and the whole set and is closed
    /// under pairwise unions and intersections.
    pub fn new(n: usize, opens: &[u32]) -> Result<Self> {
        check_points(n, MAX_POINTS)?;
        let mut family = 0u64;
        for &s in opens {
            if s > full_set(n) {
                return Err(Error::InvalidArgument(format!(
                    "open set {s} is not a subset of {n} points"
                )));
            }
            family |= 1 << s;
        }
        let t = SetTopology { n, family };
        if !t.is_topology() {
            return Err(Error::InvalidArgument("family is not a topology".into()));
        }
        Ok(t)
    }

    pub fn discrete(n: usize) -> Result<Self> {
        check_points(n, MAX_POINTS)?;
        Ok(SetTopology {
            n,
            family: (1u64 << (1u64 << n)) - 1,
        })
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        check_points(n, MAX_POINTS)?;
        Ok(SetTopology {
            n,
            family: 1 | (1 << full_set(n)),
        })
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn family_bits(&self) -> u64 {
        self.family
    }

    pub fn is_open(&self, s: u32) -> bool {
        s <= full_set(self.n) && self.family >> s & 1 == 1
    }

    /// Open sets in increasing bitmask order.
    pub fn opens(&self) -> Vec<u32> {
        (0..=full_set(self.n))
            .filter(|&s| self.is_open(s))
            .collect()
    }

    pub fn is_topology(&self) -> bool {
        let opens = self.opens();
        self.is_open(0)
            && self.is_open(full_set(self.n))
            && opens.iter().all(|&a| {
                opens
                    .iter()
                    .all(|&b| self.is_open(a | b) && self.is_open(a & b))
            })
    }

    /// `self ≤ other`: `other` is finer.
    pub fn leq(&self, other: &SetTopology) -> bool {
        self.n == other.n && self.family & !other.family == 0
    }
}

impl Ord for SetTopology {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.opens()).cmp(&(other.n, other.opens()))
    }
}

impl PartialOrd for SetTopology {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for SetTopology {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "T{}{:?}", self.n, self.opens())
    }
}

impl Serialize for SetTopology {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.opens().serialize(s)
    }
}

fn same_size(a: &SetTopology, b: &SetTopology) -> Result<()> {
    if a.n != b.n {
        return Err(Error::InvalidArgument(format!(
            "topologies on {} and {} points",
            a.n, b.n
        )));
    }
    Ok(())
}

/// Coarsest topology finer than both: intersection of families.
pub fn top_meet(a: &SetTopology, b: &SetTopology) -> Result<SetTopology> {
    same_size(a, b)?;
    Ok(SetTopology {
        n: a.n,
        family: a.family & b.family,
    })
}

/// Finest topology coarser than both: close the union under pairwise
/// intersections, then under unions.
pub fn top_join(a: &SetTopology, b: &SetTopology) -> Result<SetTopology> {
    same_size(a, b)?;
    let n = a.n;
    let mut family = a.family | b.family;
    for op in [|x: u32, y: u32| x & y, |x: u32, y: u32| x | y] {
        loop {
            let current = SetTopology { n, family };
            let opens = current.opens();
            let mut next = family;
            for &x in &opens {
                for &y in &opens {
                    next |= 1 << op(x, y);
                }
            }
            if next == family {
                break;
            }
            family = next;
        }
    }
    Ok(SetTopology { n, family })
}

/// Up-sets of the preorder given by `up[x]`, the points above `x`.
fn up_sets(n: usize, up: &[u32]) -> u64 {
    (0..=full_set(n))
        .filter(|&s| (0..n).all(|x| s >> x & 1 == 0 || up[x] & !s == 0))
        .fold(0u64, |acc, s| acc | 1 << s)
}

/// Every topology on `n` points, in canonical order. Preorders are
/// enumerated over the off-diagonal relation bits and kept when
/// transitive.
pub fn enumerate_topologies(n: usize) -> Result<Vec<SetTopology>> {
    check_points(n, MAX_POINTS)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out: Vec<SetTopology> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|bits| {
            let mut up: Vec<u32> = (0..n).map(|x| 1 << x).collect();
            for (i, &(x, y)) in pairs.iter().enumerate() {
                if bits >> i & 1 == 1 {
                    up[x] |= 1 << y;
                }
            }
            let transitive =
                (0..n).all(|x| (0..n).all(|y| up[x] >> y & 1 == 0 || up[y] & !up[x] == 0));
            transitive.then(|| SetTopology {
                n,
                family: up_sets(n, &up),
            })
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The lattice of all topologies on `n ≤ 4` points, ordered by inclusion
/// of families. Element `i` is `enumerate_topologies(n)[i]`.
pub fn toplattice(n: usize) -> Result<(Vec<SetTopology>, FiniteLattice)> {
    check_points(n, MAX_LATTICE_POINTS)?;
    let tops = enumerate_topologies(n)?;
    let labels = tops.iter().map(|t| format!("{:?}", t.opens())).collect();
    let lattice = FiniteLattice::new(labels, |a, b| tops[a].leq(&tops[b]))?;
    Ok((tops, lattice))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassicalReport {
    pub n: usize,
    pub topologies: usize,
    /// Lattice meet and join agree with `top_meet` and `top_join`.
    pub operations_agree: bool,
    pub distributive: bool,
    /// Open-set lists of a failing triple.
    pub distributive_witness: Option<[Vec<u32>; 3]>,
    pub dual_birkhoff: bool,
    pub dual_birkhoff_witness: Option<[Vec<u32>; 2]>,
    pub birkhoff: bool,
    pub modular: bool,
    pub semimodular: bool,
}

pub fn verify_classical_facts(n: usize) -> Result<ClassicalReport> {
    let (tops, lat) = toplattice(n)?;
    let size = tops.len();
    let operations_agree = (0..size).into_par_iter().all(|a| {
        (0..size).all(|b| {
            top_meet(&tops[a], &tops[b]).ok() == Some(tops[lat.meet(a, b)])
                && top_join(&tops[a], &tops[b]).ok() == Some(tops[lat.join(a, b)])
        })
    });
    let opens = |i: usize| tops[i].opens();
    let dw: Option<TripleWitness> = lat.distributive_witness();
    let bw: Option<BirkhoffWitness> = lat.dual_birkhoff_witness();
    Ok(ClassicalReport {
        n,
        topologies: size,
        operations_agree,
        distributive: dw.is_none(),
        distributive_witness: dw.map(|w| [opens(w.a), opens(w.b), opens(w.c)]),
        dual_birkhoff: bw.is_none(),
        dual_birkhoff_witness: bw.map(|w| [opens(w.a), opens(w.b)]),
        birkhoff: lat.has_birkhoff(),
        modular: lat.is_modular(),
        semimodular: lat.is_semimodular(),
    })
}

/// The topology on the points of `G` whose open sets are unions of
/// cosets of `kernel`.
pub fn coset_topology(g: &FiniteGroup, kernel: &ElementSet) -> Result<SetTopology> {
    check_points(g.order(), MAX_POINTS)?;
    let n = g.order();
    let mut family = 0u64;
    for s in 0..=full_set(n) {
        let closed = (0..n)
            .filter(|&x| s >> x & 1 == 1)
            .all(|x| kernel.iter().all(|k| s >> g.mul(x, k) & 1 == 1));
        if closed {
            family |= 1 << s;
        }
    }
    Ok(SetTopology { n, family })
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbedReport {
    pub order: usize,
    pub pairs: usize,
    /// Joins in `L_G` are joins in the lattice of all topologies on `G`.
    pub joins_agree: bool,
    /// Kernels of a pair whose meet among all topologies is not a group
    /// topology, if any.
    pub meet_disagreement: Option<[Vec<usize>; 2]>,
}

/// Compares `L_G` with the lattice of all topologies on the points of `G`.
pub fn embed_group_topologies(g: &FiniteGroup) -> Result<EmbedReport> {
    check_points(g.order(), MAX_LATTICE_POINTS)?;
    let caps = crate::caps::Caps::default();
    let l = TopologyLattice::new(g, &caps)?;
    let fams: Vec<SetTopology> = l
        .kernels()
        .iter()
        .map(|k| coset_topology(g, k.members()))
        .collect::<Result<_>>()?;
    let lat = l.lattice();
    let mut joins_agree = true;
    let mut meet_disagreement = None;
    for a in 0..l.len() {
        for b in 0..l.len() {
            joins_agree &= top_join(&fams[a], &fams[b])? == fams[lat.join(a, b)];
            let m = top_meet(&fams[a], &fams[b])?;
            if meet_disagreement.is_none() && !fams.contains(&m) {
                meet_disagreement = Some([l.kernel(a).to_vec(), l.kernel(b).to_vec()]);
            }
        }
    }
    Ok(EmbedReport {
        order: g.order(),
        pairs: l.len() * l.len(),
        joins_agree,
        meet_disagreement,
    })
}

/// One line per topology, open sets as space-separated bitmasks.
pub fn dump(tops: &[SetTopology]) -> String {
    let mut out = String::new();
    for t in tops {
        let line: Vec<String> = t.opens().iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_dump(n: usize, text: &str) -> Result<Vec<SetTopology>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let opens = line
                .split_whitespace()
                .map(|w| {
                    w.parse::<u32>()
                        .map_err(|_| Error::InvalidArgument(format!("bad open set {w:?}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            SetTopology::new(n, &opens)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, make_cyclic};

    /// All families of subsets of `n` points that are topologies, by
    /// filtering every family.
    fn brute_force(n: usize) -> Vec<SetTopology> {
        let subsets = 1usize << n;
        let mut out = Vec::new();
        for family in 0u64..1 << subsets {
            let t = SetTopology { n, family };
            if t.is_topology() {
                out.push(t);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 0..=4 {
            let ours = enumerate_topologies(n).unwrap();
            assert_eq!(ours, brute_force(n), "n = {n}");
        }
        let counts: Vec<usize> = (1..=3)
            .map(|n| enumerate_topologies(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 4, 29]);
    }

    #[test]
    fn five_points() {
        let tops = enumerate_topologies(5).unwrap();
        assert!(tops.iter().all(SetTopology::is_topology));
        let mut families: Vec<u64> = tops.iter().map(|t| t.family).collect();
        families.sort_unstable();
        families.dedup();
        assert_eq!(families.len(), tops.len());
        assert!(tops.contains(&SetTopology::discrete(5).unwrap()));
        assert!(tops.contains(&SetTopology::indiscrete(5).unwrap()));
    }

    #[test]
    fn too_many_points() {
        assert!(enumerate_topologies(6).unwrap_err().is_resource_limit());
        assert!(toplattice(5).unwrap_err().is_resource_limit());
    }

    #[test]
    fn meet_and_join_with_extremes() {
        for t in enumerate_topologies(3).unwrap() {
            assert_eq!(top_meet(&t, &SetTopology::discrete(3).unwrap()).unwrap(), t);
            assert_eq!(
                top_join(&t, &SetTopology::indiscrete(3).unwrap()).unwrap(),
                t
            );
        }
    }

    #[test]
    fn join_is_least_upper_bound() {
        let tops = enumerate_topologies(3).unwrap();
        for a in &tops {
            for b in &tops {
                let j = top_join(a, b).unwrap();
                let uppers: Vec<&SetTopology> =
                    tops.iter().filter(|t| a.leq(t) && b.leq(t)).collect();
                assert!(uppers.contains(&&j));
                assert!(uppers.iter().all(|u| j.leq(u)));
                let m = top_meet(a, b).unwrap();
                assert!(m.is_topology());
                assert!(tops
                    .iter()
                    .filter(|t| t.leq(a) && t.leq(b))
                    .all(|t| t.leq(&m)));
            }
        }
    }

    #[test]
    fn size_mismatch() {
        let a = SetTopology::discrete(2).unwrap();
        let b = SetTopology::discrete(3).unwrap();
        assert!(matches!(top_join(&a, &b), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn two_points_is_distributive() {
        let r = verify_classical_facts(2).unwrap();
        assert_eq!(r.topologies, 4);
        assert!(r.distributive);
        assert!(r.operations_agree);
    }

    /// Pairs `a < b` (by index) breaking the dual Birkhoff and the
    /// Birkhoff condition, with covers read off the families directly.
    fn birkhoff_violations(tops: &[SetTopology]) -> (usize, usize) {
        let covers = |a: &SetTopology, b: &SetTopology| {
            a != b
                && a.leq(b)
                && !tops
                    .iter()
                    .any(|c| c != a && c != b && a.leq(c) && c.leq(b))
        };
        let (mut dual, mut plain) = (0, 0);
        for (i, a) in tops.iter().enumerate() {
            for b in &tops[i + 1..] {
                let m = top_meet(a, b).unwrap();
                let j = top_join(a, b).unwrap();
                let up = covers(a, &j) && covers(b, &j);
                let down = covers(&m, a) && covers(&m, b);
                dual += usize::from(up && !down);
                plain += usize::from(down && !up);
            }
        }
        (dual, plain)
    }

    #[test]
    fn three_points() {
        let r = verify_classical_facts(3).unwrap();
        assert_eq!(r.topologies, 29);
        assert!(!r.distributive);
        assert!(r.distributive_witness.is_some());
        assert!(r.operations_agree);
        // Both covering conditions fail on three points, in either order
        // direction; the lattice checker agrees with the direct count.
        let (dual, plain) = birkhoff_violations(&enumerate_topologies(3).unwrap());
        assert_eq!((dual, plain), (18, 18));
        assert!(!r.dual_birkhoff);
        assert!(!r.birkhoff);
        let [a, b] = r.dual_birkhoff_witness.clone().unwrap();
        let ta = SetTopology::new(3, &a).unwrap();
        let tb = SetTopology::new(3, &b).unwrap();
        let j = top_join(&ta, &tb).unwrap();
        assert!(ta.leq(&j) && tb.leq(&j));
    }

    #[test]
    fn rejects_non_topologies() {
        assert!(SetTopology::new(2, &[0, 1, 2]).is_err());
        assert!(SetTopology::new(2, &[0, 1, 3]).is_ok());
        assert!(SetTopology::new(2, &[0, 7]).is_err());
    }

    #[test]
    fn dump_roundtrip() {
        let tops = enumerate_topologies(3).unwrap();
        let text = dump(&tops);
        assert_eq!(text.lines().count(), 29);
        assert_eq!(parse_dump(3, &text).unwrap(), tops);
    }

    #[test]
    fn group_topologies_inside() {
        let z2 = make_cyclic(2).unwrap();
        let r = embed_group_topologies(&z2).unwrap();
        assert!(r.joins_agree);
        assert!(r.meet_disagreement.is_none());
        let v4 = direct_product(&z2, &z2).unwrap();
        let r = embed_group_topologies(&v4).unwrap();
        assert!(r.joins_agree);
        assert_eq!(r.pairs, 25);
    }
}
