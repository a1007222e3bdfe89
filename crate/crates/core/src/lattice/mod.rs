//! Finite lattices given by an order relation, with precomputed meet and
//! join tables and the cover (Hasse) graph.

mod catalog;
mod chains;
mod io;
mod ops;
mod props;

use rayon::prelude::*;

use crate::bitset::ElementSet;
use crate::caps::HARD_MAX_LATTICE;
use crate::error::{Error, Result};

pub use catalog::{all_lattices, boolean_lattice, centered_hexagon, chain_lattice, m3, n5};
pub use chains::{Chain, JordanHolder};
pub use io::{to_dot, PosetJson};
pub use ops::{are_isomorphic, interval, product_lattice};
pub use props::{BirkhoffWitness, CoverWitness, TripleWitness};

#[derive(Clone, Debug)]
pub struct FiniteLattice {
    size: usize,
    labels: Vec<String>,
    /// `up[a]` = elements above or equal to `a`.
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
    meet: Vec<u32>,
    join: Vec<u32>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds a lattice on `0..labels.len()` ordered by `leq`. Fails with
    /// the lexicographically least witness if `leq` is not a partial order
    /// or some pair lacks a join or meet.
    pub fn new<F>(labels: Vec<String>, leq: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidArgument(
                "a lattice needs at least one element".into(),
            ));
        }
        if n > HARD_MAX_LATTICE {
            return Err(Error::limit("lattice size", n, HARD_MAX_LATTICE));
        }
        let up: Vec<ElementSet> = (0..n)
            .into_par_iter()
            .map(|a| ElementSet::from_indices(n, (0..n).filter(|&b| leq(a, b))))
            .collect();
        Self::from_up_sets(labels, up)
    }

    pub fn unlabeled<F>(n: usize, leq: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        Self::new((0..n).map(|i| i.to_string()).collect(), leq)
    }

    fn from_up_sets(labels: Vec<String>, up: Vec<ElementSet>) -> Result<Self> {
        let n = labels.len();
        for a in 0..n {
            if !up[a].contains(a) {
                return Err(Error::NotAPoset {
                    reason: "not reflexive",
                    witness: vec![a],
                });
            }
        }
        for a in 0..n {
            if let Some(b) = up[a].iter().find(|&b| b != a && up[b].contains(a)) {
                return Err(Error::NotAPoset {
                    reason: "not antisymmetric",
                    witness: vec![a, b],
                });
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                if !up[b].is_subset(&up[a]) {
                    let c = up[b]
                        .difference(&up[a])
                        .first()
                        .expect("non-empty difference");
                    return Err(Error::NotAPoset {
                        reason: "not transitive",
                        witness: vec![a, b, c],
                    });
                }
            }
        }
        let mut down = vec![ElementSet::empty(n); n];
        for a in 0..n {
            for b in up[a].iter() {
                down[b].insert(a);
            }
        }

        let up_len: Vec<usize> = up.iter().map(ElementSet::len).collect();
        let down_len: Vec<usize> = down.iter().map(ElementSet::len).collect();

        // Least element of `bounds` if it exists: the candidate with the
        // most elements above it must lie below every other bound.
        let least = |bounds: &ElementSet, rows: &[ElementSet], lens: &[usize]| -> Option<usize> {
            let cand = bounds
                .iter()
                .min_by_key(|&u| (std::cmp::Reverse(lens[u]), u))?;
            bounds.is_subset(&rows[cand]).then_some(cand)
        };

        let rows: Vec<Result<(Vec<u32>, Vec<u32>)>> = (0..n)
            .into_par_iter()
            .map(|a| {
                let mut j_row = vec![0u32; n];
                let mut m_row = vec![0u32; n];
                for b in 0..n {
                    let ub = up[a].intersection(&up[b]);
                    let j = least(&ub, &up, &up_len).ok_or(Error::NotALattice(
                        a,
                        b,
                        "least upper bound",
                    ))?;
                    let lb = down[a].intersection(&down[b]);
                    let m = least(&lb, &down, &down_len).ok_or(Error::NotALattice(
                        a,
                        b,
                        "greatest lower bound",
                    ))?;
                    j_row[b] = j as u32;
                    m_row[b] = m as u32;
                }
                Ok((j_row, m_row))
            })
            .collect();
        let mut join = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        for row in rows {
            let (j, m) = row?;
            join.extend(j);
            meet.extend(m);
        }

        let upper_covers: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|a| {
                up[a]
                    .iter()
                    .filter(|&b| b != a && up[a].intersection_len(&down[b]) == 2)
                    .collect()
            })
            .collect();
        let mut lower_covers = vec![Vec::new(); n];
        for (a, covers) in upper_covers.iter().enumerate() {
            for &b in covers {
                lower_covers[b].push(a);
            }
        }

        let bottom = (0..n)
            .find(|&a| up_len[a] == n)
            .expect("a lattice has a bottom");
        let top = (0..n)
            .find(|&a| down_len[a] == n)
            .expect("a lattice has a top");

        Ok(FiniteLattice {
            size: n,
            labels,
            up,
            down,
            meet,
            join,
            upper_covers,
            lower_covers,
            bottom,
            top,
        })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn up_set(&self, a: usize) -> &ElementSet {
        &self.up[a]
    }

    pub fn down_set(&self, a: usize) -> &ElementSet {
        &self.down[a]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b] as usize
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b] as usize
    }

    pub fn big_meet<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn big_join<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// `b ≺ a`: `b < a` with nothing strictly between.
    pub fn covers(&self, b: usize, a: usize) -> bool {
        self.upper_covers[b].binary_search(&a).is_ok()
    }

    /// `b ⪯ a`: `b ≺ a` or `b = a`.
    pub fn covers_or_equal(&self, b: usize, a: usize) -> bool {
        b == a || self.covers(b, a)
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper_covers[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.lower_covers[a]
    }

    /// All cover pairs `(b, a)` with `b ≺ a`, in lexicographic order.
    pub fn cover_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |b| self.upper_covers[b].iter().map(move |&a| (b, a)))
    }

    /// Elements of `[a, b]`, or an error if `a ≰ b`.
    pub fn interval_elements(&self, a: usize, b: usize) -> Result<ElementSet> {
        if !self.leq(a, b) {
            return Err(Error::InvalidInterval(a, b));
        }
        Ok(self.up[a].intersection(&self.down[b]))
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn ranks(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&a| self.down[a].len());
        let mut rank = vec![0; self.size];
        for a in order {
            for &c in &self.upper_covers[a] {
                rank[c] = rank[c].max(rank[a] + 1);
            }
        }
        rank
    }

    /// Length of the longest chain in the lattice.
    pub fn height(&self) -> usize {
        self.ranks()[self.top]
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::InvalidArgument(
                "label count does not match size".into(),
            ));
        }
        self.labels = labels;
        Ok(self)
    }
}
