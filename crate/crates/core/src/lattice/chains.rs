//! Chains, maximal-chain enumeration, and chain-length conditions.

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};

use super::FiniteLattice;

/// A strictly increasing list of lattice elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Chain {
    elements: Vec<usize>,
}

impl Chain {
    pub fn new(lattice: &FiniteLattice, elements: Vec<usize>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidArgument(
                "a chain needs at least one element".into(),
            ));
        }
        if let Some(&bad) = elements.iter().find(|&&x| x >= lattice.size()) {
            return Err(Error::InvalidArgument(format!(
                "element {bad} out of range"
            )));
        }
        if let Some(w) = elements.windows(2).find(|w| !lattice.lt(w[0], w[1])) {
            return Err(Error::InvalidArgument(format!(
                "chain is not strictly increasing at {} -> {}",
                w[0], w[1]
            )));
        }
        Ok(Chain { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Number of links.
    pub fn length(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn start(&self) -> usize {
        self.elements[0]
    }

    pub fn end(&self) -> usize {
        *self.elements.last().expect("chains are non-empty")
    }

    /// `self` refines `other`: `other ⊆ self`, and every element of `self`
    /// lies between two elements of `other`.
    pub fn refines(&self, lattice: &FiniteLattice, other: &Chain) -> Result<bool> {
        if self.start() != other.start() || self.end() != other.end() {
            return Err(Error::InvalidArgument(
                "chains have different endpoints".into(),
            ));
        }
        let contains_other = other.elements.iter().all(|d| self.elements.contains(d));
        let sandwiched = self.elements.iter().all(|&c| {
            other.elements.iter().any(|&d1| lattice.leq(d1, c))
                && other.elements.iter().any(|&d2| lattice.leq(c, d2))
        });
        Ok(contains_other && sandwiched)
    }

    /// The first gap (position, element) where some lattice element fits
    /// strictly between consecutive chain elements; `None` if the chain is
    /// non-refinable.
    pub fn refining_element(&self, lattice: &FiniteLattice) -> Option<(usize, usize)> {
        self.elements.windows(2).enumerate().find_map(|(pos, w)| {
            let (lo, hi) = (w[0], w[1]);
            lattice
                .up_set(lo)
                .intersection(lattice.down_set(hi))
                .iter()
                .find(|&x| x != lo && x != hi)
                .map(|x| (pos, x))
        })
    }

    pub fn is_refinable(&self, lattice: &FiniteLattice) -> bool {
        self.refining_element(lattice).is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanHolder {
    pub from: usize,
    pub to: usize,
    /// The common length when all maximal chains agree.
    pub length: Option<usize>,
    /// A shortest and a longest maximal chain when they differ.
    pub witness: Option<(Chain, Chain)>,
}

impl JordanHolder {
    pub fn is_uniform(&self) -> bool {
        self.length.is_some()
    }
}

impl FiniteLattice {
    /// All maximal chains of `[a, b]`, i.e. cover paths from `a` to `b`,
    /// in lexicographic order.
    pub fn maximal_chains(&self, a: usize, b: usize, cap: usize) -> Result<Vec<Chain>> {
        let inside = self.interval_elements(a, b)?;
        let mut out = Vec::new();
        let mut path = vec![a];
        self.chain_dfs(b, &inside, &mut path, &mut out, cap)?;
        Ok(out)
    }

    fn chain_dfs(
        &self,
        target: usize,
        inside: &ElementSet,
        path: &mut Vec<usize>,
        out: &mut Vec<Chain>,
        cap: usize,
    ) -> Result<()> {
        let last = *path.last().expect("path starts non-empty");
        if last == target {
            if out.len() >= cap {
                return Err(Error::limit("maximal chain count", out.len() + 1, cap));
            }
            out.push(Chain {
                elements: path.clone(),
            });
            return Ok(());
        }
        for &next in self.upper_covers(last) {
            if inside.contains(next) {
                path.push(next);
                self.chain_dfs(target, inside, path, out, cap)?;
                path.pop();
            }
        }
        Ok(())
    }

    /// Shortest and longest cover-path lengths from every element of
    /// `[a, b]` up to `b`; entries outside the interval are `None`.
    fn path_lengths_to(&self, b: usize, inside: &ElementSet) -> Vec<Option<(usize, usize)>> {
        let mut memo: Vec<Option<(usize, usize)>> = vec![None; self.size()];
        let mut order: Vec<usize> = inside.iter().collect();
        // process from the top of the interval downwards
        order.sort_by_key(|&x| std::cmp::Reverse(self.down_set(x).len()));
        for x in order {
            if x == b {
                memo[x] = Some((0, 0));
                continue;
            }
            let mut lo = usize::MAX;
            let mut hi = 0;
            for &c in self.upper_covers(x) {
                if let Some((l, h)) = memo[c] {
                    lo = lo.min(l + 1);
                    hi = hi.max(h + 1);
                }
            }
            memo[x] = Some((lo, hi));
        }
        memo
    }

    /// Whether all maximal chains of `[a, b]` have the same length. Uses
    /// shortest/longest path lengths over the cover graph, so the cost does
    /// not grow with the number of chains.
    pub fn jordan_holder_check(&self, a: usize, b: usize) -> Result<JordanHolder> {
        let inside = self.interval_elements(a, b)?;
        let memo = self.path_lengths_to(b, &inside);
        let (lo, hi) = memo[a].expect("a lies in its own interval");
        if lo == hi {
            return Ok(JordanHolder {
                from: a,
                to: b,
                length: Some(lo),
                witness: None,
            });
        }
        let pick = |longest: bool| {
            let mut elements = vec![a];
            let mut x = a;
            while x != b {
                let want = if longest {
                    memo[x].unwrap().1
                } else {
                    memo[x].unwrap().0
                } - 1;
                x = self
                    .upper_covers(x)
                    .iter()
                    .copied()
                    .find(|&c| {
                        memo[c].is_some_and(|(l, h)| if longest { h == want } else { l == want })
                    })
                    .expect("a cover realizes the extremal length");
                elements.push(x);
            }
            Chain { elements }
        };
        Ok(JordanHolder {
            from: a,
            to: b,
            length: None,
            witness: Some((pick(false), pick(true))),
        })
    }

    /// The first interval `[a, b]` (lexicographically) whose maximal chains
    /// have different lengths.
    pub fn jordan_holder_violation(&self) -> Option<(usize, usize)> {
        use rayon::prelude::*;
        (0..self.size()).into_par_iter().find_map_first(|a| {
            let everything = self.up_set(a).clone();
            // lengths from a to every b at once: walk upwards from a
            let mut lo = vec![usize::MAX; self.size()];
            let mut hi = vec![0usize; self.size()];
            lo[a] = 0;
            let mut order: Vec<usize> = everything.iter().collect();
            order.sort_by_key(|&x| self.down_set(x).len());
            for x in order {
                if lo[x] == usize::MAX {
                    continue;
                }
                for &c in self.upper_covers(x) {
                    lo[c] = lo[c].min(lo[x] + 1);
                    hi[c] = hi[c].max(hi[x] + 1);
                }
            }
            let found = everything.iter().find(|&b| lo[b] != hi[b]);
            found.map(|b| (a, b))
        })
    }

    /// Elements from which every maximal chain to the top has length
    /// exactly `k` (`A_0` is the top alone). The result is an antichain.
    pub fn k_maximal_elements(&self, k: usize) -> Vec<usize> {
        let everything = ElementSet::full(self.size());
        let memo = self.path_lengths_to(self.top(), &everything);
        (0..self.size())
            .filter(|&x| memo[x] == Some((k, k)))
            .collect()
    }

    /// Coatoms, i.e. the elements covered by the top.
    pub fn coatoms(&self) -> Vec<usize> {
        self.lower_covers(self.top()).to_vec()
    }
}
