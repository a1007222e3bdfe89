use crate::error::{Error, Result};

use super::FiniteLattice;

/// The interval `[a, b]` as a lattice, together with the original index of
/// each of its elements.
pub fn interval(
    lattice: &FiniteLattice,
    a: usize,
    b: usize,
) -> Result<(FiniteLattice, Vec<usize>)> {
    let elems: Vec<usize> = lattice.interval_elements(a, b)?.to_vec();
    let labels = elems
        .iter()
        .map(|&x| lattice.label(x).to_string())
        .collect();
    let sub = FiniteLattice::new(labels, |i, j| lattice.leq(elems[i], elems[j]))?;
    Ok((sub, elems))
}

/// Componentwise order on pairs; `(x, y)` has index `x * |right| + y`.
pub fn product_lattice(left: &FiniteLattice, right: &FiniteLattice) -> Result<FiniteLattice> {
    let m = right.size();
    let size = left
        .size()
        .checked_mul(m)
        .ok_or_else(|| Error::limit("lattice size", usize::MAX, crate::caps::HARD_MAX_LATTICE))?;
    let labels = (0..size)
        .map(|i| format!("({},{})", left.label(i / m), right.label(i % m)))
        .collect();
    FiniteLattice::new(labels, |i, j| {
        left.leq(i / m, j / m) && right.leq(i % m, j % m)
    })
}

/// Searches for an order isomorphism, returning the element map.
///
/// Backtracks over elements in rank order, pruning on rank, cover degrees
/// and up/down-set sizes, and checks order relations against everything
/// mapped so far.
pub fn are_isomorphic(
    left: &FiniteLattice,
    right: &FiniteLattice,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    let n = left.size();
    if n > cap || right.size() > cap {
        return Err(Error::limit(
            "lattice size for isomorphism search",
            n.max(right.size()),
            cap,
        ));
    }
    if n != right.size() {
        return Ok(None);
    }
    let signature = |l: &FiniteLattice| -> Vec<(usize, usize, usize, usize, usize)> {
        let ranks = l.ranks();
        (0..l.size())
            .map(|x| {
                (
                    ranks[x],
                    l.upper_covers(x).len(),
                    l.lower_covers(x).len(),
                    l.up_set(x).len(),
                    l.down_set(x).len(),
                )
            })
            .collect()
    };
    let (sl, sr) = (signature(left), signature(right));
    let mut hl = sl.clone();
    let mut hr = sr.clone();
    hl.sort_unstable();
    hr.sort_unstable();
    if hl != hr {
        return Ok(None);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (sl[x].0, x));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn assign(
        depth: usize,
        order: &[usize],
        left: &FiniteLattice,
        right: &FiniteLattice,
        sl: &[(usize, usize, usize, usize, usize)],
        sr: &[(usize, usize, usize, usize, usize)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        for y in 0..right.size() {
            if used[y] || sr[y] != sl[x] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&p| {
                let q = map[p];
                left.leq(p, x) == right.leq(q, y) && left.leq(x, p) == right.leq(y, q)
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if assign(depth + 1, order, left, right, sl, sr, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }

    Ok(assign(0, &order, left, right, &sl, &sr, &mut map, &mut used).then_some(map))
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn full_interval_is_the_lattice() {
        let l = n5();
        let (sub, elems) = interval(&l, l.bottom(), l.top()).unwrap();
        assert_eq!(elems, vec![0, 1, 2, 3, 4]);
        assert!(are_isomorphic(&sub, &l, 64).unwrap().is_some());
        let (upper, elems) = interval(&l, 1, 4).unwrap();
        assert_eq!(elems, vec![1, 3, 4]);
        assert!(are_isomorphic(&upper, &chain_lattice(3), 64)
            .unwrap()
            .is_some());
        assert!(interval(&l, 2, 3).is_err());
    }

    #[test]
    fn product_of_two_chains_is_boolean() {
        let c2 = chain_lattice(2);
        let p = product_lattice(&c2, &c2).unwrap();
        assert!(are_isomorphic(&p, &boolean_lattice(2), 64)
            .unwrap()
            .is_some());
        assert!(are_isomorphic(&p, &chain_lattice(4), 64).unwrap().is_none());
    }

    #[test]
    fn product_preserves_modularity() {
        let p = product_lattice(&chain_lattice(3), &m3()).unwrap();
        assert_eq!(p.size(), 15);
        assert!(p.is_modular());
        assert!(!p.is_distributive());
        let q = product_lattice(&chain_lattice(2), &n5()).unwrap();
        assert!(!q.is_modular());
    }

    #[test]
    fn isomorphism_distinguishes_m3_and_n5() {
        assert!(are_isomorphic(&m3(), &n5(), 64).unwrap().is_none());
        let map = are_isomorphic(&m3(), &m3(), 64).unwrap().unwrap();
        assert_eq!(map[0], 0);
        assert!(are_isomorphic(&boolean_lattice(4), &boolean_lattice(4), 8)
            .unwrap_err()
            .is_resource_limit());
    }
}
