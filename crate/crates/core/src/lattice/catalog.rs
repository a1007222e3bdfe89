//! Small named lattices and exhaustive generation of all small lattices.

use super::{are_isomorphic, FiniteLattice};

fn from_covers(labels: &[&str], covers: &[(usize, usize)]) -> FiniteLattice {
    let n = labels.len();
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in covers {
        leq[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    FiniteLattice::new(labels.iter().map(|s| s.to_string()).collect(), |a, b| {
        leq[a][b]
    })
    .expect("catalog entries are lattices")
}

/// A chain with `n >= 1` elements `0 < 1 < ... < n-1`.
pub fn chain_lattice(n: usize) -> FiniteLattice {
    FiniteLattice::unlabeled(n.max(1), |a, b| a <= b).expect("chains are lattices")
}

/// Subsets of a `k`-element set under inclusion, as bitmasks.
pub fn boolean_lattice(k: usize) -> FiniteLattice {
    FiniteLattice::unlabeled(1 << k, |a, b| a & b == a).expect("power sets are lattices")
}

/// The diamond: bottom, three atoms, top.
pub fn m3() -> FiniteLattice {
    from_covers(
        &["0", "a", "b", "c", "1"],
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )
}

/// The pentagon: bottom, `a < c`, `b` incomparable to both, top.
pub fn n5() -> FiniteLattice {
    from_covers(
        &["0", "a", "b", "c", "1"],
        &[(0, 1), (0, 2), (1, 3), (3, 4), (2, 4)],
    )
}

/// The centered hexagon: a hexagon `0 < a < x < 1`, `0 < b < y < 1`
/// with a center `m` covering both atoms. Upper but not lower semimodular;
/// no lattice with fewer elements has that property.
pub fn centered_hexagon() -> FiniteLattice {
    from_covers(
        &["0", "a", "b", "x", "y", "m", "1"],
        &[
            (0, 1),
            (0, 2),
            (1, 3),
            (1, 5),
            (2, 4),
            (2, 5),
            (3, 6),
            (4, 6),
            (5, 6),
        ],
    )
}

/// All lattices with exactly `n` elements, one per isomorphism class.
///
/// Generates every naturally labelled poset on the `n - 2` inner elements
/// (each element's strict down-set is a down-closed subset of earlier
/// elements), adds a bottom and a top, keeps the lattices, and removes
/// isomorphic duplicates.
pub fn all_lattices(n: usize) -> Vec<FiniteLattice> {
    match n {
        0 => return Vec::new(),
        1 => return vec![chain_lattice(1)],
        _ => {}
    }
    let inner = n - 2;
    let mut posets: Vec<Vec<u32>> = Vec::new();
    let mut below: Vec<u32> = Vec::new();
    fn rec(j: usize, inner: usize, below: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if j == inner {
            out.push(below.clone());
            return;
        }
        for mask in 0u32..1 << j {
            let closed = (0..j).all(|i| mask >> i & 1 == 0 || below[i] & !mask == 0);
            if closed {
                below.push(mask);
                rec(j + 1, inner, below, out);
                below.pop();
            }
        }
    }
    rec(0, inner, &mut below, &mut posets);

    let mut classes: Vec<FiniteLattice> = Vec::new();
    for p in posets {
        // element 0 = bottom, 1..=inner = poset, n-1 = top
        let leq = |a: usize, b: usize| {
            a == b
                || a == 0
                || b == n - 1
                || (a >= 1 && b >= 1 && b <= inner && a <= inner && p[b - 1] >> (a - 1) & 1 == 1)
        };
        let Ok(l) = FiniteLattice::unlabeled(n, leq) else {
            continue;
        };
        let fresh = classes.iter().all(|c| {
            !are_isomorphic(c, &l, usize::MAX)
                .expect("no size cap")
                .is_some()
        });
        if fresh {
            classes.push(l);
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_counts_up_to_isomorphism() {
        let counts: Vec<usize> = (1..=7).map(|n| all_lattices(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 15, 53]);
    }

    #[test]
    fn five_element_lattices_include_m3_and_n5() {
        let five = all_lattices(5);
        let has = |l: &FiniteLattice| {
            five.iter()
                .any(|c| are_isomorphic(c, l, 64).unwrap().is_some())
        };
        assert!(has(&m3()));
        assert!(has(&n5()));
        assert!(has(&chain_lattice(5)));
    }
}
