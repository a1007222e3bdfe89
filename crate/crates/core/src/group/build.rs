use crate::error::{Error, Result};

use super::{is_prime, FiniteGroup};

pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidOrder("cyclic group of order 0".into()));
    }
    let names = (0..n).map(|i| i.to_string()).collect();
    FiniteGroup::from_fn(n, Some(names), None, |a, b| (a + b) % n)
}

/// `Z(p)^k`, elements as base-`p` digit tuples in lexicographic order.
pub fn make_elementary_abelian(p: usize, k: usize) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::InvalidOrder("rank must be positive".into()));
    }
    let order = checked_power(p, k)?;
    let digits = |mut x: usize| {
        let mut d = vec![0; k];
        for slot in d.iter_mut().rev() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let names = (0..order)
        .map(|x| {
            let d: Vec<String> = digits(x).iter().map(|v| v.to_string()).collect();
            format!("({})", d.join(","))
        })
        .collect();
    FiniteGroup::from_fn(order, Some(names), None, |a, b| {
        let (da, db) = (digits(a), digits(b));
        da.iter()
            .zip(&db)
            .fold(0, |acc, (x, y)| acc * p + (x + y) % p)
    })
}

/// The dihedral group of order `2n`: index `j*n + i` stands for `r^i s^j`.
pub fn make_dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidOrder("dihedral group needs n >= 1".into()));
    }
    let order = n
        .checked_mul(2)
        .ok_or_else(|| Error::limit("group order", usize::MAX, crate::caps::HARD_MAX_ORDER))?;
    check_order(order)?;
    let names = (0..order)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (i, 0) => format!("r{i}"),
                (0, _) => "s".to_string(),
                (i, _) => format!("r{i}s"),
            }
        })
        .collect();
    FiniteGroup::from_fn(order, Some(names), None, |a, b| {
        let (i, s) = (a % n, a / n);
        let (k, t) = (b % n, b / n);
        let rot = if s == 0 { (i + k) % n } else { (i + n - k) % n };
        ((s + t) % 2) * n + rot
    })
}

/// Q8 with elements `1, -1, i, -i, j, -j, k, -k`.
pub fn make_quaternion() -> Result<FiniteGroup> {
    // unit index (0=1, 1=i, 2=j, 3=k) and sign; unit products as (sign, unit)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_fn(8, Some(names), None, |a, b| {
        let (ua, na) = (a / 2, a % 2 == 1);
        let (ub, nb) = (b / 2, b % 2 == 1);
        let (neg, u) = UNIT[ua][ub];
        2 * u + usize::from(na ^ nb ^ neg)
    })
}

/// Upper unitriangular 3x3 matrices over `Z(p)`; index `(a*p + b)*p + c`
/// stands for the matrix with superdiagonal `a, b` and corner `c`.
pub fn make_heisenberg(p: usize) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let order = checked_power(p, 3)?;
    let split = |x: usize| (x / (p * p), (x / p) % p, x % p);
    let names = (0..order)
        .map(|x| {
            let (a, b, c) = split(x);
            format!("[{a},{b},{c}]")
        })
        .collect();
    FiniteGroup::from_fn(order, Some(names), None, |x, y| {
        let (a, b, c) = split(x);
        let (a2, b2, c2) = split(y);
        ((a + a2) % p * p + (b + b2) % p) * p + (c + c2 + a * b2) % p
    })
}

/// The symmetric group on `n` points, permutations in lexicographic order.
/// The product `x·y` applies `y` first.
pub fn make_symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidOrder("symmetric group needs n >= 1".into()));
    }
    let mut order: usize = 1;
    for k in 1..=n {
        order = order.saturating_mul(k);
    }
    check_order(order)?;
    let perms = permutations(n);
    let index: std::collections::HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let names = perms
        .iter()
        .map(|p| {
            let s: Vec<String> = p.iter().map(|v| (v + 1).to_string()).collect();
            format!("[{}]", s.join(" "))
        })
        .collect();
    FiniteGroup::from_fn(order, Some(names), None, |a, b| {
        let composed: Vec<usize> = (0..n).map(|k| perms[a][perms[b][k]]).collect();
        index[composed.as_slice()]
    })
}

/// The direct product; `(g, h)` has index `g * |H| + h`. The factors are
/// retained so that product-decomposition checks need no isomorphism search.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (m, n) = (g.order(), h.order());
    let order = m
        .checked_mul(n)
        .ok_or_else(|| Error::limit("group order", usize::MAX, crate::caps::HARD_MAX_ORDER))?;
    check_order(order)?;
    let names = (0..order)
        .map(|x| format!("({},{})", g.name(x / n), h.name(x % n)))
        .collect();
    FiniteGroup::from_fn(order, Some(names), Some((g.clone(), h.clone())), |a, b| {
        g.mul(a / n, b / n) * n + h.mul(a % n, b % n)
    })
}

fn check_order(order: usize) -> Result<()> {
    if order > crate::caps::HARD_MAX_ORDER {
        return Err(Error::limit(
            "group order",
            order,
            crate::caps::HARD_MAX_ORDER,
        ));
    }
    Ok(())
}

fn checked_power(p: usize, k: usize) -> Result<usize> {
    let mut order: usize = 1;
    for _ in 0..k {
        order = order.saturating_mul(p);
    }
    check_order(order)?;
    Ok(order)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}
