//! Brute-force group isomorphism, used to compare small groups in tests.

use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::{subgroup_generated, FiniteGroup};

pub const ISOMORPHISM_ORDER_LIMIT: usize = 16;

/// Searches for an isomorphism by mapping a greedy generating set onto
/// elements of matching order. Returns the element map on success.
pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<Vec<usize>>> {
    let n = a.order();
    if n > ISOMORPHISM_ORDER_LIMIT || b.order() > ISOMORPHISM_ORDER_LIMIT {
        return Err(Error::limit(
            "group order for isomorphism search",
            n.max(b.order()),
            ISOMORPHISM_ORDER_LIMIT,
        ));
    }
    if n != b.order() {
        return Ok(None);
    }
    let (oa, ob) = (a.element_orders(), b.element_orders());
    let mut ha = oa.clone();
    let mut hb = ob.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb || a.is_abelian() != b.is_abelian() {
        return Ok(None);
    }

    let mut gens = Vec::new();
    let mut span = subgroup_generated(a, &[])?;
    for x in a.elements() {
        if span.size() == n {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = subgroup_generated(a, &gens)?;
        }
    }

    let mut images = Vec::with_capacity(gens.len());
    Ok(search(a, b, &gens, &oa, &ob, &mut images))
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    oa: &[usize],
    ob: &[usize],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if images.len() == gens.len() {
        return extend(a, b, gens, images);
    }
    let want = oa[gens[images.len()]];
    for y in b.elements() {
        if ob[y] != want {
            continue;
        }
        images.push(y);
        if let Some(m) = search(a, b, gens, oa, ob, images) {
            return Some(m);
        }
        images.pop();
    }
    None
}

fn extend(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = a.order();
    let mut map = vec![usize::MAX; n];
    map[a.identity()] = b.identity();
    let mut queue = VecDeque::from([a.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let z = a.mul(x, g);
            let fz = b.mul(map[x], img);
            if map[z] == usize::MAX {
                map[z] = fz;
                queue.push_back(z);
            } else if map[z] != fz {
                return None;
            }
        }
    }
    let mut hit = vec![false; n];
    for &y in &map {
        if hit[y] {
            return None;
        }
        hit[y] = true;
    }
    let multiplicative = a.elements().all(|x| {
        a.elements()
            .all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y]))
    });
    multiplicative.then_some(map)
}
