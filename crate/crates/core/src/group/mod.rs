//! Finite groups given by Cayley tables over indexed elements.
//!
//! Every realization (residues, permutations, matrices, products) is
//! normalized to a table at construction, so all algorithms work uniformly
//! on element indices.

mod build;
mod homomorphism;
pub mod iso;
mod json;
mod notation;
mod subgroup;

use std::sync::Arc;

use crate::caps::{DEFAULT_ASSOC_CHECK_ORDER, HARD_MAX_ORDER};
use crate::error::{Error, Result};

pub use build::{
    direct_product, make_cyclic, make_dihedral, make_elementary_abelian, make_heisenberg,
    make_quaternion, make_symmetric,
};
pub use homomorphism::{quotient, subgroup_as_group, GroupHomomorphism};
pub use json::GroupJson;
pub use notation::parse_group;
pub use subgroup::{
    all_normal_subgroups, all_subgroups, center, centralizes, commutator_subgroup, is_normal,
    nilpotency_class, normal_closure, normalizer, product_set, subgroup_generated,
    upper_central_series, SubgroupSet,
};

/// A finite group. Cloning is cheap; the table is shared.
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

struct GroupData {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<usize>,
    names: Option<Vec<String>>,
    factors: Option<(FiniteGroup, FiniteGroup)>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("abelian", &self.is_abelian())
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a full Cayley table, checking every invariant
    /// (associativity only up to `assoc_check_order`).
    pub fn from_table(
        table: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
        assoc_check_order: usize,
    ) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidOrder(
                "a group needs at least one element".into(),
            ));
        }
        if order > HARD_MAX_ORDER {
            return Err(Error::limit("group order", order, HARD_MAX_ORDER));
        }
        if let Some(row) = table.iter().find(|r| r.len() != order) {
            return Err(Error::InvalidArgument(format!(
                "table row has {} entries, expected {order}",
                row.len()
            )));
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in &table {
            for &v in row {
                if v >= order {
                    return Err(Error::InvalidArgument(format!(
                        "table entry {v} out of range for order {order}"
                    )));
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat(order, flat, names, None, assoc_check_order)
    }

    pub(crate) fn from_flat(
        order: usize,
        table: Vec<u32>,
        names: Option<Vec<String>>,
        factors: Option<(FiniteGroup, FiniteGroup)>,
        assoc_check_order: usize,
    ) -> Result<Self> {
        if order > HARD_MAX_ORDER {
            return Err(Error::limit("group order", order, HARD_MAX_ORDER));
        }
        if let Some(n) = &names {
            if n.len() != order {
                return Err(Error::InvalidArgument(format!(
                    "{} names given for {order} elements",
                    n.len()
                )));
            }
        }
        let at = |i: usize, j: usize| table[i * order + j] as usize;

        // Latin square.
        let mut seen = vec![usize::MAX; order];
        for i in 0..order {
            for j in 0..order {
                let v = at(i, j);
                if seen[v] == i {
                    return Err(Error::InvalidArgument(format!(
                        "row {i} repeats element {v}"
                    )));
                }
                seen[v] = i;
            }
        }
        let mut seen = vec![usize::MAX; order];
        for j in 0..order {
            for i in 0..order {
                let v = at(i, j);
                if seen[v] == j {
                    return Err(Error::InvalidArgument(format!(
                        "column {j} repeats element {v}"
                    )));
                }
                seen[v] = j;
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|i| at(e, i) == i && at(i, e) == i))
            .ok_or_else(|| Error::InvalidArgument("no two-sided identity".into()))?;

        let mut inverses = vec![usize::MAX; order];
        for i in 0..order {
            let j = (0..order)
                .find(|&j| at(i, j) == identity)
                .expect("latin square rows contain the identity");
            if at(j, i) != identity {
                return Err(Error::InvalidArgument(format!(
                    "element {i} has no two-sided inverse"
                )));
            }
            inverses[i] = j;
        }

        if order <= assoc_check_order {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::InvalidArgument(format!(
                                "associativity fails for ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }

        Ok(FiniteGroup(Arc::new(GroupData {
            order,
            table,
            identity,
            inverses,
            names,
            factors,
        })))
    }

    pub(crate) fn from_fn(
        order: usize,
        names: Option<Vec<String>>,
        factors: Option<(FiniteGroup, FiniteGroup)>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        if order > HARD_MAX_ORDER {
            return Err(Error::limit("group order", order, HARD_MAX_ORDER));
        }
        let mut table = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                table.push(mul(i, j) as u32);
            }
        }
        Self::from_flat(order, table, names, factors, DEFAULT_ASSOC_CHECK_ORDER)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.0.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.0.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.table[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inverses[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order())
            .map(|i| (0..self.order()).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.0.names.as_deref()
    }

    pub fn name(&self, i: usize) -> String {
        match &self.0.names {
            Some(n) => n[i].clone(),
            None => i.to_string(),
        }
    }

    /// The two factors, when the group was built by [`direct_product`].
    pub fn factors(&self) -> Option<(&FiniteGroup, &FiniteGroup)> {
        self.0.factors.as_ref().map(|(a, b)| (a, b))
    }

    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        let mut result = self.identity();
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let e = self.identity();
        let mut k = 1;
        let mut y = x;
        while y != e {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|x| self.element_order(x)).collect()
    }

    /// The exponent together with the order of every element.
    pub fn exponent_and_element_orders(&self) -> (usize, Vec<usize>) {
        let orders = self.element_orders();
        let exp = orders.iter().fold(1, |acc, &o| lcm(acc, o));
        (exp, orders)
    }

    pub fn exponent(&self) -> usize {
        self.exponent_and_element_orders().0
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The exponent `k` with `(x^m)^k = x`; exists exactly when `m` is
    /// coprime to the order of `x`.
    pub fn coprime_witness(&self, x: usize, m: usize) -> Result<usize> {
        let o = self.element_order(x);
        if gcd(o, m) != 1 {
            return Err(Error::Precondition(format!(
                "gcd(ord({x}) = {o}, {m}) is not 1"
            )));
        }
        if o == 1 {
            return Ok(1);
        }
        Ok(mod_inverse(m % o, o).expect("coprime residues are invertible"))
    }

    /// Recovers `x` from `x^m` by a further power, for `m` coprime to `ord(x)`.
    pub fn coprime_component(&self, x: usize, m: usize) -> Result<usize> {
        let k = self.coprime_witness(x, m)?;
        Ok(self.pow(self.pow(x, m), k))
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

fn mod_inverse(a: usize, m: usize) -> Option<usize> {
    (1..=m).find(|&k| (a * k) % m == 1 % m)
}

pub fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}
