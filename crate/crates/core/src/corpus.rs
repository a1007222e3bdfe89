//! The standard list of named test groups, in the notation of
//! [`parse_group`](crate::group::parse_group).

use crate::error::Result;
use crate::group::{nilpotency_class, parse_group, FiniteGroup};

/// Orders of the mixed abelian products and nonabelian groups listed here
/// reach 72; callers filter by order before enumerating.
const MIXED_ABELIAN: &[&str] = &[
    "Z 2 x Z 4",
    "Z 2 x Z 6",
    "Z 2 x Z 8",
    "Z 4 x Z 4",
    "Z 2 x Z 10",
    "Z 2 x Z 2 x Z 4",
    "Z 2 x Z 12",
    "Z 2 x Z 14",
    "Z 2 x Z 16",
    "Z 3 x Z 6",
    "Z 3 x Z 9",
    "Z 2 x Z 18",
    "Z 2 x Z 20",
    "Z 2 x Z 4 x Z 4",
    "Z 2 x Z 2 x Z 8",
    "Z 2 x Z 2 x Z 2 x Z 4",
    "Z 4 x Z 8",
    "Z 6 x Z 6",
    "Z 3 x Z 12",
    "Z 5 x Z 10",
    "Z 2 x Z 32",
    "Z 4 x Z 16",
    "Z 8 x Z 8",
    "Z 2 x Z 4 x Z 8",
    "Z 4 x Z 4 x Z 4",
];

const ELEMENTARY: &[&str] = &[
    "Z^k 2 2", "Z^k 2 3", "Z^k 2 4", "Z^k 2 5", "Z^k 2 6", "Z^k 3 2", "Z^k 3 3", "Z^k 5 2",
    "Z^k 7 2",
];

const NONABELIAN: &[&str] = &[
    "S 3",
    "D 4",
    "Q8",
    "D 5",
    "D 6",
    "D 7",
    "D 8",
    "Heis 2",
    "Z 2 x D 4",
    "Z 2 x Q8",
    "Z 3 x S 3",
    "D 12",
    "S 4",
    "Heis 3",
    "Z 3 x Q8",
    "Z 3 x D 4",
    "Z 3 x Heis 2",
    "Z 5 x Q8",
    "Z^k 3 2 x D 4",
];

/// A corpus group and its notation.
#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub group: FiniteGroup,
}

impl Entry {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(Entry {
            name: name.to_string(),
            group: parse_group(name)?,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.group.is_abelian()
    }

    pub fn is_nilpotent(&self) -> bool {
        nilpotency_class(&self.group).is_some()
    }
}

/// Names of every standard corpus group: cyclic groups of order 1 to 64,
/// then elementary abelian, mixed abelian and nonabelian groups.
pub fn standard_names() -> Vec<String> {
    (1..=64)
        .map(|n| format!("Z {n}"))
        .chain(
            ELEMENTARY
                .iter()
                .chain(MIXED_ABELIAN)
                .chain(NONABELIAN)
                .map(|s| s.to_string()),
        )
        .collect()
}

/// Builds the standard corpus groups of order at most `max_order`.
pub fn standard(max_order: usize) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for name in standard_names() {
        let e = Entry::parse(&name)?;
        if e.order() <= max_order {
            out.push(e);
        }
    }
    Ok(out)
}

pub fn abelian(max_order: usize) -> Result<Vec<Entry>> {
    Ok(standard(max_order)?
        .into_iter()
        .filter(Entry::is_abelian)
        .collect())
}

pub fn nilpotent(max_order: usize) -> Result<Vec<Entry>> {
    Ok(standard(max_order)?
        .into_iter()
        .filter(Entry::is_nilpotent)
        .collect())
}

/// Builds groups from explicit names, in order.
pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Vec<Entry>> {
    names.iter().map(|n| Entry::parse(n.as_ref())).collect()
}
