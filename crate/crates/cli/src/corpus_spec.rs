//! Corpus files: named group constructions, suites to run and cap
//! overrides.
//!
//! ```json
//! {
//!   "groups": ["Z 6", {"constructor": "D", "params": [4]},
//!              {"product": ["Z 3", "Q8"]},
//!              {"name": "V4", "order": 4, "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}],
//!   "suites": ["merzon", "oct11"],
//!   "caps": {"enumeration_order": 72}
//! }
//! ```

use serde::Deserialize;
use toplat::caps::HARD_MAX_ORDER;
use toplat::corpus::Entry;
use toplat::group::{parse_group, GroupJson};
use toplat::{Caps, Error, Result};

use crate::suites::Suite;

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum GroupEntry {
    Notation(String),
    Construction {
        constructor: String,
        #[serde(default)]
        params: Vec<usize>,
    },
    Product {
        product: Vec<GroupEntry>,
    },
    Table {
        #[serde(default)]
        name: Option<String>,
        #[serde(flatten)]
        table: GroupJson,
    },
}

impl GroupEntry {
    /// The equivalent notation, when the entry has one.
    fn notation(&self) -> Option<String> {
        match self {
            GroupEntry::Notation(s) => Some(s.clone()),
            GroupEntry::Construction {
                constructor,
                params,
            } => Some(
                std::iter::once(constructor.clone())
                    .chain(params.iter().map(usize::to_string))
                    .collect::<Vec<_>>()
                    .join(" "),
            ),
            GroupEntry::Product { product } => {
                let parts: Option<Vec<String>> = product.iter().map(GroupEntry::notation).collect();
                parts.map(|p| p.join(" x "))
            }
            GroupEntry::Table { .. } => None,
        }
    }

    fn resolve(self, index: usize, caps: &Caps) -> Result<Entry> {
        if let Some(text) = self.notation() {
            return Ok(Entry {
                group: parse_group(&text)?,
                name: text,
            });
        }
        match self {
            GroupEntry::Table { name, table } => Ok(Entry {
                name: name.unwrap_or_else(|| format!("table {index}")),
                group: table.into_group_with(caps)?,
            }),
            _ => Err(Error::InvalidArgument(format!(
                "group entry {index} mixes a table into a product"
            ))),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusSpec {
    pub groups: Vec<GroupEntry>,
    #[serde(default)]
    pub suites: Vec<Suite>,
    #[serde(default)]
    pub caps: Option<Caps>,
}

pub struct Corpus {
    pub entries: Vec<Entry>,
    pub suites: Vec<Suite>,
    pub caps: Option<Caps>,
}

impl CorpusSpec {
    pub fn load(path: &std::path::Path) -> Result<Corpus> {
        let spec: CorpusSpec = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        if let Some(c) = &spec.caps {
            c.validate()?;
        }
        let caps = spec.caps.unwrap_or_default();
        let entries = spec
            .groups
            .into_iter()
            .enumerate()
            .map(|(i, g)| g.resolve(i, &caps))
            .collect::<Result<Vec<_>>>()?;
        if let Some(e) = entries.iter().find(|e| e.order() > HARD_MAX_ORDER) {
            return Err(Error::InvalidArgument(format!("{} is too large", e.name)));
        }
        Ok(Corpus {
            entries,
            suites: spec.suites,
            caps: spec.caps,
        })
    }
}
