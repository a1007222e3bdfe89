use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};

use super::FiniteGroup;

/// `{ "order": n, "table": [[...]], "names": [...] }`, 0-based indices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl GroupJson {
    pub fn from_group(group: &FiniteGroup) -> Self {
        GroupJson {
            order: group.order(),
            table: group.table(),
            names: group.names().map(|n| n.to_vec()),
        }
    }

    /// Validates every group invariant, associativity included.
    pub fn into_group(self) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::InvalidArgument(format!(
                "declared order {} but table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        FiniteGroup::from_table(self.table, self.names, usize::MAX)
    }

    pub fn into_group_with(self, caps: &Caps) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::InvalidArgument(format!(
                "declared order {} but table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        FiniteGroup::from_table(self.table, self.names, caps.associativity_check_order)
    }

    pub fn parse(text: &str) -> Result<FiniteGroup> {
        let parsed: GroupJson = serde_json::from_str(text)?;
        parsed.into_group()
    }
}
