//! JSON group descriptions.
//!
//! ```json
//! {"factors": [{"type": "klein4"}, {"type": "cyclic", "order": 2}]}
//! ```
//!
//! A `table` factor gives `elements` (names, identity first) and `table`, where
//! `table[g][h]` is the index of `g·h`. An optional `name` labels each factor.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::FactorGroup;
use crate::word::GroupContext;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FactorSpec {
    Cyclic {
        order: usize,
    },
    Table {
        #[serde(default)]
        name: Option<String>,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
    },
    Klein4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpecFile {
    pub factors: Vec<FactorSpec>,
}

impl FactorSpec {
    pub fn build(&self, index: usize) -> Result<FactorGroup> {
        match self {
            FactorSpec::Cyclic { order } => FactorGroup::cyclic(*order),
            FactorSpec::Klein4 => Ok(FactorGroup::klein4()),
            FactorSpec::Table {
                name,
                elements,
                table,
            } => FactorGroup::from_table(
                name.clone().unwrap_or_else(|| format!("G{index}")),
                elements.clone(),
                table.clone(),
            ),
        }
    }
}

impl GroupSpecFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::GroupFile(e.to_string()))
    }

    pub fn build(&self) -> Result<GroupContext> {
        let factors = self
            .factors
            .iter()
            .enumerate()
            .map(|(i, f)| f.build(i))
            .collect::<Result<Vec<_>>>()?;
        GroupContext::new(factors)
    }
}

/// Parses and validates a group description.
pub fn load_group(text: &str) -> Result<GroupContext> {
    GroupSpecFile::parse(text)?.build()
}
