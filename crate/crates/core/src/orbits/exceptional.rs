//! Curated orbit tables for the exceptional types.
//!
//! A table document is JSON of the shape
//! `{ "group": "E6", "classes": [ { "label": "A1", "diagram": [0,1,0,0,0,0], "index": 1 }, ... ] }`
//! with diagram entries in Bourbaki node order. The optional `index` field is
//! a published Dynkin index kept purely as a cross-check against the value the
//! crate computes; it is never used as the computed value.
//!
//! Tables for G2, F4, E6, E7 and E8 are bundled with the crate. A directory of
//! replacement documents (`g2.json`, ..., `e8.json`) can be supplied through
//! [`TableStore::with_dir`] or the `ORBIT_DATA_DIR` environment variable of
//! the CLI.

use std::collections::HashSet;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_data::GroupType;

use super::{UnipotentClass, WeightedDiagram};

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawTable {
    group: String,
    classes: Vec<RawEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawEntry {
    label: String,
    diagram: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<u64>,
}

/// One table row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTableEntry {
    pub label: String,
    pub diagram: WeightedDiagram,
    /// Published Dynkin index, cross-check only.
    pub published_index: Option<u64>,
}

/// The loaded (and validated) orbit table of one exceptional group.
#[derive(Debug, Clone)]
pub struct OrbitTable {
    group: GroupType,
    entries: Vec<OrbitTableEntry>,
}

impl OrbitTable {
    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn entries(&self) -> &[OrbitTableEntry] {
        &self.entries
    }

    pub fn class(&self, group: GroupType, label: &str) -> Result<UnipotentClass> {
        if group != self.group {
            return Err(Error::SchemaViolation(format!(
                "table is for {}, not {group}",
                self.group
            )));
        }
        let wanted = normalize_label(label);
        if wanted == "0" {
            return Ok(UnipotentClass::trivial(group));
        }
        self.entries
            .iter()
            .find(|e| normalize_label(&e.label) == wanted)
            .map(|e| UnipotentClass::from_table_entry(group, e.label.clone(), e.diagram.clone()))
            .ok_or_else(|| Error::UnknownLabel {
                group: group.to_string(),
                label: label.to_string(),
            })
    }

    pub fn classes(&self, group: GroupType) -> Result<Vec<UnipotentClass>> {
        if group != self.group {
            return Err(Error::SchemaViolation(format!(
                "table is for {}, not {group}",
                self.group
            )));
        }
        Ok(self
            .entries
            .iter()
            .map(|e| UnipotentClass::from_table_entry(group, e.label.clone(), e.diagram.clone()))
            .collect())
    }

    pub fn published_index(&self, label: &str) -> Option<u64> {
        let wanted = normalize_label(label);
        self.entries
            .iter()
            .find(|e| normalize_label(&e.label) == wanted)
            .and_then(|e| e.published_index)
    }
}

/// Case- and notation-insensitive label lookup: `A1~`, `A~1` and `Ã1` agree,
/// as do ASCII and typographic primes.
pub fn normalize_label(label: &str) -> String {
    label
        .trim()
        .replace('\u{2032}', "'") // prime
        .replace('\u{2033}', "''") // double prime
        .replace("A~", "Ã")
        .replace("~A", "Ã")
        .replace(' ', "")
}

/// Parse and validate a table document.
pub fn load_exceptional_table(raw: &str) -> Result<OrbitTable> {
    let raw: RawTable = serde_json::from_str(raw)
        .map_err(|e| Error::SchemaViolation(format!("not a table document: {e}")))?;
    let group = GroupType::parse(&raw.group)
        .map_err(|_| Error::SchemaViolation(format!("unknown group `{}`", raw.group)))?;
    if !group.is_exceptional() {
        return Err(Error::SchemaViolation(format!(
            "orbit tables are for exceptional groups, got {group}"
        )));
    }
    if raw.classes.is_empty() {
        return Err(Error::SchemaViolation("empty class list".into()));
    }
    let mut seen = HashSet::new();
    let mut entries = Vec::with_capacity(raw.classes.len());
    for entry in raw.classes {
        if entry.diagram.len() != group.rank() {
            return Err(Error::SchemaViolation(format!(
                "class {}: diagram length {} != rank {}",
                entry.label,
                entry.diagram.len(),
                group.rank()
            )));
        }
        if entry.diagram.iter().any(|&w| !(0..=2).contains(&w)) {
            return Err(Error::SchemaViolation(format!(
                "class {}: diagram entry outside 0..=2",
                entry.label
            )));
        }
        if entry.label == "0" || entry.diagram.iter().all(|&w| w == 0) {
            return Err(Error::SchemaViolation(format!(
                "class {}: tables list nontrivial classes only",
                entry.label
            )));
        }
        if !seen.insert(normalize_label(&entry.label)) {
            return Err(Error::SchemaViolation(format!(
                "duplicate label {}",
                entry.label
            )));
        }
        entries.push(OrbitTableEntry {
            label: entry.label,
            diagram: WeightedDiagram::new(entry.diagram.iter().map(|&w| w as u8).collect())?,
            published_index: entry.index,
        });
    }
    Ok(OrbitTable { group, entries })
}

/// Serialise a table back to its JSON document form.
pub fn table_to_json(table: &OrbitTable) -> String {
    let raw = RawTable {
        group: table.group.to_string(),
        classes: table
            .entries
            .iter()
            .map(|e| RawEntry {
                label: e.label.clone(),
                diagram: e.diagram.as_i64(),
                index: e.published_index,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("table serialises")
}

pub(crate) fn table_from_parts(group: GroupType, entries: Vec<OrbitTableEntry>) -> OrbitTable {
    OrbitTable { group, entries }
}

/// The orbit table bundled with the crate.
pub fn builtin_table(g: GroupType) -> Result<OrbitTable> {
    let doc = match g.to_string().as_str() {
        "G2" => include_str!("../../data/g2.json"),
        "F4" => include_str!("../../data/f4.json"),
        "E6" => include_str!("../../data/e6.json"),
        "E7" => include_str!("../../data/e7.json"),
        "E8" => include_str!("../../data/e8.json"),
        other => return Err(Error::MissingTable(other.to_string())),
    };
    load_exceptional_table(doc)
}

/// Source of orbit tables: bundled data, optionally overridden by documents
/// in a directory (`g2.json`, `f4.json`, `e6.json`, `e7.json`, `e8.json`).
#[derive(Debug, Clone, Default)]
pub struct TableStore {
    dir: Option<PathBuf>,
}

impl TableStore {
    pub fn builtin() -> Self {
        Self { dir: None }
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        Self {
            dir: Some(dir.into()),
        }
    }

    pub fn get(&self, g: GroupType) -> Result<OrbitTable> {
        if let Some(dir) = &self.dir {
            let path = dir.join(format!("{}.json", g.to_string().to_lowercase()));
            if !path.exists() {
                return Err(Error::MissingTable(format!(
                    "{} (looked for {})",
                    g,
                    path.display()
                )));
            }
            let doc = std::fs::read_to_string(&path)?;
            let table = load_exceptional_table(&doc)?;
            if table.group() != g {
                return Err(Error::SchemaViolation(format!(
                    "{} declares group {}",
                    path.display(),
                    table.group()
                )));
            }
            return Ok(table);
        }
        builtin_table(g)
    }
}
