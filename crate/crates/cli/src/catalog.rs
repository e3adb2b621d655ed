//! The built-in catalog of small groups.

use flexgroup::{parse_group_spec, FiniteGroup, Result};
use serde::{Deserialize, Serialize};

const CATALOG_JSON: &str = include_str!("../data/catalog.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_note: Option<String>,
    #[serde(default)]
    pub tags: Vec<String>,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<FiniteGroup> {
        parse_group_spec(&self.spec)
    }

    pub fn has_any_tag(&self, tags: &[String]) -> bool {
        tags.is_empty() || self.tags.iter().any(|t| tags.contains(t))
    }
}

#[derive(Deserialize)]
struct Manifest {
    schema: u32,
    entries: Vec<CatalogEntry>,
}

/// Entries in manifest order.
pub fn catalog() -> Vec<CatalogEntry> {
    let m: Manifest = serde_json::from_str(CATALOG_JSON).expect("shipped catalog is valid JSON");
    assert_eq!(m.schema, 1, "catalog schema");
    m.entries
}

/// Entries with their groups, keeping those of order at most `max_order`
/// and carrying at least one of `tags` (all entries when `tags` is empty).
pub fn select(max_order: Option<usize>, tags: &[String]) -> Result<Vec<(CatalogEntry, FiniteGroup)>> {
    let mut out = Vec::new();
    for e in catalog() {
        if !e.has_any_tag(tags) {
            continue;
        }
        let g = e.build()?;
        if max_order.is_none_or(|m| g.order() <= m) {
            out.push((e, g));
        }
    }
    Ok(out)
}
