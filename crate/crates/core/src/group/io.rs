//! Multiplication tables as JSON files.
//!
//! The on-disk shape is `{"name", "order", "labels", "table"}` with the
//! table as rows of element ids. Unknown keys are ignored. Loading runs the
//! full validator, so a loaded group satisfies the same invariants as a
//! constructed one; if the file's identity is not id 0, elements are
//! re-indexed on the way in.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Elem, Group, Limits};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct TableFile {
    name: String,
    order: usize,
    labels: Vec<String>,
    table: Vec<Vec<Elem>>,
}

pub fn group_from_json(text: &str) -> Result<Group> {
    group_from_json_limited(text, &Limits::default())
}

pub fn group_from_json_limited(text: &str, limits: &Limits) -> Result<Group> {
    let file: TableFile = serde_json::from_str(text)?;
    if file.order != file.table.len() {
        return Err(Error::Validation {
            axiom: "shape",
            detail: format!(
                "declared order {} but table has {} rows",
                file.order,
                file.table.len()
            ),
        });
    }
    if file.order > limits.max_order {
        return Err(Error::Resource(format!(
            "group order {} exceeds the cap of {}",
            file.order, limits.max_order
        )));
    }
    Group::from_table(&file.name, file.labels, file.table)
}

pub fn group_to_json(g: &Group) -> String {
    let file = TableFile {
        name: g.name().to_string(),
        order: g.order(),
        labels: g.labels().to_vec(),
        table: g.table_rows(),
    };
    serde_json::to_string_pretty(&file).expect("table serializes")
}

pub fn load_group(path: &Path) -> Result<Group> {
    load_group_limited(path, &Limits::default())
}

pub fn load_group_limited(path: &Path, limits: &Limits) -> Result<Group> {
    let text = fs::read_to_string(path)?;
    group_from_json_limited(&text, limits)
}

pub fn save_group(g: &Group, path: &Path) -> Result<()> {
    fs::write(path, group_to_json(g))?;
    Ok(())
}
