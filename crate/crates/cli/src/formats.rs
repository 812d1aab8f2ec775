//! JSON network, evidence and importance-table files.
//!
//! A network file is one object with `name` and `nodes`; each node has `id`,
//! `states`, `parents` and `cpt`. CPT rows follow the parent configurations in
//! mixed-radix order, first parent most significant. Evidence maps node ids to
//! state names; an importance-table (ICPT) file maps node ids to CPT-shaped
//! row arrays.

use std::collections::BTreeMap;

use qmcbn_core::bn::{BayesNet, Evidence, NodeSpec};
use qmcbn_core::sampling::{load_isf_table, TableImportance};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NetworkFile {
    name: String,
    nodes: Vec<NodeEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeEntry {
    id: String,
    states: Vec<String>,
    parents: Vec<String>,
    cpt: Vec<Vec<f64>>,
}

fn syntax(what: &'static str, e: serde_json::Error) -> Error {
    Error::Format {
        what,
        at: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

pub fn parse_network(text: &str) -> Result<BayesNet> {
    let file: NetworkFile = serde_json::from_str(text).map_err(|e| syntax("network", e))?;
    let specs = file
        .nodes
        .into_iter()
        .map(|n| NodeSpec { id: n.id, states: n.states, parents: n.parents, cpt: n.cpt })
        .collect();
    BayesNet::new(file.name, specs).map_err(|e| match e {
        qmcbn_core::Error::Network { at, fault, detail } => Error::Format {
            what: "network",
            at,
            message: format!("{fault:?}: {detail}"),
        },
        other => Error::Core(other),
    })
}

/// Canonical text of a network: pretty JSON, declaration order, normalized rows.
pub fn serialize_network(net: &BayesNet) -> String {
    let file = NetworkFile {
        name: net.name().to_string(),
        nodes: net
            .to_specs()
            .into_iter()
            .map(|s| NodeEntry { id: s.id, states: s.states, parents: s.parents, cpt: s.cpt })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("network serializes");
    text.push('\n');
    text
}

pub fn parse_evidence(text: &str, net: &BayesNet) -> Result<Evidence> {
    let map: BTreeMap<String, String> = serde_json::from_str(text).map_err(|e| syntax("evidence", e))?;
    let mut ev = Evidence::new();
    for (id, state) in &map {
        ev.observe(net, id, state).map_err(|e| Error::Format {
            what: "evidence",
            at: format!("entry `{id}`"),
            message: e.to_string(),
        })?;
    }
    Ok(ev)
}

pub fn parse_icpt_tables(text: &str) -> Result<BTreeMap<String, Vec<Vec<f64>>>> {
    serde_json::from_str(text).map_err(|e| syntax("importance table", e))
}

pub fn parse_icpt<'a>(text: &str, net: &'a BayesNet, evidence: &Evidence) -> Result<TableImportance<'a>> {
    let tables = parse_icpt_tables(text)?;
    Ok(load_isf_table(&tables, net, evidence)?)
}

pub fn load_network(path: &std::path::Path) -> Result<BayesNet> {
    parse_network(&crate::error::read_file(path)?)
}

pub fn load_evidence(path: &std::path::Path, net: &BayesNet) -> Result<Evidence> {
    parse_evidence(&crate::error::read_file(path)?, net)
}
