//! Text, DOT and JSON renderings of a finite set of tree nodes.

use std::fmt::Write as _;

use serde::Serialize;

use super::{ChildKind, Provenance, TreeNode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExportFormat {
    Text,
    Dot,
    Json,
}

/// Flat record of a node. `parent`, `kind` and `t` are null for the root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeRecord {
    pub composition: Vec<u64>,
    pub depth: usize,
    pub parent: Option<Vec<u64>>,
    pub kind: Option<ChildKind>,
    pub t: Option<usize>,
}

impl From<&TreeNode> for NodeRecord {
    fn from(node: &TreeNode) -> Self {
        let (parent, kind, t) = match &node.provenance {
            Provenance::Root => (None, None, None),
            Provenance::Child { parent, kind, t } => {
                (Some(parent.parts().to_vec()), Some(*kind), Some(*t))
            }
        };
        NodeRecord {
            composition: node.composition.parts().to_vec(),
            depth: node.depth,
            parent,
            kind,
            t,
        }
    }
}

pub fn to_records(nodes: &[TreeNode]) -> Vec<NodeRecord> {
    nodes.iter().map(NodeRecord::from).collect()
}

/// One node per line, as printed by `TreeNode`'s `Display`.
pub fn to_text(nodes: &[TreeNode]) -> String {
    let mut out = String::new();
    for node in nodes {
        writeln!(out, "{node}").unwrap();
    }
    out
}

/// ```text
/// digraph circular {
///   "1,1";
///   "1,1" -> "2,1" [label="T1:t=1"];
/// }
/// ```
pub fn to_dot(nodes: &[TreeNode]) -> String {
    let mut out = String::from("digraph circular {\n");
    for node in nodes {
        writeln!(out, "  \"{}\";", node.composition).unwrap();
    }
    for node in nodes {
        if let Provenance::Child { parent, kind, t } = &node.provenance {
            writeln!(
                out,
                "  \"{parent}\" -> \"{}\" [label=\"{}:t={t}\"];",
                node.composition,
                kind.short()
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// JSON array of [`NodeRecord`]s, one record per line.
pub fn to_json(nodes: &[TreeNode]) -> String {
    let records: Vec<String> = to_records(nodes)
        .iter()
        .map(|r| serde_json::to_string(r).expect("records serialize"))
        .collect();
    if records.is_empty() {
        return "[]\n".to_string();
    }
    format!("[\n  {}\n]\n", records.join(",\n  "))
}

pub fn export_tree(nodes: &[TreeNode], format: ExportFormat) -> String {
    match format {
        ExportFormat::Text => to_text(nodes),
        ExportFormat::Dot => to_dot(nodes),
        ExportFormat::Json => to_json(nodes),
    }
}
