//! Text renderings of a power graph. All three formats are deterministic:
//! vertices in position order, edges ascending.

use std::fmt::Write;

use serde::Serialize;

use super::{PowerGraph, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    EdgeList,
    Json,
}

pub fn export_graph(pg: &PowerGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(pg),
        ExportFormat::EdgeList => to_edge_list(pg),
        ExportFormat::Json => to_json(pg),
    }
}

/// Edges (arcs for the directed variant) as ascending `(u, v)` position
/// pairs; undirected edges are listed once with `u < v`.
fn edge_pairs(pg: &PowerGraph) -> Vec<(usize, usize)> {
    let directed = pg.variant() == Variant::Directed;
    let mut out = Vec::with_capacity(pg.edge_count());
    for (u, row) in pg.adjacency().iter().enumerate() {
        for v in row.iter() {
            if directed || u < v {
                out.push((u, v));
            }
        }
    }
    out
}

fn to_dot(pg: &PowerGraph) -> String {
    let directed = pg.variant() == Variant::Directed;
    let (keyword, arrow) = if directed {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    let mut out = String::new();
    let _ = writeln!(out, "{keyword} G {{");
    for v in 0..pg.vertex_count() {
        let x = pg.element(v);
        let _ = writeln!(
            out,
            "  v{v} [label=\"{} (o={})\"];",
            pg.group().label(x),
            pg.group().order_of(x)
        );
    }
    for (u, v) in edge_pairs(pg) {
        let _ = writeln!(out, "  v{u} {arrow} v{v};");
    }
    out.push_str("}\n");
    out
}

/// `p <vertices> <edges>` header, then one `u v` line per edge.
fn to_edge_list(pg: &PowerGraph) -> String {
    let pairs = edge_pairs(pg);
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", pg.vertex_count(), pairs.len());
    for (u, v) in pairs {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[derive(Serialize)]
struct GraphJson<'a> {
    group: &'a str,
    variant: &'a str,
    vertices: Vec<VertexJson<'a>>,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct VertexJson<'a> {
    id: usize,
    label: &'a str,
    order: u32,
}

fn to_json(pg: &PowerGraph) -> String {
    let vertices = (0..pg.vertex_count())
        .map(|v| {
            let x = pg.element(v);
            VertexJson {
                id: v,
                label: pg.group().label(x),
                order: pg.group().order_of(x),
            }
        })
        .collect();
    let doc = GraphJson {
        group: pg.group().name(),
        variant: pg.variant().as_str(),
        vertices,
        edges: edge_pairs(pg).into_iter().map(|(u, v)| [u, v]).collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("graph serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::families::make_cyclic;

    #[test]
    fn dot_of_reduced_c3() {
        let g = make_cyclic(3).unwrap();
        let pg = PowerGraph::reduced(&g);
        let dot = export_graph(&pg, ExportFormat::Dot);
        let want =
            "graph G {\n  v0 [label=\"a (o=3)\"];\n  v1 [label=\"a^2 (o=3)\"];\n  v0 -- v1;\n}\n";
        assert_eq!(dot, want);
    }

    #[test]
    fn dot_directed_uses_arrows() {
        let g = make_cyclic(3).unwrap();
        let pg = PowerGraph::directed(&g);
        let dot = export_graph(&pg, ExportFormat::Dot);
        assert!(dot.starts_with("digraph G {"));
        assert!(dot.contains("v1 -> v2;"));
        assert!(!dot.contains("--"));
    }

    #[test]
    fn edge_list_header_counts() {
        let g = make_cyclic(12).unwrap();
        let pg = PowerGraph::reduced(&g);
        let text = export_graph(&pg, ExportFormat::EdgeList);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("p 11 45"));
        assert_eq!(text.lines().count(), 46);
        // Edges ascending.
        let pairs: Vec<(usize, usize)> = text
            .lines()
            .skip(1)
            .map(|l| {
                let mut it = l.split(' ');
                (
                    it.next().unwrap().parse().unwrap(),
                    it.next().unwrap().parse().unwrap(),
                )
            })
            .collect();
        let mut sorted = pairs.clone();
        sorted.sort_unstable();
        assert_eq!(pairs, sorted);
        assert!(pairs.iter().all(|&(u, v)| u < v));
    }

    #[test]
    fn json_export_shape() {
        let g = make_cyclic(4).unwrap();
        let pg = PowerGraph::reduced(&g);
        let text = export_graph(&pg, ExportFormat::Json);
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["group"], "C4");
        assert_eq!(doc["variant"], "reduced");
        assert_eq!(doc["vertices"].as_array().unwrap().len(), 3);
        assert_eq!(doc["vertices"][0]["label"], "a");
        assert_eq!(doc["vertices"][0]["order"], 4);
        assert_eq!(doc["edges"].as_array().unwrap().len(), 3);
    }
}
