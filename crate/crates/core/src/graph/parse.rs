use super::{Graph, GraphBuilder};
use crate::error::{CipError, Result};

/// Parses a whitespace-separated edge list.
///
/// Blank lines and lines starting with `#` or `%` are skipped. Every other
/// line must hold exactly two labels. Duplicate and reversed edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [a, c] = tokens[..] else {
            return Err(CipError::Parse {
                line: line_no,
                message: format!("expected two node labels, found {}", tokens.len()),
            });
        };
        if a == c {
            return Err(CipError::Validation(format!(
                "self-loop on node {a} at line {line_no}"
            )));
        }
        b.add_edge(a, c)?;
    }
    Ok(b.build())
}

/// Reads an undirected GraphML document. Node ids become labels; nodes
/// declared without edges are kept. Directed graphs or edges are rejected.
pub fn parse_graphml(text: &str) -> Result<Graph> {
    let doc = roxmltree::Document::parse(text).map_err(|e| CipError::Parse {
        line: e.pos().row as usize,
        message: e.to_string(),
    })?;
    let line_of = |node: roxmltree::Node| doc.text_pos_at(node.range().start).row as usize;

    let graph = doc
        .descendants()
        .find(|n| n.has_tag_name("graph"))
        .ok_or_else(|| CipError::Validation("GraphML document has no <graph> element".into()))?;
    if graph.attribute("edgedefault") == Some("directed") {
        return Err(CipError::Validation(
            "directed GraphML graphs are not supported".into(),
        ));
    }

    let mut b = GraphBuilder::new();
    for node in graph.children().filter(|n| n.has_tag_name("node")) {
        let id = node.attribute("id").ok_or_else(|| CipError::Parse {
            line: line_of(node),
            message: "<node> without id".into(),
        })?;
        b.add_node(id);
    }
    for edge in graph.children().filter(|n| n.has_tag_name("edge")) {
        let line = line_of(edge);
        if let Some(d) = edge.attribute("directed") {
            if d != "false" {
                return Err(CipError::Validation(format!(
                    "directed edge at line {line} is not supported"
                )));
            }
        }
        let (Some(s), Some(t)) = (edge.attribute("source"), edge.attribute("target")) else {
            return Err(CipError::Parse {
                line,
                message: "<edge> needs source and target".into(),
            });
        };
        if s == t {
            return Err(CipError::Validation(format!(
                "self-loop on node {s} at line {line}"
            )));
        }
        b.add_edge(s, t)?;
    }
    Ok(b.build())
}
