//! Colored DOT and GraphML exports for external layout tools.
//!
//! Core nodes are blue, intermediate light yellow, peripheral red. Node
//! size is proportional to `max(cip_deg, 1)`, scaled so the largest node
//! is 2.0, and floored at 0.2.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::cip::{CipRecord, NodeClass};
use crate::error::{CipError, Result};
use crate::graph::Graph;
use crate::pipeline::NetworkReport;

pub const MIN_SIZE: f64 = 0.2;
pub const MAX_SIZE: f64 = 2.0;

pub fn class_color(class: NodeClass) -> &'static str {
    match class {
        NodeClass::Core => "blue",
        NodeClass::Intermediate => "lightyellow",
        NodeClass::Peripheral => "red",
    }
}

/// Records indexed by graph node, after checking both cover the same labels.
fn align<'a>(report: &'a NetworkReport, g: &Graph) -> Result<Vec<&'a CipRecord>> {
    if report.records.len() != g.node_count() {
        return Err(CipError::Validation(format!(
            "report has {} nodes but graph has {}",
            report.records.len(),
            g.node_count()
        )));
    }
    let by_label: HashMap<&str, &CipRecord> = report
        .records
        .iter()
        .map(|r| (r.node.as_str(), r))
        .collect();
    g.labels()
        .iter()
        .map(|l| {
            by_label.get(l.as_str()).copied().ok_or_else(|| {
                CipError::Validation(format!("graph node {l} is missing from the report"))
            })
        })
        .collect()
}

fn sizes(records: &[&CipRecord]) -> Vec<f64> {
    let weight = |r: &CipRecord| r.angle_deg.max(1.0);
    let top = records.iter().map(|r| weight(r)).fold(1.0, f64::max);
    records
        .iter()
        .map(|r| (MAX_SIZE * weight(r) / top).max(MIN_SIZE))
        .collect()
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

pub fn to_dot(report: &NetworkReport, g: &Graph) -> Result<String> {
    let recs = align(report, g)?;
    let sizes = sizes(&recs);
    let mut out = String::from("graph cip {\n  node [style=filled, shape=circle];\n");
    for (v, rec) in recs.iter().enumerate() {
        let _ = writeln!(
            out,
            "  {} [color={}, width={:.4}, height={:.4}, cip={:.4}, class={}];",
            dot_id(g.label(v)),
            class_color(rec.class),
            sizes[v],
            sizes[v],
            rec.angle_deg,
            rec.class
        );
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", dot_id(g.label(u)), dot_id(g.label(v)));
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn to_graphml(report: &NetworkReport, g: &Graph) -> Result<String> {
    let recs = align(report, g)?;
    let sizes = sizes(&recs);
    let mut out = String::from(concat!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n",
        "  <key id=\"class\" for=\"node\" attr.name=\"class\" attr.type=\"string\"/>\n",
        "  <key id=\"color\" for=\"node\" attr.name=\"color\" attr.type=\"string\"/>\n",
        "  <key id=\"cip\" for=\"node\" attr.name=\"cip\" attr.type=\"double\"/>\n",
        "  <key id=\"size\" for=\"node\" attr.name=\"size\" attr.type=\"double\"/>\n",
        "  <graph id=\"cip\" edgedefault=\"undirected\">\n",
    ));
    for (v, rec) in recs.iter().enumerate() {
        let _ = writeln!(
            out,
            "    <node id=\"{}\"><data key=\"class\">{}</data><data key=\"color\">{}</data>\
             <data key=\"cip\">{}</data><data key=\"size\">{:.4}</data></node>",
            xml_escape(g.label(v)),
            rec.class,
            class_color(rec.class),
            rec.angle_deg,
            sizes[v]
        );
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(
            out,
            "    <edge source=\"{}\" target=\"{}\"/>",
            xml_escape(g.label(u)),
            xml_escape(g.label(v))
        );
    }
    out.push_str("  </graph>\n</graphml>\n");
    Ok(out)
}
