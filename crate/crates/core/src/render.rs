//! JSON, CSV and plain-table renderings of an [`Analysis`].
//!
//! All three share one rounding rule: with `precision = Some(d)` every real
//! value is rounded to `d` decimals, so the renderings agree value for value.

use std::io::Write;

use serde::Serialize;

use crate::centrality::{csv_err, format_real};
use crate::cip::{Bin, NodeClass};
use crate::error::Result;
use crate::pipeline::Analysis;

/// Decimals used for display unless full precision is requested.
pub const DISPLAY_DECIMALS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

fn round(x: f64, precision: Option<usize>) -> f64 {
    match precision {
        Some(d) => {
            let s = 10f64.powi(d as i32);
            let r = (x * s).round() / s;
            // Avoid "-0.0" in output.
            if r == 0.0 {
                0.0
            } else {
                r
            }
        }
        None => x,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeJson {
    pub node: String,
    pub deg: usize,
    pub evc: f64,
    pub bwc: f64,
    pub clc: f64,
    pub k_core: usize,
    pub coreness: usize,
    pub p_load: f64,
    pub c_load: f64,
    pub cip_deg: f64,
    pub bin: Bin,
    pub class: NodeClass,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NetworkJson {
    pub n: usize,
    pub m: usize,
    pub lambda_sp: f64,
    pub tuple: [f64; 3],
    pub classification: String,
    pub quadrant_reflected_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportJson {
    pub network: NetworkJson,
    pub nodes: Vec<NodeJson>,
}

pub fn network_json(a: &Analysis, precision: Option<usize>) -> NetworkJson {
    let r = &a.report;
    NetworkJson {
        n: r.n,
        m: r.m,
        lambda_sp: round(r.lambda_sp, precision),
        tuple: r.tuple.fractions().map(|f| round(f, precision)),
        classification: r.classification.clone(),
        quadrant_reflected_count: r.quadrant_reflected_count(),
    }
}

/// Node records in rank order.
pub fn node_json(a: &Analysis, precision: Option<usize>) -> Vec<NodeJson> {
    let f = |x| round(x, precision);
    a.report
        .records
        .iter()
        .enumerate()
        .map(|(i, rec)| {
            let v = rec.index;
            NodeJson {
                node: rec.node.clone(),
                deg: a.table.deg[v],
                evc: f(a.table.evc[v]),
                bwc: f(a.table.bwc[v]),
                clc: f(a.table.clc[v]),
                k_core: a.k_core[v],
                coreness: a.coreness[v],
                p_load: f(rec.p_load),
                c_load: f(rec.c_load),
                cip_deg: f(rec.angle_deg),
                bin: rec.bin,
                class: rec.class,
                rank: i + 1,
            }
        })
        .collect()
}

pub fn report_json(a: &Analysis, precision: Option<usize>) -> ReportJson {
    ReportJson {
        network: network_json(a, precision),
        nodes: node_json(a, precision),
    }
}

const NODE_COLUMNS: [&str; 13] = [
    "node", "deg", "evc", "bwc", "clc", "k_core", "coreness", "p_load", "c_load", "cip_deg", "bin",
    "class", "rank",
];

fn node_fields(n: &NodeJson, precision: Option<usize>) -> Vec<String> {
    let f = |x| format_real(x, precision);
    vec![
        n.node.clone(),
        n.deg.to_string(),
        f(n.evc),
        f(n.bwc),
        f(n.clc),
        n.k_core.to_string(),
        n.coreness.to_string(),
        f(n.p_load),
        f(n.c_load),
        f(n.cip_deg),
        n.bin.to_string(),
        n.class.to_string(),
        n.rank.to_string(),
    ]
}

const NETWORK_COLUMNS: [&str; 8] = [
    "n",
    "m",
    "lambda_sp",
    "core_frac",
    "intermediate_frac",
    "peripheral_frac",
    "classification",
    "quadrant_reflected_count",
];

fn network_fields(n: &NetworkJson, precision: Option<usize>) -> Vec<String> {
    let f = |x| format_real(x, precision);
    vec![
        n.n.to_string(),
        n.m.to_string(),
        f(n.lambda_sp),
        f(n.tuple[0]),
        f(n.tuple[1]),
        f(n.tuple[2]),
        n.classification.clone(),
        n.quadrant_reflected_count.to_string(),
    ]
}

/// Full report: network summary plus ranked nodes.
pub fn write_report<W: Write>(
    a: &Analysis,
    format: OutputFormat,
    precision: Option<usize>,
    mut out: W,
) -> Result<()> {
    let report = report_json(a, precision);
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &report).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            {
                let mut w = csv::Writer::from_writer(&mut out);
                w.write_record(NETWORK_COLUMNS).map_err(csv_err)?;
                w.write_record(network_fields(&report.network, precision))
                    .map_err(csv_err)?;
                w.flush()?;
            }
            writeln!(out)?;
            write_nodes_csv(&report.nodes, precision, &mut out)?;
        }
        OutputFormat::Table => {
            let net = &report.network;
            let cols = network_fields(net, precision);
            for (name, value) in NETWORK_COLUMNS.iter().zip(cols) {
                writeln!(out, "{name:<26}{value}")?;
            }
            writeln!(out)?;
            write_nodes_table(&report.nodes, precision, &mut out)?;
        }
    }
    Ok(())
}

/// Ranked node records only.
pub fn write_nodes<W: Write>(
    a: &Analysis,
    format: OutputFormat,
    precision: Option<usize>,
    mut out: W,
) -> Result<()> {
    let nodes = node_json(a, precision);
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &nodes).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => write_nodes_csv(&nodes, precision, out)?,
        OutputFormat::Table => write_nodes_table(&nodes, precision, out)?,
    }
    Ok(())
}

fn write_nodes_csv<W: Write>(nodes: &[NodeJson], precision: Option<usize>, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(NODE_COLUMNS).map_err(csv_err)?;
    for n in nodes {
        w.write_record(node_fields(n, precision)).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn write_nodes_table<W: Write>(nodes: &[NodeJson], precision: Option<usize>, out: W) -> Result<()> {
    let header: Vec<String> = NODE_COLUMNS.iter().map(|s| s.to_string()).collect();
    let rows: Vec<Vec<String>> = nodes.iter().map(|n| node_fields(n, precision)).collect();
    write_aligned(&header, &rows, out)
}

pub(crate) fn write_aligned<W: Write>(
    header: &[String],
    rows: &[Vec<String>],
    mut out: W,
) -> Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    for row in std::iter::once(header).chain(rows.iter().map(|r| r.as_slice())) {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        writeln!(out, "{}", line.join("  ").trim_end())?;
    }
    Ok(())
}

/// Centrality table only, in the chosen format.
pub fn write_metrics<W: Write>(
    a: &Analysis,
    format: OutputFormat,
    precision: Option<usize>,
    mut out: W,
) -> Result<()> {
    write_centrality(&a.table, &a.labels, format, precision, &mut out)
}

pub fn write_centrality<W: Write>(
    table: &crate::centrality::CentralityTable,
    labels: &[String],
    format: OutputFormat,
    precision: Option<usize>,
    mut out: W,
) -> Result<()> {
    match format {
        OutputFormat::Csv => table.write_csv(labels, precision, out)?,
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                node: &'a str,
                deg: usize,
                evc: f64,
                bwc: f64,
                clc: f64,
            }
            let rows: Vec<Row> = labels
                .iter()
                .enumerate()
                .map(|(v, l)| Row {
                    node: l,
                    deg: table.deg[v],
                    evc: round(table.evc[v], precision),
                    bwc: round(table.bwc[v], precision),
                    clc: round(table.clc[v], precision),
                })
                .collect();
            serde_json::to_writer_pretty(&mut out, &rows).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        OutputFormat::Table => {
            let mut header = vec![String::new()];
            header.extend(labels.iter().cloned());
            let rows: Vec<Vec<String>> = crate::centrality::METRIC_NAMES
                .iter()
                .enumerate()
                .map(|(r, name)| {
                    let mut row = vec![name.to_string()];
                    if r == 0 {
                        row.extend(table.deg.iter().map(|d| d.to_string()));
                    } else {
                        row.extend(table.row(r).iter().map(|&x| format_real(x, precision)));
                    }
                    row
                })
                .collect();
            write_aligned(&header, &rows, out)?;
        }
    }
    Ok(())
}
