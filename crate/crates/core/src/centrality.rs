//! Degree, eigenvector, betweenness and closeness centrality, and the
//! 4×n metric-by-node table the factor analysis consumes.

use std::collections::VecDeque;
use std::io::Write;

use rayon::prelude::*;

use crate::error::{CipError, Result};
use crate::graph::spectral::adjacency_mul;
use crate::graph::{bfs_distances, Graph, PowerIteration};

/// Rows of the table in their fixed order.
pub const METRIC_NAMES: [&str; 4] = ["DEG", "EVC", "BWC", "CLC"];

// Sources per Brandes work unit. Fixed so the reduction order does not
// depend on the thread pool size.
const BRANDES_CHUNK: usize = 32;

/// Centrality values per node, one vector per metric.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityTable {
    pub deg: Vec<usize>,
    pub evc: Vec<f64>,
    pub bwc: Vec<f64>,
    pub clc: Vec<f64>,
}

impl CentralityTable {
    pub fn node_count(&self) -> usize {
        self.deg.len()
    }

    /// The four metric values of node `v` in row order.
    pub fn column(&self, v: usize) -> [f64; 4] {
        [self.deg[v] as f64, self.evc[v], self.bwc[v], self.clc[v]]
    }

    /// Row `r` (0 = DEG .. 3 = CLC) as floats.
    pub fn row(&self, r: usize) -> Vec<f64> {
        match r {
            0 => self.deg.iter().map(|&d| d as f64).collect(),
            1 => self.evc.clone(),
            2 => self.bwc.clone(),
            3 => self.clc.clone(),
            _ => panic!("centrality row {r} out of range"),
        }
    }

    /// CSV with a header of node labels followed by the DEG/EVC/BWC/CLC
    /// rows. `precision` rounds real values for display.
    pub fn write_csv<W: Write>(
        &self,
        labels: &[String],
        precision: Option<usize>,
        out: W,
    ) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["metric".to_string()];
        header.extend(labels.iter().cloned());
        w.write_record(&header).map_err(csv_err)?;
        for (r, name) in METRIC_NAMES.iter().enumerate() {
            let mut rec = vec![name.to_string()];
            if r == 0 {
                rec.extend(self.deg.iter().map(|d| d.to_string()));
            } else {
                rec.extend(self.row(r).iter().map(|&x| format_real(x, precision)));
            }
            w.write_record(&rec).map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }
}

pub(crate) fn csv_err(e: csv::Error) -> CipError {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => CipError::Io(io),
        other => CipError::Validation(format!("CSV error: {other:?}")),
    }
}

/// Fixed-point with `precision` decimals, or shortest round-trip otherwise.
pub fn format_real(x: f64, precision: Option<usize>) -> String {
    match precision {
        Some(p) => format!("{x:.p$}"),
        None => format!("{x}"),
    }
}

fn require_connected(g: &Graph, metric: &str) -> Result<()> {
    if g.node_count() == 0 || !g.is_connected() {
        return Err(CipError::Domain(format!(
            "{metric} requires a connected, non-empty graph"
        )));
    }
    Ok(())
}

pub fn degree_centrality(g: &Graph) -> Vec<usize> {
    (0..g.node_count()).map(|v| g.degree(v)).collect()
}

/// Principal adjacency eigenvector with unit Euclidean norm.
///
/// Power iteration runs on `A + I` from the all-ones vector; the shift has
/// the same Perron vector and prevents oscillation on bipartite graphs.
/// Converged when successive unit-normalized iterates differ by less than
/// `tol` in max-norm.
pub fn eigenvector_centrality(g: &Graph, params: PowerIteration) -> Result<Vec<f64>> {
    require_connected(g, "eigenvector centrality")?;
    let n = g.node_count();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut next = vec![0.0; n];
    for _ in 0..params.max_iter {
        adjacency_mul(g, &x, &mut next);
        for (nv, xv) in next.iter_mut().zip(&x) {
            *nv += xv;
        }
        let norm = next.iter().map(|v| v * v).sum::<f64>().sqrt();
        let mut delta = 0.0f64;
        for (nv, xv) in next.iter_mut().zip(&x) {
            *nv /= norm;
            delta = delta.max((*nv - xv).abs());
        }
        std::mem::swap(&mut x, &mut next);
        if delta < params.tol {
            return Ok(x);
        }
    }
    Err(CipError::Convergence {
        what: "eigenvector centrality power iteration",
        iterations: params.max_iter,
    })
}

/// Raw (unnormalized) betweenness: for every unordered pair `{s, t}` the
/// fraction of shortest `s`–`t` paths passing through `v`, endpoints
/// excluded.
pub fn betweenness_centrality(g: &Graph) -> Result<Vec<f64>> {
    require_connected(g, "betweenness centrality")?;
    let n = g.node_count();
    let sources: Vec<usize> = (0..n).collect();
    let partials: Vec<Vec<f64>> = sources
        .par_chunks(BRANDES_CHUNK)
        .map(|chunk| {
            let mut acc = vec![0.0; n];
            let mut scratch = BrandesScratch::new(n);
            for &s in chunk {
                scratch.accumulate(g, s, &mut acc);
            }
            acc
        })
        .collect();

    let mut total = vec![0.0; n];
    for part in &partials {
        for (t, p) in total.iter_mut().zip(part) {
            *t += p;
        }
    }
    // Each unordered pair was visited from both ends.
    for t in &mut total {
        *t /= 2.0;
    }
    Ok(total)
}

struct BrandesScratch {
    sigma: Vec<f64>,
    dist: Vec<i64>,
    delta: Vec<f64>,
    order: Vec<usize>,
    queue: VecDeque<usize>,
}

impl BrandesScratch {
    fn new(n: usize) -> Self {
        Self {
            sigma: vec![0.0; n],
            dist: vec![-1; n],
            delta: vec![0.0; n],
            order: Vec::with_capacity(n),
            queue: VecDeque::with_capacity(n),
        }
    }

    fn accumulate(&mut self, g: &Graph, s: usize, acc: &mut [f64]) {
        self.sigma.fill(0.0);
        self.dist.fill(-1);
        self.delta.fill(0.0);
        self.order.clear();
        self.queue.clear();

        self.sigma[s] = 1.0;
        self.dist[s] = 0;
        self.queue.push_back(s);
        while let Some(v) = self.queue.pop_front() {
            self.order.push(v);
            for &w in g.neighbors(v) {
                if self.dist[w] < 0 {
                    self.dist[w] = self.dist[v] + 1;
                    self.queue.push_back(w);
                }
                if self.dist[w] == self.dist[v] + 1 {
                    self.sigma[w] += self.sigma[v];
                }
            }
        }

        // Predecessors are recovered from distances instead of stored lists.
        for &w in self.order.iter().rev() {
            let coeff = (1.0 + self.delta[w]) / self.sigma[w];
            for &v in g.neighbors(w) {
                if self.dist[v] == self.dist[w] - 1 {
                    self.delta[v] += self.sigma[v] * coeff;
                }
            }
            if w != s {
                acc[w] += self.delta[w];
            }
        }
    }
}

/// Reciprocal of total shortest-path distance from each node.
pub fn closeness_centrality(g: &Graph) -> Result<Vec<f64>> {
    require_connected(g, "closeness centrality")?;
    let out = (0..g.node_count())
        .into_par_iter()
        .map(|v| {
            let farness: usize = bfs_distances(g, v).iter().map(|d| d.unwrap_or(0)).sum();
            if farness == 0 {
                0.0
            } else {
                1.0 / farness as f64
            }
        })
        .collect();
    Ok(out)
}

/// All four metrics in row order (DEG, EVC, BWC, CLC).
pub fn centrality_table(g: &Graph, params: PowerIteration) -> Result<CentralityTable> {
    if g.node_count() < 3 {
        return Err(CipError::Domain(format!(
            "centrality table needs at least 3 nodes, got {}",
            g.node_count()
        )));
    }
    Ok(CentralityTable {
        deg: degree_centrality(g),
        evc: eigenvector_centrality(g, params)?,
        bwc: betweenness_centrality(g)?,
        clc: closeness_centrality(g)?,
    })
}
