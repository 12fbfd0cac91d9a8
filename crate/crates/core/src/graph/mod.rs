//! Undirected simple graphs over densely indexed nodes with external labels.
//!
//! Nodes are numbered `0..n` in first-appearance order. Every output that
//! leaves the library refers to nodes by their external label.

mod generate;
mod parse;
pub(crate) mod spectral;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{CipError, Result};

pub use generate::{generate_ba, generate_er};
pub use parse::{parse_edge_list, parse_graphml};
pub use spectral::{spectral_radius_ratio, PowerIteration};

/// An immutable undirected graph without self-loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<usize>>,
    // Insertion order, endpoints as first given.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Neighbors of `v` in ascending index order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn average_degree(&self) -> f64 {
        if self.labels.is_empty() {
            return 0.0;
        }
        2.0 * self.edges.len() as f64 / self.labels.len() as f64
    }

    /// True iff a traversal from node 0 reaches every node. The empty graph
    /// is reported as disconnected.
    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return false;
        }
        self.component_of(0).len() == n
    }

    fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.node_count()];
        let mut queue = VecDeque::from([start]);
        let mut order = Vec::new();
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Connected components, each sorted by node index, ordered by their
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.node_count();
        let mut assigned = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if assigned[s] {
                continue;
            }
            let mut comp = self.component_of(s);
            comp.sort_unstable();
            for &v in &comp {
                assigned[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// The induced subgraph on the largest connected component. Ties go to
    /// the component holding the smallest node index. Label and edge order
    /// are preserved.
    pub fn largest_component(&self) -> Graph {
        let comps = self.components();
        let best = comps
            .iter()
            .enumerate()
            .max_by(|(ia, a), (ib, b)| a.len().cmp(&b.len()).then(ib.cmp(ia)))
            .map(|(_, c)| c.clone())
            .unwrap_or_default();
        self.induced(&best)
    }

    /// Induced subgraph on `nodes` (must be ascending).
    fn induced(&self, nodes: &[usize]) -> Graph {
        let mut remap = vec![usize::MAX; self.node_count()];
        for (i, &v) in nodes.iter().enumerate() {
            remap[v] = i;
        }
        let mut b = GraphBuilder::new();
        for &v in nodes {
            b.add_node(&self.labels[v]);
        }
        for &(u, v) in &self.edges {
            if remap[u] != usize::MAX && remap[v] != usize::MAX {
                // Cannot fail: source graph is already simple.
                b.add_edge_by_index(remap[u], remap[v]).ok();
            }
        }
        b.build()
    }

    /// Serialize as a whitespace-separated edge list, one edge per line in
    /// insertion order. Isolated nodes are not representable and are dropped.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        out
    }
}

/// Incremental constructor enforcing the [`Graph`] invariants.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    seen: HashSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builder with `n` nodes labeled `"0"`..`"n-1"`.
    pub fn with_numbered_nodes(n: usize) -> Self {
        let mut b = Self::new();
        for i in 0..n {
            b.add_node(&i.to_string());
        }
        b
    }

    /// Returns the index for `label`, creating the node on first sight.
    pub fn add_node(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        self.adjacency.push(Vec::new());
        i
    }

    /// Adds an undirected edge between two labels, creating nodes as
    /// needed. Returns `false` when the edge already existed.
    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<bool> {
        if a == b {
            return Err(CipError::Validation(format!("self-loop on node {a}")));
        }
        let u = self.add_node(a);
        let v = self.add_node(b);
        self.add_edge_by_index(u, v)
    }

    pub fn add_edge_by_index(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(CipError::Validation(format!(
                "edge ({u}, {v}) references a node outside 0..{n}"
            )));
        }
        if u == v {
            return Err(CipError::Validation(format!(
                "self-loop on node {}",
                self.labels[u]
            )));
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Ok(false);
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        self.edges.push((u, v));
        Ok(true)
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn build(self) -> Graph {
        let mut adjacency = self.adjacency;
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Graph {
            labels: self.labels,
            adjacency,
            edges: self.edges,
        }
    }
}

/// Builds a graph from label pairs. Convenience for tests and examples.
pub fn from_edges<S: AsRef<str>>(pairs: &[(S, S)]) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    for (a, c) in pairs {
        b.add_edge(a.as_ref(), c.as_ref())?;
    }
    Ok(b.build())
}

/// Breadth-first distances from `source`; unreachable nodes get `None`.
pub(crate) fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.node_count()];
    let mut queue = VecDeque::from([source]);
    dist[source] = Some(0);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap_or(0);
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}
