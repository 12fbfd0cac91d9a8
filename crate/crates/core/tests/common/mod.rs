//! Shared fixtures and independent oracles for integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::PathBuf;

use cip_core::graph::GraphBuilder;
use cip_core::{parse_edge_list, Graph};
use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
        .join(name)
}

pub fn load(name: &str) -> Graph {
    let text = std::fs::read_to_string(data_path(name)).expect("fixture readable");
    parse_edge_list(&text).expect("fixture parses")
}

/// The 10-node example graph.
pub fn example10() -> Graph {
    load("example10.txt")
}

pub fn karate() -> Graph {
    load("karate.txt")
}

/// Values in node order 1..=10 for the example graph.
pub const EX10_DEG: [usize; 10] = [5, 3, 3, 3, 4, 3, 4, 3, 2, 2];
pub const EX10_EVC: [f64; 10] = [
    0.5127, 0.2443, 0.3949, 0.1564, 0.4579, 0.3949, 0.1756, 0.1208, 0.2807, 0.0857,
];
pub const EX10_BWC: [f64; 10] = [21.0, 20.0, 0.0, 3.0, 1.0, 0.0, 9.5, 0.5, 0.0, 0.0];
pub const EX10_CLC: [f64; 10] = [
    0.0667, 0.0667, 0.0476, 0.0526, 0.0500, 0.0476, 0.0556, 0.0417, 0.0455, 0.0400,
];

/// Reference node-correlation matrix of the example graph, 4 decimals.
pub const EX10_CORR: [[f64; 10]; 10] = [
    [
        1.0, 0.9962, -0.181, 0.7471, 0.0879, -0.181, 0.9806, 0.0297, -0.189, -0.141,
    ],
    [
        0.9962, 1.0, -0.266, 0.6863, 0.0003, -0.266, 0.9599, -0.058, -0.274, -0.227,
    ],
    [
        -0.181, -0.266, 1.0, 0.5161, 0.9637, 1.0, 0.0133, 0.9744, 1.0, 0.9959,
    ],
    [
        0.7471, 0.6863, 0.5161, 1.0, 0.726, 0.5161, 0.8627, 0.6866, 0.5091, 0.5526,
    ],
    [
        0.0879, 0.0003, 0.9637, 0.726, 1.0, 0.9637, 0.2798, 0.9959, 0.9615, 0.9713,
    ],
    [
        -0.181, -0.266, 1.0, 0.5161, 0.9637, 1.0, 0.0133, 0.9744, 1.0, 0.9959,
    ],
    [
        0.9806, 0.9599, 0.0133, 0.8627, 0.2798, 0.0133, 1.0, 0.2246, 0.0052, 0.0552,
    ],
    [
        0.0297, -0.058, 0.9744, 0.6866, 0.9959, 0.9744, 0.2246, 1.0, 0.9725, 0.9853,
    ],
    [
        -0.189, -0.274, 1.0, 0.5091, 0.9615, 1.0, 0.0052, 0.9725, 1.0, 0.9954,
    ],
    [
        -0.141, -0.227, 0.9959, 0.5526, 0.9713, 0.9959, 0.0552, 0.9853, 0.9954, 1.0,
    ],
];

/// Node index of label `l` in a graph.
pub fn idx(g: &Graph, l: &str) -> usize {
    g.index_of(l).unwrap_or_else(|| panic!("no node {l}"))
}

/// G(n, p) with a random spanning tree added, so the result is connected.
pub fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut b = GraphBuilder::with_numbered_nodes(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        b.add_edge_by_index(order[i], parent).unwrap();
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                b.add_edge_by_index(u, v).unwrap();
            }
        }
    }
    b.build()
}

/// G(n, p), possibly disconnected.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut b = GraphBuilder::with_numbered_nodes(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                b.add_edge_by_index(u, v).unwrap();
            }
        }
    }
    b.build()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Same graph with nodes inserted in the order given by `perm` (a
/// permutation of `0..n`), edges in shuffled order and orientation.
pub fn relabel_order(g: &Graph, perm: &[usize], rng: &mut ChaCha8Rng) -> Graph {
    let mut b = GraphBuilder::new();
    for &v in perm {
        b.add_node(g.label(v));
    }
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.shuffle(rng);
    for (u, v) in edges {
        if rng.gen_bool(0.5) {
            b.add_edge(g.label(u), g.label(v)).unwrap();
        } else {
            b.add_edge(g.label(v), g.label(u)).unwrap();
        }
    }
    b.build()
}

/// BFS distances and shortest-path counts from `s`.
fn bfs_counts(g: &Graph, s: usize) -> (Vec<usize>, Vec<f64>) {
    let n = g.node_count();
    let mut dist = vec![usize::MAX; n];
    let mut sigma = vec![0.0; n];
    dist[s] = 0;
    sigma[s] = 1.0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
            if dist[w] == dist[u] + 1 {
                sigma[w] += sigma[u];
            }
        }
    }
    (dist, sigma)
}

/// Betweenness by pair enumeration: for each unordered pair `{s, t}`,
/// `v` lies on `σ(s,v)·σ(v,t)` of the `σ(s,t)` shortest paths whenever
/// `d(s,v) + d(v,t) = d(s,t)`.
pub fn brute_force_bwc(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let all: Vec<(Vec<usize>, Vec<f64>)> = (0..n).map(|s| bfs_counts(g, s)).collect();
    let mut bwc = vec![0.0; n];
    for s in 0..n {
        for t in (s + 1)..n {
            let (ds, ss) = &all[s];
            let (dt, st) = &all[t];
            if ds[t] == usize::MAX {
                continue;
            }
            for v in 0..n {
                if v == s || v == t || ds[v] == usize::MAX {
                    continue;
                }
                if ds[v] + dt[v] == ds[t] {
                    bwc[v] += ss[v] * st[v] / ss[t];
                }
            }
        }
    }
    bwc
}

/// Total farness per node via BFS.
pub fn farness(g: &Graph) -> Vec<usize> {
    (0..g.node_count())
        .map(|s| bfs_counts(g, s).0.iter().sum())
        .collect()
}

/// Core numbers by repeated full-graph peeling for every candidate `k`.
pub fn brute_force_kcore(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut core = vec![0; n];
    for k in 1..=n {
        let mut alive = vec![true; n];
        loop {
            let mut changed = false;
            for v in 0..n {
                if alive[v] {
                    let d = g.neighbors(v).iter().filter(|&&u| alive[u]).count();
                    if d < k {
                        alive[v] = false;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        for v in 0..n {
            if alive[v] {
                core[v] = k;
            }
        }
    }
    core
}

pub fn adjacency_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.node_count();
    DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
}

/// All eigenvalues, descending, from nalgebra's symmetric solver.
pub fn dense_spectrum(m: &DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = m
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}
