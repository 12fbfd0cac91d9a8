//! Seeded random graph generators. Node labels are `"0"`..`"n-1"`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphBuilder};
use crate::error::{CipError, Result};

/// Erdős–Rényi G(n, p): every unordered pair is an edge independently with
/// probability `p`.
pub fn generate_er(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(CipError::Domain(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::with_numbered_nodes(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                b.add_edge_by_index(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// Barabási–Albert preferential attachment.
///
/// Starts from a clique on `m_attach` nodes; each later node links to
/// `m_attach` distinct existing nodes drawn with probability proportional to
/// their current degree. The edge count is always
/// `C(m_attach, 2) + m_attach * (n - m_attach)`.
pub fn generate_ba(n: usize, m_attach: usize, seed: u64) -> Result<Graph> {
    if m_attach < 1 || m_attach >= n {
        return Err(CipError::Domain(format!(
            "attachment count must satisfy 1 <= m < n, got m={m_attach}, n={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::with_numbered_nodes(n);
    // Each edge contributes both endpoints, so a uniform draw from this list
    // is a degree-proportional draw over nodes.
    let mut endpoints: Vec<usize> = Vec::with_capacity(2 * m_attach * n);
    for u in 0..m_attach {
        for v in (u + 1)..m_attach {
            b.add_edge_by_index(u, v)?;
            endpoints.extend([u, v]);
        }
    }

    let mut targets: Vec<usize> = Vec::with_capacity(m_attach);
    for new in m_attach..n {
        targets.clear();
        if endpoints.is_empty() {
            // Single-node seed: no degree mass yet.
            let mut pool: Vec<usize> = (0..new).collect();
            pool.shuffle(&mut rng);
            targets.extend(pool.into_iter().take(m_attach));
        } else {
            while targets.len() < m_attach {
                let t = endpoints[rng.gen_range(0..endpoints.len())];
                if !targets.contains(&t) {
                    targets.push(t);
                }
            }
        }
        for &t in &targets {
            b.add_edge_by_index(new, t)?;
            endpoints.extend([new, t]);
        }
    }
    Ok(b.build())
}
