use super::Graph;
use crate::error::{CipError, Result};

/// Tolerance and iteration cap for power iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerIteration {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for PowerIteration {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 10_000,
        }
    }
}

/// `out = A x` for the 0-1 adjacency matrix of `g`.
pub(crate) fn adjacency_mul(g: &Graph, x: &[f64], out: &mut [f64]) {
    for (v, o) in out.iter_mut().enumerate() {
        *o = g.neighbors(v).iter().map(|&u| x[u]).sum();
    }
}

/// Largest adjacency eigenvalue divided by the average degree.
///
/// The eigenvalue comes from power iteration on `A + I` (all-ones start,
/// max-norm scaling) and is read off as the Rayleigh quotient of `A`. The
/// shift keeps bipartite graphs from oscillating between `±λ`. Iteration
/// stops once successive quotients agree to relative tolerance `tol`.
pub fn spectral_radius_ratio(g: &Graph, params: PowerIteration) -> Result<f64> {
    let n = g.node_count();
    if n == 0 || g.edge_count() == 0 {
        return Err(CipError::Domain(
            "spectral radius ratio needs at least one edge".into(),
        ));
    }
    if !g.is_connected() {
        return Err(CipError::Domain(
            "spectral radius ratio needs a connected graph".into(),
        ));
    }

    let mut x = vec![1.0; n];
    let mut ax = vec![0.0; n];
    let mut prev = f64::NAN;
    for _ in 0..params.max_iter {
        adjacency_mul(g, &x, &mut ax);
        let num: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let den: f64 = x.iter().map(|a| a * a).sum();
        let rq = num / den;
        if (rq - prev).abs() < params.tol * rq.abs() {
            return Ok(rq / g.average_degree());
        }
        prev = rq;

        let mut scale = 0.0f64;
        for (xi, &ai) in x.iter_mut().zip(&ax) {
            *xi += ai;
            scale = scale.max(xi.abs());
        }
        for xi in &mut x {
            *xi /= scale;
        }
    }
    Err(CipError::Convergence {
        what: "spectral radius power iteration",
        iterations: params.max_iter,
    })
}
