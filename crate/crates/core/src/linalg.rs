//! Small dense linear-algebra kernels: Pearson correlation and a cyclic
//! Jacobi eigensolver for symmetric matrices.

use crate::error::{CipError, Result};

/// Dense symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Builds from row-major data. Panics if `data.len() != n * n`.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), n * n, "matrix data must be n*n");
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j).powi(2);
                }
            }
        }
        s.sqrt()
    }

    /// `‖M v − λ v‖∞`.
    pub fn residual(&self, lambda: f64, v: &[f64]) -> f64 {
        (0..self.n)
            .map(|i| {
                let mv: f64 = self.row(i).iter().zip(v).map(|(a, b)| a * b).sum();
                (mv - lambda * v[i]).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// Pearson correlation of two equal-length samples; `None` when either
/// sample has zero variance.
pub fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    let dx = centered(x);
    let dy = centered(y);
    let sxx = dot(&dx, &dx);
    let syy = dot(&dy, &dy);
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some((dot(&dx, &dy) / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

pub(crate) fn centered(x: &[f64]) -> Vec<f64> {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    x.iter().map(|v| v - mean).collect()
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Full eigendecomposition of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// `vectors[k]` is the unit eigenvector for `values[k]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

pub const JACOBI_TOL: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi: row-by-row sweeps of plane rotations until the
/// off-diagonal Frobenius norm falls below `tol` times the matrix norm.
pub fn jacobi_eigen(m: &SymMatrix, tol: f64, max_sweeps: usize) -> Result<EigenDecomposition> {
    let n = m.dim();
    let mut a = m.clone();
    // Eigenvector k occupies v[k*n..(k+1)*n].
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let threshold = tol * m.frobenius().max(f64::MIN_POSITIVE);

    let mut sweeps = 0;
    while a.off_diagonal_norm() >= threshold {
        if sweeps == max_sweeps {
            return Err(CipError::Convergence {
                what: "Jacobi eigensolver",
                iterations: max_sweeps,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    let nkp = c * akp - s * akq;
                    let nkq = s * akp + c * akq;
                    a.set(k, p, nkp);
                    a.set(p, k, nkp);
                    a.set(k, q, nkq);
                    a.set(q, k, nkq);
                }
                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);

                let (vp, vq) = (p * n, q * n);
                for k in 0..n {
                    let x = v[vp + k];
                    let y = v[vq + k];
                    v[vp + k] = c * x - s * y;
                    v[vq + k] = s * x + c * y;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(j, j).total_cmp(&a.get(i, i)).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a.get(i, i)).collect();
    let vectors = order
        .iter()
        .map(|&i| v[i * n..(i + 1) * n].to_vec())
        .collect();
    Ok(EigenDecomposition {
        values,
        vectors,
        sweeps,
    })
}
