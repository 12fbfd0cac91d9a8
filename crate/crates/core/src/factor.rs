//! Two-factor analysis of the centrality table with nodes as features.
//!
//! The node-by-node Pearson correlation matrix is decomposed, the two
//! leading eigenvectors become initial loadings, varimax rotates them, and
//! the rotated axes are oriented so column 0 is the peripheral axis and
//! column 1 the core axis (the one tracking betweenness).

use std::io::Write;

use log::warn;

use crate::centrality::{csv_err, format_real, CentralityTable};
use crate::error::{CipError, Result};
use crate::linalg::{self, pearson, SymMatrix, JACOBI_MAX_SWEEPS, JACOBI_TOL};

/// A 2×2 matrix, row-major.
pub type Mat2 = [[f64; 2]; 2];

pub const IDENTITY: Mat2 = [[1.0, 0.0], [0.0, 1.0]];

// Second eigenvalue at or below this counts as a collapsed second factor.
const DEGENERATE_EIGENVALUE: f64 = 1e-12;
const ORIENTATION_TIE: f64 = 1e-12;
// Relative gap under which two metric values count as equal.
const VALUE_TIE: f64 = 1e-12;

/// Pearson correlations between node columns of a [`CentralityTable`].
#[derive(Debug, Clone, PartialEq)]
pub struct NodeCorrelationMatrix(pub SymMatrix);

impl NodeCorrelationMatrix {
    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0.get(i, j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoadingStage {
    Initial,
    Rotated,
    Oriented,
}

/// Per-node coordinates on two factor axes.
#[derive(Debug, Clone, PartialEq)]
pub struct Loadings {
    pub rows: Vec<[f64; 2]>,
    pub stage: LoadingStage,
}

impl Loadings {
    pub fn new(rows: Vec<[f64; 2]>, stage: LoadingStage) -> Self {
        Self { rows, stage }
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// Row sums of squared loadings.
    pub fn communalities(&self) -> Vec<f64> {
        self.rows.iter().map(|[a, b]| a * a + b * b).collect()
    }

    pub fn transform(&self, m: &Mat2, stage: LoadingStage) -> Loadings {
        Loadings {
            rows: self.rows.iter().map(|r| mul_row(r, m)).collect(),
            stage,
        }
    }
}

fn mul_row(r: &[f64; 2], m: &Mat2) -> [f64; 2] {
    [
        r[0] * m[0][0] + r[1] * m[1][0],
        r[0] * m[0][1] + r[1] * m[1][1],
    ]
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Largest entry of `|MᵀM − I|`.
pub fn orthogonality_error(m: &Mat2) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            let g = m[0][i] * m[0][j] + m[1][i] * m[1][j];
            let id = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((g - id).abs());
        }
    }
    worst
}

/// Correlation of every pair of node columns, each column being the
/// node's four metric values.
pub fn node_correlation_matrix(
    table: &CentralityTable,
    labels: &[String],
) -> Result<NodeCorrelationMatrix> {
    let n = table.node_count();
    let mut centered = Vec::with_capacity(n);
    let mut norms = Vec::with_capacity(n);
    for v in 0..n {
        let col = linalg::centered(&table.column(v));
        let ss = linalg::dot(&col, &col);
        if ss == 0.0 {
            return Err(CipError::DegenerateColumn {
                node: labels.get(v).cloned().unwrap_or_else(|| v.to_string()),
            });
        }
        centered.push(col);
        norms.push(ss);
    }

    let mut c = SymMatrix::zeros(n);
    for i in 0..n {
        c.set(i, i, 1.0);
        for j in (i + 1)..n {
            let r = (linalg::dot(&centered[i], &centered[j]) / (norms[i] * norms[j]).sqrt())
                .clamp(-1.0, 1.0);
            c.set(i, j, r);
            c.set(j, i, r);
        }
    }
    Ok(NodeCorrelationMatrix(c))
}

/// Leading two eigenpairs of the correlation matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TopEigenpairs {
    /// Descending.
    pub values: [f64; 2],
    /// Unit-norm eigenvectors as the two columns of an n×2 loading matrix,
    /// each flipped so its largest-magnitude entry is positive.
    pub loadings: Loadings,
}

pub fn top2_eigenpairs(c: &NodeCorrelationMatrix) -> Result<TopEigenpairs> {
    let n = c.dim();
    if n < 2 {
        return Err(CipError::Domain(format!(
            "two eigenpairs need at least 2 nodes, got {n}"
        )));
    }
    let eig = linalg::jacobi_eigen(&c.0, JACOBI_TOL, JACOBI_MAX_SWEEPS)?;
    let mut cols = [eig.vectors[0].clone(), eig.vectors[1].clone()];
    for col in &mut cols {
        canonicalize_sign(col);
    }
    let rows = (0..n).map(|i| [cols[0][i], cols[1][i]]).collect();
    Ok(TopEigenpairs {
        values: [eig.values[0], eig.values[1]],
        loadings: Loadings::new(rows, LoadingStage::Initial),
    })
}

fn canonicalize_sign(v: &mut [f64]) {
    let mut best = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[best].abs() {
            best = i;
        }
    }
    if v[best] < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

/// Varimax objective: sum over both columns of the variance of squared
/// loadings.
pub fn varimax_criterion(rows: &[[f64; 2]]) -> f64 {
    let n = rows.len() as f64;
    (0..2)
        .map(|j| {
            let sq: Vec<f64> = rows.iter().map(|r| r[j] * r[j]).collect();
            let mean = sq.iter().sum::<f64>() / n;
            sq.iter().map(|s| s * s).sum::<f64>() / n - mean * mean
        })
        .sum()
}

/// Rotation angle (radians) maximizing the two-factor varimax criterion.
pub fn varimax_angle(rows: &[[f64; 2]]) -> f64 {
    let n = rows.len() as f64;
    let (mut su, mut sv, mut suv, mut sdiff) = (0.0, 0.0, 0.0, 0.0);
    for &[a, b] in rows {
        let u = a * a - b * b;
        let v = 2.0 * a * b;
        su += u;
        sv += v;
        suv += u * v;
        sdiff += u * u - v * v;
    }
    let num = 2.0 * (suv - su * sv / n);
    let den = sdiff - (su * su - sv * sv) / n;
    0.25 * num.atan2(den)
}

pub fn rotation_matrix(phi: f64) -> Mat2 {
    let (s, c) = phi.sin_cos();
    [[c, -s], [s, c]]
}

/// Varimax-rotates initial loadings. With `kaiser`, rows are scaled to unit
/// length for the angle search and the rotation is applied to the raw rows.
/// Returns the rotated loadings and the rotation `R` (`rotated = L · R`).
pub fn varimax_rotate(initial: &Loadings, kaiser: bool) -> (Loadings, Mat2) {
    let phi = if kaiser {
        let normalized: Vec<[f64; 2]> = initial
            .rows
            .iter()
            .map(|&[a, b]| {
                let h = (a * a + b * b).sqrt();
                if h > 0.0 {
                    [a / h, b / h]
                } else {
                    [a, b]
                }
            })
            .collect();
        varimax_angle(&normalized)
    } else {
        varimax_angle(&initial.rows)
    };
    let r = rotation_matrix(phi);
    (initial.transform(&r, LoadingStage::Rotated), r)
}

/// Flips column signs so each column sums to a non-negative value, then
/// swaps columns if needed so the core axis (higher correlation with
/// `bwc`) is column 1. Returns the oriented loadings and the signed
/// permutation `P` (`oriented = rotated · P`).
pub fn orient_axes(rotated: &Loadings, bwc: &[f64]) -> Result<(Loadings, Mat2)> {
    let mut signs = [1.0, 1.0];
    for (j, s) in signs.iter_mut().enumerate() {
        if rotated.rows.iter().map(|r| r[j]).sum::<f64>() < 0.0 {
            *s = -1.0;
        }
    }
    let flipped = rotated.transform(&[[signs[0], 0.0], [0.0, signs[1]]], LoadingStage::Rotated);
    let corr = |j| pearson(&flipped.column(j), bwc);
    let (Some(c0), Some(c1)) = (corr(0), corr(1)) else {
        return Err(CipError::AmbiguousOrientation);
    };
    if (c0 - c1).abs() < ORIENTATION_TIE {
        return Err(CipError::AmbiguousOrientation);
    }
    let p = if c0 > c1 {
        [[0.0, signs[0]], [signs[1], 0.0]]
    } else {
        [[signs[0], 0.0], [0.0, signs[1]]]
    };
    Ok((rotated.transform(&p, LoadingStage::Oriented), p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FactorOptions {
    pub kaiser: bool,
}

/// Every intermediate product of the factor stage.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorSolution {
    pub correlation: NodeCorrelationMatrix,
    pub eigenvalues: [f64; 2],
    pub initial: Loadings,
    pub rotated: Loadings,
    pub oriented: Loadings,
    pub rotation: Mat2,
    pub orientation: Mat2,
    /// True when the second factor collapsed and every node was placed on
    /// the core axis.
    pub single_factor: bool,
}

impl FactorSolution {
    /// Initial-to-oriented transform, `R · P`.
    pub fn composed(&self) -> Mat2 {
        mat2_mul(&self.rotation, &self.orientation)
    }

    /// Audit dump: correlation matrix, initial/rotated/oriented loadings
    /// and the 2×2 transforms, as labelled CSV sections.
    pub fn write_audit_csv<W: Write>(
        &self,
        labels: &[String],
        precision: Option<usize>,
        out: W,
    ) -> Result<()> {
        let f = |x: f64| format_real(x, precision);
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
        let mut header = vec!["correlation".to_string()];
        header.extend(labels.iter().cloned());
        w.write_record(&header).map_err(csv_err)?;
        for (i, label) in labels.iter().enumerate() {
            let mut rec = vec![label.clone()];
            rec.extend(self.correlation.0.row(i).iter().map(|&x| f(x)));
            w.write_record(&rec).map_err(csv_err)?;
        }
        for (name, l) in [
            ("initial", &self.initial),
            ("rotated", &self.rotated),
            ("oriented", &self.oriented),
        ] {
            w.write_record([name, "axis0", "axis1"]).map_err(csv_err)?;
            for (label, r) in labels.iter().zip(&l.rows) {
                w.write_record([label.clone(), f(r[0]), f(r[1])])
                    .map_err(csv_err)?;
            }
        }
        for (name, m) in [
            ("rotation", &self.rotation),
            ("orientation", &self.orientation),
        ] {
            w.write_record([name, "col0", "col1"]).map_err(csv_err)?;
            for (i, row) in m.iter().enumerate() {
                w.write_record([format!("row{i}"), f(row[0]), f(row[1])])
                    .map_err(csv_err)?;
            }
        }
        w.write_record([
            "eigenvalues".to_string(),
            f(self.eigenvalues[0]),
            f(self.eigenvalues[1]),
        ])
        .map_err(csv_err)?;
        w.flush()?;
        Ok(())
    }
}

/// Runs the whole factor stage on a centrality table.
pub fn factor_analyze(
    table: &CentralityTable,
    labels: &[String],
    opts: FactorOptions,
) -> Result<FactorSolution> {
    let correlation = node_correlation_matrix(table, labels)?;
    let mut top = top2_eigenpairs(&correlation)?;
    merge_tied_rows(&mut top.loadings, table);

    if top.values[1].abs() <= DEGENERATE_EIGENVALUE {
        return single_factor(correlation, top, &table.bwc);
    }

    let (rotated, rotation) = varimax_rotate(&top.loadings, opts.kaiser);
    let (oriented, orientation) = orient_axes(&rotated, &table.bwc)?;
    Ok(FactorSolution {
        correlation,
        eigenvalues: top.values,
        initial: top.loadings,
        rotated,
        oriented,
        rotation,
        orientation,
        single_factor: false,
    })
}

/// Groups nodes whose four metric values agree to within [`VALUE_TIE`].
/// Returns a group id per node; equal ids mean equal columns.
#[allow(clippy::needless_range_loop)]
pub fn tied_groups(table: &CentralityTable) -> Vec<usize> {
    let n = table.node_count();
    let mut keys = vec![[0usize; 4]; n];
    for r in 0..4 {
        let row = table.row(r);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| row[a].total_cmp(&row[b]));
        let mut cluster = 0;
        for k in 1..n {
            let (prev, cur) = (row[order[k - 1]], row[order[k]]);
            if cur - prev > VALUE_TIE * prev.abs().max(cur.abs()).max(1.0) {
                cluster += 1;
            }
            keys[order[k]][r] = cluster;
        }
    }
    let mut ids: Vec<[usize; 4]> = keys.clone();
    ids.sort_unstable();
    ids.dedup();
    keys.iter()
        .map(|k| ids.binary_search(k).unwrap_or(0))
        .collect()
}

// Nodes with equal centrality columns have equal correlation rows, so
// their eigenvector entries agree up to round-off. Averaging removes that
// noise and gives them identical CIP angles.
fn merge_tied_rows(loadings: &mut Loadings, table: &CentralityTable) {
    let groups = tied_groups(table);
    let count = groups.iter().copied().max().map_or(0, |m| m + 1);
    let mut sums = vec![([0.0f64; 2], 0usize); count];
    for (row, &g) in loadings.rows.iter().zip(&groups) {
        sums[g].0[0] += row[0];
        sums[g].0[1] += row[1];
        sums[g].1 += 1;
    }
    for (row, &g) in loadings.rows.iter_mut().zip(&groups) {
        let (s, k) = sums[g];
        if k > 1 {
            *row = [s[0] / k as f64, s[1] / k as f64];
        }
    }
}

// Only one factor carries variance. Every node goes on the core axis if
// that factor tracks betweenness; otherwise there is no core/periphery
// split to report.
fn single_factor(
    correlation: NodeCorrelationMatrix,
    top: TopEigenpairs,
    bwc: &[f64],
) -> Result<FactorSolution> {
    warn!(
        "second eigenvalue {:e} is numerically zero; falling back to a single factor",
        top.values[1]
    );
    let sole = top.loadings.column(0);
    match pearson(&sole, bwc) {
        Some(r) if r > 0.0 && sole.iter().all(|&x| x > 0.0) => {}
        _ => {
            return Err(CipError::Degenerate(
                "second factor vanished and the remaining factor does not track betweenness".into(),
            ))
        }
    }
    let oriented = Loadings::new(
        sole.iter().map(|&x| [0.0, x]).collect(),
        LoadingStage::Oriented,
    );
    let orientation = [[0.0, 1.0], [1.0, 0.0]];
    Ok(FactorSolution {
        correlation,
        eigenvalues: top.values,
        rotated: top.loadings.clone(),
        initial: top.loadings,
        oriented,
        rotation: IDENTITY,
        orientation,
        single_factor: true,
    })
}
