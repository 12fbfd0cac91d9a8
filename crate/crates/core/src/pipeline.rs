//! End-to-end analysis of one network.

use crate::centrality::{centrality_table, CentralityTable};
use crate::cip::{
    bins_fraction_tuple, classify_network, coreness, k_core, rank_nodes, BinsFractionTuple,
    CipRecord,
};
use crate::error::{CipError, Result};
use crate::factor::{factor_analyze, tied_groups, FactorOptions, FactorSolution};
use crate::graph::{spectral_radius_ratio, Graph, PowerIteration};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisOptions {
    pub power: PowerIteration,
    /// Kaiser row normalization during varimax.
    pub kaiser: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            power: PowerIteration::default(),
            kaiser: true,
        }
    }
}

/// Network-level result with node records ranked most-core first.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkReport {
    pub n: usize,
    pub m: usize,
    pub lambda_sp: f64,
    pub tuple: BinsFractionTuple,
    pub classification: String,
    pub records: Vec<CipRecord>,
}

impl NetworkReport {
    pub fn quadrant_reflected_count(&self) -> usize {
        self.records.iter().filter(|r| r.quadrant_reflected).count()
    }
}

/// Everything computed for a network, including intermediate stages.
#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    pub labels: Vec<String>,
    pub table: CentralityTable,
    pub factor: FactorSolution,
    pub k_core: Vec<usize>,
    pub coreness: Vec<usize>,
    pub report: NetworkReport,
}

pub fn analyze(g: &Graph, opts: &AnalysisOptions) -> Result<Analysis> {
    if g.node_count() < 3 {
        return Err(CipError::Domain(format!(
            "analysis needs at least 3 nodes, got {}",
            g.node_count()
        )));
    }
    if !g.is_connected() {
        return Err(CipError::Domain(format!(
            "graph is disconnected ({} components); try --largest-component",
            g.components().len()
        )));
    }

    let labels = g.labels().to_vec();
    let table = centrality_table(g, opts.power)?;
    let lambda_sp = spectral_radius_ratio(g, opts.power)?;
    let factor = factor_analyze(
        &table,
        &labels,
        FactorOptions {
            kaiser: opts.kaiser,
        },
    )?;

    // Tied nodes share one betweenness value so rank tie-breaks fall
    // through to the label.
    let groups = tied_groups(&table);
    let mut group_bwc = vec![f64::NEG_INFINITY; groups.len()];
    for (v, &gid) in groups.iter().enumerate() {
        group_bwc[gid] = group_bwc[gid].max(table.bwc[v]);
    }
    let mut records = factor
        .oriented
        .rows
        .iter()
        .enumerate()
        .map(|(v, &[p, c])| CipRecord::new(&labels[v], v, p, c, group_bwc[groups[v]]))
        .collect::<Result<Vec<_>>>()?;
    rank_nodes(&mut records);
    let tuple = bins_fraction_tuple(&records)?;

    let report = NetworkReport {
        n: g.node_count(),
        m: g.edge_count(),
        lambda_sp,
        classification: classify_network(&tuple),
        tuple,
        records,
    };
    Ok(Analysis {
        labels,
        table,
        factor,
        k_core: k_core(g),
        coreness: coreness(g),
        report,
    })
}
