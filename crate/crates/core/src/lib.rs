//! Core-intermediate-peripheral (CIP) classification of network nodes.
//!
//! The four classic centralities (degree, eigenvector, betweenness,
//! closeness) of every node form a 4×n table. Treating nodes as features,
//! their pairwise correlation matrix is factored into two varimax-rotated
//! axes: a core axis that tracks betweenness and a peripheral axis. A
//! node's CIP index is the angle of its loadings from the peripheral axis;
//! 10° bins of that angle give the core / intermediate / peripheral class,
//! and class fractions classify the whole network.
//!
//! ```
//! use cip_core::{analyze, parse_edge_list, AnalysisOptions};
//!
//! let g = parse_edge_list("1 2\n1 3\n2 3\n3 4\n4 5\n").unwrap();
//! let a = analyze(&g, &AnalysisOptions::default()).unwrap();
//! assert_eq!(a.report.records.len(), 5);
//! ```

pub mod centrality;
pub mod cip;
pub mod error;
pub mod export;
pub mod factor;
pub mod graph;
pub mod linalg;
pub mod pipeline;
pub mod render;

pub use centrality::{
    betweenness_centrality, centrality_table, closeness_centrality, degree_centrality,
    eigenvector_centrality, CentralityTable,
};
pub use cip::{
    bin_of, bins_fraction_tuple, cip_index, classify_network, classify_node, coreness, k_core,
    rank_nodes, Bin, BinsFractionTuple, CipRecord, NodeClass,
};
pub use error::{CipError, Result};
pub use factor::{
    factor_analyze, node_correlation_matrix, orient_axes, top2_eigenpairs, varimax_rotate,
    FactorOptions, FactorSolution, Loadings,
};
pub use graph::{
    generate_ba, generate_er, parse_edge_list, parse_graphml, spectral_radius_ratio, Graph,
    GraphBuilder, PowerIteration,
};
pub use pipeline::{analyze, Analysis, AnalysisOptions, NetworkReport};
