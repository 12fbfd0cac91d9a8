mod common;

use cip_core::factor::{
    orthogonality_error, rotation_matrix, varimax_criterion, LoadingStage, Loadings,
};
use cip_core::linalg::SymMatrix;
use cip_core::{
    analyze, centrality_table, coreness, factor_analyze, generate_ba, generate_er, k_core,
    node_correlation_matrix, spectral_radius_ratio, top2_eigenpairs, varimax_rotate,
    AnalysisOptions, FactorOptions, NodeClass, PowerIteration,
};
use common::*;
use nalgebra::DMatrix;

#[test]
fn example10_edge_list_shape() {
    let g = example10();
    assert_eq!((g.node_count(), g.edge_count()), (10, 16));
    let labels: Vec<String> = (1..=10).map(|i| i.to_string()).collect();
    assert_eq!(g.labels(), labels.as_slice());
    let deg: Vec<usize> = (0..10).map(|v| g.degree(v)).collect();
    assert_eq!(deg, EX10_DEG);
    assert!(g.is_connected());
}

#[test]
fn example10_spectral_ratio_matches_dense_oracle() {
    let g = example10();
    let lambda = dense_spectrum(&adjacency_matrix(&g))[0];
    let expected = lambda / g.average_degree();
    let got = spectral_radius_ratio(&g, PowerIteration::default()).unwrap();
    assert!((got - expected).abs() < 1e-6, "{got} vs {expected}");
    assert!(got >= 1.0);
}

#[test]
fn spectral_ratio_matches_dense_oracle_on_random_graphs() {
    let mut r = rng(41);
    for _ in 0..50 {
        let g = random_connected(12, 0.2, &mut r);
        let expected = dense_spectrum(&adjacency_matrix(&g))[0] / g.average_degree();
        let got = spectral_radius_ratio(&g, PowerIteration::default()).unwrap();
        assert!((got - expected).abs() < 1e-6, "{got} vs {expected}");
        assert!(got >= 1.0 - 1e-12);
    }
}

#[test]
fn complete_graphs_have_unit_ratio() {
    for n in 2..8 {
        let g = generate_er(n, 1.0, 0).unwrap();
        let r = spectral_radius_ratio(&g, PowerIteration::default()).unwrap();
        assert!((r - 1.0).abs() < 1e-9);
    }
}

#[test]
fn example10_centrality_table() {
    let g = example10();
    let t = centrality_table(&g, PowerIteration::default()).unwrap();
    assert_eq!(t.deg, EX10_DEG);
    assert_eq!(t.bwc, EX10_BWC);
    for v in 0..10 {
        assert!((t.evc[v] - EX10_EVC[v]).abs() < 5e-4, "evc[{v}]");
        assert!((t.clc[v] - EX10_CLC[v]).abs() < 5e-4, "clc[{v}]");
    }
    assert_eq!(t.clc[0], 1.0 / 15.0);
    assert_eq!(t.clc[9], 1.0 / 25.0);
}

#[test]
fn evc_matches_dense_oracle() {
    let g = karate();
    let a = adjacency_matrix(&g);
    let eig = a.clone().symmetric_eigen();
    let (top, _) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.total_cmp(y.1))
        .unwrap();
    let mut v: Vec<f64> = eig.eigenvectors.column(top).iter().copied().collect();
    if v[0] < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    let t = centrality_table(&g, PowerIteration::default()).unwrap();
    for (a, b) in t.evc.iter().zip(&v) {
        assert!((a - b).abs() < 1e-8);
    }
}

#[test]
fn example10_correlation_spots() {
    let g = example10();
    let t = centrality_table(&g, PowerIteration::default()).unwrap();
    let c = node_correlation_matrix(&t, g.labels()).unwrap();
    assert!((c.get(0, 1) - 0.9962).abs() < 5e-4);
    assert_eq!(c.get(2, 5), 1.0);
    for i in 0..10 {
        assert_eq!(c.get(i, i), 1.0);
        for j in 0..10 {
            assert_eq!(c.get(i, j), c.get(j, i));
            assert!(c.get(i, j).abs() <= 1.0);
        }
    }
}

#[test]
fn correlation_matrix_rank_at_most_three() {
    let g = karate();
    let t = centrality_table(&g, PowerIteration::default()).unwrap();
    let c = node_correlation_matrix(&t, g.labels()).unwrap();
    let n = c.dim();
    let m = DMatrix::from_fn(n, n, |i, j| c.get(i, j));
    let spec = dense_spectrum(&m);
    assert!(spec[3..].iter().all(|l| l.abs() < 1e-9), "{:?}", &spec[..5]);
}

#[test]
fn example10_top2_capture_most_variance() {
    // Full-spectrum oracle on the reference matrix.
    let reference = DMatrix::from_fn(10, 10, |i, j| EX10_CORR[i][j]);
    let spec = dense_spectrum(&reference);
    assert!((spec[0] + spec[1]) / 10.0 > 0.95);

    let g = example10();
    let t = centrality_table(&g, PowerIteration::default()).unwrap();
    let c = node_correlation_matrix(&t, g.labels()).unwrap();
    let top = top2_eigenpairs(&c).unwrap();
    assert!((top.values[0] + top.values[1]) / 10.0 > 0.95);
    assert!((top.values[0] - spec[0]).abs() < 5e-3);
    assert!((top.values[1] - spec[1]).abs() < 5e-3);
    for k in 0..2 {
        let v = top.loadings.column(k);
        assert!(c.0.residual(top.values[k], &v) < 1e-8);
        let norm: f64 = v.iter().map(|x| x * x).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }
}

#[test]
fn top2_matches_dense_oracle_on_random_matrices() {
    let mut r = rng(5);
    for _ in 0..20 {
        let g = random_connected(15, 0.2, &mut r);
        let t = centrality_table(&g, PowerIteration::default()).unwrap();
        let Ok(c) = node_correlation_matrix(&t, g.labels()) else {
            continue;
        };
        let n = c.dim();
        let spec = dense_spectrum(&DMatrix::from_fn(n, n, |i, j| c.get(i, j)));
        let top = top2_eigenpairs(&c).unwrap();
        assert!((top.values[0] - spec[0]).abs() < 1e-10);
        assert!((top.values[1] - spec[1]).abs() < 1e-10);
    }
}

/// Independent varimax oracle: dense scan of the rotation angle followed by
/// ternary refinement.
fn varimax_oracle(rows: &[[f64; 2]]) -> f64 {
    let crit = |phi: f64| {
        let l = Loadings::new(rows.to_vec(), LoadingStage::Initial);
        varimax_criterion(
            &l.transform(&rotation_matrix(phi), LoadingStage::Rotated)
                .rows,
        )
    };
    let quarter = std::f64::consts::FRAC_PI_4;
    let steps = 20_000;
    let mut best = (-quarter, crit(-quarter));
    for i in 0..=steps {
        let phi = -quarter + 2.0 * quarter * i as f64 / steps as f64;
        let c = crit(phi);
        if c > best.1 {
            best = (phi, c);
        }
    }
    let h = 2.0 * quarter / steps as f64;
    let (mut lo, mut hi) = (best.0 - h, best.0 + h);
    for _ in 0..100 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if crit(m1) < crit(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    crit(0.5 * (lo + hi)).max(best.1)
}

#[test]
fn varimax_closed_form_reaches_oracle_maximum() {
    let g = example10();
    let t = centrality_table(&g, PowerIteration::default()).unwrap();
    let c = node_correlation_matrix(&t, g.labels()).unwrap();
    let top = top2_eigenpairs(&c).unwrap();
    let (rot, r) = varimax_rotate(&top.loadings, false);
    let got = varimax_criterion(&rot.rows);
    let best = varimax_oracle(&top.loadings.rows);
    assert!(got >= best - 1e-12, "{got} < {best}");
    assert!(got >= varimax_criterion(&top.loadings.rows));
    assert!(orthogonality_error(&r) < 1e-10);

    let mut r = rng(99);
    for _ in 0..20 {
        use rand::Rng;
        let rows: Vec<[f64; 2]> = (0..12)
            .map(|_| [r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)])
            .collect();
        let l = Loadings::new(rows.clone(), LoadingStage::Initial);
        let (rot, _) = varimax_rotate(&l, false);
        let got = varimax_criterion(&rot.rows);
        assert!(got >= varimax_oracle(&rows) - 1e-12);
        assert!(got >= varimax_criterion(&rows) - 1e-15);
    }
}

#[test]
fn example10_rotated_structure() {
    let g = example10();
    let t = centrality_table(&g, PowerIteration::default()).unwrap();
    for kaiser in [true, false] {
        let f = factor_analyze(&t, g.labels(), FactorOptions { kaiser }).unwrap();
        let o = &f.oriented.rows;
        let angle = |l: &str| {
            let [p, c] = o[idx(&g, l)];
            c.atan2(p).to_degrees()
        };
        for l in ["1", "2", "7"] {
            assert!((angle(l) - 90.0).abs() < 15.0, "node {l}: {}", angle(l));
        }
        for l in ["3", "6", "8", "9", "10"] {
            assert!(angle(l).abs() < 15.0, "node {l}: {}", angle(l));
        }
        // Node 2 sits on the core axis.
        let [p2, c2] = o[idx(&g, "2")];
        assert!(c2 > 0.0 && c2.atan2(p2).to_degrees() > 80.0);
        assert!(orthogonality_error(&f.composed()) < 1e-10);
    }
}

#[test]
fn example10_node_classes_and_ranking() {
    let g = example10();
    let a = analyze(&g, &AnalysisOptions::default()).unwrap();
    let class_of = |l: &str| {
        a.report
            .records
            .iter()
            .find(|r| r.node == l)
            .map(|r| r.class)
            .unwrap()
    };
    assert_eq!(class_of("2"), NodeClass::Core);
    assert_eq!(class_of("4"), NodeClass::Intermediate);
    assert_eq!(class_of("9"), NodeClass::Peripheral);

    let top3: Vec<&str> = a.report.records[..3]
        .iter()
        .map(|r| r.node.as_str())
        .collect();
    let mut sorted = top3.clone();
    sorted.sort();
    assert_eq!(sorted, ["1", "2", "7"]);

    let pos = |l: &str| a.report.records.iter().position(|r| r.node == l).unwrap();
    assert_eq!(pos("6"), pos("3") + 1);

    // Every core node has at least the betweenness of every peripheral one.
    let core_min = a
        .report
        .records
        .iter()
        .filter(|r| r.class == NodeClass::Core)
        .map(|r| r.bwc)
        .fold(f64::INFINITY, f64::min);
    let peri_max = a
        .report
        .records
        .iter()
        .filter(|r| r.class == NodeClass::Peripheral)
        .map(|r| r.bwc)
        .fold(0.0, f64::max);
    assert!(core_min >= peri_max);
}

#[test]
fn example10_k_core_and_coreness() {
    let g = example10();
    let core = k_core(&g);
    for l in ["1", "3", "5", "6"] {
        assert_eq!(core[idx(&g, l)], 3, "node {l}");
    }
    assert_eq!(core, brute_force_kcore(&g));
    let oracle: usize = ["2", "3", "5", "6", "9"]
        .iter()
        .map(|l| brute_force_kcore(&g)[idx(&g, l)])
        .sum();
    assert_eq!(coreness(&g)[0], oracle);
    assert_eq!(oracle, 13);
}

#[test]
fn ba_more_skewed_than_er() {
    // Matched density: BA(200, 2) has 2*198 + 1 edges.
    let n = 200;
    let p = (2.0 * 397.0) / (n as f64 * (n as f64 - 1.0));
    let mut ba_sum = 0.0;
    let mut er_sum = 0.0;
    for seed in 0..30 {
        let ba = generate_ba(n, 2, seed).unwrap();
        ba_sum += spectral_radius_ratio(&ba, PowerIteration::default()).unwrap();
        let er = generate_er(n, p, seed).unwrap().largest_component();
        er_sum += spectral_radius_ratio(&er, PowerIteration::default()).unwrap();
    }
    assert!(
        ba_sum > er_sum,
        "BA mean {} vs ER mean {}",
        ba_sum / 30.0,
        er_sum / 30.0
    );
}

#[test]
fn symmetric_matrix_helpers() {
    let m = SymMatrix::from_row_major(2, vec![1.0, 0.5, 0.5, 1.0]);
    assert_eq!(m.trace(), 2.0);
    assert!(m.residual(1.5, &[0.5f64.sqrt(), 0.5f64.sqrt()]) < 1e-15);
}

#[test]
fn equivalent_nodes_tie_exactly() {
    for (g, pair) in [(example10(), ["3", "6"]), (karate(), ["6", "7"])] {
        let a = cip_core::analyze(&g, &cip_core::AnalysisOptions::default()).unwrap();
        let groups = cip_core::factor::tied_groups(&a.table);
        let (u, v) = (idx(&g, pair[0]), idx(&g, pair[1]));
        assert_eq!(groups[u], groups[v]);
        let rec = |l: &str| a.report.records.iter().position(|r| r.node == l).unwrap();
        let (ru, rv) = (rec(pair[0]), rec(pair[1]));
        assert_eq!(
            a.report.records[ru].angle_deg.to_bits(),
            a.report.records[rv].angle_deg.to_bits()
        );
        assert_eq!(rv, ru + 1);
    }
}
