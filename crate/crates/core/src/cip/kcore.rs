use crate::graph::Graph;

/// Core number of every node (Batagelj–Zaversnik bucket peeling).
pub fn k_core(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    if n == 0 {
        return Vec::new();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);

    // bin_start[d] = first slot in `vert` holding a node of degree d.
    let mut bin_start = vec![0usize; max_deg + 2];
    for &d in &deg {
        bin_start[d + 1] += 1;
    }
    for d in 1..bin_start.len() {
        bin_start[d] += bin_start[d - 1];
    }
    let mut pos = vec![0usize; n];
    let mut vert = vec![0usize; n];
    let mut fill = bin_start.clone();
    for v in 0..n {
        pos[v] = fill[deg[v]];
        vert[pos[v]] = v;
        fill[deg[v]] += 1;
    }

    for i in 0..n {
        let v = vert[i];
        for &u in g.neighbors(v) {
            if deg[u] > deg[v] {
                // Move u to the front of its bin, then shrink the bin.
                let du = deg[u];
                let pu = pos[u];
                let pw = bin_start[du];
                let w = vert[pw];
                if u != w {
                    vert.swap(pu, pw);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin_start[du] += 1;
                deg[u] -= 1;
            }
        }
    }
    deg
}

/// Sum of the neighbors' core numbers.
pub fn coreness(g: &Graph) -> Vec<usize> {
    let core = k_core(g);
    (0..g.node_count())
        .map(|v| g.neighbors(v).iter().map(|&u| core[u]).sum())
        .collect()
}
