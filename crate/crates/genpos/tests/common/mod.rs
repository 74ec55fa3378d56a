//! Brute-force reference implementations for the integration tests. These
//! deliberately avoid the crate's BFS/branch-and-bound code paths: distances
//! come from Floyd-Warshall and optima from full subset enumeration, so a
//! bug in the engine cannot hide in its own oracle.

#![allow(dead_code)]

use genpos::{Graph, VertexSet};

const INF: u64 = u64::MAX / 4;

/// Floyd-Warshall distances.
pub fn fw_distances(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Is `s` free of interior triples, with an optional cap on the endpoint
/// distance?
pub fn oracle_is_position_set(d: &[Vec<u64>], s: &[usize], max_len: Option<u64>) -> bool {
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            if d[u][v] >= INF {
                continue;
            }
            if max_len.is_some_and(|cap| d[u][v] > cap) {
                continue;
            }
            for &w in s {
                if w != u && w != v && d[u][w] + d[w][v] == d[u][v] {
                    return false;
                }
            }
        }
    }
    true
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Exhaustive maximum over all subsets. Only sensible for small n.
pub fn oracle_max(g: &Graph, max_len: Option<u64>) -> u32 {
    let n = g.n();
    assert!(n <= 20, "oracle is exponential");
    let d = fw_distances(g);
    let mut best = 0;
    for mask in 0u64..(1 << n) {
        let size = mask.count_ones();
        if size <= best {
            continue;
        }
        if oracle_is_position_set(&d, &members(mask, n), max_len) {
            best = size;
        }
    }
    best
}

/// Every maximum set, as sorted member lists.
pub fn oracle_max_sets(g: &Graph, max_len: Option<u64>) -> Vec<Vec<usize>> {
    let n = g.n();
    assert!(n <= 20, "oracle is exponential");
    let d = fw_distances(g);
    let best = oracle_max(g, max_len);
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() == best && oracle_is_position_set(&d, &members(mask, n), max_len) {
            out.push(members(mask, n));
        }
    }
    out.sort();
    out
}

pub fn oracle_gp(g: &Graph) -> u32 {
    oracle_max(g, None)
}

pub fn oracle_gp3(g: &Graph) -> u32 {
    oracle_max(g, Some(3))
}

/// Definition-level recomputation of the derived invariant: maximum, over
/// all maximum 3-position sets S of the graph, of the size of a largest
/// 3-position set of the whole complement drawn from the non-partners.
pub fn oracle_gp3bar(g: &Graph) -> u32 {
    let n = g.n();
    let co = g.complement();
    let dco = fw_distances(&co);
    let mut best = 0;
    for s in oracle_max_sets(g, Some(3)) {
        let rest: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
        for mask in 0u64..(1 << rest.len()) {
            if mask.count_ones() <= best {
                continue;
            }
            let t: Vec<usize> = rest
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if oracle_is_position_set(&dco, &t, Some(3)) {
                best = mask.count_ones();
            }
        }
    }
    best
}

pub fn oracle_omega(g: &Graph) -> u32 {
    let n = g.n();
    let mut best = 0;
    for mask in 0u64..(1 << n) {
        if mask.count_ones() <= best {
            continue;
        }
        let vs = members(mask, n);
        if vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.adjacent(u, v)))
        {
            best = mask.count_ones();
        }
    }
    best
}

pub fn oracle_alpha(g: &Graph) -> u32 {
    oracle_omega(&g.complement())
}

/// Largest subset inducing a disjoint union of cliques (no induced path on
/// three vertices).
pub fn oracle_eta(g: &Graph) -> u32 {
    let n = g.n();
    let mut best = 0;
    'mask: for mask in 0u64..(1 << n) {
        if mask.count_ones() <= best {
            continue;
        }
        let vs = members(mask, n);
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                for &c in &vs[j + 1..] {
                    let edges =
                        g.adjacent(a, b) as u8 + g.adjacent(a, c) as u8 + g.adjacent(b, c) as u8;
                    if edges == 2 {
                        continue 'mask;
                    }
                }
            }
        }
        best = mask.count_ones();
    }
    best
}

/// All subsets of `0..n`, as vertex sets.
pub fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    assert!(n <= 20);
    (0u64..(1 << n)).map(move |mask| (0..n).filter(move |&v| mask >> v & 1 == 1).collect())
}
