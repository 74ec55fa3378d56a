//! Structural recognition: bipartitions, split partitions, block
//! decompositions and the classification flags derived from them.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// A 2-coloring of a bipartite graph plus its full-degree vertices
/// (vertices adjacent to everything on the other side).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartitionInfo {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    pub full_degree_set: VertexSet,
}

/// Two-colors the graph if it is bipartite. Deterministic: in each component
/// the side of the lowest-index vertex is A.
pub fn bipartition(g: &Graph) -> Option<BipartitionInfo> {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for u in g.neighbors(v).iter() {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push(u);
                } else if color[u] == color[v] {
                    return None;
                }
            }
        }
    }
    let side_a: VertexSet = (0..n).filter(|&v| color[v] == 0).collect();
    let side_b: VertexSet = (0..n).filter(|&v| color[v] == 1).collect();
    let full: VertexSet = (0..n)
        .filter(|&v| {
            let other = if side_a.contains(v) { side_b } else { side_a };
            g.degree(v) == other.len()
        })
        .collect();
    Some(BipartitionInfo {
        side_a,
        side_b,
        full_degree_set: full,
    })
}

/// A partition of the vertices into a clique and an independent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique_side: VertexSet,
    pub independent_side: VertexSet,
}

/// Recognizes split graphs by the degree-sequence criterion and returns the
/// partition with the largest clique side, ties broken by the
/// lexicographically smallest clique.
///
/// With degrees sorted descending and `m = max{k : d_k >= k-1}`, the graph is
/// split iff `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`; the m vertices of
/// highest degree then form a clique and the rest an independent set. No
/// valid partition has a larger clique side, since a clique of size c forces
/// `d_c >= c-1`.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degs: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();

    let mut m = 0;
    for k in 1..=n {
        if degs[k - 1] >= k - 1 {
            m = k;
        }
    }
    let top: usize = degs[..m].iter().sum();
    let rest: usize = degs[m..].iter().sum();
    if top != m * (m - 1) + rest {
        return None;
    }

    let clique: VertexSet = order[..m].iter().copied().collect();
    let independent = VertexSet::full(n).difference(clique);
    debug_assert!(g.is_clique(clique));
    debug_assert!(g.is_independent(independent));
    Some(SplitPartition {
        clique_side: clique,
        independent_side: independent,
    })
}

/// Blocks (maximal 2-connected components), cut vertices and simplicial
/// vertices of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    pub simplicial_vertices: VertexSet,
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let n = g.n();
    let mut blocks = Vec::new();
    let mut cut = VertexSet::EMPTY;
    if n == 1 {
        blocks.push(VertexSet::singleton(0));
    } else {
        let mut state = Lowpoint {
            g,
            depth: vec![usize::MAX; n],
            low: vec![0; n],
            edge_stack: Vec::new(),
            blocks: Vec::new(),
            cut: VertexSet::EMPTY,
        };
        state.dfs(0, usize::MAX, 0);
        blocks = state.blocks;
        cut = state.cut;
    }

    let simplicial: VertexSet = (0..n).filter(|&v| g.is_clique(g.neighbors(v))).collect();
    Ok(BlockDecomposition {
        blocks,
        cut_vertices: cut,
        simplicial_vertices: simplicial,
    })
}

struct Lowpoint<'a> {
    g: &'a Graph,
    depth: Vec<usize>,
    low: Vec<usize>,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cut: VertexSet,
}

impl Lowpoint<'_> {
    fn dfs(&mut self, v: usize, parent: usize, d: usize) {
        self.depth[v] = d;
        self.low[v] = d;
        let mut children = 0;
        for u in self.g.neighbors(v).iter() {
            if self.depth[u] == usize::MAX {
                children += 1;
                self.edge_stack.push((v, u));
                self.dfs(u, v, d + 1);
                self.low[v] = self.low[v].min(self.low[u]);
                if self.low[u] >= d {
                    // v separates u's subtree: everything pushed since (v,u)
                    // is one block
                    let mut members = VertexSet::EMPTY;
                    while let Some((a, b)) = self.edge_stack.pop() {
                        members.insert(a);
                        members.insert(b);
                        if (a, b) == (v, u) {
                            break;
                        }
                    }
                    self.blocks.push(members);
                    let root = parent == usize::MAX;
                    if (root && children > 1) || (!root) {
                        self.cut.insert(v);
                    }
                }
            } else if u != parent && self.depth[u] < d {
                self.edge_stack.push((v, u));
                self.low[v] = self.low[v].min(self.depth[u]);
            }
        }
    }
}

/// Classification flags used by the theorem dispatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassFlags {
    pub is_tree: bool,
    pub is_bipartite: bool,
    pub is_split: bool,
    pub is_block_graph: bool,
    pub is_complete_multipartite: bool,
}

pub fn classify(g: &Graph) -> ClassFlags {
    let connected = g.is_connected();
    let is_tree = connected && g.edge_count() == g.n() - 1;
    let is_bipartite = bipartition(g).is_some();
    let is_split = split_partition(g).is_some();
    let is_block_graph = connected
        && block_decomposition(g)
            .map(|b| b.blocks.iter().all(|&blk| g.is_clique(blk)))
            .unwrap_or(false);
    let co = g.complement();
    let is_complete_multipartite = co.components().iter().all(|&c| co.is_clique(c));
    ClassFlags {
        is_tree,
        is_bipartite,
        is_split,
        is_block_graph,
        is_complete_multipartite,
    }
}
