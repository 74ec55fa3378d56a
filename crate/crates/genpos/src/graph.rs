use crate::error::{Error, Result};
use crate::set::{bit, full_mask, VertexSet};

/// Hard cap on the number of vertices; adjacency rows are 128-bit masks.
pub const MAX_VERTICES: usize = 128;

/// An immutable finite simple undirected graph with optional vertex labels.
///
/// Adjacency is stored as one dense bit row per vertex. Rows are kept
/// symmetric and irreflexive by every constructor.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<u128>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate edges
    /// collapse; self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::GraphTooLarge {
                n,
                limit: MAX_VERTICES,
            });
        }
        let mut rows = vec![0u128; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::IndexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::IndexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        }
        Ok(Graph {
            n,
            rows,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::BadParameters(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Open neighborhood as a set.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.rows[v])
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet::from_bits(self.rows[u]).iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The complement graph; labels are preserved.
    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let rows = (0..self.n)
            .map(|v| (!self.rows[v]) & all & !bit(v))
            .collect();
        Graph {
            n: self.n,
            rows,
            labels: self.labels.clone(),
        }
    }

    /// Cartesian product; vertex `(g, h)` gets index `g * other.n() + h`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let n = self.n * other.n;
        if n > MAX_VERTICES {
            return Err(Error::ProductTooLarge(n, MAX_VERTICES));
        }
        let idx = |g: usize, h: usize| g * other.n + h;
        let mut rows = vec![0u128; n];
        for g in 0..self.n {
            for h in 0..other.n {
                let i = idx(g, h);
                for h2 in other.neighbors(h).iter() {
                    rows[i] |= bit(idx(g, h2));
                }
                for g2 in self.neighbors(g).iter() {
                    rows[i] |= bit(idx(g2, h));
                }
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => {
                let mut l = Vec::with_capacity(n);
                for la in a {
                    for lb in b {
                        l.push(format!("({la},{lb})"));
                    }
                }
                Some(l)
            }
            _ => None,
        };
        Ok(Graph { n, rows, labels })
    }

    /// The complementary prism: vertices `0..n` carry this graph, vertices
    /// `n..2n` carry its complement, and `i` is matched with `n + i`.
    pub fn complementary_prism(&self) -> Result<Graph> {
        let n2 = 2 * self.n;
        if n2 > MAX_VERTICES {
            return Err(Error::GraphTooLarge {
                n: n2,
                limit: MAX_VERTICES,
            });
        }
        let n = self.n;
        let co = self.complement();
        let mut rows = vec![0u128; n2];
        for v in 0..n {
            rows[v] = self.rows[v] | bit(n + v);
            rows[n + v] = (co.rows[v] << n) | bit(v);
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = l.clone();
            out.extend(l.iter().map(|s| format!("{s}~")));
            out
        });
        Ok(Graph {
            n: n2,
            rows,
            labels,
        })
    }

    /// Connected components, in order of their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u128;
        let all = full_mask(self.n);
        let mut out = Vec::new();
        while seen != all {
            let start = (!seen & all).trailing_zeros() as usize;
            let comp = self.reach(start);
            seen |= comp;
            out.push(VertexSet::from_bits(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0) == full_mask(self.n)
    }

    /// Vertices reachable from `start`, as a mask (includes `start`).
    fn reach(&self, start: usize) -> u128 {
        let mut comp = bit(start);
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u128;
            for v in VertexSet::from_bits(frontier).iter() {
                next |= self.rows[v];
            }
            frontier = next & !comp;
            comp |= frontier;
        }
        comp
    }

    /// Open and closed neighborhoods plus the vertices at distance exactly 2.
    pub fn neighborhoods(&self, v: usize) -> Result<Neighborhoods> {
        if v >= self.n {
            return Err(Error::IndexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let open = self.rows[v];
        let closed = open | bit(v);
        let mut reach1 = 0u128;
        for u in VertexSet::from_bits(open).iter() {
            reach1 |= self.rows[u];
        }
        let second = reach1 & !closed;
        Ok(Neighborhoods {
            open: VertexSet::from_bits(open),
            closed: VertexSet::from_bits(closed),
            second: VertexSet::from_bits(second),
        })
    }

    /// The subgraph induced by `keep`, with vertices renumbered in ascending
    /// order of their original index. Labels follow along.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        let verts: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        if verts.len() != keep.len() {
            let bad = keep.iter().find(|&v| v >= self.n).unwrap();
            return Err(Error::IndexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        if verts.is_empty() {
            return Err(Error::BadParameters(
                "induced subgraph on no vertices".into(),
            ));
        }
        let m = verts.len();
        let mut rows = vec![0u128; m];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.rows[u] & bit(v) != 0 {
                    rows[i] |= bit(j);
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| verts.iter().map(|&v| l[v].clone()).collect());
        Ok(Graph { n: m, rows, labels })
    }

    /// True when every pair inside `set` is adjacent.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| {
            let others = set.bits() & !bit(v);
            self.rows[v] & others == others
        })
    }

    /// True when no pair inside `set` is adjacent.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.rows[v] & set.bits() == 0)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Open/closed neighborhood of a vertex and its distance-2 shell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Neighborhoods {
    pub open: VertexSet,
    pub closed: VertexSet,
    pub second: VertexSet,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::IndexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complete_and_empty() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert!(k3.is_clique(VertexSet::full(3)));
        let e2 = Graph::new(2, &[]).unwrap();
        assert_eq!(e2.edge_count(), 0);
        let c5 = cycle(5);
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));
    }

    #[test]
    fn complement_involution() {
        for g in [cycle(5), path(4), complete(6), Graph::new(3, &[]).unwrap()] {
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn complement_of_c5_is_a_5_cycle() {
        // check isomorphism exhaustively over all relabelings
        let c5 = cycle(5);
        let co = c5.complement();
        let mut perm = [0usize, 1, 2, 3, 4];
        let mut found = false;
        permute(&mut perm, 0, &mut |p| {
            let same = (0..5)
                .all(|u| (0..5).all(|v| u == v || (c5.adjacent(u, v) == co.adjacent(p[u], p[v]))));
            found |= same;
        });
        assert!(found);

        fn permute(p: &mut [usize; 5], k: usize, f: &mut impl FnMut(&[usize; 5])) {
            if k == 5 {
                f(p);
                return;
            }
            for i in k..5 {
                p.swap(k, i);
                permute(p, k + 1, f);
                p.swap(k, i);
            }
        }
    }

    #[test]
    fn products() {
        let k2 = complete(2);
        let c4 = k2.cartesian_product(&k2).unwrap();
        assert_eq!(c4.n(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));

        let grid23 = path(2).cartesian_product(&path(3)).unwrap();
        assert_eq!(grid23.n(), 6);
        assert_eq!(grid23.edge_count(), 7);

        let q3 = k2
            .cartesian_product(&k2)
            .unwrap()
            .cartesian_product(&k2)
            .unwrap();
        assert_eq!(q3.n(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert!(q3.vertices().all(|v| q3.degree(v) == 3));
    }

    #[test]
    fn prism_shape() {
        // K1 -> K2, K2 -> P4 (u~ - u - v - v~)
        let k1 = Graph::new(1, &[]).unwrap();
        let p = k1.complementary_prism().unwrap();
        assert_eq!((p.n(), p.edge_count()), (2, 1));

        let k2 = complete(2);
        let p4 = k2.complementary_prism().unwrap();
        assert_eq!(p4.n(), 4);
        assert_eq!(p4.edges(), vec![(0, 1), (0, 2), (1, 3)]);

        // C5 -> Petersen: 10 vertices, 15 edges, 3-regular
        let pet = cycle(5).complementary_prism().unwrap();
        assert_eq!((pet.n(), pet.edge_count()), (10, 15));
        assert!(pet.vertices().all(|v| pet.degree(v) == 3));
    }

    #[test]
    fn prism_edge_count_formula() {
        for g in [cycle(5), path(7), complete(4), Graph::new(6, &[]).unwrap()] {
            let n = g.n();
            let p = g.complementary_prism().unwrap();
            assert_eq!(p.n(), 2 * n);
            assert_eq!(p.edge_count(), n * (n - 1) / 2 + n);
            assert!(p.is_connected());
        }
    }

    #[test]
    fn prism_adjacency_rule() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (3, 4), (1, 3)]).unwrap();
        let n = g.n();
        let p = g.complementary_prism().unwrap();
        for u in 0..2 * n {
            for v in 0..2 * n {
                if u == v {
                    continue;
                }
                let expect = match (u < n, v < n) {
                    (true, true) => g.adjacent(u, v),
                    (false, false) => !g.adjacent(u - n, v - n),
                    (true, false) => v - n == u,
                    (false, true) => u - n == v,
                };
                assert_eq!(p.adjacent(u, v), expect, "pair ({u},{v})");
            }
        }
    }

    #[test]
    fn components_and_neighborhoods() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].iter().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(comps[1].iter().collect::<Vec<_>>(), vec![2]);

        assert_eq!(complete(3).components().len(), 1);
        assert_eq!(Graph::new(3, &[]).unwrap().components().len(), 3);

        let c5 = cycle(5);
        for v in c5.vertices() {
            let nh = c5.neighborhoods(v).unwrap();
            assert_eq!(nh.open.len(), 2);
            assert_eq!(nh.second.len(), 2);
        }

        // star K_{1,4}: the center has an empty distance-2 shell
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(star.neighborhoods(0).unwrap().second.is_empty());
        assert!(star.neighborhoods(5).is_err());
    }

    #[test]
    fn induced_renumbers() {
        let g = cycle(5);
        let h = g.induced([0, 1, 3].into_iter().collect()).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(0, 1)]);
    }

    #[test]
    fn prism_labels_get_suffix() {
        let g = Graph::new(2, &[(0, 1)])
            .unwrap()
            .with_labels(vec!["u".into(), "v".into()])
            .unwrap();
        let p = g.complementary_prism().unwrap();
        assert_eq!(p.label(2), Some("u~"));
        assert_eq!(p.label(3), Some("v~"));
    }
}
