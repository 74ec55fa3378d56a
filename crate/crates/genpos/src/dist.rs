use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

const INF: u32 = u32::MAX;

/// All-pairs shortest-path hop counts, computed by breadth-first search from
/// every vertex. Pairs in different components are unreachable; `get` returns
/// `None` for them rather than a large number.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut d = vec![INF; n * n];
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            let mut seen = VertexSet::singleton(s).bits();
            let mut frontier = seen;
            let mut level = 0u32;
            while frontier != 0 {
                for v in VertexSet::from_bits(frontier).iter() {
                    row[v] = level;
                }
                let mut next = 0u128;
                for v in VertexSet::from_bits(frontier).iter() {
                    next |= g.neighbors(v).bits();
                }
                frontier = next & !seen;
                seen |= frontier;
                level += 1;
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance in hops, or `None` across components.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.d[u * self.n + v] {
            INF => None,
            k => Some(k),
        }
    }

    pub fn is_finite(&self, u: usize, v: usize) -> bool {
        self.d[u * self.n + v] != INF
    }

    /// Largest finite distance, `None` for a disconnected graph.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for u in 0..self.n {
            for v in 0..self.n {
                match self.d[u * self.n + v] {
                    INF => return None,
                    k => best = best.max(k),
                }
            }
        }
        Some(best)
    }
}

/// Eccentricities, radius, diameter and center of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricSummary {
    pub ecc: Vec<u32>,
    pub rad: u32,
    pub diam: u32,
    pub center: VertexSet,
}

pub fn metric_summary(g: &Graph, d: &DistanceMatrix) -> Result<MetricSummary> {
    let n = g.n();
    let mut ecc = Vec::with_capacity(n);
    for u in 0..n {
        let mut e = 0;
        for v in 0..n {
            match d.get(u, v) {
                Some(k) => e = e.max(k),
                None => return Err(Error::DisconnectedGraph),
            }
        }
        ecc.push(e);
    }
    let rad = *ecc.iter().min().expect("n >= 1");
    let diam = *ecc.iter().max().expect("n >= 1");
    let center = (0..n).filter(|&v| ecc[v] == rad).collect();
    Ok(MetricSummary {
        ecc,
        rad,
        diam,
        center,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn path_distances() {
        let g = path(4);
        let d = DistanceMatrix::new(&g);
        assert_eq!(d.get(0, 3), Some(3));
        assert_eq!(d.get(0, 0), Some(0));
        assert_eq!(d.get(2, 1), Some(1));
    }

    #[test]
    fn k4_minus_edge() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let d = DistanceMatrix::new(&g);
        assert_eq!(d.get(2, 3), Some(2));
        assert!((0..4).all(|u| (0..4).all(|v| d.get(u, v).unwrap() <= 2)));
    }

    #[test]
    fn unreachable_pairs() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let d = DistanceMatrix::new(&g);
        assert_eq!(d.get(0, 2), None);
        assert_eq!(d.get(2, 2), Some(0));
        assert_eq!(d.diameter(), None);
    }

    #[test]
    fn distance_one_iff_adjacent() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let d = DistanceMatrix::new(&g);
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(d.get(u, v) == Some(1), g.adjacent(u, v));
            }
        }
    }

    #[test]
    fn prism_distances_at_most_three() {
        for g in [path(5), cycle(6), path(2)] {
            let p = g.complementary_prism().unwrap();
            let d = DistanceMatrix::new(&p);
            for u in 0..p.n() {
                for v in 0..p.n() {
                    assert!(d.get(u, v).unwrap() <= 3);
                }
            }
        }
    }

    #[test]
    fn diam_two_input_gives_diam_two_prism() {
        let c5 = cycle(5);
        let d = DistanceMatrix::new(&c5.complementary_prism().unwrap());
        assert_eq!(d.diameter(), Some(2));
    }

    #[test]
    fn metric_summaries() {
        let g = path(5);
        let m = metric_summary(&g, &DistanceMatrix::new(&g)).unwrap();
        assert_eq!((m.rad, m.diam), (2, 4));
        assert_eq!(m.center.iter().collect::<Vec<_>>(), vec![2]);

        let c = cycle(5);
        let m = metric_summary(&c, &DistanceMatrix::new(&c)).unwrap();
        assert_eq!((m.rad, m.diam), (2, 2));
        assert_eq!(m.center, VertexSet::full(5));
        assert!(m.rad <= m.diam && m.diam <= 2 * m.rad);

        let disconnected = Graph::new(2, &[]).unwrap();
        assert_eq!(
            metric_summary(&disconnected, &DistanceMatrix::new(&disconnected)),
            Err(Error::DisconnectedGraph)
        );
    }

    #[test]
    fn double_star_center() {
        // two adjacent centers, two leaves each: radius 2, adjacent center pair
        let g = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let m = metric_summary(&g, &DistanceMatrix::new(&g)).unwrap();
        assert_eq!(m.rad, 2);
        assert_eq!(m.center.iter().collect::<Vec<_>>(), vec![0, 1]);
        assert!(g.adjacent(0, 1));
    }
}
