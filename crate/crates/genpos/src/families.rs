//! Deterministic generators for the graph families used by the checks and
//! sweeps. Vertex numberings are fixed so that emitted graph6 strings are
//! byte-identical across runs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// A parameterized family instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path on `n >= 1` vertices, numbered along the path.
    Path(usize),
    /// Cycle on `n >= 3` vertices, numbered around the cycle.
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    /// Complete multipartite graph; parts occupy consecutive index ranges.
    CompleteMultipartite(Vec<usize>),
    /// Star with `m >= 1` leaves; the center is vertex 0.
    Star(usize),
    /// Two adjacent centers 0 and 1 with `a` and `b` pendant leaves.
    DoubleStar(usize, usize),
    /// The labeled tree decoded from a Pruefer sequence (n = len + 2).
    PrueferTree(Vec<usize>),
    /// Grid: Cartesian product of paths, vertex (r, c) at index r*cols + c.
    Grid(usize, usize),
    /// The r-fold Cartesian product of an edge; vertex index reads as the
    /// binary coordinate vector.
    Hypercube(usize),
    /// The complementary prism of a 5-cycle.
    Petersen,
    /// Triangle 0,1,2 with a pendant at each corner (3,4,5).
    Net,
    /// The net plus the edge between pendant 3 and corner 1.
    NetPlus,
    /// A chain of k+1 triangles, consecutive triangles sharing one vertex:
    /// vertices alternate v1, u1, v2, u2, ..., v_{k+2}; block i is
    /// {v_i, u_i, v_{i+1}}.
    TriangleSnake(usize),
    /// A path u, v, w where u is joined to a disjoint clique of each size in
    /// `left` and w to one of each size in `right`.
    CliqueBroom(Vec<usize>, Vec<usize>),
}

/// A generated graph plus the structurally meaningful vertex sets of its
/// family (cut vertices, simplicial vertices, spine, ...).
#[derive(Debug, Clone)]
pub struct FamilyArtifact {
    pub graph: Graph,
    pub named_sets: BTreeMap<String, VertexSet>,
}

impl FamilyArtifact {
    fn plain(graph: Graph) -> Self {
        FamilyArtifact {
            graph,
            named_sets: BTreeMap::new(),
        }
    }

    pub fn named(&self, key: &str) -> Option<VertexSet> {
        self.named_sets.get(key).copied()
    }
}

pub fn generate(spec: &FamilySpec) -> Result<FamilyArtifact> {
    match spec {
        FamilySpec::Path(n) => {
            require(*n >= 1, "path needs n >= 1")?;
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Ok(FamilyArtifact::plain(Graph::new(*n, &edges)?))
        }
        FamilySpec::Cycle(n) => {
            require(*n >= 3, "cycle needs n >= 3")?;
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Ok(FamilyArtifact::plain(Graph::new(*n, &edges)?))
        }
        FamilySpec::Complete(n) => {
            require(*n >= 1, "complete graph needs n >= 1")?;
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    edges.push((u, v));
                }
            }
            Ok(FamilyArtifact::plain(Graph::new(*n, &edges)?))
        }
        FamilySpec::Empty(n) => {
            require(*n >= 1, "empty graph needs n >= 1")?;
            Ok(FamilyArtifact::plain(Graph::new(*n, &[])?))
        }
        FamilySpec::CompleteMultipartite(parts) => {
            require(!parts.is_empty(), "multipartite needs at least one part")?;
            require(parts.iter().all(|&p| p >= 1), "part sizes must be >= 1")?;
            let n: usize = parts.iter().sum();
            let mut side = Vec::with_capacity(n);
            for (i, &p) in parts.iter().enumerate() {
                side.extend(std::iter::repeat_n(i, p));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if side[u] != side[v] {
                        edges.push((u, v));
                    }
                }
            }
            Ok(FamilyArtifact::plain(Graph::new(n, &edges)?))
        }
        FamilySpec::Star(m) => {
            require(*m >= 1, "star needs at least one leaf")?;
            let edges: Vec<_> = (1..=*m).map(|v| (0, v)).collect();
            let mut art = FamilyArtifact::plain(Graph::new(m + 1, &edges)?);
            art.named_sets
                .insert("center".into(), VertexSet::singleton(0));
            art.named_sets.insert("leaves".into(), (1..=*m).collect());
            Ok(art)
        }
        FamilySpec::DoubleStar(a, b) => {
            require(
                *a >= 1 && *b >= 1,
                "double star needs leaves on both centers",
            )?;
            let n = 2 + a + b;
            let mut edges = vec![(0, 1)];
            edges.extend((2..2 + a).map(|v| (0, v)));
            edges.extend((2 + a..n).map(|v| (1, v)));
            let mut art = FamilyArtifact::plain(Graph::new(n, &edges)?);
            art.named_sets
                .insert("centers".into(), [0, 1].into_iter().collect());
            art.named_sets.insert("leaves".into(), (2..n).collect());
            Ok(art)
        }
        FamilySpec::PrueferTree(seq) => Ok(FamilyArtifact::plain(pruefer_decode(seq)?)),
        FamilySpec::Grid(rows, cols) => {
            require(*rows >= 1 && *cols >= 1, "grid needs positive sides")?;
            let pr = generate(&FamilySpec::Path(*rows))?.graph;
            let pc = generate(&FamilySpec::Path(*cols))?.graph;
            Ok(FamilyArtifact::plain(pr.cartesian_product(&pc)?))
        }
        FamilySpec::Hypercube(r) => {
            require(*r >= 1 && *r <= 7, "hypercube needs 1 <= r <= 7")?;
            let k2 = generate(&FamilySpec::Complete(2))?.graph;
            let mut g = k2.clone();
            for _ in 1..*r {
                g = g.cartesian_product(&k2)?;
            }
            Ok(FamilyArtifact::plain(g))
        }
        FamilySpec::Petersen => {
            let c5 = generate(&FamilySpec::Cycle(5))?.graph;
            let g = c5.complementary_prism()?;
            let mut art = FamilyArtifact::plain(g);
            // one maximum general position set, for reference in tests
            art.named_sets
                .insert("gp_set".into(), [0, 2, 3, 5, 6, 9].into_iter().collect());
            Ok(art)
        }
        FamilySpec::Net => net(false),
        FamilySpec::NetPlus => net(true),
        FamilySpec::TriangleSnake(k) => triangle_snake(*k),
        FamilySpec::CliqueBroom(left, right) => clique_broom(left, right),
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadParameters(msg.into()))
    }
}

fn net(extra_edge: bool) -> Result<FamilyArtifact> {
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)];
    if extra_edge {
        edges.push((3, 1));
    }
    let labels = ["u1", "u2", "u3", "v1", "v2", "v3"];
    let g = Graph::new(6, &edges)?.with_labels(labels.iter().map(|s| s.to_string()).collect())?;
    let mut art = FamilyArtifact::plain(g);
    art.named_sets
        .insert("clique".into(), [0, 1, 2].into_iter().collect());
    art.named_sets
        .insert("independent".into(), [3, 4, 5].into_iter().collect());
    Ok(art)
}

/// v_i sits at index 2(i-1), u_i at 2i-1 (1-based names). Block i is the
/// triangle {v_i, u_i, v_{i+1}}; n = 2k+3.
fn triangle_snake(k: usize) -> Result<FamilyArtifact> {
    let n = 2 * k + 3;
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::BadParameters(format!("snake k={k} is too large")));
    }
    let v = |i: usize| 2 * (i - 1); // i in 1..=k+2
    let u = |i: usize| 2 * i - 1; // i in 1..=k+1
    let mut edges = Vec::new();
    for i in 1..=k + 1 {
        edges.push((v(i), u(i)));
        edges.push((u(i), v(i + 1)));
        edges.push((v(i), v(i + 1)));
    }
    let mut labels = Vec::with_capacity(n);
    for i in 1..=k + 2 {
        labels.push(format!("v{i}"));
        if i <= k + 1 {
            labels.push(format!("u{i}"));
        }
    }
    let g = Graph::new(n, &edges)?.with_labels(labels)?;

    let simplicial: VertexSet = [v(1), v(k + 2)]
        .into_iter()
        .chain((1..=k + 1).map(u))
        .collect();
    let cut: VertexSet = (2..=k + 1).map(v).collect();
    // the cut vertices induce a path v2 - v3 - ... - v_{k+1}; split it into
    // the two alternating classes, larger one first
    let larger: VertexSet = (2..=k + 1).step_by(2).map(v).collect();
    let smaller: VertexSet = (3..=k + 1).step_by(2).map(v).collect();

    let mut art = FamilyArtifact::plain(g);
    art.named_sets.insert("simplicial".into(), simplicial);
    art.named_sets.insert("cut".into(), cut);
    art.named_sets.insert("cut_alternate_large".into(), larger);
    art.named_sets.insert("cut_alternate_small".into(), smaller);
    Ok(art)
}

/// Spine u=0, v=1, w=2; the cliques follow, left bundle first.
fn clique_broom(left: &[usize], right: &[usize]) -> Result<FamilyArtifact> {
    require(
        !left.is_empty() && !right.is_empty(),
        "broom needs cliques on both sides",
    )?;
    require(
        left.iter().chain(right).all(|&s| s >= 1),
        "clique sizes must be >= 1",
    )?;
    let n = 3 + left.iter().sum::<usize>() + right.iter().sum::<usize>();
    let mut edges = vec![(0, 1), (1, 2)];
    let mut next = 3;
    let mut left_set = VertexSet::EMPTY;
    let mut right_set = VertexSet::EMPTY;
    for (sizes, anchor, acc) in [
        (left, 0usize, &mut left_set),
        (right, 2usize, &mut right_set),
    ] {
        for &s in sizes {
            let members: Vec<usize> = (next..next + s).collect();
            next += s;
            for (i, &a) in members.iter().enumerate() {
                edges.push((anchor, a));
                for &b in &members[i + 1..] {
                    edges.push((a, b));
                }
                acc.insert(a);
            }
        }
    }
    let g = Graph::new(n, &edges)?;
    let mut art = FamilyArtifact::plain(g);
    art.named_sets
        .insert("spine".into(), [0, 1, 2].into_iter().collect());
    art.named_sets
        .insert("center".into(), VertexSet::singleton(1));
    art.named_sets.insert("left".into(), left_set);
    art.named_sets.insert("right".into(), right_set);
    Ok(art)
}

/// Decodes a Pruefer sequence into the unique labeled tree on
/// `seq.len() + 2` vertices.
fn pruefer_decode(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::BadParameters("sequence too long".into()));
    }
    for &s in seq {
        if s >= n {
            return Err(Error::BadParameters(format!(
                "sequence entry {s} out of range for n = {n}"
            )));
        }
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaf_candidates: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &s in seq {
        let std::cmp::Reverse(leaf) = leaf_candidates.pop().expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
        if degree[s] == 1 {
            leaf_candidates.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(a) = leaf_candidates.pop().expect("two vertices remain");
    let std::cmp::Reverse(b) = leaf_candidates.pop().expect("two vertices remain");
    edges.push((a, b));
    Graph::new(n, &edges)
}
