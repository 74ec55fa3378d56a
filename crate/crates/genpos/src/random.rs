//! Seeded random graph models for the verification sweeps: G(n,p), uniform
//! labeled trees via Pruefer sequences, split graphs and block graphs.
//! Everything is a pure function of the RNG stream, so a sweep is
//! reproducible from its seed alone.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::Graph;

/// The fixed-stream RNG used everywhere seeds appear.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdos-Renyi G(n, p).
pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("edges are in range")
}

/// Uniform random labeled tree on `n >= 1` vertices.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    match n {
        0 | 1 => Graph::new(1, &[]).expect("single vertex"),
        2 => Graph::new(2, &[(0, 1)]).expect("one edge"),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            generate(&FamilySpec::PrueferTree(seq))
                .expect("sequence entries are in range")
                .graph
        }
    }
}

const SAMPLE_TRIES: usize = 1000;

/// G(n, p) conditioned on connectivity, by bounded rejection.
pub fn connected_gnp(rng: &mut impl Rng, n: usize, p: f64) -> Result<Graph> {
    for _ in 0..SAMPLE_TRIES {
        let g = gnp(rng, n, p);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::BadParameters(format!(
        "no connected G({n}, {p}) sample in {SAMPLE_TRIES} tries"
    )))
}

/// G(n, p) conditioned on both the graph and its complement being
/// connected.
pub fn coconnected_gnp(rng: &mut impl Rng, n: usize, p: f64) -> Result<Graph> {
    for _ in 0..SAMPLE_TRIES {
        let g = gnp(rng, n, p);
        if g.is_connected() && g.complement().is_connected() {
            return Ok(g);
        }
    }
    Err(Error::BadParameters(format!(
        "no co-connected G({n}, {p}) sample in {SAMPLE_TRIES} tries"
    )))
}

/// Connected bipartite graph: random side sizes, cross edges with
/// probability `p`, rejection until connected.
pub fn connected_bipartite(rng: &mut impl Rng, n: usize, p: f64) -> Result<Graph> {
    if n == 1 {
        return Graph::new(1, &[]);
    }
    for _ in 0..SAMPLE_TRIES {
        let a = rng.gen_range(1..n);
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::BadParameters(format!(
        "no connected bipartite sample on {n} vertices in {SAMPLE_TRIES} tries"
    )))
}

/// Random split graph: a clique of random size, each remaining vertex wired
/// to clique vertices with probability `p`, labels shuffled.
pub fn random_split_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let c = rng.gen_range(1..=n);
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(rng);
    let mut edges = Vec::new();
    for u in 0..c {
        for v in u + 1..c {
            edges.push((relabel[u], relabel[v]));
        }
    }
    for y in c..n {
        for u in 0..c {
            if rng.gen_bool(p) {
                edges.push((relabel[y], relabel[u]));
            }
        }
    }
    Graph::new(n, &edges).expect("edges are in range")
}

/// Random connected block graph on exactly `n` vertices, grown by gluing
/// cliques of size 2..=4 onto existing vertices.
pub fn random_block_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    let mut count = 1;
    while count < n {
        let anchor = rng.gen_range(0..count);
        let grow = rng.gen_range(1..=3.min(n - count));
        let fresh: Vec<usize> = (count..count + grow).collect();
        for (i, &a) in fresh.iter().enumerate() {
            edges.push((anchor, a));
            for &b in &fresh[i + 1..] {
                edges.push((a, b));
            }
        }
        count += grow;
    }
    Graph::new(n, &edges).expect("edges are in range")
}
