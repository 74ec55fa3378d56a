//! Geodesic intervals, interior triples, and the general-position verifiers.
//!
//! A set is in general position when no member lies on a geodesic between
//! two other members; the 3-variant only forbids this on geodesics of
//! length at most 3. Both properties have a direct distance check and an
//! equivalent characterization through the component structure of the
//! induced subgraph; the two are kept as independent code paths so each can
//! audit the other.

use crate::dist::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Vertices lying on some shortest `u`,`v`-path (including the endpoints).
pub fn interval(d: &DistanceMatrix, u: usize, v: usize) -> Result<VertexSet> {
    let duv = d.get(u, v).ok_or(Error::UnreachablePair(u, v))?;
    Ok((0..d.n())
        .filter(|&w| match (d.get(u, w), d.get(w, v)) {
            (Some(a), Some(b)) => a + b == duv,
            _ => false,
        })
        .collect())
}

/// All unordered triples `{u, w, v}` with `w` strictly inside a `u`,`v`
/// geodesic. With `max_len` set, only triples whose endpoints are at
/// distance at most `max_len` are kept.
pub fn bad_triples(g: &Graph, d: &DistanceMatrix, max_len: Option<u32>) -> Vec<[usize; 3]> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let Some(duv) = d.get(u, v) else { continue };
            if max_len.is_some_and(|cap| duv > cap) {
                continue;
            }
            for w in 0..n {
                if w == u || w == v {
                    continue;
                }
                if let (Some(a), Some(b)) = (d.get(u, w), d.get(w, v)) {
                    if a + b == duv {
                        let mut t = [u, w, v];
                        t.sort_unstable();
                        out.push(t);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Direct check: no member of `s` is interior to a geodesic between two
/// other members. Works on disconnected graphs (pairs in different
/// components have no geodesic).
pub fn is_general_position(g: &Graph, d: &DistanceMatrix, s: VertexSet) -> bool {
    no_interior_triple(g, d, s, None)
}

/// Direct check for the 3-variant: no three members on a common geodesic of
/// length at most 3.
pub fn is_gp3(g: &Graph, d: &DistanceMatrix, s: VertexSet) -> bool {
    no_interior_triple(g, d, s, Some(3))
}

fn no_interior_triple(_g: &Graph, d: &DistanceMatrix, s: VertexSet, max_len: Option<u32>) -> bool {
    let members: Vec<usize> = s.iter().collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            let Some(duv) = d.get(u, v) else { continue };
            if max_len.is_some_and(|cap| duv > cap) {
                continue;
            }
            for &w in &members {
                if w == u || w == v {
                    continue;
                }
                if let (Some(a), Some(b)) = (d.get(u, w), d.get(w, v)) {
                    if a + b == duv {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Distance between two parts of a partition, as seen across all pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterDistance {
    /// Every cross pair has this distance.
    Uniform(u32),
    /// Cross pairs disagree.
    Mixed,
}

/// The witness produced by the characterization-based verifiers: the clique
/// partition of the induced subgraph together with the pairwise distances
/// between cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub cliques: Vec<VertexSet>,
    /// `inter[i][j]` for `i != j`; the diagonal is `Uniform(0)`.
    pub inter: Vec<Vec<InterDistance>>,
}

/// Why a characterization check rejected a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharFailure {
    /// Some component of the induced subgraph is not a clique.
    ComponentNotClique(usize),
    /// Two cliques see more than one distance (general position only).
    MixedDistance(usize, usize),
    /// Some clique distance equals the sum of two others through a middle
    /// clique (general position only).
    TransitiveTriple(usize, usize, usize),
    /// A clique pair at distance 2 also has a cross pair at another
    /// distance (3-variant only).
    DistanceTwoViolation(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharOutcome {
    Valid(PartitionCertificate),
    Invalid(CharFailure),
}

impl CharOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, CharOutcome::Valid(_))
    }

    pub fn certificate(&self) -> Option<&PartitionCertificate> {
        match self {
            CharOutcome::Valid(c) => Some(c),
            CharOutcome::Invalid(_) => None,
        }
    }
}

/// Characterization of general position sets on a connected graph: the
/// components of the induced subgraph are cliques forming a
/// distance-constant partition in which no part distance is the sum of two
/// others.
pub fn general_position_certificate(
    g: &Graph,
    d: &DistanceMatrix,
    s: VertexSet,
) -> Result<CharOutcome> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let cliques = match induced_clique_components(g, s) {
        Ok(c) => c,
        Err(f) => return Ok(CharOutcome::Invalid(f)),
    };
    let p = cliques.len();
    let mut inter = vec![vec![InterDistance::Uniform(0); p]; p];
    let mut value = vec![vec![0u32; p]; p];
    for i in 0..p {
        for j in i + 1..p {
            match cross_distance(d, cliques[i], cliques[j]) {
                Some(k) => {
                    inter[i][j] = InterDistance::Uniform(k);
                    inter[j][i] = InterDistance::Uniform(k);
                    value[i][j] = k;
                    value[j][i] = k;
                }
                None => return Ok(CharOutcome::Invalid(CharFailure::MixedDistance(i, j))),
            }
        }
    }
    for i in 0..p {
        for j in 0..p {
            for k in 0..p {
                if i != j && j != k && i != k && value[i][k] == value[i][j] + value[j][k] {
                    return Ok(CharOutcome::Invalid(CharFailure::TransitiveTriple(i, j, k)));
                }
            }
        }
    }
    Ok(CharOutcome::Valid(PartitionCertificate { cliques, inter }))
}

/// Characterization of 3-general-position sets on a connected graph:
/// components of the induced subgraph are cliques, and whenever one cross
/// pair of two cliques is at distance 2, every cross pair is.
pub fn gp3_certificate(g: &Graph, d: &DistanceMatrix, s: VertexSet) -> Result<CharOutcome> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let cliques = match induced_clique_components(g, s) {
        Ok(c) => c,
        Err(f) => return Ok(CharOutcome::Invalid(f)),
    };
    let p = cliques.len();
    let mut inter = vec![vec![InterDistance::Uniform(0); p]; p];
    for i in 0..p {
        for j in i + 1..p {
            let mut seen_two = false;
            let mut seen_other = false;
            let mut first = None;
            let mut mixed = false;
            for u in cliques[i].iter() {
                for v in cliques[j].iter() {
                    let k = d.get(u, v).expect("connected");
                    if k == 2 {
                        seen_two = true;
                    } else {
                        seen_other = true;
                    }
                    match first {
                        None => first = Some(k),
                        Some(f) if f != k => mixed = true,
                        _ => {}
                    }
                }
            }
            if seen_two && seen_other {
                return Ok(CharOutcome::Invalid(CharFailure::DistanceTwoViolation(
                    i, j,
                )));
            }
            let e = if mixed {
                InterDistance::Mixed
            } else {
                InterDistance::Uniform(first.expect("cliques nonempty"))
            };
            inter[i][j] = e;
            inter[j][i] = e;
        }
    }
    Ok(CharOutcome::Valid(PartitionCertificate { cliques, inter }))
}

/// Components of the subgraph induced by `s`, required to all be cliques.
fn induced_clique_components(
    g: &Graph,
    s: VertexSet,
) -> std::result::Result<Vec<VertexSet>, CharFailure> {
    let mut remaining = s;
    let mut out = Vec::new();
    while let Some(start) = remaining.min() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(g.neighbors(v).intersection(s));
            }
            frontier = next.difference(comp);
            comp = comp.union(frontier);
        }
        remaining = remaining.difference(comp);
        if !g.is_clique(comp) {
            return Err(CharFailure::ComponentNotClique(out.len()));
        }
        out.push(comp);
    }
    Ok(out)
}

/// The common distance between all cross pairs, or `None` if they disagree.
fn cross_distance(d: &DistanceMatrix, a: VertexSet, b: VertexSet) -> Option<u32> {
    let mut common = None;
    for u in a.iter() {
        for v in b.iter() {
            let k = d.get(u, v)?;
            match common {
                None => common = Some(k),
                Some(c) if c != k => return None,
                _ => {}
            }
        }
    }
    common
}
