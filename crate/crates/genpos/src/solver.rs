//! Exact maximization of conflict-free vertex sets by branch and bound.
//!
//! General position numbers, their 3-variants, clique and independence
//! numbers all reduce to the same search: find a largest vertex set that
//! contains no forbidden pair and no forbidden triple. The conflict system
//! is materialized once per graph and indexed per vertex so that branch
//! feasibility updates are single mask operations.

use std::time::{Duration, Instant};

use crate::dist::DistanceMatrix;
use crate::error::{Error, Result};
use crate::geodesic::bad_triples;
use crate::graph::Graph;
use crate::set::{bit, full_mask, VertexSet};

/// Limits for the exact solvers.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Largest instance the solver accepts.
    pub max_vertices: usize,
    /// Cap on enumerated optimal sets before `TooManyOptima`.
    pub optima_cap: usize,
    /// Wall-clock deadline; `None` means unbounded.
    pub deadline: Option<Instant>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_vertices: 64,
            optima_cap: 1_000_000,
            deadline: None,
        }
    }
}

impl SolverConfig {
    pub fn with_timeout(timeout: Duration) -> Self {
        SolverConfig {
            deadline: Some(Instant::now() + timeout),
            ..SolverConfig::default()
        }
    }
}

/// Search counters for reports.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

/// An exact optimum: the value, the lexicographically smallest witness, and
/// (on request) every optimal set.
#[derive(Debug, Clone)]
pub struct GpResult {
    pub value: u32,
    pub witness: VertexSet,
    pub optima: Option<Vec<VertexSet>>,
    pub stats: SolveStats,
}

/// Forbidden pairs and triples over `0..n`.
pub(crate) struct ConflictSystem {
    n: usize,
    /// `pair[v]`: vertices that can never share a set with `v`.
    pair: Vec<u128>,
    /// `trip[u][v]`: vertices `w` with `{u, v, w}` forbidden (symmetric).
    trip: Vec<Vec<u128>>,
    /// Number of conflicts each vertex participates in, for branch order.
    weight: Vec<u64>,
}

impl ConflictSystem {
    fn new(n: usize) -> Self {
        ConflictSystem {
            n,
            pair: vec![0; n],
            trip: vec![vec![0; n]; n],
            weight: vec![0; n],
        }
    }

    fn add_pair(&mut self, u: usize, v: usize) {
        self.pair[u] |= bit(v);
        self.pair[v] |= bit(u);
        self.weight[u] += 1;
        self.weight[v] += 1;
    }

    fn add_triple(&mut self, t: [usize; 3]) {
        let [a, b, c] = t;
        self.trip[a][b] |= bit(c);
        self.trip[b][a] |= bit(c);
        self.trip[a][c] |= bit(b);
        self.trip[c][a] |= bit(b);
        self.trip[b][c] |= bit(a);
        self.trip[c][b] |= bit(a);
        self.weight[a] += 1;
        self.weight[b] += 1;
        self.weight[c] += 1;
    }

    /// Vertices that joining `v` would newly exclude, given `chosen`.
    fn newly_blocked(&self, chosen: u128, v: usize) -> u128 {
        let mut m = self.pair[v];
        let mut c = chosen;
        while c != 0 {
            let a = c.trailing_zeros() as usize;
            c &= c - 1;
            m |= self.trip[a][v];
        }
        m
    }

    fn from_triples(n: usize, triples: &[[usize; 3]]) -> Self {
        let mut cs = ConflictSystem::new(n);
        for &t in triples {
            cs.add_triple(t);
        }
        cs
    }
}

struct Search<'a> {
    cs: &'a ConflictSystem,
    /// Branch order: descending conflict weight, index ascending.
    order: Vec<usize>,
    /// `suffix[i]`: mask of `order[i..]`.
    suffix: Vec<u128>,
    /// Vertices excluded from every solution.
    forbidden: u128,
    best: u32,
    nodes: u64,
    deadline: Option<Instant>,
}

impl<'a> Search<'a> {
    fn new(cs: &'a ConflictSystem, forbidden: u128, deadline: Option<Instant>) -> Self {
        let mut order: Vec<usize> = (0..cs.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(cs.weight[v]), v));
        let mut suffix = vec![0u128; cs.n + 1];
        for i in (0..cs.n).rev() {
            suffix[i] = suffix[i + 1] | bit(order[i]);
        }
        Search {
            cs,
            order,
            suffix,
            forbidden,
            best: 0,
            nodes: 0,
            deadline,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes % 64 == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Error::Timeout);
                }
            }
        }
        Ok(())
    }

    /// Greedy incumbent along the branch order.
    fn greedy(&self) -> u32 {
        let mut chosen = 0u128;
        let mut blocked = self.forbidden;
        let mut count = 0;
        for &v in &self.order {
            if blocked & bit(v) != 0 {
                continue;
            }
            blocked |= self.cs.newly_blocked(chosen, v);
            chosen |= bit(v);
            count += 1;
        }
        count
    }

    fn maximize(&mut self) -> Result<u32> {
        self.best = self.greedy();
        self.descend(0, 0, 0, self.forbidden)?;
        Ok(self.best)
    }

    fn descend(&mut self, mut idx: usize, chosen: u128, count: u32, blocked: u128) -> Result<()> {
        self.tick()?;
        while idx < self.cs.n && blocked & bit(self.order[idx]) != 0 {
            idx += 1;
        }
        if idx == self.cs.n {
            self.best = self.best.max(count);
            return Ok(());
        }
        let open = (self.suffix[idx] & !blocked).count_ones();
        if count + open <= self.best {
            return Ok(());
        }
        let v = self.order[idx];
        let include_blocked = blocked | self.cs.newly_blocked(chosen, v);
        self.descend(idx + 1, chosen | bit(v), count + 1, include_blocked)?;
        self.descend(idx + 1, chosen, count, blocked)
    }

    /// Is there a conflict-free extension of `chosen` by `need` vertices
    /// taken from `candidates`?
    fn completable(
        &mut self,
        chosen: u128,
        blocked: u128,
        candidates: u128,
        need: u32,
    ) -> Result<bool> {
        self.tick()?;
        if need == 0 {
            return Ok(true);
        }
        let open = candidates & !blocked;
        if open.count_ones() < need {
            return Ok(false);
        }
        let v = open.trailing_zeros() as usize;
        let rest = candidates & !bit(v);
        let include_blocked = blocked | self.cs.newly_blocked(chosen, v);
        if self.completable(chosen | bit(v), include_blocked, rest, need - 1)? {
            return Ok(true);
        }
        self.completable(chosen, blocked, rest, need)
    }

    /// Lexicographically smallest conflict-free set of size `target`.
    fn lex_min_witness(&mut self, target: u32) -> Result<VertexSet> {
        let all = full_mask(self.cs.n);
        let mut chosen = 0u128;
        let mut blocked = self.forbidden;
        let mut count = 0;
        for v in 0..self.cs.n {
            if count == target {
                break;
            }
            if blocked & bit(v) != 0 {
                continue;
            }
            let later = all & !((bit(v) << 1) - 1);
            let include_blocked = blocked | self.cs.newly_blocked(chosen, v);
            if self.completable(chosen | bit(v), include_blocked, later, target - count - 1)? {
                chosen |= bit(v);
                blocked = include_blocked;
                count += 1;
            }
        }
        debug_assert_eq!(count, target);
        Ok(VertexSet::from_bits(chosen))
    }

    /// Every conflict-free set of exactly `target` vertices, ascending in
    /// lexicographic order, capped at `cap`.
    fn enumerate(&mut self, target: u32, cap: usize) -> Result<Vec<VertexSet>> {
        let mut out = Vec::new();
        self.enumerate_from(0, 0, 0, self.forbidden, target, cap, &mut out)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn enumerate_from(
        &mut self,
        v: usize,
        chosen: u128,
        count: u32,
        blocked: u128,
        target: u32,
        cap: usize,
        out: &mut Vec<VertexSet>,
    ) -> Result<()> {
        self.tick()?;
        if count == target {
            if out.len() == cap {
                return Err(Error::TooManyOptima(cap));
            }
            out.push(VertexSet::from_bits(chosen));
            return Ok(());
        }
        if v == self.cs.n {
            return Ok(());
        }
        let remaining = (full_mask(self.cs.n) & !((bit(v) << 1) - 1) | bit(v)) & !blocked;
        if count + remaining.count_ones() < target {
            return Ok(());
        }
        if blocked & bit(v) == 0 {
            let include_blocked = blocked | self.cs.newly_blocked(chosen, v);
            self.enumerate_from(
                v + 1,
                chosen | bit(v),
                count + 1,
                include_blocked,
                target,
                cap,
                out,
            )?;
        }
        self.enumerate_from(v + 1, chosen, count, blocked, target, cap, out)
    }
}

fn check_size(g: &Graph, cfg: &SolverConfig) -> Result<()> {
    if g.n() > cfg.max_vertices {
        return Err(Error::GraphTooLarge {
            n: g.n(),
            limit: cfg.max_vertices,
        });
    }
    Ok(())
}

fn solve(cs: &ConflictSystem, collect_all: bool, cfg: &SolverConfig) -> Result<GpResult> {
    solve_within(cs, full_mask(cs.n), collect_all, cfg)
}

/// Same search restricted to subsets of `allowed`. Conflicts still run over
/// the whole vertex range, only the candidates shrink.
fn solve_within(
    cs: &ConflictSystem,
    allowed: u128,
    collect_all: bool,
    cfg: &SolverConfig,
) -> Result<GpResult> {
    let start = Instant::now();
    let forbidden = full_mask(cs.n) & !allowed;
    let mut search = Search::new(cs, forbidden, cfg.deadline);
    let value = search.maximize()?;
    let witness = search.lex_min_witness(value)?;
    let optima = if collect_all {
        Some(search.enumerate(value, cfg.optima_cap)?)
    } else {
        None
    };
    Ok(GpResult {
        value,
        witness,
        optima,
        stats: SolveStats {
            nodes: search.nodes,
            elapsed: start.elapsed(),
        },
    })
}

fn gp_conflicts(g: &Graph, max_len: Option<u32>) -> ConflictSystem {
    let d = DistanceMatrix::new(g);
    ConflictSystem::from_triples(g.n(), &bad_triples(g, &d, max_len))
}

/// Exact general position number with witness.
pub fn max_gp(g: &Graph) -> Result<GpResult> {
    max_gp_with(g, &SolverConfig::default())
}

pub fn max_gp_with(g: &Graph, cfg: &SolverConfig) -> Result<GpResult> {
    check_size(g, cfg)?;
    solve(&gp_conflicts(g, None), false, cfg)
}

/// Exact 3-general-position number; `collect_all` additionally enumerates
/// every maximum set.
pub fn max_gp3(g: &Graph, collect_all: bool) -> Result<GpResult> {
    max_gp3_with(g, collect_all, &SolverConfig::default())
}

pub fn max_gp3_with(g: &Graph, collect_all: bool, cfg: &SolverConfig) -> Result<GpResult> {
    check_size(g, cfg)?;
    solve(&gp_conflicts(g, Some(3)), collect_all, cfg)
}

/// Clique number.
pub fn omega(g: &Graph) -> Result<u32> {
    omega_with(g, &SolverConfig::default())
}

pub fn omega_with(g: &Graph, cfg: &SolverConfig) -> Result<u32> {
    check_size(g, cfg)?;
    let n = g.n();
    let mut cs = ConflictSystem::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.adjacent(u, v) {
                cs.add_pair(u, v);
            }
        }
    }
    Ok(solve(&cs, false, cfg)?.value)
}

/// Independence number.
pub fn alpha(g: &Graph) -> Result<u32> {
    alpha_with(g, &SolverConfig::default())
}

pub fn alpha_with(g: &Graph, cfg: &SolverConfig) -> Result<u32> {
    omega_with(&g.complement(), cfg)
}

/// Largest set inducing a disjoint union of cliques, i.e. the largest
/// induced complete multipartite subgraph of the complement.
pub fn eta(g: &Graph) -> Result<u32> {
    eta_with(g, &SolverConfig::default())
}

pub fn eta_with(g: &Graph, cfg: &SolverConfig) -> Result<u32> {
    check_size(g, cfg)?;
    let n = g.n();
    let mut cs = ConflictSystem::new(n);
    // a triple spanning exactly two edges induces a path on three vertices
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let edges =
                    g.adjacent(a, b) as u8 + g.adjacent(a, c) as u8 + g.adjacent(b, c) as u8;
                if edges == 2 {
                    cs.add_triple([a, b, c]);
                }
            }
        }
    }
    Ok(solve(&cs, false, cfg)?.value)
}

/// Maximum over all maximum 3-general-position sets `S` of the size of a
/// largest 3-general-position set of the complement avoiding the partners
/// of `S`.
///
/// The candidate set is restricted but the position property is taken in
/// the whole complement: a set that only looks valid inside the induced
/// remainder can be cut by a geodesic through an excluded vertex, and such
/// sets do not transfer to the prism.
pub fn gp3bar(g: &Graph) -> Result<u32> {
    gp3bar_with(g, &SolverConfig::default())
}

pub fn gp3bar_with(g: &Graph, cfg: &SolverConfig) -> Result<u32> {
    check_size(g, cfg)?;
    let all = VertexSet::full(g.n());
    let co = g.complement();
    let co_conflicts = gp_conflicts(&co, Some(3));
    let sets = max_gp3_with(g, true, cfg)?
        .optima
        .expect("collect_all was set");
    let mut best = 0;
    for s in sets {
        let rest = all.difference(s);
        if rest.is_empty() {
            continue;
        }
        best = best.max(solve_within(&co_conflicts, rest.bits(), false, cfg)?.value);
    }
    Ok(best)
}

/// The invariants entering the prism bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantBundle {
    pub omega: u32,
    pub alpha: u32,
    pub eta: u32,
    pub gp3: u32,
    pub gp3bar: u32,
}

pub fn invariant_bundle(g: &Graph) -> Result<InvariantBundle> {
    invariant_bundle_with(g, &SolverConfig::default())
}

pub fn invariant_bundle_with(g: &Graph, cfg: &SolverConfig) -> Result<InvariantBundle> {
    Ok(InvariantBundle {
        omega: omega_with(g, cfg)?,
        alpha: alpha_with(g, cfg)?,
        eta: eta_with(g, cfg)?,
        gp3: max_gp3_with(g, false, cfg)?.value,
        gp3bar: gp3bar_with(g, cfg)?,
    })
}

/// `(lower, upper)` bounds on the general position number of the
/// complementary prism: the upper bound is `n + 1` for connected input and
/// `n` otherwise; the lower bound combines the 3-variant invariants of the
/// graph and its complement.
pub fn prism_bounds(g: &Graph) -> Result<(u32, u32)> {
    prism_bounds_with(g, &SolverConfig::default())
}

pub fn prism_bounds_with(g: &Graph, cfg: &SolverConfig) -> Result<(u32, u32)> {
    let n = g.n() as u32;
    let upper = if g.is_connected() { n + 1 } else { n };
    let co = g.complement();
    let from_g = max_gp3_with(g, false, cfg)?.value + gp3bar_with(g, cfg)?;
    let from_co = max_gp3_with(&co, false, cfg)?.value + gp3bar_with(&co, cfg)?;
    Ok((from_g.max(from_co), upper))
}
