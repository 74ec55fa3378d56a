//! The `compute` subcommand: the full record for one graph — metric data,
//! invariants, prism bounds, the exact prism value with its witness, and
//! every applicable rule with a verdict.

use anyhow::Result;

use genpos::classify::classify;
use genpos::dist::{metric_summary, DistanceMatrix};
use genpos::solver::{self, SolverConfig};
use genpos::theorems::{self, Target};
use genpos::Graph;

/// Prints the record; returns true when some rule disagrees with the exact
/// values.
pub fn run(g: &Graph, origin: &str, cfg: &SolverConfig) -> Result<bool> {
    let n = g.n();
    let co = g.complement();
    println!("instance: {origin}");
    println!("n: {n}  m: {}", g.edge_count());
    println!(
        "connected: {}  complement connected: {}",
        g.is_connected(),
        co.is_connected()
    );

    let d = DistanceMatrix::new(g);
    if let Ok(ms) = metric_summary(g, &d) {
        println!(
            "radius: {}  diameter: {}  center: {}",
            ms.rad, ms.diam, ms.center
        );
    } else {
        println!("radius: -  diameter: -  center: - (disconnected)");
    }

    let flags = classify(g);
    println!(
        "classes: tree={} bipartite={} split={} block={} multipartite={}",
        flags.is_tree,
        flags.is_bipartite,
        flags.is_split,
        flags.is_block_graph,
        flags.is_complete_multipartite
    );

    let bundle = solver::invariant_bundle_with(g, cfg)?;
    println!(
        "omega: {}  alpha: {}  eta: {}  gp3: {}  gp3bar: {}",
        bundle.omega, bundle.alpha, bundle.eta, bundle.gp3, bundle.gp3bar
    );

    let own = solver::max_gp_with(g, cfg)?;
    println!("gp: {}  witness: {}", own.value, own.witness);

    let (lo, hi) = solver::prism_bounds_with(g, cfg)?;
    let prism = g.complementary_prism()?;
    let exact = solver::max_gp_with(&prism, cfg)?;
    println!(
        "prism: n={} m={}  bounds: [{lo}, {hi}]",
        prism.n(),
        prism.edge_count()
    );
    println!(
        "prism gp: {}  witness: {}  nodes: {}  millis: {}",
        exact.value,
        exact.witness,
        exact.stats.nodes,
        exact.stats.elapsed.as_millis()
    );

    let mut discrepancy = false;
    let checks = theorems::applicable_checks(g, cfg)?;
    for (rule, pred) in &checks {
        let reference = match rule.target() {
            Target::PrismGp => exact.value,
            Target::GraphGp => own.value,
        };
        let verdict = if pred.admits(reference) {
            match pred.kind {
                theorems::PredictionKind::Exact(_) => "CONFIRMED",
                theorems::PredictionKind::Range(..) => "BOUND_RESPECTED",
            }
        } else {
            discrepancy = true;
            "DISCREPANCY"
        };
        let witness = pred
            .witness
            .map(|v| format!(" (witness vertex {v})"))
            .unwrap_or_default();
        println!("check {}: {pred}{witness} -> {verdict}", rule.name());
    }

    // rules of the same target must tolerate a common value
    for (i, (ra, pa)) in checks.iter().enumerate() {
        for (rb, pb) in &checks[i + 1..] {
            if ra.target() == rb.target() && !pa.consistent_with(pb) {
                discrepancy = true;
                println!(
                    "check conflict: {} vs {} ({pa} vs {pb})",
                    ra.name(),
                    rb.name()
                );
            }
        }
    }

    if g.is_connected() {
        let floor = bundle.gp3.max(solver::max_gp3_with(&co, false, cfg)?.value);
        let equality = exact.value == floor;
        let verdict = if equality == flags.is_complete_multipartite {
            "CONFIRMED"
        } else {
            discrepancy = true;
            "DISCREPANCY"
        };
        println!(
            "check multipartite: prism gp {} floor {floor} (equality={equality}, class={}) -> {verdict}",
            exact.value, flags.is_complete_multipartite
        );
    }

    Ok(discrepancy)
}
