//! Command line front end: exact general position numbers of graphs and
//! their complementary prisms, family generators, and verification sweeps
//! for the built-in rule catalog.

#![forbid(unsafe_code)]

mod compute;
mod family;
mod report;
mod verify;

use std::io::Read;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use genpos::families::generate;
use genpos::io::{parse_auto, write_edge_list, write_graph6};
use genpos::solver::SolverConfig;
use genpos::Graph;

#[derive(Parser)]
#[command(
    name = "genpos",
    version,
    about = "Exact general position numbers of complementary prisms"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full record for one graph: invariants, bounds, exact prism value,
    /// and every applicable rule with a verdict.
    Compute {
        /// Input file (edge list or graph6, auto-detected), or - for stdin.
        input: Option<String>,
        /// Generate the input instead: a family name plus parameters.
        #[arg(long, num_args = 1.., value_name = "NAME [PARAMS]")]
        family: Option<Vec<String>>,
        #[arg(long, default_value_t = 60)]
        timeout_secs: u64,
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Sweep a verification rule over generated instances and emit a TSV
    /// report. Exits nonzero if any row is a DISCREPANCY.
    Verify {
        /// Rule id: tree, grid, hypercube, bipartite, attains-upper,
        /// bounds, split, block, multipartite, snake, diam2,
        /// bipartite-alpha.
        rule: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Tree sizes, e.g. 4..9 (inclusive).
        #[arg(long, default_value = "4..9")]
        tree_n: String,
        /// Random graph sizes for the generic sweeps.
        #[arg(long, default_value = "4..8")]
        gnp_n: String,
        /// Bipartite instance sizes.
        #[arg(long, default_value = "4..8")]
        bip_n: String,
        /// Split graph sizes.
        #[arg(long, default_value = "5..8")]
        split_n: String,
        /// Block graph sizes.
        #[arg(long, default_value = "4..9")]
        block_n: String,
        /// Largest grid cell count for the grid sweep.
        #[arg(long, default_value_t = 10)]
        grid_max: usize,
        /// Hypercube dimensions.
        #[arg(long, default_value = "2..3")]
        cube_r: String,
        /// Snake chain lengths.
        #[arg(long, default_value = "5..6")]
        k: String,
        #[arg(long, default_value_t = 60)]
        timeout_secs: u64,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Write the TSV here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit a family member in graph6 or edge-list form.
    Gen {
        #[arg(long, num_args = 1.., required = true, value_name = "NAME [PARAMS]")]
        family: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the complementary prism of the input graph.
    Prism {
        /// Input file (edge list or graph6, auto-detected), or - for stdin.
        input: Option<String>,
        #[arg(long, num_args = 1.., value_name = "NAME [PARAMS]")]
        family: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(discrepancy) => {
            if discrepancy {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Compute {
            input,
            family,
            timeout_secs,
            threads,
        } => {
            setup_threads(threads)?;
            let (g, origin) = load_graph(input.as_deref(), family.as_deref())?;
            let cfg = SolverConfig::with_timeout(Duration::from_secs(timeout_secs));
            compute::run(&g, &origin, &cfg)
        }
        Cmd::Verify {
            rule,
            seed,
            samples,
            tree_n,
            gnp_n,
            bip_n,
            split_n,
            block_n,
            grid_max,
            cube_r,
            k,
            timeout_secs,
            threads,
            output,
        } => {
            setup_threads(threads)?;
            let opts = verify::SweepOpts {
                seed,
                samples,
                timeout_secs,
                tree_n: parse_range(&tree_n)?,
                gnp_n: parse_range(&gnp_n)?,
                bip_n: parse_range(&bip_n)?,
                split_n: parse_range(&split_n)?,
                block_n: parse_range(&block_n)?,
                grid_max,
                cube_r: parse_range(&cube_r)?,
                k: parse_range(&k)?,
            };
            let report = verify::run(&rule, &opts)?;
            emit(output.as_deref(), &report.tsv())?;
            eprintln!("{}", report.summary());
            Ok(report.has_discrepancy())
        }
        Cmd::Gen {
            family,
            format,
            output,
        } => {
            let spec = family::parse_family(&family)?;
            let g = generate(&spec)?.graph;
            emit(output.as_deref(), &render(&g, format)?)?;
            Ok(false)
        }
        Cmd::Prism {
            input,
            family,
            format,
            output,
        } => {
            let (g, _) = load_graph(input.as_deref(), family.as_deref())?;
            let prism = g.complementary_prism()?;
            emit(output.as_deref(), &render(&prism, format)?)?;
            Ok(false)
        }
    }
}

fn setup_threads(threads: usize) -> Result<()> {
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("thread pool")?;
    }
    Ok(())
}

fn load_graph(input: Option<&str>, family: Option<&[String]>) -> Result<(Graph, String)> {
    match (input, family) {
        (_, Some(tokens)) => {
            let spec = family::parse_family(tokens)?;
            Ok((generate(&spec)?.graph, family::describe(tokens)))
        }
        (Some("-"), None) => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            Ok((parse_auto(&text)?, "stdin".into()))
        }
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            Ok((parse_auto(&text)?, path.to_string()))
        }
        (None, None) => bail!("provide an input file or --family"),
    }
}

fn render(g: &Graph, format: Format) -> Result<String> {
    Ok(match format {
        Format::Graph6 => format!("{}\n", write_graph6(g)?),
        Format::Edgelist => write_edge_list(g),
    })
}

fn emit(path: Option<&std::path::Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>> {
    if let Some((a, b)) = text.split_once("..") {
        let lo: usize = a
            .trim()
            .parse()
            .with_context(|| format!("bad range {text:?}"))?;
        let hi: usize = b
            .trim()
            .parse()
            .with_context(|| format!("bad range {text:?}"))?;
        if lo > hi {
            bail!("empty range {text:?}");
        }
        Ok(lo..=hi)
    } else {
        let v: usize = text
            .trim()
            .parse()
            .with_context(|| format!("bad range {text:?}"))?;
        Ok(v..=v)
    }
}
