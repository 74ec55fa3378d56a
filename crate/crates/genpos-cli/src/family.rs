//! Parsing of `--family <name> [params...]` token lists.

use anyhow::{anyhow, bail, Context, Result};
use genpos::families::FamilySpec;

/// Builds a family spec from CLI tokens, e.g. `cycle 5`, `grid 3 3`,
/// `multipartite 2 3 4`, `broom 2,3 1`, `pruefer 0 0 1`.
pub fn parse_family(tokens: &[String]) -> Result<FamilySpec> {
    let (name, params) = tokens
        .split_first()
        .ok_or_else(|| anyhow!("--family needs at least a family name"))?;
    let ints = |p: &[String]| -> Result<Vec<usize>> {
        p.iter()
            .map(|t| {
                t.parse::<usize>()
                    .with_context(|| format!("bad number {t:?}"))
            })
            .collect()
    };
    let one = |p: &[String]| -> Result<usize> {
        match ints(p)?.as_slice() {
            [v] => Ok(*v),
            _ => bail!("family {name:?} takes exactly one parameter"),
        }
    };
    let spec = match name.as_str() {
        "path" => FamilySpec::Path(one(params)?),
        "cycle" => FamilySpec::Cycle(one(params)?),
        "complete" => FamilySpec::Complete(one(params)?),
        "empty" => FamilySpec::Empty(one(params)?),
        "multipartite" => FamilySpec::CompleteMultipartite(ints(params)?),
        "star" => FamilySpec::Star(one(params)?),
        "doublestar" | "double-star" => match ints(params)?.as_slice() {
            [a, b] => FamilySpec::DoubleStar(*a, *b),
            _ => bail!("doublestar takes two leaf counts"),
        },
        "pruefer" => FamilySpec::PrueferTree(ints(params)?),
        "grid" => match ints(params)?.as_slice() {
            [r, c] => FamilySpec::Grid(*r, *c),
            _ => bail!("grid takes two side lengths"),
        },
        "hypercube" | "cube" => FamilySpec::Hypercube(one(params)?),
        "petersen" => no_params(params, FamilySpec::Petersen)?,
        "net" | "fig2-g1" => no_params(params, FamilySpec::Net)?,
        "net-plus" | "fig2-g2" => no_params(params, FamilySpec::NetPlus)?,
        "snake" | "gk" => FamilySpec::TriangleSnake(one(params)?),
        "fig1" => no_params(params, FamilySpec::DoubleStar(2, 2))?,
        "broom" | "thm35-family" => {
            let lists: Vec<Vec<usize>> = params
                .iter()
                .map(|t| {
                    t.split(',')
                        .map(|x| {
                            x.parse::<usize>()
                                .with_context(|| format!("bad size {x:?}"))
                        })
                        .collect()
                })
                .collect::<Result<_>>()?;
            match lists.as_slice() {
                [l, r] => FamilySpec::CliqueBroom(l.clone(), r.clone()),
                _ => bail!("broom takes two comma-separated clique size lists"),
            }
        }
        other => bail!("unknown family {other:?}"),
    };
    Ok(spec)
}

fn no_params(params: &[String], spec: FamilySpec) -> Result<FamilySpec> {
    if params.is_empty() {
        Ok(spec)
    } else {
        bail!("this family takes no parameters")
    }
}

/// A short human-readable tag for report rows.
pub fn describe(tokens: &[String]) -> String {
    tokens.join(" ")
}
