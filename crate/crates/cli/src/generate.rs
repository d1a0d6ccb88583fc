use std::fs;
use std::path::Path;
use std::str::FromStr;

use anyhow::Context;
use clap::{Args, Subcommand};
use inclust::format::{print_boolean, InstanceFile};
use inclust::report::{InstanceSummary, Report, Witness};
use inclust_core::gen::{
    clique_cover_instance, closest_string_instance, coloring_completion_instance, dominating_set_instance,
    random_planted, random_uniform, triangle_partition_instance, Graph, MissingSpec, PlantedSpec,
};
use inclust_core::solve::Answer;
use inclust_core::{Instance, TriVector, Variant};

use crate::{variant_arg, Status, UsageError};

/// `complete:N`, `cycle:N`, `rook`, `random:N:P:SEED` or `edges:N:a-b,c-d,…`
/// (0-based vertices).
#[derive(Debug, Clone)]
pub struct GraphSpec(Graph);

impl FromStr for GraphSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| format!("`{t}` is not a vertex count"));
        let g = match parts.as_slice() {
            ["complete", n] => Graph::complete(num(n)?),
            ["cycle", n] => {
                let n = num(n)?;
                if n < 3 {
                    return Err("a cycle needs at least 3 vertices".into());
                }
                Graph::cycle(n)
            }
            ["rook"] => Graph::rook_3x3(),
            ["random", n, p, seed] => {
                let p: f64 = p.parse().map_err(|_| format!("`{p}` is not a probability"))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(format!("edge probability {p} is outside [0, 1]"));
                }
                let seed = seed.parse::<u64>().map_err(|_| format!("`{seed}` is not a seed"))?;
                Graph::random(num(n)?, p, seed)
            }
            ["edges", n, list] => {
                let edges = list
                    .split(',')
                    .filter(|e| !e.is_empty())
                    .map(|e| {
                        let (a, b) = e.split_once('-').ok_or_else(|| format!("edge `{e}` is not `a-b`"))?;
                        Ok((num(a)?, num(b)?))
                    })
                    .collect::<Result<Vec<_>, String>>()?;
                Graph::new(num(n)?, edges).map_err(|e| e.to_string())?
            }
            _ => return Err(format!("unknown graph `{s}` (complete:N, cycle:N, rook, random:N:P:SEED, edges:N:a-b,…)")),
        };
        Ok(GraphSpec(g))
    }
}

#[derive(Args, Debug, Clone)]
pub struct RandomArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, value_parser = variant_arg)]
    variant: Variant,
    /// Rows allowed to hold MISSING entries.
    #[arg(long, default_value_t = 0)]
    missing_rows: usize,
    /// Columns allowed to hold MISSING entries.
    #[arg(long, default_value_t = 0)]
    missing_cols: usize,
    /// MISSING entries to place within those rows and columns.
    #[arg(long, default_value_t = 0)]
    missing_entries: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl RandomArgs {
    fn spec(&self) -> PlantedSpec {
        PlantedSpec {
            n: self.n,
            d: self.d,
            k: self.k,
            r: self.r,
            variant: self.variant,
            missing: MissingSpec { rows: self.missing_rows, cols: self.missing_cols, entries: self.missing_entries },
        }
    }
}

#[derive(Subcommand, Debug, Clone)]
pub enum Generator {
    /// 3-coloring as clustering completion (k = 3, r = 0).
    Coloring {
        #[arg(long)]
        graph: GraphSpec,
        #[arg(long, value_parser = variant_arg, default_value = "in")]
        variant: Variant,
    },
    /// Closest string as In with k = 1.
    ClosestString {
        /// Comma-separated 0/1 strings of equal length.
        #[arg(long, value_delimiter = ',', required = true)]
        strings: Vec<String>,
        #[arg(long)]
        r: usize,
    },
    /// Dominating set of size k as In.
    DominatingSet {
        #[arg(long)]
        graph: GraphSpec,
        #[arg(long)]
        k: usize,
    },
    /// Clique cover with k cliques as Diam.
    CliqueCover {
        #[arg(long)]
        graph: GraphSpec,
        #[arg(long)]
        k: usize,
    },
    /// Partition of a regular K4-free graph into triangles as Diam.
    TrianglePartition {
        #[arg(long)]
        graph: GraphSpec,
    },
    /// Rows scattered around hidden centers; the sidecar holds the planted solution.
    Planted(RandomArgs),
    /// Uniformly random rows; the answer is unknown.
    Uniform(RandomArgs),
}

struct Generated {
    instance: Instance,
    truth: Option<(Answer, Option<Witness>)>,
}

fn generate(g: &Generator) -> anyhow::Result<Generated> {
    let usage = |e: inclust_core::gen::GenError| UsageError(e.to_string());
    let plain = |instance| Generated { instance, truth: None };
    Ok(match g {
        Generator::Coloring { graph, variant } => {
            let instance = coloring_completion_instance(&graph.0, *variant).map_err(usage)?;
            let answer = if graph.0.is_colorable(3) { Answer::Yes } else { Answer::No };
            Generated { instance, truth: Some((answer, None)) }
        }
        Generator::ClosestString { strings, r } => {
            let rows = strings
                .iter()
                .map(|s| TriVector::parse(s).ok_or_else(|| UsageError(format!("`{s}` is not a 0/1 string"))))
                .collect::<Result<Vec<_>, _>>()?;
            plain(closest_string_instance(&rows, *r).map_err(usage)?)
        }
        Generator::DominatingSet { graph, k } => plain(dominating_set_instance(&graph.0, *k).map_err(usage)?),
        Generator::CliqueCover { graph, k } => plain(clique_cover_instance(&graph.0, *k).map_err(usage)?),
        Generator::TrianglePartition { graph } => plain(triangle_partition_instance(&graph.0).map_err(usage)?),
        Generator::Planted(a) => {
            let p = random_planted(&a.spec(), a.seed).map_err(usage)?;
            Generated { instance: p.instance, truth: Some((Answer::Yes, Some(Witness::from_solution(&p.witness)))) }
        }
        Generator::Uniform(a) => plain(random_uniform(&a.spec(), a.seed).map_err(usage)?),
    })
}

pub fn run(g: &Generator, output: Option<&Path>, truth: Option<&Path>) -> anyhow::Result<Status> {
    let generated = generate(g)?;
    let text = print_boolean(&generated.instance);
    match output {
        Some(p) => fs::write(p, &text).with_context(|| format!("cannot write {}", p.display()))?,
        None => print!("{text}"),
    }
    if let Some(path) = truth {
        // Rows are written as generated, duplicates included.
        let file = InstanceFile::Boolean(generated.instance);
        let mut sidecar = Report::new("gen", InstanceSummary::new(&file, true, 0));
        match generated.truth {
            Some((answer, witness)) => {
                sidecar.decision = Some(answer);
                sidecar.witness = witness;
            }
            None => sidecar.note = Some("ground truth unknown for this generator".into()),
        }
        fs::write(path, sidecar.to_json() + "\n").with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(Status::Success)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_specs() {
        assert_eq!("complete:4".parse::<GraphSpec>().unwrap().0.edges().len(), 6);
        assert_eq!("cycle:5".parse::<GraphSpec>().unwrap().0.edges().len(), 5);
        assert_eq!("rook".parse::<GraphSpec>().unwrap().0.vertex_count(), 9);
        assert_eq!("edges:3:0-1,1-2".parse::<GraphSpec>().unwrap().0.edges().len(), 2);
        assert!("random:6:0.5:1".parse::<GraphSpec>().is_ok());
        assert!("random:6:1.5:1".parse::<GraphSpec>().is_err());
        assert!("cycle:2".parse::<GraphSpec>().is_err());
        assert!("star:4".parse::<GraphSpec>().is_err());
    }
}
