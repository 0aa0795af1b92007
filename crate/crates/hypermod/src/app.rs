//! Argument parsing and command dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hypermod_core::decompose::{hdp, hsp, is_homogeneous, DecomposeOptions};
use hypermod_core::fulkerson::{blocker_omega, feasible_elements};
use hypermod_core::matroid::{forest_representation, greedy_rank, rank};
use hypermod_core::metrics::{
    arboricity, density, min_hyperforest_cover, partition_connectivity, strength,
};
use hypermod_core::modulus::{family, mod1, mod2_mnp, SolverOptions, TreeFamily};
use hypermod_core::oracle::{enumerate_hypertrees, enumerate_multitrees};
use hypermod_core::{to_f64, Hypergraph, Limits};

use crate::error::{CliError, CliResult};
use crate::format::{self, Format};
use crate::report::*;
use crate::verify::battery;

#[derive(Debug, Parser)]
#[command(name = "hypermod", version, about = "Strength, arboricity, modulus and decompositions of small hypergraphs")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Hypergraph file.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Input format; guessed from the extension when absent.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// JSON object mapping edge ids to positive rational weights.
    #[arg(long, global = true)]
    pub weights: Option<PathBuf>,
    /// Frank-Wolfe gap at which the 2-modulus solver stops.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest vertex count for exhaustive partition scans.
    #[arg(long, global = true)]
    pub cap_vertices: Option<usize>,
    /// Largest edge count for exhaustive edge-subset scans.
    #[arg(long, global = true)]
    pub cap_edges: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Tree,
    Multitree,
}

impl FamilyArg {
    fn kind(self) -> TreeFamily {
        match self {
            FamilyArg::Tree => TreeFamily::Tree,
            FamilyArg::Multitree => TreeFamily::Multitree,
        }
    }

    fn name(self) -> &'static str {
        match self {
            FamilyArg::Tree => "hypertrees",
            FamilyArg::Multitree => "multi-trees",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, connectivity, strength, arboricity and density.
    Info,
    /// Strength S (S_σ with --weights) and an optimal partition.
    Strength,
    /// Fractional arboricity D and a smallest hyperforest cover.
    Arboricity,
    /// Rank of an edge set in the hypergraphic matroid.
    Rank {
        /// Comma-separated edge ids; all edges when absent.
        #[arg(long, value_delimiter = ',')]
        edges: Option<Vec<String>>,
    },
    /// Lists the hypertrees (or multi-trees).
    Hypertrees {
        #[arg(long, value_enum, default_value = "tree")]
        family: FamilyArg,
    },
    /// p-modulus of the hypertree or multi-tree family.
    Mod {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
        p: u8,
        #[arg(long, value_enum, default_value = "multitree")]
        family: FamilyArg,
    },
    /// The Fulkerson blocker of the multi-tree family.
    Blocker {
        /// Also list feasible partitions whose shrunk hypergraph has a cut
        /// vertex; their vectors are not extreme.
        #[arg(long)]
        all: bool,
    },
    /// Removes top level sets of η* until every piece is homogeneous.
    Decompose {
        #[arg(long, value_enum, default_value = "multitree")]
        family: FamilyArg,
        /// Writes the tree as Graphviz DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Contracts bottom level sets of η* until η* is constant.
    Shrink {
        #[arg(long, value_enum, default_value = "multitree")]
        family: FamilyArg,
    },
    /// Runs the identity battery.
    Verify,
}

struct Ctx {
    h: Hypergraph,
    limits: Limits,
    opts: DecomposeOptions,
    json: bool,
}

fn load(common: &Common) -> CliResult<Ctx> {
    if !(common.tol > 0.0 && common.tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", common.tol)));
    }
    let Some(path) = &common.input else {
        return Err(CliError::Usage("--input FILE is required".into()));
    };
    let mut h = format::load(path, common.format)?;
    if let Some(w) = &common.weights {
        let weights = format::load_weights(w, &h)?;
        h = h.with_weights(&weights)?;
    }
    let mut limits = Limits::default();
    if let Some(v) = common.cap_vertices {
        limits.max_vertices = v;
    }
    if let Some(e) = common.cap_edges {
        limits.max_edges = e;
    }
    let opts = DecomposeOptions {
        solver: SolverOptions {
            tol: common.tol,
            ..SolverOptions::default()
        },
        limits,
        ..DecomposeOptions::default()
    };
    Ok(Ctx {
        h,
        limits,
        opts,
        json: common.json,
    })
}

fn emit<T: Serialize + std::fmt::Display>(out: &mut dyn Write, json: bool, report: &T) -> CliResult<()> {
    let text = if json {
        serde_json::to_string_pretty(report).expect("reports serialize") + "\n"
    } else {
        report.to_string()
    };
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn summary(h: &Hypergraph, lim: &Limits) -> CliResult<Summary> {
    let (n, m) = (h.num_vertices(), h.num_edges());
    let all: Vec<usize> = (0..m).collect();
    let (k, s, d, theta) = if n >= 2 && m > 0 {
        let s = strength(h, None, lim)?.value;
        let d = arboricity(h, lim)?.value;
        (
            Some(partition_connectivity(h, lim)?),
            Some(s),
            Some(d),
            Some(density(h, &all)?),
        )
    } else {
        (None, None, None, None)
    };
    let homogeneous = match (&s, &d) {
        (Some(s), Some(d)) => s == d && is_homogeneous(h, lim)?,
        _ => true,
    };
    Ok(Summary {
        vertices: h.vertices().to_vec(),
        num_vertices: n,
        num_edges: m,
        partition_connectivity: k,
        strength: s.as_ref().map(q),
        arboricity: d.as_ref().map(q),
        density: theta.as_ref().map(q),
        homogeneous,
    })
}

fn require_connected(h: &Hypergraph, what: &str) -> CliResult<()> {
    if h.num_vertices() < 2 || !h.is_connected() {
        return Err(CliError::Precondition(format!(
            "{what} needs a connected hypergraph with at least two vertices"
        )));
    }
    Ok(())
}

/// The hypertree family exists only for partition-connected input.
fn require_hypertrees(h: &Hypergraph, lim: &Limits) -> CliResult<()> {
    let k = if h.is_connected() { partition_connectivity(h, lim)? } else { 0 };
    if k == 0 {
        return Err(CliError::Precondition(format!(
            "the hypertree family is empty: the hypergraph is not partition-connected (k={k}), \
             and a hypergraph contains k disjoint hypertrees exactly when it is \
             k-partition-connected; use --family multitree"
        )));
    }
    Ok(())
}

/// Runs one command, writing its report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let ctx = load(&cli.common)?;
    let Ctx { h, limits: lim, opts, json } = &ctx;
    let (h, lim, json) = (h, lim, *json);
    match &cli.command {
        Command::Info => {
            let connected = h.is_connected();
            let report = if connected {
                InfoReport {
                    connected,
                    summary: summary(h, lim)?,
                    components: Vec::new(),
                }
            } else {
                InfoReport {
                    connected,
                    summary: empty_summary(h),
                    components: h.components().iter().map(|c| summary(c, lim)).collect::<CliResult<_>>()?,
                }
            };
            emit(out, json, &report)
        }
        Command::Strength => {
            require_connected(h, "strength")?;
            let weighted = h.has_weights();
            let w = h.weights();
            let r = strength(h, weighted.then_some(&w[..]), lim)?;
            emit(
                out,
                json,
                &StrengthReport {
                    value: q(&r.value),
                    weighted,
                    partition: class_names(h, &r.witness),
                    cut: edge_names(h, r.witness.cut()),
                },
            )
        }
        Command::Arboricity => {
            let r = arboricity(h, lim)?;
            let (count, cover) = min_hyperforest_cover(h, lim)?;
            emit(
                out,
                json,
                &ArboricityReport {
                    value: q(&r.value),
                    densest: r.witness.iter().map(|&v| h.vertices()[v].clone()).collect(),
                    cover_size: count,
                    cover: cover.forests.iter().map(|f| edge_names(h, f)).collect(),
                },
            )
        }
        Command::Rank { edges } => {
            let f: Vec<usize> = match edges {
                Some(ids) => {
                    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
                    h.edge_positions(&ids)?
                }
                None => (0..h.num_edges()).collect(),
            };
            let r = rank(h, &f, lim)?;
            let independent = r == f.len();
            let representation = if independent {
                forest_representation(h, &f, lim)?.map(|rep| {
                    rep.pairs
                        .iter()
                        .map(|(e, u, v)| (e.clone(), h.vertices()[*u].clone(), h.vertices()[*v].clone()))
                        .collect()
                })
            } else {
                None
            };
            emit(
                out,
                json,
                &RankReport {
                    edges: edge_names(h, &f),
                    rank: r,
                    greedy_rank: greedy_rank(h, &f, lim)?,
                    independent,
                    representation,
                },
            )
        }
        Command::Hypertrees { family } => {
            let members = match family {
                FamilyArg::Tree => enumerate_hypertrees(h, lim)?,
                FamilyArg::Multitree => {
                    require_connected(h, "the multi-tree family")?;
                    enumerate_multitrees(h, h.num_vertices() as u32, lim)?
                }
            };
            let members: Vec<_> = members
                .members()
                .iter()
                .map(|g| rational_map(h, g))
                .collect();
            emit(
                out,
                json,
                &FamilyReport {
                    family: family.name(),
                    count: members.len(),
                    members,
                },
            )
        }
        Command::Mod { p, family: fam } => {
            require_connected(h, "the modulus")?;
            if *fam == FamilyArg::Tree {
                require_hypertrees(h, lim)?;
            }
            let w = h.weights();
            let res = if *p == 1 {
                mod1(h, fam.kind(), &w, lim)?
            } else {
                let f = family(h, fam.kind(), lim)?;
                let wf: Vec<f64> = w.iter().map(to_f64).collect();
                mod2_mnp(f.as_ref(), &wf, &opts.solver)?
            };
            emit(out, json, &ModulusReport::new(&res, fam.name(), h))
        }
        Command::Blocker { all } => {
            require_connected(h, "the blocker")?;
            let found = if *all { feasible_elements(h, lim)? } else { blocker_omega(h, lim)? };
            let elements = found
                .iter()
                .map(|b| BlockerEntry {
                    partition: class_names(h, &b.usage.partition),
                    vector: rational_map(h, &b.usage.vector.values),
                    extreme: b.biconnected,
                })
                .collect();
            emit(
                out,
                json,
                &BlockerReport {
                    edges: h.edge_ids(),
                    elements,
                },
            )
        }
        Command::Decompose { family: fam, dot } => {
            require_connected(h, "the decomposition")?;
            if *fam == FamilyArg::Tree {
                require_hypertrees(h, lim)?;
            }
            let (root, error) = match hdp(h, fam.kind(), opts) {
                Ok(root) => (root, None),
                Err(e) => (e.partial, Some(e.error)),
            };
            let report = DecomposeReport::new(
                fam.name(),
                &root,
                opts.cluster_tol,
                error.as_ref().map(ToString::to_string),
            );
            if let Some(path) = dot {
                std::fs::write(path, crate::dot::decomposition(&report.tree)).map_err(|source| {
                    CliError::Io {
                        path: path.clone(),
                        source,
                    }
                })?;
            }
            emit(out, json, &report)?;
            match error {
                Some(e) => Err(e.into()),
                None => Ok(()),
            }
        }
        Command::Shrink { family: fam } => {
            require_connected(h, "the shrinking process")?;
            if *fam == FamilyArg::Tree {
                require_hypertrees(h, lim)?;
            }
            let steps = hsp(h, fam.kind(), opts)?;
            emit(
                out,
                json,
                &ShrinkReport {
                    family: fam.name(),
                    steps: steps.iter().map(ShrinkStepReport::from).collect(),
                },
            )
        }
        Command::Verify => {
            let report = battery(h, opts);
            emit(out, json, &report)?;
            match report.failures() {
                0 => Ok(()),
                k => Err(CliError::Verify(k)),
            }
        }
    }
}

fn empty_summary(h: &Hypergraph) -> Summary {
    Summary {
        vertices: h.vertices().to_vec(),
        num_vertices: h.num_vertices(),
        num_edges: h.num_edges(),
        partition_connectivity: Some(0),
        strength: None,
        arboricity: None,
        density: None,
        homogeneous: false,
    }
}
