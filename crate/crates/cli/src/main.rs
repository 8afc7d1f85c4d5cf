use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand};

use cyclespace::graph::{trace_faces, FaceTrace};
use cyclespace::grinberg::{
    audit_inclusion_exclusion, eval_full, modular_obstruction, multiset_from_sizes, solve_inside,
    FacePartition, DEFAULT_MODULI,
};
use cyclespace::search::{find_equation_counterexample, hamiltonian_oracle, Budget};
use cyclespace::space::{face_basis, fundamental_basis};
use cyclespace::{CycleBasis, Graph, RotationSystem};

use cyclespace_cli::load::{load_graph, load_rotation, LoadedGraph};
use cyclespace_cli::parallel::{search_planes, CliBudget};
use cyclespace_cli::report::*;
use cyclespace_cli::{corpus, report};

/// Cycle-space analysis: bases, the Grinberg condition, Hamilton plane
/// search, and a Hamiltonicity oracle.
///
/// Graph arguments accept a file path (edge list, or graph6 with a .g6 /
/// .graph6 extension) or `corpus:<name>`; see `corpus list`.
#[derive(Parser)]
#[command(name = "cyclespace", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArgs {
    /// Subset / search-node limit.
    #[arg(long, default_value_t = Budget::DEFAULT_MAX_SUBSETS)]
    max_subsets: u64,
    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 60.0)]
    max_seconds: f64,
}

impl BudgetArgs {
    fn cli_budget(&self) -> CliBudget {
        CliBudget::new(self.max_subsets, Some(self.max_seconds))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the fundamental cycle basis and print it as JSON.
    Basis {
        /// Graph file or corpus:<name>.
        graph: String,
    },
    /// Evaluate the Grinberg condition on an embedded planar graph.
    ///
    /// With --inside, evaluates both forms on that face partition.
    /// Without, enumerates bounded solutions of the inside form and hunts
    /// a modular infeasibility certificate.
    Grinberg {
        /// Graph file or corpus:<name>.
        graph: String,
        /// Rotation system file; defaults to the corpus embedding.
        #[arg(long)]
        rotation: Option<String>,
        /// Comma-separated traced-face indices forming the inside set.
        #[arg(long, value_delimiter = ',')]
        inside: Option<Vec<usize>>,
    },
    /// Search a cycle basis for Hamilton planes and equation
    /// counterexamples.
    ///
    /// Uses the face basis of the shipped/provided embedding when one is
    /// available, the fundamental basis otherwise.
    Plane {
        /// Graph file or corpus:<name>.
        graph: String,
        /// Rotation system file; defaults to the corpus embedding.
        #[arg(long)]
        rotation: Option<String>,
        /// Force the fundamental basis even when an embedding exists.
        #[arg(long)]
        fundamental: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Worker threads for the subset search; output is identical to
        /// the sequential run.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Decide Hamiltonicity by exhaustive backtracking.
    Oracle {
        /// Graph file or corpus:<name>.
        graph: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Inspect or export the built-in graph corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// List corpus graphs with their known facts.
    List,
    /// Write <name>.edges (and <name>.rot when an embedding ships) to a
    /// directory.
    Emit {
        name: String,
        /// Output directory.
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
}

const EXIT_POSITIVE: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Basis { graph } => cmd_basis(&graph),
        Command::Grinberg {
            graph,
            rotation,
            inside,
        } => cmd_grinberg(&graph, rotation.as_deref(), inside.as_deref()),
        Command::Plane {
            graph,
            rotation,
            fundamental,
            budget,
            workers,
        } => cmd_plane(&graph, rotation.as_deref(), fundamental, &budget, workers),
        Command::Oracle { graph, budget } => cmd_oracle(&graph, &budget),
        Command::Corpus { action } => match action {
            CorpusAction::List => cmd_corpus_list(),
            CorpusAction::Emit { name, dir } => cmd_corpus_emit(&name, &dir),
        },
    }
}

fn emit<T: serde::Serialize>(report: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(report)?);
    Ok(())
}

fn cmd_basis(graph: &str) -> Result<u8> {
    let loaded = load_graph(graph)?;
    let (basis, tree) = fundamental_basis(&loaded.graph);
    emit(&BasisReport::new(
        &loaded.source,
        &loaded.graph,
        &basis,
        &tree,
    ))?;
    Ok(EXIT_POSITIVE)
}

/// Resolve the embedding for a loaded graph: an explicit rotation file
/// wins, then the corpus one. Errors out when the Euler check fails.
fn resolve_trace(
    loaded: &LoadedGraph,
    rotation: Option<&str>,
    required: bool,
) -> Result<Option<FaceTrace>> {
    let rot: Option<RotationSystem> = match rotation {
        Some(path) => Some(load_rotation(path, &loaded.graph)?),
        None => loaded.corpus_rotation.clone(),
    };
    let Some(rot) = rot else {
        if required {
            bail!(
                "{}: no rotation system available; pass --rotation",
                loaded.source
            );
        }
        return Ok(None);
    };
    let trace = trace_faces(&loaded.graph, &rot);
    if !trace.euler_ok {
        bail!(
            "{}: rotation system does not describe a sphere embedding (Euler check failed)",
            loaded.source
        );
    }
    Ok(Some(trace))
}

fn cmd_grinberg(graph: &str, rotation: Option<&str>, inside: Option<&[usize]>) -> Result<u8> {
    let loaded = load_graph(graph)?;
    let g = &loaded.graph;
    let trace = resolve_trace(&loaded, rotation, true)?.expect("required");
    let degrees: Vec<usize> = trace.faces.iter().map(|f| f.degree()).collect();

    if let Some(inside) = inside {
        for &i in inside {
            if i >= degrees.len() {
                bail!(
                    "inside face index {i} out of range (embedding has {} faces)",
                    degrees.len()
                );
            }
        }
        let inside_set: std::collections::BTreeSet<usize> = inside.iter().copied().collect();
        if inside_set.len() != inside.len() {
            bail!("inside face list contains duplicates");
        }
        let inside_sizes: Vec<usize> = inside_set.iter().map(|&i| degrees[i]).collect();
        let outside_sizes: Vec<usize> = (0..degrees.len())
            .filter(|i| !inside_set.contains(i))
            .map(|i| degrees[i])
            .collect();
        let partition = FacePartition {
            inside: multiset_from_sizes(&inside_sizes),
            outside: multiset_from_sizes(&outside_sizes),
            n: g.vertex_count(),
        };
        let eval = eval_full(&partition);
        let satisfied = eval.satisfied_full && eval.satisfied_inside;
        emit(&PartitionReport {
            graph: GraphInfo::new(&loaded.source, g),
            mode: "partition".to_string(),
            inside_faces: inside_set.into_iter().collect(),
            inside: report::degree_counts(partition.inside.iter()),
            outside: report::degree_counts(partition.outside.iter()),
            evaluation: EvaluationJson::new(&eval),
        })?;
        return Ok(if satisfied {
            EXIT_POSITIVE
        } else {
            EXIT_NEGATIVE
        });
    }

    let available = multiset_from_sizes(&degrees);
    let solutions = solve_inside(&available, g.vertex_count());
    let certificate = if solutions.is_empty() {
        modular_obstruction(&available, g.vertex_count(), &DEFAULT_MODULI)
    } else {
        None
    };
    emit(&FeasibilityReport::new(
        &loaded.source,
        g,
        &trace,
        &available,
        &solutions,
        certificate.as_ref(),
    ))?;
    Ok(if solutions.is_empty() {
        EXIT_NEGATIVE
    } else {
        EXIT_POSITIVE
    })
}

fn choose_basis(
    loaded: &LoadedGraph,
    rotation: Option<&str>,
    fundamental: bool,
) -> Result<(CycleBasis, String)> {
    if !fundamental {
        if let Some(trace) = resolve_trace(loaded, rotation, false)? {
            let basis = face_basis(&loaded.graph, &trace.faces)
                .map_err(|e| anyhow!("{}: face basis: {e:?}", loaded.source))?;
            return Ok((basis, "face".to_string()));
        }
    }
    let (basis, _) = fundamental_basis(&loaded.graph);
    Ok((basis, "fundamental".to_string()))
}

fn cmd_plane(
    graph: &str,
    rotation: Option<&str>,
    fundamental: bool,
    budget: &BudgetArgs,
    workers: usize,
) -> Result<u8> {
    let loaded = load_graph(graph)?;
    let g = &loaded.graph;
    let (basis, basis_kind) = choose_basis(&loaded, rotation, fundamental)?;
    let cli_budget = budget.cli_budget();

    let search = search_planes(&basis, g, &cli_budget, workers);
    let probe = || cli_budget.expired();
    let cex = cli_budget.with_core(&probe, |b| find_equation_counterexample(&basis, g, b));

    let n = g.vertex_count();
    let planes: Vec<PlaneJson> = search
        .planes
        .iter()
        .map(|p| {
            let members: Vec<_> = p.members.iter().map(|&i| basis.cycle(i).clone()).collect();
            let audit = audit_inclusion_exclusion(&members, n);
            PlaneJson::new(p, &basis, &audit)
        })
        .collect();
    let counterexamples: Vec<CounterexampleJson> = cex
        .reports
        .iter()
        .map(|c| CounterexampleJson::new(c, &basis))
        .collect();

    let truncated = search.truncated || cex.truncated;
    emit(&PlaneReport {
        graph: GraphInfo::new(&loaded.source, g),
        basis_kind,
        basis_dimension: basis.dim(),
        basis_cycle_sizes: basis.cycles().iter().map(|c| c.size()).collect(),
        planes,
        counterexamples,
        subsets_examined: search.subsets_examined + cex.subsets_examined,
        budget_status: if truncated { "truncated" } else { "complete" }.to_string(),
    })?;

    Ok(if !search.planes.is_empty() {
        EXIT_POSITIVE
    } else if truncated {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_NEGATIVE
    })
}

fn cmd_oracle(graph: &str, budget: &BudgetArgs) -> Result<u8> {
    let loaded = load_graph(graph)?;
    let cli_budget = budget.cli_budget();
    let probe = || cli_budget.expired();
    let verdict = cli_budget.with_core(&probe, |b| hamiltonian_oracle(&loaded.graph, b));
    emit(&OracleReport::new(&loaded.source, &loaded.graph, &verdict))?;
    Ok(match verdict.is_hamiltonian() {
        Some(true) => EXIT_POSITIVE,
        Some(false) => EXIT_NEGATIVE,
        None => EXIT_INCONCLUSIVE,
    })
}

fn cmd_corpus_list() -> Result<u8> {
    let mut entries = Vec::new();
    for e in corpus::ENTRIES {
        let g: Graph = e.graph()?;
        entries.push(CorpusEntryJson {
            name: e.name.to_string(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            has_rotation: e.rotation_text.is_some(),
            hamiltonian: e.hamiltonian,
            face_degrees: e.face_degrees.map(|fd| {
                fd.iter()
                    .map(|&(degree, count)| DegreeCount { degree, count })
                    .collect()
            }),
            provenance: e.provenance.to_string(),
        });
    }
    emit(&CorpusListReport { entries })?;
    Ok(EXIT_POSITIVE)
}

fn cmd_corpus_emit(name: &str, dir: &PathBuf) -> Result<u8> {
    let entry = corpus::get(name)
        .ok_or_else(|| anyhow!("unknown corpus graph {name:?}; try `corpus list`"))?;
    fs::create_dir_all(dir)?;
    let mut files = Vec::new();
    let edges_path = dir.join(format!("{name}.edges"));
    fs::write(&edges_path, entry.edges_text)?;
    files.push(edges_path.display().to_string());
    if let Some(rot) = entry.rotation_text {
        let rot_path = dir.join(format!("{name}.rot"));
        fs::write(&rot_path, rot)?;
        files.push(rot_path.display().to_string());
    }
    emit(&CorpusEmitReport {
        name: name.to_string(),
        files,
    })?;
    Ok(EXIT_POSITIVE)
}
