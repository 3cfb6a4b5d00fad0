use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ssc::analysis::{run_analyze, AnalysisError, Discrepancy, Options};
use ssc::input::{parse_graph_file, InputError};
use ssc::{exit, random_suite};
use ssc_core::{
    boundary_matrix, enumerate_spanning_trees_generic, enumerate_spanning_trees_lemma,
    graded_faces, recognize_unicyclic, Budget, Multigraph,
};

#[derive(Parser)]
#[command(name = "ssc", version, about = "Spanning simplicial complexes of multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest edge count the brute-force oracles accept.
    #[arg(long, value_name = "MAX_EDGES", default_value_t = 24, global = true)]
    budget: usize,
    /// Closed forms only; skips every oracle and cross-check.
    #[arg(long, global = true)]
    no_oracle: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: layout, facets, f-vectors, homology, covers, ideal.
    Analyze { file: PathBuf, #[command(flatten)] common: Common },
    /// Cross-check every closed form against its oracle.
    Verify { file: PathBuf, #[command(flatten)] common: Common },
    /// List the spanning trees.
    Facets { file: PathBuf, #[command(flatten)] common: Common },
    /// Minimal vertex covers and the primary decomposition.
    Covers { file: PathBuf, #[command(flatten)] common: Common },
    /// Chain complex ranks and Betti numbers.
    Homology {
        file: PathBuf,
        /// Write each boundary matrix as `row col value` triples into DIR.
        #[arg(long, value_name = "DIR")]
        dump: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Verify a seeded family of random uni-cyclic multigraphs.
    RandomSuite {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 12)]
        max_edges: usize,
        /// Also write every generated graph into DIR.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Input(String),
    Budget(String),
    Discrepancies(Vec<Discrepancy>),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Core(ssc_core::Error::BudgetExceeded { .. }) => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<ssc_core::Error> for Failure {
    fn from(e: ssc_core::Error) -> Self {
        AnalysisError::from(e).into()
    }
}

fn options(common: &Common) -> Options {
    Options {
        budget: Budget {
            max_edges: common.budget,
            ..Budget::default()
        },
        no_oracle: common.no_oracle,
    }
}

fn to_json<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable")
}

fn analyze(file: &Path, common: &Common) -> Result<(), Failure> {
    let g = parse_graph_file(file)?;
    let report = run_analyze(&g, &options(common))?;
    if common.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_text());
    }
    if report.discrepancies.is_empty() {
        Ok(())
    } else {
        Err(Failure::Discrepancies(report.discrepancies))
    }
}

fn verify(file: &Path, common: &Common) -> Result<(), Failure> {
    let g = parse_graph_file(file)?;
    let found = ssc::run_verify(&g, options(common).budget)?;
    if common.json {
        println!("{}", to_json(&found));
    } else if found.is_empty() {
        println!("ok: all cross-checks agree");
    }
    if found.is_empty() {
        Ok(())
    } else {
        Err(Failure::Discrepancies(found))
    }
}

fn facets(file: &Path, common: &Common) -> Result<(), Failure> {
    let g = parse_graph_file(file)?;
    let list = match recognize_unicyclic(&g) {
        Ok(layout) => enumerate_spanning_trees_lemma(&layout),
        Err(_) if !common.no_oracle => {
            check_budget(&g, common.budget)?;
            enumerate_spanning_trees_generic(&g)
        }
        Err(e) => return Err(e.into()),
    };
    if common.json {
        println!("{}", to_json(&list));
    } else {
        for f in &list {
            println!("{{{}}}", f.edge_ids().join(", "));
        }
    }
    Ok(())
}

fn check_budget(g: &Multigraph, max_edges: usize) -> Result<(), Failure> {
    if g.edge_count() > max_edges {
        return Err(ssc_core::Error::BudgetExceeded {
            stage: "enumerate_spanning_trees_generic",
            limit: max_edges,
            actual: g.edge_count(),
        }
        .into());
    }
    Ok(())
}

fn covers(file: &Path, common: &Common) -> Result<(), Failure> {
    let g = parse_graph_file(file)?;
    let mut opts = options(common);
    // Homology is not needed here; skip the oracles whenever a layout exists.
    opts.no_oracle = opts.no_oracle || recognize_unicyclic(&g).is_ok();
    let report = run_analyze(&g, &opts)?;
    if common.json {
        println!("{}", to_json(&report.ideal));
    } else {
        for c in &report.covers {
            println!("{{{}}}", c.edge_ids().join(", "));
        }
        println!("{}", report.ideal.render_generators());
        println!("= {}", report.ideal.render_decomposition());
    }
    Ok(())
}

fn homology(file: &Path, dump: Option<&Path>, common: &Common) -> Result<(), Failure> {
    let g = parse_graph_file(file)?;
    let faces = graded_faces(&g, common.budget)?;
    let betti = ssc_core::betti_from_faces(&faces);
    if let Some(dir) = dump {
        fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
        for i in 1..=faces.dimension() {
            let m = boundary_matrix(&faces, i)?;
            let path = dir.join(format!("boundary_{i}.txt"));
            fs::write(&path, m.to_triples_text())
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        }
    }
    let sizes = faces.grade_sizes();
    if common.json {
        let value = serde_json::json!({
            "grade_sizes": sizes,
            "boundary_ranks": betti.boundary_ranks,
            "betti": betti.ranks,
            "euler": ssc_core::euler_from_betti(&betti).to_string(),
        });
        println!("{}", to_json(&value));
    } else {
        println!("grade sizes: {sizes:?}");
        println!("boundary ranks: {:?}", betti.boundary_ranks);
        println!("betti numbers: {:?}", betti.ranks);
        println!("euler characteristic: {}", ssc_core::euler_from_betti(&betti));
    }
    Ok(())
}

fn suite(seed: u64, count: usize, max_edges: usize, out: Option<&Path>, common: &Common) -> Result<(), Failure> {
    let budget = options(common).budget;
    for (k, file) in random_suite(seed, count, max_edges).iter().enumerate() {
        if let Some(dir) = out {
            fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
            let path = dir.join(format!("graph_{k:04}.json"));
            fs::write(&path, file.to_json())
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        }
        let g = file.to_graph()?;
        let found = ssc::run_verify(&g, budget)?;
        if !found.is_empty() {
            eprintln!("counterexample #{k}:\n{}", file.to_json());
            return Err(Failure::Discrepancies(found));
        }
    }
    if common.json {
        println!("{}", serde_json::json!({"seed": seed, "count": count, "max_edges": max_edges, "passed": true}));
    } else {
        println!("ok: {count} graphs (seed {seed}, at most {max_edges} edges) agree on every cross-check");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { file, common } => analyze(file, common),
        Command::Verify { file, common } => verify(file, common),
        Command::Facets { file, common } => facets(file, common),
        Command::Covers { file, common } => covers(file, common),
        Command::Homology { file, dump, common } => homology(file, dump.as_deref(), common),
        Command::RandomSuite {
            seed,
            count,
            max_edges,
            out,
            common,
        } => suite(*seed, *count, *max_edges, out.as_deref(), common),
    };
    let code = match result {
        Ok(()) => exit::OK,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            exit::INPUT
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            exit::BUDGET
        }
        Err(Failure::Discrepancies(list)) => {
            eprintln!("{}", to_json(&list));
            exit::DISCREPANCY
        }
    };
    ExitCode::from(code as u8)
}
