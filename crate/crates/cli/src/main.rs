//! `paired`: file-based front end for the paired approximation toolkit.
//!
//! Exit codes: 0 success, 1 invalid input, 2 certificate or verification
//! failure, 3 oracle size limit exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use paired_core::amplify::{build_kg, build_kstar, AmpKind};
use paired_core::cert::{verify, Certificate, Input, PairedOutcome};
use paired_core::color_path::ColorStrategy;
use paired_core::dfs::OrderingPolicy;
use paired_core::oracle::{self, Objective};
use paired_core::ramsey::{piece_provider, verify_ramsey, PieceMode, RamseyGraph};
use paired_core::{corpus, directed, gadgets, hadwiger, tsp_mis};
use paired_core::{color_path, Digraph, Error, Graph, Ratio, SetSystem};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "paired", version, about = "Paired approximation problems: algorithms, oracles, certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// (1,2)-TSP tour or independent set, chosen by eps
    TspMis {
        graph: PathBuf,
        #[command(flatten)]
        eps: EpsArg,
        /// Include both raw certificates in the output for audit
        #[arg(long)]
        certify: bool,
    },
    /// Coloring or long induced path, chosen by eps
    ColorPath {
        graph: PathBuf,
        #[command(flatten)]
        eps: EpsArg,
        #[arg(long, value_enum, default_value_t = StrategyArg::Depth)]
        strategy: StrategyArg,
        #[arg(long)]
        certify: bool,
    },
    /// Directed pairings on a digraph input
    Directed {
        digraph: PathBuf,
        #[command(flatten)]
        eps: EpsArg,
        #[arg(long, value_enum, default_value_t = DirectedObjective::PathAcyclic)]
        objective: DirectedObjective,
        #[arg(long)]
        certify: bool,
    },
    /// Coloring or clique minor, chosen by eps
    Hadwiger {
        graph: PathBuf,
        #[command(flatten)]
        eps: EpsArg,
        #[arg(long)]
        certify: bool,
    },
    /// Instance transformations
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Ramsey graph construction and verification
    #[command(subcommand)]
    Ramsey(RamseyCommand),
    /// Exact exponential-time solvers
    Oracle { problem: OracleProblem, input: PathBuf },
    /// Standalone certificate verifier
    Verify { certificate: PathBuf, input: PathBuf },
    /// Instance generation
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Args)]
struct EpsArg {
    /// Approximation parameter, an exact rational "p/q" or a decimal
    #[arg(long, value_parser = parse_eps)]
    eps: Ratio,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Depth,
    Degeneracy,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectedObjective {
    PathAcyclic,
    AsymTsp,
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Build kG or k*G from a base set system
    KAmplify {
        setsystem: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Build the [G | complement(G) | clique] TSP/MaxTSP gadget
    TspMaxtsp { graph: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Kg,
    Kstar,
}

#[derive(Subcommand)]
enum RamseyCommand {
    /// Combine verified bipartite pieces into a graph on n = 2^k vertices
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Brute)]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Certified subset bound per piece; defaults to 2 for tiny halves, 3 otherwise
        #[arg(long)]
        f: Option<usize>,
    },
    /// Exact max independent set and max balanced biclique vs the bound f
    Verify {
        graph: PathBuf,
        #[arg(long)]
        f: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Brute,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleProblem {
    Tsp12Min,
    Tsp12Max,
    Mis,
    Clique,
    Chromatic,
    LongestPath,
    LongestPathDigraph,
    MaxAcyclic,
    SetCover,
    HittingSet,
    Hadwiger,
    BalancedBiclique,
}

#[derive(Subcommand)]
enum CorpusCommand {
    Generate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for the random family
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        /// Number of cliques for the cliques family
        #[arg(long, default_value_t = 3)]
        parts: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cliques,
    Random,
    Paths,
}

/// "p/q" exactly, or a decimal like "0.25" converted exactly to 25/100.
fn parse_eps(s: &str) -> Result<Ratio, String> {
    if let Some((p, q)) = s.split_once('/') {
        let num: u64 = p.trim().parse().map_err(|_| format!("bad numerator '{p}'"))?;
        let den: u64 = q.trim().parse().map_err(|_| format!("bad denominator '{q}'"))?;
        if den == 0 {
            return Err("denominator must be nonzero".into());
        }
        return Ok(Ratio::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int: u64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| format!("bad integer part '{int}'"))?
        };
        if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(format!("bad fractional part '{frac}'"));
        }
        let den = 10u64.pow(frac.len() as u32);
        let num: u64 = if frac.is_empty() { 0 } else { frac.parse().unwrap() };
        return Ok(Ratio::new(int * den + num, den));
    }
    let whole: u64 = s.parse().map_err(|_| format!("bad rational '{s}'"))?;
    Ok(Ratio::new(whole, 1))
}

fn exit_code_for(e: &Error) -> ExitCode {
    match e {
        Error::SizeLimit { .. } => ExitCode::from(3),
        Error::InvalidCertificate(_) | Error::InvalidSolution(_) | Error::PieceVerification { .. } => {
            ExitCode::from(2)
        }
        _ => ExitCode::from(1),
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Error> {
    Ok(Graph::parse(&read_file(path)?)?)
}

fn read_digraph(path: &PathBuf) -> Result<Digraph, Error> {
    Ok(Digraph::parse(&read_file(path)?)?)
}

fn read_setsystem(path: &PathBuf) -> Result<SetSystem, Error> {
    Ok(SetSystem::parse(&read_file(path)?)?)
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::BadInput(format!("cannot read {}: {e}", path.display())))
}

fn print_outcome(mut outcome: PairedOutcome, certify: bool) -> Result<(), Error> {
    if !certify {
        outcome.both_raw = None;
    }
    println!("{}", serde_json::to_string_pretty(&outcome)?);
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::TspMis { graph, eps, certify } => {
            let g = read_graph(&graph)?;
            let out = tsp_mis::dispatch_tsp_mis(&g, eps.eps, OrderingPolicy::Ascending)?;
            print_outcome(out, certify)
        }
        Command::ColorPath {
            graph,
            eps,
            strategy,
            certify,
        } => {
            let g = read_graph(&graph)?;
            let strategy = match strategy {
                StrategyArg::Depth => ColorStrategy::Depth,
                StrategyArg::Degeneracy => ColorStrategy::Degeneracy,
            };
            let out = color_path::dispatch_color_path(&g, eps.eps, strategy, OrderingPolicy::Ascending)?;
            print_outcome(out, certify)
        }
        Command::Directed {
            digraph,
            eps,
            objective,
            certify,
        } => {
            let d = read_digraph(&digraph)?;
            let out = match objective {
                DirectedObjective::PathAcyclic => {
                    directed::dispatch_directed(&d, eps.eps, OrderingPolicy::Ascending)?
                }
                DirectedObjective::AsymTsp => {
                    directed::dispatch_asym_tsp(&d, eps.eps, OrderingPolicy::Ascending)?
                }
            };
            print_outcome(out, certify)
        }
        Command::Hadwiger { graph, eps, certify } => {
            let g = read_graph(&graph)?;
            let out = hadwiger::dispatch_hadwiger(&g, eps.eps)?;
            print_outcome(out, certify)
        }
        Command::Reduce(cmd) => run_reduce(cmd),
        Command::Ramsey(cmd) => run_ramsey(cmd),
        Command::Oracle { problem, input } => run_oracle(problem, &input),
        Command::Verify { certificate, input } => run_verify(&certificate, &input),
        Command::Corpus(cmd) => run_corpus(cmd),
    }
}

fn run_reduce(cmd: ReduceCommand) -> Result<(), Error> {
    match cmd {
        ReduceCommand::KAmplify { setsystem, k, kind } => {
            let base = read_setsystem(&setsystem)?;
            let amp = match kind {
                KindArg::Kg => build_kg(&base, k)?,
                KindArg::Kstar => build_kstar(&base, k)?,
            };
            // index-map sidecar: enough to decode any set/element id back to
            // the base system (see the index scheme in the library docs)
            let mut layout = serde_json::json!({
                "kind": match amp.kind { AmpKind::KG => "kg", AmpKind::KStarG => "kstar" },
                "k": amp.k,
                "base_sets": amp.base.num_sets(),
                "base_elements": amp.base.num_elements(),
                "num_sets": amp.system.num_sets(),
                "num_elements": amp.system.num_elements(),
            });
            if amp.kind == AmpKind::KStarG {
                layout["part1_sets"] = ((amp.k + 1) * amp.base.num_elements()).into();
                layout["part1_elements"] = (amp.k * amp.base.num_sets()).into();
            }
            let doc = serde_json::json!({
                "system": amp.system.serialize(),
                "layout": layout,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(())
        }
        ReduceCommand::TspMaxtsp { graph } => {
            let g = read_graph(&graph)?;
            let (h, layout) = gadgets::tsp_maxtsp_gadget(&g)?;
            let doc = serde_json::json!({
                "graph": h.serialize(),
                "layout": layout,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(())
        }
    }
}

fn run_ramsey(cmd: RamseyCommand) -> Result<(), Error> {
    match cmd {
        RamseyCommand::Build { n, mode, seed, f } => {
            if n < 2 || !n.is_power_of_two() {
                return Err(Error::BadInput(format!(
                    "n must be a power of two >= 2, got {n}"
                )));
            }
            let k = n.trailing_zeros() as usize;
            let half = n / 2;
            let f = f.unwrap_or(if half <= 2 { 2 } else { 3 });
            let mut pieces = Vec::with_capacity(k);
            for i in 0..k {
                let mode = match mode {
                    ModeArg::Brute => PieceMode::Brute,
                    ModeArg::Random => PieceMode::Seeded(seed.wrapping_add(i as u64)),
                };
                pieces.push(piece_provider(half, f, mode)?);
            }
            let g = paired_core::ramsey::combine(pieces)?;
            println!("{}", serde_json::to_string_pretty(&ramsey_doc(&g, f))?);
            Ok(())
        }
        RamseyCommand::Verify { graph, f } => {
            let g = read_graph(&graph)?;
            let report = verify_ramsey(&g, f)?;
            let doc = serde_json::json!({
                "f": report.f,
                "max_independent_set": report.max_independent_set,
                "max_balanced_biclique": report.max_balanced_biclique,
                "holds": report.holds,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
            if report.holds {
                Ok(())
            } else {
                Err(Error::InvalidCertificate(format!(
                    "graph admits an independent set or balanced biclique of size >= {f}"
                )))
            }
        }
    }
}

fn ramsey_doc(g: &RamseyGraph, f: usize) -> serde_json::Value {
    let pieces: Vec<serde_json::Value> = g
        .pieces
        .iter()
        .map(|p| {
            let adj: Vec<u64> = (0..p.half_size())
                .map(|a| (0..p.half_size()).filter(|&b| p.edge(a, b)).map(|b| 1u64 << b).sum())
                .collect();
            serde_json::json!({
                "half": p.half_size(),
                "f": p.bound(),
                "adj": adj,
            })
        })
        .collect();
    serde_json::json!({
        "k": g.k,
        "f": f,
        "pieces": pieces,
        "graph": g.graph.serialize(),
    })
}

fn run_oracle(problem: OracleProblem, input: &PathBuf) -> Result<(), Error> {
    let value = match problem {
        OracleProblem::Tsp12Min => oracle::exact_tsp12(&read_graph(input)?, Objective::Min)?.0,
        OracleProblem::Tsp12Max => oracle::exact_tsp12(&read_graph(input)?, Objective::Max)?.0,
        OracleProblem::Mis => oracle::exact_mis(&read_graph(input)?)?.0 as u64,
        OracleProblem::Clique => oracle::exact_clique(&read_graph(input)?)?.0 as u64,
        OracleProblem::Chromatic => oracle::exact_chromatic(&read_graph(input)?)?.0 as u64,
        OracleProblem::LongestPath => oracle::exact_longest_path(&read_graph(input)?)?.0 as u64,
        OracleProblem::LongestPathDigraph => {
            oracle::exact_longest_path_directed(&read_digraph(input)?)?.0 as u64
        }
        OracleProblem::MaxAcyclic => oracle::exact_max_acyclic(&read_digraph(input)?)?.0 as u64,
        OracleProblem::SetCover => oracle::exact_cover(&read_setsystem(input)?)?.0 as u64,
        OracleProblem::HittingSet => oracle::exact_hit(&read_setsystem(input)?)?.0 as u64,
        OracleProblem::Hadwiger => oracle::exact_hadwiger(&read_graph(input)?)?.0 as u64,
        OracleProblem::BalancedBiclique => {
            oracle::exact_max_balanced_biclique(&read_graph(input)?)?.0 as u64
        }
    };
    println!("{value}");
    Ok(())
}

/// The certificate does not name its input type, so try each parse in turn;
/// the input hash pins down which one the certificate was issued against.
fn run_verify(certificate: &PathBuf, input: &PathBuf) -> Result<(), Error> {
    let cert: Certificate = serde_json::from_str(&read_file(certificate)?)?;
    let text = read_file(input)?;
    let mut last = None;
    if let Ok(g) = Graph::parse(&text) {
        match verify(&cert, &Input::Graph(&g)) {
            Ok(()) => {
                println!("ok: {} = {}", cert.problem, cert.value);
                return Ok(());
            }
            Err(e) => last = Some(e),
        }
    }
    if let Ok(d) = Digraph::parse(&text) {
        match verify(&cert, &Input::Digraph(&d)) {
            Ok(()) => {
                println!("ok: {} = {}", cert.problem, cert.value);
                return Ok(());
            }
            Err(e) => last = Some(e),
        }
    }
    if let Ok(s) = SetSystem::parse(&text) {
        match verify(&cert, &Input::SetSystem(&s)) {
            Ok(()) => {
                println!("ok: {} = {}", cert.problem, cert.value);
                return Ok(());
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::BadInput("input parses as no supported type".into())))
}

fn run_corpus(cmd: CorpusCommand) -> Result<(), Error> {
    let CorpusCommand::Generate {
        family,
        n,
        seed,
        density,
        parts,
    } = cmd;
    let g = match family {
        FamilyArg::Cliques => corpus::clique_union(n, parts, seed),
        FamilyArg::Random => corpus::gnp(n, density, seed),
        FamilyArg::Paths => Graph::path(n),
    };
    print!("{}", g.serialize());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
