use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use truemper_core::chi::{verify_chi, ChiTarget};
use truemper_core::classes::{
    color_gu, color_gutcap, mwc_gt, mwc_mwss_gu, mwc_mwss_gutcap, mwss_gt, recognize, ClassId,
};
use truemper_core::decomposition::build_tree;
use truemper_core::format::{parse_graph, write_graph};
use truemper_core::generators::{gen_chordal, gen_class_member, gen_hyperantihole, gen_hyperhole, gen_ring};
use truemper_core::{Coloring, Graph, VertexSet, WeightedGraph};

const EXIT_NON_MEMBER: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(name = "truemper", version, about = "Recognition, decomposition and optimisation for graphs without Truemper configurations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership in a class and print a certificate on rejection.
    Recognize {
        /// Graph file, or `-` for standard input.
        file: String,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// Solve a weighted clique, weighted stable set or colouring problem.
    Solve {
        file: String,
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long, value_enum)]
        problem: Problem,
    },
    /// Print the clique-cutset decomposition tree.
    Decompose { file: String },
    /// Print a generated graph in the text format.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Number of parts (rings, hyperholes, hyperantiholes).
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated part sizes; all ones when omitted.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex count for chordal graphs.
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Attachment density for chordal graphs, in [0, 1].
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Class for `--kind member`.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        /// Number of basic pieces glued for `--kind member`.
        #[arg(long, default_value_t = 3)]
        pieces: usize,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Check chromatic-number bounds on generated members.
    VerifyChi {
        #[arg(long, value_enum)]
        class: ChiClassArg,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Gut,
    Gu,
    Gt,
    Gutcap,
}

impl From<ClassArg> for ClassId {
    fn from(c: ClassArg) -> ClassId {
        match c {
            ClassArg::Gut => ClassId::Gut,
            ClassArg::Gu => ClassId::Gu,
            ClassArg::Gt => ClassId::Gt,
            ClassArg::Gutcap => ClassId::GutCapFree,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ChiClassArg {
    Gut,
    Gu,
    Gt,
    Gutcap,
    Hyperantihole7,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Problem {
    Mwc,
    Mwss,
    Color,
}

impl Problem {
    fn name(self) -> &'static str {
        match self {
            Problem::Mwc => "mwc",
            Problem::Mwss => "mwss",
            Problem::Color => "color",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ring,
    Hyperhole,
    Hyperantihole,
    Chordal,
    Member,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| fail(EXIT_INTERNAL, e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn read_graph(file: &str) -> Result<WeightedGraph, Failure> {
    let mut text = String::new();
    if file == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| fail(EXIT_INPUT, format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(file).map_err(|e| fail(EXIT_INPUT, format!("reading {file}: {e}")))?;
    }
    parse_graph(&text).map_err(|e| fail(EXIT_INPUT, format!("{file}: {e}")))
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Recognize { file, class } => {
            let wg = read_graph(&file)?;
            let verdict = recognize(class.into(), &wg.graph);
            print_json(&verdict)?;
            Ok(if verdict.member { 0 } else { EXIT_NON_MEMBER })
        }
        Command::Solve { file, class, problem } => solve(&file, class.into(), problem),
        Command::Decompose { file } => {
            let wg = read_graph(&file)?;
            let tree = build_tree(&wg.graph);
            let rebuilt = tree.reassemble(&wg.graph).map_err(|e| fail(EXIT_INTERNAL, e.to_string()))?;
            if rebuilt != wg.graph {
                return Err(fail(EXIT_INTERNAL, "decomposition does not reassemble to the input"));
            }
            print_json(&tree)?;
            Ok(0)
        }
        Command::Generate {
            kind,
            k,
            sizes,
            seed,
            n,
            density,
            class,
            pieces,
            max_n,
        } => {
            let g = generate(kind, k, sizes, seed, n, density, class, pieces, max_n)?;
            print!("{}", write_graph(&g));
            Ok(0)
        }
        Command::VerifyChi {
            class,
            trials,
            max_n,
            seed,
        } => {
            let target = match class {
                ChiClassArg::Gut => ChiTarget::Class(ClassId::Gut),
                ChiClassArg::Gu => ChiTarget::Class(ClassId::Gu),
                ChiClassArg::Gt => ChiTarget::Class(ClassId::Gt),
                ChiClassArg::Gutcap => ChiTarget::Class(ClassId::GutCapFree),
                ChiClassArg::Hyperantihole7 => ChiTarget::SevenHyperantihole,
            };
            let report = verify_chi(target, trials, max_n, seed).map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
            print_json(&report)?;
            Ok(if report.pass { 0 } else { EXIT_NON_MEMBER })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn generate(
    kind: Kind,
    k: Option<usize>,
    sizes: Option<Vec<usize>>,
    seed: u64,
    n: usize,
    density: f64,
    class: Option<ClassArg>,
    pieces: usize,
    max_n: usize,
) -> Result<Graph, Failure> {
    let input = |e: truemper_core::Error| fail(EXIT_INPUT, e.to_string());
    let parts = || -> Result<(usize, Vec<usize>), Failure> {
        let k = k
            .or(sizes.as_ref().map(Vec::len))
            .ok_or_else(|| fail(EXIT_INPUT, "--k or --sizes is required for this kind"))?;
        Ok((k, sizes.clone().unwrap_or_else(|| vec![1; k])))
    };
    match kind {
        Kind::Ring => {
            let (k, sizes) = parts()?;
            gen_ring(seed, k, &sizes).map(|(g, _)| g).map_err(input)
        }
        Kind::Hyperhole => {
            let (k, sizes) = parts()?;
            gen_hyperhole(k, &sizes).map_err(input)
        }
        Kind::Hyperantihole => {
            let (k, sizes) = parts()?;
            gen_hyperantihole(k, &sizes).map_err(input)
        }
        Kind::Chordal => gen_chordal(seed, n, density).map_err(input),
        Kind::Member => {
            let class = class.ok_or_else(|| fail(EXIT_INPUT, "--class is required for --kind member"))?;
            gen_class_member(seed, class.into(), pieces, max_n).map_err(input)
        }
    }
}

fn unsupported_reason(class: ClassId, problem: Problem) -> Option<&'static str> {
    match (class, problem) {
        (ClassId::Gut, Problem::Mwc) => Some("maximum weight clique is NP-hard on this class"),
        (ClassId::Gut, _) => Some("no polynomial algorithm is known for this problem on this class"),
        (ClassId::Gt, Problem::Color) => {
            Some("optimal colouring of this class is open: no polynomial colouring of rings is known")
        }
        _ => None,
    }
}

fn solve(file: &str, class: ClassId, problem: Problem) -> Result<u8, Failure> {
    let wg = read_graph(file)?;
    if let Some(reason) = unsupported_reason(class, problem) {
        return Err(fail(EXIT_UNSUPPORTED, format!("unsupported: {} for class {class}: {reason}", problem.name())));
    }
    let g = &wg.graph;
    let solution = match problem {
        Problem::Color => {
            let coloring = match class {
                ClassId::Gu => color_gu(g),
                _ => color_gutcap(g),
            };
            coloring.map(|c| coloring_json(g, c)).transpose()?
        }
        Problem::Mwc => {
            let clique = match class {
                ClassId::Gu => mwc_mwss_gu(&wg).map(|(c, _)| c),
                ClassId::Gt => mwc_gt(&wg),
                _ => mwc_mwss_gutcap(&wg).map(|(c, _)| c),
            };
            clique.map(|c| set_json(&wg, c, "clique")).transpose()?
        }
        Problem::Mwss => {
            let stable = match class {
                ClassId::Gu => mwc_mwss_gu(&wg).map(|(_, s)| s),
                ClassId::Gt => mwss_gt(&wg),
                _ => mwc_mwss_gutcap(&wg).map(|(_, s)| s),
            };
            stable.map(|s| set_json(&wg, s, "stable_set")).transpose()?
        }
    };
    match solution {
        Some((solution, value)) => {
            print_json(&json!({
                "class": class,
                "problem": problem,
                "member": true,
                "certificate": null,
                "solution": solution,
                "value": value,
            }))?;
            Ok(0)
        }
        None => {
            let verdict = recognize(class, g);
            print_json(&json!({
                "class": class,
                "problem": problem,
                "member": false,
                "certificate": verdict.certificate,
                "leaf_failure": verdict.leaf_failure,
                "solution": null,
            }))?;
            Ok(EXIT_NON_MEMBER)
        }
    }
}

fn coloring_json(g: &Graph, c: Coloring) -> Result<(serde_json::Value, serde_json::Value), Failure> {
    if !c.is_proper(g) {
        return Err(fail(EXIT_INTERNAL, "solver produced an improper colouring"));
    }
    let value = json!(c.count);
    Ok((json!({"kind": "coloring", "colors": c.colors, "count": c.count}), value))
}

fn set_json(wg: &WeightedGraph, s: VertexSet, kind: &str) -> Result<(serde_json::Value, serde_json::Value), Failure> {
    let feasible = match kind {
        "clique" => wg.graph.is_clique(&s),
        _ => wg.graph.is_stable(&s),
    };
    if !feasible {
        return Err(fail(EXIT_INTERNAL, format!("solver produced an infeasible {kind}")));
    }
    let value = json!(wg.weight_of(&s));
    Ok((json!({"kind": kind, "vertices": s.to_vec()}), value))
}
