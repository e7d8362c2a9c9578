//! `boggle`: solve, check and analyse Boggle logic puzzles.
//!
//! Exit codes: 0 success (or a unique solution), 1 runtime failure or a
//! reproduction mismatch, 2 ambiguous puzzle, 3 no solution, 64 usage or
//! input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use boggle_core::board::standard_board;
use boggle_core::census::minimal_census;
use boggle_core::extremal::{guarantee_threshold, max_overlap_exhaustive, overlap_search, SearchStrategy};
use boggle_core::graph::{is_labeling_subgraph, is_unique_subgraph, LabelingVerdict, SimpleGraph};
use boggle_core::io::{format_board, format_puzzle, parse_board, parse_graph, parse_puzzle, Alphabet, Mode};
use boggle_core::multiset::{classify, PartitionType};
use boggle_core::puzzle::{Puzzle, SolveReport, SolveStatus, Solver, DEFAULT_SOLUTION_CAP};
use boggle_core::report::Report;
use boggle_core::reproduce::{reproduce, Target};
use boggle_core::stochastic::{
    exact_two_letter_curve_with, monte_carlo_words_to_unique, wilson_interval, EstimateReport,
    SamplingConfig, WordModel,
};
use boggle_core::words::{find_word_path, word_set};
use boggle_core::{Board, Error, Word};

const EXIT_FAILURE: u8 = 1;
const EXIT_AMBIGUOUS: u8 = 2;
const EXIT_NO_SOLUTION: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(name = "boggle", version, about = "Solve and analyse Boggle logic puzzles")]
struct Cli {
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true, env = "BOGGLE_WORKERS")]
    workers: Option<usize>,

    /// Search-node budget for each subgraph search.
    #[arg(long, global = true, env = "BOGGLE_NODE_BUDGET")]
    node_budget: Option<u64>,

    /// Largest number of boards a type may have before `classify` refuses.
    #[arg(long, global = true, env = "BOGGLE_BOARD_BUDGET")]
    board_budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every solution class of a puzzle.
    Solve {
        #[command(flatten)]
        puzzle: PuzzleArgs,
        /// Most solution boards to print.
        #[arg(long, default_value_t = DEFAULT_SOLUTION_CAP)]
        cap: usize,
        /// Write a structured report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report whether a word list is a puzzle.
    Verify {
        #[command(flatten)]
        puzzle: PuzzleArgs,
    },
    /// Drop adjacencies until no more can go.
    Minimize {
        #[command(flatten)]
        puzzle: PuzzleArgs,
    },
    /// Every minimal 3x3 puzzle of two-letter words.
    Census {
        #[arg(short, default_value_t = 3)]
        n: usize,
        /// Write one line per placement class here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest word overlap between the standard board and any other.
    MaxOverlap {
        #[arg(short, default_value_t = 3)]
        n: usize,
        #[arg(short)]
        k: usize,
        /// Print every maximizer, not just the first.
        #[arg(long)]
        all_maximizers: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Number of distinct words that always pins down the board.
    Threshold {
        #[arg(short, default_value_t = 3)]
        n: usize,
        #[arg(short)]
        k: usize,
    },
    /// Heuristic overlap search around the standard board.
    OverlapSearch {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Transpositions)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random starts for local search.
        #[arg(long, default_value_t = 32)]
        starts: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random-word reconstruction estimates.
    Estimate {
        #[arg(value_enum)]
        what: EstimateKind,
        #[arg(short, default_value_t = 3)]
        n: usize,
        #[arg(short, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exact enumeration (two-letter words on 3x3 only).
        #[arg(long)]
        exact: bool,
        /// Whether a word and its reversal are separate draws.
        #[arg(long, value_enum, default_value_t = ModelArg::Directed)]
        model: ModelArg,
    },
    /// Group all boards of a letter type by word set.
    Classify {
        /// Letter multiplicities, e.g. 2,1,1,1,1,1,1,1 or 2,1^7.
        #[arg(long)]
        lambda: String,
        #[arg(short, default_value_t = 3)]
        n: usize,
        /// Longest words in the first-pass signature.
        #[arg(long, default_value_t = 5)]
        kmax: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the words of a board or look one up.
    Words {
        board: PathBuf,
        /// Word to look for.
        #[arg(long)]
        check: Option<String>,
        #[arg(long)]
        min_len: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Labeling- and unique-subgraph tests for an adjacency graph.
    Labeling {
        graph: PathBuf,
        #[arg(short, default_value_t = 3)]
        n: usize,
    },
    /// Rerun an exhaustive computation and compare with expected values.
    Reproduce {
        /// thm1, thm2, q1, equivalence, lambda81 or lambda217.
        target: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct PuzzleArgs {
    /// Word list, one word per line.
    file: PathBuf,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(short, default_value_t = 3)]
    n: usize,
    /// Shortest accepted word (default 2 in math mode, 3 in letter mode).
    #[arg(long)]
    min_len: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Math,
    Letters,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Transpositions,
    CornerSideSwaps,
    LocalSearch,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EstimateKind {
    Mean,
    Median,
    Curve,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelArg {
    Directed,
    Undirected,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<u8, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

fn with_path(path: &Path, e: Error) -> Failure {
    match e {
        Error::ResourceLimit(_) => Failure::Runtime(format!("{}: {e}", path.display())),
        _ => Failure::Usage(format!("{}: {e}", path.display())),
    }
}

fn status_code(status: SolveStatus) -> u8 {
    match status {
        SolveStatus::Unique => 0,
        SolveStatus::Ambiguous => EXIT_AMBIGUOUS,
        SolveStatus::NoSolution => EXIT_NO_SOLUTION,
    }
}

/// Rows joined by `/`, without the side-length line.
fn one_line(b: &Board, alphabet: &Alphabet) -> String {
    let rows: Vec<String> = b
        .rows()
        .map(|row| row.iter().map(|&l| alphabet.render(l)).collect::<Vec<_>>().join(" "))
        .collect();
    rows.join("/")
}

struct Context {
    node_budget: Option<u64>,
    board_budget: Option<u64>,
}

impl Context {
    fn load_puzzle(&self, args: &PuzzleArgs) -> std::result::Result<(Puzzle, Alphabet, Solver), Failure> {
        let text = read(&args.file)?;
        let mode = args.mode.map(|m| match m {
            ModeArg::Math => Mode::Math,
            ModeArg::Letters => Mode::Letters,
        });
        let (p, alphabet) = parse_puzzle(&text, mode, args.min_len).map_err(|e| with_path(&args.file, e))?;
        let solver = Solver::new(args.n)?.with_budget(self.node_budget);
        Ok((p, alphabet, solver))
    }
}

fn print_status(r: &SolveReport) {
    println!("status: {}", r.status.as_str());
    println!("solution classes: {}", r.orbit_count);
    println!("embeddings: {}", r.monomorphism_count);
}

fn run(cli: Cli) -> Outcome {
    let ctx = Context {
        node_budget: cli.node_budget,
        board_budget: cli.board_budget,
    };
    match cli.command {
        Command::Solve { puzzle, cap, out } => {
            let (p, alphabet, solver) = ctx.load_puzzle(&puzzle)?;
            let r = solver.with_solution_cap(cap).solve(&p)?;
            print_status(&r);
            for b in &r.solutions {
                println!();
                print!("{}", format_board(b, &alphabet));
            }
            if !r.listing_complete() {
                println!();
                println!("showing {} of {} solution classes", r.solutions.len(), r.orbit_count);
            }
            if let Some(path) = out {
                let mut rep = Report::new("solve")?;
                rep.push("status", r.status.as_str())
                    .push("solution_classes", r.orbit_count)
                    .push("embeddings", r.monomorphism_count)
                    .push("boards", r.board_count);
                for b in &r.solutions {
                    rep.push("solution", one_line(b, &alphabet));
                }
                write(&path, &rep.render())?;
            }
            Ok(status_code(r.status))
        }
        Command::Verify { puzzle } => {
            let (p, _, solver) = ctx.load_puzzle(&puzzle)?;
            let r = solver.with_solution_cap(0).solve(&p)?;
            print_status(&r);
            Ok(status_code(r.status))
        }
        Command::Minimize { puzzle } => {
            let (p, alphabet, solver) = ctx.load_puzzle(&puzzle)?;
            let r = solver.clone().with_solution_cap(0).solve(&p)?;
            if r.status != SolveStatus::Unique {
                print_status(&r);
                return Ok(status_code(r.status));
            }
            let m = solver.minimize(&p)?;
            print!("{}", format_puzzle(&m, &alphabet));
            Ok(0)
        }
        Command::Census { n, out } => {
            let r = minimal_census(n)?;
            println!("minimal subsets: {}", r.minimal_subsets);
            println!("placement classes: {}", r.placement_classes);
            println!("isomorphism classes: {}", r.isomorphism_classes);
            println!("fewest edges: {}", r.min_edges);
            println!("most edges: {}", r.max_edges);
            for (edges, count) in &r.histogram {
                println!("  {edges} edges: {count} classes");
            }
            if let Some(path) = out {
                let mut rep = Report::new("census")?;
                rep.push("minimal_subsets", r.minimal_subsets)
                    .push("placement_classes", r.placement_classes)
                    .push("isomorphism_classes", r.isomorphism_classes)
                    .push("min_edges", r.min_edges)
                    .push("max_edges", r.max_edges);
                for e in &r.entries {
                    rep.push("entry", e.line());
                }
                write(&path, &rep.render())?;
            }
            Ok(0)
        }
        Command::MaxOverlap { n, k, all_maximizers, out } => {
            let s = standard_board(n)?;
            let r = max_overlap_exhaustive(&s, k)?;
            println!("words of length {k}: {}", r.reference_words);
            println!("classes visited: {}", r.classes_visited);
            println!("max overlap: {}", r.max);
            println!("threshold: {}", r.threshold);
            println!("maximizers: {}", r.maximizers.len());
            let shown = if all_maximizers { r.maximizers.len() } else { 1 };
            for m in r.maximizers.iter().take(shown) {
                println!();
                print!("{}", format_board(&m.board, &Alphabet::Numeric));
            }
            if let Some(path) = out {
                let mut rep = Report::new("max-overlap")?;
                rep.push("k", k).push("max", r.max).push("threshold", r.threshold);
                for m in &r.maximizers {
                    rep.push("maximizer", format!("{} {}", one_line(&m.board, &Alphabet::Numeric), m.common_count));
                }
                write(&path, &rep.render())?;
            }
            Ok(0)
        }
        Command::Threshold { n, k } => {
            let t = guarantee_threshold(n, k)?;
            let kind = if t.exact { "exact" } else { "heuristic lower bound" };
            println!("threshold: {} ({kind})", t.threshold);
            Ok(0)
        }
        Command::OverlapSearch { n, k, strategy, seed, starts, out } => {
            let strategy = match strategy {
                StrategyArg::Transpositions => SearchStrategy::Transpositions,
                StrategyArg::CornerSideSwaps => SearchStrategy::CornerSideSwaps,
                StrategyArg::LocalSearch => SearchStrategy::LocalSearch { starts, seed },
            };
            let r = overlap_search(&standard_board(n)?, k, &strategy)?;
            println!("strategy: {} (heuristic)", r.strategy.name());
            println!("reference words: {}", r.baseline.common_count);
            println!("boards examined: {}", r.results.len());
            for x in r.results.iter().take(10) {
                println!("{:>8}  {}", x.common_count, one_line(&x.board, &Alphabet::Numeric));
            }
            if let Some(path) = out {
                let mut rep = Report::new("overlap-search")?;
                rep.push("strategy", r.strategy.name()).push("k", k);
                for x in &r.results {
                    rep.push("board", format!("{} {}", one_line(&x.board, &Alphabet::Numeric), x.common_count));
                }
                write(&path, &rep.render())?;
            }
            Ok(0)
        }
        Command::Estimate { what, n, k, trials, seed, exact, model } => {
            let model = match model {
                ModelArg::Directed => WordModel::Directed,
                ModelArg::Undirected => WordModel::Undirected,
            };
            let r = if exact {
                if k != 2 {
                    return Err(Failure::Usage("--exact is only available for k = 2".into()));
                }
                exact_two_letter_curve_with(n, model)?
            } else {
                monte_carlo_words_to_unique(&SamplingConfig::new(n, k, trials, seed).with_model(model))?
            };
            print_estimate(&r, what);
            Ok(0)
        }
        Command::Classify { lambda, n, kmax, out } => {
            let lambda: PartitionType = lambda.parse()?;
            let r = classify(&lambda, n, kmax, ctx.board_budget)?;
            println!("type: {}", r.lambda);
            println!("boards: {}", r.board_count);
            println!("orbits: {}", r.orbit_count);
            println!("equivalence classes: {}", r.class_count);
            println!("solvable boards: {}", r.solvable_count);
            println!("solvable orbits: {}", r.solvable_orbits);
            println!("all solvable: {}", r.all_solvable);
            if let Some(path) = out {
                let mut rep = Report::new("classify")?;
                rep.push("lambda", &r.lambda)
                    .push("boards", r.board_count)
                    .push("orbits", r.orbit_count)
                    .push("classes", r.class_count)
                    .push("all_solvable", r.all_solvable);
                for class in &r.merged_classes {
                    let members: Vec<String> = class.iter().map(|b| one_line(b, &Alphabet::Numeric)).collect();
                    rep.push("merged_class", members.join(" "));
                }
                write(&path, &rep.render())?;
            }
            Ok(0)
        }
        Command::Words { board, check, min_len, max_len } => {
            let text = read(&board)?;
            let (b, alphabet) = parse_board(&text).map_err(|e| with_path(&board, e))?;
            if let Some(w) = check {
                let word = match &alphabet {
                    Alphabet::Numeric => Some(w.parse::<Word>()?),
                    Alphabet::Letters(_) => alphabet.encode_word(&w),
                };
                match word.and_then(|word| find_word_path(&b, &word)) {
                    Some(path) => {
                        let n = b.n();
                        let trace: Vec<String> = path
                            .iter()
                            .map(|&c| format!("({},{})", c / n + 1, c % n + 1))
                            .collect();
                        println!("found {w}: {}", trace.join(" "));
                    }
                    None => println!("not found {w}"),
                }
                return Ok(0);
            }
            let cells = b.n() * b.n();
            let default_min = match alphabet {
                Alphabet::Numeric => Mode::Math.default_min_len(),
                Alphabet::Letters(_) => Mode::Letters.default_min_len(),
            };
            let lo = min_len.unwrap_or(default_min).min(cells);
            let hi = max_len.unwrap_or(lo.max(4)).min(cells);
            let set = word_set(&b, lo, hi)?;
            for k in lo..=hi {
                let words: Vec<String> = set.of_length(k).map(|w| alphabet.render_word(w)).collect();
                println!("{k}-letter words: {}", words.len());
                for w in words {
                    println!("  {w}");
                }
            }
            Ok(0)
        }
        Command::Labeling { graph, n } => {
            let text = read(&graph)?;
            let g = parse_graph(&text).map_err(|e| with_path(&graph, e))?;
            let host = SimpleGraph::king(n)?;
            let verdict = match is_labeling_subgraph(&g, &host)? {
                LabelingVerdict::Labeling => "yes",
                LabelingVerdict::NotLabeling => "no",
                LabelingVerdict::NoEmbedding => "no (does not embed)",
            };
            println!("labeling subgraph: {verdict}");
            let unique = is_unique_subgraph(&g, &host)?;
            println!("unique subgraph: {}", if unique { "yes" } else { "no" });
            Ok(0)
        }
        Command::Reproduce { target, out } => {
            let target: Target = target.parse()?;
            let r = reproduce(target);
            let text = r.render();
            print!("{text}");
            if let Some(path) = out {
                write(&path, &text)?;
            }
            Ok(if r.get("result") == Some("MATCH") { 0 } else { EXIT_FAILURE })
        }
    }
}

fn print_estimate(r: &EstimateReport, what: EstimateKind) {
    let source = if r.exact {
        "exact".to_string()
    } else {
        format!("{} trials", r.trials)
    };
    println!("n = {}, k = {}, {} words, {} model, {source}", r.n, r.k, r.pool_size, r.model.as_str());
    match what {
        EstimateKind::Mean => {
            if r.exact {
                println!("mean: {:.6}", r.mean_estimate);
            } else {
                println!("mean: {:.4} +/- {:.4}", r.mean_estimate, r.ci_halfwidth);
            }
        }
        EstimateKind::Median => println!("median: {}", r.median_m),
        EstimateKind::Curve => {
            println!("{:>4}  {:>10}  {:>10}  {:>10}", "m", "p", "lo", "hi");
            for (m, &p) in r.probability_curve.iter().enumerate() {
                if r.exact {
                    println!("{m:>4}  {p:>10.6}");
                } else {
                    let hits = (p * r.trials as f64).round() as usize;
                    let (lo, hi) = wilson_interval(hits, r.trials);
                    println!("{m:>4}  {p:>10.6}  {lo:>10.6}  {hi:>10.6}");
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("boggle: cannot start {w} workers: {e}");
            return ExitCode::from(EXIT_FAILURE);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("boggle: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("boggle: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
