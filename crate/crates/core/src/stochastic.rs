//! How many random words it takes to pin a board down.
//!
//! Words are drawn uniformly without replacement from the board's own
//! `k`-letter words until the list becomes a puzzle. Because any superset of
//! a puzzle is a puzzle, the first `m` draws form a uniform random `m`-subset
//! and `P(T <= m)` for the stopping count `T` is exactly the probability that
//! `m` random words determine the board.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::board::{standard_board, Board};
use crate::census::{PuzzleTable, EDGES};
use crate::error::{Error, Result};
use crate::paths::PathCatalog;
use crate::puzzle::{Puzzle, Solver};
use crate::words::Word;

/// Which words count as different draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WordModel {
    /// A word and its reversal are separate words.
    #[default]
    Directed,
    /// One word per path up to reversal.
    Undirected,
}

impl WordModel {
    pub fn as_str(self) -> &'static str {
        match self {
            WordModel::Directed => "directed",
            WordModel::Undirected => "undirected",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplingConfig {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub trials: usize,
    pub model: WordModel,
    /// Board the words come from; the standard board when `None`.
    pub board: Option<Board>,
}

impl SamplingConfig {
    pub fn new(n: usize, k: usize, trials: usize, seed: u64) -> Self {
        SamplingConfig {
            n,
            k,
            seed,
            trials,
            model: WordModel::Directed,
            board: None,
        }
    }

    pub fn with_model(mut self, model: WordModel) -> Self {
        self.model = model;
        self
    }

    pub fn with_board(mut self, board: Board) -> Self {
        self.board = Some(board);
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EstimateReport {
    pub n: usize,
    pub k: usize,
    pub model: WordModel,
    /// Number of words that can be drawn.
    pub pool_size: usize,
    pub trials: usize,
    pub mean_estimate: f64,
    /// Least `m` with `probability_curve[m] >= 0.5`.
    pub median_m: usize,
    /// `probability_curve[m]` = P(`m` random words form a puzzle), for
    /// `m` in `0..=pool_size`.
    pub probability_curve: Vec<f64>,
    /// Half-width of the 95% interval for the mean; zero when exact.
    pub ci_halfwidth: f64,
    pub exact: bool,
    /// Stopping count of each trial, in trial order.
    pub stopping_counts: Vec<usize>,
}

impl EstimateReport {
    fn from_curve(n: usize, k: usize, model: WordModel, curve: Vec<f64>) -> Self {
        let pool_size = curve.len() - 1;
        let mean = curve[..pool_size].iter().map(|p| 1.0 - p).sum();
        EstimateReport {
            n,
            k,
            model,
            pool_size,
            trials: 0,
            mean_estimate: mean,
            median_m: median_of(&curve),
            probability_curve: curve,
            ci_halfwidth: 0.0,
            exact: true,
            stopping_counts: Vec::new(),
        }
    }
}

fn median_of(curve: &[f64]) -> usize {
    curve.iter().position(|&p| p >= 0.5).unwrap_or(curve.len() - 1)
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Exact probability that `m` of the 20 undirected two-letter words of a
/// 3x3 board form a puzzle, for every `m`.
pub fn exact_two_letter_curve(n: usize) -> Result<EstimateReport> {
    exact_two_letter_curve_with(n, WordModel::Undirected)
}

/// As [`exact_two_letter_curve`]; under [`WordModel::Directed`] the pool is
/// the 40 ordered pairs, and a draw of `m` of them covering `j` edges is
/// counted through the `C(j, m - j) * 2^(2j - m)` ways to pick directions.
pub fn exact_two_letter_curve_with(n: usize, model: WordModel) -> Result<EstimateReport> {
    if n != 3 {
        return Err(Error::ResourceLimit(format!(
            "the exact curve enumerates all edge subsets and is only run for n = 3, got {n}"
        )));
    }
    let counts = PuzzleTable::global().counts_by_size();
    let edges = EDGES as u64;
    let curve: Vec<f64> = match model {
        WordModel::Undirected => (0..=edges)
            .map(|m| counts[m as usize] as f64 / binomial(edges, m) as f64)
            .collect(),
        WordModel::Directed => (0..=2 * edges)
            .map(|m| {
                let hits: u128 = (0..=edges)
                    .filter(|&j| j <= m && m <= 2 * j)
                    .map(|j| counts[j as usize] as u128 * binomial(j, m - j) << (2 * j - m))
                    .sum();
                hits as f64 / binomial(2 * edges, m) as f64
            })
            .collect(),
    };
    Ok(EstimateReport::from_curve(n, 2, model, curve))
}

/// Decides after each draw whether the words so far form a puzzle.
enum Oracle<'a> {
    Table(&'a PuzzleTable),
    Direct(Solver),
}

struct Pool {
    board: Board,
    // cell paths, one per drawable word
    paths: Vec<Vec<u8>>,
}

impl Pool {
    fn new(cfg: &SamplingConfig) -> Result<Self> {
        let board = match &cfg.board {
            Some(b) => b.clone(),
            None => standard_board(cfg.n)?,
        };
        if board.n() != cfg.n {
            return Err(Error::Precondition(format!(
                "board side {} does not match n = {}",
                board.n(),
                cfg.n
            )));
        }
        if !board.has_distinct_labels() {
            return Err(Error::Precondition("sampling needs a board with distinct labels".into()));
        }
        if cfg.k < 2 || cfg.k > cfg.n * cfg.n {
            return Err(Error::Precondition(format!("word length {} outside 2..={}", cfg.k, cfg.n * cfg.n)));
        }
        if cfg.trials == 0 {
            return Err(Error::Precondition("at least one trial is needed".into()));
        }
        let catalog = PathCatalog::new(cfg.n, cfg.k)?;
        let paths = catalog
            .paths(cfg.k)
            .filter(|p| cfg.model == WordModel::Directed || p[0] < p[cfg.k - 1])
            .map(|p| p.to_vec())
            .collect();
        Ok(Pool { board, paths })
    }

    fn word(&self, path: &[u8]) -> Word {
        Word::new(path.iter().map(|&c| self.board.get(c as usize)).collect()).expect("k >= 2")
    }
}

fn stopping_count(pool: &Pool, oracle: &Oracle, rng: &mut ChaCha8Rng) -> Result<usize> {
    let mut order: Vec<usize> = (0..pool.paths.len()).collect();
    let mut mask = 0u32;
    let mut edges: HashSet<(u8, u8)> = HashSet::new();
    let mut words: Vec<Word> = Vec::new();
    for drawn in 0..order.len() {
        let j = rng.gen_range(drawn..order.len());
        order.swap(drawn, j);
        let path = &pool.paths[order[drawn]];
        let done = match oracle {
            Oracle::Table(table) => {
                let next = mask | table.index().mask_of_path(path);
                let changed = next != mask;
                mask = next;
                changed && table.is_puzzle(mask)
            }
            Oracle::Direct(solver) => {
                words.push(pool.word(path));
                let mut changed = false;
                for w in path.windows(2) {
                    changed |= edges.insert((w[0].min(w[1]), w[0].max(w[1])));
                }
                changed && solver.is_puzzle(&Puzzle::new(words.clone()))?
            }
        };
        if done {
            return Ok(drawn + 1);
        }
    }
    Err(Error::Precondition(
        "the board's full word list of this length is not a puzzle".into(),
    ))
}

fn run_trials(cfg: &SamplingConfig) -> Result<(Pool, Vec<usize>)> {
    let pool = Pool::new(cfg)?;
    let oracle = if cfg.n == 3 {
        Oracle::Table(PuzzleTable::global())
    } else {
        Oracle::Direct(Solver::new(cfg.n)?)
    };
    let counts = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(trial);
            stopping_count(&pool, &oracle, &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((pool, counts))
}

/// Empirical distribution of the stopping count.
pub fn monte_carlo_words_to_unique(cfg: &SamplingConfig) -> Result<EstimateReport> {
    let (pool, counts) = run_trials(cfg)?;
    let t = counts.len() as f64;
    let mean = counts.iter().sum::<usize>() as f64 / t;
    let var = if counts.len() > 1 {
        counts.iter().map(|&c| (c as f64 - mean).powi(2)).sum::<f64>() / (t - 1.0)
    } else {
        0.0
    };
    let mut hist = vec![0usize; pool.paths.len() + 1];
    for &c in &counts {
        hist[c] += 1;
    }
    let mut below = 0usize;
    let curve: Vec<f64> = hist
        .iter()
        .map(|&h| {
            below += h;
            below as f64 / t
        })
        .collect();
    Ok(EstimateReport {
        n: cfg.n,
        k: cfg.k,
        model: cfg.model,
        pool_size: pool.paths.len(),
        trials: cfg.trials,
        mean_estimate: mean,
        median_m: median_of(&curve),
        probability_curve: curve,
        ci_halfwidth: 1.96 * (var / t).sqrt(),
        exact: false,
        stopping_counts: counts,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbabilityEstimate {
    pub m: usize,
    pub p: f64,
    pub lower: f64,
    pub upper: f64,
}

/// 95% Wilson score interval for `hits` successes in `trials`.
pub fn wilson_interval(hits: usize, trials: usize) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.96f64;
    let n = trials as f64;
    let p = hits as f64 / n;
    let denom = 1.0 + z * z / n;
    let centre = (p + z * z / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z * z / (4.0 * n * n)).sqrt() / denom;
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// Probability that `m` random words form a puzzle, with a Wilson interval.
pub fn probability_at(cfg: &SamplingConfig, m: usize) -> Result<ProbabilityEstimate> {
    let pool = Pool::new(cfg)?;
    if m > pool.paths.len() {
        return Err(Error::Precondition(format!(
            "cannot draw {m} words from {} available",
            pool.paths.len()
        )));
    }
    let (_, counts) = run_trials(cfg)?;
    let hits = counts.iter().filter(|&&c| c <= m).count();
    let (lower, upper) = wilson_interval(hits, counts.len());
    Ok(ProbabilityEstimate {
        m,
        p: hits as f64 / counts.len() as f64,
        lower,
        upper,
    })
}
