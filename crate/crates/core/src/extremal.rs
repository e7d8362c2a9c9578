//! How many words two inequivalent boards can share.
//!
//! If no board outside the reference's symmetry class shares more than `M`
//! of its `k`-letter words, then any `M + 1` of those words pin the board
//! down. For 3x3 boards `M` is found by scanning every label placement.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::board::{standard_board, Board, Label};
use crate::dihedral::{canonical_board, cell_maps};
use crate::error::{Error, Result};
use crate::paths::{king_adjacency, PathCatalog};
use crate::words::{word_set_from_catalog, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapResult {
    pub board: Board,
    pub common_count: usize,
    pub k: usize,
}

fn check_pair(b1: &Board, b2: &Board) -> Result<()> {
    if b1.n() != b2.n() {
        return Err(Error::InvalidComparison(format!(
            "boards have different sides {} and {}",
            b1.n(),
            b2.n()
        )));
    }
    Ok(())
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k < 2 || k > n * n {
        return Err(Error::Precondition(format!(
            "word length {k} outside 2..={}",
            n * n
        )));
    }
    Ok(())
}

/// Number of `k`-letter words on both boards, by intersecting word sets.
pub fn overlap(b1: &Board, b2: &Board, k: usize) -> Result<usize> {
    check_pair(b1, b2)?;
    check_k(b1.n(), k)?;
    let catalog = PathCatalog::new(b1.n(), k)?;
    let reference: HashSet<Word> = word_set_from_catalog(b1, &catalog, k, k).words.into_iter().collect();
    Ok(word_set_from_catalog(b2, &catalog, k, k)
        .words
        .iter()
        .filter(|w| reference.contains(*w))
        .count())
}

/// Membership test for words of a distinct-label reference board: a label
/// sequence is a word iff consecutive labels sit on adjacent cells.
#[derive(Debug, Clone)]
pub struct ReferenceWords {
    // cell of each label value; usize::MAX if absent
    cell_of: Vec<usize>,
    adj: Vec<u64>,
}

impl ReferenceWords {
    pub fn new(reference: &Board) -> Result<Self> {
        if !reference.has_distinct_labels() {
            return Err(Error::Precondition("reference board must have distinct labels".into()));
        }
        let max = reference.cells().iter().map(|l| l.0 as usize).max().unwrap_or(0);
        let mut cell_of = vec![usize::MAX; max + 1];
        for (c, l) in reference.cells().iter().enumerate() {
            cell_of[l.0 as usize] = c;
        }
        Ok(ReferenceWords {
            cell_of,
            adj: king_adjacency(reference.n()),
        })
    }

    fn cell(&self, l: Label) -> usize {
        self.cell_of.get(l.0 as usize).copied().unwrap_or(usize::MAX)
    }

    fn adjacent(&self, a: Label, b: Label) -> bool {
        let (x, y) = (self.cell(a), self.cell(b));
        x != usize::MAX && y != usize::MAX && self.adj[x] >> y & 1 == 1
    }

    /// Words of `candidate` along the catalog's `k`-paths that the reference
    /// also has. Paths give distinct words on a distinct-label board.
    pub fn count_common(&self, candidate: &[Label], catalog: &PathCatalog, k: usize) -> usize {
        catalog
            .paths(k)
            .filter(|p| {
                p.windows(2)
                    .all(|w| self.adjacent(candidate[w[0] as usize], candidate[w[1] as usize]))
            })
            .count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxOverlap {
    pub k: usize,
    /// Words of length `k` on the reference.
    pub reference_words: usize,
    /// Largest overlap of a board outside the reference's class.
    pub max: usize,
    /// `max + 1`: any this many distinct words determine the board.
    pub threshold: usize,
    /// Canonical boards attaining `max`, sorted.
    pub maximizers: Vec<OverlapResult>,
    /// Symmetry classes examined, the reference's own included.
    pub classes_visited: usize,
}

/// Scans all `9!` placements of the reference's labels, one per symmetry
/// class. Work is split by the labels of the first two cells.
pub fn max_overlap_exhaustive(reference: &Board, k: usize) -> Result<MaxOverlap> {
    if reference.n() != 3 {
        return Err(Error::ResourceLimit(format!(
            "exhaustive overlap search scans (n*n)! boards and is only run for n = 3, got {}",
            reference.n()
        )));
    }
    check_k(3, k)?;
    let words = ReferenceWords::new(reference)?;
    let catalog = PathCatalog::new(3, k)?;
    let maps = cell_maps(3);
    let labels: Vec<Label> = reference.cells().to_vec();
    let home = canonical_board(reference).cells().to_vec();

    let prefixes: Vec<(usize, usize)> = (0..9)
        .flat_map(|a| (0..9).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let partials: Vec<(usize, usize, Vec<Vec<Label>>)> = prefixes
        .par_iter()
        .map(|&(a, b)| {
            let mut rest: Vec<Label> = (0..9).filter(|&i| i != a && i != b).map(|i| labels[i]).collect();
            let mut best = 0usize;
            let mut argmax: Vec<Vec<Label>> = Vec::new();
            let mut visited = 0usize;
            let mut grid = [Label(0); 9];
            grid[0] = labels[a];
            grid[1] = labels[b];
            for_each_permutation(&mut rest, |perm| {
                grid[2..].copy_from_slice(perm);
                if !is_canonical(&grid, &maps) {
                    return;
                }
                visited += 1;
                if grid[..] == home[..] {
                    return;
                }
                let c = words.count_common(&grid, &catalog, k);
                if c > best {
                    best = c;
                    argmax.clear();
                }
                if c == best {
                    argmax.push(grid.to_vec());
                }
            });
            (visited, best, argmax)
        })
        .collect();

    let max = partials.iter().map(|p| p.1).max().unwrap_or(0);
    let classes_visited = partials.iter().map(|p| p.0).sum();
    let mut maximizers: Vec<OverlapResult> = partials
        .into_iter()
        .filter(|p| p.1 == max)
        .flat_map(|p| p.2)
        .map(|grid| OverlapResult {
            board: Board::new(3, grid).expect("nine cells"),
            common_count: max,
            k,
        })
        .collect();
    maximizers.sort_by(|a, b| a.board.cmp(&b.board));
    Ok(MaxOverlap {
        k,
        reference_words: catalog.count(k),
        max,
        threshold: max + 1,
        maximizers,
        classes_visited,
    })
}

fn is_canonical(grid: &[Label; 9], maps: &[Vec<usize>]) -> bool {
    let mut img = [Label(0); 9];
    maps.iter().skip(1).all(|map| {
        for c in 0..9 {
            img[map[c]] = grid[c];
        }
        grid[..] <= img[..]
    })
}

/// Heap's algorithm over `items` in place.
fn for_each_permutation<T: Copy, F: FnMut(&[T])>(items: &mut [T], mut f: F) {
    let n = items.len();
    let mut c = vec![0usize; n];
    f(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Threshold {
    pub n: usize,
    pub k: usize,
    pub threshold: usize,
    /// False when only a heuristic search backs the value, which is then a
    /// lower bound on the true threshold.
    pub exact: bool,
}

/// Smallest word count guaranteeing reconstruction of the standard board;
/// exact for `n = 3`, a transposition-scan lower bound otherwise.
pub fn guarantee_threshold(n: usize, k: usize) -> Result<Threshold> {
    let s = standard_board(n)?;
    if n == 3 {
        let r = max_overlap_exhaustive(&s, k)?;
        return Ok(Threshold {
            n,
            k,
            threshold: r.threshold,
            exact: true,
        });
    }
    let r = overlap_search(&s, k, &SearchStrategy::Transpositions)?;
    let best = r.results.first().map_or(0, |b| b.common_count);
    Ok(Threshold {
        n,
        k,
        threshold: best + 1,
        exact: false,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Every label transposition of the reference.
    Transpositions,
    /// Swaps of a corner with an orthogonally adjacent side cell.
    CornerSideSwaps,
    /// Steepest ascent over transpositions from random placements.
    LocalSearch { starts: usize, seed: u64 },
}

impl SearchStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            SearchStrategy::Transpositions => "transpositions",
            SearchStrategy::CornerSideSwaps => "corner-side-swaps",
            SearchStrategy::LocalSearch { .. } => "local-search",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub strategy: SearchStrategy,
    pub k: usize,
    /// The reference itself, sharing all its words.
    pub baseline: OverlapResult,
    /// Boards outside the reference's class, best first.
    pub results: Vec<OverlapResult>,
}

impl SearchReport {
    pub fn best(&self) -> Option<&OverlapResult> {
        self.results.first()
    }
}

fn swapped(b: &Board, i: usize, j: usize) -> Board {
    let mut cells = b.cells().to_vec();
    cells.swap(i, j);
    Board::new(b.n(), cells).expect("same size")
}

pub fn overlap_search(reference: &Board, k: usize, strategy: &SearchStrategy) -> Result<SearchReport> {
    let n = reference.n();
    if n < 3 {
        return Err(Error::Precondition(format!("overlap search needs n >= 3, got {n}")));
    }
    check_k(n, k)?;
    let words = ReferenceWords::new(reference)?;
    let catalog = PathCatalog::new(n, k)?;
    let home = canonical_board(reference);
    let score = |b: &Board| OverlapResult {
        common_count: words.count_common(b.cells(), &catalog, k),
        board: b.clone(),
        k,
    };
    let cells = n * n;

    let mut results: Vec<OverlapResult> = match strategy {
        SearchStrategy::Transpositions => (0..cells)
            .flat_map(|i| (i + 1..cells).map(move |j| (i, j)))
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&(i, j)| swapped(reference, i, j))
            .filter(|b| canonical_board(b) != home)
            .map(|b| score(&b))
            .collect(),
        SearchStrategy::CornerSideSwaps => {
            let m = n - 1;
            let pairs = [
                (0, 1),
                (0, n),
                (m, m - 1),
                (m, m + n),
                (m * n, m * n + 1),
                (m * n, (m - 1) * n),
                (m * n + m, m * n + m - 1),
                (m * n + m, (m - 1) * n + m),
            ];
            pairs
                .iter()
                .map(|&(i, j)| swapped(reference, i, j))
                .filter(|b| canonical_board(b) != home)
                .map(|b| score(&b))
                .collect()
        }
        SearchStrategy::LocalSearch { starts, seed } => (0..*starts as u64)
            .into_par_iter()
            .map(|start| {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                rng.set_stream(start);
                let mut grid = reference.cells().to_vec();
                loop {
                    grid.shuffle(&mut rng);
                    let b = Board::new(n, grid.clone()).expect("same size");
                    if canonical_board(&b) != home {
                        break;
                    }
                }
                let mut current = score(&Board::new(n, grid).expect("same size"));
                loop {
                    let best = (0..cells)
                        .flat_map(|i| (i + 1..cells).map(move |j| (i, j)))
                        .map(|(i, j)| swapped(&current.board, i, j))
                        .filter(|b| canonical_board(b) != home)
                        .map(|b| score(&b))
                        .max_by(|a, b| {
                            a.common_count
                                .cmp(&b.common_count)
                                .then_with(|| b.board.cmp(&a.board))
                        });
                    match best {
                        Some(b) if b.common_count > current.common_count => current = b,
                        _ => break current,
                    }
                }
            })
            .collect(),
    };
    results.sort_by(|a, b| {
        b.common_count
            .cmp(&a.common_count)
            .then_with(|| a.board.cmp(&b.board))
    });
    Ok(SearchReport {
        strategy: strategy.clone(),
        k,
        baseline: OverlapResult {
            board: reference.clone(),
            common_count: catalog.count(k),
            k,
        },
        results,
    })
}
