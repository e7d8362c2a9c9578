//! Solving word-list puzzles on the `n x n` king's graph.
//!
//! A board contains every word of a distinct-letter puzzle exactly when each
//! consecutive letter pair sits on king-adjacent cells, so the boards that
//! solve a puzzle are the monomorphisms of its adjacency graph into the
//! king's graph, with the unused labels spread over the leftover cells.
//! Solutions are grouped into classes under the board automorphisms (the
//! dihedral group for `n >= 3`); a puzzle is one with exactly one class.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::board::{Board, Label, Permutation};
use crate::dihedral::canonical_grid;
use crate::error::{Error, Result};
use crate::graph::{automorphisms, AdjacencyGraph, Embedder, SimpleGraph};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Puzzle {
    words: Vec<Word>,
}

impl Puzzle {
    pub fn new(words: Vec<Word>) -> Self {
        Puzzle { words }
    }

    pub fn from_strs(words: &[&str]) -> Result<Self> {
        Ok(Puzzle::new(
            words.iter().map(|w| w.parse()).collect::<Result<Vec<_>>>()?,
        ))
    }

    /// Two-letter words, one per edge of `g`.
    pub fn from_graph(g: &AdjacencyGraph) -> Self {
        Puzzle::new(
            g.edges()
                .iter()
                .map(|&(a, b)| Word::new(vec![a, b]).expect("two letters"))
                .collect(),
        )
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn labels(&self) -> BTreeSet<Label> {
        self.words.iter().flat_map(|w| w.letters().iter().copied()).collect()
    }

    pub fn adjacency_graph(&self) -> Result<AdjacencyGraph> {
        AdjacencyGraph::from_words(&self.words)
    }

    pub fn relabel(&self, g: &Permutation) -> Puzzle {
        Puzzle::new(
            self.words
                .iter()
                .map(|w| Word::new(w.letters().iter().map(|&l| g.apply(l)).collect()).expect("same length"))
                .collect(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    NoSolution,
    Unique,
    Ambiguous,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::NoSolution => "no-solution",
            SolveStatus::Unique => "unique",
            SolveStatus::Ambiguous => "ambiguous",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub status: SolveStatus,
    /// One canonical board per solution class, sorted, at most the cap.
    pub solutions: Vec<Board>,
    /// Number of solution classes under the board automorphisms.
    pub orbit_count: u128,
    /// Embeddings of the adjacency graph into the king's graph.
    pub monomorphism_count: u64,
    /// Boards containing the puzzle: embeddings times placements of the
    /// unused labels.
    pub board_count: u128,
}

impl SolveReport {
    pub fn listing_complete(&self) -> bool {
        self.solutions.len() as u128 == self.orbit_count
    }
}

pub const DEFAULT_SOLUTION_CAP: usize = 64;

/// Solver for one board side; holds the king's graph and its automorphisms.
#[derive(Debug, Clone)]
pub struct Solver {
    n: usize,
    host: SimpleGraph,
    aut: Vec<Vec<usize>>,
    solution_cap: usize,
    budget: Option<u64>,
}

impl Solver {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        let host = SimpleGraph::king(n)?;
        let aut = automorphisms(&host)?;
        Ok(Solver {
            n,
            host,
            aut,
            solution_cap: DEFAULT_SOLUTION_CAP,
            budget: None,
        })
    }

    pub fn with_solution_cap(mut self, cap: usize) -> Self {
        self.solution_cap = cap;
        self
    }

    /// Node budget for each monomorphism search.
    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.budget = budget;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn host(&self) -> &SimpleGraph {
        &self.host
    }

    /// Cell permutations preserving king adjacency.
    pub fn automorphisms(&self) -> &[Vec<usize>] {
        &self.aut
    }

    fn check_labels(&self, g: &AdjacencyGraph) -> Result<()> {
        let cells = self.n * self.n;
        if g.vertex_count() > cells {
            return Err(Error::InvalidPuzzle(format!(
                "{} distinct labels do not fit on {cells} cells",
                g.vertex_count()
            )));
        }
        if let Some(l) = g.vertices().iter().find(|l| l.0 == 0 || l.0 as usize > cells) {
            return Err(Error::InvalidPuzzle(format!(
                "label {l} is outside 1..={cells}"
            )));
        }
        Ok(())
    }

    pub fn solve(&self, p: &Puzzle) -> Result<SolveReport> {
        self.solve_graph(&p.adjacency_graph()?)
    }

    pub fn solve_graph(&self, g: &AdjacencyGraph) -> Result<SolveReport> {
        self.check_labels(g)?;
        let cells = self.n * self.n;
        let (pattern, labels) = g.indexed()?;
        let free_labels: Vec<Label> = (1..=cells as u16)
            .map(Label)
            .filter(|l| !g.vertices().contains(l))
            .collect();

        let mut monos = 0u64;
        let mut classes: BTreeSet<Vec<Label>> = BTreeSet::new();
        let cap = self.solution_cap;
        Embedder::new(&pattern, &self.host)
            .with_budget(self.budget)
            .for_each(|mapping| {
                monos += 1;
                if classes.len() < cap {
                    let mut grid = vec![Label(0); cells];
                    let mut used = 0u64;
                    for (v, &c) in mapping.iter().enumerate() {
                        grid[c] = labels[v];
                        used |= 1 << c;
                    }
                    let free_cells: Vec<usize> = (0..cells).filter(|&c| used >> c & 1 == 0).collect();
                    let _ = fill_free(&mut grid, &free_cells, &mut free_labels.clone(), 0, &mut |grid| {
                        classes.insert(canonical_grid(grid, &self.aut));
                        if classes.len() >= cap {
                            ControlFlow::Break(())
                        } else {
                            ControlFlow::Continue(())
                        }
                    });
                }
                ControlFlow::Continue(())
            })?;

        let board_count = monos as u128 * factorial(free_labels.len())?;
        let group = self.aut.len() as u128;
        debug_assert_eq!(board_count % group, 0, "solution boards split into full classes");
        let orbit_count = board_count / group;
        let status = match orbit_count {
            0 => SolveStatus::NoSolution,
            1 => SolveStatus::Unique,
            _ => SolveStatus::Ambiguous,
        };
        let solutions = classes
            .into_iter()
            .map(|grid| Board::new(self.n, grid))
            .collect::<Result<Vec<_>>>()?;
        Ok(SolveReport {
            status,
            solutions,
            orbit_count,
            monomorphism_count: monos,
            board_count,
        })
    }

    /// Uniqueness without listing solutions: stops as soon as a second
    /// class is certain.
    pub fn is_puzzle_graph(&self, g: &AdjacencyGraph) -> Result<bool> {
        self.check_labels(g)?;
        let free = self.n * self.n - g.vertex_count();
        if free >= 2 {
            // Swapping two unused labels gives an inequivalent board.
            return Ok(false);
        }
        let (pattern, _) = g.indexed()?;
        let group = self.aut.len() as u64;
        let found = Embedder::new(&pattern, &self.host)
            .with_budget(self.budget)
            .count(Some(group + 1))?;
        Ok(found == group)
    }

    pub fn is_puzzle(&self, p: &Puzzle) -> Result<bool> {
        self.is_puzzle_graph(&p.adjacency_graph()?)
    }

    /// True iff deleting any one adjacency of the puzzle destroys uniqueness.
    pub fn is_minimal(&self, p: &Puzzle) -> Result<bool> {
        let g = p.adjacency_graph()?;
        if !self.is_puzzle_graph(&g)? {
            return Err(Error::Precondition("word list is not a puzzle".into()));
        }
        for &e in g.edges() {
            if self.is_puzzle_graph(&g.without_edge(e))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Greedily drops adjacencies in sorted order while the puzzle stays
    /// unique, splitting words where an adjacency was dropped. One pass
    /// suffices: an adjacency that was needed stays needed as the puzzle
    /// shrinks, since sub-puzzles of non-puzzles are non-puzzles.
    pub fn minimize(&self, p: &Puzzle) -> Result<Puzzle> {
        let mut g = p.adjacency_graph()?;
        if !self.is_puzzle_graph(&g)? {
            return Err(Error::Precondition("word list is not a puzzle".into()));
        }
        let mut removed = BTreeSet::new();
        for e in g.edges().clone() {
            let smaller = g.without_edge(e);
            if self.is_puzzle_graph(&smaller)? {
                g = smaller;
                removed.insert(e);
            }
        }
        if removed.is_empty() {
            return Ok(p.clone());
        }
        let mut words: Vec<Word> = Vec::new();
        for w in p.words() {
            let mut piece: Vec<Label> = Vec::new();
            for &l in w.letters() {
                if let Some(&prev) = piece.last() {
                    if removed.contains(&(prev.min(l), prev.max(l))) {
                        push_piece(&mut words, std::mem::take(&mut piece));
                    }
                }
                piece.push(l);
            }
            push_piece(&mut words, piece);
        }
        Ok(Puzzle::new(words))
    }
}

fn push_piece(words: &mut Vec<Word>, piece: Vec<Label>) {
    if let Ok(w) = Word::new(piece) {
        if !words.contains(&w) {
            words.push(w);
        }
    }
}

/// Places `labels[i..]` into `free_cells[i..]` in every order.
fn fill_free<F>(grid: &mut [Label], free_cells: &[usize], labels: &mut [Label], i: usize, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[Label]) -> ControlFlow<()>,
{
    if i == free_cells.len() {
        return f(grid);
    }
    for j in i..labels.len() {
        labels.swap(i, j);
        grid[free_cells[i]] = labels[i];
        let flow = fill_free(grid, free_cells, labels, i + 1, f);
        labels.swap(i, j);
        flow?;
    }
    ControlFlow::Continue(())
}

fn factorial(k: usize) -> Result<u128> {
    (1..=k as u128).try_fold(1u128, |acc, x| acc.checked_mul(x)).ok_or_else(|| {
        Error::ResourceLimit(format!("{k}! placements of unused labels overflow"))
    })
}

pub fn solve(p: &Puzzle, n: usize) -> Result<SolveReport> {
    Solver::new(n)?.solve(p)
}

pub fn is_puzzle(p: &Puzzle, n: usize) -> Result<bool> {
    Solver::new(n)?.is_puzzle(p)
}

pub fn is_minimal(p: &Puzzle, n: usize) -> Result<bool> {
    Solver::new(n)?.is_minimal(p)
}

pub fn minimize(p: &Puzzle, n: usize) -> Result<Puzzle> {
    Solver::new(n)?.minimize(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::standard_board;
    use crate::dihedral::canonical_board;
    use crate::graph::{is_labeling_subgraph, LabelingVerdict};
    use crate::paths::build_king_graph;

    fn all_edges_puzzle() -> Puzzle {
        let s = standard_board(3).unwrap();
        Puzzle::new(
            build_king_graph(3)
                .unwrap()
                .into_iter()
                .map(|(a, b)| Word::new(vec![s.get(a), s.get(b)]).unwrap())
                .collect(),
        )
    }

    fn corner_swap_puzzle() -> Puzzle {
        // Every adjacency of the standard board except 1-8 and 3-4.
        let s = standard_board(3).unwrap();
        let skip = [(Label(1), Label(8)), (Label(3), Label(4))];
        Puzzle::new(
            build_king_graph(3)
                .unwrap()
                .into_iter()
                .map(|(a, b)| (s.get(a).min(s.get(b)), s.get(a).max(s.get(b))))
                .filter(|e| !skip.contains(e))
                .map(|(a, b)| Word::new(vec![a, b]).unwrap())
                .collect(),
        )
    }

    #[test]
    fn cycle_with_pendant_is_ambiguous() {
        let p = Puzzle::from_strs(&["9-1-2", "2-3-4-5", "5-6-7-9", "7-9-8"]).unwrap();
        let r = solve(&p, 3).unwrap();
        assert_eq!(r.status, SolveStatus::Ambiguous);
        assert!(r.orbit_count >= 2);
        assert!(!is_puzzle(&p, 3).unwrap());
    }

    #[test]
    fn single_word_is_ambiguous() {
        let r = solve(&Puzzle::from_strs(&["4-7"]).unwrap(), 3).unwrap();
        assert_eq!(r.status, SolveStatus::Ambiguous);
        assert!(r.orbit_count >= 2);
        // 40 embeddings times 7! placements of the rest, over 8 symmetries.
        assert_eq!(r.orbit_count, 40 * 5040 / 8);
        assert_eq!(r.solutions.len(), DEFAULT_SOLUTION_CAP);
    }

    #[test]
    fn corner_swap_graph_has_two_classes() {
        let p = corner_swap_puzzle();
        let r = solve(&p, 3).unwrap();
        assert_eq!(r.status, SolveStatus::Ambiguous);
        assert_eq!(r.orbit_count, 2);
        assert_eq!(r.monomorphism_count, 16);
        let s = standard_board(3).unwrap();
        let swapped = s.permute(&"(1 3)".parse().unwrap());
        let expect: BTreeSet<Board> = [canonical_board(&s), canonical_board(&swapped)].into();
        assert_eq!(r.solutions.iter().cloned().collect::<BTreeSet<_>>(), expect);
    }

    #[test]
    fn empty_list_and_errors() {
        let r = solve(&Puzzle::default(), 3).unwrap();
        assert_eq!(r.status, SolveStatus::Ambiguous);
        assert_eq!(r.orbit_count, 45_360);
        assert!(!is_puzzle(&Puzzle::default(), 3).unwrap());
        assert!(matches!(
            solve(&Puzzle::from_strs(&["1-12"]).unwrap(), 3),
            Err(Error::InvalidPuzzle(_))
        ));
        assert!(matches!(
            solve(&Puzzle::from_strs(&["1-2-1"]).unwrap(), 3),
            Err(Error::InvalidWord(_))
        ));
        assert!(matches!(
            is_minimal(&Puzzle::from_strs(&["1-2"]).unwrap(), 3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn no_solution_when_graph_does_not_embed() {
        // Five mutually adjacent labels cannot sit on a king's graph.
        let p = Puzzle::from_strs(&["1-2-3-4-5", "1-3-5-2-4", "1-4", "1-5"]).unwrap();
        let r = solve(&p, 3).unwrap();
        assert_eq!(r.status, SolveStatus::NoSolution);
        assert_eq!(r.monomorphism_count, 0);
        assert!(r.solutions.is_empty());
    }

    #[test]
    fn full_edge_set_is_puzzle_but_not_minimal() {
        let p = all_edges_puzzle();
        let r = solve(&p, 3).unwrap();
        assert_eq!(r.status, SolveStatus::Unique);
        assert_eq!(r.monomorphism_count, 8);
        assert_eq!(r.solutions, vec![canonical_board(&standard_board(3).unwrap())]);
        assert!(!is_minimal(&p, 3).unwrap());
        let m = minimize(&p, 3).unwrap();
        let edges = m.adjacency_graph().unwrap().edge_count();
        assert!((11..=20).contains(&edges), "{edges}");
        assert!(is_puzzle(&m, 3).unwrap());
        assert!(is_minimal(&m, 3).unwrap());
        // Fixed point.
        assert_eq!(minimize(&m, 3).unwrap(), m);
    }

    #[test]
    fn minimize_splits_words() {
        let p = Puzzle::from_strs(&["1-2-3-4-5-6-7-8", "8-1", "2-4-6-8", "8-2", "8-9-4", "2-9-6", "1-9-5", "3-9-7"]).unwrap();
        assert!(is_puzzle(&p, 3).unwrap());
        let m = minimize(&p, 3).unwrap();
        assert!(is_puzzle(&m, 3).unwrap());
        assert!(is_minimal(&m, 3).unwrap());
        let original = p.adjacency_graph().unwrap();
        let reduced = m.adjacency_graph().unwrap();
        assert!(reduced.edges().is_subset(original.edges()));
    }

    #[test]
    fn full_label_puzzles_match_labeling_test() {
        let host = SimpleGraph::king(3).unwrap();
        for p in [all_edges_puzzle(), corner_swap_puzzle()] {
            let g = p.adjacency_graph().unwrap();
            assert_eq!(g.vertex_count(), 9);
            let labeling = is_labeling_subgraph(&g, &host).unwrap() == LabelingVerdict::Labeling;
            assert_eq!(labeling, is_puzzle(&p, 3).unwrap());
        }
    }
}
