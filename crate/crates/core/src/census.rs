//! Exhaustive census of 3x3 puzzles built from two-letter words.
//!
//! A set of two-letter words on the standard board is an edge subset of the
//! 20-edge king's graph `K_3`. The subset is a puzzle iff exactly eight cell
//! permutations (the dihedral symmetries) map all its edges onto king edges.
//! [`PuzzleTable`] records that bit for all `2^20` subsets, evaluating one
//! subset per dihedral class and copying the answer to the rest of the class.
//!
//! Edge `i` of a mask is the `i`-th pair of [`crate::paths::build_king_graph`]
//! for `n = 3`, i.e. cell pairs `(a, b)`, `a < b`, in lexicographic order.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::board::standard_board;
use crate::dihedral::cell_maps;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Embedder, SimpleGraph};
use crate::paths::build_king_graph;
use crate::words::Word;

pub const EDGES: usize = 20;
const SUBSETS: usize = 1 << EDGES;
const CELLS: usize = 9;

/// The 20 edges of `K_3` and their images under the eight symmetries.
#[derive(Debug, Clone)]
pub struct EdgeIndex {
    edges: Vec<(usize, usize)>,
    id: [[u8; CELLS]; CELLS],
    // perms[d][i]: index of the image of edge i under symmetry d
    perms: Vec<[u8; EDGES]>,
}

impl EdgeIndex {
    pub fn new() -> Self {
        let edges = build_king_graph(3).expect("n = 3");
        let mut id = [[u8::MAX; CELLS]; CELLS];
        for (i, &(a, b)) in edges.iter().enumerate() {
            id[a][b] = i as u8;
            id[b][a] = i as u8;
        }
        let perms = cell_maps(3)
            .iter()
            .map(|map| {
                let mut p = [0u8; EDGES];
                for (i, &(a, b)) in edges.iter().enumerate() {
                    p[i] = id[map[a]][map[b]];
                }
                p
            })
            .collect();
        EdgeIndex { edges, id, perms }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Index of the king edge between two cells, if they are adjacent.
    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        let i = self.id[a][b];
        (i != u8::MAX).then_some(i as usize)
    }

    pub fn mask_of_path(&self, cells: &[u8]) -> u32 {
        cells
            .windows(2)
            .map(|w| 1u32 << self.id[w[0] as usize][w[1] as usize])
            .fold(0, |a, b| a | b)
    }

    pub fn apply(&self, d: usize, mask: u32) -> u32 {
        let p = &self.perms[d];
        let mut out = 0u32;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= 1 << p[i];
        }
        out
    }

    /// Least mask in the dihedral class of `mask`.
    pub fn canonical(&self, mask: u32) -> u32 {
        (0..self.perms.len()).map(|d| self.apply(d, mask)).min().unwrap_or(mask)
    }

    /// The subset as a graph on all nine cells.
    pub fn graph(&self, mask: u32) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        SimpleGraph::from_edges(CELLS, &edges).expect("cells in range")
    }

    /// The subset as the adjacency graph of its words: covered cells only.
    pub fn covered_graph(&self, mask: u32) -> SimpleGraph {
        let mut covered: Vec<usize> = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                covered.push(a);
                covered.push(b);
            }
        }
        covered.sort_unstable();
        covered.dedup();
        let pos = |c: usize| covered.binary_search(&c).expect("covered cell");
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(a, b))| (pos(a), pos(b)))
            .collect();
        SimpleGraph::from_edges(covered.len(), &edges).expect("cells in range")
    }

    /// Two-letter words on the standard board, one per edge.
    pub fn words(&self, mask: u32) -> Vec<Word> {
        let s = standard_board(3).expect("n = 3");
        self.edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(a, b))| {
                let (x, y) = (s.get(a).min(s.get(b)), s.get(a).max(s.get(b)));
                Word::new(vec![x, y]).expect("two letters")
            })
            .collect()
    }
}

impl Default for EdgeIndex {
    fn default() -> Self {
        EdgeIndex::new()
    }
}

/// Whether a single edge subset is a puzzle, by direct search.
pub fn subset_is_puzzle(index: &EdgeIndex, host: &SimpleGraph, mask: u32) -> bool {
    let pattern = index.graph(mask);
    let found = Embedder::new(&pattern, host)
        .count(Some(9))
        .expect("no budget set");
    found == 8
}

/// Puzzle bit for every edge subset of `K_3`.
pub struct PuzzleTable {
    index: EdgeIndex,
    bits: Vec<u64>,
}

impl PuzzleTable {
    pub fn build() -> Self {
        let index = EdgeIndex::new();
        let host = SimpleGraph::king(3).expect("n = 3");
        // Evaluate one subset per dihedral class, in contiguous chunks.
        let results: Vec<(u32, bool)> = (0..SUBSETS as u32)
            .into_par_iter()
            .with_min_len(1 << 12)
            .filter(|&m| index.canonical(m) == m)
            .map(|m| (m, subset_is_puzzle(&index, &host, m)))
            .collect();
        let mut bits = vec![0u64; SUBSETS / 64];
        for (m, puzzle) in results {
            if puzzle {
                for d in 0..8 {
                    let img = index.apply(d, m) as usize;
                    bits[img / 64] |= 1 << (img % 64);
                }
            }
        }
        PuzzleTable { index, bits }
    }

    /// Built once per process and shared.
    pub fn global() -> &'static PuzzleTable {
        static TABLE: OnceLock<PuzzleTable> = OnceLock::new();
        TABLE.get_or_init(PuzzleTable::build)
    }

    pub fn index(&self) -> &EdgeIndex {
        &self.index
    }

    pub fn is_puzzle(&self, mask: u32) -> bool {
        let m = mask as usize;
        self.bits[m / 64] >> (m % 64) & 1 == 1
    }

    pub fn is_minimal(&self, mask: u32) -> bool {
        self.is_puzzle(mask)
            && (0..EDGES).all(|i| mask >> i & 1 == 0 || !self.is_puzzle(mask & !(1 << i)))
    }

    /// `counts[m]` = number of `m`-edge subsets that are puzzles.
    pub fn counts_by_size(&self) -> [u64; EDGES + 1] {
        let mut counts = [0u64; EDGES + 1];
        for m in 0..SUBSETS as u32 {
            if self.is_puzzle(m) {
                counts[m.count_ones() as usize] += 1;
            }
        }
        counts
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    /// Least mask of the dihedral placement class.
    pub edge_mask: u32,
    pub edge_count: usize,
    /// Canonical form of the adjacency graph (covered cells only).
    pub certificate: CanonicalForm,
    pub words: Vec<Word>,
    /// Number of edge subsets in the placement class.
    pub placements: usize,
}

impl CensusEntry {
    /// `mask edges certificate words`, e.g. `0x0f3a1 12 09... 1-2,2-3,...`.
    pub fn line(&self) -> String {
        let words: Vec<String> = self.words.iter().map(|w| w.to_string()).collect();
        format!(
            "0x{:05x} {} {} {}",
            self.edge_mask,
            self.edge_count,
            self.certificate.hex(),
            words.join(",")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub entries: Vec<CensusEntry>,
    /// Minimal edge subsets counted individually.
    pub minimal_subsets: usize,
    /// Classes under the symmetries of the square.
    pub placement_classes: usize,
    /// Classes under abstract graph isomorphism.
    pub isomorphism_classes: usize,
    pub min_edges: usize,
    pub max_edges: usize,
    /// Edge count -> number of placement classes with that many edges.
    pub histogram: BTreeMap<usize, usize>,
    /// Edge count -> number of (not necessarily minimal) puzzle subsets.
    pub puzzle_counts: Vec<u64>,
}

/// Every edge-minimal 3x3 puzzle of two-letter words.
pub fn minimal_census(n: usize) -> Result<CensusReport> {
    if n != 3 {
        return Err(Error::ResourceLimit(format!(
            "the minimal census enumerates 2^|E| edge subsets and is only run for n = 3, got {n}"
        )));
    }
    Ok(census_from_table(PuzzleTable::global()))
}

pub fn census_from_table(table: &PuzzleTable) -> CensusReport {
    let index = table.index();
    let minimal: Vec<u32> = (0..SUBSETS as u32)
        .into_par_iter()
        .with_min_len(1 << 12)
        .filter(|&m| table.is_minimal(m))
        .collect();
    let mut classes: BTreeMap<u32, usize> = BTreeMap::new();
    for &m in &minimal {
        *classes.entry(index.canonical(m)).or_default() += 1;
    }
    let entries: Vec<CensusEntry> = classes
        .par_iter()
        .map(|(&mask, &placements)| CensusEntry {
            edge_mask: mask,
            edge_count: mask.count_ones() as usize,
            certificate: canonical_form(&index.covered_graph(mask)).expect("at most 9 vertices"),
            words: index.words(mask),
            placements,
        })
        .collect();
    let certificates: BTreeSet<&CanonicalForm> = entries.iter().map(|e| &e.certificate).collect();
    let mut histogram = BTreeMap::new();
    for e in &entries {
        *histogram.entry(e.edge_count).or_default() += 1;
    }
    CensusReport {
        minimal_subsets: minimal.len(),
        placement_classes: entries.len(),
        isomorphism_classes: certificates.len(),
        min_edges: entries.iter().map(|e| e.edge_count).min().unwrap_or(0),
        max_edges: entries.iter().map(|e| e.edge_count).max().unwrap_or(0),
        histogram,
        puzzle_counts: table.counts_by_size().to_vec(),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_index_basics() {
        let idx = EdgeIndex::new();
        assert_eq!(idx.edges().len(), 20);
        assert_eq!(idx.edge_id(0, 1), Some(0));
        assert_eq!(idx.edge_id(0, 2), None);
        let full = (1u32 << 20) - 1;
        for d in 0..8 {
            assert_eq!(idx.apply(d, full), full);
        }
        // Single edges fall into four classes: corner-side, side-centre,
        // corner-centre and side-side.
        let classes: BTreeSet<u32> = (0..20).map(|i| idx.canonical(1 << i)).collect();
        assert_eq!(classes.len(), 4);
    }

    #[test]
    fn direct_subset_checks() {
        let idx = EdgeIndex::new();
        let host = SimpleGraph::king(3).unwrap();
        let full = (1u32 << 20) - 1;
        assert!(subset_is_puzzle(&idx, &host, full));
        assert!(!subset_is_puzzle(&idx, &host, 0));
        assert!(!subset_is_puzzle(&idx, &host, 1));
        // Dropping the two vertical edges under the top corners leaves the
        // corner-swap ambiguity.
        let e03 = idx.edge_id(0, 3).unwrap();
        let e25 = idx.edge_id(2, 5).unwrap();
        assert!(!subset_is_puzzle(&idx, &host, full & !(1 << e03) & !(1 << e25)));
        assert_eq!(minimal_census(4).unwrap_err(), Error::ResourceLimit(
            "the minimal census enumerates 2^|E| edge subsets and is only run for n = 3, got 4".into()
        ));
    }
}
