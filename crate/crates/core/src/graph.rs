//! Adjacency graphs of word lists and the subgraph machinery behind puzzle
//! uniqueness: monomorphism search, automorphism groups, canonical forms,
//! and the labeling-subgraph and unique-subgraph predicates.
//!
//! All graphs here have at most 64 vertices so that neighbourhoods fit in a
//! `u64` mask.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::ControlFlow;

use crate::board::Label;
use crate::error::{Error, Result};
use crate::paths::{build_king_graph, MAX_SIDE};
use crate::words::Word;

pub const MAX_VERTICES: usize = 64;
pub const MAX_AUTOMORPHISM_VERTICES: usize = 25;
pub const MAX_CANONICAL_VERTICES: usize = 12;
/// Automorphism groups larger than this are refused rather than listed.
pub const MAX_GROUP_SIZE: usize = 1 << 20;

/// An undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::ResourceLimit(format!(
                "graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n)?;
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidComparison(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::InvalidComparison(format!("self-loop at {a}")));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// The `n x n` king's graph, cells in row-major order.
    pub fn king(n: usize) -> Result<Self> {
        if n > MAX_SIDE {
            return Err(Error::ResourceLimit(format!(
                "king graph of side {n} exceeds {MAX_VERTICES} vertices"
            )));
        }
        SimpleGraph::from_edges(n * n, &build_king_graph(n)?)
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let mut m = self.adj[a] & !((1u64 << a) | ((1u64 << a) - 1));
            while m != 0 {
                let b = m.trailing_zeros() as usize;
                m &= m - 1;
                out.push((a, b));
            }
        }
        out
    }

    fn relabeled(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (a, b) in self.edges() {
            g.add_edge(perm[a], perm[b]);
        }
        g
    }
}

/// The letter-adjacency graph `G(P)` of a word list: its vertices are the
/// labels that occur, its edges the consecutive-letter pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AdjacencyGraph {
    vertices: BTreeSet<Label>,
    edges: BTreeSet<(Label, Label)>,
}

impl AdjacencyGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = Label>,
        edges: impl IntoIterator<Item = (Label, Label)>,
    ) -> Result<Self> {
        let mut g = AdjacencyGraph {
            vertices: vertices.into_iter().collect(),
            edges: BTreeSet::new(),
        };
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidWord(format!("self-loop on label {a}")));
            }
            g.vertices.insert(a);
            g.vertices.insert(b);
            g.edges.insert((a.min(b), a.max(b)));
        }
        Ok(g)
    }

    pub fn from_words<'a>(words: impl IntoIterator<Item = &'a Word>) -> Result<Self> {
        let mut g = AdjacencyGraph::default();
        for w in words {
            if w.has_repeated_label() {
                return Err(Error::InvalidWord(format!("{w} repeats a label")));
            }
            for &l in w.letters() {
                g.vertices.insert(l);
            }
            for pair in w.letters().windows(2) {
                let (a, b) = (pair[0], pair[1]);
                g.edges.insert((a.min(b), a.max(b)));
            }
        }
        Ok(g)
    }

    pub fn vertices(&self) -> &BTreeSet<Label> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(Label, Label)> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn without_edge(&self, e: (Label, Label)) -> AdjacencyGraph {
        let mut g = self.clone();
        g.edges.remove(&(e.0.min(e.1), e.0.max(e.1)));
        g
    }

    /// Index form: vertex `i` is the `i`-th smallest label.
    pub fn indexed(&self) -> Result<(SimpleGraph, Vec<Label>)> {
        let labels: Vec<Label> = self.vertices.iter().copied().collect();
        let index: HashMap<Label, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|(a, b)| (index[a], index[b]))
            .collect();
        Ok((SimpleGraph::from_edges(labels.len(), &edges)?, labels))
    }
}

/// An injective, adjacency-preserving map from graph labels to host vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomorphism {
    pub mapping: Vec<(Label, usize)>,
}

impl Monomorphism {
    pub fn image(&self, l: Label) -> Option<usize> {
        self.mapping.iter().find(|(a, _)| *a == l).map(|&(_, c)| c)
    }
}

/// Backtracking search for monomorphisms of `pattern` into `host`.
///
/// Pattern vertices are placed in a fixed order: the highest-degree vertex
/// first, then repeatedly the vertex with the most already-placed
/// neighbours, ties broken by degree and then by smallest index. Candidates
/// for a vertex are the common host neighbours of its placed neighbours.
pub struct Embedder<'a> {
    pattern: &'a SimpleGraph,
    host: &'a SimpleGraph,
    order: Vec<usize>,
    placed_neighbors: Vec<Vec<usize>>,
    host_degree: Vec<usize>,
    pattern_degree: Vec<usize>,
    budget: Option<u64>,
}

impl<'a> Embedder<'a> {
    pub fn new(pattern: &'a SimpleGraph, host: &'a SimpleGraph) -> Self {
        let m = pattern.vertex_count();
        let pattern_degree: Vec<usize> = (0..m).map(|v| pattern.degree(v)).collect();
        let mut order = Vec::with_capacity(m);
        let mut placed = 0u64;
        for _ in 0..m {
            let next = (0..m)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| {
                    let links = (pattern.neighbors(v) & placed).count_ones();
                    (links, pattern_degree[v], std::cmp::Reverse(v))
                })
                .expect("an unplaced vertex remains");
            order.push(next);
            placed |= 1 << next;
        }
        let mut position = vec![0; m];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let placed_neighbors = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                (0..m)
                    .filter(|&u| pattern.has_edge(u, v) && position[u] < i)
                    .collect()
            })
            .collect();
        Embedder {
            pattern,
            host,
            order,
            placed_neighbors,
            host_degree: (0..host.vertex_count()).map(|v| host.degree(v)).collect(),
            pattern_degree,
            budget: None,
        }
    }

    /// Caps the number of search nodes; exceeding it is a resource error.
    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.budget = budget;
        self
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Calls `f` with every monomorphism (`mapping[v]` = host vertex of
    /// pattern vertex `v`) until it returns `Break`. Returns whether the
    /// enumeration ran to completion.
    pub fn for_each<F>(&self, mut f: F) -> Result<bool>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let m = self.pattern.vertex_count();
        if m > self.host.vertex_count() {
            return Ok(true);
        }
        let mut mapping = vec![usize::MAX; m];
        let mut nodes = 0u64;
        let flow = self.step(0, &mut mapping, 0, &mut nodes, &mut f)?;
        Ok(flow.is_continue())
    }

    fn step<F>(
        &self,
        pos: usize,
        mapping: &mut [usize],
        used: u64,
        nodes: &mut u64,
        f: &mut F,
    ) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if pos == self.order.len() {
            return Ok(f(mapping));
        }
        *nodes += 1;
        if let Some(b) = self.budget {
            if *nodes > b {
                return Err(Error::ResourceLimit(format!(
                    "monomorphism search exceeded {b} nodes"
                )));
            }
        }
        let v = self.order[pos];
        let all = if self.host.vertex_count() == 64 {
            u64::MAX
        } else {
            (1u64 << self.host.vertex_count()) - 1
        };
        let mut cand = all & !used;
        for &u in &self.placed_neighbors[pos] {
            cand &= self.host.neighbors(mapping[u]);
        }
        while cand != 0 {
            let c = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if self.host_degree[c] < self.pattern_degree[v] {
                continue;
            }
            mapping[v] = c;
            if self.step(pos + 1, mapping, used | 1 << c, nodes, f)?.is_break() {
                mapping[v] = usize::MAX;
                return Ok(ControlFlow::Break(()));
            }
        }
        mapping[v] = usize::MAX;
        Ok(ControlFlow::Continue(()))
    }

    /// Number of monomorphisms, stopping once `limit` is reached.
    pub fn count(&self, limit: Option<u64>) -> Result<u64> {
        let mut count = 0u64;
        self.for_each(|_| {
            count += 1;
            if limit.is_some_and(|l| count >= l) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        Ok(count)
    }
}

/// Monomorphisms of `h` into `host`, truncated at `limit`. When fewer than
/// `limit` are returned the list is complete.
pub fn count_monomorphisms(
    h: &AdjacencyGraph,
    host: &SimpleGraph,
    limit: Option<usize>,
) -> Result<Vec<Monomorphism>> {
    let (pattern, labels) = h.indexed()?;
    let mut out = Vec::new();
    Embedder::new(&pattern, host).for_each(|mapping| {
        out.push(Monomorphism {
            mapping: labels.iter().copied().zip(mapping.iter().copied()).collect(),
        });
        if limit.is_some_and(|l| out.len() >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(out)
}

/// The full automorphism group of `g` as vertex permutations, identity
/// first.
pub fn automorphisms(g: &SimpleGraph) -> Result<Vec<Vec<usize>>> {
    if g.vertex_count() > MAX_AUTOMORPHISM_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "automorphism enumeration is limited to {MAX_AUTOMORPHISM_VERTICES} vertices, got {}",
            g.vertex_count()
        )));
    }
    // A bijective monomorphism of a graph into itself preserves the edge
    // count, so it is an automorphism.
    let mut out = Vec::new();
    let mut too_big = false;
    Embedder::new(g, g).for_each(|mapping| {
        out.push(mapping.to_vec());
        if out.len() > MAX_GROUP_SIZE {
            too_big = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    if too_big {
        return Err(Error::ResourceLimit(format!(
            "automorphism group has more than {MAX_GROUP_SIZE} elements"
        )));
    }
    out.sort();
    let id: Vec<usize> = (0..g.vertex_count()).collect();
    if let Some(pos) = out.iter().position(|p| *p == id) {
        let identity = out.remove(pos);
        out.insert(0, identity);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelingVerdict {
    Labeling,
    NotLabeling,
    /// The graph does not embed in the host at all.
    NoEmbedding,
}

impl LabelingVerdict {
    pub fn is_labeling(self) -> bool {
        self == LabelingVerdict::Labeling
    }
}

/// Labeling-subgraph test against a precomputed host automorphism group.
///
/// The first monomorphism found serves as the reference embedding. The
/// pattern is labeling iff every monomorphism equals some host automorphism
/// composed with the reference.
pub fn labeling_verdict(
    pattern: &SimpleGraph,
    host: &SimpleGraph,
    host_aut: &[Vec<usize>],
) -> Result<LabelingVerdict> {
    let mut reference: Option<Vec<usize>> = None;
    let mut verdict = LabelingVerdict::NoEmbedding;
    let mut induced = 0usize;
    Embedder::new(pattern, host).for_each(|mapping| {
        let Some(r) = reference.as_ref() else {
            reference = Some(mapping.to_vec());
            verdict = LabelingVerdict::Labeling;
            induced = 1;
            return ControlFlow::Continue(());
        };
        let extends = host_aut
            .iter()
            .any(|alpha| r.iter().zip(mapping).all(|(&a, &b)| alpha[a] == b));
        induced += 1;
        // More induced labelings than automorphisms cannot all extend.
        if !extends || induced > host_aut.len() {
            verdict = LabelingVerdict::NotLabeling;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(verdict)
}

pub fn is_labeling_subgraph(h: &AdjacencyGraph, host: &SimpleGraph) -> Result<LabelingVerdict> {
    let (pattern, _) = h.indexed()?;
    let aut = automorphisms(host)?;
    labeling_verdict(&pattern, host, &aut)
}

/// True iff every copy of `h` in `host` is the image of one fixed copy under
/// a host automorphism.
pub fn is_unique_subgraph(h: &AdjacencyGraph, host: &SimpleGraph) -> Result<bool> {
    let (pattern, _) = h.indexed()?;
    let aut = automorphisms(host)?;
    let edge_index: HashMap<(usize, usize), usize> = host
        .edges()
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let words = edge_index.len().div_ceil(64).max(1);
    let pattern_edges = pattern.edges();
    let image = |map: &dyn Fn(usize) -> usize| -> Vec<u64> {
        let mut bits = vec![0u64; words];
        for &(a, b) in &pattern_edges {
            let (x, y) = (map(a), map(b));
            let i = edge_index[&(x.min(y), x.max(y))];
            bits[i / 64] |= 1 << (i % 64);
        }
        bits
    };
    let mut orbit: Option<HashSet<Vec<u64>>> = None;
    let mut unique = false;
    Embedder::new(&pattern, host).for_each(|mapping| {
        match orbit.as_ref() {
            None => {
                let set = aut
                    .iter()
                    .map(|alpha| image(&|v| alpha[mapping[v]]))
                    .collect();
                orbit = Some(set);
                unique = true;
                ControlFlow::Continue(())
            }
            Some(set) => {
                if set.contains(&image(&|v| mapping[v])) {
                    ControlFlow::Continue(())
                } else {
                    unique = false;
                    ControlFlow::Break(())
                }
            }
        }
    })?;
    Ok(unique)
}

/// A certificate that is equal for two graphs exactly when they are
/// isomorphic: the vertex count followed by the packed lower triangle of
/// the lexicographically least adjacency matrix among colour-respecting
/// vertex orders.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

/// Stable colour refinement; colours are ranked so the result is invariant
/// under relabeling.
fn refine_colors(g: &SimpleGraph) -> Vec<usize> {
    let m = g.vertex_count();
    let mut colors: Vec<usize> = (0..m).map(|v| g.degree(v)).collect();
    let mut classes = colors.iter().collect::<BTreeSet<_>>().len();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..m)
            .map(|v| {
                let mut nb: Vec<usize> = (0..m).filter(|&u| g.has_edge(u, v)).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let ranked: Vec<&(usize, Vec<usize>)> = sigs.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| ranked.binary_search(&s).expect("signature is ranked"))
            .collect();
        let next_classes = ranked.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalForm> {
    let m = g.vertex_count();
    if m > MAX_CANONICAL_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "canonical forms are limited to {MAX_CANONICAL_VERTICES} vertices, got {m}"
        )));
    }
    let colors = refine_colors(g);
    let mut slot_color: Vec<usize> = colors.clone();
    slot_color.sort_unstable();

    struct Search<'g> {
        g: &'g SimpleGraph,
        colors: Vec<usize>,
        slot_color: Vec<usize>,
        placed: Vec<usize>,
        rows: Vec<u64>,
        best: Option<Vec<u64>>,
    }

    impl Search<'_> {
        fn row_of(&self, v: usize) -> u64 {
            self.placed
                .iter()
                .enumerate()
                .filter(|&(_, &u)| self.g.has_edge(u, v))
                .fold(0u64, |acc, (j, _)| acc | 1 << j)
        }

        fn run(&mut self, used: u64) {
            let pos = self.placed.len();
            let m = self.g.vertex_count();
            if pos == m {
                if self.best.as_ref().map_or(true, |b| self.rows < *b) {
                    self.best = Some(self.rows.clone());
                }
                return;
            }
            let want = self.slot_color[pos];
            let cands: Vec<(usize, u64)> = (0..m)
                .filter(|&v| used >> v & 1 == 0 && self.colors[v] == want)
                .map(|v| (v, self.row_of(v)))
                .collect();
            let Some(min_row) = cands.iter().map(|&(_, r)| r).min() else {
                return;
            };
            if let Some(best) = &self.best {
                let mut prefix = self.rows.clone();
                prefix.push(min_row);
                if prefix.as_slice() > &best[..=pos] {
                    return;
                }
            }
            let mut tried: Vec<usize> = Vec::new();
            for (v, row) in cands {
                if row != min_row {
                    continue;
                }
                // Twins differ by a transposition that is an automorphism
                // fixing everything placed so far.
                let twin = tried.iter().any(|&u| {
                    self.g.neighbors(u) & !(1 << v) == self.g.neighbors(v) & !(1 << u)
                });
                if twin {
                    continue;
                }
                tried.push(v);
                self.placed.push(v);
                self.rows.push(row);
                self.run(used | 1 << v);
                self.rows.pop();
                self.placed.pop();
            }
        }
    }

    let mut search = Search {
        g,
        colors,
        slot_color,
        placed: Vec::with_capacity(m),
        rows: Vec::with_capacity(m),
        best: None,
    };
    search.run(0);
    let rows = search.best.unwrap_or_default();

    let mut bytes = vec![m as u8];
    let mut acc = 0u8;
    let mut nbits = 0;
    for (i, row) in rows.iter().enumerate() {
        for j in 0..i {
            acc = acc << 1 | (row >> j & 1) as u8;
            nbits += 1;
            if nbits == 8 {
                bytes.push(acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(acc << (8 - nbits));
    }
    Ok(CanonicalForm(bytes))
}

/// Isomorphism test through canonical forms.
pub fn isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Applies a vertex permutation; used by tests and the census.
pub fn permute_graph(g: &SimpleGraph, perm: &[usize]) -> SimpleGraph {
    g.relabeled(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::standard_board;

    fn words(list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    /// Label graph of the standard 3x3 board, as a graph on labels.
    fn k3_labels() -> AdjacencyGraph {
        let s = standard_board(3).unwrap();
        AdjacencyGraph::new(
            s.cells().iter().copied(),
            build_king_graph(3)
                .unwrap()
                .into_iter()
                .map(|(a, b)| (s.get(a), s.get(b))),
        )
        .unwrap()
    }

    pub(crate) fn cycle_with_pendant() -> AdjacencyGraph {
        AdjacencyGraph::from_words(&words(&["9-1-2", "2-3-4-5", "5-6-7-9", "7-9-8"])).unwrap()
    }

    pub(crate) fn corner_swap_graph() -> AdjacencyGraph {
        let pairs = [
            (1, 2), (3, 2), (4, 9), (8, 9), (5, 6), (6, 7), (1, 9), (2, 9), (3, 9),
            (5, 9), (6, 9), (7, 9), (2, 4), (2, 8), (4, 6), (6, 8), (8, 7), (4, 5),
        ];
        AdjacencyGraph::new([], pairs.iter().map(|&(a, b)| (Label(a), Label(b)))).unwrap()
    }

    #[test]
    fn adjacency_graph_of_cycle_with_pendant() {
        let g = cycle_with_pendant();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 9);
        let expect: BTreeSet<(Label, Label)> = [(1, 9), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 9), (8, 9)]
            .iter()
            .map(|&(a, b)| (Label(a), Label(b)))
            .collect();
        assert_eq!(g.edges(), &expect);
        let single = AdjacencyGraph::from_words(&words(&["1-2"])).unwrap();
        assert_eq!((single.vertex_count(), single.edge_count()), (2, 1));
        assert!(AdjacencyGraph::from_words(&words(&["1-2-1"])).is_err());
    }

    #[test]
    fn adjacency_graph_is_order_independent() {
        let mut w = words(&["9-1-2", "2-3-4-5", "5-6-7-9", "7-9-8", "2-1"]);
        let a = AdjacencyGraph::from_words(&w).unwrap();
        w.reverse();
        assert_eq!(AdjacencyGraph::from_words(&w).unwrap(), a);
        assert_eq!(a, cycle_with_pendant());
    }

    #[test]
    fn monomorphism_examples() {
        let k3 = SimpleGraph::king(3).unwrap();
        let edge = AdjacencyGraph::from_words(&words(&["1-2"])).unwrap();
        assert_eq!(count_monomorphisms(&edge, &k3, None).unwrap().len(), 40);
        assert_eq!(count_monomorphisms(&edge, &k3, Some(7)).unwrap().len(), 7);
        assert!(count_monomorphisms(&cycle_with_pendant(), &k3, None).unwrap().len() > 8);
        assert_eq!(count_monomorphisms(&k3_labels(), &k3, None).unwrap().len(), 8);
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(automorphisms(&SimpleGraph::king(3).unwrap()).unwrap().len(), 8);
        assert_eq!(automorphisms(&SimpleGraph::king(4).unwrap()).unwrap().len(), 8);
        assert_eq!(automorphisms(&SimpleGraph::king(5).unwrap()).unwrap().len(), 8);
        assert_eq!(automorphisms(&SimpleGraph::king(2).unwrap()).unwrap().len(), 24);
        let k4 = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(automorphisms(&k4).unwrap().len(), 24);
        assert!(matches!(
            automorphisms(&SimpleGraph::king(6).unwrap()),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn u_automorphisms_swap_top_corners() {
        let (g, labels) = corner_swap_graph().indexed().unwrap();
        let aut = automorphisms(&g).unwrap();
        let i1 = labels.iter().position(|&l| l == Label(1)).unwrap();
        let i3 = labels.iter().position(|&l| l == Label(3)).unwrap();
        let swap = aut.iter().any(|p| {
            p[i1] == i3 && p[i3] == i1 && (0..9).all(|v| v == i1 || v == i3 || p[v] == v)
        });
        assert!(swap);
        assert_eq!(aut.len(), 4);
    }

    #[test]
    fn labeling_examples() {
        let k3 = SimpleGraph::king(3).unwrap();
        assert_eq!(is_labeling_subgraph(&cycle_with_pendant(), &k3).unwrap(), LabelingVerdict::NotLabeling);
        assert_eq!(is_labeling_subgraph(&corner_swap_graph(), &k3).unwrap(), LabelingVerdict::NotLabeling);
        assert_eq!(is_labeling_subgraph(&k3_labels(), &k3).unwrap(), LabelingVerdict::Labeling);
        let k5 = AdjacencyGraph::new(
            [],
            (1..=5u16).flat_map(|a| (a + 1..=5).map(move |b| (Label(a), Label(b)))),
        )
        .unwrap();
        assert_eq!(is_labeling_subgraph(&k5, &k3).unwrap(), LabelingVerdict::NoEmbedding);
    }

    #[test]
    fn unique_subgraph_examples() {
        let k3 = SimpleGraph::king(3).unwrap();
        assert!(is_unique_subgraph(&corner_swap_graph(), &k3).unwrap());
        let edge = AdjacencyGraph::from_words(&words(&["1-2"])).unwrap();
        assert!(!is_unique_subgraph(&edge, &k3).unwrap());
        assert!(is_unique_subgraph(&k3_labels(), &k3).unwrap());
    }

    #[test]
    fn canonical_form_examples() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap();
        let h = permute_graph(&g, &[3, 0, 4, 1, 2]);
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());

        let path = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&path).unwrap(), canonical_form(&star).unwrap());

        // The same shape laid out differently: border cycle plus the left
        // cell hanging off the centre.
        let redrawn = AdjacencyGraph::new(
            [],
            [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1), (8, 9)]
                .iter()
                .map(|&(a, b)| (Label(a), Label(b))),
        )
        .unwrap();
        let a = canonical_form(&cycle_with_pendant().indexed().unwrap().0).unwrap();
        let b = canonical_form(&redrawn.indexed().unwrap().0).unwrap();
        assert_eq!(a, b);
        assert!(matches!(
            canonical_form(&SimpleGraph::empty(13).unwrap()),
            Err(Error::ResourceLimit(_))
        ));
        // Highly symmetric graphs finish through twin pruning.
        let empty12 = SimpleGraph::empty(12).unwrap();
        assert_eq!(canonical_form(&empty12).unwrap().0[0], 12);
    }
}
