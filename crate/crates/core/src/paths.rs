//! The king's graph on an `n x n` grid and its directed simple paths.

use crate::error::{Error, Result};

/// Largest side whose king's graph fits the 64-bit adjacency masks.
pub const MAX_SIDE: usize = 8;

/// Unordered king-adjacent cell pairs `(a, b)` with `a < b`, sorted.
pub fn build_king_graph(n: usize) -> Result<Vec<(usize, usize)>> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let mut edges = Vec::new();
    for a in 0..n * n {
        let (ra, ca) = (a / n, a % n);
        for b in a + 1..n * n {
            let (rb, cb) = (b / n, b % n);
            if ra.abs_diff(rb) <= 1 && ca.abs_diff(cb) <= 1 {
                edges.push((a, b));
            }
        }
    }
    Ok(edges)
}

/// Neighbour bitmasks of the king's graph. Panics if `n > MAX_SIDE`.
pub fn king_adjacency(n: usize) -> Vec<u64> {
    assert!(n <= MAX_SIDE, "king graph of side {n} exceeds 64 cells");
    let mut adj = vec![0u64; n * n];
    for (a, b) in build_king_graph(n.max(2)).expect("n >= 2") {
        if a < n * n && b < n * n {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    adj
}

/// All directed simple paths of the king's graph with 2..=`max_len` cells,
/// grouped by length and stored flat.
#[derive(Debug, Clone)]
pub struct PathCatalog {
    n: usize,
    max_len: usize,
    // by_len[k] holds the paths with k cells, k cells per path
    by_len: Vec<Vec<u8>>,
}

impl PathCatalog {
    pub fn new(n: usize, max_len: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        if n > MAX_SIDE {
            return Err(Error::ResourceLimit(format!(
                "paths on a {n}x{n} board are not supported (max side {MAX_SIDE})"
            )));
        }
        let max_len = max_len.min(n * n);
        let adj = king_adjacency(n);
        let mut by_len = vec![Vec::new(); max_len + 1];
        let mut path = Vec::with_capacity(max_len);
        for start in 0..n * n {
            path.push(start as u8);
            extend(&adj, &mut path, 1u64 << start, max_len, &mut by_len);
            path.pop();
        }
        Ok(PathCatalog { n, max_len, by_len })
    }

    /// The complete catalog, every length up to `n*n`. Only sensible for
    /// `n <= 3`; larger boards have astronomically many long paths.
    pub fn full(n: usize) -> Result<Self> {
        PathCatalog::new(n, n * n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn count(&self, k: usize) -> usize {
        if k < 2 || k > self.max_len {
            0
        } else {
            self.by_len[k].len() / k
        }
    }

    /// Paths with exactly `k` cells.
    pub fn paths(&self, k: usize) -> std::slice::ChunksExact<'_, u8> {
        if k < 2 || k > self.max_len {
            return [].chunks_exact(1);
        }
        self.by_len[k].chunks_exact(k)
    }
}

fn extend(adj: &[u64], path: &mut Vec<u8>, used: u64, max_len: usize, out: &mut [Vec<u8>]) {
    let len = path.len();
    if len >= 2 {
        out[len].extend_from_slice(path);
    }
    if len == max_len {
        return;
    }
    let last = *path.last().expect("nonempty path") as usize;
    let mut next = adj[last] & !used;
    while next != 0 {
        let c = next.trailing_zeros() as usize;
        next &= next - 1;
        path.push(c as u8);
        extend(adj, path, used | 1 << c, max_len, out);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn edge_counts() {
        assert_eq!(build_king_graph(2).unwrap().len(), 6);
        assert_eq!(build_king_graph(3).unwrap().len(), 20);
        assert_eq!(build_king_graph(4).unwrap().len(), 42);
        assert!(matches!(build_king_graph(1), Err(Error::InvalidDimension(1))));
        for n in 2..=8 {
            let direct = king_adjacency(n)
                .iter()
                .map(|m| m.count_ones() as usize)
                .sum::<usize>()
                / 2;
            assert_eq!(direct, 2 * (n - 1) * (2 * n - 1));
            assert_eq!(build_king_graph(n).unwrap().len(), direct);
        }
    }

    #[test]
    fn three_by_three_path_counts() {
        let cat = PathCatalog::full(3).unwrap();
        assert_eq!(cat.count(2), 40);
        assert_eq!(cat.count(3), 160);
        assert_eq!(cat.count(4), 496);
        assert_eq!(cat.count(1), 0);
        assert_eq!(cat.count(10), 0);
    }

    #[test]
    fn paths_are_simple_and_closed_under_reversal() {
        let cat = PathCatalog::full(3).unwrap();
        let adj = king_adjacency(3);
        for k in 2..=9 {
            let set: HashSet<Vec<u8>> = cat.paths(k).map(|p| p.to_vec()).collect();
            assert_eq!(set.len(), cat.count(k));
            for p in &set {
                let distinct: HashSet<u8> = p.iter().copied().collect();
                assert_eq!(distinct.len(), k);
                assert!(p.windows(2).all(|w| adj[w[0] as usize] >> w[1] & 1 == 1));
                let rev: Vec<u8> = p.iter().rev().copied().collect();
                assert!(set.contains(&rev));
            }
        }
    }
}
