//! The eight symmetries of the square acting on board cells.

use std::collections::BTreeSet;

use crate::board::Board;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DihedralElement {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    /// Mirror through the vertical axis (left-right swap).
    FlipHorizontal,
    /// Mirror through the horizontal axis (top-bottom swap).
    FlipVertical,
    Transpose,
    AntiTranspose,
}

impl DihedralElement {
    pub const ALL: [DihedralElement; 8] = [
        DihedralElement::Identity,
        DihedralElement::Rot90,
        DihedralElement::Rot180,
        DihedralElement::Rot270,
        DihedralElement::FlipHorizontal,
        DihedralElement::FlipVertical,
        DihedralElement::Transpose,
        DihedralElement::AntiTranspose,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DihedralElement::Identity => "id",
            DihedralElement::Rot90 => "r90",
            DihedralElement::Rot180 => "r180",
            DihedralElement::Rot270 => "r270",
            DihedralElement::FlipHorizontal => "flip-h",
            DihedralElement::FlipVertical => "flip-v",
            DihedralElement::Transpose => "transpose",
            DihedralElement::AntiTranspose => "anti-transpose",
        }
    }

    /// Image of `(row, col)` on an `n x n` grid. Rotations are clockwise.
    pub fn apply_rc(self, n: usize, r: usize, c: usize) -> (usize, usize) {
        let m = n - 1;
        match self {
            DihedralElement::Identity => (r, c),
            DihedralElement::Rot90 => (c, m - r),
            DihedralElement::Rot180 => (m - r, m - c),
            DihedralElement::Rot270 => (m - c, r),
            DihedralElement::FlipHorizontal => (r, m - c),
            DihedralElement::FlipVertical => (m - r, c),
            DihedralElement::Transpose => (c, r),
            DihedralElement::AntiTranspose => (m - c, m - r),
        }
    }

    /// `cell_map[c]` is the cell that `c` is sent to.
    pub fn cell_map(self, n: usize) -> Vec<usize> {
        (0..n * n)
            .map(|id| {
                let (r, c) = self.apply_rc(n, id / n, id % n);
                r * n + c
            })
            .collect()
    }

    /// `self` after `other`: first apply `other`, then `self`.
    pub fn compose(self, other: DihedralElement) -> DihedralElement {
        // Three is the smallest side on which all eight maps differ and
        // the multiplication table does not depend on n.
        let a = self.cell_map(3);
        let b = other.cell_map(3);
        let ab: Vec<usize> = b.iter().map(|&x| a[x]).collect();
        DihedralElement::ALL
            .into_iter()
            .find(|e| e.cell_map(3) == ab)
            .expect("D4 is closed under composition")
    }

    pub fn inverse(self) -> DihedralElement {
        DihedralElement::ALL
            .into_iter()
            .find(|e| e.compose(self) == DihedralElement::Identity)
            .expect("every element of D4 has an inverse")
    }

    pub fn apply(self, b: &Board) -> Board {
        b.move_cells(&self.cell_map(b.n()))
    }
}

/// All eight cell maps for side `n`, identity first.
pub fn cell_maps(n: usize) -> Vec<Vec<usize>> {
    DihedralElement::ALL.iter().map(|e| e.cell_map(n)).collect()
}

pub fn dihedral_orbit(b: &Board) -> BTreeSet<Board> {
    DihedralElement::ALL.iter().map(|e| e.apply(b)).collect()
}

/// Lexicographically least board in the orbit of `b`.
pub fn canonical_board(b: &Board) -> Board {
    DihedralElement::ALL
        .iter()
        .map(|e| e.apply(b))
        .min()
        .expect("orbit is nonempty")
}

/// Canonical representative of a grid under a group given as cell maps.
pub(crate) fn canonical_grid<T: Ord + Copy>(grid: &[T], maps: &[Vec<usize>]) -> Vec<T> {
    let mut best: Option<Vec<T>> = None;
    let mut img = grid.to_vec();
    for map in maps {
        for (c, &v) in grid.iter().enumerate() {
            img[map[c]] = v;
        }
        if best.as_ref().map_or(true, |b| img < *b) {
            best = Some(img.clone());
        }
    }
    best.unwrap_or_else(|| grid.to_vec())
}
