//! Boards, labels and label permutations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A board symbol. Numeric boards use `1..=n*n`; letter boards map their
/// sorted alphabet onto `1..` (see [`crate::io::Alphabet`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub u16);

impl Label {
    pub fn get(self) -> u16 {
        self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u16> for Label {
    fn from(v: u16) -> Self {
        Label(v)
    }
}

/// A grid position. Ids are row-major from the top-left corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub id: usize,
}

impl Cell {
    pub fn new(n: usize, row: usize, col: usize) -> Self {
        debug_assert!(row < n && col < n);
        Cell {
            row,
            col,
            id: row * n + col,
        }
    }

    pub fn from_id(n: usize, id: usize) -> Self {
        Cell {
            row: id / n,
            col: id % n,
            id,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Board {
    n: usize,
    cells: Vec<Label>,
}

impl Board {
    pub fn new(n: usize, cells: Vec<Label>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        if cells.len() != n * n {
            return Err(Error::InvalidBoard(format!(
                "expected {} cells for a {n}x{n} board, got {}",
                n * n,
                cells.len()
            )));
        }
        Ok(Board { n, cells })
    }

    pub fn from_values(n: usize, values: &[u16]) -> Result<Self> {
        Board::new(n, values.iter().copied().map(Label).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Label] {
        &self.cells
    }

    pub fn get(&self, cell: usize) -> Label {
        self.cells[cell]
    }

    pub fn at(&self, row: usize, col: usize) -> Label {
        self.cells[row * self.n + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Label]> {
        self.cells.chunks(self.n)
    }

    /// Letter multiplicities sorted nonincreasing; sums to `n*n`.
    pub fn type_lambda(&self) -> Vec<usize> {
        let mut counts: BTreeMap<Label, usize> = BTreeMap::new();
        for &l in &self.cells {
            *counts.entry(l).or_default() += 1;
        }
        let mut parts: Vec<usize> = counts.into_values().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    pub fn has_distinct_labels(&self) -> bool {
        let set: BTreeSet<Label> = self.cells.iter().copied().collect();
        set.len() == self.cells.len()
    }

    /// Cell of each label. Only meaningful for distinct-label boards.
    pub fn positions(&self) -> BTreeMap<Label, usize> {
        self.cells
            .iter()
            .enumerate()
            .map(|(c, &l)| (l, c))
            .collect()
    }

    /// Relabels every cell through `g`; positions are unchanged.
    pub fn permute(&self, g: &Permutation) -> Board {
        Board {
            n: self.n,
            cells: self.cells.iter().map(|&l| g.apply(l)).collect(),
        }
    }

    /// Moves the label of cell `c` to cell `map[c]`.
    pub fn move_cells(&self, map: &[usize]) -> Board {
        let mut cells = self.cells.clone();
        for (c, &l) in self.cells.iter().enumerate() {
            cells[map[c]] = l;
        }
        Board { n: self.n, cells }
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// The standard board: labels `1..=n*n` filled along a clockwise spiral from
/// the top-left corner. For `n = 3` this is `1 2 3 / 8 9 4 / 7 6 5`.
pub fn standard_board(n: usize) -> Result<Board> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let mut cells = vec![Label(0); n * n];
    let (mut top, mut left) = (0isize, 0isize);
    let (mut bottom, mut right) = (n as isize - 1, n as isize - 1);
    let mut next = 1u16;
    let mut put = |r: isize, c: isize, cells: &mut Vec<Label>| {
        cells[r as usize * n + c as usize] = Label(next);
        next += 1;
    };
    while top <= bottom && left <= right {
        for c in left..=right {
            put(top, c, &mut cells);
        }
        for r in top + 1..=bottom {
            put(r, right, &mut cells);
        }
        if top < bottom {
            for c in (left..right).rev() {
                put(bottom, c, &mut cells);
            }
        }
        if left < right {
            for r in (top + 1..bottom).rev() {
                put(r, left, &mut cells);
            }
        }
        top += 1;
        left += 1;
        bottom -= 1;
        right -= 1;
    }
    Board::new(n, cells)
}

/// A bijection on labels. Labels outside the explicit domain are fixed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Permutation {
    map: BTreeMap<Label, Label>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation::default()
    }

    /// Builds a permutation from an explicit label map, rejecting anything
    /// that is not a bijection of its domain onto itself.
    pub fn from_map(pairs: impl IntoIterator<Item = (Label, Label)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (a, b) in pairs {
            if map.insert(a, b).is_some() {
                return Err(Error::InvalidPermutation(format!("label {a} mapped twice")));
            }
        }
        let domain: BTreeSet<Label> = map.keys().copied().collect();
        let image: BTreeSet<Label> = map.values().copied().collect();
        if image.len() != map.len() {
            return Err(Error::InvalidPermutation("map is not injective".into()));
        }
        if domain != image {
            return Err(Error::InvalidPermutation(
                "image differs from domain, not a bijection on the alphabet".into(),
            ));
        }
        map.retain(|a, b| a != b);
        Ok(Permutation { map })
    }

    pub fn from_cycles(cycles: &[Vec<u16>]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut pairs = Vec::new();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if !seen.insert(a) {
                    return Err(Error::InvalidPermutation(format!(
                        "label {a} appears in more than one cycle position"
                    )));
                }
                let b = cycle[(i + 1) % cycle.len()];
                pairs.push((Label(a), Label(b)));
            }
        }
        Permutation::from_map(pairs)
    }

    pub fn transposition(a: Label, b: Label) -> Self {
        let mut map = BTreeMap::new();
        if a != b {
            map.insert(a, b);
            map.insert(b, a);
        }
        Permutation { map }
    }

    pub fn apply(&self, l: Label) -> Label {
        self.map.get(&l).copied().unwrap_or(l)
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Permutation {
            map: self.map.iter().map(|(&a, &b)| (b, a)).collect(),
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Cycle notation, e.g. `(1 2)(3 5 9)`; `()` or an empty string is the
    /// identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {s:?}")))?;
            let body = &open[..close];
            let cycle = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u16>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad label {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(&cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.map.is_empty() {
            return write!(f, "()");
        }
        let mut done = BTreeSet::new();
        for &start in self.map.keys() {
            if done.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            done.insert(start);
            let mut cur = self.apply(start);
            while cur != start {
                done.insert(cur);
                cycle.push(cur);
                cur = self.apply(cur);
            }
            let body: Vec<String> = cycle.iter().map(|l| l.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_three_by_three() {
        let s = standard_board(3).unwrap();
        let v: Vec<u16> = s.cells().iter().map(|l| l.0).collect();
        assert_eq!(v, [1, 2, 3, 8, 9, 4, 7, 6, 5]);
    }

    #[test]
    fn standard_four_by_four_spiral() {
        let s = standard_board(4).unwrap();
        let v: Vec<u16> = s.cells().iter().map(|l| l.0).collect();
        assert_eq!(v, [1, 2, 3, 4, 12, 13, 14, 5, 11, 16, 15, 6, 10, 9, 8, 7]);
        assert!(s.has_distinct_labels());
        assert!(matches!(standard_board(1), Err(Error::InvalidDimension(1))));
    }

    #[test]
    fn permutation_boards() {
        let s = standard_board(3).unwrap();
        let g: Permutation = "(1 2)(3 5 9)".parse().unwrap();
        let b = s.permute(&g);
        assert_eq!(b, Board::from_values(3, &[2, 1, 5, 8, 3, 4, 7, 6, 9]).unwrap());

        let g: Permutation = "(1 3)".parse().unwrap();
        assert_eq!(
            s.permute(&g),
            Board::from_values(3, &[3, 2, 1, 8, 9, 4, 7, 6, 5]).unwrap()
        );
        assert_eq!(s.permute(&Permutation::identity()), s);
    }

    #[test]
    fn permutation_validation() {
        assert!("(1 2)(2 3)".parse::<Permutation>().is_err());
        assert!(Permutation::from_map([(Label(1), Label(2)), (Label(2), Label(2))]).is_err());
        assert!(Permutation::from_map([(Label(1), Label(5))]).is_err());
        let g: Permutation = "(1 2 3)".parse().unwrap();
        assert_eq!(g.to_string(), "(1 2 3)");
        assert_eq!(g.inverse().to_string(), "(1 3 2)");
        assert!("()".parse::<Permutation>().unwrap().is_identity());
    }

    #[test]
    fn type_lambda() {
        let b = Board::from_values(3, &[1, 1, 1, 1, 2, 1, 1, 1, 1]).unwrap();
        assert_eq!(b.type_lambda(), vec![8, 1]);
        assert!(!b.has_distinct_labels());
        assert_eq!(standard_board(3).unwrap().type_lambda(), vec![1; 9]);
        assert!(Board::from_values(3, &[1, 2, 3]).is_err());
    }
}
