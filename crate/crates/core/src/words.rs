//! Words read along king's-graph paths, word sets and board equivalence.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::board::{Board, Label};
use crate::error::{Error, Result};
use crate::paths::{king_adjacency, PathCatalog, MAX_SIDE};

/// A directed label sequence; `w` and its reverse are different words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Label>);

impl Word {
    pub const MIN_LEN: usize = 2;

    pub fn new(letters: Vec<Label>) -> Result<Self> {
        if letters.len() < Self::MIN_LEN {
            return Err(Error::InvalidWord(format!(
                "words need at least {} letters, got {}",
                Self::MIN_LEN,
                letters.len()
            )));
        }
        Ok(Word(letters))
    }

    pub fn from_values(values: &[u16]) -> Result<Self> {
        Word::new(values.iter().copied().map(Label).collect())
    }

    pub fn letters(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn has_repeated_label(&self) -> bool {
        let set: BTreeSet<Label> = self.0.iter().copied().collect();
        set.len() != self.0.len()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join("-"))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Hyphen-separated integers, e.g. `9-1-2`.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .split('-')
            .map(|t| {
                t.trim()
                    .parse::<u16>()
                    .ok()
                    .filter(|&v| v > 0)
                    .map(Label)
                    .ok_or_else(|| Error::InvalidWord(format!("bad label {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSet {
    pub words: BTreeSet<Word>,
    pub k_min: usize,
    pub k_max: usize,
}

impl WordSet {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn of_length(&self, k: usize) -> impl Iterator<Item = &Word> {
        self.words.iter().filter(move |w| w.len() == k)
    }
}

/// A cell path on `b` spelling `w`, if one exists. Searches from every
/// starting cell, so repeated labels are handled.
pub fn find_word_path(b: &Board, w: &Word) -> Option<Vec<usize>> {
    let n = b.n();
    if n > MAX_SIDE || w.is_empty() {
        return None;
    }
    let adj = king_adjacency(n);
    let letters = w.letters();
    let mut path = Vec::with_capacity(letters.len());
    for start in 0..n * n {
        if b.get(start) != letters[0] {
            continue;
        }
        path.push(start);
        if spell(b, &adj, letters, &mut path, 1u64 << start) {
            return Some(path);
        }
        path.pop();
    }
    None
}

fn spell(b: &Board, adj: &[u64], letters: &[Label], path: &mut Vec<usize>, used: u64) -> bool {
    let i = path.len();
    if i == letters.len() {
        return true;
    }
    let last = path[i - 1];
    let mut next = adj[last] & !used;
    while next != 0 {
        let c = next.trailing_zeros() as usize;
        next &= next - 1;
        if b.get(c) == letters[i] {
            path.push(c);
            if spell(b, adj, letters, path, used | 1 << c) {
                return true;
            }
            path.pop();
        }
    }
    false
}

pub fn word_on_board(b: &Board, w: &Word) -> bool {
    find_word_path(b, w).is_some()
}

fn check_range(b: &Board, k_min: usize, k_max: usize) -> Result<()> {
    let cells = b.n() * b.n();
    if k_min < 2 || k_min > k_max || k_max > cells {
        return Err(Error::Precondition(format!(
            "word lengths must satisfy 2 <= {k_min} <= {k_max} <= {cells}"
        )));
    }
    Ok(())
}

/// Label sequences of every directed simple path with `k_min..=k_max` cells.
pub fn word_set(b: &Board, k_min: usize, k_max: usize) -> Result<WordSet> {
    check_range(b, k_min, k_max)?;
    let catalog = PathCatalog::new(b.n(), k_max)?;
    Ok(word_set_from_catalog(b, &catalog, k_min, k_max))
}

pub fn word_set_from_catalog(b: &Board, catalog: &PathCatalog, k_min: usize, k_max: usize) -> WordSet {
    let mut words = BTreeSet::new();
    for k in k_min..=k_max.min(catalog.max_len()) {
        for p in catalog.paths(k) {
            words.insert(Word(p.iter().map(|&c| b.get(c as usize)).collect()));
        }
    }
    WordSet {
        words,
        k_min,
        k_max,
    }
}

/// Word-set equality over lengths `2..=k_max`, compared one length at a
/// time so that most inequivalent pairs are rejected on short words.
/// With `k_max = n*n` this is full board equivalence.
pub fn boards_equivalent(b1: &Board, b2: &Board, k_max: usize) -> Result<bool> {
    if b1.n() != b2.n() {
        return Err(Error::InvalidComparison(format!(
            "boards have different sides {} and {}",
            b1.n(),
            b2.n()
        )));
    }
    check_range(b1, 2, k_max)?;
    let catalog = PathCatalog::new(b1.n(), k_max)?;
    for k in 2..=k_max {
        let a = word_set_from_catalog(b1, &catalog, k, k);
        let b = word_set_from_catalog(b2, &catalog, k, k);
        if a.words != b.words {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{standard_board, Permutation};
    use crate::dihedral::DihedralElement;
    use crate::io::{parse_board, Alphabet};

    fn momath() -> (Board, Alphabet) {
        parse_board("4\ng o m c\nm t i b\nh a n s\nu e a w\n").unwrap()
    }

    #[test]
    fn momath_board_words() {
        let (b, alpha) = momath();
        let w = |s: &str| alpha.encode_word(s);
        assert!(word_on_board(&b, &w("momath").unwrap()));
        // "bibs" needs two b's; "hug" needs u next to g.
        assert!(w("bibs").map_or(true, |w| !word_on_board(&b, &w)));
        assert!(w("hug").map_or(true, |w| !word_on_board(&b, &w)));
        let path = find_word_path(&b, &w("momath").unwrap()).unwrap();
        assert_eq!(path, vec![2, 1, 4, 9, 5, 8]);
    }

    #[test]
    fn standard_word_counts() {
        let s = standard_board(3).unwrap();
        assert_eq!(word_set(&s, 3, 3).unwrap().len(), 160);
        assert_eq!(word_set(&s, 4, 4).unwrap().len(), 496);
        assert_eq!(word_set(&s, 2, 2).unwrap().len(), 40);
        assert!(word_set(&s, 1, 3).is_err());
        assert!(word_set(&s, 4, 3).is_err());
        assert!(word_set(&s, 2, 10).is_err());
    }

    #[test]
    fn eight_one_boards_share_words() {
        let reference = {
            let mut v = [1u16; 9];
            v[0] = 2;
            word_set(&Board::from_values(3, &v).unwrap(), 2, 9).unwrap()
        };
        for pos in 0..9 {
            let mut v = [1u16; 9];
            v[pos] = 2;
            let b = Board::from_values(3, &v).unwrap();
            assert_eq!(word_set(&b, 2, 9).unwrap(), reference);
        }
    }

    #[test]
    fn equivalence_examples() {
        let s = standard_board(3).unwrap();
        let rot = DihedralElement::Rot90.apply(&s);
        assert!(boards_equivalent(&s, &rot, 9).unwrap());
        let swapped = s.permute(&"(1 3)".parse::<Permutation>().unwrap());
        assert!(!boards_equivalent(&s, &swapped, 9).unwrap());
        let a = Board::from_values(3, &[2, 1, 1, 1, 1, 1, 1, 1, 1]).unwrap();
        let c = Board::from_values(3, &[1, 1, 1, 1, 2, 1, 1, 1, 1]).unwrap();
        assert!(boards_equivalent(&a, &c, 9).unwrap());
        let four = standard_board(4).unwrap();
        assert!(matches!(
            boards_equivalent(&s, &four, 4),
            Err(Error::InvalidComparison(_))
        ));
    }

    #[test]
    fn word_parsing() {
        let w: Word = "9-1-2".parse().unwrap();
        assert_eq!(w.to_string(), "9-1-2");
        assert_eq!(w.reversed().to_string(), "2-1-9");
        assert!("9".parse::<Word>().is_err());
        assert!("9-x".parse::<Word>().is_err());
        assert!("9-0".parse::<Word>().is_err());
        assert!("1-2-1".parse::<Word>().unwrap().has_repeated_label());
    }
}
