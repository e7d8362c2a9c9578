//! Boards with repeated letters.
//!
//! A board of type `λ = (λ_1, ..., λ_m)` uses label `i` exactly `λ_i`
//! times. Two boards are equivalent when they have the same word set; a
//! board is solvable when every equivalent board is one of its rotations or
//! reflections.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use rayon::prelude::*;

use crate::board::{Board, Label};
use crate::dihedral::{canonical_grid, cell_maps};
use crate::error::{Error, Result};
use crate::paths::PathCatalog;
use crate::words::word_set;

/// Boards enumerated before giving up.
pub const DEFAULT_BOARD_BUDGET: u64 = 1 << 20;
/// Digest depth used when classifying; matches are always confirmed on the
/// full word sets.
pub const DEFAULT_SIGNATURE_KMAX: usize = 5;
const MAX_PACKED_LEN: usize = 15;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionType {
    parts: Vec<usize>,
}

impl PartitionType {
    /// Parts are sorted into nonincreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Precondition(format!("{parts:?} is not a partition")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `|B(λ)| = (n^2)! / Π λ_i!`.
    pub fn board_count(&self) -> u128 {
        let mut count = 1u128;
        let mut placed = 0u128;
        for &p in &self.parts {
            for i in 1..=p as u128 {
                placed += 1;
                count = count * placed / i;
            }
        }
        count
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.total() != n * n {
            return Err(Error::Precondition(format!(
                "type {self} sums to {}, not {}",
                self.total(),
                n * n
            )));
        }
        if n > 3 {
            return Err(Error::ResourceLimit(format!(
                "enumerating boards by type is only run for n <= 3, got {n}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for PartitionType {
    /// Exponent notation, e.g. `(2,1^7)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match groups.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => groups.push((p, 1)),
            }
        }
        let s: Vec<String> = groups
            .iter()
            .map(|&(p, c)| if c == 1 { p.to_string() } else { format!("{p}^{c}") })
            .collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for PartitionType {
    type Err = Error;

    /// Comma-separated parts, e.g. `2,1,1,1,1,1,1,1`; `p^c` repeats a part.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let (p, c) = match tok.split_once('^') {
                Some((p, c)) => (p, c),
                None => (tok, "1"),
            };
            let p: usize = p
                .trim()
                .parse()
                .map_err(|_| Error::Precondition(format!("bad part '{tok}' in type '{s}'")))?;
            let c: usize = c
                .trim()
                .parse()
                .map_err(|_| Error::Precondition(format!("bad repeat '{tok}' in type '{s}'")))?;
            parts.extend(std::iter::repeat(p).take(c));
        }
        PartitionType::new(parts)
    }
}

/// Every board of type `λ`, in lexicographic order of the grid. Label `i`
/// (from 1) fills `λ_i` cells.
pub fn enumerate_boards(lambda: &PartitionType, n: usize, budget: Option<u64>) -> Result<Vec<Board>> {
    lambda.check(n)?;
    let budget = budget.unwrap_or(DEFAULT_BOARD_BUDGET);
    let count = lambda.board_count();
    if count > budget as u128 {
        return Err(Error::ResourceLimit(format!(
            "type {lambda} has {count} boards, over the budget of {budget}"
        )));
    }
    let mut grid: Vec<Label> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| std::iter::repeat(Label(i as u16 + 1)).take(p))
        .collect();
    let mut boards = Vec::with_capacity(count as usize);
    loop {
        boards.push(Board::new(n, grid.clone())?);
        if !next_permutation(&mut grid) {
            break;
        }
    }
    Ok(boards)
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("v[i] qualifies");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Hashes of the sorted word lists of each length `2..=k_max`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WordSignature {
    pub k_max: usize,
    pub digests: Vec<u64>,
}

fn pack(b: &Board, path: &[u8]) -> u128 {
    path.iter()
        .fold(path.len() as u128, |acc, &c| acc << 8 | b.get(c as usize).0 as u128)
}

fn check_packable(b: &Board, k_max: usize) -> Result<()> {
    if k_max > MAX_PACKED_LEN || b.cells().iter().any(|l| l.0 > 255) {
        return Err(Error::Precondition(format!(
            "signatures need labels below 256 and lengths up to {MAX_PACKED_LEN}"
        )));
    }
    Ok(())
}

/// Sorted, deduplicated words of length `k`, packed one per integer.
fn packed_words(b: &Board, catalog: &PathCatalog, k: usize) -> Vec<u128> {
    let mut words: Vec<u128> = catalog.paths(k).map(|p| pack(b, p)).collect();
    words.sort_unstable();
    words.dedup();
    words
}

fn signature_with(b: &Board, catalog: &PathCatalog, k_max: usize) -> WordSignature {
    let digests = (2..=k_max)
        .map(|k| {
            let mut h = DefaultHasher::new();
            packed_words(b, catalog, k).hash(&mut h);
            h.finish()
        })
        .collect();
    WordSignature { k_max, digests }
}

/// Digest of the words of lengths `2..=k_max`. Equal word sets give equal
/// digests; [`classify`] confirms every match on the full word sets.
pub fn word_signature(b: &Board, k_max: usize) -> Result<WordSignature> {
    let k_max = k_max.min(b.n() * b.n());
    check_packable(b, k_max)?;
    let catalog = PathCatalog::new(b.n(), k_max)?;
    Ok(signature_with(b, &catalog, k_max))
}

fn full_words(b: &Board, catalog: &PathCatalog) -> Vec<Vec<u128>> {
    (2..=catalog.max_len()).map(|k| packed_words(b, catalog, k)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClassReport {
    pub lambda: PartitionType,
    pub n: usize,
    pub board_count: usize,
    /// Classes under the symmetries of the square.
    pub orbit_count: usize,
    /// Classes of boards with equal word sets.
    pub class_count: usize,
    /// Boards whose equivalence class is just their orbit.
    pub solvable_count: usize,
    pub solvable_orbits: usize,
    pub all_solvable: bool,
    /// Equivalence classes spanning several orbits, as sorted lists of
    /// canonical orbit representatives.
    pub merged_classes: Vec<Vec<Board>>,
}

/// Groups `B(λ)` by word set. Word sets are invariant under the square's
/// symmetries, so only one board per orbit is examined; orbit
/// representatives are bucketed by a `k_max` signature and buckets are split
/// by comparing full word sets.
pub fn classify(lambda: &PartitionType, n: usize, k_max: usize, budget: Option<u64>) -> Result<EquivalenceClassReport> {
    let boards = enumerate_boards(lambda, n, budget)?;
    let cells = n * n;
    let k_max = k_max.clamp(2, cells);
    let maps = cell_maps(n);
    let catalog = PathCatalog::full(n)?;
    if let Some(b) = boards.first() {
        check_packable(b, cells)?;
    }

    // canonical representative -> orbit size
    let reps: BTreeMap<Vec<Label>, usize> = boards
        .par_iter()
        .filter_map(|b| {
            let canon = canonical_grid(b.cells(), &maps);
            (canon[..] == b.cells()[..]).then(|| {
                let mut images: Vec<Vec<Label>> = maps
                    .iter()
                    .map(|map| {
                        let mut img = vec![Label(0); cells];
                        for c in 0..cells {
                            img[map[c]] = b.cells()[c];
                        }
                        img
                    })
                    .collect();
                images.sort();
                images.dedup();
                (canon, images.len())
            })
        })
        .collect();

    let keyed: Vec<(WordSignature, Board)> = reps
        .par_iter()
        .map(|(grid, _)| {
            let b = Board::new(n, grid.clone()).expect("valid grid");
            (signature_with(&b, &catalog, k_max), b)
        })
        .collect();
    let mut buckets: BTreeMap<WordSignature, Vec<Board>> = BTreeMap::new();
    for (sig, b) in keyed {
        buckets.entry(sig).or_default().push(b);
    }

    let split: Vec<Vec<Vec<Board>>> = buckets
        .into_par_iter()
        .map(|(_, members)| {
            if members.len() == 1 {
                return vec![members];
            }
            let mut classes: BTreeMap<Vec<Vec<u128>>, Vec<Board>> = BTreeMap::new();
            for b in members {
                classes.entry(full_words(&b, &catalog)).or_default().push(b);
            }
            classes.into_values().collect()
        })
        .collect();

    let mut class_count = 0;
    let mut solvable_count = 0;
    let mut solvable_orbits = 0;
    let mut merged_classes = Vec::new();
    for mut class in split.into_iter().flatten() {
        class_count += 1;
        if class.len() == 1 {
            solvable_orbits += 1;
            solvable_count += reps[class[0].cells()];
        } else {
            class.sort();
            merged_classes.push(class);
        }
    }
    merged_classes.sort();
    Ok(EquivalenceClassReport {
        lambda: lambda.clone(),
        n,
        board_count: boards.len(),
        orbit_count: reps.len(),
        class_count,
        solvable_count,
        solvable_orbits,
        all_solvable: class_count == reps.len(),
        merged_classes,
    })
}

/// Word template such as `1-x-1`: literal labels and `x` wildcards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern(Vec<Option<Label>>);

impl Pattern {
    pub const MAX_LEN: usize = 4;

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn matches(&self, letters: &[Label]) -> bool {
        letters.len() == self.0.len()
            && self.0.iter().zip(letters).all(|(p, l)| p.is_none_or(|p| p == *l))
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let slots = s
            .trim()
            .split('-')
            .map(|t| match t.trim() {
                "x" | "X" | "*" => Ok(None),
                t => t
                    .parse::<u16>()
                    .map(|v| Some(Label(v)))
                    .map_err(|_| Error::parse(1, format!("bad pattern token '{t}' in '{s}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if slots.len() < 2 || slots.len() > Pattern::MAX_LEN {
            return Err(Error::parse(
                1,
                format!("pattern '{s}' must have 2 to {} letters", Pattern::MAX_LEN),
            ));
        }
        Ok(Pattern(slots))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .0
            .iter()
            .map(|p| p.map_or_else(|| "x".to_string(), |l| l.to_string()))
            .collect();
        f.write_str(&s.join("-"))
    }
}

/// Number of distinct words on `b` matching the template.
pub fn pattern_count(b: &Board, pattern: &Pattern) -> Result<usize> {
    let k = pattern.len();
    if k > b.n() * b.n() {
        return Ok(0);
    }
    Ok(word_set(b, k, k)?.words.iter().filter(|w| pattern.matches(w.letters())).count())
}

/// Counts of `1-x-1` and `1-1-x` words on a 3x3 board holding two 1s on
/// king-adjacent cells and distinct labels elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairProfile {
    pub cells: (usize, usize),
    pub one_x_one: usize,
    pub one_one_x: usize,
}

/// One profile per placement of two adjacent 1s up to the square's
/// symmetries, ordered by the least cell pair of each class.
pub fn adjacent_pair_profiles() -> Result<Vec<PairProfile>> {
    let maps = cell_maps(3);
    let gap: Pattern = "1-x-1".parse()?;
    let run: Pattern = "1-1-x".parse()?;
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for (a, b) in crate::paths::build_king_graph(3)? {
        let class = maps
            .iter()
            .map(|m| (m[a].min(m[b]), m[a].max(m[b])))
            .min()
            .expect("eight symmetries");
        if !seen.insert(class) {
            continue;
        }
        let mut next = 2u16;
        let grid: Vec<Label> = (0..9)
            .map(|c| {
                if c == a || c == b {
                    Label(1)
                } else {
                    next += 1;
                    Label(next - 1)
                }
            })
            .collect();
        let board = Board::new(3, grid)?;
        out.push(PairProfile {
            cells: (a, b),
            one_x_one: pattern_count(&board, &gap)?,
            one_one_x: pattern_count(&board, &run)?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::standard_board;
    use crate::dihedral::DihedralElement;

    #[test]
    fn partition_parsing_and_counts() {
        let l: PartitionType = "2,1,1,1,1,1,1,1".parse().unwrap();
        assert_eq!(l.to_string(), "(2,1^7)");
        assert_eq!(l.board_count(), 181_440);
        assert_eq!("1^9".parse::<PartitionType>().unwrap().board_count(), 362_880);
        assert_eq!("1,8".parse::<PartitionType>().unwrap().to_string(), "(8,1)");
        assert_eq!("(8,1)".parse::<PartitionType>().unwrap().board_count(), 9);
        assert!("2,0,7".parse::<PartitionType>().is_err());
        assert!("a,b".parse::<PartitionType>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        let l: PartitionType = "8,1".parse().unwrap();
        let boards = enumerate_boards(&l, 3, None).unwrap();
        assert_eq!(boards.len(), 9);
        assert!(boards.windows(2).all(|w| w[0] < w[1]));
        let l: PartitionType = "3,3,3".parse().unwrap();
        assert_eq!(enumerate_boards(&l, 3, None).unwrap().len(), 1680);
        assert!(matches!(
            enumerate_boards(&"1^9".parse().unwrap(), 3, Some(1000)),
            Err(Error::ResourceLimit(_))
        ));
        assert!(enumerate_boards(&"1^16".parse().unwrap(), 4, None).is_err());
        assert!(enumerate_boards(&"8,2".parse().unwrap(), 3, None).is_err());
    }

    #[test]
    fn signatures() {
        let s = standard_board(3).unwrap();
        let sig = word_signature(&s, 5).unwrap();
        for d in DihedralElement::ALL {
            assert_eq!(word_signature(&d.apply(&s), 5).unwrap(), sig);
        }
        let swapped = s.permute(&"(1 3)".parse().unwrap());
        assert_ne!(word_signature(&swapped, 5).unwrap(), sig);
        let boards = enumerate_boards(&"8,1".parse().unwrap(), 3, None).unwrap();
        let first = word_signature(&boards[0], 9).unwrap();
        assert!(boards.iter().all(|b| word_signature(b, 9).unwrap() == first));
    }

    #[test]
    fn eight_and_one() {
        let r = classify(&"8,1".parse().unwrap(), 3, 5, None).unwrap();
        assert_eq!(r.board_count, 9);
        assert_eq!(r.orbit_count, 3);
        assert_eq!(r.class_count, 1);
        assert_eq!(r.solvable_count, 0);
        assert!(!r.all_solvable);
        assert_eq!(r.merged_classes.len(), 1);
        assert_eq!(r.merged_classes[0].len(), 3);
    }

    #[test]
    fn small_types() {
        // Three letters three times each; counted orbits must cover every
        // board.
        let r = classify(&"3,3,3".parse().unwrap(), 3, 5, None).unwrap();
        assert_eq!(r.board_count, 1680);
        assert!(r.class_count <= r.orbit_count);
        assert_eq!(r.all_solvable, r.class_count == r.orbit_count);
        let two = classify(&"1^4".parse().unwrap(), 2, 4, None).unwrap();
        assert_eq!(two.board_count, 24);
        // Every 2x2 board has all twelve ordered pairs as words.
        assert_eq!(two.class_count, 1);
    }

    #[test]
    fn patterns() {
        let p: Pattern = "1-x-1".parse().unwrap();
        assert_eq!(p.to_string(), "1-x-1");
        assert!("1-y".parse::<Pattern>().is_err());
        assert!("1-x-x-x-1".parse::<Pattern>().is_err());
        assert!("1".parse::<Pattern>().is_err());

        // Ones at the centre and a corner.
        let b = Board::from_values(3, &[1, 2, 3, 4, 1, 5, 6, 7, 8]).unwrap();
        assert!(pattern_count(&b, &"1-1-x".parse().unwrap()).unwrap() > 0);
        // Ones at opposite corners.
        let b = Board::from_values(3, &[1, 2, 3, 4, 5, 6, 7, 8, 1]).unwrap();
        assert_eq!(pattern_count(&b, &"1-1-x".parse().unwrap()).unwrap(), 0);
        // The centre is their only common neighbour.
        assert_eq!(pattern_count(&b, &"1-x-1".parse().unwrap()).unwrap(), 1);
    }

    #[test]
    fn next_permutation_handles_repeats() {
        let mut v = vec![1, 1, 2];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen, [vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    }
}
