//! Reruns the exhaustive computations behind the published numbers and
//! compares each result with its expected value.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::board::{standard_board, Permutation};
use crate::census::{minimal_census, PuzzleTable};
use crate::dihedral::canonical_board;
use crate::error::{Error, Result};
use crate::extremal::max_overlap_exhaustive;
use crate::io::{parse_puzzle, Mode};
use crate::multiset::{adjacent_pair_profiles, classify, PartitionType, DEFAULT_SIGNATURE_KMAX};
use crate::paths::PathCatalog;
use crate::puzzle::{solve, SolveStatus};
use crate::report::Report;

/// Letter puzzle with a unique 3x3 solution from six three-letter words.
pub const INTRO_PUZZLE: &str = "act\nape\nate\ncop\nend\nold\n";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// Six three-letter words are needed and suffice.
    Thm1,
    /// Largest 3- and 4-letter overlaps and the resulting thresholds.
    Thm2,
    /// Fewest two-letter words in a 3x3 puzzle.
    Q1,
    /// Equal word sets iff related by a symmetry, over all 3x3 boards.
    Equivalence,
    /// Eight equal letters and one other.
    Lambda81,
    /// One letter repeated once.
    Lambda217,
}

impl Target {
    pub const ALL: [Target; 6] = [
        Target::Thm1,
        Target::Thm2,
        Target::Q1,
        Target::Equivalence,
        Target::Lambda81,
        Target::Lambda217,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Thm1 => "thm1",
            Target::Thm2 => "thm2",
            Target::Q1 => "q1",
            Target::Equivalence => "equivalence",
            Target::Lambda81 => "lambda81",
            Target::Lambda217 => "lambda217",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown target '{s}'")))
    }
}

struct Checks {
    report: Report,
    all_match: bool,
}

impl Checks {
    fn new(target: Target) -> Self {
        Checks {
            report: Report::new(target.name()).expect("valid kind"),
            all_match: true,
        }
    }

    fn value(&mut self, key: &str, v: impl fmt::Display) {
        self.report.push(key, v);
    }

    fn check(&mut self, key: &str, expected: impl fmt::Display, computed: impl fmt::Display, ok: bool) {
        self.all_match &= ok;
        let verdict = if ok { "MATCH" } else { "MISMATCH" };
        self.report
            .push(&format!("check.{key}"), format!("{verdict} expected={expected} computed={computed}"));
    }

    fn finish(mut self, outcome: Result<()>) -> Report {
        match outcome {
            Ok(()) => {
                self.report.push("complete", true);
                let verdict = if self.all_match { "MATCH" } else { "MISMATCH" };
                self.report.push("result", verdict);
            }
            Err(e) => {
                self.report.push("complete", false);
                self.report.push("error", e.to_string().replace('\n', " "));
                self.report.push("result", "INCOMPLETE");
            }
        }
        self.report
    }
}

/// Runs one target. A computation that hits a resource limit yields a
/// report marked incomplete rather than an error.
pub fn reproduce(target: Target) -> Report {
    let mut c = Checks::new(target);
    let outcome = match target {
        Target::Thm1 => thm1(&mut c),
        Target::Thm2 => thm2(&mut c),
        Target::Q1 => q1(&mut c),
        Target::Equivalence => equivalence(&mut c),
        Target::Lambda81 => lambda81(&mut c),
        Target::Lambda217 => lambda217(&mut c),
    };
    c.finish(outcome)
}

fn thm1(c: &mut Checks) -> Result<()> {
    // Any five words cover the same edges as some five undirected paths,
    // and adding words keeps a puzzle a puzzle, so scanning all 5-subsets of
    // undirected 3-paths covers every list of at most five words.
    let table = PuzzleTable::global();
    let catalog = PathCatalog::new(3, 3)?;
    let masks: Vec<u32> = catalog
        .paths(3)
        .filter(|p| p[0] < p[2])
        .map(|p| table.index().mask_of_path(p))
        .collect();
    let m = masks.len();
    let (subsets, puzzles) = (0..m)
        .into_par_iter()
        .map(|a| {
            let mut subsets = 0u64;
            let mut puzzles = 0u64;
            for b in a + 1..m {
                let ab = masks[a] | masks[b];
                for c in b + 1..m {
                    let abc = ab | masks[c];
                    for d in c + 1..m {
                        let abcd = abc | masks[d];
                        for &e in &masks[d + 1..] {
                            subsets += 1;
                            puzzles += table.is_puzzle(abcd | e) as u64;
                        }
                    }
                }
            }
            (subsets, puzzles)
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    c.value("undirected_paths", m);
    c.value("five_word_lists_checked", subsets);
    c.check("five_words_never_suffice", 0, puzzles, puzzles == 0);

    let (p, alphabet) = parse_puzzle(INTRO_PUZZLE, Some(Mode::Letters), None)?;
    let r = solve(&p, 3)?;
    c.value("six_word_example", INTRO_PUZZLE.trim().replace('\n', ","));
    if let Some(b) = r.solutions.first() {
        let rows: Vec<String> = b
            .rows()
            .map(|row| row.iter().map(|&l| alphabet.render(l)).collect())
            .collect();
        c.value("six_word_solution", rows.join("/"));
    }
    c.check("six_words_suffice", "unique", r.status.as_str(), r.status == SolveStatus::Unique);
    Ok(())
}

fn thm2(c: &mut Checks) -> Result<()> {
    let s = standard_board(3)?;
    let swap = canonical_board(&s.permute(&"(1 3)".parse::<Permutation>()?));
    let mut corner_swaps = Vec::new();
    for g in ["(1 3)", "(3 5)", "(5 7)", "(7 1)"] {
        corner_swaps.push(canonical_board(&s.permute(&g.parse::<Permutation>()?)));
    }
    corner_swaps.sort();
    for (k, max, threshold) in [(3, 136, 137), (4, 376, 377)] {
        let r = max_overlap_exhaustive(&s, k)?;
        c.value(&format!("k{k}.words"), r.reference_words);
        c.value(&format!("k{k}.classes_visited"), r.classes_visited);
        c.check(&format!("k{k}.max_overlap"), max, r.max, r.max == max);
        c.check(&format!("k{k}.threshold"), threshold, r.threshold, r.threshold == threshold);
        let found = r.maximizers.iter().any(|m| m.board == swap);
        c.check(&format!("k{k}.corner_swap_maximizes"), true, found, found);
        c.value(&format!("k{k}.maximizers"), r.maximizers.len());
        c.value(&format!("k{k}.corner_swap_unique_maximizer"), found && r.maximizers.len() == 1);
        let boards: Vec<_> = r.maximizers.iter().map(|m| m.board.clone()).collect();
        c.value(&format!("k{k}.maximizers_are_adjacent_corner_swaps"), boards == corner_swaps);
    }
    let r = max_overlap_exhaustive(&s, 2)?;
    c.value("k2.max_overlap", r.max);
    c.value("k2.threshold", r.threshold);
    c.value(
        "k2.corner_swap_maximizes",
        r.maximizers.iter().any(|m| m.board == swap),
    );
    Ok(())
}

fn q1(c: &mut Checks) -> Result<()> {
    let r = minimal_census(3)?;
    c.value("minimal_subsets", r.minimal_subsets);
    c.value("placement_classes", r.placement_classes);
    c.value("isomorphism_classes", r.isomorphism_classes);
    c.value("min_edges", r.min_edges);
    c.value("max_edges", r.max_edges);
    for (edges, count) in &r.histogram {
        c.value(&format!("classes_with_{edges}_edges"), count);
    }
    c.check("min_edges_at_least", ">=11", r.min_edges, r.min_edges >= 11);
    c.value("eleven_edge_puzzles_exist", r.min_edges == 11);
    Ok(())
}

fn equivalence(c: &mut Checks) -> Result<()> {
    let r = classify(&"1^9".parse::<PartitionType>()?, 3, DEFAULT_SIGNATURE_KMAX, None)?;
    c.check("boards", 362_880, r.board_count, r.board_count == 362_880);
    c.check("orbits", 45_360, r.orbit_count, r.orbit_count == 45_360);
    c.check("classes", 45_360, r.class_count, r.class_count == 45_360);
    c.check("all_solvable", true, r.all_solvable, r.all_solvable);
    Ok(())
}

fn lambda81(c: &mut Checks) -> Result<()> {
    let r = classify(&"8,1".parse::<PartitionType>()?, 3, 9, None)?;
    c.check("boards", 9, r.board_count, r.board_count == 9);
    c.value("orbits", r.orbit_count);
    c.check("classes", 1, r.class_count, r.class_count == 1);
    c.check("all_solvable", false, r.all_solvable, !r.all_solvable);
    Ok(())
}

fn lambda217(c: &mut Checks) -> Result<()> {
    let r = classify(&"2,1^7".parse::<PartitionType>()?, 3, DEFAULT_SIGNATURE_KMAX, None)?;
    c.value("boards", r.board_count);
    c.value("orbits", r.orbit_count);
    c.value("classes", r.class_count);
    c.check("all_solvable", true, r.all_solvable, r.all_solvable);
    let profiles = adjacent_pair_profiles()?;
    for p in &profiles {
        c.value(
            &format!("pattern_pair.cells_{}_{}", p.cells.0, p.cells.1),
            format!("1-x-1={} 1-1-x={}", p.one_x_one, p.one_one_x),
        );
    }
    let mut pairs: Vec<(usize, usize)> = profiles.iter().map(|p| (p.one_x_one, p.one_one_x)).collect();
    pairs.sort_unstable();
    pairs.dedup();
    c.check(
        "pattern_pairs_distinct",
        profiles.len(),
        pairs.len(),
        pairs.len() == profiles.len(),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_names() {
        for t in Target::ALL {
            assert_eq!(t.name().parse::<Target>().unwrap(), t);
        }
        assert!("thm3".parse::<Target>().is_err());
    }

    #[test]
    fn small_targets_match() {
        let r = reproduce(Target::Lambda81);
        assert_eq!(r.get("result"), Some("MATCH"), "{r}");
        assert_eq!(r, reproduce(Target::Lambda81));
    }
}
