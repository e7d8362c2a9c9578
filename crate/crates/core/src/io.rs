//! Plain-text formats.
//!
//! Board: first line `n`, then `n` lines of `n` whitespace-separated labels,
//! either all integers or all single lowercase letters.
//!
//! Word list: one word per line. Numeric words are hyphen-separated labels
//! (`9-1-2`); letter words are plain lowercase (`act`).
//!
//! Graph: first line is the vertex count followed by the vertex labels, then
//! one edge `a b` per line.
//!
//! Blank lines and lines starting with `#` are ignored on input.

use std::collections::BTreeSet;

use crate::board::{Board, Label};
use crate::error::{Error, Result};
use crate::graph::AdjacencyGraph;
use crate::puzzle::Puzzle;
use crate::words::Word;

/// How labels print. Letter alphabets map the `i`-th letter to label `i+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Alphabet {
    Numeric,
    Letters(Vec<char>),
}

impl Alphabet {
    pub fn letters(chars: impl IntoIterator<Item = char>) -> Alphabet {
        let set: BTreeSet<char> = chars.into_iter().collect();
        Alphabet::Letters(set.into_iter().collect())
    }

    /// Renders a label; letter labels outside the alphabet print as `.`.
    pub fn render(&self, l: Label) -> String {
        match self {
            Alphabet::Numeric => l.to_string(),
            Alphabet::Letters(chars) => chars
                .get((l.0 as usize).wrapping_sub(1))
                .map_or_else(|| ".".to_string(), |c| c.to_string()),
        }
    }

    pub fn render_word(&self, w: &Word) -> String {
        match self {
            Alphabet::Numeric => w.to_string(),
            Alphabet::Letters(_) => w.letters().iter().map(|&l| self.render(l)).collect(),
        }
    }

    pub fn label_of(&self, c: char) -> Option<Label> {
        match self {
            Alphabet::Numeric => c.to_digit(10).filter(|&d| d > 0).map(|d| Label(d as u16)),
            Alphabet::Letters(chars) => chars.binary_search(&c).ok().map(|i| Label(i as u16 + 1)),
        }
    }

    /// Encodes a word in this alphabet. `None` if a letter is not part of
    /// the alphabet (such a word cannot be on the board) or it is too short.
    pub fn encode_word(&self, s: &str) -> Option<Word> {
        match self {
            Alphabet::Numeric => s.parse().ok(),
            Alphabet::Letters(_) => {
                let letters = s.chars().map(|c| self.label_of(c)).collect::<Option<Vec<_>>>()?;
                Word::new(letters).ok()
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Math,
    Letters,
}

impl Mode {
    /// Default minimum word length: 2 for numeric words, 3 for letter words
    /// as in the word game.
    pub fn default_min_len(self) -> usize {
        match self {
            Mode::Math => 2,
            Mode::Letters => 3,
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn check_letter_token(line: usize, t: &str) -> Result<char> {
    let mut chars = t.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if c.is_ascii_lowercase() => Ok(c),
        (Some(c), None) if c.is_ascii_uppercase() => Err(Error::parse(
            line,
            format!("letter labels must be lowercase, got {t:?}"),
        )),
        _ => Err(Error::parse(line, format!("bad label {t:?}"))),
    }
}

pub fn parse_board(text: &str) -> Result<(Board, Alphabet)> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| Error::parse(1, "empty board file"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse(first, format!("expected side length, got {header:?}")))?;
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let mut tokens: Vec<(usize, String)> = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (line, l) in lines.by_ref().take(n) {
        let row: Vec<&str> = l.split_whitespace().collect();
        if row.len() != n {
            return Err(Error::parse(line, format!("expected {n} labels, got {}", row.len())));
        }
        tokens.extend(row.into_iter().map(|t| (line, t.to_string())));
        rows += 1;
    }
    if rows != n {
        return Err(Error::parse(first, format!("expected {n} rows, got {rows}")));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "trailing content after board rows"));
    }
    let numeric = tokens.iter().all(|(_, t)| t.parse::<u16>().is_ok());
    if numeric {
        let mut cells = Vec::with_capacity(n * n);
        for (line, t) in &tokens {
            let v: u16 = t.parse().expect("checked numeric");
            if v == 0 {
                return Err(Error::parse(*line, "labels start at 1"));
            }
            cells.push(Label(v));
        }
        return Ok((Board::new(n, cells)?, Alphabet::Numeric));
    }
    let chars = tokens
        .iter()
        .map(|(line, t)| check_letter_token(*line, t))
        .collect::<Result<Vec<_>>>()?;
    let alphabet = Alphabet::letters(chars.iter().copied());
    let cells = chars
        .iter()
        .map(|&c| alphabet.label_of(c).expect("letter in alphabet"))
        .collect();
    Ok((Board::new(n, cells)?, alphabet))
}

pub fn format_board(b: &Board, alphabet: &Alphabet) -> String {
    let mut out = format!("{}\n", b.n());
    for row in b.rows() {
        let cells: Vec<String> = row.iter().map(|&l| alphabet.render(l)).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a word list. Without an explicit mode, a file whose first word
/// contains a digit is numeric, otherwise letters.
pub fn parse_puzzle(text: &str, mode: Option<Mode>, min_len: Option<usize>) -> Result<(Puzzle, Alphabet)> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    let mode = mode.unwrap_or_else(|| match lines.first() {
        Some((_, l)) if l.chars().any(|c| c.is_ascii_digit()) => Mode::Math,
        Some(_) => Mode::Letters,
        None => Mode::Math,
    });
    let min_len = min_len.unwrap_or(mode.default_min_len());
    match mode {
        Mode::Math => {
            let mut words = Vec::with_capacity(lines.len());
            for (line, l) in lines {
                let w: Word = l.parse().map_err(|e: Error| Error::parse(line, e.to_string()))?;
                if w.len() < min_len {
                    return Err(Error::parse(line, format!("word {w} is shorter than {min_len}")));
                }
                words.push(w);
            }
            Ok((Puzzle::new(words), Alphabet::Numeric))
        }
        Mode::Letters => {
            for &(line, l) in &lines {
                for c in l.chars() {
                    if c.is_ascii_uppercase() {
                        return Err(Error::parse(line, format!("letter words must be lowercase: {l:?}")));
                    }
                    if !c.is_ascii_lowercase() {
                        return Err(Error::parse(line, format!("unexpected symbol {c:?} in {l:?}")));
                    }
                }
                if l.chars().count() < min_len {
                    return Err(Error::parse(line, format!("word {l:?} is shorter than {min_len}")));
                }
            }
            let alphabet = Alphabet::letters(lines.iter().flat_map(|(_, l)| l.chars()));
            let words = lines
                .iter()
                .map(|&(line, l)| {
                    alphabet
                        .encode_word(l)
                        .ok_or_else(|| Error::parse(line, format!("word {l:?} is too short")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((Puzzle::new(words), alphabet))
        }
    }
}

pub fn format_puzzle(p: &Puzzle, alphabet: &Alphabet) -> String {
    p.words()
        .iter()
        .map(|w| alphabet.render_word(w) + "\n")
        .collect()
}

pub fn parse_graph(text: &str) -> Result<AdjacencyGraph> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| Error::parse(1, "empty graph file"))?;
    let mut fields = header.split_whitespace();
    let count: usize = fields
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(first, "expected vertex count"))?;
    let parse_label = |line: usize, t: &str| -> Result<Label> {
        t.parse::<u16>()
            .ok()
            .filter(|&v| v > 0)
            .map(Label)
            .ok_or_else(|| Error::parse(line, format!("bad label {t:?}")))
    };
    let vertices = fields.map(|t| parse_label(first, t)).collect::<Result<BTreeSet<_>>>()?;
    if vertices.len() != count {
        return Err(Error::parse(
            first,
            format!("header declares {count} vertices but lists {} distinct labels", vertices.len()),
        ));
    }
    let mut edges = Vec::new();
    for (line, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(Error::parse(line, format!("expected an edge `a b`, got {l:?}")));
        }
        let (a, b) = (parse_label(line, parts[0])?, parse_label(line, parts[1])?);
        if !vertices.contains(&a) || !vertices.contains(&b) {
            return Err(Error::parse(line, format!("edge {a} {b} uses an undeclared vertex")));
        }
        if a == b {
            return Err(Error::parse(line, format!("self-loop on {a}")));
        }
        edges.push((a, b));
    }
    AdjacencyGraph::new(vertices, edges)
}

pub fn format_graph(g: &AdjacencyGraph) -> String {
    let mut out = g.vertex_count().to_string();
    for v in g.vertices() {
        out.push(' ');
        out.push_str(&v.to_string());
    }
    out.push('\n');
    for (a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::standard_board;
    use proptest::prelude::*;

    #[test]
    fn board_round_trip() {
        for n in 2..=5 {
            let s = standard_board(n).unwrap();
            let text = format_board(&s, &Alphabet::Numeric);
            assert_eq!(parse_board(&text).unwrap(), (s, Alphabet::Numeric));
        }
        let text = "4\ng o m c\nm t i b\nh a n s\nu e a w\n";
        let (b, alpha) = parse_board(text).unwrap();
        assert_eq!(format_board(&b, &alpha), text);
        assert_eq!(b.type_lambda()[0], 2);
    }

    #[test]
    fn board_errors_carry_lines() {
        assert!(matches!(parse_board("3\n1 2 3\n4 5\n7 8 9\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_board("3\n1 2 3\n4 5 6\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_board("2\nA b\nc d\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_board("2\n1 b\nc d\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_board("x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_board("1\n1\n"), Err(Error::InvalidDimension(1))));
    }

    #[test]
    fn puzzle_modes() {
        let (p, alpha) = parse_puzzle("act\nape\nate\ncop\nend\nold\n", None, None).unwrap();
        assert_eq!(p.words().len(), 6);
        assert_eq!(alpha, Alphabet::letters("acdelnopt".chars()));
        assert_eq!(format_puzzle(&p, &alpha), "act\nape\nate\ncop\nend\nold\n");

        let (p, alpha) = parse_puzzle("9-1-2\n# comment\n\n2-3-4-5\n", None, None).unwrap();
        assert_eq!(alpha, Alphabet::Numeric);
        assert_eq!(format_puzzle(&p, &alpha), "9-1-2\n2-3-4-5\n");

        assert!(matches!(parse_puzzle("act\nAt\n", None, None), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_puzzle("act\na1t\n", Some(Mode::Letters), None), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_puzzle("act\nat\n", None, None), Err(Error::Parse { line: 2, .. })));
        assert!(parse_puzzle("act\nat\n", None, Some(2)).is_ok());
        assert!(matches!(parse_puzzle("1-2\n3-x\n", None, None), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn graph_round_trip_and_errors() {
        let text = "4 1 2 3 7\n1 2\n2 3\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(format_graph(&g), text);
        assert!(matches!(parse_graph("2 1 2\n1 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("2 1 2\n1 1\n"), Err(Error::Parse { line: 2, .. })));
    }

    proptest! {
        #[test]
        fn numeric_formats_round_trip(
            values in proptest::collection::vec(1u16..30, 9),
            words in proptest::collection::vec(proptest::collection::vec(1u16..10, 2..6), 0..8),
        ) {
            let b = Board::from_values(3, &values).unwrap();
            let text = format_board(&b, &Alphabet::Numeric);
            prop_assert_eq!(parse_board(&text).unwrap().0, b);

            let p = Puzzle::new(words.iter().map(|w| Word::from_values(w).unwrap()).collect());
            let text = format_puzzle(&p, &Alphabet::Numeric);
            let back = parse_puzzle(&text, Some(Mode::Math), None).unwrap().0;
            prop_assert_eq!(back, p);
        }

        #[test]
        fn graph_format_round_trips(edges in proptest::collection::vec((1u16..9, 1u16..9), 0..15)) {
            let g = AdjacencyGraph::new(
                [Label(9)],
                edges.into_iter().filter(|(a, b)| a != b).map(|(a, b)| (Label(a), Label(b))),
            ).unwrap();
            prop_assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
        }
    }
}
