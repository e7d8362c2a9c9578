//! Line-oriented key-value reports.
//!
//! ```text
//! boggle-report v1
//! kind thm2
//! max_overlap.k3 = 136
//! result = MATCH
//! ```
//!
//! Keys are non-empty and contain no whitespace or `=`; values are single
//! lines. Keys may repeat, and order is preserved.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const HEADER: &str = "boggle-report v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    kind: String,
    entries: Vec<(String, String)>,
}

fn valid_key(key: &str) -> bool {
    !key.is_empty() && !key.contains('=') && !key.contains(char::is_whitespace) && !key.starts_with('#')
}

impl Report {
    pub fn new(kind: &str) -> Result<Self> {
        if !valid_key(kind) {
            return Err(Error::Precondition(format!("bad report kind '{kind}'")));
        }
        Ok(Report {
            kind: kind.to_string(),
            entries: Vec::new(),
        })
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    /// Panics on a malformed key or a multi-line value; both are programmer
    /// errors.
    pub fn push(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        let value = value.to_string();
        assert!(valid_key(key), "bad report key '{key}'");
        assert!(!value.contains('\n'), "multi-line value for '{key}'");
        self.entries.push((key.to_string(), value.trim().to_string()));
        self
    }

    /// First value stored under `key`.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn get_all<'a>(&'a self, key: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.entries.iter().filter(move |(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER}")?;
        writeln!(f, "kind {}", self.kind)?;
        for (k, v) in &self.entries {
            if v.is_empty() {
                writeln!(f, "{k} =")?;
            } else {
                writeln!(f, "{k} = {v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Report {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        match lines.next() {
            Some((_, HEADER)) => {}
            Some((line, other)) => {
                return Err(Error::parse(line, format!("expected '{HEADER}', found '{other}'")))
            }
            None => return Err(Error::parse(1, "empty report")),
        }
        let mut report = match lines.next() {
            Some((line, l)) => match l.strip_prefix("kind ") {
                Some(kind) if valid_key(kind.trim()) => Report::new(kind.trim())?,
                _ => return Err(Error::parse(line, format!("expected 'kind <name>', found '{l}'"))),
            },
            None => return Err(Error::parse(2, "missing report kind")),
        };
        for (line, l) in lines {
            let (k, v) = l
                .split_once('=')
                .ok_or_else(|| Error::parse(line, format!("expected 'key = value', found '{l}'")))?;
            let k = k.trim();
            if !valid_key(k) {
                return Err(Error::parse(line, format!("bad key '{k}'")));
            }
            report.entries.push((k.to_string(), v.trim().to_string()));
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn render_and_parse() {
        let mut r = Report::new("thm2").unwrap();
        r.push("max_overlap.k3", 136).push("note", "a = b").push("empty", "");
        let text = r.render();
        assert!(text.starts_with("boggle-report v1\nkind thm2\n"));
        let back: Report = text.parse().unwrap();
        assert_eq!(back, r);
        assert_eq!(back.get("note"), Some("a = b"));
        assert_eq!(back.get("missing"), None);
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert!(matches!("nope".parse::<Report>(), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            "boggle-report v1\nkind x\nno equals here".parse::<Report>(),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!("boggle-report v1\n".parse::<Report>().is_err());
    }

    proptest! {
        #[test]
        fn round_trip(
            kind in "[a-z][a-z0-9_]{0,8}",
            entries in prop::collection::vec(("[a-z][a-z0-9_.]{0,10}", "[ -~]{0,20}"), 0..8),
        ) {
            let mut r = Report::new(&kind).unwrap();
            for (k, v) in &entries {
                r.push(k, v);
            }
            prop_assert_eq!(r.render().parse::<Report>().unwrap(), r);
        }
    }
}
