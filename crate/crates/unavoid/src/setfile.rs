//! Text format for finite sets of partial words.
//!
//! One word per line over `a..z` with `-` for holes. Lines starting with `#`
//! are comments, blank lines are skipped. An optional header line `k=<int>`
//! fixes the alphabet size; otherwise the smallest alphabet covering every
//! letter is used.

use std::fmt::Write as _;

use unavoid_core::{Alphabet, PartialWord, WordSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 for errors about the file as a whole.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_set(text: &str) -> Result<WordSet, ParseError> {
    let mut k: Option<(usize, usize)> = None;
    let mut words: Vec<(usize, PartialWord)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(v) = line.strip_prefix("k=") {
            if k.is_some() {
                return Err(err(n, "duplicate k= header"));
            }
            if !words.is_empty() {
                return Err(err(n, "k= header must precede the words"));
            }
            let size: usize = v.trim().parse().map_err(|_| err(n, format!("bad alphabet size {v:?}")))?;
            Alphabet::new(size).map_err(|e| err(n, e.to_string()))?;
            k = Some((size, n));
            continue;
        }
        let w: PartialWord = line.parse().map_err(|e: unavoid_core::Error| err(n, e.to_string()))?;
        if w.is_empty() {
            return Err(err(n, "empty word"));
        }
        words.push((n, w));
    }
    if words.is_empty() {
        return Err(err(0, "no words"));
    }
    let needed = words
        .iter()
        .filter_map(|(_, w)| w.max_letter())
        .map(|l| l.index() + 1)
        .max()
        .unwrap_or(1);
    let size = match k {
        Some((size, _)) => {
            if let Some((n, w)) = words.iter().find(|(_, w)| w.max_letter().is_some_and(|l| l.index() >= size)) {
                return Err(err(*n, format!("word {w} uses a letter outside the k={size} alphabet")));
            }
            size
        }
        None => needed,
    };
    let alphabet = Alphabet::new(size).map_err(|e| err(0, e.to_string()))?;
    WordSet::new(alphabet, words.into_iter().map(|(_, w)| w)).map_err(|e| err(0, e.to_string()))
}

/// Renders `x` with a `k=` header; [`parse_set`] reads it back unchanged.
pub fn format_set(x: &WordSet) -> String {
    let mut out = String::new();
    writeln!(out, "k={}", x.alphabet().size()).expect("writing to a string");
    for w in x {
        writeln!(out, "{w}").expect("writing to a string");
    }
    out
}
