//! Labeled quintuple corpora.
//!
//! One record per line: `A V N1 P N2`, where `A` is `1` for noun attachment
//! and `0` for verb attachment. Fields may be separated by any run of ASCII
//! whitespace on input; output always uses a single space.

use std::fmt;
use std::io::{BufRead, Write};

use crate::counts::Slot;
use crate::error::{Error, LineError, LineErrorKind, Result};

/// Where the prepositional phrase attaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Attachment {
    Verb = 0,
    Noun = 1,
}

impl Attachment {
    pub const BOTH: [Attachment; 2] = [Attachment::Verb, Attachment::Noun];

    pub fn from_field(s: &str) -> Option<Self> {
        match s {
            "0" => Some(Attachment::Verb),
            "1" => Some(Attachment::Noun),
            _ => None,
        }
    }

    pub fn as_u8(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for Attachment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

fn valid_token(t: &str) -> bool {
    !t.is_empty() && !t.chars().any(char::is_whitespace)
}

/// The four head words `(v, n1, p, n2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quadruple {
    words: [String; 4],
}

impl Quadruple {
    pub fn new(
        v: impl Into<String>,
        n1: impl Into<String>,
        p: impl Into<String>,
        n2: impl Into<String>,
    ) -> Result<Self> {
        Self::from_words([v.into(), n1.into(), p.into(), n2.into()])
    }

    /// Words in slot order `V, N1, P, N2`.
    pub fn from_words(words: [String; 4]) -> Result<Self> {
        if let Some(bad) = words.iter().find(|w| !valid_token(w)) {
            return Err(Error::Token(bad.clone()));
        }
        Ok(Quadruple { words })
    }

    /// Parses an unlabeled `V N1 P N2` line.
    pub fn parse_line(line: &str, line_no: usize) -> Result<Self, LineError> {
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        if fields.len() != 4 {
            return Err(LineError {
                line: line_no,
                kind: LineErrorKind::FieldCount {
                    expected: 4,
                    found: fields.len(),
                },
            });
        }
        Self::from_fields(&fields, line_no)
    }

    fn from_fields(fields: &[&str], line_no: usize) -> Result<Self, LineError> {
        // Fields can still carry non-ASCII whitespace.
        let words = [0, 1, 2, 3].map(|i| fields[i].to_string());
        Quadruple::from_words(words).map_err(|e| {
            let token = match e {
                Error::Token(t) => t,
                other => other.to_string(),
            };
            LineError {
                line: line_no,
                kind: LineErrorKind::Token(token),
            }
        })
    }

    pub fn v(&self) -> &str {
        &self.words[0]
    }

    pub fn n1(&self) -> &str {
        &self.words[1]
    }

    pub fn p(&self) -> &str {
        &self.words[2]
    }

    pub fn n2(&self) -> &str {
        &self.words[3]
    }

    pub fn word(&self, slot: Slot) -> &str {
        &self.words[slot.index()]
    }

    pub fn words(&self) -> &[String; 4] {
        &self.words
    }

    pub fn into_words(self) -> [String; 4] {
        self.words
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.words.join(" "))
    }
}

/// A quadruple with its gold attachment.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quintuple {
    pub attachment: Attachment,
    pub quad: Quadruple,
}

impl Quintuple {
    pub fn new(attachment: Attachment, quad: Quadruple) -> Self {
        Quintuple { attachment, quad }
    }

    /// Parses one record. `line_no` is only used for error reporting.
    pub fn parse_line(line: &str, line_no: usize) -> Result<Self, LineError> {
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        if fields.len() != 5 {
            return Err(LineError {
                line: line_no,
                kind: LineErrorKind::FieldCount {
                    expected: 5,
                    found: fields.len(),
                },
            });
        }
        let attachment = Attachment::from_field(fields[0]).ok_or_else(|| LineError {
            line: line_no,
            kind: LineErrorKind::Label(fields[0].to_string()),
        })?;
        let quad = Quadruple::from_fields(&fields[1..], line_no)?;
        Ok(Quintuple { attachment, quad })
    }
}

impl fmt::Display for Quintuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.attachment, self.quad)
    }
}

/// An ordered multiset of labeled quintuples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    items: Vec<Quintuple>,
}

impl Corpus {
    pub fn new(items: Vec<Quintuple>) -> Self {
        Corpus { items }
    }

    /// Parses a whole corpus. Blank lines are skipped; every malformed line
    /// is collected into the returned error.
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_lines(text.lines().map(|l| Ok(l.to_string())))
    }

    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        Self::from_lines(reader.lines())
    }

    fn from_lines<I>(lines: I) -> Result<Self>
    where
        I: Iterator<Item = std::io::Result<String>>,
    {
        let mut items = Vec::new();
        let mut errors = Vec::new();
        for (i, line) in lines.enumerate() {
            let line = line?;
            if line.trim_ascii().is_empty() {
                continue;
            }
            match Quintuple::parse_line(&line, i + 1) {
                Ok(q) => items.push(q),
                Err(e) => errors.push(e),
            }
        }
        if errors.is_empty() {
            Ok(Corpus { items })
        } else {
            Err(Error::Corpus(errors))
        }
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for item in &self.items {
            writeln!(w, "{item}")?;
        }
        Ok(())
    }

    pub fn items(&self) -> &[Quintuple] {
        &self.items
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Quintuple> {
        self.items.iter()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn into_items(self) -> Vec<Quintuple> {
        self.items
    }
}

/// Parses unlabeled quadruples, one per non-blank line.
pub fn parse_quadruples(text: &str) -> Result<Vec<Quadruple>> {
    let mut out = Vec::new();
    let mut errors = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim_ascii().is_empty() {
            continue;
        }
        match Quadruple::parse_line(line, i + 1) {
            Ok(q) => out.push(q),
            Err(e) => errors.push(e),
        }
    }
    if errors.is_empty() {
        Ok(out)
    } else {
        Err(Error::Corpus(errors))
    }
}

impl fmt::Display for Corpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(f, "{item}")?;
        }
        Ok(())
    }
}

impl FromIterator<Quintuple> for Corpus {
    fn from_iter<T: IntoIterator<Item = Quintuple>>(iter: T) -> Self {
        Corpus {
            items: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a Corpus {
    type Item = &'a Quintuple;
    type IntoIter = std::slice::Iter<'a, Quintuple>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}
