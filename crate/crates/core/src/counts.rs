//! Frequency tables over every sub-tuple of the training quadruples.
//!
//! For each non-empty subset of the slots `{V, N1, P, N2}` the model keeps
//! how often each word combination was seen with noun and with verb
//! attachment. Slot identity is part of the key, so `V=board` and
//! `N1=board` are distinct entries.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use crate::corpus::{Attachment, Corpus, Quadruple};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    V,
    N1,
    P,
    N2,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::V, Slot::N1, Slot::P, Slot::N2];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Character used for this slot in kind codes.
    pub fn code(self) -> char {
        match self {
            Slot::V => 'V',
            Slot::N1 => 'N',
            Slot::P => 'P',
            Slot::N2 => 'D',
        }
    }

    fn bit(self) -> u8 {
        8 >> self.index()
    }
}

/// A non-empty subset of the quadruple slots.
///
/// Ordering is the canonical kind order: descending membership mask read as
/// `V N1 P N2`, so `VNPD` comes first and `...D` last.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TupleKind(u8);

impl TupleKind {
    pub const QUADRUPLE: TupleKind = TupleKind(0b1111);
    pub const V_N1_P: TupleKind = TupleKind(0b1110);
    pub const V_P_N2: TupleKind = TupleKind(0b1011);
    pub const N1_P_N2: TupleKind = TupleKind(0b0111);
    pub const V_N1_N2: TupleKind = TupleKind(0b1101);
    pub const V_P: TupleKind = TupleKind(0b1010);
    pub const N1_P: TupleKind = TupleKind(0b0110);
    pub const P_N2: TupleKind = TupleKind(0b0011);
    pub const V_N1: TupleKind = TupleKind(0b1100);
    pub const V_N2: TupleKind = TupleKind(0b1001);
    pub const N1_N2: TupleKind = TupleKind(0b0101);
    pub const P: TupleKind = TupleKind(0b0010);
    pub const V: TupleKind = TupleKind(0b1000);
    pub const N1: TupleKind = TupleKind(0b0100);
    pub const N2: TupleKind = TupleKind(0b0001);

    /// All 15 kinds in canonical order.
    pub const ALL: [TupleKind; 15] = [
        TupleKind(15),
        TupleKind(14),
        TupleKind(13),
        TupleKind(12),
        TupleKind(11),
        TupleKind(10),
        TupleKind(9),
        TupleKind(8),
        TupleKind(7),
        TupleKind(6),
        TupleKind(5),
        TupleKind(4),
        TupleKind(3),
        TupleKind(2),
        TupleKind(1),
    ];

    pub fn from_slots(slots: &[Slot]) -> Option<Self> {
        let mask = slots.iter().fold(0, |m, s| m | s.bit());
        (mask != 0).then_some(TupleKind(mask))
    }

    /// Parses a four-character code such as `V.P.` or `.NPD`.
    pub fn from_code(code: &str) -> Result<Self> {
        let chars: Vec<char> = code.chars().collect();
        if chars.len() != 4 {
            return Err(Error::KindCode(code.to_string()));
        }
        let mut mask = 0;
        for (slot, c) in Slot::ALL.into_iter().zip(chars) {
            if c == slot.code() {
                mask |= slot.bit();
            } else if c != '.' {
                return Err(Error::KindCode(code.to_string()));
            }
        }
        if mask == 0 {
            return Err(Error::KindCode(code.to_string()));
        }
        Ok(TupleKind(mask))
    }

    pub fn code(self) -> String {
        Slot::ALL
            .iter()
            .map(|&s| if self.contains(s) { s.code() } else { '.' })
            .collect()
    }

    pub fn contains(self, slot: Slot) -> bool {
        self.0 & slot.bit() != 0
    }

    pub fn has_preposition(self) -> bool {
        self.contains(Slot::P)
    }

    pub fn arity(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Member slots in slot order.
    pub fn slots(self) -> impl Iterator<Item = Slot> {
        Slot::ALL.into_iter().filter(move |&s| self.contains(s))
    }
}

impl Ord for TupleKind {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for TupleKind {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for TupleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TupleKind({})", self.code())
    }
}

impl fmt::Display for TupleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

/// A tuple kind together with the words filling its slots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubTuple {
    kind: TupleKind,
    words: Vec<String>,
}

impl SubTuple {
    pub fn new(kind: TupleKind, words: Vec<String>) -> Result<Self> {
        if words.len() != kind.arity() {
            return Err(Error::Arity {
                kind: kind.code(),
                expected: kind.arity(),
                found: words.len(),
            });
        }
        Ok(SubTuple { kind, words })
    }

    /// Projects a quadruple onto the slots of `kind`.
    pub fn project(kind: TupleKind, q: &Quadruple) -> Self {
        SubTuple {
            kind,
            words: kind.slots().map(|s| q.word(s).to_string()).collect(),
        }
    }

    pub fn kind(&self) -> TupleKind {
        self.kind
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }
}

impl fmt::Display for SubTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for w in &self.words {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// Verb- and noun-attachment counts for one key.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct LabelCounts {
    pub verb: u64,
    pub noun: u64,
}

impl LabelCounts {
    pub fn get(self, a: Attachment) -> u64 {
        match a {
            Attachment::Verb => self.verb,
            Attachment::Noun => self.noun,
        }
    }

    fn get_mut(&mut self, a: Attachment) -> &mut u64 {
        match a {
            Attachment::Verb => &mut self.verb,
            Attachment::Noun => &mut self.noun,
        }
    }

    pub fn total(self) -> u64 {
        self.verb + self.noun
    }

    pub fn add(&mut self, other: LabelCounts) {
        self.verb += other.verb;
        self.noun += other.noun;
    }
}

const HEADER: &str = "ppattach-counts";
const VERSION: &str = "v1";

/// Training counts `f(x)` and `f(a, x)` for every sub-tuple `x`.
///
/// Only keys with a nonzero total are stored; `f(x) = f(0, x) + f(1, x)` holds
/// by construction.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountModel {
    table: HashMap<SubTuple, LabelCounts>,
    label_totals: LabelCounts,
    n_items: u64,
}

impl CountModel {
    pub fn train(corpus: &Corpus) -> Self {
        let mut m = CountModel::default();
        for item in corpus {
            for kind in TupleKind::ALL {
                let entry = m.table.entry(SubTuple::project(kind, &item.quad)).or_default();
                *entry.get_mut(item.attachment) += 1;
            }
            *m.label_totals.get_mut(item.attachment) += 1;
            m.n_items += 1;
        }
        m
    }

    /// `f(x)`: how often `x` was seen with either attachment.
    pub fn f(&self, x: &SubTuple) -> u64 {
        self.counts(x).total()
    }

    /// `f(a, x)`: how often `x` was seen with attachment `a`.
    pub fn f_joint(&self, a: Attachment, x: &SubTuple) -> u64 {
        self.counts(x).get(a)
    }

    pub fn counts(&self, x: &SubTuple) -> LabelCounts {
        self.table.get(x).copied().unwrap_or_default()
    }

    /// Counts for the projection of `q` onto `kind`.
    pub fn counts_for(&self, kind: TupleKind, q: &Quadruple) -> LabelCounts {
        self.counts(&SubTuple::project(kind, q))
    }

    /// `f(0)` and `f(1)` over the whole training set.
    pub fn label_totals(&self) -> LabelCounts {
        self.label_totals
    }

    pub fn n_items(&self) -> u64 {
        self.n_items
    }

    /// Number of stored sub-tuples.
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SubTuple, LabelCounts)> {
        self.table.iter().map(|(k, v)| (k, *v))
    }

    /// Zeroes every sub-tuple seen fewer than `threshold` times, both its
    /// total and its joint counts. Label totals are kept.
    pub fn apply_cutoff(&self, threshold: u64) -> CountModel {
        CountModel {
            table: self
                .table
                .iter()
                .filter(|(_, c)| c.total() >= threshold)
                .map(|(k, c)| (k.clone(), *c))
                .collect(),
            label_totals: self.label_totals,
            n_items: self.n_items,
        }
    }

    fn sorted_entries(&self) -> Vec<(&SubTuple, LabelCounts)> {
        let mut entries: Vec<_> = self.iter().collect();
        entries.sort_unstable_by(|a, b| a.0.cmp(b.0));
        entries
    }

    /// Writes the line-oriented model format. Only nonzero joint counts are
    /// written; totals are implied.
    pub fn write_to<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(
            w,
            "{HEADER} {VERSION} {} {} {}",
            self.n_items, self.label_totals.verb, self.label_totals.noun
        )?;
        for (x, c) in self.sorted_entries() {
            let words = x.words.join(" ");
            for a in Attachment::BOTH {
                let n = c.get(a);
                if n > 0 {
                    writeln!(w, "{} {a} {words} {n}", x.kind)?;
                }
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("model text is UTF-8")
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_lines(text.lines().map(|l| Ok(l.to_string())))
    }

    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        Self::from_lines(reader.lines())
    }

    fn from_lines<I>(mut lines: I) -> Result<Self>
    where
        I: Iterator<Item = std::io::Result<String>>,
    {
        let bad = |line: usize, msg: String| Error::Model { line, msg };

        let header = lines
            .next()
            .transpose()?
            .ok_or_else(|| bad(1, "missing header".into()))?;
        let fields: Vec<&str> = header.split_ascii_whitespace().collect();
        if fields.len() != 5 || fields[0] != HEADER || fields[1] != VERSION {
            return Err(bad(1, format!("expected `{HEADER} {VERSION} <n> <f0> <f1>`")));
        }
        let n_items = parse_count(fields[2]).map_err(|m| bad(1, m))?;
        let label_totals = LabelCounts {
            verb: parse_count(fields[3]).map_err(|m| bad(1, m))?,
            noun: parse_count(fields[4]).map_err(|m| bad(1, m))?,
        };
        if label_totals.total() != n_items {
            return Err(bad(1, "label totals do not sum to the item count".into()));
        }

        let mut table: HashMap<SubTuple, LabelCounts> = HashMap::new();
        let mut seen_joint: HashMap<(SubTuple, Attachment), usize> = HashMap::new();
        let mut stated_totals: Vec<(SubTuple, u64, usize)> = Vec::new();

        for (i, line) in lines.enumerate() {
            let line_no = i + 2;
            let line = line?;
            if line.trim_ascii().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_ascii_whitespace().collect();
            if fields.len() < 3 {
                return Err(bad(line_no, "too few fields".into()));
            }
            let kind = TupleKind::from_code(fields[0])
                .map_err(|_| bad(line_no, format!("unknown kind code {:?}", fields[0])))?;
            let words = &fields[2..fields.len() - 1];
            if words.len() != kind.arity() {
                return Err(bad(
                    line_no,
                    format!("kind {kind} needs {} words, found {}", kind.arity(), words.len()),
                ));
            }
            let count = parse_count(fields[fields.len() - 1]).map_err(|m| bad(line_no, m))?;
            let key = SubTuple {
                kind,
                words: words.iter().map(|w| w.to_string()).collect(),
            };
            match fields[1] {
                "*" => stated_totals.push((key, count, line_no)),
                label => {
                    let a = Attachment::from_field(label)
                        .ok_or_else(|| bad(line_no, format!("bad label {label:?}")))?;
                    if let Some(prev) = seen_joint.insert((key.clone(), a), line_no) {
                        return Err(bad(line_no, format!("duplicate entry (first on line {prev})")));
                    }
                    if count > 0 {
                        *table.entry(key).or_default().get_mut(a) = count;
                    }
                }
            }
        }

        for (key, total, line_no) in stated_totals {
            let have = table.get(&key).copied().unwrap_or_default().total();
            if have != total {
                return Err(bad(
                    line_no,
                    format!("total {total} disagrees with joint counts summing to {have}"),
                ));
            }
        }

        Ok(CountModel {
            table,
            label_totals,
            n_items,
        })
    }
}

fn parse_count(s: &str) -> std::result::Result<u64, String> {
    if s.starts_with('-') {
        return Err(format!("negative count {s:?}"));
    }
    s.parse().map_err(|_| format!("invalid count {s:?}"))
}
