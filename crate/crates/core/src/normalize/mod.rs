//! Lexical normalization of quintuples before training and testing.
//!
//! Rules, applied in this order:
//!
//! - `year`: a token of exactly four ASCII digits becomes `YEAR`;
//! - `num`: any other token made only of digits, commas and periods (with at
//!   least one digit) becomes `NUM`;
//! - `lowercase`: the verb and preposition are lowercased;
//! - `name`: in the noun fields, each hyphen-separated segment made of one
//!   uppercase letter followed by lowercase letters becomes `NAME`;
//! - `name-collapse`: hyphen-joined runs of `NAME` collapse to one `NAME`;
//! - `stem`: the verb is reduced to its stem.

mod stem;

use std::fmt;
use std::str::FromStr;

pub use stem::{IdentityStemmer, RuleStemmer, Stemmer};

use crate::corpus::{Corpus, Quadruple, Quintuple};

pub const YEAR: &str = "YEAR";
pub const NUM: &str = "NUM";
pub const NAME: &str = "NAME";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Year,
    Num,
    Lowercase,
    Name,
    NameCollapse,
    Stem,
}

impl Rule {
    pub const ALL: [Rule; 6] = [
        Rule::Year,
        Rule::Num,
        Rule::Lowercase,
        Rule::Name,
        Rule::NameCollapse,
        Rule::Stem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Year => "year",
            Rule::Num => "num",
            Rule::Lowercase => "lowercase",
            Rule::Name => "name",
            Rule::NameCollapse => "name-collapse",
            Rule::Stem => "stem",
        }
    }

    fn bit(self) -> u8 {
        1 << self as u8
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown normalization rule {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RuleSet(u8);

impl RuleSet {
    pub const NONE: RuleSet = RuleSet(0);
    pub const ALL: RuleSet = RuleSet(0b11_1111);

    pub fn contains(self, r: Rule) -> bool {
        self.0 & r.bit() != 0
    }

    pub fn with(self, r: Rule) -> RuleSet {
        RuleSet(self.0 | r.bit())
    }

    pub fn without(self, r: Rule) -> RuleSet {
        RuleSet(self.0 & !r.bit())
    }
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet::ALL
    }
}

/// Built-in stemmers selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum StemmerKind {
    #[default]
    Rules,
    Identity,
}

impl StemmerKind {
    pub fn stemmer(self) -> &'static dyn Stemmer {
        match self {
            StemmerKind::Rules => &RuleStemmer,
            StemmerKind::Identity => &IdentityStemmer,
        }
    }
}

impl FromStr for StemmerKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rules" => Ok(StemmerKind::Rules),
            "none" | "identity" => Ok(StemmerKind::Identity),
            _ => Err(format!("unknown stemmer {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NormalizeConfig {
    pub rules: RuleSet,
    pub stemmer: StemmerKind,
}

/// `YEAR` for four-digit tokens, `NUM` for other numerals.
pub fn normalize_token_year_num(t: &str) -> &str {
    year_num(t, RuleSet::ALL)
}

fn year_num(t: &str, rules: RuleSet) -> &str {
    if rules.contains(Rule::Year) && t.len() == 4 && t.bytes().all(|b| b.is_ascii_digit()) {
        return YEAR;
    }
    if rules.contains(Rule::Num)
        && t.bytes().any(|b| b.is_ascii_digit())
        && t.bytes().all(|b| b.is_ascii_digit() || b == b',' || b == b'.')
    {
        return NUM;
    }
    t
}

fn is_name_segment(seg: &str) -> bool {
    let mut chars = seg.chars();
    let Some(first) = chars.next() else {
        return false;
    };
    let rest = chars.as_str();
    first.is_uppercase() && !rest.is_empty() && rest.chars().all(char::is_lowercase)
}

/// Replaces capitalized segments with `NAME` and collapses `NAME-NAME`.
pub fn normalize_name(t: &str) -> String {
    name(t, RuleSet::ALL)
}

fn name(t: &str, rules: RuleSet) -> String {
    let replace = rules.contains(Rule::Name);
    let collapse = rules.contains(Rule::NameCollapse);
    if !replace && !collapse {
        return t.to_string();
    }
    let mut out: Vec<&str> = Vec::new();
    for seg in t.split('-') {
        let seg = if replace && is_name_segment(seg) {
            NAME
        } else {
            seg
        };
        if collapse && seg == NAME && out.last() == Some(&NAME) {
            continue;
        }
        out.push(seg);
    }
    out.join("-")
}

/// Normalizes one quintuple with a built-in stemmer.
pub fn normalize_quintuple(x: &Quintuple, cfg: &NormalizeConfig) -> Quintuple {
    normalize_quintuple_with(x, cfg.rules, cfg.stemmer.stemmer())
}

/// Normalizes one quintuple with a caller-supplied stemmer. A stem that is
/// not a valid token leaves the verb unstemmed.
pub fn normalize_quintuple_with(x: &Quintuple, rules: RuleSet, stemmer: &dyn Stemmer) -> Quintuple {
    let [v, n1, p, n2] = x.quad.words().clone().map(|w| year_num(&w, rules).to_string());

    let (mut v, p) = if rules.contains(Rule::Lowercase) {
        (v.to_lowercase(), p.to_lowercase())
    } else {
        (v, p)
    };
    let n1 = name(&n1, rules);
    let n2 = name(&n2, rules);
    if rules.contains(Rule::Stem) {
        let stemmed = stemmer.stem(&v);
        if !stemmed.is_empty() && !stemmed.chars().any(char::is_whitespace) {
            v = stemmed;
        }
    }

    let quad = Quadruple::from_words([v, n1, p, n2])
        .expect("normalization never produces an empty or whitespace token");
    Quintuple::new(x.attachment, quad)
}

pub fn normalize_corpus(c: &Corpus, cfg: &NormalizeConfig) -> Corpus {
    c.iter().map(|x| normalize_quintuple(x, cfg)).collect()
}
