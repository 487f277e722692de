//! Reference decision rules to compare the backed-off estimate against.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::corpus::{Attachment, Corpus, Quadruple};
use crate::counts::{CountModel, LabelCounts, TupleKind};
use crate::error::{Error, Result};

/// Attach to the noun regardless of the words.
pub fn always_noun(_q: &Quadruple) -> Attachment {
    Attachment::Noun
}

/// Per-preposition noun and verb attachment counts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrepositionTable {
    counts: HashMap<String, LabelCounts>,
}

impl PrepositionTable {
    pub fn from_model(m: &CountModel) -> Self {
        let counts = m
            .iter()
            .filter(|(x, _)| x.kind() == TupleKind::P)
            .map(|(x, c)| (x.words()[0].clone(), c))
            .collect();
        PrepositionTable { counts }
    }

    pub fn get(&self, p: &str) -> LabelCounts {
        self.counts.get(p).copied().unwrap_or_default()
    }

    /// The attachment seen most often with `q`'s preposition. Ties and
    /// unseen prepositions go to the noun.
    pub fn most_likely(&self, q: &Quadruple) -> Attachment {
        let c = self.get(q.p());
        if c.noun >= c.verb {
            Attachment::Noun
        } else {
            Attachment::Verb
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HindleRoothDecision {
    Noun,
    Verb,
    Indefinite,
}

impl HindleRoothDecision {
    pub fn attachment(self) -> Option<Attachment> {
        match self {
            HindleRoothDecision::Noun => Some(Attachment::Noun),
            HindleRoothDecision::Verb => Some(Attachment::Verb),
            HindleRoothDecision::Indefinite => None,
        }
    }
}

/// Supervised lexical-association test: compare `f(1,n1,p) / f(1,n1)`
/// against `f(0,v,p) / f(0,v)` as exact fractions.
pub fn hindle_rooth_decide(m: &CountModel, q: &Quadruple) -> HindleRoothDecision {
    let n1 = m.counts_for(TupleKind::N1, q).noun;
    let v = m.counts_for(TupleKind::V, q).verb;
    if n1 == 0 || v == 0 {
        return HindleRoothDecision::Indefinite;
    }
    let n1_p = m.counts_for(TupleKind::N1_P, q).noun;
    let v_p = m.counts_for(TupleKind::V_P, q).verb;
    let lhs = u128::from(n1_p) * u128::from(v);
    let rhs = u128::from(v_p) * u128::from(n1);
    match lhs.cmp(&rhs) {
        Ordering::Greater => HindleRoothDecision::Noun,
        Ordering::Less => HindleRoothDecision::Verb,
        Ordering::Equal => HindleRoothDecision::Indefinite,
    }
}

/// Backed-off estimate from the `(v,p)` and `(n1,p)` counts only.
pub fn backed_off_pair_decide(m: &CountModel, q: &Quadruple) -> Result<Attachment> {
    let vp = m.counts_for(TupleKind::V_P, q);
    let n1p = m.counts_for(TupleKind::N1_P, q);
    let num = vp.noun + n1p.noun;
    let den = vp.total() + n1p.total();
    if den == 0 {
        return Err(Error::Undefined);
    }
    Ok(if 2 * num >= den {
        Attachment::Noun
    } else {
        Attachment::Verb
    })
}

/// Test items on which the Hindle-Rooth test gives a definite answer.
pub fn restrict_hr_testset(m: &CountModel, test: &Corpus) -> Corpus {
    test.iter()
        .filter(|x| hindle_rooth_decide(m, &x.quad) != HindleRoothDecision::Indefinite)
        .cloned()
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    AlwaysNoun,
    MostLikelyPreposition,
    HindleRooth,
    PairBackoff,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "noun" => Ok(Method::AlwaysNoun),
            "prep" => Ok(Method::MostLikelyPreposition),
            "hindle-rooth" => Ok(Method::HindleRooth),
            "pair-backoff" => Ok(Method::PairBackoff),
            _ => Err(format!("unknown baseline method {s:?}")),
        }
    }
}

/// Accuracy of a baseline on a test set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BaselineReport {
    pub total: u64,
    pub correct: u64,
    /// Items the method could not decide; scored as noun attachment.
    pub undecided: u64,
}

impl BaselineReport {
    pub fn accuracy(&self) -> crate::eval::Accuracy {
        crate::eval::Accuracy::new(self.correct, self.total)
    }
}

impl std::fmt::Display for BaselineReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "total={} correct={} accuracy={} undecided={}",
            self.total,
            self.correct,
            self.accuracy(),
            self.undecided
        )
    }
}

pub fn score(method: Method, m: &CountModel, test: &Corpus) -> BaselineReport {
    let table = PrepositionTable::from_model(m);
    let mut r = BaselineReport::default();
    for x in test {
        let guess = match method {
            Method::AlwaysNoun => Some(always_noun(&x.quad)),
            Method::MostLikelyPreposition => Some(table.most_likely(&x.quad)),
            Method::HindleRooth => hindle_rooth_decide(m, &x.quad).attachment(),
            Method::PairBackoff => backed_off_pair_decide(m, &x.quad).ok(),
        };
        let guess = guess.unwrap_or_else(|| {
            r.undecided += 1;
            Attachment::Noun
        });
        r.total += 1;
        r.correct += u64::from(guess == x.attachment);
    }
    r
}
