//! Test-only reference implementations. Nothing here touches the count
//! tables: every query rescans the corpus.

#![allow(dead_code)]

pub mod props;

use ppattach::{Attachment, Combination, Corpus, Quadruple, Quintuple};
use proptest::prelude::*;

/// Slot positions: 0 = v, 1 = n1, 2 = p, 3 = n2.
pub type Slots = &'static [usize];

pub const TRIPLES: [Slots; 3] = [&[0, 1, 2], &[0, 2, 3], &[1, 2, 3]];
pub const PAIRS: [Slots; 3] = [&[0, 2], &[1, 2], &[2, 3]];

fn words(q: &Quadruple) -> [&str; 4] {
    [q.v(), q.n1(), q.p(), q.n2()]
}

/// (noun count, total count) for the items agreeing with `q` on `slots`.
pub fn recount(corpus: &Corpus, q: &Quadruple, slots: &[usize]) -> (u64, u64) {
    let target = words(q);
    let mut noun = 0;
    let mut total = 0;
    for item in corpus.items() {
        let w = words(&item.quad);
        if slots.iter().all(|&s| w[s] == target[s]) {
            total += 1;
            if item.attachment == Attachment::Noun {
                noun += 1;
            }
        }
    }
    (noun, total)
}

/// Reference estimate as an unreduced fraction plus a stage index 0..=4.
#[derive(Debug, Clone, Copy)]
pub struct RefEstimate {
    pub num: u128,
    pub den: u128,
    pub stage: usize,
}

impl RefEstimate {
    pub fn is_noun(&self) -> bool {
        2 * self.num >= self.den
    }
}

pub struct RefConfig {
    pub cutoffs: [u64; 4],
    pub average: bool,
    pub neutral: [bool; 4],
}

impl RefConfig {
    pub fn from_lib(cfg: &ppattach::BackoffConfig) -> Self {
        RefConfig {
            cutoffs: cfg.cutoffs,
            average: cfg.combination == Combination::SimpleAverage,
            neutral: [0, 1, 2, 3].map(|i| cfg.neutral_stages.contains(ppattach::Stage::ALL[i])),
        }
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Straight transcription of the five-stage algorithm. `replace` swaps the
/// tuple list of one stage for a single tuple.
pub fn reference_estimate(
    corpus: &Corpus,
    q: &Quadruple,
    cfg: &RefConfig,
    replace: Option<(usize, &[usize])>,
) -> RefEstimate {
    let quad: [Slots; 1] = [&[0, 1, 2, 3]];
    let single: [Slots; 1] = [&[2]];
    let stages: [&[Slots]; 4] = [&quad, &TRIPLES, &PAIRS, &single];
    for (i, tuples) in stages.iter().enumerate() {
        let counts: Vec<(u64, u64)> = match replace {
            Some((s, slots)) if s == i => vec![recount(corpus, q, slots)],
            _ => tuples.iter().map(|t| recount(corpus, q, t)).collect(),
        };
        let total: u64 = counts.iter().map(|c| c.1).sum();
        if total <= cfg.cutoffs[i] {
            continue;
        }
        let (num, den) = if cfg.average {
            // sum of a_k/b_k over nonzero b_k, divided by their number
            let used: Vec<_> = counts.iter().filter(|c| c.1 > 0).collect();
            let den: u128 = used.iter().map(|c| c.1 as u128).product::<u128>() * used.len() as u128;
            let num: u128 = used
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    let others: u128 = used
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != k)
                        .map(|(_, o)| o.1 as u128)
                        .product();
                    c.0 as u128 * others
                })
                .sum();
            (num, den)
        } else {
            let noun: u64 = counts.iter().map(|c| c.0).sum();
            (noun as u128, total as u128)
        };
        if cfg.neutral[i] && 2 * num == den {
            continue;
        }
        let g = gcd(num, den).max(1);
        return RefEstimate {
            num: num / g,
            den: den / g,
            stage: i,
        };
    }
    RefEstimate {
        num: 1,
        den: 1,
        stage: 4,
    }
}

pub const VOCAB: [&str; 5] = ["a", "b", "c", "d", "e"];

pub fn arb_quad(vocab: usize) -> impl Strategy<Value = Quadruple> {
    prop::array::uniform4(0..vocab)
        .prop_map(|ix| Quadruple::new(VOCAB[ix[0]], VOCAB[ix[1]], VOCAB[ix[2]], VOCAB[ix[3]]).unwrap())
}

pub fn arb_corpus(max_items: usize) -> impl Strategy<Value = Corpus> {
    (1usize..=5).prop_flat_map(move |vocab| {
        prop::collection::vec(
            (any::<bool>(), arb_quad(vocab)).prop_map(|(noun, quad)| {
                let a = if noun { Attachment::Noun } else { Attachment::Verb };
                Quintuple::new(a, quad)
            }),
            0..=max_items,
        )
        .prop_map(Corpus::new)
    })
}
