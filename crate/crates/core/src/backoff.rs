//! The backed-off estimate of `p(noun | v, n1, p, n2)`.
//!
//! Stages are tried in order and the first one with enough evidence wins:
//!
//! 1. the full quadruple;
//! 2. the three triples containing the preposition, counts pooled;
//! 3. the three pairs containing the preposition, counts pooled;
//! 4. the preposition alone;
//! 5. a default of noun attachment.
//!
//! A stage has enough evidence when its pooled total exceeds the stage
//! cutoff (0 by default). At stages 1 and 2 an estimate of exactly one half
//! is treated as no evidence and backing off continues.
//!
//! Probabilities are kept as exact rationals so the `>= 1/2` decision and the
//! neutral test never depend on floating point.

use std::fmt;

use num_rational::Ratio;

use crate::corpus::{Attachment, Quadruple};
use crate::counts::{CountModel, LabelCounts, TupleKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stage {
    Quadruple,
    Triple,
    Pair,
    Single,
    Default,
}

impl Stage {
    pub const ALL: [Stage; 5] = [
        Stage::Quadruple,
        Stage::Triple,
        Stage::Pair,
        Stage::Single,
        Stage::Default,
    ];

    /// Position in the backoff order, 0 for the quadruple stage.
    pub fn index(self) -> usize {
        self as usize
    }

    /// The preposition-bearing kinds consulted at this stage.
    pub fn kinds(self) -> &'static [TupleKind] {
        match self {
            Stage::Quadruple => &[TupleKind::QUADRUPLE],
            Stage::Triple => &[TupleKind::V_N1_P, TupleKind::V_P_N2, TupleKind::N1_P_N2],
            Stage::Pair => &[TupleKind::V_P, TupleKind::N1_P, TupleKind::P_N2],
            Stage::Single => &[TupleKind::P],
            Stage::Default => &[],
        }
    }

    /// The stage whose tuples have the same arity as `kind`.
    pub fn for_kind(kind: TupleKind) -> Stage {
        match kind.arity() {
            4 => Stage::Quadruple,
            3 => Stage::Triple,
            2 => Stage::Pair,
            _ => Stage::Single,
        }
    }

    /// Row label used in report tables.
    pub fn label(self) -> &'static str {
        match self {
            Stage::Quadruple => "Quadruples",
            Stage::Triple => "Triples",
            Stage::Pair => "Doubles",
            Stage::Single => "Singles",
            Stage::Default => "Defaults",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Stage::Quadruple => "quadruple",
            Stage::Triple => "triple",
            Stage::Pair => "pair",
            Stage::Single => "single",
            Stage::Default => "default",
        }
    }

    pub fn from_name(s: &str) -> Option<Stage> {
        Stage::ALL.into_iter().find(|st| st.name() == s)
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A small set of stages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct StageSet(u8);

impl StageSet {
    pub const EMPTY: StageSet = StageSet(0);

    pub fn contains(self, s: Stage) -> bool {
        self.0 & (1 << s.index()) != 0
    }

    pub fn insert(&mut self, s: Stage) {
        self.0 |= 1 << s.index();
    }

    pub fn iter(self) -> impl Iterator<Item = Stage> {
        Stage::ALL.into_iter().filter(move |&s| self.contains(s))
    }
}

impl FromIterator<Stage> for StageSet {
    fn from_iter<T: IntoIterator<Item = Stage>>(iter: T) -> Self {
        let mut set = StageSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

/// How the tuples of a multi-tuple stage are combined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Combination {
    /// Pool the counts: `sum f(1, x) / sum f(x)`.
    #[default]
    WeightedSum,
    /// Average the per-tuple ratios over tuples with a nonzero total.
    SimpleAverage,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BackoffConfig {
    /// Stage `i` is used only when its pooled total is strictly greater than
    /// `cutoffs[i]`.
    pub cutoffs: [u64; 4],
    pub combination: Combination,
    /// Stages at which an estimate of exactly 1/2 triggers further backoff.
    pub neutral_stages: StageSet,
}

impl Default for BackoffConfig {
    fn default() -> Self {
        BackoffConfig {
            cutoffs: [0; 4],
            combination: Combination::WeightedSum,
            neutral_stages: [Stage::Quadruple, Stage::Triple].into_iter().collect(),
        }
    }
}

impl BackoffConfig {
    fn cutoff(&self, stage: Stage) -> u64 {
        self.cutoffs.get(stage.index()).copied().unwrap_or(0)
    }
}

type Prob = Ratio<u128>;

/// Estimated probability of noun attachment and the stage that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Estimate {
    p_noun: Prob,
    stage: Stage,
}

impl Estimate {
    pub fn p_noun(&self) -> f64 {
        *self.p_noun.numer() as f64 / *self.p_noun.denom() as f64
    }

    /// The probability as a reduced fraction `(numerator, denominator)`.
    pub fn p_noun_exact(&self) -> (u128, u128) {
        (*self.p_noun.numer(), *self.p_noun.denom())
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    /// Noun attachment iff `p_noun >= 1/2`.
    pub fn decision(&self) -> Attachment {
        if *self.p_noun.numer() * 2 >= *self.p_noun.denom() {
            Attachment::Noun
        } else {
            Attachment::Verb
        }
    }
}

/// Result of the single-tuple variant of the algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingleTupleEstimate {
    pub estimate: Estimate,
    /// Whether the modified stage, driven by the single tuple, produced the
    /// estimate.
    pub from_tuple: bool,
}

/// Candidate probability for one stage, or `None` when the stage has too
/// little evidence.
fn stage_candidate(
    model: &CountModel,
    q: &Quadruple,
    kinds: &[TupleKind],
    cutoff: u64,
    combination: Combination,
) -> Option<Prob> {
    let counts: Vec<LabelCounts> = kinds.iter().map(|&k| model.counts_for(k, q)).collect();
    let mut pooled = LabelCounts::default();
    for c in &counts {
        pooled.add(*c);
    }
    if pooled.total() <= cutoff {
        return None;
    }
    match combination {
        Combination::WeightedSum => Some(Prob::new(pooled.noun.into(), pooled.total().into())),
        Combination::SimpleAverage => {
            let ratios: Vec<Prob> = counts
                .iter()
                .filter(|c| c.total() > 0)
                .map(|c| Prob::new(c.noun.into(), c.total().into()))
                .collect();
            let n = ratios.len() as u128;
            let sum = ratios.into_iter().fold(Prob::from_integer(0), |acc, r| acc + r);
            Some(sum / n)
        }
    }
}

fn run(
    model: &CountModel,
    q: &Quadruple,
    cfg: &BackoffConfig,
    replaced: Option<(Stage, TupleKind)>,
) -> Estimate {
    let half = Prob::new(1, 2);
    for stage in &Stage::ALL[..4] {
        let stage = *stage;
        let single;
        let kinds = match replaced {
            Some((s, kind)) if s == stage => {
                single = [kind];
                &single[..]
            }
            _ => stage.kinds(),
        };
        let Some(p) = stage_candidate(model, q, kinds, cfg.cutoff(stage), cfg.combination) else {
            continue;
        };
        if p == half && cfg.neutral_stages.contains(stage) {
            continue;
        }
        return Estimate { p_noun: p, stage };
    }
    Estimate {
        p_noun: Prob::from_integer(1),
        stage: Stage::Default,
    }
}

/// Backed-off estimate of noun attachment for `q`.
pub fn estimate(model: &CountModel, q: &Quadruple, cfg: &BackoffConfig) -> Estimate {
    run(model, q, cfg, None)
}

/// Attachment decision for `q` with the estimate behind it.
pub fn decide(model: &CountModel, q: &Quadruple, cfg: &BackoffConfig) -> (Attachment, Estimate) {
    let est = estimate(model, q, cfg);
    (est.decision(), est)
}

/// Runs the algorithm with the stage matching `kind`'s arity replaced by the
/// plain ratio `f(1, x) / f(x)` for the single tuple `x` of that kind. All
/// other stages are unchanged. Returns `None` for the quadruple kind.
pub fn estimate_single_tuple(
    model: &CountModel,
    q: &Quadruple,
    kind: TupleKind,
    cfg: &BackoffConfig,
) -> Option<SingleTupleEstimate> {
    let stage = Stage::for_kind(kind);
    if stage == Stage::Quadruple {
        return None;
    }
    let estimate = run(model, q, cfg, Some((stage, kind)));
    Some(SingleTupleEstimate {
        estimate,
        from_tuple: estimate.stage == stage,
    })
}
