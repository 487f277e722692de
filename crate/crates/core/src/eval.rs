//! Scoring against gold labels, per-stage breakdowns, and ablations.

use std::cmp::Ordering;
use std::fmt;

use crate::backoff::{decide, estimate_single_tuple, BackoffConfig, Stage};
use crate::corpus::Corpus;
use crate::counts::{CountModel, TupleKind};

/// `correct` out of `total`, kept as integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Accuracy {
    pub correct: u64,
    pub total: u64,
}

impl Accuracy {
    pub fn new(correct: u64, total: u64) -> Self {
        Accuracy { correct, total }
    }

    /// Percentage, or `None` for an empty bucket.
    pub fn percent(&self) -> Option<f64> {
        (self.total > 0).then(|| 100.0 * self.correct as f64 / self.total as f64)
    }

    /// Compares defined accuracies exactly; undefined sorts below everything.
    pub fn cmp_exact(&self, other: &Accuracy) -> Ordering {
        match (self.total, other.total) {
            (0, 0) => Ordering::Equal,
            (0, _) => Ordering::Less,
            (_, 0) => Ordering::Greater,
            _ => (u128::from(self.correct) * u128::from(other.total))
                .cmp(&(u128::from(other.correct) * u128::from(self.total))),
        }
    }
}

impl fmt::Display for Accuracy {
    /// One decimal place; undefined accuracies print a dash.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.percent() {
            Some(p) => write!(f, "{p:.1}"),
            None => f.write_str("—"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StageRow {
    pub stage: Stage,
    pub total: u64,
    pub correct: u64,
}

impl StageRow {
    pub fn accuracy(&self) -> Accuracy {
        Accuracy::new(self.correct, self.total)
    }
}

/// Per-stage and overall accuracy of the backed-off decision.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvalReport {
    rows: [StageRow; 5],
}

impl Default for EvalReport {
    fn default() -> Self {
        EvalReport {
            rows: Stage::ALL.map(|stage| StageRow {
                stage,
                total: 0,
                correct: 0,
            }),
        }
    }
}

impl EvalReport {
    pub fn rows(&self) -> &[StageRow; 5] {
        &self.rows
    }

    pub fn row(&self, stage: Stage) -> StageRow {
        self.rows[stage.index()]
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().map(|r| r.total).sum()
    }

    pub fn correct(&self) -> u64 {
        self.rows.iter().map(|r| r.correct).sum()
    }

    pub fn accuracy(&self) -> Accuracy {
        Accuracy::new(self.correct(), self.total())
    }

    /// `total=<n> correct=<n> accuracy=<x.x>`
    pub fn summary_line(&self) -> String {
        format!(
            "total={} correct={} accuracy={}",
            self.total(),
            self.correct(),
            self.accuracy()
        )
    }
}

impl fmt::Display for EvalReport {
    /// Per-stage table followed by the summary line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<12}{:>8}{:>9}{:>9}", "Stage", "Total", "Correct", "Percent")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<12}{:>8}{:>9}{:>9}",
                r.stage.label(),
                r.total,
                r.correct,
                r.accuracy().to_string()
            )?;
        }
        writeln!(
            f,
            "{:<12}{:>8}{:>9}{:>9}",
            "Totals",
            self.total(),
            self.correct(),
            self.accuracy().to_string()
        )?;
        writeln!(f, "{}", self.summary_line())
    }
}

pub fn evaluate(m: &CountModel, test: &Corpus, cfg: &BackoffConfig) -> EvalReport {
    let mut report = EvalReport::default();
    for x in test {
        let (label, est) = decide(m, &x.quad, cfg);
        let row = &mut report.rows[est.stage().index()];
        row.total += 1;
        row.correct += u64::from(label == x.attachment);
    }
    report
}

/// Evaluates after zeroing every sub-tuple seen fewer than `threshold` times.
pub fn ablate_cutoff(m: &CountModel, test: &Corpus, threshold: u64, cfg: &BackoffConfig) -> EvalReport {
    evaluate(&m.apply_cutoff(threshold), test, cfg)
}

/// Accuracy of one tuple kind used alone at its stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TupleAccuracy {
    pub kind: TupleKind,
    /// Over the test items decided by the modified stage.
    pub accuracy: Accuracy,
}

/// Accuracy on the items where the single-tuple stage for `kind` produced
/// the estimate. Returns `None` for the quadruple kind.
pub fn ablate_tuple(
    m: &CountModel,
    test: &Corpus,
    kind: TupleKind,
    cfg: &BackoffConfig,
) -> Option<TupleAccuracy> {
    if kind == TupleKind::QUADRUPLE {
        return None;
    }
    let mut acc = Accuracy::default();
    for x in test {
        let r = estimate_single_tuple(m, &x.quad, kind, cfg)?;
        if r.from_tuple {
            acc.total += 1;
            acc.correct += u64::from(r.estimate.decision() == x.attachment);
        }
    }
    Some(TupleAccuracy { kind, accuracy: acc })
}

/// All 14 non-quadruple kinds, best first. Undefined accuracies sort last;
/// ties keep canonical kind order.
pub fn rank_tuples(m: &CountModel, dev: &Corpus, cfg: &BackoffConfig) -> Vec<TupleAccuracy> {
    let mut ranked: Vec<TupleAccuracy> = TupleKind::ALL
        .into_iter()
        .filter_map(|k| ablate_tuple(m, dev, k, cfg))
        .collect();
    ranked.sort_by(|a, b| b.accuracy.cmp_exact(&a.accuracy).then(a.kind.cmp(&b.kind)));
    ranked
}
