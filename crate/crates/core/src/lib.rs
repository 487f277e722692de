//! Prepositional phrase attachment with a backed-off count estimator.
//!
//! Given the four head words of a `v np1 p np2` verb phrase, decide whether
//! the prepositional phrase attaches to the noun (label 1) or the verb
//! (label 0). The model is a table of training counts over every sub-tuple of
//! the quadruple; the estimate backs off from the full quadruple to
//! preposition-bearing triples, pairs, and finally the preposition alone.
//!
//! ```
//! use ppattach::{BackoffConfig, Corpus, CountModel, Quadruple, Stage};
//!
//! let train = Corpus::parse("0 joined board as director\n").unwrap();
//! let model = CountModel::train(&train);
//! let q = Quadruple::new("joined", "board", "as", "director").unwrap();
//! let est = ppattach::estimate(&model, &q, &BackoffConfig::default());
//! assert_eq!(est.stage(), Stage::Quadruple);
//! assert_eq!(est.p_noun(), 0.0);
//! ```

pub mod backoff;
pub mod baselines;
pub mod corpus;
pub mod counts;
mod error;
pub mod eval;
pub mod normalize;

pub use backoff::{
    decide, estimate, estimate_single_tuple, BackoffConfig, Combination, Estimate, SingleTupleEstimate,
    Stage, StageSet,
};
pub use corpus::{Attachment, Corpus, Quadruple, Quintuple};
pub use counts::{CountModel, LabelCounts, Slot, SubTuple, TupleKind};
pub use error::{Error, LineError, LineErrorKind, Result};
pub use eval::{Accuracy, EvalReport, StageRow, TupleAccuracy};
pub use normalize::{NormalizeConfig, Rule, RuleSet, Stemmer, StemmerKind};
