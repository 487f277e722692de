//! Property checks shared by the `properties` tests and the acceptance
//! harness. Each runs a seeded proptest runner and reports the shrunk
//! counterexample on failure.

use std::fmt::Debug;

use super::*;
use ppattach::baselines::{self, HindleRoothDecision, Method};
use ppattach::eval::{ablate_cutoff, evaluate};
use ppattach::normalize::{normalize_quintuple, NormalizeConfig, Rule, RuleSet};
use ppattach::{
    decide, estimate, estimate_single_tuple, Attachment, BackoffConfig, Combination, Corpus, CountModel,
    Estimate, Quadruple, Quintuple, Stage, StageSet, SubTuple, TupleKind,
};
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub type Outcome = Result<(), String>;

pub fn check<S>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome
where
    S: Strategy,
    S::Value: Debug,
{
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn slots(kind: TupleKind) -> Vec<usize> {
    kind.slots().map(|s| s.index()).collect()
}

pub fn arb_config() -> impl Strategy<Value = BackoffConfig> {
    (
        prop::array::uniform4(0u64..4),
        any::<bool>(),
        prop::collection::vec(any::<bool>(), 4),
    )
        .prop_map(|(cutoffs, avg, neutral)| BackoffConfig {
            cutoffs,
            combination: if avg {
                Combination::SimpleAverage
            } else {
                Combination::WeightedSum
            },
            neutral_stages: Stage::ALL[..4]
                .iter()
                .zip(neutral)
                .filter(|(_, on)| *on)
                .map(|(s, _)| *s)
                .collect(),
        })
}

fn same_fraction(est: &Estimate, r: &RefEstimate) -> bool {
    let (n, d) = est.p_noun_exact();
    n * r.den == r.num * d
}

fn label(noun: bool) -> Attachment {
    if noun {
        Attachment::Noun
    } else {
        Attachment::Verb
    }
}

// ---- oracle equivalence ----

/// Every f / f_joint query, on the corpus's own quadruples and on fresh ones.
pub fn counts_match_recount(cases: u32) -> Outcome {
    check(
        cases,
        (arb_corpus(50), prop::collection::vec(arb_quad(5), 5)),
        |(corpus, extra)| {
            let m = CountModel::train(&corpus);
            for q in corpus.iter().map(|x| x.quad.clone()).chain(extra) {
                for kind in TupleKind::ALL {
                    let x = SubTuple::project(kind, &q);
                    let (noun, total) = recount(&corpus, &q, &slots(kind));
                    prop_assert_eq!(m.f(&x), total);
                    prop_assert_eq!(m.f_joint(Attachment::Noun, &x), noun);
                    prop_assert_eq!(m.f_joint(Attachment::Verb, &x), total - noun);
                }
            }
            Ok(())
        },
    )
}

pub fn estimate_matches_reference(cases: u32) -> Outcome {
    check(
        cases,
        (
            arb_corpus(50),
            prop::collection::vec(arb_quad(5), 20),
            arb_config(),
        ),
        |(corpus, queries, cfg)| {
            let m = CountModel::train(&corpus);
            let rc = RefConfig::from_lib(&cfg);
            for q in corpus.iter().map(|x| x.quad.clone()).chain(queries) {
                let est = estimate(&m, &q, &cfg);
                let r = reference_estimate(&corpus, &q, &rc, None);
                prop_assert_eq!(est.stage().index(), r.stage, "{}", q);
                prop_assert!(same_fraction(&est, &r), "{} {:?} {:?}", q, est, r);
                prop_assert_eq!(est.decision() == Attachment::Noun, r.is_noun());
            }
            Ok(())
        },
    )
}

pub fn single_tuple_matches_reference(cases: u32) -> Outcome {
    check(
        cases,
        (arb_corpus(30), prop::collection::vec(arb_quad(5), 10), 1usize..15),
        |(corpus, queries, kind_ix)| {
            let kind = TupleKind::ALL[kind_ix];
            let m = CountModel::train(&corpus);
            let cfg = BackoffConfig::default();
            let rc = RefConfig::from_lib(&cfg);
            let stage = Stage::for_kind(kind).index();
            let kslots = slots(kind);
            for q in &queries {
                let got = estimate_single_tuple(&m, q, kind, &cfg).unwrap();
                let r = reference_estimate(&corpus, q, &rc, Some((stage, &kslots)));
                prop_assert_eq!(got.estimate.stage().index(), r.stage);
                prop_assert!(same_fraction(&got.estimate, &r));
                prop_assert_eq!(got.from_tuple, r.stage == stage);
            }
            Ok(())
        },
    )
}

// ---- invariants ----

pub fn probability_in_range(cases: u32) -> Outcome {
    check(
        cases,
        (arb_corpus(40), arb_quad(5), arb_config()),
        |(corpus, q, cfg)| {
            let m = CountModel::train(&corpus);
            let est = estimate(&m, &q, &cfg);
            prop_assert!((0.0..=1.0).contains(&est.p_noun()));
            if est.stage() == Stage::Default {
                prop_assert_eq!(est.p_noun_exact(), (1, 1));
            }
            prop_assert_eq!(est, estimate(&m, &q, &cfg));
            Ok(())
        },
    )
}

pub fn decomposition(cases: u32) -> Outcome {
    check(cases, arb_corpus(50), |corpus| {
        let m = CountModel::train(&corpus);
        for (x, c) in m.iter() {
            prop_assert_eq!(
                m.f(x),
                m.f_joint(Attachment::Verb, x) + m.f_joint(Attachment::Noun, x)
            );
            prop_assert!(c.total() > 0);
        }
        prop_assert_eq!(m.label_totals().total(), m.n_items());
        prop_assert_eq!(m.n_items(), corpus.len() as u64);
        Ok(())
    })
}

/// Summing f(v,n1,p) over every n1 in the vocabulary gives f(v,p).
pub fn pair_totals_are_marginals(cases: u32) -> Outcome {
    check(cases, (arb_corpus(50), arb_quad(5)), |(corpus, q)| {
        let m = CountModel::train(&corpus);
        let pair = SubTuple::project(TupleKind::V_P, &q);
        let sum: u64 = VOCAB
            .iter()
            .map(|n1| {
                let words = vec![q.v().into(), n1.to_string(), q.p().into()];
                m.f(&SubTuple::new(TupleKind::V_N1_P, words).unwrap())
            })
            .sum();
        prop_assert_eq!(sum, m.f(&pair));
        Ok(())
    })
}

pub fn training_order_independent(cases: u32) -> Outcome {
    check(
        cases,
        arb_corpus(40).prop_map(Corpus::into_items).prop_shuffle(),
        |items| {
            let mut sorted = items.clone();
            sorted.sort_by_key(|x| x.to_string());
            prop_assert_eq!(
                CountModel::train(&Corpus::new(items)),
                CountModel::train(&Corpus::new(sorted))
            );
            Ok(())
        },
    )
}

pub fn corpus_round_trip(cases: u32) -> Outcome {
    check(cases, arb_corpus(30), |corpus| {
        prop_assert_eq!(Corpus::parse(&corpus.to_string()).unwrap(), corpus);
        Ok(())
    })
}

pub fn model_round_trip(cases: u32) -> Outcome {
    check(cases, (arb_corpus(40), 0u64..4), |(corpus, c)| {
        let m = CountModel::train(&corpus).apply_cutoff(c);
        prop_assert_eq!(CountModel::parse(&m.to_text()).unwrap(), m);
        Ok(())
    })
}

pub fn cutoff_idempotent_and_monotone(cases: u32) -> Outcome {
    check(cases, (arb_corpus(50), 0u64..6), |(corpus, c)| {
        let m = CountModel::train(&corpus);
        let once = m.apply_cutoff(c);
        prop_assert_eq!(once.apply_cutoff(c), once.clone());
        for (x, counts) in m.iter() {
            let after = once.counts(x);
            prop_assert!(after.noun <= counts.noun && after.verb <= counts.verb);
            prop_assert_eq!(after == counts, counts.total() >= c);
        }
        prop_assert_eq!(once.label_totals(), m.label_totals());
        Ok(())
    })
}

pub fn raising_cutoffs_never_moves_stage_earlier(cases: u32) -> Outcome {
    check(
        cases,
        (
            arb_corpus(40),
            arb_quad(5),
            prop::array::uniform4(0u64..3),
            prop::array::uniform4(0u64..3),
        ),
        |(corpus, q, base, bump)| {
            let m = CountModel::train(&corpus);
            let lo = BackoffConfig {
                cutoffs: base,
                ..Default::default()
            };
            let hi = BackoffConfig {
                cutoffs: [0, 1, 2, 3].map(|i| base[i] + bump[i]),
                ..Default::default()
            };
            prop_assert!(estimate(&m, &q, &hi).stage() >= estimate(&m, &q, &lo).stage());
            Ok(())
        },
    )
}

pub fn stage_soundness(cases: u32) -> Outcome {
    check(
        cases,
        (arb_corpus(40), arb_quad(5), arb_config()),
        |(corpus, q, cfg)| {
            let m = CountModel::train(&corpus);
            let est = estimate(&m, &q, &cfg);
            let pooled = |s: Stage| -> (u64, u64) {
                s.kinds().iter().fold((0, 0), |(n, t), &k| {
                    let c = m.counts_for(k, &q);
                    (n + c.noun, t + c.total())
                })
            };
            // Every stage before the chosen one was either too thin or neutral.
            for s in &Stage::ALL[..est.stage().index()] {
                let (noun, total) = pooled(*s);
                let thin = total <= cfg.cutoffs[s.index()];
                let neutral_weighted = 2 * noun == total;
                let skippable = thin
                    || (cfg.neutral_stages.contains(*s)
                        && (cfg.combination == Combination::SimpleAverage || neutral_weighted));
                prop_assert!(skippable, "stage {} was skipped without cause", s);
            }
            if est.stage() != Stage::Default {
                let (_, total) = pooled(est.stage());
                prop_assert!(total > cfg.cutoffs[est.stage().index()]);
            }
            Ok(())
        },
    )
}

pub fn decision_is_half_threshold(cases: u32) -> Outcome {
    check(
        cases,
        (arb_corpus(40), arb_quad(5), arb_config()),
        |(corpus, q, cfg)| {
            let m = CountModel::train(&corpus);
            let (label, est) = decide(&m, &q, &cfg);
            let (n, d) = est.p_noun_exact();
            prop_assert_eq!(label == Attachment::Noun, 2 * n >= d);
            Ok(())
        },
    )
}

/// Three triples each seen exactly k times: weighted sum and simple average coincide.
pub fn combinations_agree_on_equal_totals(cases: u32) -> Outcome {
    check(cases, (1u64..4, prop::array::uniform3(0u64..4)), |(k, nouns)| {
        let mut items = Vec::new();
        let fills = [["v", "n", "x1"], ["v", "y2", "d"], ["y3", "n", "d"]];
        for (f, noun) in fills.iter().zip(nouns) {
            for i in 0..k {
                let q = Quadruple::new(f[0], f[1], "of", f[2]).unwrap();
                items.push(Quintuple::new(label(i < noun.min(k)), q));
            }
        }
        let m = CountModel::train(&Corpus::new(items));
        let q = Quadruple::new("v", "n", "of", "d").unwrap();
        let w = BackoffConfig {
            neutral_stages: StageSet::EMPTY,
            ..Default::default()
        };
        let a = BackoffConfig {
            combination: Combination::SimpleAverage,
            ..w
        };
        let (ew, ea) = (estimate(&m, &q, &w), estimate(&m, &q, &a));
        prop_assert_eq!(ew.stage(), Stage::Triple);
        prop_assert_eq!(ew, ea);
        Ok(())
    })
}

pub fn evaluation_conserves_items(cases: u32) -> Outcome {
    check(
        cases,
        (
            arb_corpus(40),
            arb_corpus(30).prop_map(Corpus::into_items).prop_shuffle(),
        ),
        |(train, test)| {
            let m = CountModel::train(&train);
            let cfg = BackoffConfig::default();
            let shuffled = Corpus::new(test.clone());
            let mut sorted = test;
            sorted.sort_by_key(|x| x.to_string());
            let r = evaluate(&m, &shuffled, &cfg);
            prop_assert_eq!(r.total(), shuffled.len() as u64);
            prop_assert_eq!(r.clone(), evaluate(&m, &Corpus::new(sorted), &cfg));
            prop_assert_eq!(ablate_cutoff(&m, &shuffled, 0, &cfg), r);
            Ok(())
        },
    )
}

pub fn always_noun_is_label_proportion(cases: u32) -> Outcome {
    check(cases, arb_corpus(40), |test| {
        let r = baselines::score(Method::AlwaysNoun, &CountModel::default(), &test);
        let nouns = test.iter().filter(|x| x.attachment == Attachment::Noun).count() as u64;
        prop_assert_eq!((r.correct, r.total), (nouns, test.len() as u64));
        Ok(())
    })
}

pub fn restricted_set_properties(cases: u32) -> Outcome {
    check(cases, (arb_corpus(50), arb_corpus(40)), |(train, test)| {
        let m = CountModel::train(&train);
        let r = baselines::restrict_hr_testset(&m, &test);
        let mut rest = test.iter();
        for x in &r {
            prop_assert!(rest.any(|y| y == x), "not an ordered subsequence");
            prop_assert!(baselines::backed_off_pair_decide(&m, &x.quad).is_ok());
        }
        Ok(())
    })
}

pub fn hindle_rooth_is_scale_invariant(cases: u32) -> Outcome {
    check(
        cases,
        (prop::array::uniform4(0u64..5), 1u64..4),
        |(counts, scale)| {
            let [n1p, n1x, vp, vx] = counts;
            let build = |s: u64| {
                let mut items = Vec::new();
                let mut push = |a, v: &str, n1: &str, p: &str, times: u64| {
                    for i in 0..times * s {
                        items.push(Quintuple::new(
                            a,
                            Quadruple::new(v, n1, p, format!("z{i}")).unwrap(),
                        ));
                    }
                };
                push(Attachment::Noun, "fv", "n", "of", n1p);
                push(Attachment::Noun, "fv", "n", "to", n1x);
                push(Attachment::Verb, "v", "fn", "of", vp);
                push(Attachment::Verb, "v", "fn", "to", vx);
                CountModel::train(&Corpus::new(items))
            };
            let q = Quadruple::new("v", "n", "of", "w").unwrap();
            let base = baselines::hindle_rooth_decide(&build(1), &q);
            prop_assert_eq!(base, baselines::hindle_rooth_decide(&build(scale), &q));
            if n1p + n1x == 0 || vp + vx == 0 {
                prop_assert_eq!(base, HindleRoothDecision::Indefinite);
            }
            Ok(())
        },
    )
}

// ---- normalization ----

pub fn arb_token() -> impl Strategy<Value = String> {
    prop_oneof![
        "[a-z]{1,10}",
        "[A-Z][a-z]{1,6}",
        "[A-Z][a-z]{1,5}-[A-Z][a-z]{1,5}",
        "[0-9]{1,6}",
        "[0-9,.]{1,6}",
        "[A-Za-z0-9,.-]{1,8}",
        "[a-z]{2,8}(ed|ing|s|es|ies|ied)",
        Just("NAME-NAME".to_string()),
        Just("YEAR".to_string()),
    ]
}

fn arb_rules() -> impl Strategy<Value = RuleSet> {
    prop::collection::vec(any::<bool>(), 6).prop_map(|bits| {
        Rule::ALL
            .into_iter()
            .zip(bits)
            .fold(RuleSet::NONE, |s, (r, on)| if on { s.with(r) } else { s })
    })
}

pub fn normalization_idempotent(cases: u32) -> Outcome {
    check(
        cases,
        (prop::array::uniform4(arb_token()), any::<bool>(), arb_rules()),
        |(words, noun, rules)| {
            let x = Quintuple::new(label(noun), Quadruple::from_words(words).unwrap());
            for cfg in [
                NormalizeConfig::default(),
                NormalizeConfig {
                    rules,
                    ..Default::default()
                },
            ] {
                let once = normalize_quintuple(&x, &cfg);
                prop_assert_eq!(once.attachment, x.attachment);
                prop_assert_eq!(normalize_quintuple(&once, &cfg), once);
            }
            Ok(())
        },
    )
}

pub fn disabled_rule_leaves_its_tokens(cases: u32) -> Outcome {
    check(cases, prop::array::uniform4(arb_token()), |words| {
        let x = Quintuple::new(Attachment::Noun, Quadruple::from_words(words.clone()).unwrap());
        let cfg = |rules: RuleSet| NormalizeConfig {
            rules,
            ..Default::default()
        };
        let without = |r: Rule| cfg(RuleSet::ALL.without(r));
        let numeric = |t: &str| {
            t.bytes().any(|b| b.is_ascii_digit())
                && t.bytes().all(|b| b.is_ascii_digit() || b == b',' || b == b'.')
        };
        let had = |needle: &str| words.iter().any(|w| w.contains(needle));

        let out = normalize_quintuple(&x, &without(Rule::Year));
        if !had("YEAR") {
            prop_assert!(!out.quad.words().iter().any(|w| w.contains("YEAR")));
        }
        let out = normalize_quintuple(&x, &without(Rule::Num));
        if !had("NUM") {
            prop_assert!(!out.quad.words().iter().any(|w| w.contains("NUM")));
        }
        let out = normalize_quintuple(&x, &without(Rule::Name));
        if !had("NAME") {
            prop_assert!(!out.quad.n1().contains("NAME") && !out.quad.n2().contains("NAME"));
        }
        let out = normalize_quintuple(
            &x,
            &cfg(RuleSet::ALL.without(Rule::Lowercase).without(Rule::Stem)),
        );
        for (i, w) in [(0, out.quad.v()), (2, out.quad.p())] {
            if !numeric(&words[i]) {
                prop_assert_eq!(w, words[i].as_str());
            }
        }
        let out = normalize_quintuple(&x, &without(Rule::Stem));
        if !numeric(&words[0]) {
            prop_assert_eq!(out.quad.v(), words[0].to_lowercase());
        }
        Ok(())
    })
}
