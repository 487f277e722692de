//! Synthetic corpora for benchmarking.

use ppattach::{Attachment, Corpus, Quadruple, Quintuple};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Vocabulary sizes per slot; prepositions are few, nouns and verbs many.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub verbs: usize,
    pub nouns: usize,
    pub preps: usize,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            verbs: 2000,
            nouns: 5000,
            preps: 60,
        }
    }
}

/// Skewed index in `0..n`: squaring a uniform draw favours low indices,
/// giving a long tail of rare words.
fn skewed(rng: &mut StdRng, n: usize) -> usize {
    let u: f64 = rng.random();
    ((u * u) * n as f64) as usize % n
}

/// `n` labeled items drawn deterministically from `seed`.
pub fn synthetic_corpus(n: usize, shape: Shape, seed: u64) -> Corpus {
    let mut rng = StdRng::seed_from_u64(seed);
    let items = (0..n)
        .map(|_| {
            let v = skewed(&mut rng, shape.verbs);
            let n1 = skewed(&mut rng, shape.nouns);
            let p = skewed(&mut rng, shape.preps);
            let n2 = skewed(&mut rng, shape.nouns);
            // Label depends mostly on the preposition, partly on the verb.
            let noun = !p.is_multiple_of(3) ^ v.is_multiple_of(7) ^ rng.random_bool(0.1);
            let label = if noun { Attachment::Noun } else { Attachment::Verb };
            let q = Quadruple::new(
                format!("v{v}"),
                format!("n{n1}"),
                format!("p{p}"),
                format!("n{n2}"),
            )
            .expect("generated tokens are valid");
            Quintuple::new(label, q)
        })
        .collect();
    Corpus::new(items)
}
