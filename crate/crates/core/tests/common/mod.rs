#![allow(dead_code)]

pub mod oracle;

use knot_atoms::cli::{parse_corpus, CorpusEntry, BUNDLED_CORPUS};
use knot_atoms::diagram::{parse_pd, Diagram};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

pub fn corpus() -> Vec<(CorpusEntry, Diagram)> {
    parse_corpus(BUNDLED_CORPUS)
        .into_iter()
        .map(|e| {
            let e = e.expect("bundled corpus line");
            let d = parse_pd(&e.pd_text).expect("bundled corpus PD");
            (e, d)
        })
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
