#![allow(dead_code)]

use altlab::algebra::{language_from_regex, syntactic_morphism, ContentMorphism, RecognizedLanguage, DEFAULT_MONOID_CAP};
use altlab::frontend::Dfa;
use altlab::Alphabet;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const CONTAINS_A: &str = "(a+b)*a(a+b)*";

pub fn lang(regex: &str, alphabet: &str) -> RecognizedLanguage {
    language_from_regex(regex, &Alphabet::parse(alphabet).unwrap(), DEFAULT_MONOID_CAP).unwrap()
}

pub fn beta(regex: &str, alphabet: &str) -> ContentMorphism {
    ContentMorphism::new(lang(regex, alphabet).morphism)
}

pub fn random_dfa(rng: &mut StdRng, max_states: usize) -> Dfa {
    let states = rng.gen_range(1..=max_states);
    let finals = (0..states).map(|_| rng.gen_bool(0.5)).collect();
    let transitions = (0..states * 2).map(|_| rng.gen_range(0..states)).collect();
    Dfa::new(Alphabet::parse("ab").unwrap(), 0, finals, transitions).unwrap()
}

/// Minimal DFAs over `{a,b}` with at most `max_states` states, deduplicated.
pub fn random_minimal_dfas(seed: u64, count: usize, max_states: usize) -> Vec<Dfa> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out: Vec<Dfa> = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 200 {
        attempts += 1;
        let d = random_dfa(&mut rng, max_states).minimize();
        if !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

pub fn corpus(seed: u64, count: usize, max_states: usize) -> Vec<RecognizedLanguage> {
    random_minimal_dfas(seed, count, max_states)
        .iter()
        .map(|d| syntactic_morphism(d, DEFAULT_MONOID_CAP).unwrap())
        .collect()
}

/// Languages used by the worked examples and the small cross-checks.
pub const SMALL: &[(&str, &str)] = &[
    (CONTAINS_A, "ab"),
    ("b*", "ab"),
    ("a(aa)*", "a"),
    ("(ab)*", "ab"),
    ("a*b*", "ab"),
    ("(a+b)*ab(a+b)*", "ab"),
    ("a(a+b)*", "ab"),
    ("(a+b)*a", "ab"),
    ("a*ba*", "ab"),
];
