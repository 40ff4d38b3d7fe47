mod common;

use altlab::algebra::RecognizedLanguage;
use altlab::deciders::{classify, decide_pi, decide_separation, decide_sigma, Class, Logic};
use altlab::oracle::all_words;

fn is_subword(v: &[usize], w: &[usize]) -> bool {
    let mut it = w.iter();
    v.iter().all(|a| it.any(|b| b == a))
}

/// Some `v ⊑ w` with `v` accepted and `w` rejected, among words up to `n`.
fn upward_failure(l: &RecognizedLanguage, n: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let words = all_words(2, n);
    for v in words.iter().filter(|v| l.accepts(v)) {
        for w in words.iter().filter(|w| !l.accepts(w)) {
            if is_subword(v, w) {
                return Some((v.clone(), w.clone()));
            }
        }
    }
    None
}

#[test]
fn sigma1_is_upward_closure() {
    for l in common::corpus(31, 80, 3) {
        let sigma1 = decide_sigma(&l, 1).unwrap().decision;
        assert_eq!(sigma1, upward_failure(&l, 7).is_none());
        let pi1 = decide_pi(&l, 1).unwrap().decision;
        assert_eq!(pi1, upward_failure(&l.complement(), 7).is_none());
    }
}

#[test]
fn pi_is_sigma_of_the_complement() {
    for l in common::corpus(32, 60, 3) {
        let co = l.complement();
        for i in 1..=3 {
            assert_eq!(decide_pi(&l, i).unwrap().decision, decide_sigma(&co, i).unwrap().decision);
        }
        let a = classify(&l).unwrap();
        let b = classify(&co).unwrap();
        for i in 1..=3 {
            assert_eq!(a.decision(Class::Sigma(i)), b.decision(Class::Pi(i)));
            assert_eq!(a.decision(Class::Delta(i)), b.decision(Class::Delta(i)));
        }
        assert_eq!(a.decision(Class::BSigma2), b.decision(Class::BSigma2));
        assert_eq!(a.decision(Class::FO), b.decision(Class::FO));
    }
}

#[test]
fn separation_symmetry() {
    let corpus = common::corpus(33, 12, 3);
    for l1 in &corpus {
        for l2 in &corpus {
            let sigma = decide_separation(l1, l2, Logic::Sigma2).unwrap();
            let pi = decide_separation(l2, l1, Logic::Pi2).unwrap();
            assert_eq!(sigma.decision, pi.decision);
            // overlapping languages are never separable
            let overlap = all_words(2, 6).iter().any(|w| l1.accepts(w) && l2.accepts(w));
            if overlap {
                assert!(!sigma.decision);
            }
            // a Sigma2 language separates itself from anything disjoint
            if !overlap && decide_sigma(l1, 2).unwrap().decision {
                assert!(sigma.decision);
            }
        }
    }
}

#[test]
fn classify_agrees_with_single_deciders() {
    for (regex, alphabet) in common::SMALL {
        let l = common::lang(regex, alphabet);
        let report = classify(&l).unwrap();
        for i in 1..=3 {
            assert_eq!(report.decision(Class::Sigma(i)), decide_sigma(&l, i).unwrap().decision);
            assert_eq!(report.decision(Class::Pi(i)), decide_pi(&l, i).unwrap().decision);
        }
        assert_eq!(report, classify(&l).unwrap());
    }
}
