//! Length-2 chains at level 1.
//!
//! For every rank `k`, `v` satisfies the `Σ1` preorder of rank `k` with
//! respect to `w` exactly when every subword of `v` of length at most `k`
//! is a subword of `w`. Letting `k` grow, the pairs `(t, s)` realized at every
//! rank are the images of pairs `v ⊑ w` with `v` a (scattered) subword of `w`.
//! Such pairs are generated by matching a letter on both sides or inserting
//! a letter on the right only, so the relation is the submonoid of `M x M`
//! generated by `(a, a)` and `(1, a)` for every letter `a`.

use std::collections::{BTreeMap, VecDeque};

use crate::algebra::{ContentMorphism, Element};
use crate::alphabet::Word;

use super::chain::Chain;

/// A level-1 chain together with words `v ⊑ w` realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level1Witness {
    pub chain: Chain,
    pub lower: Word,
    pub upper: Word,
}

/// All length-2 level-1 chains, sorted, each with a shortest realizing pair.
pub fn level1_witnesses(beta: &ContentMorphism) -> Vec<Level1Witness> {
    let m = beta.monoid();
    let morphism = beta.morphism();
    let unit = m.unit();
    let mut found: BTreeMap<(Element, Element), (Word, Word)> = BTreeMap::new();
    found.insert((unit, unit), (Vec::new(), Vec::new()));
    let mut queue = VecDeque::from([(unit, unit)]);
    while let Some((t, s)) = queue.pop_front() {
        let (v, w) = found[&(t, s)].clone();
        for a in 0..beta.alphabet().len() {
            let img = morphism.letter_image(a);
            // letter kept on both sides, then letter inserted on the right
            for (next, keep) in [((m.mul(t, img), m.mul(s, img)), true), ((t, m.mul(s, img)), false)] {
                if found.contains_key(&next) {
                    continue;
                }
                let mut v2 = v.clone();
                if keep {
                    v2.push(a);
                }
                let mut w2 = w.clone();
                w2.push(a);
                found.insert(next, (v2, w2));
                queue.push_back(next);
            }
        }
    }
    found
        .into_iter()
        .map(|((t, s), (lower, upper))| Level1Witness {
            chain: Chain(vec![t, s]),
            lower,
            upper,
        })
        .collect()
}

/// The level-1 chain relation of length 2, sorted.
pub fn level1_chains(beta: &ContentMorphism) -> Vec<Chain> {
    level1_witnesses(beta).into_iter().map(|w| w.chain).collect()
}
