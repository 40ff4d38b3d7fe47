use std::str::FromStr;

use crate::algebra::{product_morphism, ContentMorphism, RecognizedLanguage};
use crate::alphabet::LetterSet;
use crate::chains::{saturate_with, Chain, SaturationOptions};
use crate::error::{Error, Result};

use super::verdict::{Verdict, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Logic {
    Sigma2,
    Pi2,
}

impl FromStr for Logic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sigma2" => Ok(Logic::Sigma2),
            "pi2" => Ok(Logic::Pi2),
            _ => Err(Error::InvalidArgument(format!("unknown logic '{s}' (sigma2 or pi2)"))),
        }
    }
}

pub fn decide_separation(l1: &RecognizedLanguage, l2: &RecognizedLanguage, logic: Logic) -> Result<Verdict> {
    decide_separation_with(l1, l2, logic, &SaturationOptions::default())
}

/// Whether some formula of `logic` accepts every word of `l1` and no word
/// of `l2`. With `α` recognizing both languages through accepting sets
/// `F1`, `F2`: for `Σ2` this fails iff some chain `(s1, s2)` has
/// `s1 ∈ F1`, `s2 ∈ F2`; for `Π2` iff some chain `(s2, s1)` does.
pub fn decide_separation_with(
    l1: &RecognizedLanguage,
    l2: &RecognizedLanguage,
    logic: Logic,
    options: &SaturationOptions,
) -> Result<Verdict> {
    let product = product_morphism(l1, l2)?;
    let (f1, f2) = (&product.first, &product.second);
    if !f1.iter().any(|&x| x) || !f2.iter().any(|&x| x) {
        return Ok(Verdict::yes());
    }
    let beta = ContentMorphism::new(product.morphism.clone());
    let family = saturate_with(&beta, 2, options)?;
    let alphabet = beta.alphabet();
    for b in LetterSet::all_by_size(alphabet.len()) {
        for chain in family.chains(Some(b)) {
            let (x, y) = (chain.0[0], chain.0[1]);
            let (s1, s2, hit) = match logic {
                Logic::Sigma2 => (x, y, f1[x] && f2[y]),
                Logic::Pi2 => (y, x, f1[y] && f2[x]),
            };
            if hit {
                let relation = match logic {
                    Logic::Sigma2 => "(s1, s2) is a chain with s1 in F1, s2 in F2",
                    Logic::Pi2 => "(s2, s1) is a chain with s1 in F1, s2 in F2",
                };
                let (c1, c2) = (product.components[s1], product.components[s2]);
                let mut v = Violation::new(
                    "separation",
                    relation,
                    &[("s1", s1), ("s2", s2), ("s1.first", c1.0), ("s2.second", c2.1)],
                )
                .chain(Chain::new(vec![x, y]));
                v.alphabet = Some(alphabet.render_subset(b));
                v.derivation = family.set_containing(&chain, b).map(|s| s.derivation.kind().to_string());
                return Ok(Verdict::no(v));
            }
        }
    }
    Ok(Verdict::yes())
}
