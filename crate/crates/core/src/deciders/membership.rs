use crate::algebra::{ContentMorphism, Element, RecognizedLanguage};
use crate::chains::{level1_chains, saturate_with, Chain, ChainFamily, SaturationOptions};
use crate::error::{Error, Result};

use super::verdict::{Verdict, Violation};

/// Which side of `s^ω t s^ω` must dominate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    /// `s^ω <= s^ω t s^ω`
    Sigma,
    /// `s^ω >= s^ω t s^ω`
    Pi,
    /// `s^ω = s^ω t s^ω`
    Delta,
}

impl Polarity {
    fn relation(self) -> &'static str {
        match self {
            Polarity::Sigma => "s^w <= s^w t s^w",
            Polarity::Pi => "s^w >= s^w t s^w",
            Polarity::Delta => "s^w = s^w t s^w",
        }
    }

    fn name(self) -> &'static str {
        match self {
            Polarity::Sigma => "sigma",
            Polarity::Pi => "pi",
            Polarity::Delta => "delta",
        }
    }
}

/// Checks `s^ω (rel) s^ω t s^ω` for every `(t, s)` in order and returns the
/// first failure.
pub fn check_pairs(
    l: &RecognizedLanguage,
    polarity: Polarity,
    pairs: impl IntoIterator<Item = (Element, Element)>,
) -> Result<Option<Violation>> {
    let order = l.syntactic_order()?;
    let m = l.monoid();
    for (t, s) in pairs {
        let e = m.omega(s);
        let rhs = m.product([e, t, e]);
        let holds = match polarity {
            Polarity::Sigma => order.leq(e, rhs),
            Polarity::Pi => order.leq(rhs, e),
            Polarity::Delta => e == rhs,
        };
        if !holds {
            return Ok(Some(
                Violation::new(polarity.name(), polarity.relation(), &[("t", t), ("s", s)])
                    .chain(Chain::new(vec![t, s]))
                    .sides(e, rhs),
            ));
        }
    }
    Ok(None)
}

/// `C_0`: all pairs, with `s` ranging first so that `s = 1` comes first.
pub fn level0_pairs(l: &RecognizedLanguage) -> Vec<(Element, Element)> {
    let m = l.monoid();
    let mut ss: Vec<Element> = m.elements().collect();
    ss.sort_by_key(|&s| s != m.unit());
    ss.into_iter()
        .flat_map(|s| m.elements().map(move |t| (t, s)))
        .collect()
}

pub fn level1_pairs(l: &RecognizedLanguage) -> Vec<(Element, Element)> {
    let beta = ContentMorphism::new(l.morphism.clone());
    level1_chains(&beta).into_iter().map(|c| (c.0[0], c.0[1])).collect()
}

/// Length-2 level-2 chains from a saturated family of length 2.
pub fn level2_pairs(family: &ChainFamily) -> Vec<(Element, Element)> {
    assert_eq!(family.length(), 2);
    family.chains(None).into_iter().map(|c| (c.0[0], c.0[1])).collect()
}

fn pairs_for_level(l: &RecognizedLanguage, i: usize, options: &SaturationOptions) -> Result<Vec<(Element, Element)>> {
    match i {
        1 => Ok(level0_pairs(l)),
        2 => Ok(level1_pairs(l)),
        3 => {
            let beta = ContentMorphism::new(l.morphism.clone());
            Ok(level2_pairs(&saturate_with(&beta, 2, options)?))
        }
        _ => Err(Error::InvalidArgument(format!("level {i} is not supported (1..=3)"))),
    }
}

pub fn decide_level(l: &RecognizedLanguage, i: usize, polarity: Polarity, options: &SaturationOptions) -> Result<Verdict> {
    l.syntactic_order()?;
    let pairs = pairs_for_level(l, i, options)?;
    Ok(Verdict::from_violation(check_pairs(l, polarity, pairs)?))
}

pub fn decide_sigma(l: &RecognizedLanguage, i: usize) -> Result<Verdict> {
    decide_level(l, i, Polarity::Sigma, &SaturationOptions::default())
}

pub fn decide_pi(l: &RecognizedLanguage, i: usize) -> Result<Verdict> {
    decide_level(l, i, Polarity::Pi, &SaturationOptions::default())
}

pub fn decide_delta(l: &RecognizedLanguage, i: usize) -> Result<Verdict> {
    decide_level(l, i, Polarity::Delta, &SaturationOptions::default())
}

/// Aperiodicity: `s^ω = s^ω s` for every `s`.
pub fn decide_fo(l: &RecognizedLanguage) -> Verdict {
    let m = l.monoid();
    for s in m.elements() {
        let e = m.omega(s);
        let rhs = m.mul(e, s);
        if e != rhs {
            return Verdict::no(Violation::new("aperiodicity", "s^w = s^w s", &[("s", s)]).sides(e, rhs));
        }
    }
    Verdict::yes()
}
