use serde_json::{json, Map, Value};

use crate::algebra::{ContentMorphism, RecognizedLanguage};
use crate::chains::{saturate_with, RankBound, SaturationOptions};
use crate::error::{Error, Result};

use super::membership::{check_pairs, decide_fo, level0_pairs, level1_pairs, level2_pairs, Polarity};
use super::schema::decide_bsigma2_with;
use super::verdict::{Class, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    /// One verdict per class, in the order of [`Class::ALL`].
    pub verdicts: Vec<(Class, Verdict)>,
    pub monoid_size: usize,
    /// `6|M| + ℓ(2)`: a rank past which level-3 equations are witnessed.
    pub level3_rank_bound: String,
}

impl ClassificationReport {
    pub fn get(&self, class: Class) -> &Verdict {
        &self
            .verdicts
            .iter()
            .find(|(c, _)| *c == class)
            .expect("every class is reported")
            .1
    }

    pub fn decision(&self, class: Class) -> bool {
        self.get(class).decision
    }

    pub fn to_json(&self) -> Value {
        let mut classes = Map::new();
        for (c, v) in &self.verdicts {
            classes.insert(c.name(), serde_json::to_value(v).expect("verdicts serialize"));
        }
        json!({
            "classes": classes,
            "monoid_size": self.monoid_size,
            "level3_rank_bound": self.level3_rank_bound,
        })
    }
}

pub fn classify(l: &RecognizedLanguage) -> Result<ClassificationReport> {
    classify_with(l, &SaturationOptions::default())
}

pub fn classify_with(l: &RecognizedLanguage, options: &SaturationOptions) -> Result<ClassificationReport> {
    l.syntactic_order()?;
    let beta = ContentMorphism::new(l.morphism.clone());
    let family3 = saturate_with(&beta, 3, &SaturationOptions { max_length: 3, ..options.clone() })?;
    let family2 = family3.lower().expect("length 3 has a lower family");
    let pairs = [level0_pairs(l), level1_pairs(l), level2_pairs(family2)];
    let mut verdicts = Vec::new();
    for (i, pairs) in pairs.iter().enumerate() {
        for (class, polarity) in [
            (Class::Sigma(i + 1), Polarity::Sigma),
            (Class::Pi(i + 1), Polarity::Pi),
            (Class::Delta(i + 1), Polarity::Delta),
        ] {
            let violation = check_pairs(l, polarity, pairs.iter().copied())?;
            verdicts.push((class, Verdict::from_violation(violation)));
        }
    }
    verdicts.push((Class::BSigma2, decide_bsigma2_with(l, &family3)?));
    verdicts.push((Class::FO, decide_fo(l)));
    let m = l.monoid().size();
    let report = ClassificationReport {
        verdicts,
        monoid_size: m,
        level3_rank_bound: format!("{} + {}", 6 * m, RankBound::new(m, l.alphabet().len(), 2).symbolic()),
    };
    check_consistency(&report)?;
    Ok(report)
}

/// Inclusions between the classes: `(smaller, larger)`.
pub fn inclusions() -> Vec<(Class, Class)> {
    use Class::*;
    let mut v = Vec::new();
    for i in 1..=3 {
        v.push((Delta(i), Sigma(i)));
        v.push((Delta(i), Pi(i)));
        v.push((Sigma(i), FO));
        v.push((Pi(i), FO));
    }
    for i in 1..=2 {
        v.push((Sigma(i), Sigma(i + 1)));
        v.push((Pi(i), Pi(i + 1)));
        v.push((Sigma(i), Delta(i + 1)));
        v.push((Pi(i), Delta(i + 1)));
    }
    v.push((Sigma(2), BSigma2));
    v.push((Pi(2), BSigma2));
    v.push((BSigma2, Delta(3)));
    v.push((BSigma2, FO));
    v
}

/// Checks the inclusions and `Δi = Σi ∩ Πi`.
pub fn check_consistency(report: &ClassificationReport) -> Result<()> {
    for (small, large) in inclusions() {
        if report.decision(small) && !report.decision(large) {
            return Err(Error::Inconsistent(format!("{small} holds but {large} does not")));
        }
    }
    for i in 1..=3 {
        let both = report.decision(Class::Sigma(i)) && report.decision(Class::Pi(i));
        if both != report.decision(Class::Delta(i)) {
            return Err(Error::Inconsistent(format!("Delta{i} differs from Sigma{i} and Pi{i}")));
        }
    }
    Ok(())
}
