//! JSON dump of a recognized language and the matching loader.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

use super::monoid::{Element, FiniteMonoid, OrderRelation};
use super::morphism::{Morphism, RecognizedLanguage};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidDump {
    pub alphabet: String,
    pub size: usize,
    pub unit: Element,
    /// Row-major: `mult[s][t]` is `s * t`.
    pub mult: Vec<Vec<Element>>,
    /// All pairs `(s, t)` with `s <= t`, reflexive pairs included.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<(Element, Element)>>,
    pub letters: BTreeMap<String, Element>,
    pub accepting: Vec<Element>,
    pub names: Vec<String>,
}

impl MonoidDump {
    pub fn from_language(l: &RecognizedLanguage) -> Self {
        let m = l.monoid();
        MonoidDump {
            alphabet: l.alphabet().to_string(),
            size: m.size(),
            unit: m.unit(),
            mult: m
                .elements()
                .map(|s| m.elements().map(|t| m.mul(s, t)).collect())
                .collect(),
            order: l.order.as_ref().map(OrderRelation::pairs),
            letters: l
                .alphabet()
                .letters()
                .iter()
                .enumerate()
                .map(|(a, c)| (c.to_string(), l.morphism.letter_image(a)))
                .collect(),
            accepting: l.accepting_elements(),
            names: m.elements().map(|s| m.name(s)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dump serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidDump(e.to_string()))
    }

    /// Rebuilds the language, validating the table, the letter map and the
    /// order.
    pub fn load(&self) -> Result<RecognizedLanguage> {
        let invalid = |msg: String| Error::InvalidDump(msg);
        let alphabet = Alphabet::parse(&self.alphabet)?;
        if self.mult.len() != self.size || self.mult.iter().any(|row| row.len() != self.size) {
            return Err(invalid("multiplication table is not size x size".into()));
        }
        let table: Vec<Element> = self.mult.iter().flatten().copied().collect();
        let mut monoid = FiniteMonoid::new(self.size, self.unit, table)
            .map_err(|e| invalid(e.to_string()))?;
        if !monoid.check_associative() {
            return Err(invalid("multiplication is not associative".into()));
        }
        if self.names.len() == self.size {
            monoid = monoid.with_names(self.names.clone());
        }
        let mut letters = Vec::with_capacity(alphabet.len());
        for &c in alphabet.letters() {
            let image = self
                .letters
                .get(&c.to_string())
                .ok_or_else(|| invalid(format!("no image for letter '{c}'")))?;
            letters.push(*image);
        }
        let morphism = Morphism::new(alphabet, monoid, letters)?;
        let mut accepting = vec![false; self.size];
        for &s in &self.accepting {
            *accepting
                .get_mut(s)
                .ok_or_else(|| invalid(format!("accepting element {s} out of range")))? = true;
        }
        let order = match &self.order {
            Some(pairs) => {
                let order = OrderRelation::from_pairs(self.size, pairs)?;
                if !order.is_partial_order() || !order.is_compatible(morphism.monoid()) {
                    return Err(invalid("order is not a compatible partial order".into()));
                }
                Some(order)
            }
            None => None,
        };
        RecognizedLanguage::new(morphism, accepting, order)
    }
}
