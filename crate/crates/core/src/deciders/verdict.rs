use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::Element;
use crate::chains::Chain;

/// A class of the hierarchy, or first-order logic itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    Sigma(usize),
    Pi(usize),
    Delta(usize),
    BSigma2,
    FO,
}

impl Class {
    /// Every class reported by [`classify`](super::classify), in report order.
    pub const ALL: [Class; 11] = [
        Class::Sigma(1),
        Class::Pi(1),
        Class::Delta(1),
        Class::Sigma(2),
        Class::Pi(2),
        Class::Delta(2),
        Class::Sigma(3),
        Class::Pi(3),
        Class::Delta(3),
        Class::BSigma2,
        Class::FO,
    ];

    pub fn name(self) -> String {
        match self {
            Class::Sigma(i) => format!("Sigma{i}"),
            Class::Pi(i) => format!("Pi{i}"),
            Class::Delta(i) => format!("Delta{i}"),
            Class::BSigma2 => "BSigma2".into(),
            Class::FO => "FO".into(),
        }
    }

    pub fn parse(text: &str) -> Option<Class> {
        Class::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(text))
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A concrete instance of a defining equation (or separation condition)
/// that fails. `lhs` and `rhs` are the two sides as evaluated in the monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub equation: String,
    /// The failing relation, e.g. `s^w <= s^w t s^w`.
    pub relation: String,
    /// Values of the variables of `relation`.
    pub elements: BTreeMap<String, Element>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<Chain>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schemas: Option<Vec<[Element; 3]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<String>,
    /// Rule that produced the set holding `chain`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Element>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Element>,
}

impl Violation {
    pub(crate) fn new(equation: &str, relation: &str, elements: &[(&str, Element)]) -> Self {
        Violation {
            equation: equation.into(),
            relation: relation.into(),
            elements: elements.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            chain: None,
            schemas: None,
            alphabet: None,
            derivation: None,
            lhs: None,
            rhs: None,
        }
    }

    pub(crate) fn sides(mut self, lhs: Element, rhs: Element) -> Self {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self
    }

    pub(crate) fn chain(mut self, chain: Chain) -> Self {
        self.chain = Some(chain);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub decision: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

impl Verdict {
    pub fn yes() -> Self {
        Verdict {
            decision: true,
            violation: None,
        }
    }

    pub fn no(violation: Violation) -> Self {
        Verdict {
            decision: false,
            violation: Some(violation),
        }
    }

    pub fn from_violation(violation: Option<Violation>) -> Self {
        match violation {
            Some(v) => Verdict::no(v),
            None => Verdict::yes(),
        }
    }
}
