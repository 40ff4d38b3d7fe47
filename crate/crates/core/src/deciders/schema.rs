use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{ContentMorphism, Element, RecognizedLanguage};
use crate::alphabet::LetterSet;
use crate::chains::{saturate_with, ChainFamily, SaturationOptions};
use crate::error::{Error, Result};

use super::verdict::{Verdict, Violation};

/// Cap on the number of schema pairs checked for one alphabet.
const MAX_SCHEMA_PAIRS: usize = 50_000_000;

/// A triple `(s1, s2, s2')` with `s1 = r1 r1'`, `(r1, s2) ∈ Cs[B] T^ω` and
/// `(r1', s2') ∈ T^ω Cs[B]` for a compatible set `T` of `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BSchema {
    pub s1: Element,
    pub s2: Element,
    pub s2p: Element,
    pub alphabet: LetterSet,
    pub witness: SchemaWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchemaWitness {
    /// Index of `T` among the maximal sets stored for the alphabet.
    pub set: usize,
    pub r1: Element,
    pub r1p: Element,
}

impl BSchema {
    pub fn triple(&self) -> [Element; 3] {
        [self.s1, self.s2, self.s2p]
    }
}

/// All `B`-schemas, sorted by triple, each with the first witness found.
/// Only maximal sets `T` are tried: the conditions are monotone in `T`.
pub fn compute_b_schemas(family2: &ChainFamily, b: LetterSet) -> Vec<BSchema> {
    assert_eq!(family2.length(), 2, "schemas are built from chains of length 2");
    let space = family2.space();
    let m = space.monoid();
    let cs = family2.chain_set(b);
    let mut found: BTreeMap<[Element; 3], BSchema> = BTreeMap::new();
    for (index, stored) in family2.sets(b).iter().enumerate() {
        let (_, idem) = space.omega(&stored.set);
        let left = space.product(&cs, &idem);
        let right = space.product(&idem, &cs);
        for &l in left.codes() {
            let lc = space.decode(l);
            for &r in right.codes() {
                let rc = space.decode(r);
                let (r1, s2, r1p, s2p) = (lc.0[0], lc.0[1], rc.0[0], rc.0[1]);
                let s1 = m.mul(r1, r1p);
                found.entry([s1, s2, s2p]).or_insert(BSchema {
                    s1,
                    s2,
                    s2p,
                    alphabet: b,
                    witness: SchemaWitness { set: index, r1, r1p },
                });
            }
        }
    }
    found.into_values().collect()
}

pub fn decide_bsigma2(l: &RecognizedLanguage) -> Result<Verdict> {
    let beta = ContentMorphism::new(l.morphism.clone());
    let family3 = saturate_with(&beta, 3, &SaturationOptions::default())?;
    decide_bsigma2_with(l, &family3)
}

/// Checks both equations given the saturated family of length 3 (whose
/// lower family supplies the chains of length 2).
pub fn decide_bsigma2_with(l: &RecognizedLanguage, family3: &ChainFamily) -> Result<Verdict> {
    l.syntactic_order()?;
    if family3.length() != 3 {
        return Err(Error::LengthMismatch {
            expected: 3,
            got: family3.length(),
        });
    }
    let m = l.monoid();
    for chain in family3.chains(None) {
        let (s1, s2, s3) = (chain.0[0], chain.0[1], chain.0[2]);
        let (e1, e3) = (m.omega(s1), m.omega(s3));
        let checks = [
            ("eq4-left", "s1^w s3^w = s1^w s2 s3^w", e1, e3),
            ("eq4-right", "s3^w s1^w = s3^w s2 s1^w", e3, e1),
        ];
        for (name, relation, x, y) in checks {
            let (lhs, rhs) = (m.mul(x, y), m.product([x, s2, y]));
            if lhs != rhs {
                return Ok(Verdict::no(
                    Violation::new(name, relation, &[("s1", s1), ("s2", s2), ("s3", s3)])
                        .chain(chain.clone())
                        .sides(lhs, rhs),
                ));
            }
        }
    }
    let family2 = family3.lower().expect("length 3 has a lower family");
    let alphabet = l.alphabet();
    for b in LetterSet::all_by_size(alphabet.len()) {
        let schemas = compute_b_schemas(family2, b);
        if schemas.len().saturating_mul(schemas.len()) > MAX_SCHEMA_PAIRS {
            return Err(Error::ResourceCap(format!(
                "{} schemas for {}",
                schemas.len(),
                alphabet.render_subset(b)
            )));
        }
        for s in &schemas {
            for t in &schemas {
                let x = m.omega(m.mul(s.s2, t.s2));
                let y = m.omega(m.mul(t.s2p, s.s2p));
                let lhs = m.product([x, s.s1, y]);
                let rhs = m.product([x, s.s2, t.s1, s.s2p, y]);
                if lhs != rhs {
                    let mut v = Violation::new(
                        "eq5",
                        "(s2 t2)^w s1 (t2' s2')^w = (s2 t2)^w s2 t1 s2' (t2' s2')^w",
                        &[
                            ("s1", s.s1),
                            ("s2", s.s2),
                            ("s2'", s.s2p),
                            ("t1", t.s1),
                            ("t2", t.s2),
                            ("t2'", t.s2p),
                        ],
                    )
                    .sides(lhs, rhs);
                    v.schemas = Some(vec![s.triple(), t.triple()]);
                    v.alphabet = Some(alphabet.render_subset(b));
                    return Ok(Verdict::no(v));
                }
            }
        }
    }
    Ok(Verdict::yes())
}
