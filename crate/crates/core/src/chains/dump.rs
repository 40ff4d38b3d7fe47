use serde::{Deserialize, Serialize};

use crate::alphabet::LetterSet;

use super::chain::Chain;
use super::saturate::ChainFamily;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMetadata {
    pub level: usize,
    pub n: usize,
    pub monoid_size: usize,
    pub alphabet: String,
    pub iterations: usize,
    /// Decimal digits, or `C*2^(2^E)` when too large to expand.
    pub rank_bound: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphabetSets {
    pub alphabet: String,
    pub sets: Vec<Vec<Chain>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDump {
    pub metadata: FamilyMetadata,
    pub families: Vec<AlphabetSets>,
}

impl FamilyDump {
    /// Dumps the maximal sets for every alphabet, or only for `only`.
    pub fn new(family: &ChainFamily, only: Option<LetterSet>) -> Self {
        let alphabet = family.beta().alphabet();
        let space = family.space();
        let antichains = family.antichains();
        let families = LetterSet::all_by_size(alphabet.len())
            .into_iter()
            .filter(|b| only.is_none_or(|o| o == *b))
            .map(|b| AlphabetSets {
                alphabet: alphabet.render_subset(b),
                sets: antichains[b.index()].iter().map(|s| space.chains(s)).collect(),
            })
            .collect();
        FamilyDump {
            metadata: FamilyMetadata {
                level: family.level(),
                n: family.length(),
                monoid_size: family.beta().monoid().size(),
                alphabet: alphabet.to_string(),
                iterations: family.iterations(),
                rank_bound: family.rank_bound().render(),
            },
            families,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dump serializes")
    }
}
