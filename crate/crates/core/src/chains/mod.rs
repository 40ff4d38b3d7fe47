//! Saturation of compatible sets of level-2 chains, and level-1 chains.
//!
//! A chain is a tuple of monoid elements; a compatible set is a set of
//! equal-length chains sharing their first element that can be realized
//! from one common first word. For each sub-alphabet `B`, the downset of
//! compatible sets is computed as a least fixpoint starting from constant
//! chains, closed under set product and under the operation
//! `T^ω · (1, Cs[B]) · T^ω`, and stored by its maximal elements.

mod bound;
mod chain;
mod dump;
mod level1;
mod saturate;

pub use bound::RankBound;
pub use chain::{Chain, ChainSet, ChainSpace};
pub use dump::{AlphabetSets, FamilyDump, FamilyMetadata};
pub use level1::{level1_chains, level1_witnesses, Level1Witness};
pub use saturate::{
    chain_member, initial_family, sat_step, saturate, saturate_with, ChainFamily, Derivation, Rule,
    SatMap, SaturationOptions, Schedule, StoredSet,
};
