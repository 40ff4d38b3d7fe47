//! Ground truth at small scale.
//!
//! [`ef_leq`] plays the Ehrenfeucht-Fraïssé game characterizing the
//! preorders `≲_i^k`, [`brute_chains`] enumerates chains realized by short
//! words, and [`witness_from_derivation`] turns a saturation derivation
//! into concrete words that [`verify_bundle`] checks with the game.

mod brute;
mod game;
mod witness;

pub use brute::{all_words, brute_chains, brute_chains_with, BruteChains, WordRelation, MAX_BRUTE_LENGTH};
pub use game::{ef_leq, ef_leq_with_budget, sigma1_leq, GameConfig, DEFAULT_GAME_BUDGET};
pub use witness::{
    verify_bundle, witness_for_chain, witness_from_derivation, BundleCheck, WitnessBundle, MAX_WITNESS_LENGTH,
    VERIFY_GAME_BUDGET,
};
