//! Decision procedures for the quantifier alternation hierarchy of
//! first-order logic over finite words.
//!
//! The pipeline is: a regular language (regex or DFA) is normalized by
//! [`frontend`] into a minimal complete DFA, turned into its syntactic
//! ordered monoid by [`algebra`], and then handed to [`deciders`], which
//! run the chain saturation of [`chains`] and check the relevant
//! equations. [`oracle`] holds the brute-force Ehrenfeucht-Fraïssé game
//! used to cross-check everything at small scale.

pub mod algebra;
pub mod alphabet;
pub mod chains;
pub mod deciders;
pub mod error;
pub mod frontend;
pub mod oracle;

pub use alphabet::{Alphabet, LetterSet, Word};
pub use error::{Error, ErrorKind, Result};
