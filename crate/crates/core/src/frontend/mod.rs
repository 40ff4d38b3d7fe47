//! Input surface: regular expressions and explicit automata, normalized to
//! minimal complete DFAs.

mod dfa;
mod regex;

pub use dfa::{parse_automaton, regex_to_min_dfa, Dfa};
pub use regex::{parse_regex, Regex, RegexAst};
