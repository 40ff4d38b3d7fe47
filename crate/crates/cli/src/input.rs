use std::fs;
use std::path::PathBuf;

use altlab::algebra::{syntactic_morphism, MonoidDump, RecognizedLanguage};
use altlab::frontend::{parse_automaton, parse_regex, regex_to_min_dfa, Dfa};
use altlab::{Alphabet, Error};
use clap::Args;

/// One language, given as a regex over a declared alphabet, a DFA file, or
/// a monoid dump written by `monoid --dump`.
#[derive(Debug, Clone, Args)]
pub struct LanguageArgs {
    /// Regular expression (`+` union, `*` star, `_` empty word, `#` empty language)
    #[arg(long, conflicts_with_all = ["dfa", "monoid"], required_unless_present_any = ["dfa", "monoid"])]
    pub regex: Option<String>,
    /// Alphabet for --regex, e.g. `ab`
    #[arg(long, requires = "regex")]
    pub alphabet: Option<String>,
    /// DFA file in the line-oriented text format
    #[arg(long, conflicts_with = "monoid")]
    pub dfa: Option<PathBuf>,
    /// JSON monoid dump
    #[arg(long)]
    pub monoid: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) | CliError::Internal(e) => f.write_str(e),
        }
    }
}

pub fn load_dfa(regex: Option<&str>, alphabet: Option<&str>, dfa: Option<&PathBuf>) -> Result<Dfa, CliError> {
    match (regex, dfa) {
        (Some(regex), None) => {
            let alphabet = alphabet.ok_or_else(|| CliError::Io("--regex needs --alphabet".into()))?;
            let alphabet = Alphabet::parse(alphabet)?;
            Ok(regex_to_min_dfa(&parse_regex(regex, &alphabet)?))
        }
        (None, Some(path)) => {
            Ok(parse_automaton(&read(path)?)?)
        }
        _ => Err(CliError::Io("give exactly one of --regex or --dfa".into())),
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

impl LanguageArgs {
    pub fn load(&self, cap: usize) -> Result<RecognizedLanguage, CliError> {
        if let Some(path) = &self.monoid {
            let l = MonoidDump::from_json(&read(path)?)?.load()?;
            if l.monoid().size() > cap {
                return Err(Error::MonoidTooLarge { cap }.into());
            }
            return Ok(l);
        }
        let dfa = load_dfa(self.regex.as_deref(), self.alphabet.as_deref(), self.dfa.as_ref())?;
        Ok(syntactic_morphism(&dfa, cap)?)
    }
}
