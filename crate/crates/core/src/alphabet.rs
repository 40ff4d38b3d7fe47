//! Alphabets, words and sub-alphabets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum number of letters in a declared alphabet.
pub const MAX_LETTERS: usize = 16;

/// Characters with a meaning in the regex grammar; they cannot be letters.
const RESERVED: &[char] = &['+', '*', '(', ')', '_', '#'];

/// A word, stored as letter indices into its [`Alphabet`].
pub type Word = Vec<usize>;

/// An ordered, explicitly declared alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        if letters.len() > MAX_LETTERS {
            return Err(Error::InvalidAlphabet(format!(
                "{} letters, at most {MAX_LETTERS} allowed",
                letters.len()
            )));
        }
        for (i, &c) in letters.iter().enumerate() {
            if RESERVED.contains(&c) || c.is_whitespace() || !c.is_ascii_graphic() {
                return Err(Error::InvalidAlphabet(format!("'{c}' cannot be a letter")));
            }
            if letters[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate letter '{c}'")));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Parses a compact alphabet such as `ab`, ignoring whitespace and commas.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.chars().filter(|c| !c.is_whitespace() && *c != ','))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn letter(&self, index: usize) -> char {
        self.letters[index]
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.letters.iter().position(|&l| l == c)
    }

    pub fn full(&self) -> LetterSet {
        LetterSet::full(self.len())
    }

    /// Converts a string into a word; `_` or the empty string is the empty word.
    pub fn word(&self, text: &str) -> Result<Word> {
        text.chars()
            .filter(|&c| c != '_')
            .map(|c| self.index_of(c).ok_or(Error::UnknownLetter(c)))
            .collect()
    }

    pub fn render(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "_".into();
        }
        word.iter().map(|&i| self.letters[i]).collect()
    }

    /// Parses a sub-alphabet written as its letters (`ab`, `{a,b}`, `{}`).
    pub fn subset(&self, text: &str) -> Result<LetterSet> {
        let mut set = LetterSet::EMPTY;
        for c in text.chars() {
            if c.is_whitespace() || matches!(c, ',' | '{' | '}') {
                continue;
            }
            let i = self.index_of(c).ok_or(Error::UnknownLetter(c))?;
            set = set.with(i);
        }
        Ok(set)
    }

    pub fn render_subset(&self, set: LetterSet) -> String {
        let inner: Vec<String> = set.iter().map(|i| self.letters[i].to_string()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters.iter().collect();
        f.write_str(&s)
    }
}

/// A subset of an alphabet, as a bitmask over letter indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct LetterSet(pub u32);

impl LetterSet {
    pub const EMPTY: LetterSet = LetterSet(0);

    pub fn full(letters: usize) -> Self {
        LetterSet(((1u64 << letters) - 1) as u32)
    }

    pub fn singleton(letter: usize) -> Self {
        LetterSet(1 << letter)
    }

    pub fn with(self, letter: usize) -> Self {
        LetterSet(self.0 | (1 << letter))
    }

    pub fn contains(self, letter: usize) -> bool {
        self.0 & (1 << letter) != 0
    }

    pub fn union(self, other: LetterSet) -> Self {
        LetterSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: LetterSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    pub fn of_word(word: &[usize]) -> Self {
        word.iter().fold(LetterSet::EMPTY, |acc, &l| acc.with(l))
    }

    /// All subsets of an alphabet with `letters` letters, by increasing size
    /// and then by increasing bitmask.
    pub fn all_by_size(letters: usize) -> Vec<LetterSet> {
        let mut all: Vec<LetterSet> = (0..1u32 << letters).map(LetterSet).collect();
        all.sort_by_key(|s| (s.len(), s.0));
        all
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_reserved_and_duplicate_letters() {
        assert!(Alphabet::parse("a+").is_err());
        assert!(Alphabet::parse("aa").is_err());
        assert!(Alphabet::parse("").is_err());
        assert!(Alphabet::parse("abcdefghijklmnopq").is_err());
        assert_eq!(Alphabet::parse("a, b").unwrap().letters(), &['a', 'b']);
    }

    #[test]
    fn subsets_by_size() {
        let all = LetterSet::all_by_size(2);
        assert_eq!(all, vec![LetterSet(0), LetterSet(1), LetterSet(2), LetterSet(3)]);
        let ab = Alphabet::parse("ab").unwrap();
        assert_eq!(ab.subset("{b}").unwrap(), LetterSet(2));
        assert_eq!(ab.render_subset(LetterSet(3)), "{a,b}");
        assert_eq!(ab.render_subset(LetterSet::EMPTY), "{}");
    }
}
