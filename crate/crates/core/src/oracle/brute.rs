use std::collections::BTreeSet;

use crate::algebra::ContentMorphism;
use crate::alphabet::{LetterSet, Word};
use crate::chains::{Chain, ChainSpace};
use crate::error::{Error, Result};

use super::game::{ef_leq, GameConfig};

/// Words longer than this are refused by the brute-force enumeration.
pub const MAX_BRUTE_LENGTH: usize = 10;

/// The preorder `≲_i^k` tabulated on all words of length at most `max_len`
/// over a fixed number of letters. It does not depend on any monoid, so one
/// table serves every morphism over the same alphabet.
#[derive(Debug, Clone)]
pub struct WordRelation {
    pub letters: usize,
    pub level: usize,
    pub rank: usize,
    pub max_len: usize,
    words: Vec<Word>,
    /// `above[x]`: indices `y` with `words[x] ≲ words[y]`.
    above: Vec<Vec<usize>>,
}

impl WordRelation {
    pub fn new(letters: usize, level: usize, rank: usize, max_len: usize) -> Result<Self> {
        if max_len > MAX_BRUTE_LENGTH || letters == 0 || letters > 3 {
            return Err(Error::InvalidArgument(format!(
                "brute-force enumeration needs 1..=3 letters and words of length <= {MAX_BRUTE_LENGTH}"
            )));
        }
        let words = all_words(letters, max_len);
        let mut above = vec![Vec::new(); words.len()];
        let cfg = GameConfig::new(level, rank);
        for (x, w) in words.iter().enumerate() {
            for (y, w2) in words.iter().enumerate() {
                if x == y || ef_leq(w, w2, cfg)? {
                    above[x].push(y);
                }
            }
        }
        Ok(WordRelation {
            letters,
            level,
            rank,
            max_len,
            words,
            above,
        })
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].binary_search(&y).is_ok()
    }

    pub fn above(&self, x: usize) -> &[usize] {
        &self.above[x]
    }
}

/// All words of length at most `max_len`, shortest first.
pub fn all_words(letters: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut start = 0;
    for _ in 0..max_len {
        let end = out.len();
        for i in start..end {
            for a in 0..letters {
                let mut w = out[i].clone();
                w.push(a);
                out.push(w);
            }
        }
        start = end;
    }
    out
}

/// Chains realized by words of bounded length.
///
/// This under-approximates `Cs_{i,k}` (longer witnesses are never tried)
/// and over-approximates the limit `Cs_i`, which requires witnesses at every
/// rank rather than at the single rank `k`.
#[derive(Debug, Clone)]
pub struct BruteChains {
    pub level: usize,
    pub rank: usize,
    pub length: usize,
    pub max_len: usize,
    /// Realized by any words.
    pub chains: Vec<Chain>,
    /// Indexed by [`LetterSet::index`]: realized by words of content exactly `B`.
    pub per_alphabet: Vec<Vec<Chain>>,
}

impl BruteChains {
    pub const APPROXIMATION: &'static str =
        "under-approximates Cs_{i,k,n} (bounded word length); over-approximates Cs_{i,n} (single rank)";

    pub fn contains(&self, chain: &Chain, b: Option<LetterSet>) -> bool {
        let list = match b {
            Some(b) => &self.per_alphabet[b.index()],
            None => &self.chains,
        };
        list.binary_search(chain).is_ok()
    }
}

pub fn brute_chains(beta: &ContentMorphism, level: usize, rank: usize, n: usize, max_len: usize) -> Result<BruteChains> {
    let relation = WordRelation::new(beta.alphabet().len(), level, rank, max_len)?;
    brute_chains_with(&relation, beta, n)
}

/// Chains `(α(w_1), ..., α(w_n))` with `w_1 ≲ ... ≲ w_n` drawn from the
/// relation's words.
pub fn brute_chains_with(relation: &WordRelation, beta: &ContentMorphism, n: usize) -> Result<BruteChains> {
    if n == 0 {
        return Err(Error::InvalidArgument("chain length must be at least 1".into()));
    }
    if relation.letters != beta.alphabet().len() {
        return Err(Error::InvalidArgument("relation and morphism use different alphabets".into()));
    }
    let m = beta.monoid();
    let space = ChainSpace::new(m, n);
    let images: Vec<(usize, LetterSet)> = relation.words.iter().map(|w| beta.eval(w)).collect();
    let alphabets = 1usize << relation.letters;
    let mut any = BTreeSet::new();
    let mut per: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); alphabets];
    for restrict in [false, true] {
        // prefixes[x]: codes of chain prefixes ending in words[x]
        let mut prefixes: Vec<BTreeSet<u64>> = images.iter().map(|&(s, _)| BTreeSet::from([s as u64])).collect();
        for _ in 1..n {
            let mut next: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); images.len()];
            for x in 0..images.len() {
                for &y in relation.above(x) {
                    if restrict && images[x].1 != images[y].1 {
                        continue;
                    }
                    let s = images[y].0 as u64;
                    for &p in &prefixes[x] {
                        next[y].insert(p * m.size() as u64 + s);
                    }
                }
            }
            prefixes = next;
        }
        for (y, codes) in prefixes.into_iter().enumerate() {
            if restrict {
                per[images[y].1.index()].extend(codes);
            } else {
                any.extend(codes);
            }
        }
    }
    let decode = |set: BTreeSet<u64>| -> Vec<Chain> { set.into_iter().map(|c| space.decode(c)).collect() };
    Ok(BruteChains {
        level: relation.level,
        rank: relation.rank,
        length: n,
        max_len: relation.max_len,
        chains: decode(any),
        per_alphabet: per.into_iter().map(decode).collect(),
    })
}
