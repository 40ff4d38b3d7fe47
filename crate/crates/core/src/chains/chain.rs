use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Element, FiniteMonoid};

/// A tuple `(s1, ..., sn)` of monoid elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Chain(pub Vec<Element>);

impl Chain {
    pub fn new(entries: impl Into<Vec<Element>>) -> Self {
        Chain(entries.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Element] {
        &self.0
    }

    /// Parses `1,2` or `(1,2)` into a chain of element ids.
    pub fn parse(text: &str) -> Option<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        inner
            .split(',')
            .map(|t| t.trim().parse::<Element>().ok())
            .collect::<Option<Vec<_>>>()
            .map(Chain)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Products over chain spaces at most this large deduplicate through a bitset.
const BITSET_LIMIT: u64 = 1 << 22;

/// Chains of one fixed length over one monoid, encoded as integers so that
/// numeric order is lexicographic order on chains.
#[derive(Debug, Clone)]
pub struct ChainSpace<'a> {
    monoid: &'a FiniteMonoid,
    length: usize,
    radix: u64,
}

impl<'a> ChainSpace<'a> {
    pub fn new(monoid: &'a FiniteMonoid, length: usize) -> Self {
        assert!(length >= 1, "chains have length at least 1");
        let radix = monoid.size() as u64;
        assert!(
            radix.checked_pow(length as u32).is_some(),
            "chain space too large to encode"
        );
        ChainSpace {
            monoid,
            length,
            radix,
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn monoid(&self) -> &'a FiniteMonoid {
        self.monoid
    }

    pub fn encode(&self, chain: &[Element]) -> u64 {
        debug_assert_eq!(chain.len(), self.length);
        chain.iter().fold(0, |acc, &s| acc * self.radix + s as u64)
    }

    pub fn decode(&self, mut code: u64) -> Chain {
        let mut out = vec![0; self.length];
        for slot in out.iter_mut().rev() {
            *slot = (code % self.radix) as Element;
            code /= self.radix;
        }
        Chain(out)
    }

    pub fn first(&self, code: u64) -> Element {
        (code / self.radix.pow(self.length as u32 - 1)) as Element
    }

    /// Componentwise product of two encoded chains.
    pub fn mul(&self, mut a: u64, mut b: u64) -> u64 {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.length {
            let s = (a % self.radix) as Element;
            let t = (b % self.radix) as Element;
            out += self.monoid.mul(s, t) as u64 * place;
            place *= self.radix;
            a /= self.radix;
            b /= self.radix;
        }
        out
    }

    pub fn constant(&self, s: Element) -> u64 {
        self.encode(&vec![s; self.length])
    }

    pub fn set(&self, chains: impl IntoIterator<Item = Chain>) -> ChainSet {
        ChainSet::from_codes(chains.into_iter().map(|c| self.encode(&c.0)).collect())
    }

    pub fn product(&self, left: &ChainSet, right: &ChainSet) -> ChainSet {
        let n = self.length;
        let m = self.monoid.size();
        let table = self.monoid.table();
        let digits = |set: &ChainSet| -> Vec<usize> {
            set.codes.iter().flat_map(|&c| self.decode(c).0).collect()
        };
        let (ld, rd) = (digits(left), digits(right));
        let places: Vec<u64> = (0..n).rev().map(|i| self.radix.pow(i as u32)).collect();
        let space = self.radix.pow(n as u32);
        let pairs = (left.len() * right.len()) as u64;
        let mut bits = (space <= BITSET_LIMIT && space / 64 <= 4 * pairs).then(|| vec![0u64; (space as usize).div_ceil(64)]);
        let mut codes = Vec::new();
        for l in ld.chunks_exact(n) {
            for r in rd.chunks_exact(n) {
                let mut code = 0;
                for i in 0..n {
                    code += table[l[i] * m + r[i]] as u64 * places[i];
                }
                match &mut bits {
                    Some(bits) => bits[(code / 64) as usize] |= 1 << (code % 64),
                    None => codes.push(code),
                }
            }
        }
        match bits {
            Some(bits) => {
                for (w, &word) in bits.iter().enumerate() {
                    let mut word = word;
                    while word != 0 {
                        let b = word.trailing_zeros() as u64;
                        codes.push(w as u64 * 64 + b);
                        word &= word - 1;
                    }
                }
                ChainSet { codes }
            }
            None => ChainSet::from_codes(codes),
        }
    }

    /// The set `{1_M}^n`, neutral for [`ChainSpace::product`].
    pub fn unit_set(&self) -> ChainSet {
        ChainSet::from_codes(vec![self.constant(self.monoid.unit())])
    }

    pub fn power(&self, set: &ChainSet, e: usize) -> ChainSet {
        (0..e).fold(self.unit_set(), |acc, _| self.product(&acc, set))
    }

    /// Smallest `e >= 1` with `T^e` idempotent, together with `T^e`.
    pub fn omega(&self, set: &ChainSet) -> (usize, ChainSet) {
        let mut seen: HashMap<ChainSet, usize> = HashMap::new();
        let mut powers = vec![set.clone()];
        seen.insert(set.clone(), 1);
        let (index, period) = loop {
            let next = self.product(powers.last().expect("nonempty"), set);
            let e = powers.len() + 1;
            if let Some(&first) = seen.get(&next) {
                break (first, e - first);
            }
            seen.insert(next.clone(), e);
            powers.push(next);
        };
        let e = period * index.div_ceil(period);
        (e, powers[e - 1].clone())
    }

    /// `(s, S)`: prefixes `s` to every chain of a set of chains one shorter.
    pub fn prefix(&self, s: Element, shorter: &ChainSet) -> ChainSet {
        let offset = s as u64 * self.radix.pow(self.length as u32 - 1);
        ChainSet::from_codes(shorter.codes.iter().map(|&c| offset + c).collect())
    }

    pub fn chains(&self, set: &ChainSet) -> Vec<Chain> {
        set.codes.iter().map(|&c| self.decode(c)).collect()
    }

    /// Drops coordinate `index` from every chain of the set.
    pub fn erase(&self, set: &ChainSet, index: usize, shorter: &ChainSpace<'_>) -> ChainSet {
        ChainSet::from_codes(
            set.codes
                .iter()
                .map(|&c| {
                    let mut chain = self.decode(c).0;
                    chain.remove(index);
                    shorter.encode(&chain)
                })
                .collect(),
        )
    }
}

/// A finite set of equal-length chains, stored as sorted encoded chains.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ChainSet {
    codes: Vec<u64>,
}

impl ChainSet {
    pub fn from_codes(mut codes: Vec<u64>) -> Self {
        codes.sort_unstable();
        codes.dedup();
        ChainSet { codes }
    }

    pub fn codes(&self) -> &[u64] {
        &self.codes
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn contains_code(&self, code: u64) -> bool {
        self.codes.binary_search(&code).is_ok()
    }

    pub fn is_subset(&self, other: &ChainSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.codes.iter();
        'outer: for c in &self.codes {
            for d in it.by_ref() {
                if d == c {
                    continue 'outer;
                }
                if d > c {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &ChainSet) -> ChainSet {
        let mut codes = self.codes.clone();
        codes.extend_from_slice(&other.codes);
        ChainSet::from_codes(codes)
    }

    /// All chains share one first element.
    pub fn is_compatible(&self, space: &ChainSpace<'_>) -> bool {
        match self.codes.first() {
            None => true,
            Some(&c) => {
                let s = space.first(c);
                self.codes.iter().all(|&d| space.first(d) == s)
            }
        }
    }
}
