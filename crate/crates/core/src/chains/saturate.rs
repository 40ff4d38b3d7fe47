use std::collections::HashSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use log::{debug, trace};

use crate::algebra::{ContentMorphism, Element};
use crate::alphabet::{LetterSet, Word};
use crate::error::{Error, Result};

use super::bound::RankBound;
use super::chain::{Chain, ChainSet, ChainSpace};

/// Antichain per sub-alphabet, indexed by [`LetterSet::index`].
pub type SatMap = Vec<Vec<ChainSet>>;

/// How a stored set of chains was produced.
#[derive(Debug)]
pub struct Derivation {
    pub set: ChainSet,
    pub alphabet: LetterSet,
    pub rule: Rule,
}

#[derive(Debug)]
pub enum Rule {
    /// `{(s, ..., s)}` with `s` the image of `word`, whose content is the
    /// node's alphabet.
    Initial { element: Element, word: Word },
    /// `left . right`, with `left.alphabet | right.alphabet == alphabet`.
    Product {
        left: Arc<Derivation>,
        right: Arc<Derivation>,
    },
    /// `T^e . (1, Cs[B]) . T^e` where `T^e` is the idempotent power of the
    /// context set and `Cs[B]` the chains one shorter for the same alphabet.
    Operation { context: Arc<Derivation>, exponent: usize },
}

impl Derivation {
    pub fn depth(&self) -> usize {
        match &self.rule {
            Rule::Initial { .. } => 1,
            Rule::Product { left, right } => 1 + left.depth().max(right.depth()),
            Rule::Operation { context, .. } => 1 + context.depth(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.rule {
            Rule::Initial { .. } => "initial",
            Rule::Product { .. } => "product",
            Rule::Operation { .. } => "operation",
        }
    }
}

#[derive(Debug, Clone)]
pub struct StoredSet {
    pub set: ChainSet,
    pub derivation: Arc<Derivation>,
}

/// Order in which sub-alphabets are visited during one saturation pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Schedule {
    #[default]
    Ascending,
    Descending,
}

#[derive(Debug, Clone)]
pub struct SaturationOptions {
    pub schedule: Schedule,
    /// Cap on the total number of maximal sets, over all lengths.
    pub max_sets: usize,
    pub timeout: Option<Duration>,
    /// Longest chain length accepted without complaint.
    pub max_length: usize,
    /// Keep a snapshot of the antichains after every pass.
    pub record_history: bool,
}

impl Default for SaturationOptions {
    fn default() -> Self {
        SaturationOptions {
            schedule: Schedule::Ascending,
            max_sets: 20_000,
            timeout: Some(Duration::from_secs(300)),
            max_length: 3,
            record_history: false,
        }
    }
}

/// The saturated compatible sets of level-2 chains of one length.
#[derive(Debug, Clone)]
pub struct ChainFamily {
    level: usize,
    length: usize,
    beta: ContentMorphism,
    entries: Vec<Vec<StoredSet>>,
    lower: Option<Arc<ChainFamily>>,
    iterations: usize,
    history: Vec<SatMap>,
}

impl ChainFamily {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn beta(&self) -> &ContentMorphism {
        &self.beta
    }

    pub fn space(&self) -> ChainSpace<'_> {
        ChainSpace::new(self.beta.monoid(), self.length)
    }

    /// Family of length `n - 1` this one was parametrized by.
    pub fn lower(&self) -> Option<&ChainFamily> {
        self.lower.as_deref()
    }

    /// Number of saturation passes, the last one being the pass that found
    /// nothing new.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    /// Antichain snapshots after each pass (empty unless requested).
    pub fn history(&self) -> &[SatMap] {
        &self.history
    }

    pub fn sets(&self, b: LetterSet) -> &[StoredSet] {
        &self.entries[b.index()]
    }

    pub fn total_sets(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn rank_bound(&self) -> RankBound {
        RankBound::new(
            self.beta.monoid().size(),
            self.beta.alphabet().len(),
            self.length,
        )
    }

    /// The maximal sets for every alphabet, each antichain sorted.
    pub fn antichains(&self) -> SatMap {
        self.entries
            .iter()
            .map(|sets| {
                let mut v: Vec<ChainSet> = sets.iter().map(|s| s.set.clone()).collect();
                v.sort();
                v
            })
            .collect()
    }

    /// `Cs[alpha, B]`: the union of the maximal sets for `B`.
    pub fn chain_set(&self, b: LetterSet) -> ChainSet {
        self.entries[b.index()]
            .iter()
            .fold(ChainSet::default(), |acc, s| acc.union(&s.set))
    }

    /// `Cs[alpha]`: union over all alphabets.
    pub fn all_chains(&self) -> ChainSet {
        self.entries
            .iter()
            .flatten()
            .fold(ChainSet::default(), |acc, s| acc.union(&s.set))
    }

    pub fn chains(&self, b: Option<LetterSet>) -> Vec<Chain> {
        let set = match b {
            Some(b) => self.chain_set(b),
            None => self.all_chains(),
        };
        self.space().chains(&set)
    }

    /// A stored set for `b` containing the chain, if any.
    pub fn set_containing(&self, chain: &Chain, b: LetterSet) -> Option<&StoredSet> {
        let code = self.space().encode(&chain.0);
        self.entries[b.index()]
            .iter()
            .find(|s| s.set.contains_code(code))
    }

    /// Replays every derivation rule and checks it reproduces its set.
    pub fn check_derivations(&self) -> bool {
        let space = self.space();
        let lower_cs: Vec<ChainSet> = match &self.lower {
            Some(lower) => (0..self.entries.len())
                .map(|b| lower.chain_set(LetterSet(b as u32)))
                .collect(),
            None => Vec::new(),
        };
        let mut seen = HashSet::new();
        let mut stack: Vec<&Arc<Derivation>> =
            self.entries.iter().flatten().map(|s| &s.derivation).collect();
        while let Some(node) = stack.pop() {
            if !seen.insert(Arc::as_ptr(node)) {
                continue;
            }
            let replayed = match &node.rule {
                Rule::Initial { element, word } => {
                    if self.beta.eval(word) != (*element, node.alphabet) {
                        return false;
                    }
                    ChainSet::from_codes(vec![space.constant(*element)])
                }
                Rule::Product { left, right } => {
                    if left.alphabet.union(right.alphabet) != node.alphabet {
                        return false;
                    }
                    stack.push(left);
                    stack.push(right);
                    space.product(&left.set, &right.set)
                }
                Rule::Operation { context, exponent } => {
                    if context.alphabet != node.alphabet {
                        return false;
                    }
                    stack.push(context);
                    let idem = space.power(&context.set, *exponent);
                    if space.product(&idem, &idem) != idem {
                        return false;
                    }
                    let inner = space.prefix(
                        self.beta.monoid().unit(),
                        &lower_cs[node.alphabet.index()],
                    );
                    space.product(&space.product(&idem, &inner), &idem)
                }
            };
            if replayed != node.set {
                return false;
            }
        }
        true
    }
}

/// `fI_n[B]` for every alphabet `B`: the constant singletons `{(s, ..., s)}`
/// with `s` an image of a word of content exactly `B`.
pub fn initial_family(beta: &ContentMorphism, n: usize) -> SatMap {
    let space = ChainSpace::new(beta.monoid(), n);
    (0..1usize << beta.alphabet().len())
        .map(|b| {
            beta.image_with_content(LetterSet(b as u32))
                .into_iter()
                .map(|s| ChainSet::from_codes(vec![space.constant(s)]))
                .collect()
        })
        .collect()
}

/// One synchronous application of the saturation procedure to a map of
/// antichains: every alphabet `B` receives `f(B)`, the products `f(C).f(D)`
/// over covers `C | D = B`, and the operation sets built from `f(B)`. The
/// result is reduced to its maximal sets. `lower` must be the saturated
/// family one shorter (ignored for `n = 1`, where nothing is added).
pub fn sat_step(beta: &ContentMorphism, f: &SatMap, n: usize, lower: Option<&ChainFamily>) -> SatMap {
    if n == 1 {
        return f.clone();
    }
    let lower = lower.expect("length >= 2 needs the shorter family");
    assert_eq!(lower.length() + 1, n, "lower family has the wrong length");
    let space = ChainSpace::new(beta.monoid(), n);
    let unit = beta.monoid().unit();
    let mut out: SatMap = Vec::with_capacity(f.len());
    for b in 0..f.len() {
        let mut candidates: Vec<ChainSet> = f[b].clone();
        for c in 0..f.len() {
            for d in 0..f.len() {
                if c | d != b {
                    continue;
                }
                for s in &f[c] {
                    for t in &f[d] {
                        candidates.push(space.product(s, t));
                    }
                }
            }
        }
        let inner = space.prefix(unit, &lower.chain_set(LetterSet(b as u32)));
        for t in &f[b] {
            let (_, idem) = space.omega(t);
            candidates.push(space.product(&space.product(&idem, &inner), &idem));
        }
        out.push(maximal(candidates));
    }
    out
}

fn maximal(mut sets: Vec<ChainSet>) -> Vec<ChainSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<ChainSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

pub fn saturate(beta: &ContentMorphism, n: usize) -> Result<ChainFamily> {
    saturate_with(beta, n, &SaturationOptions::default())
}

pub fn saturate_with(beta: &ContentMorphism, n: usize, options: &SaturationOptions) -> Result<ChainFamily> {
    if n == 0 {
        return Err(Error::InvalidArgument("chain length must be at least 1".into()));
    }
    if n > options.max_length {
        return Err(Error::InvalidArgument(format!(
            "chain length {n} exceeds the configured maximum {}",
            options.max_length
        )));
    }
    let deadline = options.timeout.map(|t| Instant::now() + t);
    let mut budget = Budget {
        max_sets: options.max_sets,
        used: 0,
        deadline,
    };
    let mut family = length_one(beta);
    budget.used += family.total_sets();
    for len in 2..=n {
        family = saturate_length(beta, len, Arc::new(family), options, &mut budget)?;
    }
    Ok(family)
}

struct Budget {
    max_sets: usize,
    used: usize,
    deadline: Option<Instant>,
}

impl Budget {
    fn check(&self, current: usize) -> Result<()> {
        if self.used + current > self.max_sets {
            return Err(Error::ResourceCap(format!(
                "more than {} maximal chain sets",
                self.max_sets
            )));
        }
        if self.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::ResourceCap("saturation timed out".into()));
        }
        Ok(())
    }
}

fn length_one(beta: &ContentMorphism) -> ChainFamily {
    let entries = (0..1usize << beta.alphabet().len())
        .map(|b| {
            let b = LetterSet(b as u32);
            beta.image_with_content(b)
                .into_iter()
                .map(|s| initial_set(beta, 1, s, b))
                .collect()
        })
        .collect();
    ChainFamily {
        level: 2,
        length: 1,
        beta: beta.clone(),
        entries,
        lower: None,
        iterations: 0,
        history: Vec::new(),
    }
}

fn initial_set(beta: &ContentMorphism, n: usize, s: Element, b: LetterSet) -> StoredSet {
    let space = ChainSpace::new(beta.monoid(), n);
    let set = ChainSet::from_codes(vec![space.constant(s)]);
    let word = beta.witness(s, b).expect("element is in the image for b").clone();
    StoredSet {
        set: set.clone(),
        derivation: Arc::new(Derivation {
            set,
            alphabet: b,
            rule: Rule::Initial { element: s, word },
        }),
    }
}

struct Entry {
    stored: StoredSet,
    born: usize,
}

fn saturate_length(
    beta: &ContentMorphism,
    n: usize,
    lower: Arc<ChainFamily>,
    options: &SaturationOptions,
    budget: &mut Budget,
) -> Result<ChainFamily> {
    let monoid = beta.monoid();
    let space = ChainSpace::new(monoid, n);
    let alphabets = 1usize << beta.alphabet().len();
    let mut order = LetterSet::all_by_size(beta.alphabet().len());
    if options.schedule == Schedule::Descending {
        order.reverse();
    }
    let inner: Vec<ChainSet> = (0..alphabets)
        .map(|b| space.prefix(monoid.unit(), &lower.chain_set(LetterSet(b as u32))))
        .collect();

    let mut entries: Vec<Vec<Entry>> = (0..alphabets)
        .map(|b| {
            let b = LetterSet(b as u32);
            beta.image_with_content(b)
                .into_iter()
                .map(|s| Entry {
                    stored: initial_set(beta, n, s, b),
                    born: 0,
                })
                .collect()
        })
        .collect();

    let snapshot = |entries: &Vec<Vec<Entry>>| -> SatMap {
        entries
            .iter()
            .map(|v| {
                let mut sets: Vec<ChainSet> = v.iter().map(|e| e.stored.set.clone()).collect();
                sets.sort();
                sets
            })
            .collect()
    };
    let mut history = Vec::new();
    if options.record_history {
        history.push(snapshot(&entries));
    }

    let mut pass = 0;
    loop {
        pass += 1;
        let mut added = 0;
        for &b in &order {
            let mut candidates: Vec<(ChainSet, Rule)> = Vec::new();
            // products over covers C | D = B
            for c in 0..alphabets {
                for d in 0..alphabets {
                    if c | d != b.index() {
                        continue;
                    }
                    for left in &entries[c] {
                        for right in &entries[d] {
                            if left.born + 2 <= pass && right.born + 2 <= pass {
                                continue;
                            }
                            let set = space.product(&left.stored.set, &right.stored.set);
                            candidates.push((
                                set,
                                Rule::Product {
                                    left: left.stored.derivation.clone(),
                                    right: right.stored.derivation.clone(),
                                },
                            ));
                        }
                    }
                }
            }
            for context in &entries[b.index()] {
                if context.born + 2 <= pass {
                    continue;
                }
                let (exponent, idem) = space.omega(&context.stored.set);
                let set = space.product(&space.product(&idem, &inner[b.index()]), &idem);
                candidates.push((
                    set,
                    Rule::Operation {
                        context: context.stored.derivation.clone(),
                        exponent,
                    },
                ));
            }
            for (set, rule) in candidates {
                let slot = &mut entries[b.index()];
                if slot.iter().any(|e| set.is_subset(&e.stored.set)) {
                    continue;
                }
                slot.retain(|e| !e.stored.set.is_subset(&set));
                trace!("length {n}, alphabet {:?}: new maximal set of {} chains", b, set.len());
                slot.push(Entry {
                    stored: StoredSet {
                        set: set.clone(),
                        derivation: Arc::new(Derivation {
                            set,
                            alphabet: b,
                            rule,
                        }),
                    },
                    born: pass,
                });
                added += 1;
            }
            budget.check(entries.iter().map(Vec::len).sum())?;
        }
        if options.record_history {
            history.push(snapshot(&entries));
        }
        debug!("length {n}: pass {pass} added {added} maximal sets");
        if added == 0 {
            break;
        }
    }
    budget.used += entries.iter().map(Vec::len).sum::<usize>();

    Ok(ChainFamily {
        level: 2,
        length: n,
        beta: beta.clone(),
        entries: entries
            .into_iter()
            .map(|v| v.into_iter().map(|e| e.stored).collect())
            .collect(),
        lower: Some(lower),
        iterations: pass,
        history,
    })
}

/// Whether the chain lies in some stored set for `b`, or for any alphabet.
pub fn chain_member(family: &ChainFamily, chain: &Chain, b: Option<LetterSet>) -> Result<bool> {
    if chain.len() != family.length() {
        return Err(Error::LengthMismatch {
            expected: family.length(),
            got: chain.len(),
        });
    }
    if chain.0.iter().any(|&s| s >= family.beta().monoid().size()) {
        return Err(Error::InvalidArgument(format!("chain {chain} names an unknown element")));
    }
    let space = family.space();
    let code = space.encode(&chain.0);
    let hit = |b: usize| family.entries[b].iter().any(|s| s.set.contains_code(code));
    Ok(match b {
        Some(b) => hit(b.index()),
        None => (0..family.entries.len()).any(hit),
    })
}
