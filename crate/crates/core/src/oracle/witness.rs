use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::ContentMorphism;
use crate::alphabet::{LetterSet, Word};
use crate::chains::{Chain, ChainFamily, ChainSet, ChainSpace, Derivation, Rule};
use crate::error::{Error, Result};

use super::game::{ef_leq_with_budget, GameConfig};

/// Longest word the builder is willing to produce.
pub const MAX_WITNESS_LENGTH: usize = 1 << 20;

/// Budget on `|w| * |w'|` used when verifying bundles.
pub const VERIFY_GAME_BUDGET: usize = 1 << 34;

/// Words realizing a chain at a fixed rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessBundle {
    pub chain: Chain,
    pub rank: usize,
    pub alphabet: LetterSet,
    pub words: Vec<Word>,
    /// Places where the builder picked one of several valid decompositions.
    pub flags: Vec<String>,
}

/// Outcome of [`verify_bundle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BundleCheck {
    Passed,
    Failed(String),
}

impl BundleCheck {
    pub fn passed(&self) -> bool {
        matches!(self, BundleCheck::Passed)
    }
}

/// Finds a stored set containing the chain (for `b`, or the first alphabet
/// by size that has one) and builds a bundle from its derivation.
pub fn witness_for_chain(family: &ChainFamily, chain: &Chain, b: Option<LetterSet>, rank: usize) -> Result<WitnessBundle> {
    if chain.len() != family.length() {
        return Err(Error::LengthMismatch {
            expected: family.length(),
            got: chain.len(),
        });
    }
    let alphabets = match b {
        Some(b) => vec![b],
        None => LetterSet::all_by_size(family.beta().alphabet().len()),
    };
    for b in alphabets {
        if let Some(stored) = family.set_containing(chain, b) {
            return witness_from_derivation(family, &stored.derivation, chain, rank);
        }
    }
    Err(Error::DerivationMismatch(format!("{chain} is not a saturated chain")))
}

/// Builds words `w_1 ≲_2^k ... ≲_2^k w_n` of content `B` realizing `chain`,
/// following the derivation of a set containing it.
pub fn witness_from_derivation(
    family: &ChainFamily,
    derivation: &Arc<Derivation>,
    chain: &Chain,
    rank: usize,
) -> Result<WitnessBundle> {
    if rank > 6 {
        return Err(Error::InvalidArgument(format!("rank {rank} is too large for witness words")));
    }
    let mut families = vec![family];
    while let Some(lower) = families.last().unwrap().lower() {
        families.push(lower);
    }
    families.reverse();
    if families.len() != family.length() || chain.len() != family.length() {
        return Err(Error::LengthMismatch {
            expected: family.length(),
            got: chain.len(),
        });
    }
    let mut builder = Builder {
        families,
        rank,
        memo: HashMap::new(),
        flags: Vec::new(),
    };
    let code = family.space().encode(&chain.0);
    if !derivation.set.contains_code(code) {
        return Err(Error::DerivationMismatch(format!("{chain} is not in the derived set")));
    }
    let words = builder.build(derivation, code, chain.len())?;
    Ok(WitnessBundle {
        chain: chain.clone(),
        rank,
        alphabet: derivation.alphabet,
        words: words.as_ref().clone(),
        flags: builder.flags,
    })
}

struct Builder<'a> {
    /// `families[n - 1]` is the saturated family of length `n`.
    families: Vec<&'a ChainFamily>,
    rank: usize,
    memo: HashMap<(usize, u64), Arc<Vec<Word>>>,
    flags: Vec<String>,
}

impl<'a> Builder<'a> {
    fn space(&self, n: usize) -> ChainSpace<'a> {
        self.families[n - 1].space()
    }

    fn build(&mut self, node: &Arc<Derivation>, code: u64, n: usize) -> Result<Arc<Vec<Word>>> {
        let key = (Arc::as_ptr(node) as usize, code);
        if let Some(words) = self.memo.get(&key) {
            return Ok(words.clone());
        }
        let space = self.space(n);
        let words = match &node.rule {
            Rule::Initial { word, .. } => vec![word.clone(); n],
            Rule::Product { left, right } => {
                let (l, r) = self.split_product(&space, &left.set, &right.set, code, node.alphabet)?;
                let lw = self.build(left, l, n)?;
                let rw = self.build(right, r, n)?;
                lw.iter().zip(rw.iter()).map(|(a, b)| concat(&[a, b])).collect()
            }
            Rule::Operation { context, exponent } => self.build_operation(node, context, *exponent, code, n)?,
        };
        if words.iter().any(|w| w.len() > MAX_WITNESS_LENGTH) {
            return Err(Error::BudgetExceeded(MAX_WITNESS_LENGTH));
        }
        let words = Arc::new(words);
        self.memo.insert(key, words.clone());
        Ok(words)
    }

    fn split_product(
        &mut self,
        space: &ChainSpace<'_>,
        left: &ChainSet,
        right: &ChainSet,
        code: u64,
        b: LetterSet,
    ) -> Result<(u64, u64)> {
        let mut found = None;
        let mut count = 0;
        for &l in left.codes() {
            for &r in right.codes() {
                if space.mul(l, r) == code {
                    count += 1;
                    found.get_or_insert((l, r));
                }
            }
        }
        if count > 1 {
            self.flags.push(format!(
                "product for {:?} at {}: first of {count} factorizations",
                b,
                space.decode(code)
            ));
        }
        found.ok_or_else(|| Error::DerivationMismatch(format!("{} is not a product", space.decode(code))))
    }

    fn build_operation(
        &mut self,
        node: &Arc<Derivation>,
        context: &Arc<Derivation>,
        exponent: usize,
        code: u64,
        n: usize,
    ) -> Result<Vec<Word>> {
        let space = self.space(n);
        let lower = self.families[n - 2];
        let lower_space = lower.space();
        let b = node.alphabet;
        let t = &context.set;
        let idem = space.power(t, exponent);
        let inner_set = lower.chain_set(b);
        let unit = space.monoid().unit();

        // code = t' . (1, s) . t'' with t', t'' in T^e and s in Cs[B]
        let mut found = None;
        let mut count = 0;
        for &t1 in idem.codes() {
            for &s in inner_set.codes() {
                let mid = space.mul(t1, unit as u64 * lower_space_radix(&lower_space) + s);
                for &t2 in idem.codes() {
                    if space.mul(mid, t2) == code {
                        count += 1;
                        found.get_or_insert((t1, s, t2));
                    }
                }
            }
        }
        let (t1, s, t2) =
            found.ok_or_else(|| Error::DerivationMismatch(format!("{} not produced by operation", space.decode(code))))?;
        if count > 1 {
            self.flags.push(format!(
                "operation for {:?} at {}: first of {count} decompositions",
                b,
                space.decode(code)
            ));
        }

        let h = exponent << (2 * self.rank);
        let left = self.power_words(context, t, h, t1, n)?;
        let right = self.power_words(context, t, h, t2, n)?;
        let inner_chain = lower_space.decode(s);
        let inner_node = lower
            .set_containing(&inner_chain, b)
            .ok_or_else(|| Error::DerivationMismatch(format!("inner chain {inner_chain} has no derivation")))?
            .derivation
            .clone();
        let inner = self.build(&inner_node, s, n - 1)?;

        let mut words = Vec::with_capacity(n);
        words.push(concat(&[&left[0], &right[0]]));
        for j in 1..n {
            words.push(concat(&[&left[j], &inner[j - 1], &right[j]]));
        }
        Ok(words)
    }

    /// Words realizing `target` as a product of `h` chains of `t`, each
    /// realized through the context derivation.
    fn power_words(&mut self, context: &Arc<Derivation>, t: &ChainSet, h: usize, target: u64, n: usize) -> Result<Vec<Word>> {
        let space = self.space(n);
        let mut layers = vec![t.clone()];
        while layers.len() < h {
            let next = space.product(layers.last().unwrap(), t);
            layers.push(next);
        }
        if !layers[h - 1].contains_code(target) {
            return Err(Error::DerivationMismatch(format!("{} is not in T^{h}", space.decode(target))));
        }
        let mut factors = Vec::with_capacity(h);
        let mut current = target;
        for m in (1..h).rev() {
            let (prev, factor) = layers[m - 1]
                .codes()
                .iter()
                .find_map(|&p| t.codes().iter().find(|&&f| space.mul(p, f) == current).map(|&f| (p, f)))
                .expect("layer m is layer m-1 times T");
            factors.push(factor);
            current = prev;
        }
        factors.push(current);
        factors.reverse();
        let mut words = vec![Vec::new(); n];
        for f in factors {
            let part = self.build(context, f, n)?;
            for (w, p) in words.iter_mut().zip(part.iter()) {
                w.extend_from_slice(p);
            }
            if words[n - 1].len() > MAX_WITNESS_LENGTH {
                return Err(Error::BudgetExceeded(MAX_WITNESS_LENGTH));
            }
        }
        Ok(words)
    }
}

fn lower_space_radix(lower: &ChainSpace<'_>) -> u64 {
    (lower.monoid().size() as u64).pow(lower.length() as u32)
}

fn concat(parts: &[&Word]) -> Word {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// Re-checks images, contents and the game relation between consecutive
/// words at level 2 and the bundle's rank.
pub fn verify_bundle(bundle: &WitnessBundle, beta: &ContentMorphism) -> BundleCheck {
    if bundle.words.len() != bundle.chain.len() {
        return BundleCheck::Failed(format!(
            "bundle has {} words for a chain of length {}",
            bundle.words.len(),
            bundle.chain.len()
        ));
    }
    for (j, (w, &s)) in bundle.words.iter().zip(&bundle.chain.0).enumerate() {
        let (image, content) = beta.eval(w);
        if image != s {
            return BundleCheck::Failed(format!("image mismatch at j={}", j + 1));
        }
        if content != bundle.alphabet {
            return BundleCheck::Failed(format!("content mismatch at j={}", j + 1));
        }
    }
    let cfg = GameConfig::new(2, bundle.rank);
    for (j, pair) in bundle.words.windows(2).enumerate() {
        match ef_leq_with_budget(&pair[0], &pair[1], cfg, VERIFY_GAME_BUDGET) {
            Ok(true) => {}
            Ok(false) => return BundleCheck::Failed(format!("ef_leq failed at j={}", j + 1)),
            Err(e) => return BundleCheck::Failed(format!("ef_leq not evaluated at j={}: {e}", j + 1)),
        }
    }
    BundleCheck::Passed
}
