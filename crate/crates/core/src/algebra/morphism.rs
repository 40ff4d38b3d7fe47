use std::collections::{HashMap, VecDeque};

use crate::alphabet::{Alphabet, LetterSet, Word};
use crate::error::{Error, Result};
use crate::frontend::Dfa;

use super::monoid::{Element, FiniteMonoid, OrderRelation};

/// Default cap on the number of monoid elements.
pub const DEFAULT_MONOID_CAP: usize = 64;

/// A morphism `A* -> M`, determined by the images of the letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    alphabet: Alphabet,
    monoid: FiniteMonoid,
    letters: Vec<Element>,
}

impl Morphism {
    pub fn new(alphabet: Alphabet, monoid: FiniteMonoid, letters: Vec<Element>) -> Result<Self> {
        if letters.len() != alphabet.len() {
            return Err(Error::InvalidArgument(format!(
                "{} letter images for {} letters",
                letters.len(),
                alphabet.len()
            )));
        }
        if letters.iter().any(|&s| s >= monoid.size()) {
            return Err(Error::InvalidArgument("letter image out of range".into()));
        }
        Ok(Morphism {
            alphabet,
            monoid,
            letters,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn letter_image(&self, letter: usize) -> Element {
        self.letters[letter]
    }

    pub fn letter_images(&self) -> &[Element] {
        &self.letters
    }

    pub fn eval(&self, word: &[usize]) -> Element {
        self.monoid.product(word.iter().map(|&a| self.letters[a]))
    }

    /// Shortest word for every element reachable from the unit, ties broken
    /// length-lexicographically. `None` for elements not in the image.
    pub fn shortest_words(&self) -> Vec<Option<Word>> {
        let mut words: Vec<Option<Word>> = vec![None; self.monoid.size()];
        words[self.monoid.unit()] = Some(Vec::new());
        let mut queue = VecDeque::from([self.monoid.unit()]);
        while let Some(s) = queue.pop_front() {
            let base = words[s].clone().expect("queued elements have words");
            for (a, &img) in self.letters.iter().enumerate() {
                let t = self.monoid.mul(s, img);
                if words[t].is_none() {
                    let mut w = base.clone();
                    w.push(a);
                    words[t] = Some(w);
                    queue.push_back(t);
                }
            }
        }
        words
    }

    /// Every element is the image of some word.
    pub fn is_surjective(&self) -> bool {
        self.shortest_words().iter().all(Option::is_some)
    }
}

/// A language given as `alpha^{-1}(F)`, optionally with the syntactic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognizedLanguage {
    pub morphism: Morphism,
    pub accepting: Vec<bool>,
    /// Present when built by [`syntactic_morphism`].
    pub order: Option<OrderRelation>,
}

impl RecognizedLanguage {
    pub fn new(morphism: Morphism, accepting: Vec<bool>, order: Option<OrderRelation>) -> Result<Self> {
        let n = morphism.monoid().size();
        if accepting.len() != n {
            return Err(Error::InvalidArgument("accepting set has the wrong size".into()));
        }
        if order.as_ref().is_some_and(|o| o.size() != n) {
            return Err(Error::InvalidArgument("order has the wrong size".into()));
        }
        Ok(RecognizedLanguage {
            morphism,
            accepting,
            order,
        })
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        self.morphism.monoid()
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.morphism.alphabet()
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.accepting[self.morphism.eval(word)]
    }

    pub fn accepting_elements(&self) -> Vec<Element> {
        (0..self.accepting.len()).filter(|&s| self.accepting[s]).collect()
    }

    pub fn is_syntactic(&self) -> bool {
        self.order.is_some()
    }

    pub fn syntactic_order(&self) -> Result<&OrderRelation> {
        self.order.as_ref().ok_or(Error::NotSyntactic)
    }

    /// The complement language over the same monoid. The syntactic order of
    /// the complement is the dual order.
    pub fn complement(&self) -> Self {
        RecognizedLanguage {
            morphism: self.morphism.clone(),
            accepting: self.accepting.iter().map(|a| !a).collect(),
            order: self.order.as_ref().map(OrderRelation::reversed),
        }
    }
}

/// The syntactic ordered monoid of the language of `dfa`, computed as the
/// transition monoid of its minimal automaton. Elements are numbered in
/// breadth-first order of their shortest words (so the unit is `0`) and
/// named by those words.
pub fn syntactic_morphism(dfa: &Dfa, cap: usize) -> Result<RecognizedLanguage> {
    let dfa = dfa.minimize();
    let n = dfa.num_states();
    let k = dfa.alphabet().len();
    let identity: Vec<usize> = (0..n).collect();
    let letter_maps: Vec<Vec<usize>> = (0..k)
        .map(|a| (0..n).map(|q| dfa.next(q, a)).collect())
        .collect();

    let mut index: HashMap<Vec<usize>, Element> = HashMap::from([(identity.clone(), 0)]);
    let mut maps = vec![identity];
    let mut names = vec!["_".to_string()];
    let mut head = 0;
    while head < maps.len() {
        let current = maps[head].clone();
        let name = names[head].clone();
        head += 1;
        for (a, letter) in letter_maps.iter().enumerate() {
            let next: Vec<usize> = current.iter().map(|&q| letter[q]).collect();
            if !index.contains_key(&next) {
                if maps.len() == cap {
                    return Err(Error::MonoidTooLarge { cap });
                }
                index.insert(next.clone(), maps.len());
                maps.push(next);
                let c = dfa.alphabet().letter(a);
                names.push(if name == "_" { c.to_string() } else { format!("{name}{c}") });
            }
        }
    }

    let size = maps.len();
    let mut table = Vec::with_capacity(size * size);
    for f in &maps {
        for g in &maps {
            // apply f, then g
            let fg: Vec<usize> = f.iter().map(|&q| g[q]).collect();
            table.push(index[&fg]);
        }
    }
    let monoid = FiniteMonoid::new(size, 0, table)?.with_names(names);
    let letters: Vec<Element> = letter_maps.iter().map(|m| index[m]).collect();
    let accepting: Vec<bool> = maps.iter().map(|f| dfa.is_final(f[dfa.initial()])).collect();
    let order = syntactic_order(&monoid, &accepting);
    let morphism = Morphism::new(dfa.alphabet().clone(), monoid, letters)?;
    RecognizedLanguage::new(morphism, accepting, Some(order))
}

/// `s <= t` iff every context `(x, y)` with `xsy` in `F` also has `xty` in `F`.
pub fn syntactic_order(monoid: &FiniteMonoid, accepting: &[bool]) -> OrderRelation {
    let n = monoid.size();
    let contexts: Vec<Vec<bool>> = monoid
        .elements()
        .map(|s| {
            let mut ctx = Vec::with_capacity(n * n);
            for x in 0..n {
                let xs = monoid.mul(x, s);
                for y in 0..n {
                    ctx.push(accepting[monoid.mul(xs, y)]);
                }
            }
            ctx
        })
        .collect();
    OrderRelation::from_fn(n, |s, t| {
        contexts[s].iter().zip(&contexts[t]).all(|(&a, &b)| !a || b)
    })
}

/// Morphism into the submonoid of `M1 x M2` generated by the paired letter
/// images, with the preimages of both accepting sets.
#[derive(Debug, Clone)]
pub struct ProductMorphism {
    pub morphism: Morphism,
    pub first: Vec<bool>,
    pub second: Vec<bool>,
    /// Component elements of each product element.
    pub components: Vec<(Element, Element)>,
}

pub fn product_morphism(l1: &RecognizedLanguage, l2: &RecognizedLanguage) -> Result<ProductMorphism> {
    if l1.alphabet() != l2.alphabet() {
        return Err(Error::AlphabetMismatch(
            l1.alphabet().to_string(),
            l2.alphabet().to_string(),
        ));
    }
    let (m1, m2) = (l1.monoid(), l2.monoid());
    let k = l1.alphabet().len();
    let gens: Vec<(Element, Element)> = (0..k)
        .map(|a| (l1.morphism.letter_image(a), l2.morphism.letter_image(a)))
        .collect();
    let unit = (m1.unit(), m2.unit());
    let mut index: HashMap<(Element, Element), Element> = HashMap::from([(unit, 0)]);
    let mut components = vec![unit];
    let mut names = vec!["_".to_string()];
    let mut head = 0;
    while head < components.len() {
        let (x, y) = components[head];
        let name = names[head].clone();
        head += 1;
        for (a, &(g1, g2)) in gens.iter().enumerate() {
            let next = (m1.mul(x, g1), m2.mul(y, g2));
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(next) {
                e.insert(components.len());
                components.push(next);
                let c = l1.alphabet().letter(a);
                names.push(if name == "_" { c.to_string() } else { format!("{name}{c}") });
            }
        }
    }
    let size = components.len();
    let mut table = Vec::with_capacity(size * size);
    for &(x1, y1) in &components {
        for &(x2, y2) in &components {
            table.push(index[&(m1.mul(x1, x2), m2.mul(y1, y2))]);
        }
    }
    let monoid = FiniteMonoid::new(size, 0, table)?.with_names(names);
    let letters = gens.iter().map(|g| index[g]).collect();
    let morphism = Morphism::new(l1.alphabet().clone(), monoid, letters)?;
    Ok(ProductMorphism {
        morphism,
        first: components.iter().map(|&(x, _)| l1.accepting[x]).collect(),
        second: components.iter().map(|&(_, y)| l2.accepting[y]).collect(),
        components,
    })
}

/// The morphism `w -> (alpha(w), content(w))`, tabulated over all reachable
/// pairs together with a shortest witness word for each.
#[derive(Debug, Clone)]
pub struct ContentMorphism {
    morphism: Morphism,
    /// `witness[B][s]`: shortest word with image `s` and content exactly `B`.
    witness: Vec<Vec<Option<Word>>>,
}

impl ContentMorphism {
    pub fn new(morphism: Morphism) -> Self {
        let n = morphism.monoid().size();
        let k = morphism.alphabet().len();
        let mut witness: Vec<Vec<Option<Word>>> = vec![vec![None; n]; 1 << k];
        let unit = morphism.monoid().unit();
        witness[0][unit] = Some(Vec::new());
        let mut queue = VecDeque::from([(unit, LetterSet::EMPTY)]);
        while let Some((s, content)) = queue.pop_front() {
            let base = witness[content.index()][s].clone().expect("queued pairs have witnesses");
            for a in 0..k {
                let t = morphism.monoid().mul(s, morphism.letter_image(a));
                let c = content.with(a);
                if witness[c.index()][t].is_none() {
                    let mut w = base.clone();
                    w.push(a);
                    witness[c.index()][t] = Some(w);
                    queue.push_back((t, c));
                }
            }
        }
        ContentMorphism { morphism, witness }
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        self.morphism.monoid()
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.morphism.alphabet()
    }

    pub fn eval(&self, word: &[usize]) -> (Element, LetterSet) {
        (self.morphism.eval(word), LetterSet::of_word(word))
    }

    /// `{ alpha(w) : content(w) = B }`, sorted.
    pub fn image_with_content(&self, b: LetterSet) -> Vec<Element> {
        self.witness[b.index()]
            .iter()
            .enumerate()
            .filter(|(_, w)| w.is_some())
            .map(|(s, _)| s)
            .collect()
    }

    /// Shortest (then length-lexicographically least) word with image `s`
    /// and content exactly `b`.
    pub fn witness(&self, s: Element, b: LetterSet) -> Option<&Word> {
        self.witness[b.index()][s].as_ref()
    }

    /// All sub-alphabets, by increasing size.
    pub fn subsets(&self) -> Vec<LetterSet> {
        LetterSet::all_by_size(self.alphabet().len())
    }
}

/// Parses a regex, minimizes it and builds its syntactic ordered monoid.
pub fn language_from_regex(regex: &str, alphabet: &Alphabet, cap: usize) -> Result<RecognizedLanguage> {
    let parsed = crate::frontend::parse_regex(regex, alphabet)?;
    syntactic_morphism(&crate::frontend::regex_to_min_dfa(&parsed), cap)
}

pub fn image_with_content(beta: &ContentMorphism, b: LetterSet) -> Vec<Element> {
    beta.image_with_content(b)
}
