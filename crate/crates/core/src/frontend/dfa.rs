//! Complete deterministic automata, the text format, determinization and
//! minimization.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

use super::regex::{Regex, RegexAst};

/// A complete DFA. States are `0..states`; `transitions` is row-major by state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    states: usize,
    initial: usize,
    finals: Vec<bool>,
    transitions: Vec<usize>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        initial: usize,
        finals: Vec<bool>,
        transitions: Vec<usize>,
    ) -> Result<Self> {
        let states = finals.len();
        if states == 0 {
            return Err(Error::InvalidArgument("automaton has no states".into()));
        }
        if transitions.len() != states * alphabet.len() {
            return Err(Error::InvalidArgument("transition table is not total".into()));
        }
        if initial >= states {
            return Err(Error::DanglingState { line: 0, id: initial });
        }
        if let Some(&bad) = transitions.iter().find(|&&t| t >= states) {
            return Err(Error::DanglingState { line: 0, id: bad });
        }
        Ok(Dfa {
            alphabet,
            states,
            initial,
            finals,
            transitions,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.states
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn next(&self, state: usize, letter: usize) -> usize {
        self.transitions[state * self.alphabet.len() + letter]
    }

    pub fn run_from(&self, state: usize, word: &[usize]) -> usize {
        word.iter().fold(state, |q, &a| self.next(q, a))
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.finals[self.run_from(self.initial, word)]
    }

    /// Same machine with final and non-final states swapped.
    pub fn complement(&self) -> Dfa {
        Dfa {
            finals: self.finals.iter().map(|f| !f).collect(),
            ..self.clone()
        }
    }

    /// Minimal complete DFA for the same language, with states numbered in
    /// breadth-first order from the initial state (letters in alphabet order).
    /// Minimal automata for equal languages therefore compare equal.
    pub fn minimize(&self) -> Dfa {
        let k = self.alphabet.len();
        // Reachable states in BFS order.
        let mut order = vec![self.initial];
        let mut seen = vec![false; self.states];
        seen[self.initial] = true;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for a in 0..k {
                let r = self.next(q, a);
                if !seen[r] {
                    seen[r] = true;
                    order.push(r);
                }
            }
        }

        // Moore partition refinement over the reachable states.
        let mut class: HashMap<usize, usize> =
            order.iter().map(|&q| (q, usize::from(self.finals[q]))).collect();
        let mut count = class.values().collect::<BTreeSet<_>>().len();
        loop {
            let mut signatures: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next_class = HashMap::new();
            for &q in &order {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[&q]);
                sig.extend((0..k).map(|a| class[&self.next(q, a)]));
                let fresh = signatures.len();
                let id = *signatures.entry(sig).or_insert(fresh);
                next_class.insert(q, id);
            }
            let next_count = signatures.len();
            class = next_class;
            if next_count == count {
                break;
            }
            count = next_count;
        }

        // Canonical renumbering: BFS over the quotient.
        let mut number: HashMap<usize, usize> = HashMap::new();
        let mut representative = Vec::new();
        let mut queue = VecDeque::from([self.initial]);
        number.insert(class[&self.initial], 0);
        representative.push(self.initial);
        while let Some(q) = queue.pop_front() {
            for a in 0..k {
                let r = self.next(q, a);
                let c = class[&r];
                if let std::collections::hash_map::Entry::Vacant(e) = number.entry(c) {
                    e.insert(representative.len());
                    representative.push(r);
                    queue.push_back(r);
                }
            }
        }
        let n = representative.len();
        let mut transitions = Vec::with_capacity(n * k);
        for &q in &representative {
            for a in 0..k {
                transitions.push(number[&class[&self.next(q, a)]]);
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            states: n,
            initial: 0,
            finals: representative.iter().map(|&q| self.finals[q]).collect(),
            transitions,
        }
    }

    /// Serializes in the line-oriented automaton format.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.alphabet.letters().iter().map(|c| c.to_string()).collect();
        writeln!(f, "alphabet: {}", letters.join(" "))?;
        writeln!(f, "states: {}", self.states)?;
        writeln!(f, "initial: {}", self.initial)?;
        let finals: Vec<String> = (0..self.states)
            .filter(|&q| self.finals[q])
            .map(|q| q.to_string())
            .collect();
        if finals.is_empty() {
            writeln!(f, "final:")?;
        } else {
            writeln!(f, "final: {}", finals.join(" "))?;
        }
        for q in 0..self.states {
            for (a, &c) in self.alphabet.letters().iter().enumerate() {
                writeln!(f, "trans: {q} {c} {}", self.next(q, a))?;
            }
        }
        Ok(())
    }
}

/// Parses the line-oriented automaton format. Missing transitions are sent
/// to a fresh rejecting sink appended as the last state; the result is not
/// minimized.
pub fn parse_automaton(text: &str) -> Result<Dfa> {
    let mut alphabet: Option<Alphabet> = None;
    let mut states: Option<usize> = None;
    let mut initial: Option<(usize, usize)> = None;
    let mut finals: Option<Vec<(usize, usize)>> = None;
    let mut transitions: Vec<(usize, usize, char, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let malformed = |message: String| Error::Malformed {
            line: line_no,
            message,
        };
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| malformed(format!("expected 'key: value', got '{line}'")))?;
        let value = value.trim();
        let number = |token: &str| -> Result<usize> {
            token
                .parse::<usize>()
                .map_err(|_| malformed(format!("expected a state id, got '{token}'")))
        };
        match key.trim() {
            "alphabet" => {
                let mut letters = Vec::new();
                for token in value.split_whitespace() {
                    let mut chars = token.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => letters.push(c),
                        _ => return Err(malformed(format!("letter '{token}' is not a single character"))),
                    }
                }
                alphabet = Some(Alphabet::new(letters)?);
            }
            "states" => states = Some(number(value)?),
            "initial" => initial = Some((number(value)?, line_no)),
            "final" => {
                let list = finals.get_or_insert_with(Vec::new);
                for token in value.split_whitespace() {
                    list.push((number(token)?, line_no));
                }
            }
            "trans" => {
                let parts: Vec<&str> = value.split_whitespace().collect();
                if parts.len() != 3 {
                    return Err(malformed("expected 'trans: <from> <letter> <to>'".into()));
                }
                let mut chars = parts[1].chars();
                let letter = match (chars.next(), chars.next()) {
                    (Some(c), None) => c,
                    _ => return Err(malformed(format!("letter '{}' is not a single character", parts[1]))),
                };
                transitions.push((line_no, number(parts[0])?, letter, number(parts[2])?));
            }
            other => return Err(malformed(format!("unknown section '{other}'"))),
        }
    }

    let alphabet = alphabet.ok_or(Error::MissingSection("alphabet"))?;
    let n = states.ok_or(Error::MissingSection("states"))?;
    let (initial, initial_line) = initial.ok_or(Error::MissingSection("initial"))?;
    let finals = finals.ok_or(Error::MissingSection("final"))?;
    if n == 0 {
        return Err(Error::Malformed {
            line: 0,
            message: "automaton must have at least one state".into(),
        });
    }
    let check = |id: usize, line: usize| {
        if id >= n {
            Err(Error::DanglingState { line, id })
        } else {
            Ok(())
        }
    };
    check(initial, initial_line)?;
    let mut is_final = vec![false; n];
    for &(q, line) in &finals {
        check(q, line)?;
        is_final[q] = true;
    }

    let k = alphabet.len();
    let mut table: Vec<Option<usize>> = vec![None; n * k];
    for &(line, from, letter, to) in &transitions {
        check(from, line)?;
        check(to, line)?;
        let a = alphabet.index_of(letter).ok_or(Error::UnknownLetter(letter))?;
        let slot = &mut table[from * k + a];
        if slot.is_some() {
            return Err(Error::DuplicateTransition {
                line,
                state: from,
                letter,
            });
        }
        *slot = Some(to);
    }

    let partial = table.iter().any(Option::is_none);
    let total = if partial { n + 1 } else { n };
    let sink = n;
    let mut full: Vec<usize> = table.into_iter().map(|t| t.unwrap_or(sink)).collect();
    if partial {
        full.extend(std::iter::repeat_n(sink, k));
        is_final.push(false);
    }
    debug_assert_eq!(full.len(), total * k);
    Dfa::new(alphabet, initial, is_final, full)
}

/// Minimal complete DFA for the language of a regular expression.
pub fn regex_to_min_dfa(regex: &Regex) -> Dfa {
    let nfa = Nfa::from_ast(&regex.ast);
    nfa.determinize(&regex.alphabet).minimize()
}

/// Thompson automaton; only used as an intermediate step.
struct Nfa {
    epsilon: Vec<Vec<usize>>,
    letter: Vec<Vec<(usize, usize)>>,
    start: usize,
    accept: usize,
}

impl Nfa {
    fn from_ast(ast: &RegexAst) -> Self {
        let mut nfa = Nfa {
            epsilon: Vec::new(),
            letter: Vec::new(),
            start: 0,
            accept: 0,
        };
        let (s, t) = nfa.build(ast);
        nfa.start = s;
        nfa.accept = t;
        nfa
    }

    fn state(&mut self) -> usize {
        self.epsilon.push(Vec::new());
        self.letter.push(Vec::new());
        self.epsilon.len() - 1
    }

    fn build(&mut self, ast: &RegexAst) -> (usize, usize) {
        let s = self.state();
        let t = self.state();
        match ast {
            RegexAst::EmptyLanguage => {}
            RegexAst::EmptyWord => self.epsilon[s].push(t),
            RegexAst::Letter(a) => self.letter[s].push((*a, t)),
            RegexAst::Union(x, y) => {
                for sub in [x, y] {
                    let (xs, xt) = self.build(sub);
                    self.epsilon[s].push(xs);
                    self.epsilon[xt].push(t);
                }
            }
            RegexAst::Concat(x, y) => {
                let (xs, xt) = self.build(x);
                let (ys, yt) = self.build(y);
                self.epsilon[s].push(xs);
                self.epsilon[xt].push(ys);
                self.epsilon[yt].push(t);
            }
            RegexAst::Star(x) => {
                let (xs, xt) = self.build(x);
                self.epsilon[s].push(xs);
                self.epsilon[s].push(t);
                self.epsilon[xt].push(xs);
                self.epsilon[xt].push(t);
            }
        }
        (s, t)
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &r in &self.epsilon[q] {
                if set.insert(r) {
                    stack.push(r);
                }
            }
        }
    }

    fn determinize(&self, alphabet: &Alphabet) -> Dfa {
        let k = alphabet.len();
        let mut start = BTreeSet::from([self.start]);
        self.closure(&mut start);
        let mut index: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::from([(start.clone(), 0)]);
        let mut subsets = vec![start];
        let mut transitions = Vec::new();
        let mut head = 0;
        while head < subsets.len() {
            let current = subsets[head].clone();
            head += 1;
            for a in 0..k {
                let mut next: BTreeSet<usize> = current
                    .iter()
                    .flat_map(|&q| self.letter[q].iter())
                    .filter(|(l, _)| *l == a)
                    .map(|&(_, r)| r)
                    .collect();
                self.closure(&mut next);
                let fresh = subsets.len();
                let id = *index.entry(next.clone()).or_insert_with(|| {
                    subsets.push(next);
                    fresh
                });
                transitions.push(id);
            }
        }
        let finals = subsets.iter().map(|s| s.contains(&self.accept)).collect();
        Dfa::new(alphabet.clone(), 0, finals, transitions).expect("subset construction is total")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::regex::parse_regex;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    const CONTAINS_A: &str = "# contains an a\nalphabet: a b\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 a 1\ntrans: 0 b 0\ntrans: 1 a 1\ntrans: 1 b 1\n";

    #[test]
    fn parses_contains_a() {
        let dfa = parse_automaton(CONTAINS_A).unwrap();
        assert_eq!(dfa.num_states(), 2);
        assert!(dfa.accepts(&[1, 0, 1]));
        assert!(!dfa.accepts(&[1, 1]));
        assert_eq!(parse_automaton(&dfa.to_text()).unwrap(), dfa);
    }

    #[test]
    fn completes_partial_machines() {
        let text = "alphabet: a b\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 a 1\ntrans: 0 b 0\ntrans: 1 a 1\n";
        let dfa = parse_automaton(text).unwrap();
        assert_eq!(dfa.num_states(), 3);
        assert_eq!(dfa.next(1, 1), 2);
        assert_eq!(dfa.next(2, 0), 2);
        assert!(!dfa.is_final(2));
    }

    #[test]
    fn automaton_errors() {
        let dangling = "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 1\ntrans: 0 a 7\n";
        assert!(matches!(parse_automaton(dangling), Err(Error::DanglingState { id: 7, line: 5 })));
        let missing = "alphabet: a b\ninitial: 0\nfinal: 1\n";
        assert_eq!(parse_automaton(missing).unwrap_err(), Error::MissingSection("states"));
        let dup = "alphabet: a\nstates: 1\ninitial: 0\nfinal:\ntrans: 0 a 0\ntrans: 0 a 0\n";
        assert!(matches!(parse_automaton(dup), Err(Error::DuplicateTransition { state: 0, letter: 'a', .. })));
        let letter = "alphabet: a\nstates: 1\ninitial: 0\nfinal:\ntrans: 0 b 0\n";
        assert_eq!(parse_automaton(letter).unwrap_err(), Error::UnknownLetter('b'));
    }

    #[test]
    fn b_star_has_two_states() {
        let dfa = regex_to_min_dfa(&parse_regex("b*", &ab()).unwrap());
        assert_eq!(dfa.num_states(), 2);
        assert!(dfa.is_final(0));
        assert!(!dfa.is_final(dfa.next(0, 0)));
        assert_eq!(dfa.next(0, 1), 0);
    }

    #[test]
    fn full_and_empty_languages() {
        let full = regex_to_min_dfa(&parse_regex("(a+b)*", &ab()).unwrap());
        assert_eq!(full.num_states(), 1);
        assert!(full.is_final(0));
        let empty = regex_to_min_dfa(&parse_regex("#", &ab()).unwrap());
        assert_eq!(empty.num_states(), 1);
        assert!(!empty.is_final(0));
    }
}
