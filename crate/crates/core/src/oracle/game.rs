use std::collections::HashMap;

use crate::alphabet::LetterSet;
use crate::error::{Error, Result};

/// Default cap on `|w| * |w'|` accepted by [`ef_leq`].
pub const DEFAULT_GAME_BUDGET: usize = 1_000_000;

/// Parameters of the game for the preorder `≲_i^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GameConfig {
    /// Level `i >= 1`; Spoiler may switch words at most `i - 1` times.
    pub level: usize,
    /// Number of rounds `k`.
    pub rounds: usize,
}

impl GameConfig {
    pub fn new(level: usize, rounds: usize) -> Self {
        GameConfig { level, rounds }
    }
}

/// Whether Duplicator wins the `k`-round game of level `i` on `(w, w2)`
/// with `w` initially active, i.e. whether `w ≲_i^k w2`.
pub fn ef_leq(w: &[usize], w2: &[usize], cfg: GameConfig) -> Result<bool> {
    ef_leq_with_budget(w, w2, cfg, DEFAULT_GAME_BUDGET)
}

pub fn ef_leq_with_budget(w: &[usize], w2: &[usize], cfg: GameConfig, budget: usize) -> Result<bool> {
    if cfg.level == 0 {
        return Err(Error::InvalidArgument("game level must be at least 1".into()));
    }
    if w.len().saturating_mul(w2.len()) > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    let mut game = Game::new(w, w2);
    let whole = [(0, w.len() as u32), (0, w2.len() as u32)];
    Ok(game.wins(whole, cfg.rounds, cfg.level - 1, 0))
}

type Interval = (u32, u32);

/// The game position after some rounds splits into independent games on
/// the intervals between consecutive pebbles; Duplicator wins the whole
/// position iff she wins each of them with the remaining rounds, switches
/// and active word. Positions are therefore pairs of intervals.
struct Game<'a> {
    words: [&'a [usize]; 2],
    /// `prefix[side][letter][p]`: occurrences of `letter` in `words[side][..p]`.
    prefix: [Vec<Vec<u32>>; 2],
    memo: HashMap<([Interval; 2], usize, usize, usize), bool>,
}

impl<'a> Game<'a> {
    fn new(w: &'a [usize], w2: &'a [usize]) -> Self {
        let letters = w.iter().chain(w2).map(|&a| a + 1).max().unwrap_or(0);
        let count = |word: &[usize]| -> Vec<Vec<u32>> {
            (0..letters)
                .map(|a| {
                    let mut acc = 0;
                    let mut v = Vec::with_capacity(word.len() + 1);
                    v.push(0);
                    for &x in word {
                        acc += (x == a) as u32;
                        v.push(acc);
                    }
                    v
                })
                .collect()
        };
        Game {
            words: [w, w2],
            prefix: [count(w), count(w2)],
            memo: HashMap::new(),
        }
    }

    fn content(&self, side: usize, (lo, hi): Interval) -> LetterSet {
        let mut set = LetterSet::EMPTY;
        for (a, counts) in self.prefix[side].iter().enumerate() {
            if counts[hi as usize] > counts[lo as usize] {
                set = set.with(a);
            }
        }
        set
    }

    fn wins(&mut self, iv: [Interval; 2], rounds: usize, switches: usize, active: usize) -> bool {
        if rounds == 0 {
            return true;
        }
        if rounds == 1 {
            // one pebble: only labels matter
            let here = self.content(active, iv[active]);
            let there = self.content(1 - active, iv[1 - active]);
            return here.is_subset(there) && (switches == 0 || there.is_subset(here));
        }
        let key = (iv, rounds, switches, active);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut result = true;
        let sides: &[usize] = if switches > 0 { &[0, 1] } else { &[0] };
        'outer: for &offset in sides {
            let side = (active + offset) % 2;
            let next_switches = switches - offset;
            let other = 1 - side;
            let (lo, hi) = iv[side];
            let (olo, ohi) = iv[other];
            for x in lo..hi {
                let letter = self.words[side][x as usize];
                let mut answered = false;
                for y in olo..ohi {
                    if self.words[other][y as usize] != letter {
                        continue;
                    }
                    let mut left = [(0, 0); 2];
                    let mut right = [(0, 0); 2];
                    left[side] = (lo, x);
                    right[side] = (x + 1, hi);
                    left[other] = (olo, y);
                    right[other] = (y + 1, ohi);
                    if self.wins(left, rounds - 1, next_switches, side)
                        && self.wins(right, rounds - 1, next_switches, side)
                    {
                        answered = true;
                        break;
                    }
                }
                if !answered {
                    result = false;
                    break 'outer;
                }
            }
        }
        self.memo.insert(key, result);
        result
    }
}

/// `w ≲_1^k w2`, decided without the game tree.
///
/// Spoiler never leaves `w`, so Duplicator answers a pebble on letter `a` with
/// the leftmost `a` in `w2` that still lets the part to its left be matched;
/// moving further left only helps on the right, since `≲_1^k` is stable under
/// extending the larger word. `reach(i, j, k, s)` is the shortest `e` with
/// `w[i..j] ≲_1^k w2[s..e]`.
///
/// When `|w| <= k` this is the subword order. For larger `w` it is finer than
/// comparing subwords of length at most `k`: `aaa` and `aa` have the same
/// subwords of length 2 but `aaa` is not below `aa` at rank 2.
pub fn sigma1_leq(w: &[usize], w2: &[usize], k: usize) -> bool {
    let letters = w.iter().chain(w2).map(|&a| a + 1).max().unwrap_or(0);
    // next[p][a]: smallest index >= p holding a, or len
    let mut next = vec![vec![w2.len(); letters]; w2.len() + 1];
    for p in (0..w2.len()).rev() {
        next[p] = next[p + 1].clone();
        next[p][w2[p]] = p;
    }
    let mut memo = HashMap::new();
    let never = w2.len() + 1;
    reach(w, &next, 0, w.len(), k, 0, never, &mut memo) <= w2.len()
}

#[allow(clippy::too_many_arguments)]
fn reach(
    w: &[usize],
    next: &[Vec<usize>],
    i: usize,
    j: usize,
    k: usize,
    s: usize,
    never: usize,
    memo: &mut HashMap<(usize, usize, usize, usize), usize>,
) -> usize {
    if k == 0 || i == j || s >= never {
        return s.min(never);
    }
    if let Some(&e) = memo.get(&(i, j, k, s)) {
        return e;
    }
    let mut e = s;
    for p in i..j {
        let left = reach(w, next, i, p, k - 1, s, never, memo);
        if left >= never - 1 {
            e = never;
            break;
        }
        let q = next[left][w[p]];
        if q == never - 1 {
            e = never;
            break;
        }
        e = e.max(reach(w, next, p + 1, j, k - 1, q + 1, never, memo));
        if e == never {
            break;
        }
    }
    memo.insert((i, j, k, s), e);
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Vec<usize> {
        text.bytes().map(|b| (b - b'a') as usize).collect()
    }

    fn leq(a: &str, b: &str, i: usize, k: usize) -> bool {
        ef_leq(&w(a), &w(b), GameConfig::new(i, k)).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert!(leq("bb", "bab", 1, 1));
        assert!(!leq("bb", "bab", 2, 2));
        assert!(leq("abba", "abba", 3, 3));
        assert!(leq("", "", 2, 2));
        assert!(sigma1_leq(&w("bbb"), &w("ababab"), 3));
        assert!(!sigma1_leq(&w("ab"), &w("ba"), 2));
        assert!(sigma1_leq(&[], &w("ab"), 4));
        assert!(!sigma1_leq(&w("aaa"), &w("aa"), 2));
        assert!(!leq("aaa", "aa", 1, 2));
    }

    #[test]
    fn budget_is_enforced() {
        let long = vec![0; 2000];
        assert_eq!(
            ef_leq(&long, &long, GameConfig::new(2, 2)),
            Err(Error::BudgetExceeded(DEFAULT_GAME_BUDGET))
        );
        assert!(ef_leq_with_budget(&long, &long, GameConfig::new(2, 2), 1 << 23).unwrap());
    }

    #[test]
    fn powers_of_a_letter() {
        // a^m and a^m' agree on sentences of rank k once both are >= 2^k - 1
        for k in 1..=3 {
            let t = (1 << k) - 1;
            for m in 0..10 {
                for m2 in 0..10 {
                    let expect = m == m2 || (m >= t && m2 >= t);
                    let got = leq(&"a".repeat(m), &"a".repeat(m2), 2, k)
                        && leq(&"a".repeat(m2), &"a".repeat(m), 2, k);
                    assert_eq!(got, expect, "k={k} m={m} m2={m2}");
                }
            }
        }
    }

    /// Plain game search over explicit pebble lists.
    fn naive(words: [&[usize]; 2], pebbles: &mut Vec<[usize; 2]>, rounds: usize, switches: usize, active: usize) -> bool {
        if rounds == 0 {
            return true;
        }
        let sides: &[usize] = if switches > 0 { &[0, 1] } else { &[0] };
        for &offset in sides {
            let side = (active + offset) % 2;
            for x in 0..words[side].len() {
                let mut answered = false;
                for y in 0..words[1 - side].len() {
                    let mut p = [0; 2];
                    p[side] = x;
                    p[1 - side] = y;
                    let ok = words[0][p[0]] == words[1][p[1]]
                        && pebbles
                            .iter()
                            .all(|q| (q[0] < p[0]) == (q[1] < p[1]) && (q[0] == p[0]) == (q[1] == p[1]));
                    if !ok {
                        continue;
                    }
                    pebbles.push(p);
                    let won = naive(words, pebbles, rounds - 1, switches - offset, side);
                    pebbles.pop();
                    if won {
                        answered = true;
                        break;
                    }
                }
                if !answered {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn matches_naive_search() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..3000 {
            let len = rng.gen_range(0..7);
            let a: Vec<usize> = (0..len).map(|_| rng.gen_range(0..2)).collect();
            let len = rng.gen_range(0..7);
            let b: Vec<usize> = (0..len).map(|_| rng.gen_range(0..2)).collect();
            let level = rng.gen_range(1..4);
            let rounds = rng.gen_range(0..4);
            let fast = ef_leq(&a, &b, GameConfig::new(level, rounds)).unwrap();
            let slow = naive([&a, &b], &mut Vec::new(), rounds, level - 1, 0);
            assert_eq!(fast, slow, "{a:?} {b:?} level={level} rounds={rounds}");
        }
    }
}
