use crate::error::{Error, Result};

/// Element of a [`FiniteMonoid`], an index into its multiplication table.
pub type Element = usize;

/// A finite monoid given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    size: usize,
    unit: Element,
    table: Vec<Element>,
    names: Option<Vec<String>>,
}

impl FiniteMonoid {
    /// Builds a monoid from a row-major table, checking closure and the unit
    /// law. Associativity is the caller's responsibility; see
    /// [`FiniteMonoid::check_associative`].
    pub fn new(size: usize, unit: Element, table: Vec<Element>) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidArgument("a monoid has at least one element".into()));
        }
        if table.len() != size * size {
            return Err(Error::InvalidArgument(format!(
                "multiplication table has {} entries, expected {}",
                table.len(),
                size * size
            )));
        }
        if unit >= size || table.iter().any(|&x| x >= size) {
            return Err(Error::InvalidArgument("element id out of range".into()));
        }
        let m = FiniteMonoid {
            size,
            unit,
            table,
            names: None,
        };
        for x in 0..size {
            if m.mul(unit, x) != x || m.mul(x, unit) != x {
                return Err(Error::InvalidArgument(format!("{unit} is not a unit for {x}")));
            }
        }
        Ok(m)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        debug_assert_eq!(names.len(), self.size);
        self.names = Some(names);
        self
    }

    /// The trivial monoid `{1}`.
    pub fn trivial() -> Self {
        FiniteMonoid::new(1, 0, vec![0]).expect("trivial monoid")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn unit(&self) -> Element {
        self.unit
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.size + b]
    }

    pub fn product(&self, elements: impl IntoIterator<Item = Element>) -> Element {
        elements.into_iter().fold(self.unit, |acc, x| self.mul(acc, x))
    }

    pub fn pow(&self, s: Element, e: usize) -> Element {
        (0..e).fold(self.unit, |acc, _| self.mul(acc, s))
    }

    pub fn table(&self) -> &[Element] {
        &self.table
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of an element: its shortest representative word when
    /// known, otherwise its id.
    pub fn name(&self, s: Element) -> String {
        match &self.names {
            Some(names) => names[s].clone(),
            None => s.to_string(),
        }
    }

    pub fn is_idempotent(&self, s: Element) -> bool {
        self.mul(s, s) == s
    }

    pub fn check_associative(&self) -> bool {
        self.elements().all(|x| {
            self.elements().all(|y| {
                let xy = self.mul(x, y);
                self.elements()
                    .all(|z| self.mul(xy, z) == self.mul(x, self.mul(y, z)))
            })
        })
    }

    /// Index and period of the cyclic subsemigroup generated by `s`: the
    /// powers `s^index, ..., s^(index+period-1)` form its cycle.
    pub fn index_and_period(&self, s: Element) -> (usize, usize) {
        let mut first_seen = vec![usize::MAX; self.size];
        let mut x = s;
        let mut e = 1;
        loop {
            if first_seen[x] != usize::MAX {
                let index = first_seen[x];
                return (index, e - index);
            }
            first_seen[x] = e;
            x = self.mul(x, s);
            e += 1;
        }
    }

    /// Smallest `e >= 1` such that `s^e` is idempotent.
    pub fn omega_exponent(&self, s: Element) -> usize {
        let (index, period) = self.index_and_period(s);
        period * index.div_ceil(period)
    }

    /// The unique idempotent power of `s`.
    pub fn omega(&self, s: Element) -> Element {
        self.pow(s, self.omega_exponent(s))
    }

    /// Smallest `e >= 1` such that `s^e` is idempotent for every element.
    pub fn exponent(&self) -> usize {
        let mut lcm = 1usize;
        let mut max_index = 1usize;
        for s in self.elements() {
            let (index, period) = self.index_and_period(s);
            lcm = lcm / gcd(lcm, period) * period;
            max_index = max_index.max(index);
        }
        lcm * max_index.div_ceil(lcm)
    }

    /// Elements `s^m` for `m >= index`, i.e. the cycle of `s`.
    pub fn cycle(&self, s: Element) -> Vec<Element> {
        let (index, period) = self.index_and_period(s);
        let start = self.pow(s, index);
        let mut out = Vec::with_capacity(period);
        let mut x = start;
        for _ in 0..period {
            out.push(x);
            x = self.mul(x, s);
        }
        out.sort_unstable();
        out
    }

    pub fn is_aperiodic(&self) -> bool {
        self.elements().all(|s| {
            let w = self.omega(s);
            self.mul(w, s) == w
        })
    }
}

pub fn omega_power(m: &FiniteMonoid, s: Element) -> Element {
    m.omega(s)
}

pub fn monoid_exponent(m: &FiniteMonoid) -> usize {
    m.exponent()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A partial order on the elements of a monoid, as a boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRelation {
    size: usize,
    leq: Vec<bool>,
}

impl OrderRelation {
    pub fn from_fn(size: usize, leq: impl Fn(Element, Element) -> bool) -> Self {
        let mut m = Vec::with_capacity(size * size);
        for s in 0..size {
            for t in 0..size {
                m.push(leq(s, t));
            }
        }
        OrderRelation { size, leq: m }
    }

    pub fn equality(size: usize) -> Self {
        Self::from_fn(size, |s, t| s == t)
    }

    pub fn from_pairs(size: usize, pairs: &[(Element, Element)]) -> Result<Self> {
        let mut order = Self::equality(size);
        for &(s, t) in pairs {
            if s >= size || t >= size {
                return Err(Error::InvalidArgument(format!("order pair ({s},{t}) out of range")));
            }
            order.leq[s * size + t] = true;
        }
        Ok(order)
    }

    #[inline]
    pub fn leq(&self, s: Element, t: Element) -> bool {
        self.leq[s * self.size + t]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The dual order `s <= t` iff `t <= s` here.
    pub fn reversed(&self) -> Self {
        Self::from_fn(self.size, |s, t| self.leq(t, s))
    }

    pub fn pairs(&self) -> Vec<(Element, Element)> {
        let mut out = Vec::new();
        for s in 0..self.size {
            for t in 0..self.size {
                if self.leq(s, t) {
                    out.push((s, t));
                }
            }
        }
        out
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.size;
        (0..n).all(|s| self.leq(s, s))
            && (0..n).all(|s| (0..n).all(|t| s == t || !(self.leq(s, t) && self.leq(t, s))))
            && (0..n).all(|s| {
                (0..n).all(|t| !self.leq(s, t) || (0..n).all(|u| !self.leq(t, u) || self.leq(s, u)))
            })
    }

    /// `s <= t` and `s' <= t'` imply `ss' <= tt'`.
    pub fn is_compatible(&self, m: &FiniteMonoid) -> bool {
        let pairs = self.pairs();
        pairs.iter().all(|&(s, t)| {
            pairs
                .iter()
                .all(|&(s2, t2)| self.leq(m.mul(s, s2), m.mul(t, t2)))
        })
    }
}
