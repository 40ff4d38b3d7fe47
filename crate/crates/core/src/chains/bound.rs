use std::fmt;

use num_bigint::BigUint;

/// Largest inner exponent for which the bound is expanded to an exact
/// integer (`2^(2^20)` has about 315 000 decimal digits).
const EXPAND_LIMIT: u32 = 20;

/// The rank `3|M| * 2^|A| * n * 2^(2^(2|M|^n))` past which finite-rank
/// compatible sets of level-2 chains of length `n` coincide with the limit
/// ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankBound {
    /// `3|M| * 2^|A| * n`.
    pub coefficient: BigUint,
    /// `2|M|^n`, the exponent of the inner power of two.
    pub inner_exponent: BigUint,
}

impl RankBound {
    pub fn new(monoid_size: usize, letters: usize, length: usize) -> Self {
        let coefficient = BigUint::from(3u32)
            * BigUint::from(monoid_size)
            * (BigUint::from(1u32) << letters)
            * BigUint::from(length);
        let inner_exponent = BigUint::from(2u32) * BigUint::from(monoid_size).pow(length as u32);
        RankBound {
            coefficient,
            inner_exponent,
        }
    }

    /// The exact value, when small enough to materialize.
    pub fn value(&self) -> Option<BigUint> {
        let e: u32 = self.inner_exponent.clone().try_into().ok()?;
        if e > EXPAND_LIMIT {
            return None;
        }
        Some(&self.coefficient << (1usize << e))
    }

    /// Decimal digits when materializable, otherwise the symbolic form
    /// `C*2^(2^E)`.
    pub fn render(&self) -> String {
        match self.value() {
            Some(v) => v.to_str_radix(10),
            None => self.symbolic(),
        }
    }

    pub fn symbolic(&self) -> String {
        format!("{}*2^(2^{})", self.coefficient, self.inner_exponent)
    }
}

impl fmt::Display for RankBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_element_monoid_two_letters_length_two() {
        let b = RankBound::new(2, 2, 2);
        assert_eq!(b.coefficient, BigUint::from(48u32));
        assert_eq!(b.inner_exponent, BigUint::from(8u32));
        let expected = BigUint::from(48u32) * BigUint::from(2u32).pow(256);
        assert_eq!(b.value().unwrap(), expected);
        assert_eq!(b.symbolic(), "48*2^(2^8)");
    }

    #[test]
    fn large_bounds_stay_symbolic() {
        let b = RankBound::new(64, 2, 3);
        assert!(b.value().is_none());
        assert_eq!(b.render(), format!("{}*2^(2^524288)", 3 * 64 * 4 * 3));
    }
}
