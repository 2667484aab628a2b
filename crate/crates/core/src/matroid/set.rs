use std::fmt;

/// A subset of a ground set `{0, …, N-1}` with `N ≤ 64`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet(pub u64);

pub const MAX_GROUND: usize = 64;

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Self::EMPTY, |s, e| s.with(e))
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1 << e)
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(e)
        })
    }

    /// All `k`-element subsets of `{0, …, n-1}` in colexicographic order.
    pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = ElementSet> {
        let limit = if n >= 64 {
            u128::from(u64::MAX) + 1
        } else {
            1u128 << n
        };
        let mut cur: Option<u128> = if k > n {
            None
        } else if k == 0 {
            Some(0)
        } else {
            Some((1u128 << k) - 1)
        };
        std::iter::from_fn(move || {
            let c = cur?;
            let out = ElementSet(c as u64);
            cur = if c == 0 {
                None
            } else {
                // Gosper's hack
                let low = c & c.wrapping_neg();
                let ripple = c + low;
                let next = (((ripple ^ c) >> 2) / low) | ripple;
                (next < limit).then_some(next)
            };
            Some(out)
        })
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
