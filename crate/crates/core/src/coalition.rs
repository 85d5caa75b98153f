//! Sets of players (edge indices) with bitset semantics.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A set of edge indices. Trailing zero words are trimmed so that equal sets
/// compare and hash equal regardless of how they were built.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Coalition {
    words: Vec<u64>,
}

impl Coalition {
    pub fn empty() -> Self {
        Coalition { words: Vec::new() }
    }

    /// The grand coalition `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut c = Coalition {
            words: vec![u64::MAX; n / 64],
        };
        if !n.is_multiple_of(64) {
            c.words.push((1u64 << (n % 64)) - 1);
        }
        c
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut c = Coalition { words: vec![mask] };
        c.trim();
        c
    }

    pub fn singleton(i: usize) -> Self {
        let mut c = Coalition::empty();
        c.insert(i);
        c
    }

    /// Low 64 bits as a mask, or `None` if any member is `>= 64`.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1u64 << (i % 64)) != 0)
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let bit = 1u64 << (i % 64);
        let fresh = self.words[w] & bit == 0;
        self.words[w] |= bit;
        fresh
    }

    pub fn remove(&mut self, i: usize) -> bool {
        let w = i / 64;
        let Some(word) = self.words.get_mut(w) else {
            return false;
        };
        let bit = 1u64 << (i % 64);
        let present = *word & bit != 0;
        *word &= !bit;
        self.trim();
        present
    }

    pub fn with(&self, i: usize) -> Self {
        let mut c = self.clone();
        c.insert(i);
        c
    }

    pub fn without(&self, i: usize) -> Self {
        let mut c = self.clone();
        c.remove(i);
        c
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Largest member plus one, i.e. the smallest `n` with `self ⊆ {0..n-1}`.
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(&w) => (self.words.len() - 1) * 64 + 64 - w.leading_zeros() as usize,
        }
    }

    pub fn union(&self, other: &Coalition) -> Coalition {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(&short.words) {
            *w |= o;
        }
        Coalition { words }
    }

    pub fn intersection(&self, other: &Coalition) -> Coalition {
        let mut c = Coalition {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        };
        c.trim();
        c
    }

    pub fn is_subset(&self, other: &Coalition) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }
}

impl FromIterator<usize> for Coalition {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut c = Coalition::empty();
        for i in iter {
            c.insert(i);
        }
        c
    }
}

/// Lexicographic on the ascending member list, so `{0} < {0,1} < {0,2} < {1}`.
impl Ord for Coalition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Coalition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Comma-joined ascending indices, e.g. `0,2,3`. The empty coalition renders as "".
impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for Coalition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Coalition::empty());
        }
        s.split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| Error::Format {
                    line: 0,
                    message: format!("bad edge index {tok:?} in coalition {s:?}"),
                })
            })
            .collect()
    }
}

/// All nonempty subsets of `{0..n-1}` as masks, in increasing numeric order.
pub fn nonempty_masks(n: usize) -> impl Iterator<Item = u64> {
    assert!(n < 64, "mask enumeration needs fewer than 64 players");
    1..(1u64 << n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_bound() {
        assert_eq!(Coalition::full(0), Coalition::empty());
        assert_eq!(Coalition::full(3).to_mask(), Some(0b111));
        assert_eq!(Coalition::full(64).len(), 64);
        assert_eq!(Coalition::full(70).len(), 70);
        assert_eq!(Coalition::full(70).bound(), 70);
        assert_eq!(Coalition::empty().bound(), 0);
    }

    #[test]
    fn remove_trims_for_equality() {
        let mut a = Coalition::singleton(100);
        a.insert(1);
        a.remove(100);
        assert_eq!(a, Coalition::singleton(1));
        assert_eq!(a.to_mask(), Some(2));
    }

    #[test]
    fn display_and_parse() {
        let c: Coalition = "3, 0,2".parse().unwrap();
        assert_eq!(c.to_string(), "0,2,3");
        assert!("0,x".parse::<Coalition>().is_err());
        assert_eq!("".parse::<Coalition>().unwrap(), Coalition::empty());
    }

    #[test]
    fn ordering_is_lexicographic_on_members() {
        let mut v: Vec<Coalition> = ["1", "0,2", "0", "0,1"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        v.sort();
        let shown: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, ["0", "0,1", "0,2", "1"]);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(a in proptest::collection::btree_set(0usize..150, 0..20),
                                        b in proptest::collection::btree_set(0usize..150, 0..20)) {
            let ca: Coalition = a.iter().copied().collect();
            let cb: Coalition = b.iter().copied().collect();
            let union: Vec<usize> = a.union(&b).copied().collect();
            let inter: Vec<usize> = a.intersection(&b).copied().collect();
            prop_assert_eq!(ca.union(&cb).iter().collect::<Vec<_>>(), union);
            prop_assert_eq!(ca.intersection(&cb).iter().collect::<Vec<_>>(), inter);
            prop_assert_eq!(ca.is_subset(&cb), a.is_subset(&b));
            prop_assert_eq!(ca.len(), a.len());
            prop_assert_eq!(ca.to_string().parse::<Coalition>().unwrap(), ca);
        }
    }
}
