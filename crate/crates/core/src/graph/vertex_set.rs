use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Subset of `{0, …, n-1}` stored as a packed bit row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { n, words: vec![0; words_for(n)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    /// `{0, …, r-1}`.
    pub fn prefix(n: usize, r: usize) -> Self {
        assert!(r <= n);
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            if r >= lo + WORD {
                *w = !0;
            } else if r > lo {
                *w = (1u64 << (r - lo)) - 1;
            }
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for v in items {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        let mut s = VertexSet { n, words };
        s.trim();
        s
    }

    fn trim(&mut self) {
        let rem = self.n % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Universe size.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range for n = {}", self.n);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    /// Cardinality.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        VertexSet { n: self.n, words }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, idx: 0, cur: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet(n={}, ", self.n)?;
        f.debug_set().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}

/// Serialized as `{"n": .., "members": [..]}`.
#[derive(Serialize, Deserialize)]
struct Repr {
    n: usize,
    members: Vec<usize>,
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Repr { n: self.n, members: self.to_vec() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = Repr::deserialize(d)?;
        VertexSet::from_indices(r.n, r.members).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prefix_and_full() {
        for n in [0, 1, 63, 64, 65, 130] {
            assert_eq!(VertexSet::full(n).len(), n);
            for r in [0, n / 2, n] {
                let p = VertexSet::prefix(n, r);
                assert_eq!(p.to_vec(), (0..r).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            VertexSet::from_indices(4, [1, 4]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        );
    }

    proptest! {
        #[test]
        fn len_is_popcount_of_members(n in 1usize..200, items in proptest::collection::vec(0usize..200, 0..50)) {
            let items: Vec<usize> = items.into_iter().filter(|&v| v < n).collect();
            let s = VertexSet::from_indices(n, items.iter().copied()).unwrap();
            let mut dedup = items.clone();
            dedup.sort_unstable();
            dedup.dedup();
            prop_assert_eq!(s.len(), dedup.len());
            prop_assert_eq!(s.to_vec(), dedup);
        }

        #[test]
        fn union_and_intersection_sizes(n in 1usize..150, a in proptest::collection::vec(0usize..150, 0..40), b in proptest::collection::vec(0usize..150, 0..40)) {
            let a = VertexSet::from_indices(n, a.into_iter().filter(|&v| v < n)).unwrap();
            let b = VertexSet::from_indices(n, b.into_iter().filter(|&v| v < n)).unwrap();
            prop_assert_eq!(a.union(&b).len() + a.intersection(&b).len(), a.len() + b.len());
            prop_assert!(a.is_subset(&a.union(&b)));
            prop_assert_eq!(a.is_disjoint(&b), a.intersection(&b).is_empty());
        }
    }

    #[test]
    fn serde_shape() {
        let s = VertexSet::from_indices(5, [3, 0]).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"n":5,"members":[0,3]}"#);
        let back: VertexSet = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}
