//! Dense vertex sets over a fixed universe size.
//!
//! Universes of up to 64 vertices fit in a single inline word; larger
//! universes spill onto the heap transparently. Every set built for a given
//! universe carries the same word count, so equality and hashing are
//! structural.

use std::cmp::Ordering;
use std::fmt;

use smallvec::{smallvec, SmallVec};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 1]>,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

impl VertexSet {
    /// Empty set sized for a universe of `n` vertices.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            words: smallvec![0; word_count(n)],
        }
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(n: usize, ids: I) -> Self {
        let mut s = Self::empty(n);
        for v in ids {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / WORD)
            .is_some_and(|w| w & (1u64 << (v % WORD)) != 0)
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / WORD] |= 1u64 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v / WORD] &= !(1u64 << (v % WORD));
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    /// Number of elements shared with `other`.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Ascending iterator over the members.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending id sequences.
    pub fn lex_cmp(&self, other: &VertexSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone)]
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::empty(10);
        assert!(s.is_empty());
        s.insert(3);
        s.insert(7);
        assert_eq!(s.len(), 2);
        assert!(s.contains(3) && !s.contains(4));
        assert_eq!(s.first(), Some(3));
        s.remove(3);
        assert_eq!(s.to_vec(), vec![7]);
    }

    #[test]
    fn spills_past_one_word() {
        let s = VertexSet::from_ids(130, [0, 63, 64, 129]);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
        assert_eq!(s.len(), 4);
        let t = VertexSet::from_ids(130, [64]);
        assert!(t.is_subset(&s));
        assert!(t.intersects(&s));
        assert_eq!(s.difference(&t).to_vec(), vec![0, 63, 129]);
    }

    #[test]
    fn lex_order_on_sorted_sequences() {
        let a = VertexSet::from_ids(8, [0, 2]);
        let b = VertexSet::from_ids(8, [0, 1, 7]);
        let c = VertexSet::from_ids(8, [1]);
        assert_eq!(b.lex_cmp(&a), Ordering::Less);
        assert_eq!(a.lex_cmp(&c), Ordering::Less);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(
            xs in proptest::collection::btree_set(0usize..100, 0..40),
            ys in proptest::collection::btree_set(0usize..100, 0..40),
        ) {
            let a = VertexSet::from_ids(100, xs.iter().copied());
            let b = VertexSet::from_ids(100, ys.iter().copied());
            let inter: Vec<_> = xs.intersection(&ys).copied().collect();
            let uni: Vec<_> = xs.union(&ys).copied().collect();
            prop_assert_eq!(a.intersection(&b).to_vec(), inter.clone());
            prop_assert_eq!(a.union(&b).to_vec(), uni);
            prop_assert_eq!(a.intersects(&b), !inter.is_empty());
            prop_assert_eq!(a.is_subset(&b), xs.is_subset(&ys));
            prop_assert_eq!(a.intersection_len(&b), inter.len());
        }
    }
}
