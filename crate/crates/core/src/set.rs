//! Bitset-backed subsets of a ring's element range.
//!
//! Every distinguished subset the engine computes (units, Δ(R), J(R),
//! commutants, annihilators, ...) is an [`ElementSet`]. A set carries the
//! identity tag of the ring it was created for; combining sets from two
//! different rings is a logic error and panics.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    ring: u64,
    len: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(ring: u64, len: usize) -> Self {
        ElementSet {
            ring,
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn full(ring: u64, len: usize) -> Self {
        let mut s = Self::empty(ring, len);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(ring: u64, len: usize, items: I) -> Self {
        let mut s = Self::empty(ring, len);
        for i in items {
            s.insert(i);
        }
        s
    }

    pub fn from_predicate<F: FnMut(usize) -> bool>(ring: u64, len: usize, mut pred: F) -> Self {
        let mut s = Self::empty(ring, len);
        for i in 0..len {
            if pred(i) {
                s.words[i / WORD] |= 1 << (i % WORD);
            }
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Identity tag of the owning ring.
    pub fn ring_tag(&self) -> u64 {
        self.ring
    }

    /// Size of the ambient ring (not the cardinality of the set).
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.len, "element {i} outside ring of size {}", self.len);
        let mask = 1 << (i % WORD);
        let fresh = self.words[i / WORD] & mask == 0;
        self.words[i / WORD] |= mask;
        fresh
    }

    pub fn remove(&mut self, i: usize) -> bool {
        if i >= self.len {
            return false;
        }
        let mask = 1 << (i % WORD);
        let had = self.words[i / WORD] & mask != 0;
        self.words[i / WORD] &= !mask;
        had
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn same_ring(&self, other: &Self) {
        assert!(
            self.ring == other.ring && self.len == other.len,
            "set algebra across different rings"
        );
    }

    pub fn union_with(&mut self, other: &Self) {
        self.same_ring(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.same_ring(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.same_ring(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.same_ring(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.same_ring(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// First member of `self` that is not in `other`.
    pub fn first_outside(&self, other: &Self) -> Option<usize> {
        self.difference(other).first()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD + bit);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
