//! Fixed-length bit set over vertex ranks, used by the search kernels.

/// A bit set over `0..len`, backed by `u64` words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_iter(len: usize, iter: impl IntoIterator<Item = u32>) -> Self {
        let mut b = BitSet::new(len);
        for i in iter {
            b.insert(i as usize);
        }
        b
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// True when `self` and `other` share no element.
    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// True when the neighbourhood mask `adj` is entirely inside `self`.
    pub fn covers(&self, adj: &[u64]) -> bool {
        self.words.iter().zip(adj).all(|(s, a)| a & !s == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_iterate() {
        let mut b = BitSet::new(130);
        for i in [0, 63, 64, 129] {
            b.insert(i);
        }
        assert_eq!(b.count(), 4);
        assert!(b.contains(63) && b.contains(64));
        b.remove(64);
        assert_eq!(b.iter_ones().collect::<Vec<_>>(), vec![0, 63, 129]);
    }

    #[test]
    fn disjoint_and_covers() {
        let a = BitSet::from_iter(70, [1, 5, 69]);
        let b = BitSet::from_iter(70, [2, 6]);
        assert!(a.is_disjoint(&b));
        let adj = BitSet::from_iter(70, [1, 69]);
        assert!(a.covers(adj.words()));
        let adj2 = BitSet::from_iter(70, [1, 2]);
        assert!(!a.covers(adj2.words()));
    }
}
