//! Subset-level primitives: graph parameters, vertices as k-subsets of the
//! ground set `{1, ..., n}`, entry swaps and the Hamming distance.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Parameters of a uniform subset graph `G(n, k, t)`.
///
/// Johnson mode is exactly `t = k - 1`; `t = 0` gives the Kneser graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphParams {
    pub n: u32,
    pub k: u32,
    pub t: u32,
}

impl GraphParams {
    pub fn new(n: u32, k: u32, t: u32) -> Result<Self> {
        if n > 64 {
            return Err(Error::CapacityExceeded { n });
        }
        if k == 0 || k > n {
            return Err(Error::InvalidParams(format!(
                "need 1 <= k <= n, got n={n}, k={k}"
            )));
        }
        if t + 1 > k {
            return Err(Error::InvalidParams(format!(
                "need 0 <= t <= k-1, got k={k}, t={t}"
            )));
        }
        Ok(GraphParams { n, k, t })
    }

    /// The Johnson graph `J(n, k) = G(n, k, k-1)`.
    pub fn johnson(n: u32, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParams("k must be positive".into()));
        }
        GraphParams::new(n, k, k - 1)
    }

    #[inline]
    pub fn is_johnson(&self) -> bool {
        self.t == self.k - 1
    }

    /// `true` when the graph is a single isolated vertex (`n = k`).
    #[inline]
    pub fn is_degenerate(&self) -> bool {
        self.n == self.k
    }

    /// Degree in Johnson mode: `k (n - k)`.
    pub fn johnson_degree(&self) -> u64 {
        self.k as u64 * (self.n - self.k) as u64
    }
}

/// A k-subset of `{1, ..., n}` stored as a bit set; entry `i` occupies bit
/// `i - 1`. The entry numbering is 1-based everywhere, including external
/// formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetVertex(u64);

impl SubsetVertex {
    pub fn from_entries(entries: &[u32], n: u32) -> Result<Self> {
        let mut bits = 0u64;
        for &e in entries {
            if e == 0 || e > n {
                return Err(Error::InvalidEntry { entry: e, n });
            }
            let b = 1u64 << (e - 1);
            if bits & b != 0 {
                return Err(Error::InvalidVertex(format!("duplicate entry {e}")));
            }
            bits |= b;
        }
        Ok(SubsetVertex(bits))
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    /// Number of entries.
    #[inline]
    pub fn size(&self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub fn contains(&self, entry: u32) -> bool {
        (1..=64).contains(&entry) && self.0 >> (entry - 1) & 1 == 1
    }

    /// Sorted entry list.
    pub fn entries(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size() as usize);
        let mut bits = self.0;
        while bits != 0 {
            out.push(bits.trailing_zeros() + 1);
            bits &= bits - 1;
        }
        out
    }

    #[inline]
    pub fn intersection_size(&self, other: &SubsetVertex) -> u32 {
        (self.0 & other.0).count_ones()
    }

    /// Hamming distance: the number of entries in which two k-subsets differ,
    /// `k - |self intersect other|`. Requires equal cardinalities.
    pub fn hamming_distance(&self, other: &SubsetVertex) -> Result<u32> {
        if self.size() != other.size() {
            return Err(Error::InvalidVertex(format!(
                "cardinality mismatch: {} vs {}",
                self, other
            )));
        }
        Ok(self.size() - self.intersection_size(other))
    }

    /// Removes `remove` and introduces `add`, producing a subset of the same
    /// cardinality at Hamming distance 1.
    pub fn swap(&self, remove: u32, add: u32, n: u32) -> Result<SubsetVertex> {
        if add == 0 || add > n {
            return Err(Error::InvalidEntry { entry: add, n });
        }
        if !self.contains(remove) {
            return Err(Error::InvalidSwap(format!(
                "entry {remove} not present in {self}"
            )));
        }
        if self.contains(add) {
            return Err(Error::InvalidSwap(format!(
                "entry {add} already present in {self}"
            )));
        }
        Ok(SubsetVertex(
            self.0 & !(1u64 << (remove - 1)) | 1u64 << (add - 1),
        ))
    }

    /// Iterated swap: removes all of `removes` and introduces all of `adds`.
    /// Entries appearing on both sides cancel, which captures templates where
    /// a removed entry is immediately re-introduced.
    pub fn multi_swap(&self, removes: &[u32], adds: &[u32], n: u32) -> Result<SubsetVertex> {
        let mut rem = 0u64;
        for &e in removes {
            if e == 0 || e > n {
                return Err(Error::InvalidEntry { entry: e, n });
            }
            rem |= 1u64 << (e - 1);
        }
        let mut add = 0u64;
        for &e in adds {
            if e == 0 || e > n {
                return Err(Error::InvalidEntry { entry: e, n });
            }
            add |= 1u64 << (e - 1);
        }
        let common = rem & add;
        let (rem, add) = (rem & !common, add & !common);
        if rem & self.0 != rem {
            return Err(Error::InvalidSwap(format!(
                "removal set not contained in {self}"
            )));
        }
        if add & self.0 != 0 {
            return Err(Error::InvalidSwap(format!(
                "addition set intersects {self}"
            )));
        }
        if rem.count_ones() != add.count_ones() {
            return Err(Error::InvalidSwap(
                "removal and addition sets have different sizes after cancellation".into(),
            ));
        }
        Ok(SubsetVertex(self.0 & !rem | add))
    }

    /// The complement `{1, ..., n} - self`.
    pub fn complement(&self, n: u32) -> SubsetVertex {
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        SubsetVertex(!self.0 & mask)
    }
}

// Subsets serialize as sorted integer arrays, never strings.
impl Serialize for SubsetVertex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SubsetVertex {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<u32>::deserialize(deserializer)?;
        SubsetVertex::from_entries(&entries, 64).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for SubsetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.entries().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
