use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Deserialize, Serialize};

use super::Vertex;

/// Fixed-capacity vertex set backed by a single machine word.
///
/// The decomposition and dynamic-programming layers only run at desk scale,
/// so every vertex they touch is below [`VertexSet::CAPACITY`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const CAPACITY: usize = 64;

    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Self::CAPACITY);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: Vertex) -> Self {
        debug_assert!(v < Self::CAPACITY);
        VertexSet(1u64 << v)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < Self::CAPACITY && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        debug_assert!(v < Self::CAPACITY);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        if v < Self::CAPACITY {
            self.0 &= !(1u64 << v);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Vertex)
    }

    pub fn max(self) -> Option<Vertex> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as Vertex)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Subsets with exactly `size` elements. Positions within the sorted
    /// member list are enumerated in colexicographic order.
    pub fn subsets_of_size(self, size: usize) -> Subsets {
        let members = self.to_vec();
        let next = (size <= members.len()).then(|| VertexSet::full(size).bits());
        Subsets { members, next }
    }

    /// Subsets with at most `max` elements, smallest sizes first.
    pub fn subsets_up_to(self, max: usize) -> impl Iterator<Item = VertexSet> {
        (0..=max.min(self.len())).flat_map(move |s| self.subsets_of_size(s))
    }
}

/// Iterator returned by [`VertexSet::subsets_of_size`].
#[derive(Clone, Debug)]
pub struct Subsets {
    members: Vec<Vertex>,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let c = self.next?;
        let m = self.members.len();
        let mut out = VertexSet::empty();
        let mut bits = c;
        while bits != 0 {
            out.insert(self.members[bits.trailing_zeros() as usize]);
            bits &= bits - 1;
        }
        // Gosper's hack: next integer with the same popcount.
        self.next = if c == 0 {
            None
        } else {
            let (c, low) = (c as u128, (c & c.wrapping_neg()) as u128);
            let ripple = c + low;
            let next = (((ripple ^ c) >> 2) / low) | ripple;
            (next < (1u128 << m)).then_some(next as u64)
        };
        Some(out)
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as Vertex;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a: VertexSet = [0, 3, 5].into_iter().collect();
        let b: VertexSet = [3, 4].into_iter().collect();
        assert_eq!((a | b).to_vec(), vec![0, 3, 4, 5]);
        assert_eq!((a & b).to_vec(), vec![3]);
        assert_eq!((a - b).to_vec(), vec![0, 5]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.min(), Some(0));
        assert_eq!(a.max(), Some(5));
        assert!(VertexSet::singleton(3).is_subset(a));
        assert!(!b.is_subset(a));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(0), VertexSet::empty());
    }

    #[test]
    fn subsets() {
        let s: VertexSet = [1, 4, 6, 9].into_iter().collect();
        assert_eq!(s.subsets_of_size(0).collect::<Vec<_>>(), vec![VertexSet::empty()]);
        let pairs: Vec<_> = s.subsets_of_size(2).collect();
        assert_eq!(pairs.len(), 6);
        assert_eq!(pairs[0].to_vec(), vec![1, 4]);
        assert!(pairs.iter().all(|p| p.len() == 2 && p.is_subset(s)));
        assert_eq!(s.subsets_of_size(4).count(), 1);
        assert_eq!(s.subsets_of_size(5).count(), 0);
        assert_eq!(s.subsets_up_to(4).count(), 16);
        assert_eq!(s.subsets_up_to(1).count(), 5);
    }
}
