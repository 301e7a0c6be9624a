//! Fixed-width bitsets for vertices and colors.
//!
//! Every graph in this crate has at most [`MAX_ORDER`] vertices, so a vertex
//! subset fits in one machine word. Colors used by list assignments are
//! bounded the same way.

use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

/// Largest supported graph order.
pub const MAX_ORDER: usize = 64;

macro_rules! bitset {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
        pub struct $name(pub u64);

        impl $name {
            pub const EMPTY: Self = Self(0);

            /// The set `{0, 1, ..., n-1}`.
            #[inline]
            pub fn full(n: usize) -> Self {
                debug_assert!(n <= 64);
                if n >= 64 {
                    Self(u64::MAX)
                } else {
                    Self((1u64 << n) - 1)
                }
            }

            #[inline]
            pub fn singleton(i: usize) -> Self {
                Self(1u64 << i)
            }

            #[inline]
            pub fn bits(self) -> u64 {
                self.0
            }

            #[inline]
            pub fn contains(self, i: usize) -> bool {
                i < 64 && self.0 >> i & 1 == 1
            }

            #[inline]
            pub fn insert(&mut self, i: usize) {
                self.0 |= 1u64 << i;
            }

            #[inline]
            pub fn remove(&mut self, i: usize) {
                self.0 &= !(1u64 << i);
            }

            #[inline]
            pub fn with(self, i: usize) -> Self {
                Self(self.0 | 1u64 << i)
            }

            #[inline]
            pub fn without(self, i: usize) -> Self {
                Self(self.0 & !(1u64 << i))
            }

            #[inline]
            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            #[inline]
            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            #[inline]
            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            #[inline]
            pub fn intersects(self, other: Self) -> bool {
                self.0 & other.0 != 0
            }

            /// Smallest member.
            #[inline]
            pub fn first(self) -> Option<usize> {
                if self.0 == 0 {
                    None
                } else {
                    Some(self.0.trailing_zeros() as usize)
                }
            }

            /// Largest member.
            #[inline]
            pub fn last(self) -> Option<usize> {
                if self.0 == 0 {
                    None
                } else {
                    Some(63 - self.0.leading_zeros() as usize)
                }
            }

            #[inline]
            pub fn iter(self) -> BitIter {
                BitIter(self.0)
            }

            pub fn to_vec(self) -> alloc::vec::Vec<usize> {
                self.iter().collect()
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                let mut s = Self::EMPTY;
                for i in iter {
                    s.insert(i);
                }
                s
            }
        }

        impl IntoIterator for $name {
            type Item = usize;
            type IntoIter = BitIter;
            fn into_iter(self) -> BitIter {
                self.iter()
            }
        }

        impl BitOr for $name {
            type Output = Self;
            #[inline]
            fn bitor(self, rhs: Self) -> Self {
                Self(self.0 | rhs.0)
            }
        }

        impl BitOrAssign for $name {
            #[inline]
            fn bitor_assign(&mut self, rhs: Self) {
                self.0 |= rhs.0;
            }
        }

        impl BitAnd for $name {
            type Output = Self;
            #[inline]
            fn bitand(self, rhs: Self) -> Self {
                Self(self.0 & rhs.0)
            }
        }

        impl BitAndAssign for $name {
            #[inline]
            fn bitand_assign(&mut self, rhs: Self) {
                self.0 &= rhs.0;
            }
        }

        impl Sub for $name {
            type Output = Self;
            #[inline]
            fn sub(self, rhs: Self) -> Self {
                Self(self.0 & !rhs.0)
            }
        }

        impl Not for $name {
            type Output = Self;
            #[inline]
            fn not(self) -> Self {
                Self(!self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }
    };
}

bitset!(
    /// A subset of the vertices `0..n` of some graph.
    VertexSet
);

bitset!(
    /// A set of colors. Colors are small naturals starting at 0.
    ColorSet
);

/// Iterator over the members of a bitset, ascending.
#[derive(Clone)]
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BitIter {}

/// All subsets of `set` with exactly `size` members, in increasing order of
/// their bit patterns.
pub fn subsets_of_size(set: VertexSet, size: usize) -> impl Iterator<Item = VertexSet> {
    let members = set.to_vec();
    let n = members.len();
    let mut idx: alloc::vec::Vec<usize> = (0..size).collect();
    let mut done = size > n;
    core::iter::from_fn(move || {
        if done {
            return None;
        }
        let out: VertexSet = idx.iter().map(|&i| members[i]).collect();
        // advance the combination
        let mut i = size;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] != i + n - size {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::EMPTY;
        s.insert(3);
        s.insert(5);
        assert_eq!(s.len(), 2);
        assert!(s.contains(3) && !s.contains(4));
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.last(), Some(5));
        assert_eq!(s.to_vec(), [3, 5]);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!((VertexSet::full(6) - s).to_vec(), [0, 1, 2, 4]);
    }

    #[test]
    fn combinations_count() {
        let s = VertexSet::full(6);
        assert_eq!(subsets_of_size(s, 0).count(), 1);
        assert_eq!(subsets_of_size(s, 3).count(), 20);
        assert_eq!(subsets_of_size(s, 6).count(), 1);
        assert_eq!(subsets_of_size(s, 7).count(), 0);
        assert!(subsets_of_size(s, 2).all(|t| t.len() == 2 && t.is_subset(s)));
    }
}
