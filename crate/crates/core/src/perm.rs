//! Permutations of `{0, …, m-1}` stored as image tables.
//!
//! Composition reads right to left: `f.compose(&g)` maps `x` to `f(g(x))`.

use alloc::vec::Vec;
use core::fmt;

use crate::numtheory::lcm_unchecked;
use crate::{Error, Result};

/// A bijection on `{0, …, degree-1}`; entry `i` of the image table holds
/// the image of point `i`.
///
/// Ordering is lexicographic on the image table, which is what gives
/// groups their canonical element order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// # Panics
    ///
    /// If `degree` is zero.
    pub fn identity(degree: usize) -> Self {
        assert!(degree > 0, "permutation degree must be positive");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images<I>(images: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let images: Vec<usize> = images.into_iter().collect();
        let m = images.len();
        if m == 0 {
            return Err(Error::InvalidPermutation("empty image table"));
        }
        if m > u32::MAX as usize {
            return Err(Error::InvalidPermutation("degree too large"));
        }
        let mut seen = alloc::vec![false; m];
        for &x in &images {
            if x >= m {
                return Err(Error::InvalidPermutation("image out of range"));
            }
            if core::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation("repeated image"));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// The cycle carrying each listed point to the next and the last back
    /// to the first, fixing everything else.
    pub fn cycle(points: &[usize], degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidCycle("degree must be positive"));
        }
        let mut seen = alloc::vec![false; degree];
        for &p in points {
            if p >= degree {
                return Err(Error::InvalidCycle("point out of range"));
            }
            if core::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidCycle("repeated point"));
            }
        }
        let mut perm = Self::identity(degree);
        for (i, &p) in points.iter().enumerate() {
            perm.images[p] = points[(i + 1) % points.len()] as u32;
        }
        Ok(perm)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self^exp`, by repeated squaring.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::identity(self.degree());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            exp >>= 1;
        }
        acc
    }

    /// Lengths of all cycles, fixed points included.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    /// Non-trivial cycles, each starting from its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Least `k ≥ 1` with `self^k = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, len| lcm_unchecked(acc, len as u64))
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.images()
            .enumerate()
            .filter(|&(i, x)| i != x)
            .map(|(i, _)| i)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.iter().copied()).unwrap()
    }

    fn naive_order(f: &Permutation) -> u64 {
        let mut acc = f.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = f.compose(&acc).unwrap();
            k += 1;
        }
        k
    }

    #[test]
    fn identity_basics() {
        let e = Permutation::identity(3);
        assert_eq!(e.images().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(e.inverse(), e);
        let f = perm(&[2, 0, 1]);
        assert_eq!(e.compose(&f).unwrap(), f);
        assert_eq!(e.order(), 1);
    }

    #[test]
    fn compose_hand_trace() {
        let f = Permutation::cycle(&[0, 1], 3).unwrap();
        let g = Permutation::cycle(&[1, 2], 3).unwrap();
        assert_eq!(f.compose(&g).unwrap(), perm(&[1, 2, 0]));
        assert_eq!(f.compose(&f.inverse()).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn compose_degree_mismatch() {
        let err = Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(perm(&[1, 2, 0]).inverse(), perm(&[2, 0, 1]));
        let t = Permutation::cycle(&[0, 3], 5).unwrap();
        assert_eq!(t.inverse(), t);
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(Permutation::cycle(&[0, 1, 2], 3).unwrap(), perm(&[1, 2, 0]));
        assert_eq!(
            Permutation::cycle(&[2, 4], 5).unwrap(),
            perm(&[0, 1, 4, 3, 2])
        );
        assert_eq!(
            Permutation::cycle(&[3], 5).unwrap(),
            Permutation::identity(5)
        );
        assert!(Permutation::cycle(&[0, 5], 5).is_err());
        assert!(Permutation::cycle(&[1, 1], 5).is_err());
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images([0, 0, 1]).is_err());
        assert!(Permutation::from_images([0, 3, 1]).is_err());
        assert!(Permutation::from_images(core::iter::empty()).is_err());
    }

    #[test]
    fn order_examples() {
        assert_eq!(
            Permutation::cycle(&[0, 1, 2, 3, 4, 5], 6).unwrap().order(),
            6
        );
        let a = Permutation::cycle(&[0, 1], 5).unwrap();
        let b = Permutation::cycle(&[2, 3, 4], 5).unwrap();
        let ab = a.compose(&b).unwrap();
        assert_eq!(naive_order(&ab), 6);
        assert_eq!(ab.order(), 6);
    }

    #[test]
    fn display_cycle_notation() {
        let f = perm(&[1, 0, 3, 4, 2]);
        assert_eq!(std::format!("{f}"), "(0 1)(2 3 4)");
        assert_eq!(std::format!("{}", Permutation::identity(2)), "()");
    }

    fn arb_perm(max_degree: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_degree)
            .prop_flat_map(|m| Just((0..m).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
        (1..=12usize).prop_flat_map(|m| {
            let one = || Just((0..m).collect::<Vec<usize>>()).prop_shuffle();
            (one(), one(), one()).prop_map(|(a, b, c)| {
                (
                    Permutation::from_images(a).unwrap(),
                    Permutation::from_images(b).unwrap(),
                    Permutation::from_images(c).unwrap(),
                )
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn order_matches_naive(f in arb_perm(12)) {
            prop_assert_eq!(f.order(), naive_order(&f));
            prop_assert!(f.pow(f.order()).is_identity());
        }

        #[test]
        fn group_axioms((f, g, h) in arb_triple()) {
            let e = Permutation::identity(f.degree());
            prop_assert_eq!(
                f.compose(&g).unwrap().compose(&h).unwrap(),
                f.compose(&g.compose(&h).unwrap()).unwrap()
            );
            prop_assert_eq!(e.compose(&f).unwrap(), f.clone());
            prop_assert_eq!(f.compose(&e).unwrap(), f.clone());
            prop_assert!(f.compose(&f.inverse()).unwrap().is_identity());
            prop_assert!(f.inverse().compose(&f).unwrap().is_identity());
            prop_assert_eq!(f.inverse().inverse(), f);
        }

        #[test]
        fn disjoint_cycles_commute(
            points in Just((0..12usize).collect::<Vec<_>>()).prop_shuffle(),
            split in 0..=12usize,
            len_b in 0..=12usize,
        ) {
            let (a, rest) = points.split_at(split);
            let b = &rest[..len_b.min(rest.len())];
            let ca = Permutation::cycle(a, 12).unwrap();
            let cb = Permutation::cycle(b, 12).unwrap();
            prop_assert_eq!(ca.compose(&cb).unwrap(), cb.compose(&ca).unwrap());
        }
    }
}
